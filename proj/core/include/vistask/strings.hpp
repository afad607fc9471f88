#pragma once

// Strings task: the cycles construction with invisible anchor nodes joined
// by C1-continuous cubic Bezier chains, giving one long closed string or two
// shorter ones.

#include <vector>

#include "vistask/canvas.hpp"
#include "vistask/geometry.hpp"
#include "vistask/rng.hpp"
#include "vistask/style.hpp"

namespace vistask {

struct StringSegment {
    int a = 0;  // start anchor index
    int b = 0;  // end anchor index
    Point c1;
    Point c2;
};

struct StringCurve {
    int n_half = 0;
    std::vector<Point> anchors;           // invisible
    std::vector<StringSegment> segments;  // 2n, in loop order
    std::vector<std::vector<int>> loops;  // 1 or 2 cyclic anchor sequences
    int label = 0;
    int rightmost = 0;
    int image_size = 448;
    double radius = 200.0;
    double alpha = 0.25;
};

inline constexpr double kStringsCircleRadius = 200.0;
inline constexpr double kDefaultAlpha = 0.25;

// Control points for each consecutive pair (A, B) in the cyclic loop, with
// A' preceding A and B' following B:
//   c1 = A + alpha * (B - A'),  c2 = B - alpha * (B' - A)
// which makes the tangent at every anchor well defined.
std::vector<std::pair<Point, Point>> compute_control_points(
    const std::vector<Point>& loop, double alpha);

StringCurve sample_strings_instance(int n_half, int label, int image_size, double radius,
                                    double alpha, Philox4x32& rng);

Canvas render_strings_input(const StringCurve& curve, const RenderStyle& style);

// colored_anchors drive the start marker (drawn once any anchor is colored);
// colored_segments are restroked in the highlight color.
Canvas render_strings_frame(const StringCurve& curve, const std::vector<int>& colored_anchors,
                            const std::vector<int>& colored_segments, const RenderStyle& style);

// Max tangent mismatch over anchors: |3(c1 - A) - 3(A - c2_prev)|. Zero up
// to rounding on every generated curve.
double continuity_report(const StringCurve& curve);

}  // namespace vistask
