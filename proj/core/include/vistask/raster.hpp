#pragma once

// Deterministic drawing primitives. No antialiasing: a pixel is painted iff
// its sample point satisfies the coverage predicate, so renders are
// bit-exact across runs. All primitives clip to the canvas for any finite
// input.

#include "vistask/canvas.hpp"
#include "vistask/geometry.hpp"

namespace vistask {

// Pixels whose sample point lies within `radius` (inclusive) of `center`.
void draw_disc(Canvas& canvas, Point center, double radius, Color color);

// Pixels within width/2 of the segment [a, b]; round caps. a == b degrades
// to a disc of radius width/2.
void draw_segment(Canvas& canvas, Point a, Point b, double width, Color color);

// Cubic Bezier stroked via adaptive flattening (recursive subdivision until
// both control points lie within `kBezierFlattenTolerance` of the chord).
inline constexpr double kBezierFlattenTolerance = 0.25;
void draw_cubic_bezier(Canvas& canvas, Point p0, Point c1, Point c2, Point p3,
                       double width, Color color);

// Filled annular sector: r_inner <= r < r_outer, angle swept from angle0
// toward increasing angles over (angle1 - angle0) radians, half-open. An
// extent <= 0 is empty; an extent >= 2*pi is the full ring.
void draw_annulus_arc(Canvas& canvas, Point center, double r_inner, double r_outer,
                      double angle0, double angle1, Color color);

// Wall segment along the ray at `angle`, spanning radii [r_inner, r_outer].
void draw_radial_wall(Canvas& canvas, Point center, double r_inner, double r_outer,
                      double angle, double width, Color color);

// Axis-aligned fill of sample points with x0 <= x < x1, y0 <= y < y1.
void fill_rect(Canvas& canvas, double x0, double y0, double x1, double y1, Color color);

}  // namespace vistask
