#include "vistask/strings.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "vistask/cycles.hpp"
#include "vistask/raster.hpp"

namespace vistask {

std::vector<std::pair<Point, Point>> compute_control_points(
    const std::vector<Point>& loop, double alpha) {
    const int m = static_cast<int>(loop.size());
    if (m < 3) throw std::invalid_argument("compute_control_points: loop length must be >= 3");

    std::vector<std::pair<Point, Point>> out;
    out.reserve(m);
    for (int i = 0; i < m; ++i) {
        const Point a_prev = loop[(i + m - 1) % m];
        const Point a = loop[i];
        const Point b = loop[(i + 1) % m];
        const Point b_next = loop[(i + 2) % m];
        out.emplace_back(a + alpha * (b - a_prev), b - alpha * (b_next - a));
    }
    return out;
}

StringCurve sample_strings_instance(int n_half, int label, int image_size, double radius,
                                    double alpha, Philox4x32& rng) {
    if (n_half < 3) throw std::invalid_argument("sample_strings_instance: n_half must be >= 3");

    StringCurve c;
    c.n_half = n_half;
    c.label = label;
    c.image_size = image_size;
    c.radius = radius;
    c.alpha = alpha;

    const std::vector<double> angles = sample_node_angles(2 * n_half, kDefaultAngleGap, rng);
    const Point center{image_size / 2.0, image_size / 2.0};
    for (double a : angles)
        c.anchors.push_back({center.x + radius * std::cos(a),
                             center.y + radius * std::sin(a)});

    c.rightmost = 0;
    for (int i = 1; i < static_cast<int>(c.anchors.size()); ++i)
        if (c.anchors[i].x > c.anchors[c.rightmost].x) c.rightmost = i;

    // Same loop sampler as the cycles task; recover the cyclic sequences by
    // walking the degree-2 edge structure from the lowest unvisited anchor.
    const std::vector<EdgePair> edges = sample_cycle_topology(n_half, label, rng);
    std::vector<std::vector<int>> adj(c.anchors.size());
    for (const EdgePair& e : edges) {
        adj[e.a].push_back(e.b);
        adj[e.b].push_back(e.a);
    }
    std::vector<char> done(c.anchors.size(), 0);
    for (int v0 = 0; v0 < static_cast<int>(c.anchors.size()); ++v0) {
        if (done[v0]) continue;
        std::vector<int> loop{v0};
        done[v0] = 1;
        int prev = v0;
        int cur = adj[v0][0];
        while (cur != v0) {
            loop.push_back(cur);
            done[cur] = 1;
            const int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
            prev = cur;
            cur = next;
        }
        c.loops.push_back(std::move(loop));
    }

    for (const std::vector<int>& loop : c.loops) {
        std::vector<Point> pts;
        pts.reserve(loop.size());
        for (int idx : loop) pts.push_back(c.anchors[idx]);
        const auto ctrl = compute_control_points(pts, alpha);
        for (std::size_t i = 0; i < loop.size(); ++i) {
            const int a = loop[i];
            const int b = loop[(i + 1) % loop.size()];
            c.segments.push_back({a, b, ctrl[i].first, ctrl[i].second});
        }
    }
    return c;
}

Canvas render_strings_frame(const StringCurve& curve, const std::vector<int>& colored_anchors,
                            const std::vector<int>& colored_segments,
                            const RenderStyle& style) {
    if (!(style.edge_width > 0.0))
        throw std::invalid_argument("render: edge width must be positive");

    Canvas canvas(curve.image_size, curve.image_size, style.background);
    std::vector<char> hl(curve.segments.size(), 0);
    for (int s : colored_segments) hl.at(s) = 1;

    for (std::size_t i = 0; i < curve.segments.size(); ++i)
        if (!hl[i]) {
            const StringSegment& s = curve.segments[i];
            draw_cubic_bezier(canvas, curve.anchors[s.a], s.c1, s.c2, curve.anchors[s.b],
                              style.edge_width, style.stroke);
        }
    for (std::size_t i = 0; i < curve.segments.size(); ++i)
        if (hl[i]) {
            const StringSegment& s = curve.segments[i];
            draw_cubic_bezier(canvas, curve.anchors[s.a], s.c1, s.c2, curve.anchors[s.b],
                              style.edge_width, style.highlight);
        }

    // The start marker: anchors are invisible in the input, but the colored
    // trace begins with a visible dot at the rightmost anchor.
    if (!colored_anchors.empty())
        draw_disc(canvas, curve.anchors[curve.rightmost], style.node_radius, style.highlight);
    return canvas;
}

Canvas render_strings_input(const StringCurve& curve, const RenderStyle& style) {
    return render_strings_frame(curve, {}, {}, style);
}

double continuity_report(const StringCurve& curve) {
    // incoming segment per anchor
    std::vector<int> incoming(curve.anchors.size(), -1);
    for (std::size_t i = 0; i < curve.segments.size(); ++i)
        incoming[curve.segments[i].b] = static_cast<int>(i);

    double worst = 0.0;
    for (const StringSegment& s : curve.segments) {
        const Point a = curve.anchors[s.a];
        const Point out_tangent = 3.0 * (s.c1 - a);
        const StringSegment& prev = curve.segments[incoming[s.a]];
        const Point in_tangent = 3.0 * (a - prev.c2);
        worst = std::max(worst, norm(out_tangent - in_tangent));
    }
    return worst;
}

}  // namespace vistask
