#include "vistask/cycles.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <stdexcept>

#include "vistask/raster.hpp"

namespace vistask {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

std::vector<double> sample_node_angles(int count, double epsilon, Philox4x32& rng) {
    if (count < 1) throw std::invalid_argument("sample_node_angles: count must be >= 1");
    if (epsilon < 0.0) throw std::invalid_argument("sample_node_angles: negative epsilon");
    if (count * epsilon >= kTwoPi)
        throw std::invalid_argument("sample_node_angles: count * epsilon must be < 2*pi");

    std::vector<double> xs(static_cast<std::size_t>(count) - 1);
    for (double& x : xs) x = rng.uniform_real(0.0, kTwoPi - count * epsilon);
    std::sort(xs.begin(), xs.end());
    const double beta = rng.uniform_real(0.0, kTwoPi);

    std::vector<double> angles(count);
    angles[0] = beta;
    for (int i = 1; i < count; ++i) angles[i] = beta + xs[i - 1] + i * epsilon;
    for (double& a : angles) {
        a = std::fmod(a, kTwoPi);
        if (a < 0.0) a += kTwoPi;
    }
    return angles;
}

std::vector<EdgePair> sample_cycle_topology(int n_half, int label, Philox4x32& rng) {
    if (n_half < 3) throw std::invalid_argument("sample_cycle_topology: n_half must be >= 3");
    if (label != 0 && label != 1)
        throw std::invalid_argument("sample_cycle_topology: label must be 0 or 1");

    const int n = 2 * n_half;
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    rng.shuffle(order);

    // A single uniform permutation yields a uniform cyclic order (label 1)
    // or a uniform half/half partition with uniform cyclic orders (label 0).
    std::vector<EdgePair> edges;
    edges.reserve(n);
    if (label == 1) {
        for (int i = 0; i < n; ++i) edges.push_back({order[i], order[(i + 1) % n]});
    } else {
        for (int g = 0; g < 2; ++g) {
            const int base = g * n_half;
            for (int i = 0; i < n_half; ++i)
                edges.push_back({order[base + i], order[base + (i + 1) % n_half]});
        }
    }
    return edges;
}

CycleGraph make_cycles_instance(int n_half, int label, int image_size, double radius,
                                Philox4x32& rng) {
    if (image_size <= 0) throw std::invalid_argument("make_cycles_instance: bad image size");
    if (radius <= 0.0) throw std::invalid_argument("make_cycles_instance: bad radius");

    CycleGraph g;
    g.n_half = n_half;
    g.label = label;
    g.image_size = image_size;
    g.radius = radius;

    const std::vector<double> angles = sample_node_angles(2 * n_half, kDefaultAngleGap, rng);
    const Point center{image_size / 2.0, image_size / 2.0};
    g.positions.reserve(angles.size());
    for (double a : angles)
        g.positions.push_back({center.x + radius * std::cos(a),
                               center.y + radius * std::sin(a)});

    g.rightmost = 0;
    for (int i = 1; i < static_cast<int>(g.positions.size()); ++i)
        if (g.positions[i].x > g.positions[g.rightmost].x) g.rightmost = i;

    g.edges = sample_cycle_topology(n_half, label, rng);
    return g;
}

namespace {

std::vector<std::vector<int>> adjacency_of(const CycleGraph& graph) {
    std::vector<std::vector<int>> adj(graph.positions.size());
    for (const EdgePair& e : graph.edges) {
        adj[e.a].push_back(e.b);
        adj[e.b].push_back(e.a);
    }
    return adj;
}

void validate_style(const RenderStyle& style) {
    if (!(style.edge_width > 0.0))
        throw std::invalid_argument("render: edge width must be positive");
    if (style.node_radius < 0.0)
        throw std::invalid_argument("render: node radius must be >= 0");
}

}  // namespace

Canvas render_cycles_frame(const CycleGraph& graph, const std::vector<int>& colored_nodes,
                           const std::vector<int>& colored_edges, const RenderStyle& style) {
    validate_style(style);
    Canvas canvas(graph.image_size, graph.image_size, style.background);

    std::vector<char> edge_hl(graph.edges.size(), 0);
    for (int e : colored_edges) edge_hl.at(e) = 1;
    std::vector<char> node_hl(graph.positions.size(), 0);
    for (int v : colored_nodes) node_hl.at(v) = 1;

    // plain strokes first, then highlights, then node discs on top
    for (std::size_t i = 0; i < graph.edges.size(); ++i)
        if (!edge_hl[i])
            draw_segment(canvas, graph.positions[graph.edges[i].a],
                         graph.positions[graph.edges[i].b], style.edge_width, style.stroke);
    for (std::size_t i = 0; i < graph.edges.size(); ++i)
        if (edge_hl[i])
            draw_segment(canvas, graph.positions[graph.edges[i].a],
                         graph.positions[graph.edges[i].b], style.edge_width, style.highlight);
    for (std::size_t v = 0; v < graph.positions.size(); ++v)
        if (!node_hl[v])
            draw_disc(canvas, graph.positions[v], style.node_radius, style.stroke);
    for (std::size_t v = 0; v < graph.positions.size(); ++v)
        if (node_hl[v])
            draw_disc(canvas, graph.positions[v], style.node_radius, style.highlight);
    return canvas;
}

Canvas render_cycles_input(const CycleGraph& graph, const RenderStyle& style) {
    return render_cycles_frame(graph, {}, {}, style);
}

int cycles_label(const CycleGraph& graph) {
    const auto adj = adjacency_of(graph);
    if (adj.empty()) return 0;
    std::vector<char> seen(adj.size(), 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    std::size_t visited = 1;
    while (!q.empty()) {
        const int v = q.front();
        q.pop();
        for (int u : adj[v])
            if (!seen[u]) {
                seen[u] = 1;
                ++visited;
                q.push(u);
            }
    }
    return visited == adj.size() ? 1 : 0;
}

}  // namespace vistask
