#include "vistask/maze.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <stdexcept>

#include "vistask/geometry.hpp"
#include "vistask/raster.hpp"

namespace vistask {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// Union-find with path halving; plain and allocation-free besides the vector.
struct DisjointSet {
    std::vector<int> parent;
    explicit DisjointSet(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[b] = a;
        return true;
    }
};

}  // namespace

std::vector<int> ring_cell_counts(int rings) {
    if (rings < 1) throw std::invalid_argument("ring_cell_counts: rings must be >= 1");
    std::vector<int> counts{1};  // center cell
    int value = 6, run = 1;
    while (static_cast<int>(counts.size()) <= rings) {
        for (int i = 0; i < run && static_cast<int>(counts.size()) <= rings; ++i)
            counts.push_back(value);
        value *= 2;
        run = value == 12 ? 3 : run * 2;  // 6 x1, 12 x3, 24 x6, 48 x12, ...
    }
    return counts;
}

CellGraph build_cell_graph(MazeKind kind, int size) {
    CellGraph g;
    g.kind = kind;
    g.size = size;

    if (kind == MazeKind::rect) {
        if (size < 4) throw std::invalid_argument("build_cell_graph: rect size must be >= 4");
        g.cell_count = size * size;
        for (int r = 0; r < size; ++r)
            for (int c = 0; c < size; ++c) {
                const int cell = r * size + c;
                if (c + 1 < size) g.walls.push_back({cell, cell + 1});
                if (r + 1 < size) g.walls.push_back({cell, cell + size});
            }
        return g;
    }

    if (size < 2) throw std::invalid_argument("build_cell_graph: circular rings must be >= 2");
    g.ring_counts = ring_cell_counts(size);
    g.ring_start.resize(g.ring_counts.size());
    int total = 0;
    for (std::size_t k = 0; k < g.ring_counts.size(); ++k) {
        g.ring_start[k] = total;
        total += g.ring_counts[k];
    }
    g.cell_count = total;

    for (int k = 1; k <= size; ++k) {
        const int m = g.ring_counts[k];
        const int inner = g.ring_counts[k - 1];
        // radial walls crossing into ring k, one per outer (child) sector
        if (k == 1) {
            for (int i = 0; i < m; ++i) g.walls.push_back({0, g.ring_start[1] + i});
        } else if (m == inner) {
            for (int i = 0; i < m; ++i)
                g.walls.push_back({g.ring_start[k - 1] + i, g.ring_start[k] + i});
        } else if (m == 2 * inner) {
            for (int i = 0; i < inner; ++i) {
                g.walls.push_back({g.ring_start[k - 1] + i, g.ring_start[k] + 2 * i});
                g.walls.push_back({g.ring_start[k - 1] + i, g.ring_start[k] + 2 * i + 1});
            }
        } else {
            throw std::logic_error("build_cell_graph: ring counts must stay equal or double");
        }
        // angular walls within ring k
        for (int i = 0; i < m; ++i)
            g.walls.push_back({g.ring_start[k] + i, g.ring_start[k] + (i + 1) % m});
    }
    return g;
}

std::vector<std::vector<int>> CellGraph::adjacency() const {
    std::vector<std::vector<int>> adj(cell_count);
    for (const Wall& w : walls) {
        adj[w.cell_a].push_back(w.cell_b);
        adj[w.cell_b].push_back(w.cell_a);
    }
    return adj;
}

std::vector<int> MazeInstance::open_walls() const {
    std::vector<int> open;
    open.reserve(tree_walls.size());
    for (int w : tree_walls)
        if (w != split_wall) open.push_back(w);
    return open;
}

std::pair<std::vector<int>, int> kruskal_generate(const CellGraph& graph, Philox4x32& rng) {
    std::vector<int> order(graph.walls.size());
    std::iota(order.begin(), order.end(), 0);
    rng.shuffle(order);

    DisjointSet ds(graph.cell_count);
    std::vector<int> tree;
    tree.reserve(graph.cell_count - 1);
    for (int w : order)
        if (ds.unite(graph.walls[w].cell_a, graph.walls[w].cell_b)) tree.push_back(w);
    if (static_cast<int>(tree.size()) != graph.cell_count - 1)
        throw std::runtime_error("kruskal_generate: candidate graph is not connected");
    return {tree, tree.front()};
}

std::vector<int> maze_distances(const CellGraph& graph, const std::vector<int>& open_walls,
                                int src) {
    std::vector<std::vector<int>> adj(graph.cell_count);
    for (int w : open_walls) {
        adj[graph.walls[w].cell_a].push_back(graph.walls[w].cell_b);
        adj[graph.walls[w].cell_b].push_back(graph.walls[w].cell_a);
    }
    std::vector<int> dist(graph.cell_count, -1);
    std::queue<int> q;
    dist[src] = 0;
    q.push(src);
    while (!q.empty()) {
        const int v = q.front();
        q.pop();
        for (int u : adj[v])
            if (dist[u] < 0) {
                dist[u] = dist[v] + 1;
                q.push(u);
            }
    }
    return dist;
}

StartEnd pick_start_end(const CellGraph& graph, const std::vector<int>& tree_walls,
                        int first_removed_wall, MazeRegime regime, Philox4x32& rng) {
    StartEnd se;
    const Wall& first = graph.walls[first_removed_wall];
    se.start = rng.uniform_u64(2) == 0 ? first.cell_a : first.cell_b;

    const std::vector<int> dist = maze_distances(graph, tree_walls, se.start);
    se.d_max = *std::max_element(dist.begin(), dist.end());

    if (regime == MazeRegime::main_task) {
        if (se.d_max < 20)
            throw std::invalid_argument("pick_start_end: maze too small for main regime");
        se.d_target = static_cast<int>(rng.uniform_int(std::max(1, se.d_max - 20), se.d_max));
    } else {
        if (se.d_max < 10)
            throw std::invalid_argument("pick_start_end: maze too small for easy regime");
        se.d_target = static_cast<int>(rng.uniform_int(10, std::min(30, se.d_max)));
    }

    std::vector<int> candidates;
    for (int c = 0; c < graph.cell_count; ++c)
        if (dist[c] == se.d_target) candidates.push_back(c);
    se.end = candidates[rng.uniform_u64(candidates.size())];
    return se;
}

int split_components(const CellGraph& graph, const std::vector<int>& tree_walls,
                     int start, int end, int label, MazeRegime regime, int d_max) {
    const int n = graph.cell_count;
    std::vector<std::vector<std::pair<int, int>>> adj(n);  // (neighbor, wall id)
    for (int w : tree_walls) {
        adj[graph.walls[w].cell_a].push_back({graph.walls[w].cell_b, w});
        adj[graph.walls[w].cell_b].push_back({graph.walls[w].cell_a, w});
    }

    // Root the tree at start: BFS order, parent cell and parent wall.
    std::vector<int> parent(n, -1), parent_wall(n, -1), order;
    order.reserve(n);
    std::vector<char> seen(n, 0);
    std::queue<int> q;
    q.push(start);
    seen[start] = 1;
    while (!q.empty()) {
        const int v = q.front();
        q.pop();
        order.push_back(v);
        for (auto [u, w] : adj[v])
            if (!seen[u]) {
                seen[u] = 1;
                parent[u] = v;
                parent_wall[u] = w;
                q.push(u);
            }
    }

    std::vector<int> subtree(n, 1);
    for (auto it = order.rbegin(); it != order.rend(); ++it)
        if (parent[*it] >= 0) subtree[parent[*it]] += subtree[*it];

    std::vector<char> on_path(n, 0);  // marks the child cell of each path wall
    for (int v = end; v != start; v = parent[v]) on_path[v] = 1;

    // Candidate walls keyed by their child cell; removing wall w detaches
    // subtree[child] from the start side.
    int best_wall = -1;
    double best_score = 0.0;
    const double easy_target =
        (30.0 / static_cast<double>(d_max)) * (static_cast<double>(n) / 2.0);
    for (int v : order) {
        if (parent_wall[v] < 0) continue;
        const bool path_wall = on_path[v];
        if ((label == 0) != path_wall) continue;
        const int far_size = subtree[v];
        const int start_side = n - far_size;
        const double score = regime == MazeRegime::main_task
                                 ? std::abs(static_cast<double>(start_side - far_size))
                                 : std::abs(start_side - easy_target);
        const int w = parent_wall[v];
        if (best_wall < 0 || score < best_score ||
            (score == best_score && w < best_wall)) {
            best_wall = w;
            best_score = score;
        }
    }
    if (best_wall < 0)
        throw std::runtime_error("split_components: no candidate wall (degenerate path)");
    return best_wall;
}

MazeInstance make_maze_instance(MazeKind kind, int size, int label, MazeRegime regime,
                                Philox4x32& rng) {
    if (label != 0 && label != 1)
        throw std::invalid_argument("make_maze_instance: label must be 0 or 1");
    MazeInstance m;
    m.graph = build_cell_graph(kind, size);
    auto [tree, first] = kruskal_generate(m.graph, rng);
    m.tree_walls = std::move(tree);
    m.first_removed_wall = first;
    const StartEnd se = pick_start_end(m.graph, m.tree_walls, first, regime, rng);
    m.start = se.start;
    m.end = se.end;
    m.d_target = se.d_target;
    m.d_max = se.d_max;
    m.label = label;
    m.regime = regime;
    m.split_wall = split_components(m.graph, m.tree_walls, m.start, m.end, label, regime,
                                    m.d_max);
    return m;
}

// ---------------------------------------------------------------------------
// rendering

namespace {

struct RectLayout {
    double margin, cell;
    explicit RectLayout(const CellGraph& g, int image_size, const RenderStyle& style)
        : margin(style.maze_margin),
          cell((image_size - 2.0 * style.maze_margin) / g.size) {}
};

struct CircLayout {
    Point center;
    double dr;
    CircLayout(const CellGraph& g, int image_size, const RenderStyle& style)
        : center{image_size / 2.0, image_size / 2.0},
          // the center disc counts as one radial band alongside the rings
          dr((image_size / 2.0 - style.maze_margin) / (g.size + 1)) {}
};

void fill_cell(Canvas& canvas, const CellGraph& g, int cell, Color color, int image_size,
               const RenderStyle& style) {
    if (g.kind == MazeKind::rect) {
        const RectLayout L(g, image_size, style);
        const int r = cell / g.size, c = cell % g.size;
        fill_rect(canvas, L.margin + c * L.cell, L.margin + r * L.cell,
                  L.margin + (c + 1) * L.cell, L.margin + (r + 1) * L.cell, color);
        return;
    }
    const CircLayout L(g, image_size, style);
    if (cell == 0) {
        draw_disc(canvas, L.center, L.dr, color);
        return;
    }
    const int ring =
        static_cast<int>(std::upper_bound(g.ring_start.begin(), g.ring_start.end(), cell) -
                         g.ring_start.begin()) - 1;
    const int sector = cell - g.ring_start[ring];
    const double step = kTwoPi / g.ring_counts[ring];
    draw_annulus_arc(canvas, L.center, ring * L.dr, (ring + 1) * L.dr, sector * step,
                     (sector + 1) * step, color);
}

void draw_wall(Canvas& canvas, const CellGraph& g, const Wall& wall, int image_size,
               const RenderStyle& style) {
    if (g.kind == MazeKind::rect) {
        const RectLayout L(g, image_size, style);
        const int ra = wall.cell_a / g.size, ca = wall.cell_a % g.size;
        if (wall.cell_b == wall.cell_a + 1) {  // east wall: vertical line
            const double x = L.margin + (ca + 1) * L.cell;
            draw_segment(canvas, {x, L.margin + ra * L.cell}, {x, L.margin + (ra + 1) * L.cell},
                         style.wall_width, style.stroke);
        } else {  // south wall: horizontal line
            const double y = L.margin + (ra + 1) * L.cell;
            draw_segment(canvas, {L.margin + ca * L.cell, y}, {L.margin + (ca + 1) * L.cell, y},
                         style.wall_width, style.stroke);
        }
        return;
    }

    const CircLayout L(g, image_size, style);
    const auto locate = [&](int cell) {
        const int ring =
            static_cast<int>(std::upper_bound(g.ring_start.begin(), g.ring_start.end(), cell) -
                             g.ring_start.begin()) - 1;
        return std::pair<int, int>{ring, cell - g.ring_start[ring]};
    };
    const auto [ring_a, sec_a] = locate(wall.cell_a);
    const auto [ring_b, sec_b] = locate(wall.cell_b);
    if (ring_a == ring_b) {  // angular wall between sectors: radial line
        const int m = g.ring_counts[ring_a];
        // shared boundary angle: between sec_a and its successor
        const int hi = (sec_a + 1) % m == sec_b ? sec_a + 1 : sec_b + 1;
        const double angle = kTwoPi * hi / m;
        draw_radial_wall(canvas, L.center, ring_a * L.dr, (ring_a + 1) * L.dr, angle,
                         style.wall_width, style.stroke);
        return;
    }
    // radial passage wall: arc at the shared radius over the outer cell span
    const int outer_ring = std::max(ring_a, ring_b);
    const int outer_sec = ring_a > ring_b ? sec_a : sec_b;
    const double step = kTwoPi / g.ring_counts[outer_ring];
    const double r = outer_ring * L.dr;
    draw_annulus_arc(canvas, L.center, r - style.wall_width / 2.0, r + style.wall_width / 2.0,
                     outer_sec * step, (outer_sec + 1) * step, style.stroke);
}

void draw_boundary(Canvas& canvas, const CellGraph& g, int image_size,
                   const RenderStyle& style) {
    if (g.kind == MazeKind::rect) {
        const RectLayout L(g, image_size, style);
        const double lo = L.margin, hi = L.margin + g.size * L.cell;
        draw_segment(canvas, {lo, lo}, {hi, lo}, style.wall_width, style.stroke);
        draw_segment(canvas, {hi, lo}, {hi, hi}, style.wall_width, style.stroke);
        draw_segment(canvas, {hi, hi}, {lo, hi}, style.wall_width, style.stroke);
        draw_segment(canvas, {lo, hi}, {lo, lo}, style.wall_width, style.stroke);
        return;
    }
    const CircLayout L(g, image_size, style);
    const double r = (g.size + 1) * L.dr;
    draw_annulus_arc(canvas, L.center, r - style.wall_width / 2.0, r + style.wall_width / 2.0,
                     0.0, kTwoPi, style.stroke);
}

}  // namespace

Canvas render_maze_frame(const MazeInstance& instance, const std::vector<int>& colored_cells,
                         const RenderStyle& style) {
    if (!(style.wall_width > 0.0))
        throw std::invalid_argument("render: wall width must be positive");
    const int image_size = kDefaultImageSize;
    Canvas canvas(image_size, image_size, style.background);
    const CellGraph& g = instance.graph;

    for (int cell : colored_cells) fill_cell(canvas, g, cell, style.highlight, image_size, style);
    fill_cell(canvas, g, instance.start, style.highlight, image_size, style);
    fill_cell(canvas, g, instance.end, style.sink, image_size, style);

    std::vector<char> open(g.walls.size(), 0);
    for (int w : instance.open_walls()) open.at(w) = 1;
    for (std::size_t w = 0; w < g.walls.size(); ++w)
        if (!open[w]) draw_wall(canvas, g, g.walls[w], image_size, style);
    draw_boundary(canvas, g, image_size, style);
    return canvas;
}

Canvas render_maze_input(const MazeInstance& instance, const RenderStyle& style) {
    return render_maze_frame(instance, {}, style);
}

}  // namespace vistask
