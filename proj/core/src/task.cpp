#include "vistask/task.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace vistask {

std::string task_kind_name(TaskKind kind) {
    switch (kind) {
        case TaskKind::cycles: return "cycles";
        case TaskKind::strings: return "strings";
        case TaskKind::maze_rect: return "maze-rect";
        case TaskKind::maze_circ: return "maze-circ";
    }
    throw std::logic_error("task_kind_name: bad kind");
}

TaskKind task_kind_from_name(const std::string& name) {
    if (name == "cycles") return TaskKind::cycles;
    if (name == "strings") return TaskKind::strings;
    if (name == "maze-rect") return TaskKind::maze_rect;
    if (name == "maze-circ") return TaskKind::maze_circ;
    throw std::invalid_argument("unknown task: " + name);
}

int default_task_size(TaskKind kind) {
    switch (kind) {
        case TaskKind::cycles: return 24;
        case TaskKind::strings: return 20;
        case TaskKind::maze_rect: return 32;
        case TaskKind::maze_circ: return 16;
    }
    throw std::logic_error("default_task_size: bad kind");
}

int TaskInstance::label() const {
    return std::visit([](const auto& t) { return t.label; }, data);
}

TaskInstance make_task_instance(TaskKind kind, const TaskParams& params, int label,
                                std::uint64_t seed) {
    if (label != 0 && label != 1)
        throw std::invalid_argument("make_task_instance: label must be 0 or 1");

    TaskInstance task;
    task.kind = kind;
    task.params = params;
    task.seed = seed;
    Philox4x32 rng(seed);

    switch (kind) {
        case TaskKind::cycles: {
            if (params.size < 6 || params.size % 2 != 0)
                throw std::invalid_argument("cycles: size is the node count 2n, even and >= 6");
            const double radius =
                params.circle_radius > 0.0 ? params.circle_radius : kCyclesCircleRadius;
            task.data = make_cycles_instance(params.size / 2, label, params.image_size,
                                             radius, rng);
            break;
        }
        case TaskKind::strings: {
            if (params.size < 6 || params.size % 2 != 0)
                throw std::invalid_argument("strings: size is the anchor count 2n, even and >= 6");
            const double radius =
                params.circle_radius > 0.0 ? params.circle_radius : kStringsCircleRadius;
            task.data = sample_strings_instance(params.size / 2, label, params.image_size,
                                                radius, params.alpha, rng);
            break;
        }
        case TaskKind::maze_rect:
            task.data = make_maze_instance(MazeKind::rect, params.size, label, params.regime, rng);
            break;
        case TaskKind::maze_circ:
            task.data =
                make_maze_instance(MazeKind::circular, params.size, label, params.regime, rng);
            break;
    }
    return task;
}

namespace {

// Hop distances from src over an undirected adjacency; -1 if unreachable.
std::vector<int> bfs_distances(const std::vector<std::vector<int>>& adj, int src) {
    std::vector<int> dist(adj.size(), -1);
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

// Shared schedule for cycles and strings: frame k+1 colors nodes within hop
// distance k of the start and every edge whose farther endpoint is within k.
template <typename EdgeLike>
FrameSequence hop_schedule(const std::vector<std::vector<int>>& adj,
                           const std::vector<EdgeLike>& edges, int start) {
    const std::vector<int> dist = bfs_distances(adj, start);
    int ecc = 0;
    for (int d : dist) ecc = std::max(ecc, d);

    FrameSequence seq;
    for (int k = 0; k <= ecc; ++k) {
        Frame f;
        for (int v = 0; v < static_cast<int>(dist.size()); ++v)
            if (dist[v] >= 0 && dist[v] <= k) f.nodes.push_back(v);
        for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
            const int da = dist[edges[e].a], db = dist[edges[e].b];
            if (da >= 0 && db >= 0 && std::max(da, db) <= k) f.edges.push_back(e);
        }
        seq.frames.push_back(std::move(f));
    }
    return seq;
}

}  // namespace

FrameSequence schedule_frames(const TaskInstance& task) {
    switch (task.kind) {
        case TaskKind::cycles: {
            const CycleGraph& g = task.cycles();
            std::vector<std::vector<int>> adj(g.positions.size());
            for (const EdgePair& e : g.edges) {
                adj[e.a].push_back(e.b);
                adj[e.b].push_back(e.a);
            }
            return hop_schedule(adj, g.edges, g.rightmost);
        }
        case TaskKind::strings: {
            const StringCurve& c = task.strings();
            std::vector<std::vector<int>> adj(c.anchors.size());
            for (const StringSegment& s : c.segments) {
                adj[s.a].push_back(s.b);
                adj[s.b].push_back(s.a);
            }
            return hop_schedule(adj, c.segments, c.rightmost);
        }
        case TaskKind::maze_rect:
        case TaskKind::maze_circ: {
            const MazeInstance& m = task.maze();
            const std::vector<int> dist =
                maze_distances(m.graph, m.open_walls(), m.start);
            int d_stop = 0;
            if (m.label == 1) {
                d_stop = dist[m.end];
            } else {
                for (int d : dist) d_stop = std::max(d_stop, d);
            }
            const int step = task.params.maze_frame_step;
            const int count = std::max(1, (d_stop + step - 1) / step);
            FrameSequence seq;
            for (int k = 1; k <= count; ++k) {
                const int radius = std::min(step * k, d_stop);
                Frame f;
                for (int c = 0; c < m.graph.cell_count; ++c)
                    if (dist[c] >= 0 && dist[c] <= radius) f.nodes.push_back(c);
                seq.frames.push_back(std::move(f));
            }
            return seq;
        }
    }
    throw std::logic_error("schedule_frames: bad kind");
}

Canvas render_frame(const TaskInstance& task, const Frame& frame, const RenderStyle& style) {
    switch (task.kind) {
        case TaskKind::cycles:
            return render_cycles_frame(task.cycles(), frame.nodes, frame.edges, style);
        case TaskKind::strings:
            return render_strings_frame(task.strings(), frame.nodes, frame.edges, style);
        case TaskKind::maze_rect:
        case TaskKind::maze_circ:
            return render_maze_frame(task.maze(), frame.nodes, style);
    }
    throw std::logic_error("render_frame: bad kind");
}

Canvas render_input(const TaskInstance& task, const RenderStyle& style) {
    return render_frame(task, Frame{}, style);
}

}  // namespace vistask
