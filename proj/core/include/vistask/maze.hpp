#pragma once

// Rectangular and circular mazes. A Kruskal spanning tree over the cell
// graph is split into exactly two components by re-inserting one wall; the
// task is whether the start (blue) and end (red) cells remain connected.

#include <cstdint>
#include <utility>
#include <vector>

#include "vistask/canvas.hpp"
#include "vistask/rng.hpp"
#include "vistask/style.hpp"

namespace vistask {

enum class MazeKind { rect, circular };
enum class MazeRegime { main_task, easy };

struct Wall {
    int cell_a = 0;
    int cell_b = 0;
};

// Cell indexing: rect(n) uses row-major ids over n^2 cells. circular(rings)
// puts the center cell at id 0 and numbers each ring consecutively by
// sector; ring cell counts follow 1, 6, 12, 12, 12, 24 x6, 48 x12, ... with
// run lengths doubling from the 24-run on.
struct CellGraph {
    MazeKind kind = MazeKind::rect;
    int size = 0;  // rows/cols for rect, ring count for circular
    int cell_count = 0;
    std::vector<Wall> walls;           // all candidate walls, canonical order
    std::vector<int> ring_counts;      // circular only; [0] is the center
    std::vector<int> ring_start;       // circular only; first cell id per ring

    std::vector<std::vector<int>> adjacency() const;
};

struct MazeInstance {
    CellGraph graph;
    std::vector<int> tree_walls;   // wall ids removed by Kruskal (spanning tree)
    int first_removed_wall = 0;
    int start = 0;
    int end = 0;
    int label = 0;
    int split_wall = 0;            // tree wall re-inserted to split the maze
    int d_target = 0;
    int d_max = 0;
    MazeRegime regime = MazeRegime::main_task;

    // Passages open after the split: tree_walls minus split_wall.
    std::vector<int> open_walls() const;
};

std::vector<int> ring_cell_counts(int rings);

CellGraph build_cell_graph(MazeKind kind, int size);

// Kruskal over a uniformly shuffled wall order; returns the spanning tree
// wall ids (in removal order) and the first removed wall. Draw order: one
// shuffle of the wall index vector.
std::pair<std::vector<int>, int> kruskal_generate(const CellGraph& graph, Philox4x32& rng);

struct StartEnd {
    int start = 0;
    int end = 0;
    int d_target = 0;
    int d_max = 0;
};

// Start is one of the two cells of the first removed wall; the end sits at
// an exact BFS distance d_target drawn from [d_max - 20, d_max] (main) or
// [10, min(30, d_max)] (easy). Draw order: start pick, d_target, end pick.
StartEnd pick_start_end(const CellGraph& graph, const std::vector<int>& tree_walls,
                        int first_removed_wall, MazeRegime regime, Philox4x32& rng);

// Chooses the tree wall to re-insert: on the start-end path for label 0,
// off it for label 1. Main regime balances the two component sizes; easy
// targets a start component of (30 / d_max) * (cells / 2). Ties break to the
// lowest wall id.
int split_components(const CellGraph& graph, const std::vector<int>& tree_walls,
                     int start, int end, int label, MazeRegime regime, int d_max);

MazeInstance make_maze_instance(MazeKind kind, int size, int label, MazeRegime regime,
                                Philox4x32& rng);

Canvas render_maze_input(const MazeInstance& instance, const RenderStyle& style);

// colored_cells are filled with the highlight color; start/end keep their
// blue/red fills in every frame.
Canvas render_maze_frame(const MazeInstance& instance, const std::vector<int>& colored_cells,
                         const RenderStyle& style);

// BFS distances from src over the given open walls; -1 where unreachable.
std::vector<int> maze_distances(const CellGraph& graph, const std::vector<int>& open_walls,
                                int src);

}  // namespace vistask
