#pragma once

// Cycles task: 2n nodes on an invisible circle joined by 2n edges that form
// either one cycle through all 2n nodes (label 1) or two disjoint cycles of
// n nodes each (label 0).

#include <utility>
#include <vector>

#include "vistask/canvas.hpp"
#include "vistask/geometry.hpp"
#include "vistask/rng.hpp"
#include "vistask/style.hpp"

namespace vistask {

struct EdgePair {
    int a = 0;
    int b = 0;
    friend bool operator==(EdgePair, EdgePair) = default;
};

struct CycleGraph {
    int n_half = 0;                 // the task's n; node count is 2n
    std::vector<Point> positions;   // on the invisible circle
    std::vector<EdgePair> edges;    // 2n edges, every node degree 2
    int label = 0;                  // 1 = connected (single cycle)
    int rightmost = 0;              // strictly maximal x, ties to lower index
    int image_size = 448;
    double radius = 220.0;
};

inline constexpr double kDefaultAngleGap = 0.2;      // radians
inline constexpr double kCyclesCircleRadius = 220.0; // on a 448x448 canvas

// Angles with consecutive circular gaps >= epsilon: sort count-1 uniforms on
// [0, 2*pi - count*epsilon], add i*epsilon offsets, rotate by a uniform beta.
// Draw order: the count-1 uniforms, then beta. Result is wrapped to [0, 2*pi).
std::vector<double> sample_node_angles(int count, double epsilon, Philox4x32& rng);

// Edge list for the requested label; one shuffle of the 2n node ids supplies
// both the partition (label 0) and the cyclic visiting orders.
std::vector<EdgePair> sample_cycle_topology(int n_half, int label, Philox4x32& rng);

CycleGraph make_cycles_instance(int n_half, int label, int image_size, double radius,
                                Philox4x32& rng);

Canvas render_cycles_input(const CycleGraph& graph, const RenderStyle& style);

// Frame k+1 colors nodes within hop distance k of the rightmost node and
// every edge whose farther endpoint is colored; used by the frame schedule.
Canvas render_cycles_frame(const CycleGraph& graph, const std::vector<int>& colored_nodes,
                           const std::vector<int>& colored_edges, const RenderStyle& style);

// Connectivity of the edge set via BFS.
int cycles_label(const CycleGraph& graph);

}  // namespace vistask
