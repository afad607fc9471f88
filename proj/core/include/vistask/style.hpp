#pragma once

#include "vistask/canvas.hpp"

namespace vistask {

inline constexpr int kDefaultImageSize = 448;

// Rendering defaults. The underlying tasks are defined symbolically; these
// values only shape the raster realization and may be overridden per
// dataset.
struct RenderStyle {
    Color background = colors::white;
    Color stroke = colors::black;
    Color highlight = colors::blue;  // scratchpad coloring
    Color sink = colors::red;        // maze end cell

    double node_radius = 6.0;  // cycle node discs and the strings start marker
    double edge_width = 3.0;   // cycle edges and string strokes
    double wall_width = 2.0;   // maze walls
    double maze_margin = 10.0; // blank border around the maze
};

}  // namespace vistask
