#pragma once

// Task-polymorphic surface: a TaskInstance bundles one generated sample of
// any of the four tasks together with its deterministic frame schedule and
// rendering.

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "vistask/cycles.hpp"
#include "vistask/maze.hpp"
#include "vistask/strings.hpp"

namespace vistask {

enum class TaskKind { cycles, strings, maze_rect, maze_circ };

std::string task_kind_name(TaskKind kind);
TaskKind task_kind_from_name(const std::string& name);

// One scratchpad frame as a symbolic colored set. `nodes` holds node /
// anchor / cell indices; `edges` holds edge or segment indices (unused for
// mazes). Both sorted ascending.
struct Frame {
    std::vector<int> nodes;
    std::vector<int> edges;
    friend bool operator==(const Frame&, const Frame&) = default;
};

// Scratchpad frames f_1..f_T in order; the halt index is frame_count().
struct FrameSequence {
    std::vector<Frame> frames;
    int frame_count() const { return static_cast<int>(frames.size()); }
    const Frame& final_frame() const { return frames.back(); }
};

struct TaskParams {
    int size = 0;                  // paper task number: 2n for cycles/strings,
                                   // rows for maze-rect, rings for maze-circ
    MazeRegime regime = MazeRegime::main_task;
    int image_size = kDefaultImageSize;
    double epsilon = kDefaultAngleGap;
    double alpha = kDefaultAlpha;
    // 0 means the task default (220 cycles / 200 strings)
    double circle_radius = 0.0;
    // cells colored per maze scratchpad frame
    int maze_frame_step = 10;
};

int default_task_size(TaskKind kind);

struct TaskInstance {
    TaskKind kind = TaskKind::cycles;
    TaskParams params;
    std::uint64_t seed = 0;
    std::variant<CycleGraph, StringCurve, MazeInstance> data;

    int label() const;
    const CycleGraph& cycles() const { return std::get<CycleGraph>(data); }
    const StringCurve& strings() const { return std::get<StringCurve>(data); }
    const MazeInstance& maze() const { return std::get<MazeInstance>(data); }
};

// Deterministic factory: all randomness comes from Philox keyed with `seed`.
TaskInstance make_task_instance(TaskKind kind, const TaskParams& params, int label,
                                std::uint64_t seed);

// The full deterministic schedule: monotone colored sets ending at the first
// fixed point.
FrameSequence schedule_frames(const TaskInstance& task);

// An empty frame renders the task input.
Canvas render_frame(const TaskInstance& task, const Frame& frame, const RenderStyle& style);
Canvas render_input(const TaskInstance& task, const RenderStyle& style);

}  // namespace vistask
