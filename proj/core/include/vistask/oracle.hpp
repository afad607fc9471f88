#pragma once

// Ground-truth Markovian step function over scratchpad frames: from the
// current frame it produces the next frame, a label estimate and a halt
// flag, exactly the supervision triple an inductive next-frame model is
// trained on.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

#include "vistask/task.hpp"

namespace vistask {

// step_index 0 is the raw input (nothing colored yet); step k >= 1 carries
// the schedule's frame k.
struct FrameState {
    const TaskInstance* task = nullptr;
    int step_index = 0;
    Frame colored;
    Canvas canvas;
};

struct StepOutput {
    FrameState next;
    int label_estimate = 0;
    bool halt = false;
};

FrameState initial_state(const TaskInstance& task, const RenderStyle& style);

// Advances one step. The final frame is a fixed point: stepping it returns
// the same frame with halt = true. A state whose colored set disagrees with
// the schedule at its step index is rejected.
StepOutput oracle_step(const FrameState& state, const RenderStyle& style);

struct RunResult {
    FrameSequence frames;   // rendered schedule f_1..f_T as colored sets
    std::vector<Canvas> canvases;
    int label = 0;
    int steps_taken = 0;
};

inline constexpr int kDefaultMaxSteps = 64;

// Iterates oracle_step from the input until halt; throws if max_steps is
// exhausted first.
RunResult run_to_halt(const TaskInstance& task, const RenderStyle& style,
                      int max_steps = kDefaultMaxSteps);

// Local decode of the label from a frame's colored set: cycles/strings say 1
// when all 2n nodes are colored and 0 when exactly n are; a maze says 1 once
// the end cell is colored and 0 once the whole start component is explored
// without it. Anything else is undecided (nullopt).
std::optional<int> decode_label_from_frame(const TaskInstance& task, const Frame& frame);

struct TeacherForcingTuple {
    int step = 0;  // input frame index i; the pair is (f_i, f_{i+1})
    std::vector<std::uint8_t> frame_in;
    std::vector<std::uint8_t> frame_out;
    int label = 0;
    bool halt = false;
    bool self_rollout = false;  // duplicate flagged for consumer-side mixing
};

// All consecutive pairs (f_i, f_{i+1}) for i = 0..T-1 as encoded images.
// include_self_rollout additionally emits each tuple once more flagged for
// the external trainer's perfect/generated mixing.
std::vector<TeacherForcingTuple> export_teacher_forcing_tuples(const TaskInstance& task,
                                                               const RenderStyle& style,
                                                               bool include_self_rollout);

// File form: <prefix>_s<i>_in.png / _out.png pairs plus a JSON-lines index
// (task_id, step, y, halt) at <dir>/index.jsonl (appended).
void write_teacher_forcing_tuples(const std::vector<TeacherForcingTuple>& tuples,
                                  const std::filesystem::path& dir,
                                  const std::string& task_id);

}  // namespace vistask
