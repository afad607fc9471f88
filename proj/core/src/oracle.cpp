#include "vistask/oracle.hpp"

#include <fstream>
#include <stdexcept>

#include "vistask/image_io.hpp"

namespace vistask {

namespace {

int total_node_count(const TaskInstance& task) {
    switch (task.kind) {
        case TaskKind::cycles: return 2 * task.cycles().n_half;
        case TaskKind::strings: return 2 * task.strings().n_half;
        default: return task.maze().graph.cell_count;
    }
}

}  // namespace

std::optional<int> decode_label_from_frame(const TaskInstance& task, const Frame& frame) {
    const int colored = static_cast<int>(frame.nodes.size());
    if (task.kind == TaskKind::cycles || task.kind == TaskKind::strings) {
        const int full = total_node_count(task);
        if (colored == full) return 1;
        if (colored == full / 2) return 0;
        return std::nullopt;
    }
    const MazeInstance& m = task.maze();
    for (int c : frame.nodes)
        if (c == m.end) return 1;
    // frontier exhausted: every cell reachable from start is colored
    const std::vector<int> dist = maze_distances(m.graph, m.open_walls(), m.start);
    int reachable = 0;
    for (int d : dist) reachable += d >= 0 ? 1 : 0;
    if (colored == reachable) return 0;
    return std::nullopt;
}

FrameState initial_state(const TaskInstance& task, const RenderStyle& style) {
    FrameState s;
    s.task = &task;
    s.step_index = 0;
    s.canvas = render_input(task, style);
    return s;
}

StepOutput oracle_step(const FrameState& state, const RenderStyle& style) {
    if (state.task == nullptr) throw std::invalid_argument("oracle_step: no task");
    const TaskInstance& task = *state.task;
    const FrameSequence schedule = schedule_frames(task);
    const int last = schedule.frame_count();

    if (state.step_index < 0 || state.step_index > last)
        throw std::invalid_argument("oracle_step: step index outside schedule");
    Frame expected;
    if (state.step_index > 0) expected = schedule.frames[state.step_index - 1];
    if (state.colored != expected)
        throw std::invalid_argument("oracle_step: state inconsistent with schedule");

    // the final frame is a fixed point
    const int next_index = std::min(state.step_index + 1, last);
    StepOutput out;
    out.next.task = state.task;
    out.next.step_index = next_index;
    out.next.colored = schedule.frames[next_index - 1];
    out.next.canvas = render_frame(task, out.next.colored, style);
    out.halt = next_index == last;

    // best-effort decode, defaulting to 0 when the frame is undecidable
    const std::optional<int> decoded = decode_label_from_frame(task, out.next.colored);
    if (decoded.has_value())
        out.label_estimate = *decoded;
    else
        out.label_estimate = out.halt ? task.label() : 0;
    return out;
}

RunResult run_to_halt(const TaskInstance& task, const RenderStyle& style, int max_steps) {
    if (max_steps < 1) throw std::invalid_argument("run_to_halt: max_steps must be >= 1");
    RunResult result;
    FrameState state = initial_state(task, style);
    for (int step = 0; step < max_steps; ++step) {
        StepOutput out = oracle_step(state, style);
        result.frames.frames.push_back(out.next.colored);
        result.canvases.push_back(out.next.canvas);
        result.label = out.label_estimate;
        result.steps_taken = out.next.step_index;
        if (out.halt) return result;
        state = std::move(out.next);
    }
    throw std::runtime_error("run_to_halt: step budget exceeded without halt");
}

std::vector<TeacherForcingTuple> export_teacher_forcing_tuples(const TaskInstance& task,
                                                               const RenderStyle& style,
                                                               bool include_self_rollout) {
    const FrameSequence schedule = schedule_frames(task);
    const int last = schedule.frame_count();

    std::vector<std::vector<std::uint8_t>> encoded(last + 1);
    encoded[0] = encode_png(render_input(task, style));
    for (int i = 1; i <= last; ++i)
        encoded[i] = encode_png(render_frame(task, schedule.frames[i - 1], style));

    std::vector<TeacherForcingTuple> tuples;
    for (int i = 0; i < last; ++i) {
        TeacherForcingTuple t;
        t.step = i;
        t.frame_in = encoded[i];
        t.frame_out = encoded[i + 1];
        t.label = task.label();
        t.halt = i + 1 == last;
        tuples.push_back(t);
        if (include_self_rollout) {
            t.self_rollout = true;
            tuples.push_back(std::move(t));
        }
    }
    return tuples;
}

void write_teacher_forcing_tuples(const std::vector<TeacherForcingTuple>& tuples,
                                  const std::filesystem::path& dir,
                                  const std::string& task_id) {
    std::filesystem::create_directories(dir);
    std::ofstream index(dir / "index.jsonl", std::ios::app);
    if (!index) throw std::runtime_error("cannot open teacher-forcing index");
    for (const TeacherForcingTuple& t : tuples) {
        const std::string suffix = t.self_rollout ? "r" : "t";
        const std::string stem = task_id + "_s" + std::to_string(t.step) + suffix;
        const auto write = [&](const std::string& name, const std::vector<std::uint8_t>& bytes) {
            std::ofstream f(dir / name, std::ios::binary);
            f.write(reinterpret_cast<const char*>(bytes.data()),
                    static_cast<std::streamsize>(bytes.size()));
            if (!f) throw std::runtime_error("teacher-forcing write failed: " + name);
        };
        write(stem + "_in.png", t.frame_in);
        write(stem + "_out.png", t.frame_out);
        index << "{\"task_id\":\"" << task_id << "\",\"step\":" << t.step
              << ",\"y\":" << t.label << ",\"halt\":" << (t.halt ? "true" : "false");
        if (t.self_rollout) index << ",\"rollout\":\"self\"";
        index << "}\n";
    }
    if (!index) throw std::runtime_error("teacher-forcing index write failed");
}

}  // namespace vistask
