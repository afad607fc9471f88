#include "vistask/dataset.hpp"

#include <json.hpp>

#include <atomic>
#include <exception>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "vistask/globality.hpp"
#include "vistask/image_io.hpp"

namespace vistask {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

namespace {

// Tag mixed into a sample seed to key its masking stream separately from
// its generation stream.
constexpr std::uint64_t kMaskStreamTag = 0x6d61736bull;  // "mask"

std::string format_id(std::uint64_t id) {
    std::string s = std::to_string(id);
    return s.size() >= 6 ? s : std::string(6 - s.size(), '0') + s;
}

}  // namespace

std::string frame_mode_name(FrameMode mode) {
    switch (mode) {
        case FrameMode::none: return "none";
        case FrameMode::single: return "single";
        case FrameMode::multi: return "multi";
    }
    throw std::logic_error("frame_mode_name");
}

FrameMode frame_mode_from_name(const std::string& name) {
    if (name == "none") return FrameMode::none;
    if (name == "single") return FrameMode::single;
    if (name == "multi") return FrameMode::multi;
    throw std::invalid_argument("unknown frame mode: " + name);
}

std::string regime_name(MazeRegime regime) {
    return regime == MazeRegime::main_task ? "main" : "easy";
}

MazeRegime regime_from_name(const std::string& name) {
    if (name == "main") return MazeRegime::main_task;
    if (name == "easy") return MazeRegime::easy;
    throw std::invalid_argument("unknown regime: " + name);
}

namespace {

bool is_maze(TaskKind kind) {
    return kind == TaskKind::maze_rect || kind == TaskKind::maze_circ;
}

TaskConfig normalized(const TaskConfig& config) {
    TaskConfig c = config;
    if (c.params.size == 0) c.params.size = default_task_size(c.kind);
    if (c.params.circle_radius == 0.0)
        c.params.circle_radius = c.kind == TaskKind::cycles     ? kCyclesCircleRadius
                                 : c.kind == TaskKind::strings  ? kStringsCircleRadius
                                                                : 0.0;
    if (c.resolution != 448 && c.resolution != 224)
        throw std::invalid_argument("resolution must be 448 or 224");
    if (c.mask_prob.has_value()) {
        if (c.resolution != 224)
            throw std::invalid_argument("masking applies to 224x224 outputs only");
        if (!(*c.mask_prob >= 0.0 && *c.mask_prob <= 1.0))
            throw std::invalid_argument("mask probability must be in [0, 1]");
    }
    return c;
}

ordered_json params_to_json(const TaskConfig& c) {
    ordered_json p;
    p["size"] = c.params.size;
    p["image_size"] = c.params.image_size;
    if (c.kind == TaskKind::cycles || c.kind == TaskKind::strings) {
        p["epsilon"] = c.params.epsilon;
        p["radius"] = c.params.circle_radius;
    }
    if (c.kind == TaskKind::strings) p["alpha"] = c.params.alpha;
    if (is_maze(c.kind)) p["frame_step"] = c.params.maze_frame_step;
    p["node_radius"] = c.style.node_radius;
    p["edge_width"] = c.style.edge_width;
    p["wall_width"] = c.style.wall_width;
    p["maze_margin"] = c.style.maze_margin;
    p["resolution"] = c.resolution;
    p["frame_mode"] = frame_mode_name(c.frame_mode);
    if (c.mask_prob.has_value()) p["mask_prob"] = *c.mask_prob;
    p["format"] = c.ppm ? "ppm" : "png";
    return p;
}

struct SampleOutput {
    ManifestRecord record;
    std::vector<fs::path> files;  // absolute paths written
};

Canvas finalize_resolution(Canvas canvas, int resolution) {
    if (canvas.width() == resolution && canvas.height() == resolution) return canvas;
    return downscale(canvas, resolution, resolution);
}

SampleOutput generate_one(const TaskConfig& c, std::uint64_t id, std::uint64_t seed,
                          const fs::path& out_dir) {
    const int label = static_cast<int>(id % 2);
    const TaskInstance task = make_task_instance(c.kind, c.params, label, seed);
    const FrameSequence schedule = schedule_frames(task);
    const std::string ext = c.ppm ? ".ppm" : ".png";
    const fs::path images = out_dir / "images";

    SampleOutput out;
    ManifestRecord& rec = out.record;
    rec.id = id;
    rec.task = task_kind_name(c.kind);
    rec.label = label;
    rec.sample_seed = seed;
    rec.params_json = params_to_json(c).dump();
    rec.num_frames = schedule.frame_count();
    rec.split = c.split;
    rec.regime = is_maze(c.kind) ? regime_name(c.params.regime) : "";
    if (is_maze(c.kind)) {
        rec.d_target = task.maze().d_target;
        rec.d_max = task.maze().d_max;
    }

    Canvas input = finalize_resolution(render_input(task, c.style), c.resolution);
    if (c.mask_prob.has_value()) {
        Philox4x32 mask_rng(stable_hash(seed, kMaskStreamTag));
        input = patch_mask(input, *c.mask_prob, mask_rng).first;
    }
    rec.input_path = "images/" + format_id(id) + "_input" + ext;
    save_canvas(input, out_dir / rec.input_path);
    out.files.push_back(out_dir / rec.input_path);

    std::vector<int> wanted;  // 1-based frame indices to store
    if (c.frame_mode == FrameMode::multi)
        for (int k = 1; k <= schedule.frame_count(); ++k) wanted.push_back(k);
    else if (c.frame_mode == FrameMode::single)
        wanted.push_back(schedule.frame_count());

    for (int k : wanted) {
        const Canvas frame = finalize_resolution(
            render_frame(task, schedule.frames[k - 1], c.style), c.resolution);
        std::string name = "images/" + format_id(id) + "_f";
        name += k < 10 ? "0" + std::to_string(k) : std::to_string(k);
        name += ext;
        save_canvas(frame, out_dir / name);
        rec.frame_paths.push_back(name);
        out.files.push_back(out_dir / name);
    }
    return out;
}

}  // namespace

std::string ManifestRecord::to_json_line() const {
    ordered_json j;
    j["id"] = id;
    j["task"] = task;
    j["label"] = label;
    j["sample_seed"] = sample_seed;
    j["params"] = ordered_json::parse(params_json);
    j["input_path"] = input_path;
    j["frame_paths"] = frame_paths;
    j["num_frames"] = num_frames;
    if (d_target.has_value()) j["d_target"] = *d_target;
    if (d_max.has_value()) j["d_max"] = *d_max;
    j["split"] = split;
    j["regime"] = regime;
    return j.dump();
}

ManifestRecord ManifestRecord::from_json_line(const std::string& line) {
    const ordered_json j = ordered_json::parse(line);
    ManifestRecord r;
    r.id = j.at("id").get<std::uint64_t>();
    r.task = j.at("task").get<std::string>();
    r.label = j.at("label").get<int>();
    r.sample_seed = j.at("sample_seed").get<std::uint64_t>();
    r.params_json = j.at("params").dump();
    r.input_path = j.at("input_path").get<std::string>();
    r.frame_paths = j.at("frame_paths").get<std::vector<std::string>>();
    r.num_frames = j.at("num_frames").get<int>();
    if (j.contains("d_target")) r.d_target = j.at("d_target").get<int>();
    if (j.contains("d_max")) r.d_max = j.at("d_max").get<int>();
    r.split = j.at("split").get<std::string>();
    r.regime = j.at("regime").get<std::string>();
    return r;
}

std::vector<ManifestRecord> read_manifest(const fs::path& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open manifest: " + path.string());
    std::vector<ManifestRecord> records;
    std::string line;
    while (std::getline(f, line)) {
        if (line.empty()) continue;
        records.push_back(ManifestRecord::from_json_line(line));
    }
    return records;
}

std::filesystem::path generate_dataset(const TaskConfig& config, const fs::path& out_dir,
                                       int workers) {
    const TaskConfig c = normalized(config);
    if (c.count <= 0 || c.count % 2 != 0)
        throw std::invalid_argument("count must be positive and even for balanced labels");
    if (workers < 1) throw std::invalid_argument("workers must be >= 1");

    fs::create_directories(out_dir / "images");

    std::vector<std::string> lines(c.count);
    std::vector<fs::path> created;
    std::mutex created_mutex;
    std::atomic<std::uint64_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr failure = nullptr;
    std::mutex failure_mutex;

    const auto worker_fn = [&]() {
        for (;;) {
            const std::uint64_t id = next.fetch_add(1);
            if (id >= static_cast<std::uint64_t>(c.count) || failed) return;
            try {
                SampleOutput out =
                    generate_one(c, id, stable_hash(c.master_seed, id), out_dir);
                lines[id] = out.record.to_json_line();
                std::lock_guard lock(created_mutex);
                created.insert(created.end(), out.files.begin(), out.files.end());
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                failed = true;
                return;
            }
        }
    };

    if (workers == 1) {
        worker_fn();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < workers; ++i) pool.emplace_back(worker_fn);
        for (std::thread& t : pool) t.join();
    }

    if (failure) {
        std::error_code ec;
        for (const fs::path& p : created) fs::remove(p, ec);
        std::rethrow_exception(failure);
    }

    // manifest last, sorted by id (lines are already indexed by id)
    const fs::path manifest = out_dir / "manifest.jsonl";
    std::ofstream mf(manifest, std::ios::binary);
    if (!mf) throw std::runtime_error("cannot write manifest: " + manifest.string());
    for (const std::string& line : lines) mf << line << '\n';
    if (!mf) throw std::runtime_error("manifest write failed");
    return manifest;
}

ManifestRecord regenerate_sample(const TaskConfig& config, std::uint64_t id,
                                 const fs::path& out_dir) {
    const TaskConfig c = normalized(config);
    fs::create_directories(out_dir / "images");
    return generate_one(c, id, stable_hash(c.master_seed, id), out_dir).record;
}

TaskConfig config_from_manifest_record(const ManifestRecord& record) {
    TaskConfig c;
    c.kind = task_kind_from_name(record.task);
    const ordered_json p = ordered_json::parse(record.params_json);
    c.params.size = p.at("size").get<int>();
    c.params.image_size = p.at("image_size").get<int>();
    if (p.contains("epsilon")) c.params.epsilon = p.at("epsilon").get<double>();
    if (p.contains("radius")) c.params.circle_radius = p.at("radius").get<double>();
    if (p.contains("alpha")) c.params.alpha = p.at("alpha").get<double>();
    if (p.contains("frame_step")) c.params.maze_frame_step = p.at("frame_step").get<int>();
    if (!record.regime.empty()) c.params.regime = regime_from_name(record.regime);
    c.style.node_radius = p.at("node_radius").get<double>();
    c.style.edge_width = p.at("edge_width").get<double>();
    c.style.wall_width = p.at("wall_width").get<double>();
    c.style.maze_margin = p.at("maze_margin").get<double>();
    c.resolution = p.at("resolution").get<int>();
    c.frame_mode = frame_mode_from_name(p.at("frame_mode").get<std::string>());
    if (p.contains("mask_prob")) c.mask_prob = p.at("mask_prob").get<double>();
    c.ppm = p.at("format").get<std::string>() == "ppm";
    c.split = record.split;
    return c;
}

std::vector<std::string> verify_sample(const fs::path& manifest_path, std::uint64_t id) {
    const std::vector<ManifestRecord> records = read_manifest(manifest_path);
    const ManifestRecord* row = nullptr;
    for (const ManifestRecord& r : records)
        if (r.id == id) {
            row = &r;
            break;
        }
    if (!row) throw std::invalid_argument("verify_sample: id not in manifest");

    const fs::path base = manifest_path.parent_path();
    const fs::path scratch = base / ".inspect_tmp";
    fs::create_directories(scratch / "images");

    // regenerate directly from the recorded per-sample seed
    const TaskConfig c = config_from_manifest_record(*row);
    generate_one(c, id, row->sample_seed, scratch);

    const auto read_bytes = [](const fs::path& p) {
        std::ifstream f(p, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open: " + p.string());
        return std::string((std::istreambuf_iterator<char>(f)),
                           std::istreambuf_iterator<char>());
    };

    std::vector<std::string> mismatched;
    std::vector<std::string> paths{row->input_path};
    paths.insert(paths.end(), row->frame_paths.begin(), row->frame_paths.end());
    for (const std::string& rel : paths) {
        if (read_bytes(base / rel) != read_bytes(scratch / rel)) mismatched.push_back(rel);
    }
    fs::remove_all(scratch);
    return mismatched;
}

std::filesystem::path export_masked_variant(const fs::path& manifest_path, double p,
                                            std::uint64_t seed, const fs::path& out_dir) {
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("mask probability must be in [0, 1]");
    const std::vector<ManifestRecord> records = read_manifest(manifest_path);
    const fs::path base = manifest_path.parent_path();
    fs::create_directories(out_dir / "images");

    std::vector<std::string> lines;
    lines.reserve(records.size());
    for (const ManifestRecord& rec : records) {
        Canvas input = load_canvas(base / rec.input_path);
        if (input.width() != kMaskCanvas || input.height() != kMaskCanvas)
            throw std::invalid_argument("export_masked_variant: dataset must be 224x224");
        Philox4x32 rng(stable_hash(seed, rec.id));
        Canvas masked = patch_mask(input, p, rng).first;
        save_canvas(masked, out_dir / rec.input_path);
        for (const std::string& rel : rec.frame_paths)
            fs::copy_file(base / rel, out_dir / rel, fs::copy_options::overwrite_existing);

        ManifestRecord updated = rec;
        ordered_json pj = ordered_json::parse(updated.params_json);
        pj["mask_prob"] = p;
        pj["mask_seed"] = seed;
        updated.params_json = pj.dump();
        lines.push_back(updated.to_json_line());
    }

    const fs::path manifest = out_dir / "manifest.jsonl";
    std::ofstream mf(manifest, std::ios::binary);
    for (const std::string& line : lines) mf << line << '\n';
    if (!mf) throw std::runtime_error("masked manifest write failed");
    return manifest;
}

std::string ScoreReport::to_json() const {
    ordered_json j;
    j["label_accuracy"] = label_accuracy;
    j["halt_step_exact"] = halt_step_exact;
    j["mean_frame_mse"] = mean_frame_mse;
    j["coverage"] = coverage;
    j["compared_frames"] = compared_frames;
    return j.dump();
}

ScoreReport score_predictions(const fs::path& manifest_path, const fs::path& predictions_dir) {
    const std::vector<ManifestRecord> records = read_manifest(manifest_path);
    if (records.empty()) throw std::invalid_argument("score_predictions: empty manifest");
    const fs::path base = manifest_path.parent_path();

    struct Prediction {
        int label = -1;
        std::optional<int> halt_step;
        std::vector<std::string> frames;
    };
    std::unordered_map<std::uint64_t, Prediction> preds;
    {
        std::ifstream f(predictions_dir / "predictions.jsonl");
        if (!f)
            throw std::runtime_error("cannot open " +
                                     (predictions_dir / "predictions.jsonl").string());
        std::string line;
        while (std::getline(f, line)) {
            if (line.empty()) continue;
            const ordered_json j = ordered_json::parse(line);
            Prediction p;
            p.label = j.at("label").get<int>();
            if (j.contains("halt_step")) p.halt_step = j.at("halt_step").get<int>();
            if (j.contains("frames")) p.frames = j.at("frames").get<std::vector<std::string>>();
            preds[j.at("id").get<std::uint64_t>()] = std::move(p);
        }
    }

    ScoreReport report;
    int covered = 0, correct = 0, halt_given = 0, halt_right = 0;
    double mse_sum = 0.0;
    for (const ManifestRecord& rec : records) {
        const auto it = preds.find(rec.id);
        if (it == preds.end()) continue;  // missing: counted as incorrect below
        ++covered;
        if (it->second.label == rec.label) ++correct;
        if (it->second.halt_step.has_value()) {
            ++halt_given;
            if (*it->second.halt_step == rec.num_frames) ++halt_right;
        }
        const std::size_t n_compare =
            std::min(it->second.frames.size(), rec.frame_paths.size());
        for (std::size_t k = 0; k < n_compare; ++k) {
            const Canvas truth = load_canvas(base / rec.frame_paths[k]);
            const Canvas pred = load_canvas(predictions_dir / it->second.frames[k]);
            if (truth.width() != pred.width() || truth.height() != pred.height()) continue;
            double acc = 0.0;
            for (std::size_t px = 0; px < truth.pixels().size(); ++px) {
                const Color a = truth.pixels()[px], b = pred.pixels()[px];
                const double dr = (a.r - b.r) / 255.0;
                const double dg = (a.g - b.g) / 255.0;
                const double db = (a.b - b.b) / 255.0;
                acc += dr * dr + dg * dg + db * db;
            }
            mse_sum += acc / (static_cast<double>(truth.pixels().size()) * 3.0);
            ++report.compared_frames;
        }
    }

    const double total = static_cast<double>(records.size());
    report.label_accuracy = correct / total;
    report.coverage = covered / total;
    report.halt_step_exact = halt_given > 0 ? static_cast<double>(halt_right) / halt_given : 0.0;
    report.mean_frame_mse =
        report.compared_frames > 0 ? mse_sum / report.compared_frames : 0.0;
    return report;
}

}  // namespace vistask
