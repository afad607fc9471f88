#pragma once

// Batch dataset generation with per-sample seed isolation, JSON-lines
// manifests, masked-variant export and scoring of external predictions.
// The contract: identical config produces byte-identical output, regardless
// of worker count, and any single sample regenerates from (master seed, id).

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "vistask/oracle.hpp"
#include "vistask/task.hpp"

namespace vistask {

enum class FrameMode { none, single, multi };

std::string frame_mode_name(FrameMode mode);
FrameMode frame_mode_from_name(const std::string& name);
std::string regime_name(MazeRegime regime);
MazeRegime regime_from_name(const std::string& name);

struct TaskConfig {
    TaskKind kind = TaskKind::cycles;
    TaskParams params;                    // size 0 selects the task default
    int count = 0;                        // must be even (balanced labels)
    std::uint64_t master_seed = 0;
    FrameMode frame_mode = FrameMode::multi;
    int resolution = 448;                 // 448 or 224
    std::optional<double> mask_prob;      // masks inputs at generation (224 only)
    RenderStyle style;
    std::string split = "train";
    bool ppm = false;                     // debug: ASCII pixmaps instead of PNG
};

struct ManifestRecord {
    std::uint64_t id = 0;
    std::string task;
    int label = 0;
    std::uint64_t sample_seed = 0;
    std::string params_json;              // task parameters, fixed key order
    std::string input_path;
    std::vector<std::string> frame_paths;
    int num_frames = 0;                   // schedule length T
    std::optional<int> d_target;          // maze only
    std::optional<int> d_max;             // maze only
    std::string split;
    std::string regime;

    std::string to_json_line() const;
    static ManifestRecord from_json_line(const std::string& line);
};

std::vector<ManifestRecord> read_manifest(const std::filesystem::path& path);

// Writes count samples (count/2 per label, label = id % 2) plus a manifest
// sorted by id at <out_dir>/manifest.jsonl. Sample i is generated from
// stable_hash(master_seed, i) in isolation, so workers only affect wall
// time, never bytes. Partial outputs are removed on failure.
std::filesystem::path generate_dataset(const TaskConfig& config,
                                       const std::filesystem::path& out_dir,
                                       int workers = 1);

// Regenerates one sample's files into out_dir (same relative layout).
ManifestRecord regenerate_sample(const TaskConfig& config, std::uint64_t id,
                                 const std::filesystem::path& out_dir);

// Masked copy of a generated dataset: every input image goes through
// patch_mask with the per-sample seed stable_hash(seed, id); frames are
// copied verbatim. Requires resolution 224.
std::filesystem::path export_masked_variant(const std::filesystem::path& manifest_path,
                                            double p, std::uint64_t seed,
                                            const std::filesystem::path& out_dir);

struct ScoreReport {
    double label_accuracy = 0.0;   // missing predictions count as wrong
    double halt_step_exact = 0.0;  // among predictions providing halt_step
    double mean_frame_mse = 0.0;   // channels scaled to [0,1]
    double coverage = 0.0;         // fraction of manifest ids predicted
    int compared_frames = 0;

    std::string to_json() const;
};

// predictions_dir must hold predictions.jsonl with per-line records
// {"id": N, "label": 0|1, "halt_step": N?, "frames": [paths]?}; frame paths
// are relative to predictions_dir and are compared index-by-index against
// the manifest's frame files.
ScoreReport score_predictions(const std::filesystem::path& manifest_path,
                              const std::filesystem::path& predictions_dir);

// Byte-compares a freshly regenerated sample against the files a manifest
// row points at; returns the mismatched file paths (empty = identical).
std::vector<std::string> verify_sample(const std::filesystem::path& manifest_path,
                                       std::uint64_t id);

// Reconstructs the generating config of a dataset from its manifest plus
// the dataset directory layout (used by the inspect command).
TaskConfig config_from_manifest_record(const ManifestRecord& record);

}  // namespace vistask
