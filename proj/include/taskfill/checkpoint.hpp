#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>
#include <torch/torch.h>

#include "taskfill/config.hpp"

namespace taskfill {

constexpr int kCheckpointSchemaVersion = 1;

/// Everything inference needs: both networks, the schedule and provenance.
struct ModelBundle {
    TrainConfig config;
    NoiseSchedule schedule;
    Denoiser denoiser{nullptr};
    TextEncoder text{nullptr};
    int64_t step = 0;
    std::string checkpoint_id;
};

/// Fresh networks for `config` (task prompts registered).
ModelBundle init_model(const TrainConfig& config);

/// Content id derived from step and parameter bytes.
std::string compute_checkpoint_id(const ModelBundle& model);

struct CheckpointPaths {
    static constexpr const char* kManifest = "manifest.json";
    static constexpr const char* kDenoiser = "denoiser.pt";
    static constexpr const char* kText = "text_encoder.pt";
    static constexpr const char* kOptimizer = "optimizer.pt";
};

/// Writes a checkpoint directory atomically (temporary sibling, then rename). Returns the final path.
std::filesystem::path save_checkpoint(const std::filesystem::path& run_dir, ModelBundle& model,
                                      torch::optim::Optimizer* optimizer, const nlohmann::json& metrics);

/// Accepts a checkpoint directory or a run directory (resolved through its `latest` pointer).
std::filesystem::path resolve_checkpoint(const std::filesystem::path& path);
std::optional<std::filesystem::path> latest_checkpoint(const std::filesystem::path& run_dir);

nlohmann::json read_manifest(const std::filesystem::path& checkpoint_dir);
ModelBundle load_model(const std::filesystem::path& path);
void load_optimizer(const std::filesystem::path& checkpoint_dir, torch::optim::Optimizer& optimizer);

/// Atomic text write (temporary file, then rename).
void write_file_atomic(const std::filesystem::path& path, const std::string& contents);

}  // namespace taskfill
