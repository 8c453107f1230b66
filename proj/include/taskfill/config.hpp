#pragma once

#include <cstdint>
#include <filesystem>

#include <nlohmann/json.hpp>

#include "taskfill/dataset.hpp"
#include "taskfill/denoiser.hpp"
#include "taskfill/schedule.hpp"
#include "taskfill/textcond.hpp"

namespace taskfill {

struct ScheduleParams {
    int T = 1000;
    double beta_start = 1e-4;
    double beta_end = 0.02;

    NoiseSchedule build() const { return build_schedule(T, beta_start, beta_end, ScheduleKind::linear); }
};

nlohmann::json to_json(const ScheduleParams& p);
ScheduleParams schedule_params_from_json(const nlohmann::json& j);

/// Every knob of a training run; serialized verbatim into each checkpoint manifest.
struct TrainConfig {
    int64_t steps = 20000;
    int batch_size = 64;
    double learning_rate = 1e-4;
    uint64_t seed = 0;
    int64_t checkpoint_every = 1000;
    int64_t log_every = 50;
    double grad_clip = 1.0;
    double cond_dropout = 0.1;
    ScheduleParams schedule;
    DenoiserConfig model;
    TextEncoderConfig text;
    RoutingConfig routing;
    SceneSpec scene;

    /// Throws std::invalid_argument when a field is out of range.
    void validate() const;
};

nlohmann::json to_json(const TrainConfig& c);
TrainConfig train_config_from_json(const nlohmann::json& j);
TrainConfig load_train_config(const std::filesystem::path& path);

}  // namespace taskfill
