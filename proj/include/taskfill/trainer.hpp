#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>
#include <torch/torch.h>

#include "taskfill/checkpoint.hpp"
#include "taskfill/dataset.hpp"

namespace taskfill {

struct TrainingState {
    ModelBundle model;
    std::unique_ptr<torch::optim::Adam> optimizer;

    explicit TrainingState(ModelBundle m);
};

TrainingState make_training_state(const TrainConfig& config);

/// Per-example timesteps, noise and conditioning-dropout flags for one batch.
struct BatchNoise {
    torch::Tensor timesteps;  // [B] long
    torch::Tensor eps;        // [B, C, H, W]
    std::vector<bool> drop_condition;
};

BatchNoise draw_batch_noise(Rng& rng, int64_t batch, const TrainConfig& config);

struct LossTerms {
    torch::Tensor loss;            // scalar, attached to the graph
    torch::Tensor per_example;     // [B], detached
};

/// Mean squared error between eps and the prediction on the extended input, averaged over the batch.
LossTerms batch_loss(TrainingState& state, const std::vector<TrainingExample>& batch, const BatchNoise& noise);

/// Conditioning for a batch: task prompts per example, shape examples interpolated by alpha,
/// dropped entries replaced by the empty-prompt encoding.
torch::Tensor batch_conditioning(TextEncoderImpl& text, const std::vector<TrainingExample>& batch,
                                 const std::vector<bool>& drop);

struct StepResult {
    double loss = 0.0;
    std::map<std::string, double> task_loss;
    std::map<std::string, int> task_count;
    std::map<std::string, double> grad_norms;
};

class NonFiniteLossError : public std::runtime_error {
public:
    NonFiniteLossError(const std::string& what, nlohmann::json dump)
        : std::runtime_error(what), dump_(std::move(dump)) {}
    const nlohmann::json& dump() const { return dump_; }

private:
    nlohmann::json dump_;
};

/// One optimizer update. Only task prompts present in the batch receive gradients.
StepResult training_step(TrainingState& state, const std::vector<TrainingExample>& batch, Rng& rng);

/// Gradient norms by group: denoiser, text_encoder (without task prompts), P_ctxt, P_obj, P_shape.
std::map<std::string, double> gradient_norms(TrainingState& state);

/// The routed batch for `step` of a run; a pure function of (config, step).
std::vector<TrainingExample> make_batch(const TrainConfig& config, const TextEncoderImpl& text, int64_t step);

struct TrainOptions {
    bool resume = false;
    bool smoke_test = true;
    bool verbose = true;
};

/// Runs (or resumes) training into `out_dir`; returns the final checkpoint directory.
std::filesystem::path train(const TrainConfig& config, const std::filesystem::path& out_dir,
                            const TrainOptions& options = {});

/// One short sample per inpainting mode; throws if anything fails or is non-finite.
void smoke_inference(ModelBundle& model);

}  // namespace taskfill
