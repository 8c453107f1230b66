#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <ATen/core/Generator.h>
#include <nlohmann/json.hpp>
#include <torch/torch.h>

#include "taskfill/checkpoint.hpp"
#include "taskfill/maskgen.hpp"
#include "taskfill/schedule.hpp"

namespace taskfill {

/// Positive and negative conditioning ([B, L, D] each) combined with scale w.
struct GuidanceSpec {
    torch::Tensor positive;
    torch::Tensor negative;
    double w = 1.0;
};

/// eps = f(x_in, t, cond) with x_in the extended input and t a [B] tensor.
using NoisePredictor = std::function<torch::Tensor(const torch::Tensor&, const torch::Tensor&, const torch::Tensor&)>;

NoisePredictor denoiser_predictor(DenoiserImpl& model);

/// w * eps(positive) + (1 - w) * eps(negative). Algebraically this is the usual
/// eps(negative) + w * (eps(positive) - eps(negative)), so scales carry over unchanged.
torch::Tensor guided_noise(const NoisePredictor& predictor, const torch::Tensor& x_in, const torch::Tensor& t,
                           const GuidanceSpec& g);
torch::Tensor guided_noise(DenoiserImpl& model, const torch::Tensor& x_in, int t, const GuidanceSpec& g);

struct StepOutput {
    torch::Tensor x_prev;
    torch::Tensor x0_pred;
    torch::Tensor eps;
};

/// Builds the extended network input from the current noisy sample.
using InputBuilder = std::function<torch::Tensor(const torch::Tensor&)>;

/// One strided DDIM update from t to t_prev (t_prev = -1 means the clean image).
/// eta = 0 is deterministic; eta > 0 injects noise from `generators` (one per batch entry).
StepOutput denoise_step(const NoisePredictor& predictor, const torch::Tensor& x_t, const InputBuilder& build_input,
                        int t, int t_prev, const GuidanceSpec& g, const NoiseSchedule& sched, double eta = 0.0,
                        std::vector<at::Generator>* generators = nullptr);

/// Outside the mask, replaces x_t with the user image noised to level t (t = -1: the image itself).
/// mask: [B, 1, H, W] with 1 on the region to fill.
torch::Tensor blend_known(const torch::Tensor& x_t, const torch::Tensor& x0, const torch::Tensor& mask, int t,
                          const NoiseSchedule& sched, std::vector<at::Generator>& generators);

/// Descending timesteps visited by an n-step strided sampler.
std::vector<int> sampling_timesteps(int T, int steps);

/// Draws [1, ...shape] standard normals from each generator and stacks them.
torch::Tensor randn_per_example(std::vector<at::Generator>& generators, at::IntArrayRef shape);
std::vector<at::Generator> make_generators(const std::vector<uint64_t>& seeds);

/// Batched masked sampling with known-region blending and a final hard composite.
/// images: [B, 3, H, W]; masks: [B, 1, H, W].
torch::Tensor sample_inpaint(DenoiserImpl& model, const NoiseSchedule& sched, const torch::Tensor& images,
                             const torch::Tensor& masks, const GuidanceSpec& g, int steps,
                             const std::vector<uint64_t>& seeds);

enum class InpaintMode { context, removal, object, shape };
std::string to_string(InpaintMode m);
InpaintMode inpaint_mode_from_string(const std::string& s);

/// Negative conditioning for object mode (other modes fix their own).
enum class ObjectNegative { empty, ctxt };

struct InpaintRequest {
    torch::Tensor image;  // [3, H, W] in [-1, 1]
    Mask mask;
    InpaintMode mode = InpaintMode::context;
    std::optional<std::string> caption;
    std::optional<double> alpha;
    std::optional<double> w;
    int steps = 50;
    uint64_t seed = 0;
    ObjectNegative object_negative = ObjectNegative::empty;

    /// Throws RequestError naming the offending field.
    void validate() const;
    double resolved_w() const;
    nlohmann::json echo() const;
};

class RequestError : public std::invalid_argument {
public:
    RequestError(std::string field, const std::string& message)
        : std::invalid_argument(field + ": " + message), field_(std::move(field)) {}
    const std::string& field() const { return field_; }

private:
    std::string field_;
};

double default_guidance_scale(InpaintMode mode);

/// Mode-specific conditioning for one request ([1, L, D] tensors).
GuidanceSpec build_guidance(ModelBundle& model, const InpaintRequest& req);

struct InpaintResult {
    torch::Tensor image;  // [3, H, W]
    nlohmann::json metadata;
};

InpaintResult inpaint(ModelBundle& model, const InpaintRequest& req);

/// Several requests sharing mode, w and steps, sampled as one batch.
std::vector<InpaintResult> inpaint_batch(ModelBundle& model, const std::vector<InpaintRequest>& reqs);

}  // namespace taskfill
