#pragma once

#include <cstdint>
#include <vector>

#include <nlohmann/json.hpp>
#include <torch/torch.h>

#include "taskfill/layers.hpp"

namespace taskfill {

struct DenoiserConfig {
    int image_size = 32;
    int image_channels = 3;
    int base_width = 32;
    std::vector<int> channel_mult = {1, 2, 2};
    std::vector<int> attention_resolutions = {16, 8};
    int cond_dim = 64;
    int time_embed_dim = 128;
    int heads = 4;

    /// Noisy image, masked image and the mask itself.
    int input_channels() const { return 2 * image_channels + 1; }
    int downsample_factor() const { return 1 << (static_cast<int>(channel_mult.size()) - 1); }
    /// Throws std::invalid_argument describing the first violated constraint.
    void validate() const;
};

nlohmann::json to_json(const DenoiserConfig& c);
DenoiserConfig denoiser_config_from_json(const nlohmann::json& j);

class ResBlockImpl : public torch::nn::Module {
public:
    ResBlockImpl(int64_t in_ch, int64_t out_ch, int64_t time_dim);
    torch::Tensor forward(const torch::Tensor& x, const torch::Tensor& temb);

private:
    torch::nn::GroupNorm norm1_{nullptr}, norm2_{nullptr};
    torch::nn::Conv2d conv1_{nullptr}, conv2_{nullptr}, skip_{nullptr};
    torch::nn::Linear time_proj_{nullptr};
};
TORCH_MODULE(ResBlock);

/// Per-pixel tokens attend to the text sequence (and optionally to each other), then a feed-forward.
class SpatialTransformerImpl : public torch::nn::Module {
public:
    SpatialTransformerImpl(int64_t channels, int64_t cond_dim, int64_t heads, bool self_attention);
    torch::Tensor forward(const torch::Tensor& x, const torch::Tensor& cond);

private:
    bool self_attention_;
    torch::nn::GroupNorm norm_{nullptr};
    torch::nn::Conv2d proj_in_{nullptr}, proj_out_{nullptr};
    torch::nn::LayerNorm ln_self_{nullptr}, ln_cross_{nullptr}, ln_ff_{nullptr};
    MultiHeadAttention self_attn_{nullptr}, cross_attn_{nullptr};
    torch::nn::Linear ff1_{nullptr}, ff2_{nullptr};
};
TORCH_MODULE(SpatialTransformer);

/// Noise predictor over the extended input [noisy image, image * (1 - mask), mask].
class DenoiserImpl : public torch::nn::Module {
public:
    explicit DenoiserImpl(const DenoiserConfig& cfg);

    const DenoiserConfig& config() const { return cfg_; }

    /// x_in: [B, 2C+1, H, W]; t: [B] integer timesteps; cond: [B, L, cond_dim] -> [B, C, H, W]
    torch::Tensor forward(const torch::Tensor& x_in, const torch::Tensor& t, const torch::Tensor& cond);

private:
    struct Level {
        ResBlock res{nullptr};
        SpatialTransformer attn{nullptr};
        torch::nn::Conv2d resample{nullptr};
    };

    DenoiserConfig cfg_;
    torch::nn::Linear time_fc1_{nullptr}, time_fc2_{nullptr};
    torch::nn::Conv2d input_conv_{nullptr};
    std::vector<Level> down_;
    ResBlock mid_res1_{nullptr}, mid_res2_{nullptr};
    SpatialTransformer mid_attn_{nullptr};
    std::vector<Level> up_;
    torch::nn::GroupNorm out_norm_{nullptr};
    torch::nn::Conv2d out_conv_{nullptr};
};
TORCH_MODULE(Denoiser);

/// Deterministic initialization: identical (cfg, seed) give bit-identical parameters.
Denoiser init_denoiser(const DenoiserConfig& cfg, uint64_t seed);

/// Builds [noisy, image * (1 - mask), mask] along channels. image/noisy: [B, C, H, W]; mask: [B, 1, H, W].
torch::Tensor build_extended_input(const torch::Tensor& noisy, const torch::Tensor& image, const torch::Tensor& mask);

/// Runs the network after checking channel counts against its config.
torch::Tensor predict_noise(DenoiserImpl& model, const torch::Tensor& x_in, const torch::Tensor& t,
                            const torch::Tensor& cond);

/// Sinusoidal timestep features, [B] -> [B, dim].
torch::Tensor timestep_embedding(const torch::Tensor& t, int64_t dim);

/// FNV-1a hash over every parameter's bytes in registration order.
uint64_t parameter_hash(const torch::nn::Module& module);
int64_t parameter_count(const torch::nn::Module& module);

}  // namespace taskfill
