#pragma once

#include <torch/torch.h>

namespace taskfill {

/// Multi-head attention; queries come from `x`, keys and values from `context`.
class MultiHeadAttentionImpl : public torch::nn::Module {
public:
    MultiHeadAttentionImpl(int64_t query_dim, int64_t context_dim, int64_t heads);

    /// x: [B, N, query_dim]; context: [B, M, context_dim] -> [B, N, query_dim]
    torch::Tensor forward(const torch::Tensor& x, const torch::Tensor& context);

private:
    int64_t heads_;
    int64_t head_dim_;
    torch::nn::Linear to_q_{nullptr}, to_k_{nullptr}, to_v_{nullptr}, to_out_{nullptr};
};
TORCH_MODULE(MultiHeadAttention);

/// Number of GroupNorm groups for `channels`: the largest divisor not above `preferred`.
int64_t norm_groups(int64_t channels, int64_t preferred = 8);

}  // namespace taskfill
