#pragma once

#include <cstdint>
#include <vector>

#include <torch/torch.h>

namespace taskfill {

enum class ScheduleKind { linear };

/// Discrete-time noise schedule. alpha_bars[t] is the cumulative product of (1 - betas[s]) for s <= t.
struct NoiseSchedule {
    int T = 0;
    std::vector<double> betas;
    std::vector<double> alpha_bars;

    double alpha_bar(int t) const { return alpha_bars.at(static_cast<size_t>(t)); }
};

NoiseSchedule build_schedule(int T, double beta_start, double beta_end,
                             ScheduleKind kind = ScheduleKind::linear);

/// Closed-form forward process: sqrt(abar_t) * x0 + sqrt(1 - abar_t) * eps.
torch::Tensor add_noise(const torch::Tensor& x0, int t, const torch::Tensor& eps,
                        const NoiseSchedule& sched);

/// Batched forward process; `t` holds one timestep per leading-dimension entry of x0.
torch::Tensor add_noise(const torch::Tensor& x0, const torch::Tensor& t, const torch::Tensor& eps,
                        const NoiseSchedule& sched);

/// Same as add_noise but with an explicit cumulative alpha, used when blending at the clean limit.
torch::Tensor add_noise_with_alpha_bar(const torch::Tensor& x0, double alpha_bar,
                                       const torch::Tensor& eps);

}  // namespace taskfill
