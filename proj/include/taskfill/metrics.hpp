#pragma once

#include <Eigen/Dense>
#include <torch/torch.h>

#include "taskfill/maskgen.hpp"

namespace taskfill {

class FeatureExtractorImpl;

struct FrechetResult {
    double distance = 0.0;
    /// Covariance was rank-deficient and a diagonal ridge was added.
    bool regularized = false;
    /// Negative eigenvalues larger than 1e-6 in magnitude were clipped in the matrix square root.
    bool clipped_negative = false;
    double min_eigenvalue = 0.0;
};

/// ||mu_a - mu_b||^2 + tr(S_a + S_b - 2 (S_a S_b)^{1/2}); rows are samples.
FrechetResult frechet_distance(const Eigen::MatrixXd& feats_a, const Eigen::MatrixXd& feats_b);
FrechetResult frechet_distance(const torch::Tensor& feats_a, const torch::Tensor& feats_b);

/// Continuous crop window in pixel units: [x0, x1) x [y0, y1).
struct CropWindow {
    double x0 = 0, y0 = 0, x1 = 0, y1 = 0;
};

/// Tight box of the mask grown by `pad_fraction` of its size on every side, clipped to the frame.
CropWindow local_crop_window(const Mask& mask, double pad_fraction = 0.1);

/// Bilinear resample of `window` from image [C, H, W] to [C, out_size, out_size].
torch::Tensor crop_resample(const torch::Tensor& image, const CropWindow& window, int out_size);

torch::Tensor local_crop(const torch::Tensor& image, const Mask& mask, int out_size = 32);

/// Probability the extractor assigns to the caption's (color, shape) class on the local crop.
double alignment_score(const torch::Tensor& image, const Mask& mask, const std::string& caption,
                       FeatureExtractorImpl& extractor);

struct ReconstructionError {
    double mse_inside = 0.0;
    double feature_l2 = 0.0;
};

/// Pixel MSE over masked pixels (all channels) and extractor-feature L2 between the local crops.
ReconstructionError reconstruction_error(const torch::Tensor& pred, const torch::Tensor& gt, const Mask& mask,
                                         FeatureExtractorImpl& extractor);
/// Pixel term only.
double masked_mse(const torch::Tensor& pred, const torch::Tensor& gt, const Mask& mask);

/// Spearman rank correlation with average ranks for ties.
double spearman(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace taskfill
