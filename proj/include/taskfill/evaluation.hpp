#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "taskfill/checkpoint.hpp"
#include "taskfill/extractor.hpp"

namespace taskfill {

struct EvalOptions {
    int n = 200;
    uint64_t seed = 0;
    int steps = 50;
    /// Requests sampled together in one batch.
    int batch = 25;
    bool verbose = false;
};

/// Object mode on the bounding box of an existing object with a caption naming a different class.
struct ObjectSuiteResult {
    int n = 0;
    double agreement = 0.0;       // extractor argmax equals the caption's class
    double mean_alignment = 0.0;  // mean probability of the caption's class
    nlohmann::json to_json() const;
};

/// Removal mode over one object's dilated box, against a context-mode ablation steered by P_obj.
struct RemovalSuiteResult {
    int n = 0;
    double background_rate = 0.0;
    double ablation_background_rate = 0.0;
    double margin() const { return background_rate - ablation_background_rate; }
    nlohmann::json to_json() const;
};

/// Shape mode at several fitting ratios; IoU of the caption-colored pixels with the mask.
struct ShapeSuiteResult {
    int n = 0;
    std::vector<double> alphas;
    std::vector<double> mean_iou;
    double spearman_rho = 0.0;  // pooled over all (alpha, IoU) pairs
    bool monotone = false;
    nlohmann::json to_json() const;
};

/// Free-form masks on held-out scenes: context mode against object mode with random captions.
struct ContextSuiteResult {
    int n = 0;
    double proxy_fid_context = 0.0;
    double proxy_fid_object = 0.0;
    double proxy_local_fid_context = 0.0;
    double proxy_local_fid_object = 0.0;
    double mse_inside_context = 0.0;
    double feature_l2_context = 0.0;
    bool regularized = false;
    nlohmann::json to_json() const;
};

ObjectSuiteResult run_object_suite(ModelBundle& model, FeatureExtractorImpl& extractor, const EvalOptions& opt);
RemovalSuiteResult run_removal_suite(ModelBundle& model, FeatureExtractorImpl& extractor, const EvalOptions& opt);
ShapeSuiteResult run_shape_suite(ModelBundle& model, const EvalOptions& opt,
                                 const std::vector<double>& alphas = {0.1, 0.5, 0.95});
ContextSuiteResult run_context_suite(ModelBundle& model, FeatureExtractorImpl& extractor, const EvalOptions& opt);

/// Fraction of masked pixels whose nearest palette color (object colors plus the scene's
/// background colors) is `color`.
double color_fill_fraction(const torch::Tensor& image, const Mask& mask, int color, const Scene& scene);

/// Runs one named suite and wraps the result with checkpoint and extractor provenance.
nlohmann::json evaluate_suite(const std::string& suite, ModelBundle& model, TrainedExtractor& extractor,
                              const EvalOptions& opt);

/// Extractor location used when none is given: next to the checkpoint's run directory.
std::filesystem::path default_extractor_dir(const std::filesystem::path& checkpoint);

}  // namespace taskfill
