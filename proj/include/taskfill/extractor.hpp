#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>
#include <torch/torch.h>

#include "taskfill/dataset.hpp"

namespace taskfill {

/// Object classes are color * 3 + shape; the last class means "no object" (background only).
constexpr int64_t kObjectClasses = 13;
constexpr int64_t kBackgroundClass = 12;

struct ExtractorConfig {
    int input_size = 32;
    int width = 32;
    int feature_dim = 64;
};

/// Small CNN over 32x32 inputs. Penultimate features feed the proxy-Frechet metrics; heads predict
/// the object class of a crop, which objects a full scene contains, and the background kind.
class FeatureExtractorImpl : public torch::nn::Module {
public:
    explicit FeatureExtractorImpl(const ExtractorConfig& cfg = {});

    struct Outputs {
        torch::Tensor features;        // [B, F]
        torch::Tensor object_logits;   // [B, 13]
        torch::Tensor contains_logits; // [B, 12]
        torch::Tensor background_logits; // [B, 2]
    };

    Outputs forward(const torch::Tensor& images);
    torch::Tensor features(const torch::Tensor& images);
    torch::Tensor object_probabilities(const torch::Tensor& images);

    const ExtractorConfig& config() const { return cfg_; }

private:
    ExtractorConfig cfg_;
    torch::nn::Sequential trunk_{nullptr};
    torch::nn::Linear embed_{nullptr};
    torch::nn::Linear object_head_{nullptr}, contains_head_{nullptr}, background_head_{nullptr};
};
TORCH_MODULE(FeatureExtractor);

struct ExtractorRecord {
    uint64_t seed = 0;
    int64_t train_steps = 0;
    double heldout_object_accuracy = 0.0;
    int64_t heldout_count = 0;

    nlohmann::json to_json() const;
    static ExtractorRecord from_json(const nlohmann::json& j);
};

/// Minimum held-out object accuracy before any metric may use the extractor.
constexpr double kExtractorAccuracyGate = 0.95;

struct TrainedExtractor {
    FeatureExtractor net{nullptr};
    ExtractorRecord record;
};

struct ExtractorTrainOptions {
    uint64_t seed = 1234;
    int64_t steps = 3000;
    int batch_size = 64;
    double learning_rate = 2e-3;
    int heldout_scenes = 1000;
    bool verbose = false;
};

/// One labelled crop: object crops are framed like the local-crop protocol around a (possibly
/// dilated) object; background crops come from object-free renders.
struct LabelledCrop {
    torch::Tensor image;  // [3, 32, 32]
    int64_t object_class = kBackgroundClass;
    int background = 0;
};

LabelledCrop sample_labelled_crop(Rng& rng, const SceneSpec& spec, int out_size);

TrainedExtractor train_extractor(const ExtractorTrainOptions& options, const SceneSpec& spec = {});
/// Held-out object-head accuracy on crops from the extractor's held-out seed range.
double evaluate_extractor(FeatureExtractorImpl& net, int scenes, const SceneSpec& spec = {});

void save_extractor(const std::filesystem::path& dir, TrainedExtractor& extractor);
TrainedExtractor load_extractor(const std::filesystem::path& dir);
/// Loads `dir` if present, otherwise trains with `options` and saves there.
TrainedExtractor load_or_train_extractor(const std::filesystem::path& dir, const ExtractorTrainOptions& options,
                                         const SceneSpec& spec = {});

}  // namespace taskfill
