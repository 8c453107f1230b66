#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>
#include <torch/torch.h>

#include "taskfill/maskgen.hpp"
#include "taskfill/textcond.hpp"

namespace taskfill {

enum class ShapeKind { circle = 0, square = 1, triangle = 2 };
enum class BackgroundKind { solid = 0, vertical_gradient = 1 };

using Rgb = std::array<float, 3>;

/// Object palette indexed like kColors; values in [0, 1].
const std::array<Rgb, 4>& object_palette();
/// Background palette; chosen far from every object color.
const std::array<Rgb, 4>& background_palette();

struct SceneObject {
    ShapeKind shape = ShapeKind::circle;
    int color = 0;
    Mask segmentation;
    Box bbox;

    std::string caption() const { return make_caption(color, static_cast<int>(shape)); }
    /// Classifier label: color * #shapes + shape.
    int class_id() const { return color * static_cast<int>(kShapes.size()) + static_cast<int>(shape); }
};

struct Scene {
    torch::Tensor image;  // [3, H, W] in [-1, 1]
    std::vector<SceneObject> objects;
    BackgroundKind background = BackgroundKind::solid;
    int background_color = 0;
    int background_color2 = 0;  // bottom color for gradients
    uint64_t seed = 0;
};

struct SceneSpec {
    int size = 32;
    int min_radius = 4;
    int max_radius = 10;
    int min_objects = 1;
    int max_objects = 2;
    /// Required empty space between the bounding boxes of two objects.
    int min_gap = 3;
    int max_retries = 200;
};

/// Scenes are a pure function of (seed, spec).
Scene generate_scene(uint64_t seed, const SceneSpec& spec = {});
/// Renders only the background of a scene (no objects).
torch::Tensor render_background(BackgroundKind kind, int color, int color2, int size);
Mask rasterize_shape(ShapeKind shape, double cx, double cy, double radius, int size);

enum class Task { ctxt, obj, shape, t2i };
std::string to_string(Task task);
Task task_from_string(const std::string& s);

struct RoutingConfig {
    double t2i_probability = 0.2;
    /// Relative weights of ctxt, obj, shape inside the main-task budget.
    std::array<double, 3> main_split = {1.0, 1.0, 1.0};
    double min_alpha = 0.05;
    BrushParams brush;
};

nlohmann::json to_json(const RoutingConfig& c);
RoutingConfig routing_config_from_json(const nlohmann::json& j);

struct TrainingExample {
    torch::Tensor image;  // [3, H, W]
    Mask mask;
    Task task = Task::ctxt;
    std::optional<std::string> caption;
    /// ctxt: P_ctxt alone; obj: caption + P_obj; t2i: plain caption; shape: caption + P_ctxt.
    PromptTokens prompt_tokens;
    /// shape only: caption + P_shape, interpolated with prompt_tokens by alpha.
    std::optional<PromptTokens> shape_tokens;
    std::optional<double> alpha;
    std::optional<Box> bbox;
    int kernel_size = 0;
    int iterations = 0;
};

Task route_task(Rng& rng, const RoutingConfig& cfg);

TrainingExample make_training_example(const Scene& scene, Rng& rng, const TextEncoderImpl& text,
                                      const RoutingConfig& cfg = {});

/// Seed ranges that keep training, held-out evaluation and extractor data disjoint.
namespace seeds {
constexpr uint64_t kEvalBase = 1'000'000'000ULL;
constexpr uint64_t kEvalCount = 2'000;
constexpr uint64_t kExtractorBase = 2'000'000'000ULL;
constexpr uint64_t kExtractorHeldOutBase = 2'500'000'000ULL;
/// Training scene seed for (run seed, step, index within batch); always below kEvalBase.
uint64_t training_scene(uint64_t run_seed, int64_t step, int64_t index);
}  // namespace seeds

/// The fixed held-out evaluation scenes (index < seeds::kEvalCount).
Scene eval_scene(uint64_t index, const SceneSpec& spec = {});

/// Writes images, masks and a JSON-lines manifest of `count` routed examples into `dir`.
void export_dataset(const std::filesystem::path& dir, int count, uint64_t seed, const TextEncoderImpl& text,
                    const RoutingConfig& cfg = {}, const SceneSpec& spec = {});

}  // namespace taskfill
