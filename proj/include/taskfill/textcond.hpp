#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>
#include <torch/torch.h>

#include "taskfill/layers.hpp"

namespace taskfill {

enum class TaskPromptName { ctxt, obj, shape };

std::string to_string(TaskPromptName name);
TaskPromptName task_prompt_from_string(std::string_view s);

/// Closed caption grammar: "" or "a <color> <shape>".
inline const std::vector<std::string> kColors = {"red", "green", "blue", "yellow"};
inline const std::vector<std::string> kShapes = {"circle", "square", "triangle"};

std::string make_caption(int color, int shape);
/// Parses a grammar caption into (color, shape) indices; nullopt for anything outside the grammar.
std::optional<std::pair<int, int>> parse_caption(std::string_view caption);
/// Every non-empty caption the grammar admits.
std::vector<std::string> all_captions();

constexpr int64_t kPadId = 0;
constexpr int64_t kBosId = 1;
constexpr int64_t kEosId = 2;

/// Token strings to dense ids. Ordinary words come first, then task pseudo-tokens in registration order.
class Vocabulary {
public:
    /// Special tokens plus the caption-grammar words.
    static Vocabulary caption_vocabulary();

    int64_t id(std::string_view token) const;
    bool contains(std::string_view token) const;
    const std::string& token(int64_t id) const { return tokens_.at(static_cast<size_t>(id)); }
    int64_t size() const { return static_cast<int64_t>(tokens_.size()); }
    /// Ids below this value are ordinary tokens with rows in the word table.
    int64_t ordinary_count() const { return ordinary_count_; }

    /// Adds `count` pseudo-tokens named <p>_1..<p>_count; returns the first id.
    int64_t add_task_tokens(const std::string& prefix, int count);
    bool is_task_token(int64_t id) const { return id >= ordinary_count_ && id < size(); }

    nlohmann::json to_json() const;
    static Vocabulary from_json(const nlohmann::json& j);

private:
    void add(const std::string& token);

    std::vector<std::string> tokens_;
    std::map<std::string, int64_t, std::less<>> index_;
    int64_t ordinary_count_ = 0;
};

/// Fixed-length id sequence: BOS, content, EOS, then PAD up to the model sequence length.
struct PromptTokens {
    std::vector<int64_t> ids;
    friend bool operator==(const PromptTokens&, const PromptTokens&) = default;
};

/// Throws std::invalid_argument for out-of-vocabulary words.
PromptTokens tokenize(std::string_view text, const Vocabulary& vocab, int seq_len);

struct TaskPrompt {
    TaskPromptName name;
    int token_count = 0;
    int64_t first_id = 0;
    torch::Tensor embeddings;  // [token_count, embed_dim], trainable
};

enum class ComposeMode { suffix, alone };

/// suffix: caption tokens then task tokens before EOS. alone: only task tokens (caption must be absent).
PromptTokens compose_prompt(const std::optional<std::string>& caption, const TaskPrompt& task,
                            ComposeMode mode, const Vocabulary& vocab, int seq_len);

struct TextEncoderConfig {
    int seq_len = 24;
    int embed_dim = 64;
    int cond_dim = 64;
    int layers = 2;
    int heads = 4;
    int prompt_tokens = 10;
    double init_std = 0.02;
};

nlohmann::json to_json(const TextEncoderConfig& c);
TextEncoderConfig text_encoder_config_from_json(const nlohmann::json& j);

/// Caption encoder: token lookup (task pseudo-tokens from their own trainable tables), learned
/// positions, a small pre-norm transformer and a projection to the cross-attention width.
class TextEncoderImpl : public torch::nn::Module {
public:
    TextEncoderImpl(const TextEncoderConfig& cfg, uint64_t seed);

    const TextEncoderConfig& config() const { return cfg_; }
    const Vocabulary& vocab() const { return vocab_; }

    /// Fails on a duplicate name. Embeddings ~ N(0, init_std) from `seed`.
    TaskPrompt register_task_prompt(TaskPromptName name, int token_count, uint64_t seed);
    const TaskPrompt& task_prompt(TaskPromptName name) const;
    bool has_task_prompt(TaskPromptName name) const;

    PromptTokens tokenize(std::string_view text) const;
    PromptTokens compose(const std::optional<std::string>& caption, TaskPromptName task, ComposeMode mode) const;

    /// [B, L] ids -> [B, L, cond_dim]
    torch::Tensor forward(const torch::Tensor& ids);
    torch::Tensor encode(const std::vector<PromptTokens>& batch);
    torch::Tensor encode(const PromptTokens& tokens);

private:
    struct Block {
        torch::nn::LayerNorm norm1{nullptr}, norm2{nullptr};
        MultiHeadAttention attn{nullptr};
        torch::nn::Linear fc1{nullptr}, fc2{nullptr};
    };

    TextEncoderConfig cfg_;
    Vocabulary vocab_;
    torch::nn::Embedding word_embedding_{nullptr};
    torch::Tensor position_embedding_;
    std::vector<Block> blocks_;
    torch::nn::LayerNorm final_norm_{nullptr};
    torch::nn::Linear projection_{nullptr};
    std::map<TaskPromptName, TaskPrompt> prompts_;
};
TORCH_MODULE(TextEncoder);

/// (1 - alpha) * e_ctxt + alpha * e_shape, elementwise.
torch::Tensor interpolate_embeddings(const torch::Tensor& e_ctxt, const torch::Tensor& e_shape, double alpha);
/// Per-example alpha: `alpha` is [B], embeddings are [B, L, D].
torch::Tensor interpolate_embeddings(const torch::Tensor& e_ctxt, const torch::Tensor& e_shape,
                                     const torch::Tensor& alpha);

/// Registers P_ctxt, P_obj and P_shape with seeds derived from `seed`.
void register_default_task_prompts(TextEncoderImpl& encoder, uint64_t seed);

}  // namespace taskfill
