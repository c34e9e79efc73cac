#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "entp/numerics/ops.hpp"

namespace entp::tf {

using num::AttentionMask;
using num::MaskSpec;

enum class PositionalMode { kLearned, kNone };
enum class IoMode { kToken, kVector };

// Raised when a sequence does not fit the model's context window.
class ContextError : public std::length_error {
 public:
  using std::length_error::length_error;
};

struct ModelConfig {
  std::size_t n_layers = 3;
  std::size_t n_heads = 3;
  std::size_t embed_dim = 192;
  std::size_t vocab_size = 64;
  std::size_t max_context = 64;
  MaskSpec mask{};
  PositionalMode positional = PositionalMode::kLearned;
  // Single head, no layer norms, no 1/sqrt(d) score scaling, no attention
  // biases, and the residual stream is both input and output.
  bool theory_mode = false;
  IoMode io = IoMode::kToken;
  std::size_t input_dim = 0;   // vector io, non-theory
  std::size_t output_dim = 1;  // vector io, non-theory
  std::size_t mlp_ratio = 4;

  // Throws std::invalid_argument describing the first violated invariant.
  void validate() const;
  std::size_t head_dim() const { return embed_dim / n_heads; }
  // Same architecture with a different attention mask.
  ModelConfig with_mask(MaskSpec m) const {
    ModelConfig c = *this;
    c.mask = m;
    return c;
  }
};

// "small", "medium", "large", "small-deep" (layers/heads/width only).
ModelConfig preset(std::string_view name);

ModelConfig theory_config(std::size_t embed_dim, std::size_t n_layers, MaskSpec mask,
                          PositionalMode positional = PositionalMode::kNone, std::size_t max_context = 64);

std::string mask_name(const MaskSpec& mask);
// "causal", "full", or "prefix:<k>".
MaskSpec parse_mask(std::string_view text);

}  // namespace entp::tf
