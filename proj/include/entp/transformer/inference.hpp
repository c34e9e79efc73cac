#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "entp/transformer/model.hpp"

namespace entp::tf {

// Instrumentation for the non-autograd inference path. `flops` counts two
// per multiply-accumulate in projections, attention scores and weighted
// sums; elementwise work (norms, activations, exp) is not counted.
struct OpCounters {
  std::uint64_t flops = 0;
  // Floats persisted across token steps (the KV cache).
  std::uint64_t precomputed_floats = 0;
  // Peak floats live at once for the current token's computation.
  std::uint64_t additional_floats_peak = 0;

  void note_live(std::uint64_t floats) {
    if (floats > additional_floats_peak) additional_floats_peak = floats;
  }
};

struct LinearAttentionStats {
  // Output rows plus the per-query accumulators, in floats.
  std::uint64_t auxiliary_floats = 0;
  std::uint64_t flops = 0;
};

// Softmax attention that never materializes the score matrix: per query it
// streams over keys keeping a running numerator, denominator and max.
// q, k: [n, d]; v: [n, dv]; returns [n, dv]. Scores are q.k * score_scale.
template <typename T>
std::vector<T> attention_linear_memory(std::span<const T> q, std::span<const T> k, std::span<const T> v,
                                       std::size_t n, std::size_t d, std::size_t dv, bool causal,
                                       T score_scale = T(1), LinearAttentionStats* stats = nullptr);

// Reference softmax attention through an explicit [n, n] probability matrix.
template <typename T>
std::vector<T> attention_materialized(std::span<const T> q, std::span<const T> k, std::span<const T> v,
                                      std::size_t n, std::size_t d, std::size_t dv, bool causal,
                                      T score_scale = T(1));

// Per-layer keys and values of every consumed position. Append-only.
template <typename T>
class KVCache {
 public:
  explicit KVCache(const ModelConfig& config);

  std::size_t length() const { return length_; }
  std::size_t n_layers() const { return keys_.size(); }
  std::size_t width() const { return width_; }
  std::size_t capacity() const { return capacity_; }
  std::uint64_t stored_floats() const;
  std::span<const T> keys(std::size_t layer) const { return keys_.at(layer); }
  std::span<const T> values(std::size_t layer) const { return values_.at(layer); }

  void append(std::size_t layer, std::span<const T> key, std::span<const T> value);
  void commit_position() { ++length_; }

 private:
  std::vector<std::vector<T>> keys_;
  std::vector<std::vector<T>> values_;
  std::size_t width_;
  std::size_t capacity_;
  std::size_t length_ = 0;
};

// Logits for the token after `prefix`, computed by a from-scratch
// full-attention pass over exactly the prefix. Requires a full-mask model.
template <typename T>
std::vector<T> entp_next_token(const Model<T>& model, std::span<const int> prefix, OpCounters* counters = nullptr);

// Consumes `token` at position cache.length() and returns the logits for the
// next position. Requires a causal-mask model.
template <typename T>
std::vector<T> decoder_next_token(const Model<T>& model, KVCache<T>& cache, int token,
                                  OpCounters* counters = nullptr);

// All per-position outputs of one autograd-free pass with the model's mask.
template <typename T>
Tensor<T> forward_full(const Model<T>& model, std::span<const int> sequence);

// Next-token logits at every position in `positions` (ascending, 0-based)
// for every row, each computed from its own prefix with full attention.
// Rows of the result are ordered [row][position index].
template <typename T>
Tensor<T> entp_training_forward(const Model<T>& model, const Inputs<T>& inputs,
                                std::span<const std::size_t> positions);

enum class GenerationMode { kEntp, kDecoderCached, kDecoderRecompute };

struct GenerationTrace {
  std::vector<std::uint64_t> step_flops;
  std::uint64_t precomputed_floats = 0;
  std::uint64_t additional_floats_peak = 0;
};

// Greedy extension of `seed` by `n_steps` tokens (ties go to the lowest id).
template <typename T>
std::vector<int> generate(const Model<T>& model, std::span<const int> seed, std::size_t n_steps,
                          GenerationMode mode, GenerationTrace* trace = nullptr);

template <typename T>
int argmax(std::span<const T> values);

}  // namespace entp::tf
