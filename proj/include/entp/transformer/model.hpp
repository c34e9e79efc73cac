#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "entp/numerics/tensor.hpp"
#include "entp/transformer/config.hpp"

namespace entp::tf {

using num::Tensor;

// A batch of equal-length sequences, either token ids or real vectors.
template <typename T>
struct Inputs {
  std::size_t batch = 1;
  std::size_t seq = 0;
  std::vector<int> tokens;  // [batch * seq] for token io
  std::vector<T> vectors;   // [batch * seq * width] for vector io

  static Inputs from_tokens(std::vector<int> ids, std::size_t batch, std::size_t seq);
  static Inputs from_vectors(std::vector<T> values, std::size_t batch, std::size_t seq);
  bool is_tokens() const { return !tokens.empty(); }
  // First `len` positions of every row.
  Inputs prefix(std::size_t len) const;
};

template <typename T>
struct LayerParams {
  Tensor<T> ln1_g, ln1_b;
  Tensor<T> wq, bq, wk, bk, wv, bv, wo, bo;
  Tensor<T> ln2_g, ln2_b;
  Tensor<T> w1, b1, w2, b2;
};

// Pre-norm GPT-2 style transformer. Encoder and decoder differ only in the
// attention mask carried by the config.
template <typename T>
class Model {
 public:
  Model(ModelConfig config, std::uint64_t init_seed);
  // Handles share storage, so copies would alias parameters; use copy_weights.
  Model(const Model&) = delete;
  Model& operator=(const Model&) = delete;
  Model(Model&&) noexcept = default;
  Model& operator=(Model&&) noexcept = default;

  const ModelConfig& config() const { return config_; }

  // Fixed order; checkpoints serialize in this order.
  const std::vector<std::pair<std::string, Tensor<T>>>& named_parameters() const { return params_; }
  std::vector<Tensor<T>> parameters() const;
  std::size_t parameter_count() const;
  Tensor<T>& parameter(const std::string& name);
  const Tensor<T>& parameter(const std::string& name) const;

  // Per-position outputs [batch*seq, V] (token io), [batch*seq, output_dim]
  // (vector io), or the final residual stream [batch*seq, D] (theory mode).
  // `emit_rows` restricts the rows passed through the output head.
  // `layer_trace` receives the residual stream after every layer.
  Tensor<T> forward(const Inputs<T>& inputs, const MaskSpec& mask, std::span<const std::size_t> emit_rows = {},
                    std::vector<Tensor<T>>* layer_trace = nullptr) const;
  Tensor<T> forward(const Inputs<T>& inputs) const { return forward(inputs, config_.mask); }

  const Tensor<T>* token_embedding() const { return tok_emb_.defined() ? &tok_emb_ : nullptr; }
  const Tensor<T>* positional_embedding() const { return pos_emb_.defined() ? &pos_emb_ : nullptr; }
  const LayerParams<T>& layer(std::size_t i) const { return layers_.at(i); }
  const Tensor<T>& lnf_g() const { return lnf_g_; }
  const Tensor<T>& lnf_b() const { return lnf_b_; }
  const Tensor<T>& head_w() const { return head_w_; }
  const Tensor<T>& head_b() const { return head_b_; }
  const Tensor<T>& read_in_w() const { return read_in_w_; }
  const Tensor<T>& read_in_b() const { return read_in_b_; }

  T score_scale() const;

 private:
  Tensor<T> embed(const Inputs<T>& inputs) const;
  Tensor<T>& add_param(const std::string& name, num::Shape shape);
  void rebind();

  ModelConfig config_;
  std::vector<std::pair<std::string, Tensor<T>>> params_;
  Tensor<T> tok_emb_, read_in_w_, read_in_b_, pos_emb_;
  std::vector<LayerParams<T>> layers_;
  Tensor<T> lnf_g_, lnf_b_, head_w_, head_b_;
};

// Copies parameter values between models of identical architecture (any mask).
template <typename Dst, typename Src>
void copy_weights(Model<Dst>& dst, const Model<Src>& src);

}  // namespace entp::tf
