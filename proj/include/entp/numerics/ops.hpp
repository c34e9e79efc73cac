#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>

#include "entp/numerics/tensor.hpp"

namespace entp::num {

// Raised for any operand shape combination an op does not accept.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when a masked loss has no positions left to average over.
class EmptyLossSupport : public std::invalid_argument {
 public:
  EmptyLossSupport() : std::invalid_argument("empty loss support: every position is masked out") {}
};

enum class AttentionMask { kCausal, kFull, kPrefix };

struct MaskSpec {
  AttentionMask mode = AttentionMask::kCausal;
  std::size_t prefix_len = 0;  // kPrefix only: positions < prefix_len see each other fully

  bool allows(std::size_t query, std::size_t key) const {
    switch (mode) {
      case AttentionMask::kFull:
        return true;
      case AttentionMask::kCausal:
        return key <= query;
      case AttentionMask::kPrefix:
        return key <= query || key < prefix_len;
    }
    return false;
  }
};

// Row-major tensors interpreted as [rows, cols] by folding all leading axes.
struct AttentionLayout {
  std::size_t batch = 1;
  std::size_t seq = 1;
  std::size_t heads = 1;
};

// a: [..., K], b: [K, N] -> [..., N]
template <typename T>
Tensor<T> matmul(const Tensor<T>& a, const Tensor<T>& b);

// Elementwise binary ops. `b` may have a's exact shape, a suffix of a's
// shape (broadcast over leading batch axes), or a single element.
template <typename T>
Tensor<T> add(const Tensor<T>& a, const Tensor<T>& b);
template <typename T>
Tensor<T> sub(const Tensor<T>& a, const Tensor<T>& b);
template <typename T>
Tensor<T> mul(const Tensor<T>& a, const Tensor<T>& b);

template <typename T>
Tensor<T> scale(const Tensor<T>& a, T factor);

template <typename T>
Tensor<T> relu(const Tensor<T>& a);
// tanh approximation, as in GPT-2.
template <typename T>
Tensor<T> gelu(const Tensor<T>& a);
template <typename T>
Tensor<T> exp(const Tensor<T>& a);
template <typename T>
Tensor<T> log(const Tensor<T>& a);

template <typename T>
Tensor<T> softmax(const Tensor<T>& x, std::size_t axis);

template <typename T>
Tensor<T> sum(const Tensor<T>& x);
template <typename T>
Tensor<T> mean(const Tensor<T>& x);

template <typename T>
Tensor<T> reshape(const Tensor<T>& x, Shape shape);

// table: [V, D], ids -> [ids.size(), D]
template <typename T>
Tensor<T> embedding(const Tensor<T>& table, std::span<const int> ids);

// x: [R, C] -> [rows.size(), C]
template <typename T>
Tensor<T> gather_rows(const Tensor<T>& x, std::span<const std::size_t> rows);

// Stacks [R_i, C] tensors into [sum R_i, C].
template <typename T>
Tensor<T> concat_rows(std::span<const Tensor<T>> parts);

// Normalizes over the last axis.
template <typename T>
Tensor<T> layernorm(const Tensor<T>& x, const Tensor<T>& gamma, const Tensor<T>& beta, T eps = T(1e-5));

template <typename T>
Tensor<T> linear(const Tensor<T>& x, const Tensor<T>& weight, const Tensor<T>& bias) {
  return add(matmul(x, weight), bias);
}

// Multi-head softmax attention over q, k, v of shape [batch*seq, heads*head_dim].
// Scores are q.k * score_scale; disallowed (query, key) pairs get zero weight.
template <typename T>
Tensor<T> attention(const Tensor<T>& q, const Tensor<T>& k, const Tensor<T>& v, const AttentionLayout& layout,
                    const MaskSpec& mask, T score_scale);

// Mean negative log-likelihood of `targets` under softmax(logits) over the
// rows whose mask entry is 1. logits: [N, V].
template <typename T>
Tensor<T> cross_entropy(const Tensor<T>& logits, std::span<const int> targets, std::span<const std::uint8_t> mask);

// Mean of (pred - target)^2 over rows with mask 1. pred: [N] or [N, 1].
template <typename T>
Tensor<T> squared_error(const Tensor<T>& pred, std::span<const T> targets, std::span<const std::uint8_t> mask);

// Dense GEMM kernels shared with the inference path.
// C[M,N] (+)= A[M,K] * B[K,N]
template <typename T>
void gemm_nn(std::size_t m, std::size_t n, std::size_t k, const T* a, const T* b, T* c, bool accumulate);
// C[M,K] (+)= A[M,N] * B[K,N]^T
template <typename T>
void gemm_nt(std::size_t m, std::size_t n, std::size_t k, const T* a, const T* b, T* c, bool accumulate);
// C[K,N] (+)= A[M,K]^T * B[M,N]
template <typename T>
void gemm_tn(std::size_t m, std::size_t n, std::size_t k, const T* a, const T* b, T* c, bool accumulate);

template <typename T>
T gelu_scalar(T x);

}  // namespace entp::num
