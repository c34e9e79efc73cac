#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "entp/numerics/tensor.hpp"

namespace entp::num {

struct AdamHyper {
  double lr = 3e-4;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
  double weight_decay = 0.0;  // decoupled (AdamW); 0 gives plain Adam
};

template <typename T>
struct AdamState {
  std::vector<std::vector<T>> m;
  std::vector<std::vector<T>> v;
  long step = 0;
};

// One Adam update of every parameter from its populated grad. Parameters
// without a grad are treated as having a zero gradient. Grads are cleared.
template <typename T>
void adam_step(std::span<Tensor<T>> params, AdamState<T>& state, const AdamHyper& hyper);

// Scales all grads so their joint L2 norm is at most max_norm; returns the
// norm before clipping.
template <typename T>
double clip_grad_norm(std::span<Tensor<T>> params, double max_norm);

// Linear warmup followed by cosine decay to zero.
double cosine_lr(double base_lr, long step, long total_steps, long warmup_steps);

}  // namespace entp::num
