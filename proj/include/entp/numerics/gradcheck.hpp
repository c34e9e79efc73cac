#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "entp/numerics/tensor.hpp"

namespace entp::num {

struct GradCheckResult {
  std::size_t checked = 0;
  double max_rel_error = 0.0;
  std::string worst;  // "<param index>[<element>]"
};

// Compares the backprop gradient of `loss_fn` with central finite
// differences, element by element. Relative error uses
// |a - n| / max(|a| + |n|, floor) so that near-zero gradients are judged on
// an absolute scale.
GradCheckResult check_gradients(std::span<Tensor<double>> params,
                                const std::function<Tensor<double>()>& loss_fn, double step = 1e-5,
                                double floor = 1e-6);

}  // namespace entp::num
