#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "entp/transformer/model.hpp"

namespace entp::theory {

using tf::Model;

// Rows of D-dimensional vectors, one per position.
using Vectors = std::vector<std::vector<double>>;

// Attention-only decoder: W_Q = W_K = 0 and W_V = W_O = I in the first two
// layers, W_V = 0 beyond, all MLP weights zero, no positions.
Model<double> build_theorem1_decoder(std::size_t dim, std::size_t n_layers = 2);
// Same skeleton with full attention and W_Q = W_K = W_V = W_O = I.
Model<double> build_theorem2_encoder(std::size_t dim, std::size_t n_layers = 2);

// Per-position outputs of one pass with the model's own mask.
Vectors run(const Model<double>& model, const Vectors& xs);
// Next-token outputs: position i read from a pass over x_1..x_i. Equals
// run() for causal models.
Vectors run_per_prefix(const Model<double>& model, const Vectors& xs);

// Closed forms of the Theorem-1 decoder after one and two layers.
Vectors theorem1_layer1(const Vectors& x3);
Vectors theorem1_layer2(const Vectors& x3);

// Coefficients (alpha, beta) with output_2 = alpha x_1 + beta x_2 for the
// Theorem-2 encoder on (x_1, x_2), tracked through the attention weights
// from the Gram matrix of the inputs alone.
std::pair<double, double> theorem2_coefficients(const std::vector<double>& x1, const std::vector<double>& x2);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Theorem-1 separation against a candidate encoder (theory mode, full mask,
// learned positions). Passes when the probe shows the candidate cannot
// replicate the Theorem-1 decoder: the order-sensitivity probe when p_1 = p_2,
// the y_1 + p_1 = y_2 + p_2 probe otherwise.
CheckResult check_separation_t1(const Model<double>& candidate_encoder, std::mt19937_64& rng);
// Theorem-2 separation against a candidate decoder with p_1 != p_2.
CheckResult check_separation_t2(const Model<double>& candidate_decoder);

struct CausalityReport {
  std::size_t checked = 0;
  std::size_t violations = 0;
  std::size_t last_position_violations = 0;
};

// Compares output i of a full-sequence pass with output i of a pass over
// the prefix x_1..x_i, bit-exactly, on random inputs.
CausalityReport check_causality(const Model<double>& model, std::size_t n_sequences, std::size_t seq_len,
                                std::mt19937_64& rng);

// Every proof artifact, as printed by `theory check --all`.
std::vector<CheckResult> check_all(std::uint64_t seed = 7);

}  // namespace entp::theory
