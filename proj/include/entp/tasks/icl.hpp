#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace entp::tasks {

enum class IclClass { kLinear, kSparseLinear, kReluNet, kDecisionTree };

std::string icl_class_name(IclClass c);
// "linear", "sparse_linear", "relu_nn", "decision_tree".
IclClass parse_icl_class(const std::string& name);

struct IclSpec {
  IclClass cls = IclClass::kLinear;
  std::size_t dim = 20;
  std::size_t n_points = 40;
  std::size_t sparsity = 3;      // sparse_linear
  std::size_t hidden = 100;      // relu_nn
  std::size_t tree_depth = 4;    // decision_tree

  void validate() const;
};

// Per-class defaults: 40 points for the linear classes, 100 for the others.
IclSpec default_icl_spec(IclClass cls);

// A sampled function from one of the classes.
struct IclFunction {
  IclClass cls = IclClass::kLinear;
  std::size_t dim = 0;
  std::vector<double> w;          // linear / sparse: [dim]; relu_nn: W1 [hidden, dim]
  std::vector<double> alpha;      // relu_nn second layer [hidden]
  std::vector<std::size_t> coord; // tree: split coordinate per internal node, heap order
  std::vector<double> leaf;       // tree: leaf values, left to right

  double operator()(std::span<const double> x) const;
};

IclFunction sample_icl_function(const IclSpec& spec, std::mt19937_64& rng);

struct IclPrompt {
  IclFunction f;
  std::size_t dim = 0;
  std::vector<double> xs;  // [n_points * dim]
  std::vector<double> ys;  // [n_points]
  std::size_t n_points() const { return ys.size(); }
};

IclPrompt sample_icl_prompt(const IclSpec& spec, std::mt19937_64& rng);
std::vector<IclPrompt> gen_icl(const IclSpec& spec, std::size_t n_prompts, std::uint64_t seed);

// Model layout: x_i at position 2i, (y_i, 0, ..., 0) at 2i+1. The target of
// position 2i is y_i; odd positions carry no loss.
struct IclBatch {
  std::size_t batch = 0;
  std::size_t seq = 0;
  std::size_t dim = 0;
  std::vector<double> inputs;   // [batch * seq * dim]
  std::vector<double> targets;  // [batch * seq]
  std::vector<std::uint8_t> mask;
};

IclBatch icl_layout(std::span<const IclPrompt> prompts);

}  // namespace entp::tasks
