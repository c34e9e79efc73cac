#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "entp/transformer/config.hpp"

namespace entp::runner {

// Inference cost of producing the token at length n.
struct BenchRow {
  std::string arch;  // "encoder" (ENTP) or "decoder" (KV cache)
  std::size_t n = 0;
  std::uint64_t step_flops = 0;    // for the n-th token alone
  std::uint64_t total_flops = 0;   // for all n tokens, the sum of step costs
  std::uint64_t precomputed_floats = 0;
  std::uint64_t additional_floats_peak = 0;
};

// Two layers, two heads, D = 8; context sized for `max_len`.
tf::ModelConfig bench_model_config(std::size_t max_len);

// Greedy generation of n tokens per length and architecture through the
// instrumented inference path. Lengths must be ascending.
std::vector<BenchRow> bench_complexity(const tf::ModelConfig& config, std::span<const std::size_t> lengths);

// Per-token FLOP ratio between consecutive lengths of one architecture.
std::vector<double> doubling_ratios(const std::vector<BenchRow>& rows, const std::string& arch);

std::string format_bench_table(const std::vector<BenchRow>& rows);

}  // namespace entp::runner
