#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include "entp/transformer/config.hpp"

namespace entp::runner {

// Everything that determines a run. The text form is `key = value` per line,
// `#` starts a comment; unknown keys are errors.
struct RunConfig {
  std::string task = "tc";        // tc, ti, pc, add3, addlen, icl
  std::string arch = "encoder";   // encoder (ENTP) or decoder
  std::string model = "small";    // preset name
  std::size_t n_layers = 0;       // 0 keeps the preset value
  std::size_t n_heads = 0;
  std::size_t embed_dim = 0;

  // Triplet tasks.
  std::size_t seq_len = 32;
  std::size_t seed_len = 8;
  std::int64_t vocab = 32;

  // Addition.
  std::string add_format = "reversed";
  std::size_t add_train = 10000;
  std::size_t addlen_train = 100000;
  int addlen_max_train = 10;
  int addlen_max_test = 15;

  // In-context learning.
  std::string icl_class = "linear";
  std::size_t icl_dim = 20;
  std::size_t icl_points = 40;

  // Optimization.
  double lr = 3e-4;
  double warmup = 0.05;  // fraction of the step budget
  double weight_decay = 0.0;
  double clip = 1.0;     // 0 disables clipping
  std::size_t batch = 64;
  std::size_t steps = 2000;
  std::size_t eval_every = 100;
  std::size_t eval_size = 512;
  std::size_t test_size = 2000;
  // Next-token positions per ENTP step, sampled without replacement; 0 uses all.
  std::size_t entp_positions = 0;

  std::uint64_t seed = 0;
  std::string out = "runs";

  void set(std::string_view key, std::string_view value);
  void validate() const;
  // Canonical text: every key in a fixed order.
  std::string to_text() const;
  // FNV-1a 64 of the canonical text, as 16 hex digits.
  std::string hash() const;
  bool is_triplet() const { return task == "tc" || task == "ti" || task == "pc"; }
  bool is_addition() const { return task == "add3" || task == "addlen"; }
  bool is_icl() const { return task == "icl"; }
  bool is_entp() const { return arch == "encoder"; }
  // Architecture for this task; encoder and decoder differ only in the mask.
  tf::ModelConfig model_config() const;
  // `<task>-<arch>-s<seed>-<hash prefix>`.
  std::string run_name() const;
};

RunConfig parse_run_config(std::string_view text, RunConfig base = {});
RunConfig load_run_config(const std::filesystem::path& path, RunConfig base = {});

std::uint64_t fnv1a64(std::string_view bytes);
// Decorrelated child seed for a named purpose.
std::uint64_t derive_seed(std::uint64_t seed, std::string_view purpose);

}  // namespace entp::runner
