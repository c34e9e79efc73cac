#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "entp/runner/metrics.hpp"
#include "entp/runner/run_config.hpp"
#include "entp/tasks/icl.hpp"
#include "entp/transformer/model.hpp"

namespace entp::runner {

struct RunPaths {
  std::filesystem::path dir;
  std::filesystem::path config;   // config.txt, canonical text
  std::filesystem::path meta;     // meta.json
  std::filesystem::path metrics;  // metrics.jsonl
  std::filesystem::path timing;   // timing.jsonl
  std::filesystem::path latest;   // checkpoint_latest.bin
  std::filesystem::path best;     // checkpoint_best.bin
  std::filesystem::path summary;  // summary.json, written when the run completes

  static RunPaths of(const RunConfig& config);
  static RunPaths in(const std::filesystem::path& dir);
};

class DivergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TrainOptions {
  std::ostream* log = nullptr;
  // A completed run directory whose config text matches is returned as is.
  bool reuse_completed = true;
};

struct TrainResult {
  RunPaths paths;
  std::vector<MetricsRecord> records;
  bool reused = false;
};

TrainResult train(const RunConfig& config, const TrainOptions& options = {});

struct EvalOptions {
  std::size_t limit = 0;        // 0 evaluates the whole split
  bool generation = true;       // addition exact match via greedy decoding
};

// Metrics of `model` on the "val" or "test" split of the config's task.
MetricsRecord evaluate(const RunConfig& config, const tf::Model<float>& model, const std::string& split,
                       std::uint64_t step, const EvalOptions& options = {});
// Loads config.txt and the named checkpoint ("best" or "latest") of a run.
MetricsRecord evaluate_run(const std::filesystem::path& run_dir, const std::string& split,
                           const std::string& which = "best");

// Greedy continuation of each prompt until `stop` is emitted or the context
// is full. Full-mask models re-encode every prefix from scratch; causal
// models give the same tokens as cached decoding.
std::vector<std::vector<int>> greedy_complete(const tf::Model<float>& model,
                                              const std::vector<std::vector<int>>& prompts, int stop);

// Greedy scoring of next-token logits. Row i of `logits` (width w) belongs
// to sequence rows[i]; only rows with mask 1 count. A sequence is correct
// when all of its counted rows are.
struct TokenScore {
  double loss_sum = 0;  // summed cross-entropy
  std::size_t tokens = 0, correct = 0;
  std::size_t sequences = 0, sequences_correct = 0;
  double token_accuracy() const;
  double sequence_accuracy() const;
};
TokenScore score_tokens(std::span<const float> logits, std::size_t width, std::span<const int> targets,
                        std::span<const std::uint8_t> mask, std::span<const std::size_t> rows, std::size_t n_sequences);

// Forward FLOPs (two per multiply-accumulate) of one pass over n positions
// in which `pairs` query-key pairs are scored and `head_rows` rows reach the
// output head. Matches the inference-path counters.
std::uint64_t pass_flops(const tf::ModelConfig& config, std::size_t n, std::uint64_t pairs, std::size_t head_rows);

// Least-squares prediction error by number of in-context examples: the
// minimum-norm solution on the first i examples predicts y_{i+1}.
std::vector<double> least_squares_baseline(const std::vector<tasks::IclPrompt>& prompts);

}  // namespace entp::runner
