#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace entp::runner {

inline constexpr int kMetricsSchema = 1;

// One line of metrics.jsonl. Wallclock lives in timing.jsonl so that the
// metrics log is byte-identical across reruns of the same config.
struct MetricsRecord {
  std::string run;    // run hash
  std::string task;
  std::string arch;   // "encoder" or "decoder"
  std::uint64_t step = 0;
  std::string split;  // train, val, test
  double loss = 0;
  std::optional<double> token_accuracy;
  std::optional<double> sequence_accuracy;
  std::optional<double> exact_match;
  std::optional<double> parse_valid;
  // Length generalization: exact match keyed by operand digits.
  std::map<int, double> exact_match_by_digits;
  // Mean squared error indexed by the number of in-context examples.
  std::vector<double> squared_error;
  std::vector<double> baseline_squared_error;
  std::uint64_t flops_forward = 0;  // cumulative training forward FLOPs
  bool diverged = false;

  void validate() const;
};

std::string to_json_line(const MetricsRecord& r);
MetricsRecord parse_metrics_line(const std::string& line);
std::vector<MetricsRecord> read_metrics(const std::filesystem::path& path);

struct TimingRecord {
  std::uint64_t step = 0;
  std::string split;
  double wallclock_ms = 0;
};

std::string to_json_line(const TimingRecord& r);

// Mean of `field` over the last `window` records of `split`.
double final_window(const std::vector<MetricsRecord>& records, const std::string& split, const std::string& field,
                    std::size_t window);

}  // namespace entp::runner
