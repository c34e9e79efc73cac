#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "entp/runner/run_config.hpp"

namespace entp::runner {

struct SuiteCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<SuiteCheck> checks;
  bool passed() const;
  std::string to_json() const;
};

struct SuiteOptions {
  std::filesystem::path out = "runs";
  std::ostream* log = nullptr;
};

// oracles, rasp, theory, gradcheck, bench, train-tc, train-ti, train-add3,
// train-addlen, train-icl.
const std::vector<std::string>& suite_names();

// Runs a bundle and writes `suite-<name>.json` under options.out.
SuiteReport run_suite(const std::string& name, const SuiteOptions& options = {});

// The documented training runs behind a train-* suite.
std::vector<RunConfig> suite_run_configs(const std::string& name, const std::filesystem::path& out);

// Individual bundles, also used by the acceptance binary.
SuiteCheck check_oracle_equivalence();
SuiteCheck check_paper_sequence();
std::vector<SuiteCheck> check_rasp_programs();
SuiteCheck check_mod_relu_gadget();
SuiteCheck check_gradients_both_masks();
SuiteCheck check_kv_cache_generation();
SuiteCheck check_linear_memory_attention();
SuiteCheck check_complexity_scaling();

}  // namespace entp::runner
