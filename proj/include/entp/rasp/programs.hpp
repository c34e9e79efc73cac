#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "entp/rasp/rasp.hpp"

namespace entp::rasp {

// Sentinel closing the data block of the chain-of-thought program. Data
// tokens are non-negative, so it never collides with them.
inline constexpr std::int64_t kEos = -1;

// Largest |value| seen across every intermediate of one program run.
struct ProgramStats {
  Rational max_abs = 0;
  Rational bound = 0;
};

// Encoder program (non-causal). Every position holds f_TC(x).
// Requires 0 <= x_i < n; throws std::domain_error otherwise.
Seq count_triplets(const Seq& x, ProgramStats* stats = nullptr);

// Decoder program, causal throughout. Position i holds f_TI(x_1..x_i).
// Requires 0 <= x_i < 128.
Seq has_triplet(const Seq& x, ProgramStats* stats = nullptr);

// One pass of the chain-of-thought decoder program over data, EOS and the
// chain written so far. Output i is the token to append after position i.
Seq count_triplets_cot(const Seq& x, ProgramStats* stats = nullptr);

struct CotRun {
  std::vector<std::int64_t> tokens;  // data, EOS, then the generated chain
  std::int64_t answer = 0;
  std::size_t steps = 0;             // tokens generated up to and including the answer
  Rational max_abs = 0;
};

// Appends one token per pass until the answer (0-based position 3n+1) exists.
CotRun run_count_triplets_cot(std::span<const std::int64_t> data);

// Built-in programs by name: "count_triplets", "has_triplet",
// "count_triplets_cot" (the latter returns the full generated stream).
std::vector<std::string> program_names();
std::vector<std::int64_t> run_program(const std::string& name, std::span<const std::int64_t> input);

struct CheckOutcome {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Oracle-agreement suite for one program.
std::vector<CheckOutcome> check_program(const std::string& name);

}  // namespace entp::rasp
