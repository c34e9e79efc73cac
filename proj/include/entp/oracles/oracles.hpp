#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

namespace entp::oracle {

using Token = std::int64_t;

// A token stream whose first `seed_len` positions are the prompt.
struct TokenSequence {
  std::vector<Token> tokens;
  std::size_t seed_len = 0;

  std::size_t size() const { return tokens.size(); }
  // Throws std::invalid_argument on negative tokens, tokens >= vocab (when
  // vocab > 0), or seed_len > size.
  void validate(Token vocab = 0) const;
};

// Auxiliary storage used by a counting routine, in integers beyond the input.
struct SpaceCounter {
  std::size_t scalars = 0;
  std::size_t table_slots = 0;
  std::size_t total() const { return scalars + table_slots; }
};

// Ordered pairs (i, j), i = j included, with x_i + x_j + x_n = 0 (mod n),
// reduced mod n. Double loop, constant extra space.
Token triplet_count_quadratic(std::span<const Token> x, SpaceCounter* space = nullptr);
// Same function through a length-n residue table.
Token triplet_count_linear(std::span<const Token> x, SpaceCounter* space = nullptr);
// 1 iff some (i, j) has x_1 + x_i + x_j = 0 (mod 128).
Token triplet_identify(std::span<const Token> x);
// Positions i with x_i + x_n = 0 (mod n), reduced mod n.
Token pair_count(std::span<const Token> x);

inline constexpr Token kIdentifyModulus = 128;

// a mod b for 0 <= a < 2b using only affine maps and ReLU:
// g(a, b) = ReLU(a - M ReLU(a - b + eps)) + ReLU(a - b).
// Throws std::domain_error outside 0 <= a < 2b, and std::invalid_argument
// unless 0 < eps < 1 and M >= 2b/eps.
Token bounded_mod_relu(Token a, Token b, double eps, double big_m);
// Real-valued form, for callers that feed it non-integer intermediates.
double bounded_mod_relu_real(double a, double b, double eps, double big_m);

using SequenceFunction = std::function<Token(std::span<const Token>)>;

// Appends f(x_1..x_m) for m = |seed| .. |seed| + n_steps - 1.
TokenSequence extend(std::span<const Token> seed, std::size_t n_steps, const SequenceFunction& f);

}  // namespace entp::oracle
