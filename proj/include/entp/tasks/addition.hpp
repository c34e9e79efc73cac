#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace entp::tasks {

enum class AdditionFormat { kPlain, kReversed };

// Character vocabulary: digits 0-9, '+', '=', '$', and a padding id.
inline constexpr int kAddPlus = 10;
inline constexpr int kAddEquals = 11;
inline constexpr int kAddDollar = 12;
inline constexpr int kAddPad = 13;
inline constexpr int kAdditionVocab = 14;

int char_to_id(char c);
char id_to_char(int id);
std::vector<int> encode_addition(std::string_view text);
std::string decode_addition(std::span<const int> ids);

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

struct AdditionExample {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  AdditionFormat format = AdditionFormat::kReversed;

  std::uint64_t sum() const { return a + b; }
  // Digits of the longer operand.
  int digits() const;
  int carries() const;
  std::string render() const;
  // "$a+b=" : the prompt a model completes.
  std::string prompt() const;
  // Answer characters followed by the closing '$'.
  std::string completion() const;
};

int digit_count(std::uint64_t v);
int count_carries(std::uint64_t a, std::uint64_t b);

// Parses `$A+B=C$`. C is read in the given format and must equal A+B when
// `check_sum` is set. Throws ParseError naming the offending position.
AdditionExample parse_addition(std::string_view text, AdditionFormat format, bool check_sum = true);
// The answer a completion encodes, or nullopt-like -1 when it is not a
// well-formed `C$`.
std::int64_t parse_completion(std::string_view completion, AdditionFormat format);

struct AdditionSplits {
  std::vector<AdditionExample> train, val, test;
  std::vector<std::string> notes;  // sampling fallbacks and pool statistics
};

struct Add3Options {
  std::size_t train_budget = 10000;
  std::size_t val_size = 1000;
  std::size_t test_size = 2000;
  double removal = 0.9;  // fraction of 3-digit pairs dropped from the pool
};

// Pool of all (a, b) with a, b < 1000 after random removal of 3-digit pairs.
std::vector<AdditionExample> addition_pool_3digit(AdditionFormat format, double removal, std::uint64_t seed);

// Stratified by (digits, carries); every 1-digit example lands in train.
AdditionSplits gen_addition_3digit(const Add3Options& options, AdditionFormat format, std::uint64_t seed);

struct AddLenOptions {
  std::size_t n_train = 100000;
  int max_train_digits = 10;
  int max_test_digits = 15;
  std::size_t val_size = 1000;
  std::size_t test_per_length = 200;
};

// Operand length uniform over 1..max_train_digits (both operands share it),
// no duplicate pairs. Exhausted lengths fall back to all available pairs.
// Test holds lengths max_train_digits+1 .. max_test_digits.
AdditionSplits gen_addition_lengthgen(const AddLenOptions& options, std::uint64_t seed);

}  // namespace entp::tasks
