#pragma once

#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "entp/rasp/rational.hpp"

namespace entp::rasp {

// A RASP sequence: one exact value per position.
class Seq {
 public:
  Seq() = default;
  explicit Seq(std::vector<Rational> values) : values_(std::move(values)) {}
  static Seq from_ints(std::span<const std::int64_t> values);

  std::size_t size() const { return values_.size(); }
  const Rational& operator[](std::size_t i) const { return values_.at(i); }
  const std::vector<Rational>& values() const { return values_; }
  // Throws std::domain_error if any value is fractional.
  std::vector<std::int64_t> ints() const;
  Rational max_abs() const;

 private:
  std::vector<Rational> values_;
};

// Boolean attention pattern, indexed (query, key).
class Selector {
 public:
  Selector(std::size_t n, bool causal) : n_(n), causal_(causal), bits_(n * n, 0) {}
  std::size_t size() const { return n_; }
  bool causal() const { return causal_; }
  bool at(std::size_t query, std::size_t key) const { return bits_[query * n_ + key] != 0; }
  void set(std::size_t query, std::size_t key, bool on);

 private:
  std::size_t n_;
  bool causal_;
  std::vector<std::uint8_t> bits_;
};

// Called as pred(key, query).
using Predicate = std::function<bool(const Rational& key, const Rational& query)>;
using UnaryFn = std::function<Rational(const Rational&)>;
using BinaryFn = std::function<Rational(const Rational&, const Rational&)>;

namespace pred {
bool equals(const Rational& key, const Rational& query);
bool always(const Rational& key, const Rational& query);
}  // namespace pred

enum class Reduction { kMean, kMax, kMin };

Seq indices(const Seq& x);
Seq full(const Seq& x, Rational value);
Selector select(const Seq& keys, const Seq& queries, const Predicate& pred, bool causal = false);
Seq sel_width(const Selector& sel);
// Aggregates v over the keys each query selects; 0 where nothing is selected.
Seq kqv(const Seq& keys, const Seq& queries, const Seq& values, const Predicate& pred, Reduction reduction,
        bool causal = false);
Seq seq_map(const Seq& a, const Seq& b, const BinaryFn& f);
Seq tok_map(const Seq& a, const UnaryFn& f);

// Elementwise arithmetic. Comparisons and logical ops yield 0/1 sequences.
Seq operator+(const Seq& a, const Seq& b);
Seq operator-(const Seq& a, const Seq& b);
Seq operator*(const Seq& a, const Seq& b);
Seq operator+(const Seq& a, const Rational& c);
Seq operator-(const Seq& a, const Rational& c);
Seq operator-(const Rational& c, const Seq& a);
Seq operator*(const Seq& a, const Rational& c);
Seq operator*(const Rational& c, const Seq& a);
Seq operator-(const Seq& a);
// Two's-complement bitwise and on integer values.
Seq operator&(const Seq& a, const Rational& mask);
Seq operator&(const Seq& a, const Seq& b);
Seq less(const Seq& a, const Seq& b);
Seq less_equal(const Seq& a, const Seq& b);
Seq equal(const Seq& a, const Seq& b);

}  // namespace entp::rasp
