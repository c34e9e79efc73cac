#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace entp::rasp {

// Exact rational over int64, always in lowest terms with a positive
// denominator. Arithmetic throws std::overflow_error rather than wrap.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value) : num_(value) {}  // NOLINT: implicit on purpose
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_integer() const { return den_ == 1; }
  // Throws std::domain_error for non-integers.
  std::int64_t to_int() const;
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  Rational abs() const { return {num_ < 0 ? -num_ : num_, den_}; }
  std::string str() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const { return {-num_, den_}; }
  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace entp::rasp
