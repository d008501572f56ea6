#pragma once

#include <string>

#include "treegf/rational.hpp"

namespace treegf {

/// Element of the quadratic field Q(sqrt 2), stored as
/// rational_part + sqrt2_coefficient * sqrt(2).  The representation is
/// unique because sqrt(2) is irrational, so equality, signs and decimal
/// rendering are all exact.
class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(BigRational rational_part, BigRational sqrt2_coefficient)
      : a_(std::move(rational_part)), b_(std::move(sqrt2_coefficient)) {}
  QuadExt(long n) : a_(n) {}       // NOLINT(runtime/explicit)
  QuadExt(int n) : a_(long(n)) {}  // NOLINT(runtime/explicit)
  explicit QuadExt(BigRational rational_part) : a_(std::move(rational_part)) {}

  static QuadExt sqrt2() { return QuadExt(BigRational(0), BigRational(1)); }

  const BigRational& rational_part() const { return a_; }
  const BigRational& sqrt2_coefficient() const { return b_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_rational() const { return b_.is_zero(); }

  /// Field conjugate a - b*sqrt(2); conjugation is multiplicative.
  QuadExt conjugate() const { return QuadExt(a_, -b_); }

  /// norm(a + b*sqrt2) = a^2 - 2 b^2, zero only at zero.
  BigRational norm() const { return a_ * a_ - BigRational(2) * b_ * b_; }

  QuadExt inverse() const;

  /// Exact sign of the real value: -1, 0 or +1.
  int sign() const;

  QuadExt operator-() const { return QuadExt(-a_, -b_); }
  QuadExt& operator+=(const QuadExt& o) { a_ += o.a_; b_ += o.b_; return *this; }
  QuadExt& operator-=(const QuadExt& o) { a_ -= o.a_; b_ -= o.b_; return *this; }
  QuadExt& operator*=(const QuadExt& o);
  QuadExt& operator/=(const QuadExt& o) { return *this *= o.inverse(); }

  friend QuadExt operator+(QuadExt x, const QuadExt& y) { x += y; return x; }
  friend QuadExt operator-(QuadExt x, const QuadExt& y) { x -= y; return x; }
  friend QuadExt operator*(QuadExt x, const QuadExt& y) { x *= y; return x; }
  friend QuadExt operator/(QuadExt x, const QuadExt& y) { x /= y; return x; }

  friend bool operator==(const QuadExt& x, const QuadExt& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }
  friend bool operator<(const QuadExt& x, const QuadExt& y) { return (x - y).sign() < 0; }
  friend bool operator<=(const QuadExt& x, const QuadExt& y) { return (x - y).sign() <= 0; }
  friend bool operator>(const QuadExt& x, const QuadExt& y) { return (x - y).sign() > 0; }
  friend bool operator>=(const QuadExt& x, const QuadExt& y) { return (x - y).sign() >= 0; }

  QuadExt abs() const { return sign() < 0 ? -*this : *this; }

  /// "a", "b*sqrt2" or "a + b*sqrt2" with exact rational parts.
  std::string to_string() const;

  /// Correctly rounded (half-even) fixed-point decimal with `digits`
  /// fractional digits.  Exact: the integer part and the rounding
  /// decision are derived from integer square roots, never from floats.
  std::string to_decimal(int digits) const;

  double to_double() const;

 private:
  BigRational a_;
  BigRational b_;
};

}  // namespace treegf
