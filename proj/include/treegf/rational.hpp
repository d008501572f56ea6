#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <utility>

namespace treegf {

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator.  Arithmetic is exact; there is no rounding
/// anywhere except in the explicit decimal rendering helpers.
class BigRational {
 public:
  BigRational() : v_(0) {}
  BigRational(long n) : v_(n) {}                       // NOLINT(runtime/explicit)
  BigRational(int n) : v_(static_cast<long>(n)) {}     // NOLINT(runtime/explicit)
  explicit BigRational(const mpz_class& n) : v_(n) {}
  explicit BigRational(mpq_class q) : v_(std::move(q)) { canonicalize(); }
  BigRational(const mpz_class& num, const mpz_class& den);
  BigRational(long num, long den);

  /// Parses "p", "-p" or "p/q".
  static BigRational from_string(const std::string& s);

  const mpq_class& raw() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  BigRational operator-() const { return BigRational(mpq_class(-v_)); }
  BigRational& operator+=(const BigRational& o) { v_ += o.v_; return *this; }
  BigRational& operator-=(const BigRational& o) { v_ -= o.v_; return *this; }
  BigRational& operator*=(const BigRational& o) { v_ *= o.v_; return *this; }
  BigRational& operator/=(const BigRational& o);

  friend BigRational operator+(BigRational a, const BigRational& b) { a += b; return a; }
  friend BigRational operator-(BigRational a, const BigRational& b) { a -= b; return a; }
  friend BigRational operator*(BigRational a, const BigRational& b) { a *= b; return a; }
  friend BigRational operator/(BigRational a, const BigRational& b) { a /= b; return a; }

  friend bool operator==(const BigRational& a, const BigRational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const BigRational& a, const BigRational& b) { return a.v_ != b.v_; }
  friend bool operator<(const BigRational& a, const BigRational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const BigRational& a, const BigRational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const BigRational& a, const BigRational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const BigRational& a, const BigRational& b) { return a.v_ >= b.v_; }

  BigRational abs() const { return sign() < 0 ? -*this : *this; }
  BigRational pow(unsigned long e) const;
  BigRational inverse() const;

  /// "p" when integral, "p/q" otherwise.
  std::string to_string() const;

  /// Correctly rounded (half-even) fixed-point expansion with `digits`
  /// fractional digits, e.g. (1/3, 6) -> "0.333333".
  std::string to_decimal(int digits) const;

  double to_double() const { return v_.get_d(); }

 private:
  void canonicalize() { v_.canonicalize(); }
  mpq_class v_;
};

/// Nearest integer to num/den with ties to even; den > 0 required.
mpz_class round_quotient_half_even(const mpz_class& num, const mpz_class& den);

/// Renders the integer m scaled by 10^-digits as a fixed-point decimal.
std::string scaled_integer_to_decimal(const mpz_class& m, int digits);

}  // namespace treegf
