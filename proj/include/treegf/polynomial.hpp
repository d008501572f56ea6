#pragma once

#include <string>
#include <vector>

#include "treegf/quadratic.hpp"
#include "treegf/rational.hpp"
#include "treegf/series.hpp"

namespace treegf {

/// Dense polynomial with exact rational coefficients.  The trailing
/// coefficient is nonzero unless the polynomial is zero; degree() of the
/// zero polynomial is -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<BigRational> coeffs) : c_(std::move(coeffs)) { normalize(); }
  explicit Polynomial(BigRational constant);
  Polynomial(long constant) : Polynomial(BigRational(constant)) {}  // NOLINT
  Polynomial(int constant) : Polynomial(BigRational(constant)) {}   // NOLINT

  static Polynomial x() { return monomial(1, BigRational(1)); }
  static Polynomial monomial(int power, BigRational coeff);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  /// Coefficient of x^i (zero beyond the degree).
  BigRational coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : BigRational(0);
  }
  const std::vector<BigRational>& coefficients() const { return c_; }

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const BigRational& k, const Polynomial& a);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  /// Euclidean division; remainder has degree < deg(divisor).
  struct DivMod {
    Polynomial quotient;
    Polynomial remainder;
  };
  DivMod divmod(const Polynomial& divisor) const;

  /// Monic greatest common divisor (1 for coprime inputs).
  static Polynomial gcd(Polynomial a, Polynomial b);

  Polynomial derivative() const;

  template <class K>
  K evaluate(const K& point) const {
    K acc = K(0);
    for (int i = degree(); i >= 0; --i) acc = acc * point + K(c_[i]);
    return acc;
  }

  UniSeries to_series(int order) const;

  /// Canonical ascending rendering: "0", "x", "2x^3+x^4", "1-2x+x^3".
  std::string to_string() const;

 private:
  void normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<BigRational> c_;
};

/// Quotient of polynomials kept in canonical form: numerator and
/// denominator coprime and the denominator normalized to constant term 1,
/// so equal values compare equal.  The denominator always has a nonzero
/// constant term (the value is series-expandable at 0).
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(1) {}
  RationalFunction(Polynomial numerator, Polynomial denominator);
  explicit RationalFunction(Polynomial numerator);
  static RationalFunction x() { return RationalFunction(Polynomial::x()); }

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& f, const RationalFunction& g);
  friend RationalFunction operator-(const RationalFunction& f, const RationalFunction& g);
  friend RationalFunction operator*(const RationalFunction& f, const RationalFunction& g);
  friend RationalFunction operator/(const RationalFunction& f, const RationalFunction& g);
  friend bool operator==(const RationalFunction& f, const RationalFunction& g) {
    return f.num_ == g.num_ && f.den_ == g.den_;
  }

  UniSeries to_series(int order) const;

  /// Exact evaluation in Q(sqrt2); throws if the denominator vanishes.
  QuadExt evaluate(const QuadExt& point) const;

  /// "x^2/(1-x)"; plain numerator when the denominator is 1.
  std::string to_string() const;

 private:
  Polynomial num_;
  Polynomial den_;
};

/// The sequence-of-at-least-two composition step f^2/(1-f), the
/// recurrence taking the balanced rank-(k-1) root series to rank k.
RationalFunction sequence_step(const RationalFunction& f);

}  // namespace treegf
