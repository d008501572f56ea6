#pragma once

#include <vector>

#include "treegf/polynomial.hpp"
#include "treegf/series.hpp"

namespace treegf {

/// Bivariate series truncated in x only: for each power x^n (n = 0..N)
/// the coefficient is an exact polynomial in y.  The y direction is never
/// truncated, so no information is lost for series whose x^n coefficient
/// has bounded y-degree.
class BiSeries {
 public:
  BiSeries() : c_(1) {}
  explicit BiSeries(int order_x);

  static BiSeries constant(int order_x, Polynomial ypoly);
  /// The monomial x*y.
  static BiSeries xy(int order_x);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Polynomial& coeff_x(int n) const { return c_.at(n); }
  Polynomial& coeff_x_mut(int n) { return c_.at(n); }

  bool is_zero() const;

  BiSeries operator-() const;
  friend BiSeries operator+(const BiSeries& a, const BiSeries& b);
  friend BiSeries operator-(const BiSeries& a, const BiSeries& b);
  friend BiSeries operator*(const BiSeries& a, const BiSeries& b);
  friend bool operator==(const BiSeries& a, const BiSeries& b) { return a.c_ == b.c_; }

  /// x-direction division; the divisor's x^0 coefficient must be a
  /// nonzero constant (a unit of the y-polynomial ring).
  friend BiSeries operator/(const BiSeries& a, const BiSeries& b);

  /// x-direction square root; the x^0 coefficient must be the constant 1.
  BiSeries sqrt() const;

  /// Multiply every coefficient by the same y-polynomial.
  BiSeries scaled_by(const Polynomial& ypoly) const;

  /// Exact division of every x-coefficient by the same y-polynomial;
  /// throws std::logic_error if any coefficient is not divisible.
  BiSeries divided_exactly_by(const Polynomial& ypoly) const;

  /// Coefficient of y^k as a polynomial in x (valid when the x-degree of
  /// that coefficient is at most order()).
  Polynomial coeff_y(int k) const;

  /// d/dy evaluated at y = 1, as a series in x.
  UniSeries derivative_y_at_one() const;

  /// Value at y = 1, as a series in x.
  UniSeries at_y_one() const;

 private:
  std::vector<Polynomial> c_;  // index = power of x
};

}  // namespace treegf
