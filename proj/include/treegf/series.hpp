#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "treegf/quadratic.hpp"
#include "treegf/rational.hpp"

namespace treegf {

/// Truncated formal power series with exact coefficients over a field K.
/// A series of order N stores coefficients of x^0 .. x^N; all arithmetic
/// is exact modulo x^(N+1).  Operations on mismatched orders truncate to
/// the smaller order.
template <class K>
class Series {
 public:
  Series() : c_(1) {}
  explicit Series(int order) : c_(check_order(order) + 1) {}
  Series(int order, std::vector<K> low_coeffs) : c_(check_order(order) + 1) {
    if (low_coeffs.size() > c_.size())
      throw std::invalid_argument("Series: more coefficients than order allows");
    std::copy(low_coeffs.begin(), low_coeffs.end(), c_.begin());
  }

  static Series constant(int order, K value) {
    Series s(order);
    s.c_[0] = std::move(value);
    return s;
  }
  static Series one(int order) { return constant(order, K(1)); }
  static Series x(int order) { return monomial(order, 1, K(1)); }
  static Series monomial(int order, int power, K coeff) {
    Series s(order);
    if (power <= order) s.c_[power] = std::move(coeff);
    return s;
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const K& coeff(int i) const { return c_.at(i); }
  K& coeff_mut(int i) { return c_.at(i); }
  const std::vector<K>& coefficients() const { return c_; }

  bool is_zero() const {
    for (const K& v : c_)
      if (!(v == K(0))) return false;
    return true;
  }

  Series truncated(int new_order) const {
    if (new_order >= order()) return *this;
    Series s(new_order);
    std::copy(c_.begin(), c_.begin() + new_order + 1, s.c_.begin());
    return s;
  }

  /// Multiplication by x^j (coefficients shifted up, order preserved).
  Series shifted_up(int j) const {
    Series s(order());
    for (int i = j; i <= order(); ++i) s.c_[i] = c_[i - j];
    return s;
  }

  Series operator-() const {
    Series s = *this;
    for (K& v : s.c_) v = -v;
    return s;
  }

  friend Series operator+(const Series& a, const Series& b) {
    Series s(std::min(a.order(), b.order()));
    for (int i = 0; i <= s.order(); ++i) s.c_[i] = a.c_[i] + b.c_[i];
    return s;
  }
  friend Series operator-(const Series& a, const Series& b) {
    Series s(std::min(a.order(), b.order()));
    for (int i = 0; i <= s.order(); ++i) s.c_[i] = a.c_[i] - b.c_[i];
    return s;
  }
  friend Series operator*(const Series& a, const Series& b) {
    Series s(std::min(a.order(), b.order()));
    for (int i = 0; i <= s.order(); ++i) {
      K acc = K(0);
      for (int j = 0; j <= i; ++j) acc += a.c_[j] * b.c_[i - j];
      s.c_[i] = std::move(acc);
    }
    return s;
  }
  friend Series operator*(const K& k, const Series& a) {
    Series s = a;
    for (K& v : s.c_) v = k * v;
    return s;
  }

  /// Quotient q with q*b == a modulo x^(N+1); the divisor must be a unit
  /// (nonzero constant term) -- there is no automatic valuation shifting.
  friend Series operator/(const Series& a, const Series& b) {
    if (b.c_[0] == K(0))
      throw std::domain_error("Series: divisor has zero constant term");
    Series q(std::min(a.order(), b.order()));
    const K inv0 = K(1) / b.c_[0];
    for (int i = 0; i <= q.order(); ++i) {
      K acc = a.c_[i];
      for (int j = 0; j < i; ++j) acc -= q.c_[j] * b.c_[i - j];
      q.c_[i] = acc * inv0;
    }
    return q;
  }

  friend bool operator==(const Series& a, const Series& b) { return a.c_ == b.c_; }

  /// Square root with constant term 1 (r*r == *this mod x^(N+1)).
  Series sqrt() const {
    if (!(c_[0] == K(1)))
      throw std::domain_error("Series: sqrt requires constant term 1");
    Series r(order());
    r.c_[0] = K(1);
    const K half = K(1) / K(2);
    for (int n = 1; n <= order(); ++n) {
      K acc = c_[n];
      for (int j = 1; j < n; ++j) acc -= r.c_[j] * r.c_[n - j];
      r.c_[n] = acc * half;
    }
    return r;
  }

  std::string to_string() const;

 private:
  static int check_order(int order) {
    if (order < 0) throw std::invalid_argument("Series: negative order");
    return order;
  }
  std::vector<K> c_;
};

using UniSeries = Series<BigRational>;
using QuadSeries = Series<QuadExt>;

template <class K>
std::string Series<K>::to_string() const {
  std::string out;
  for (int i = 0; i <= order(); ++i) {
    if (c_[i] == K(0)) continue;
    if (!out.empty()) out += " + ";
    if constexpr (std::is_same_v<K, BigRational>) {
      out += c_[i].to_string();
    } else {
      out += "(" + c_[i].to_string() + ")";
    }
    if (i > 0) out += "*x^" + std::to_string(i);
  }
  if (out.empty()) out = "0";
  return out + " + O(x^" + std::to_string(order() + 1) + ")";
}

}  // namespace treegf
