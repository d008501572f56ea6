#include "treegf/biseries.hpp"

#include <algorithm>
#include <stdexcept>

namespace treegf {

BiSeries::BiSeries(int order_x) {
  if (order_x < 0) throw std::invalid_argument("BiSeries: negative order");
  c_.resize(order_x + 1);
}

BiSeries BiSeries::constant(int order_x, Polynomial ypoly) {
  BiSeries s(order_x);
  s.c_[0] = std::move(ypoly);
  return s;
}

BiSeries BiSeries::xy(int order_x) {
  BiSeries s(order_x);
  if (order_x >= 1) s.c_[1] = Polynomial::x();  // the y-polynomial "y"
  return s;
}

bool BiSeries::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Polynomial& p) { return p.is_zero(); });
}

BiSeries BiSeries::operator-() const {
  BiSeries s(order());
  for (int n = 0; n <= order(); ++n) s.c_[n] = -c_[n];
  return s;
}

BiSeries operator+(const BiSeries& a, const BiSeries& b) {
  BiSeries s(std::min(a.order(), b.order()));
  for (int n = 0; n <= s.order(); ++n) s.c_[n] = a.c_[n] + b.c_[n];
  return s;
}

BiSeries operator-(const BiSeries& a, const BiSeries& b) {
  BiSeries s(std::min(a.order(), b.order()));
  for (int n = 0; n <= s.order(); ++n) s.c_[n] = a.c_[n] - b.c_[n];
  return s;
}

BiSeries operator*(const BiSeries& a, const BiSeries& b) {
  BiSeries s(std::min(a.order(), b.order()));
  for (int n = 0; n <= s.order(); ++n) {
    Polynomial acc;
    for (int j = 0; j <= n; ++j) acc = acc + a.c_[j] * b.c_[n - j];
    s.c_[n] = std::move(acc);
  }
  return s;
}

BiSeries operator/(const BiSeries& a, const BiSeries& b) {
  const Polynomial& b0 = b.c_[0];
  if (b0.degree() != 0)
    throw std::domain_error("BiSeries: divisor's constant term must be a nonzero constant");
  const BigRational inv0 = b0.coeff(0).inverse();
  BiSeries q(std::min(a.order(), b.order()));
  for (int n = 0; n <= q.order(); ++n) {
    Polynomial acc = a.c_[n];
    for (int j = 0; j < n; ++j) acc = acc - q.c_[j] * b.c_[n - j];
    q.c_[n] = inv0 * acc;
  }
  return q;
}

BiSeries BiSeries::sqrt() const {
  if (!(c_[0] == Polynomial(1)))
    throw std::domain_error("BiSeries: sqrt requires constant term 1");
  BiSeries r(order());
  r.c_[0] = Polynomial(1);
  const BigRational half(1, 2);
  for (int n = 1; n <= order(); ++n) {
    Polynomial acc = c_[n];
    for (int j = 1; j < n; ++j) acc = acc - r.c_[j] * r.c_[n - j];
    r.c_[n] = half * acc;
  }
  return r;
}

BiSeries BiSeries::scaled_by(const Polynomial& ypoly) const {
  BiSeries s(order());
  for (int n = 0; n <= order(); ++n) s.c_[n] = c_[n] * ypoly;
  return s;
}

BiSeries BiSeries::divided_exactly_by(const Polynomial& ypoly) const {
  if (ypoly.is_zero()) throw std::domain_error("BiSeries: exact division by zero");
  BiSeries s(order());
  for (int n = 0; n <= order(); ++n) {
    if (c_[n].is_zero()) continue;
    auto [q, r] = c_[n].divmod(ypoly);
    if (!r.is_zero())
      throw std::logic_error("BiSeries: coefficient not divisible by the given y-polynomial");
    s.c_[n] = std::move(q);
  }
  return s;
}

Polynomial BiSeries::coeff_y(int k) const {
  std::vector<BigRational> c(order() + 1);
  for (int n = 0; n <= order(); ++n) c[n] = c_[n].coeff(k);
  return Polynomial(std::move(c));
}

UniSeries BiSeries::derivative_y_at_one() const {
  UniSeries s(order());
  for (int n = 0; n <= order(); ++n) {
    BigRational acc;
    for (int j = 1; j <= c_[n].degree(); ++j) acc += BigRational(long(j)) * c_[n].coeff(j);
    s.coeff_mut(n) = std::move(acc);
  }
  return s;
}

UniSeries BiSeries::at_y_one() const {
  UniSeries s(order());
  for (int n = 0; n <= order(); ++n) {
    BigRational acc;
    for (int j = 0; j <= c_[n].degree(); ++j) acc += c_[n].coeff(j);
    s.coeff_mut(n) = std::move(acc);
  }
  return s;
}

}  // namespace treegf
