#include "treegf/polynomial.hpp"

#include <stdexcept>
#include <utility>

namespace treegf {

Polynomial::Polynomial(BigRational constant) {
  if (!constant.is_zero()) c_.push_back(std::move(constant));
}

Polynomial Polynomial::monomial(int power, BigRational coeff) {
  if (power < 0) throw std::invalid_argument("Polynomial: negative power");
  if (coeff.is_zero()) return Polynomial();
  std::vector<BigRational> c(power + 1);
  c[power] = std::move(coeff);
  return Polynomial(std::move(c));
}

Polynomial Polynomial::operator-() const {
  std::vector<BigRational> c(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
  return Polynomial(std::move(c));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<BigRational> c(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<BigRational> c(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
  return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  std::vector<BigRational> c(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return Polynomial(std::move(c));
}

Polynomial operator*(const BigRational& k, const Polynomial& a) {
  std::vector<BigRational> c(a.c_.size());
  for (size_t i = 0; i < a.c_.size(); ++i) c[i] = k * a.c_[i];
  return Polynomial(std::move(c));
}

Polynomial::DivMod Polynomial::divmod(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("Polynomial: division by zero polynomial");
  std::vector<BigRational> rem(c_);
  std::vector<BigRational> quot;
  const int dd = divisor.degree();
  const BigRational lead_inv = divisor.c_.back().inverse();
  int rd = static_cast<int>(rem.size()) - 1;
  while (rd >= dd) {
    if (rem[rd].is_zero()) {
      --rd;
      continue;
    }
    const BigRational f = rem[rd] * lead_inv;
    const int shift = rd - dd;
    if (static_cast<int>(quot.size()) < shift + 1) quot.resize(shift + 1);
    quot[shift] = f;
    for (int i = 0; i <= dd; ++i) rem[shift + i] -= f * divisor.c_[i];
    --rd;
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial Polynomial::gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = a.divmod(b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.c_.back().inverse() * a;  // monic
}

Polynomial Polynomial::derivative() const {
  if (degree() <= 0) return Polynomial();
  std::vector<BigRational> c(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = BigRational(long(i)) * c_[i];
  return Polynomial(std::move(c));
}

UniSeries Polynomial::to_series(int order) const {
  UniSeries s(order);
  for (int i = 0; i <= std::min(order, degree()); ++i) s.coeff_mut(i) = c_[i];
  return s;
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = 0; i <= degree(); ++i) {
    if (c_[i].is_zero()) continue;
    const bool neg = c_[i].sign() < 0;
    const BigRational mag = c_[i].abs();
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? "-" : "+";
    }
    const bool unit = (mag == BigRational(1));
    if (i == 0) {
      out += mag.to_string();
    } else {
      if (!unit) out += mag.to_string();
      out += "x";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

RationalFunction::RationalFunction(Polynomial numerator) : num_(std::move(numerator)), den_(1) {}

RationalFunction::RationalFunction(Polynomial numerator, Polynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero()) throw std::domain_error("RationalFunction: zero denominator");
  if (num_.is_zero()) {
    den_ = Polynomial(1);
    return;
  }
  const Polynomial g = Polynomial::gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_.divmod(g).quotient;
    den_ = den_.divmod(g).quotient;
  }
  const BigRational c0 = den_.coeff(0);
  if (c0.is_zero())
    throw std::domain_error("RationalFunction: denominator vanishes at 0");
  const BigRational inv = c0.inverse();
  num_ = inv * num_;
  den_ = inv * den_;
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

RationalFunction operator+(const RationalFunction& f, const RationalFunction& g) {
  return RationalFunction(f.num_ * g.den_ + g.num_ * f.den_, f.den_ * g.den_);
}

RationalFunction operator-(const RationalFunction& f, const RationalFunction& g) {
  return RationalFunction(f.num_ * g.den_ - g.num_ * f.den_, f.den_ * g.den_);
}

RationalFunction operator*(const RationalFunction& f, const RationalFunction& g) {
  return RationalFunction(f.num_ * g.num_, f.den_ * g.den_);
}

RationalFunction operator/(const RationalFunction& f, const RationalFunction& g) {
  if (g.is_zero()) throw std::domain_error("RationalFunction: division by zero");
  return RationalFunction(f.num_ * g.den_, f.den_ * g.num_);
}

UniSeries RationalFunction::to_series(int order) const {
  return num_.to_series(order) / den_.to_series(order);
}

QuadExt RationalFunction::evaluate(const QuadExt& point) const {
  const QuadExt d = den_.evaluate(point);
  if (d.is_zero())
    throw std::domain_error("RationalFunction: denominator vanishes at evaluation point");
  return num_.evaluate(point) / d;
}

std::string RationalFunction::to_string() const {
  if (den_ == Polynomial(1)) return num_.to_string();
  return num_.to_string() + "/(" + den_.to_string() + ")";
}

RationalFunction sequence_step(const RationalFunction& f) {
  return (f * f) / (RationalFunction(Polynomial(1)) - f);
}

}  // namespace treegf
