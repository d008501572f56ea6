#include "treegf/quadratic.hpp"

#include <cmath>
#include <stdexcept>

namespace treegf {
namespace {

// Exact sign of A + B*sqrt(2) for integers A, B.
int integer_pair_sign(const mpz_class& a, const mpz_class& b) {
  const int sa = sgn(a), sb = sgn(b);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: compare a^2 with 2 b^2.
  const mpz_class lhs = a * a, rhs = 2 * b * b;
  const int c = cmp(lhs, rhs);
  if (c == 0) return 0;  // impossible for nonzero b, kept for completeness
  return c > 0 ? sa : sb;
}

// floor(B * sqrt(2)) for an integer B; exact via integer square root.
mpz_class floor_sqrt2_multiple(const mpz_class& b) {
  if (sgn(b) == 0) return 0;
  mpz_class twice_sq = 2 * b * b, root;
  mpz_sqrt(root.get_mpz_t(), twice_sq.get_mpz_t());
  // 2*b^2 is never a perfect square for b != 0, so root < |b|*sqrt2 < root+1.
  if (sgn(b) > 0) return root;
  return -root - 1;
}

}  // namespace

QuadExt& QuadExt::operator*=(const QuadExt& o) {
  const BigRational a = a_ * o.a_ + BigRational(2) * b_ * o.b_;
  const BigRational b = a_ * o.b_ + b_ * o.a_;
  a_ = a;
  b_ = b;
  return *this;
}

QuadExt QuadExt::inverse() const {
  if (is_zero()) throw std::domain_error("QuadExt: division by zero");
  const BigRational n = norm();  // nonzero whenever the value is nonzero
  return QuadExt(a_ / n, -b_ / n);
}

int QuadExt::sign() const {
  const int sa = a_.sign(), sb = b_.sign();
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Clear denominators and compare the integer combination.
  const mpz_class a_num = a_.numerator() * b_.denominator();
  const mpz_class b_num = b_.numerator() * a_.denominator();
  return integer_pair_sign(a_num, b_num);
}

std::string QuadExt::to_string() const {
  if (b_.is_zero()) return a_.to_string();
  const std::string bs = b_.abs() == BigRational(1) ? "" : b_.abs().to_string() + "*";
  const std::string tail = bs + "sqrt2";
  if (a_.is_zero()) return (b_.sign() < 0 ? "-" : "") + tail;
  return a_.to_string() + (b_.sign() < 0 ? " - " : " + ") + tail;
}

std::string QuadExt::to_decimal(int digits) const {
  if (digits < 0) throw std::invalid_argument("to_decimal: digits must be >= 0");
  if (b_.is_zero()) return a_.to_decimal(digits);
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  // value * 10^digits = (A + B*sqrt2) / Q with integers A, B and Q > 0.
  const mpz_class qa = a_.denominator(), qb = b_.denominator();
  const mpz_class big_a = a_.numerator() * qb * scale;
  const mpz_class big_b = b_.numerator() * qa * scale;
  const mpz_class q = qa * qb;
  // The numerator lies in the open interval (lo, lo+1); no multiple of q
  // can sit strictly inside it, so the floor over q is floor(lo / q).
  const mpz_class lo = big_a + floor_sqrt2_multiple(big_b);
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), lo.get_mpz_t(), q.get_mpz_t());
  // Round: compare the (irrational) value against fl + 1/2; no ties possible.
  const mpz_class lhs = 2 * big_a - (2 * fl + 1) * q;
  const int c = integer_pair_sign(lhs, 2 * big_b);
  const mpz_class rounded = c > 0 ? fl + 1 : fl;
  return scaled_integer_to_decimal(rounded, digits);
}

double QuadExt::to_double() const {
  return a_.to_double() + b_.to_double() * std::sqrt(2.0);
}

}  // namespace treegf
