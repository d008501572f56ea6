#include "treegf/rational.hpp"

#include <stdexcept>

namespace treegf {

BigRational::BigRational(const mpz_class& num, const mpz_class& den) : v_(num, den) {
  if (sgn(den) == 0) throw std::domain_error("BigRational: zero denominator");
  canonicalize();
}

BigRational::BigRational(long num, long den) : BigRational(mpz_class(num), mpz_class(den)) {}

BigRational BigRational::from_string(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) return BigRational(mpz_class(s));
  return BigRational(mpz_class(s.substr(0, slash)), mpz_class(s.substr(slash + 1)));
}

BigRational& BigRational::operator/=(const BigRational& o) {
  if (o.is_zero()) throw std::domain_error("BigRational: division by zero");
  v_ /= o.v_;
  return *this;
}

BigRational BigRational::pow(unsigned long e) const {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), v_.get_num().get_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), v_.get_den().get_mpz_t(), e);
  BigRational r;
  r.v_ = mpq_class(num, den);  // already canonical: powers of coprime parts
  return r;
}

BigRational BigRational::inverse() const {
  if (is_zero()) throw std::domain_error("BigRational: inverse of zero");
  BigRational r;
  r.v_ = 1 / v_;
  return r;
}

std::string BigRational::to_string() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

mpz_class round_quotient_half_even(const mpz_class& num, const mpz_class& den) {
  mpz_class q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  const mpz_class twice_r = 2 * r;  // 0 <= r < den
  const int c = cmp(twice_r, den);
  if (c > 0) return q + 1;
  if (c < 0) return q;
  return mpz_even_p(q.get_mpz_t()) ? q : q + 1;  // tie
}

std::string scaled_integer_to_decimal(const mpz_class& m, int digits) {
  mpz_class a = m;
  std::string sign;
  if (sgn(a) < 0) {
    sign = "-";
    a = -a;
  }
  std::string s = a.get_str();
  if (digits == 0) return sign + s;
  if (static_cast<int>(s.size()) <= digits) s.insert(0, digits + 1 - s.size(), '0');
  s.insert(s.size() - digits, ".");
  return sign + s;
}

std::string BigRational::to_decimal(int digits) const {
  if (digits < 0) throw std::invalid_argument("to_decimal: digits must be >= 0");
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  const mpz_class rounded = round_quotient_half_even(numerator() * scale, denominator());
  return scaled_integer_to_decimal(rounded, digits);
}

}  // namespace treegf
