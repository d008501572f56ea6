#include "treegf/schroeder.hpp"

#include <mpfr.h>

#include <stdexcept>

namespace treegf {
namespace schroeder {

UniSeries radical_series(int order) {
  UniSeries radicand(order, {BigRational(1), BigRational(-6), BigRational(1)});
  return radicand.sqrt();
}

UniSeries tree_series(int order) {
  if (order < 1) throw std::invalid_argument("tree_series: order must be >= 1");
  // S = (1 + x - sqrt(1-6x+x^2)) / 4, the root of 2S^2 - (1+x)S + x
  // vanishing at 0.
  UniSeries one_plus_x(order, {BigRational(1), BigRational(1)});
  const BigRational quarter(1, 4);
  return quarter * (one_plus_x - radical_series(order));
}

UniSeries context_series(int order) {
  if (order < 0) throw std::invalid_argument("context_series: order must be >= 0");
  const UniSeries rad = radical_series(order);
  UniSeries three_minus_x(order, {BigRational(3), BigRational(-1)});
  const BigRational quarter(1, 4);
  const UniSeries closed = (quarter * (three_minus_x + rad)) / rad;
  // Independent route: A = 1 / (2 - (1-S)^-2).
  if (order >= 1) {
    const UniSeries s = tree_series(order);
    const UniSeries one = UniSeries::one(order);
    const UniSeries one_minus_s = one - s;
    const UniSeries alt = one / (BigRational(2) * one - one / (one_minus_s * one_minus_s));
    if (!(closed == alt))
      throw std::logic_error("context_series: closed form disagrees with the S-identity");
  }
  return closed;
}

BiSeries vertex_bivariate(int order_x) {
  if (order_x < 1) throw std::invalid_argument("vertex_bivariate: order must be >= 1");
  // Order-by-order solution of V = xy - xyV + (1+y)V^2 (the functional
  // equation V = xy + yV^2/(1-V) cleared of its denominator).
  const Polynomial y = Polynomial::x();
  const Polynomial one_plus_y = Polynomial(1) + y;
  BiSeries v(order_x);
  v.coeff_x_mut(1) = y;
  for (int n = 2; n <= order_x; ++n) {
    Polynomial conv;  // [x^n] V^2
    for (int i = 1; i < n; ++i) conv = conv + v.coeff_x(i) * v.coeff_x(n - i);
    v.coeff_x_mut(n) = one_plus_y * conv - y * v.coeff_x(n - 1);
  }

  // Closed-form cross-check: (1 + xy - sqrt(1 - 2xy + (x^2-4x)y^2))/(2y+2).
  BiSeries radicand(order_x);
  radicand.coeff_x_mut(0) = Polynomial(1);
  radicand.coeff_x_mut(1) = Polynomial(std::vector<BigRational>{0, -2, -4});  // -2y - 4y^2
  if (order_x >= 2) radicand.coeff_x_mut(2) = Polynomial::monomial(2, BigRational(1));  // y^2
  BiSeries numer = BiSeries::xy(order_x) - radicand.sqrt();
  numer.coeff_x_mut(0) = numer.coeff_x(0) + Polynomial(1);
  const Polynomial two_plus_2y(std::vector<BigRational>{2, 2});
  const BiSeries closed = numer.divided_exactly_by(two_plus_2y);
  if (!(closed == v))
    throw std::logic_error("vertex_bivariate: functional equation and closed form disagree");
  return v;
}

Polynomial subtree_root_poly(int k) {
  if (k < 1) throw std::invalid_argument("subtree_root_poly: k must be >= 1");
  const BiSeries v = vertex_bivariate(std::max(1, k - 1));
  return v.coeff_y(k);
}

UniSeries subtree_series(int k, int order) {
  if (order < 1) throw std::invalid_argument("subtree_series: order must be >= 1");
  return (subtree_root_poly(k).to_series(order) * context_series(order)).truncated(order);
}

UniSeries vertex_series(int order) {
  if (order < 1) throw std::invalid_argument("vertex_series: order must be >= 1");
  return tree_series(order) * context_series(order);
}

BigRational finite_probability(int k, int n) {
  if (n < 1) throw std::invalid_argument("finite_probability: n must be >= 1");
  if (k < 1) throw std::invalid_argument("finite_probability: k must be >= 1");
  const BigRational vertices = vertex_series(n).coeff(n);
  if (vertices.is_zero()) throw std::domain_error("finite_probability: zero vertex count");
  return subtree_series(k, n).coeff(n) / vertices;
}

RationalFunction balanced_root_gf(int k) {
  if (k < 0) throw std::invalid_argument("balanced_root_gf: rank must be >= 0");
  RationalFunction b = RationalFunction::x();  // rank 0: a single leaf
  for (int i = 0; i < k; ++i) b = sequence_step(b);
  return b;
}

UniSeries balanced_series(int k, int order) {
  if (order < 1) throw std::invalid_argument("balanced_series: order must be >= 1");
  return balanced_root_gf(k).to_series(order) * context_series(order);
}

AsymptoticKind asymptotic_kind_from_string(const std::string& name) {
  if (name == "trees") return AsymptoticKind::trees;
  if (name == "leaves") return AsymptoticKind::leaves;
  if (name == "vertices") return AsymptoticKind::vertices;
  throw std::invalid_argument("unknown asymptotic kind: " + name);
}

namespace {

constexpr mpfr_prec_t kPrecision = 512;

class Real {
 public:
  Real() { mpfr_init2(v_, kPrecision); }
  ~Real() { mpfr_clear(v_); }
  Real(const Real&) = delete;
  Real& operator=(const Real&) = delete;
  mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

// (3 + sqrt 8)^e / (2^q4 * sqrt(pi) * base^h2), with q4 quarters of two's
// exponent and h2 halves of the polynomial factor's exponent:
//   trees:    base = n-1, h2 = 3, q4 = 7, e = n-1, extra = 1+sqrt2
//   leaves:   base = n-1, h2 = 1, q4 = 7, e = n-1, extra = 1+sqrt2
//   vertices: base = n,   h2 = 1, q4 = 9, e = n,   extra = 1
void eval_asymptotic(AsymptoticKind which, unsigned long n, mpfr_ptr out) {
  if (n < 2) throw std::invalid_argument("asymptotic_estimate: n must be >= 2");
  Real sqrt2, growth, power, base, poly, denom, pi, tmp;
  mpfr_sqrt_ui(sqrt2.get(), 2, MPFR_RNDN);
  // growth = 3 + sqrt 8
  mpfr_mul_ui(growth.get(), sqrt2.get(), 2, MPFR_RNDN);
  mpfr_add_ui(growth.get(), growth.get(), 3, MPFR_RNDN);

  const bool vertices = which == AsymptoticKind::vertices;
  const unsigned long e = vertices ? n : n - 1;
  mpfr_pow_ui(power.get(), growth.get(), e, MPFR_RNDN);

  mpfr_set_ui(base.get(), vertices ? n : n - 1, MPFR_RNDN);
  const unsigned long h2 = which == AsymptoticKind::trees ? 3 : 1;
  // poly = base^(h2/2)
  mpfr_pow_ui(poly.get(), base.get(), h2, MPFR_RNDN);
  mpfr_sqrt(poly.get(), poly.get(), MPFR_RNDN);

  // denom = 2^(q4/4) * sqrt(pi) * poly
  const unsigned long q4 = vertices ? 9 : 7;
  mpfr_set_ui(tmp.get(), 2, MPFR_RNDN);
  mpfr_pow_ui(tmp.get(), tmp.get(), q4, MPFR_RNDN);
  mpfr_rootn_ui(denom.get(), tmp.get(), 4, MPFR_RNDN);
  mpfr_const_pi(pi.get(), MPFR_RNDN);
  mpfr_sqrt(pi.get(), pi.get(), MPFR_RNDN);
  mpfr_mul(denom.get(), denom.get(), pi.get(), MPFR_RNDN);
  mpfr_mul(denom.get(), denom.get(), poly.get(), MPFR_RNDN);

  mpfr_div(out, power.get(), denom.get(), MPFR_RNDN);
  if (!vertices) {
    mpfr_add_ui(tmp.get(), sqrt2.get(), 1, MPFR_RNDN);  // 1 + sqrt2
    mpfr_mul(out, out, tmp.get(), MPFR_RNDN);
  }
}

}  // namespace

std::string asymptotic_estimate(AsymptoticKind which, unsigned long n, int significant) {
  if (significant < 1) throw std::invalid_argument("asymptotic_estimate: significant digits >= 1");
  Real value;
  eval_asymptotic(which, n, value.get());
  char* raw = nullptr;
  mpfr_asprintf(&raw, "%.*Re", significant - 1, value.get());
  std::string out(raw);
  mpfr_free_str(raw);
  return out;
}

double asymptotic_ratio(AsymptoticKind which, unsigned long n, const mpz_class& exact) {
  if (sgn(exact) == 0) throw std::domain_error("asymptotic_ratio: exact count is zero");
  Real value, exact_r;
  eval_asymptotic(which, n, value.get());
  mpfr_set_z(exact_r.get(), exact.get_mpz_t(), MPFR_RNDN);
  mpfr_div(value.get(), value.get(), exact_r.get(), MPFR_RNDN);
  return mpfr_get_d(value.get(), MPFR_RNDN);
}

}  // namespace schroeder
}  // namespace treegf
