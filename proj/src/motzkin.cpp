#include "treegf/motzkin.hpp"

#include <stdexcept>

namespace treegf {
namespace motzkin {

UniSeries tree_series(int order) {
  if (order < 1) throw std::invalid_argument("tree_series: order must be >= 1");
  // t_n = t_{n-1} + sum_{i+j = n-1} t_i t_j, t_1 = 1.
  UniSeries t(order);
  t.coeff_mut(1) = BigRational(1);
  for (int n = 2; n <= order; ++n) {
    BigRational acc = t.coeff(n - 1);
    for (int i = 1; i <= n - 2; ++i) acc += t.coeff(i) * t.coeff(n - 1 - i);
    t.coeff_mut(n) = std::move(acc);
  }
  return t;
}

UniSeries context_series(int order) {
  if (order < 0) throw std::invalid_argument("context_series: order must be >= 0");
  UniSeries radicand(order, {BigRational(1), BigRational(-2), BigRational(-3)});
  return UniSeries::one(order) / radicand.sqrt();
}

UniSeries subtree_series(int k, int order) {
  if (k < 1) throw std::invalid_argument("subtree_series: k must be >= 1");
  if (order < 1) throw std::invalid_argument("subtree_series: order must be >= 1");
  UniSeries s(order);
  if (k > order) return s;
  const BigRational m_k(tree_count(k));
  const UniSeries context = context_series(order);
  for (int n = k; n <= order; ++n) s.coeff_mut(n) = m_k * context.coeff(n - k);
  return s;
}

mpz_class tree_count(int k) {
  if (k < 1) throw std::invalid_argument("tree_count: k must be >= 1");
  return tree_series(k).coeff(k).numerator();
}

BigRational limit_probability(int k) {
  mpz_class power;
  mpz_ui_pow_ui(power.get_mpz_t(), 3, static_cast<unsigned long>(k));
  return BigRational(tree_count(k), power);
}

}  // namespace motzkin
}  // namespace treegf
