#include <algorithm>
#include <string>
#include <vector>

#include "treegf/cli.hpp"
#include "treegf/limits.hpp"
#include "treegf/motzkin.hpp"
#include "treegf/oracle.hpp"
#include "treegf/schroeder.hpp"

namespace treegf {
namespace cli {

namespace {

void add_check(std::vector<VerifyCheck>& checks, const std::string& name, bool ok,
               const std::string& detail = "") {
  checks.push_back({name, ok, detail});
}

void verify_schroeder(std::vector<VerifyCheck>& checks, int n_max) {
  const int order = std::max(32, 2 * n_max);
  const UniSeries s = schroeder::tree_series(order);
  const UniSeries a = schroeder::context_series(order);
  const UniSeries v = s * a;

  // Counting series vs exhaustive enumeration.
  bool trees_ok = true, census_ok = true, balanced_ok = true, totals_ok = true;
  std::string detail;
  for (int n = 1; n <= n_max; ++n) {
    const CensusTable census = subtree_census(TreeFamily::schroeder, n);
    if (BigRational(mpz_class(census.total_trees)) != s.coeff(n)) {
      trees_ok = false;
      detail = "n=" + std::to_string(n);
    }
    if (BigRational(mpz_class(census.total_vertices)) != v.coeff(n)) totals_ok = false;
    for (int k = 1; k <= 2 * n - 1; ++k) {
      if (schroeder::subtree_series(k, n).coeff(n) != BigRational(mpz_class(census.count(k))))
        census_ok = false;
    }
    const CensusTable bal = balanced_census(n);
    int max_rank = 0;
    while ((1 << (max_rank + 1)) <= n) ++max_rank;
    for (int k = 0; k <= max_rank + 1; ++k) {
      if (schroeder::balanced_series(k, n).coeff(n) != BigRational(mpz_class(bal.count(k))))
        balanced_ok = false;
    }
  }
  add_check(checks, "schroeder_trees_vs_enumeration", trees_ok, detail);
  add_check(checks, "schroeder_subtree_census_vs_series", census_ok);
  add_check(checks, "schroeder_balanced_census_vs_series", balanced_ok);
  add_check(checks, "schroeder_vertex_totals_vs_series", totals_ok);

  // 2S^2 - (1+x)S + x == 0.
  {
    UniSeries one_plus_x(order, {BigRational(1), BigRational(1)});
    const UniSeries residual =
        BigRational(2) * (s * s) - one_plus_x * s + UniSeries::x(order);
    add_check(checks, "schroeder_tree_equation_residual", residual.is_zero());
  }

  // A * (2 - (1-S)^-2) - 1 == 0.
  {
    const UniSeries one = UniSeries::one(order);
    const UniSeries ms = one - s;
    const UniSeries residual = a * (BigRational(2) * one - one / (ms * ms)) - one;
    add_check(checks, "schroeder_context_identity_residual", residual.is_zero());
  }

  // Bivariate functional equation V = xy - xyV + (1+y)V^2 at a modest order.
  {
    const int bo = std::max(6, std::min(n_max + 4, 24));
    const BiSeries v2 = schroeder::vertex_bivariate(bo);
    const BiSeries xy = BiSeries::xy(bo);
    const Polynomial y = Polynomial::x();
    const BiSeries residual =
        v2 - xy + (xy * v2) - (v2 * v2).scaled_by(Polynomial(1) + y);
    add_check(checks, "schroeder_bivariate_equation_residual", residual.is_zero());

    // d/dy at y=1 agrees with S*A.
    add_check(checks, "schroeder_vertex_two_routes",
              v2.derivative_y_at_one() == v.truncated(bo));
  }

  // sum_{k<=2n-1} R_k == S through x^n.
  {
    const int n = std::min(n_max, 12);
    const BiSeries biv = schroeder::vertex_bivariate(n);
    UniSeries sum(n);
    for (int k = 1; k <= 2 * n - 1; ++k) {
      const UniSeries rk = biv.coeff_y(k).to_series(n);
      sum = sum + rk;
    }
    add_check(checks, "schroeder_rk_sum_equals_trees", sum == s.truncated(n));
  }

  // Probability normalization at small n: sum_k T_k(n) == V(n).
  {
    bool ok = true;
    for (int n = 1; n <= std::min(n_max, 8); ++n) {
      BigRational total;
      for (int k = 1; k <= 2 * n - 1; ++k) total += schroeder::subtree_series(k, n).coeff(n);
      if (total != v.coeff(n)) ok = false;
    }
    add_check(checks, "schroeder_probability_normalization", ok);
  }
}

void verify_motzkin(std::vector<VerifyCheck>& checks, int n_max) {
  const int order = std::max(32, 2 * n_max);
  const UniSeries t = motzkin::tree_series(order);

  bool trees_ok = true, census_ok = true, sum_ok = true;
  for (int n = 1; n <= n_max; ++n) {
    const CensusTable census = subtree_census(TreeFamily::motzkin, n);
    if (BigRational(mpz_class(census.total_trees)) != t.coeff(n)) trees_ok = false;
    BigRational total;
    for (int k = 1; k <= n; ++k) {
      const BigRational coeff = motzkin::subtree_series(k, n).coeff(n);
      if (coeff != BigRational(mpz_class(census.count(k)))) census_ok = false;
      total += coeff;
    }
    // every vertex has exactly one subtree size: sum = n * M_n
    if (total != BigRational(long(n)) * t.coeff(n)) sum_ok = false;
  }
  add_check(checks, "motzkin_trees_vs_enumeration", trees_ok);
  add_check(checks, "motzkin_subtree_census_vs_series", census_ok);
  add_check(checks, "motzkin_census_sum_identity", sum_ok);

  // T - x(1 + T + T^2) == 0.
  const UniSeries residual =
      t - UniSeries::x(order) * (UniSeries::one(order) + t + t * t);
  add_check(checks, "motzkin_tree_equation_residual", residual.is_zero());
}

}  // namespace

std::vector<VerifyCheck> run_verification(const std::string& family, int n_max) {
  std::vector<VerifyCheck> checks;
  if (family == "schroeder" || family == "both") verify_schroeder(checks, n_max);
  if (family == "motzkin" || family == "both") verify_motzkin(checks, n_max);
  return checks;
}

}  // namespace cli
}  // namespace treegf
