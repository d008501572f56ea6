#include "treegf/limits.hpp"

#include <stdexcept>

#include "treegf/motzkin.hpp"
#include "treegf/schroeder.hpp"

namespace treegf {
namespace limits {

QuadExt dominant_singularity(TreeFamily family) {
  if (family == TreeFamily::schroeder)
    return QuadExt(BigRational(3), BigRational(-2));  // 3 - 2*sqrt2
  return QuadExt(BigRational(1, 3));
}

QuadExt singularity_residual(TreeFamily family) {
  const QuadExt p = dominant_singularity(family);
  if (family == TreeFamily::schroeder)
    return QuadExt(1) - QuadExt(6) * p + p * p;  // 1 - 6x + x^2
  return QuadExt(1) - QuadExt(2) * p - QuadExt(3) * p * p;  // 1 - 2x - 3x^2
}

QuadExt tree_series_at_singularity() {
  // (1 + rho)/4 = 1 - sqrt2/2.
  return QuadExt(BigRational(1), BigRational(-1, 2));
}

QuadExt bender_limit(const BenderInput& input) {
  const QuadExt& b = input.singular_point;
  if (std::holds_alternative<Polynomial>(input.analytic_factor))
    return std::get<Polynomial>(input.analytic_factor).evaluate(b);
  return std::get<RationalFunction>(input.analytic_factor).evaluate(b);
}

BigRational bender_ratio_diagnostic(const BenderInput& input, int n) {
  if (!input.singular_series)
    throw std::invalid_argument("bender_ratio_diagnostic: no singular series attached");
  const UniSeries& s = *input.singular_series;
  if (n < 1 || n > s.order())
    throw std::invalid_argument("bender_ratio_diagnostic: n out of range");
  if (s.coeff(n).is_zero())
    throw std::domain_error("bender_ratio_diagnostic: zero coefficient b_n");
  return s.coeff(n - 1) / s.coeff(n);
}

QuadExt limit_subtree_probability(int k) {
  if (k < 1) throw std::invalid_argument("limit_subtree_probability: k must be >= 1");
  const QuadExt rho = dominant_singularity(TreeFamily::schroeder);
  const QuadExt r_k = schroeder::subtree_root_poly(k).evaluate(rho);
  return r_k / tree_series_at_singularity();
}

std::vector<QuadExt> subtree_limit_probabilities(int k_max) {
  if (k_max < 1) throw std::invalid_argument("subtree_limit_probabilities: k_max must be >= 1");
  const QuadExt rho = dominant_singularity(TreeFamily::schroeder);
  // At x = rho the bivariate closed form becomes a univariate series in y
  // over Q(sqrt2):  (1 + rho*y - sqrt(1 - 2 rho y + (rho^2-4rho) y^2)) / (2+2y),
  // whose y^k coefficient is R_k(rho).
  QuadSeries radicand(k_max);
  radicand.coeff_mut(0) = QuadExt(1);
  radicand.coeff_mut(1) = QuadExt(-2) * rho;
  if (k_max >= 2) radicand.coeff_mut(2) = rho * rho - QuadExt(4) * rho;
  QuadSeries numer = QuadSeries::monomial(k_max, 1, rho) - radicand.sqrt();
  numer.coeff_mut(0) += QuadExt(1);
  QuadSeries denom(k_max, {QuadExt(2), QuadExt(2)});
  const QuadSeries f = numer / denom;
  const QuadExt s_rho = tree_series_at_singularity();
  std::vector<QuadExt> probs(k_max + 1);
  for (int k = 1; k <= k_max; ++k) probs[k] = f.coeff(k) / s_rho;
  return probs;
}

QuadExt limit_balanced_probability(int k) {
  if (k < 0) throw std::invalid_argument("limit_balanced_probability: rank must be >= 0");
  const QuadExt rho = dominant_singularity(TreeFamily::schroeder);
  const RationalFunction b = schroeder::balanced_root_gf(k);
  // evaluate() throws if the denominator vanishes at rho.
  return b.evaluate(rho) / tree_series_at_singularity();
}

PartialSum tightness_partial_sum(int k_max, TreeFamily family) {
  if (k_max < 1) throw std::invalid_argument("tightness_partial_sum: k_max must be >= 1");
  QuadExt sum;
  if (family == TreeFamily::schroeder) {
    const std::vector<QuadExt> probs = subtree_limit_probabilities(k_max);
    for (int k = 1; k <= k_max; ++k) sum += probs[k];
  } else {
    const UniSeries t = motzkin::tree_series(k_max);
    mpz_class power(1);
    for (int k = 1; k <= k_max; ++k) {
      power *= 3;
      sum += QuadExt(BigRational(t.coeff(k).numerator(), power));
    }
  }
  return {sum, sum.to_decimal(12)};
}

TightnessCertificate schroeder_tightness_certificate() {
  const QuadExt rho = dominant_singularity(TreeFamily::schroeder);
  // Radicand of the bivariate closed form, (xy)^2 + 2xy + 1 - 4xy(y+1),
  // at (x, y) = (rho, 1).
  const QuadExt radicand = rho * rho + QuadExt(2) * rho + QuadExt(1) - QuadExt(8) * rho;
  const QuadExt closed = (QuadExt(1) + rho) / QuadExt(4);  // sqrt term vanished
  const QuadExt s_rho = tree_series_at_singularity();
  return {radicand, closed, s_rho, radicand.is_zero() && closed == s_rho};
}

const std::vector<std::string>& printed_subtree_table() {
  static const std::vector<std::string> t = {"",       "0.2929", "0",      "0.0503",
                                             "0.0086", "0.0187", "0.0076", "0.0097"};
  return t;
}

const std::vector<std::string>& printed_balanced_table() {
  static const std::vector<std::string> t = {"0.2929", "0.0607", "0.0022", "0.000003"};
  return t;
}

QuadExt printed_leaf_closed_form() {
  // (1 + sqrt2) / (sqrt2 * (3 + sqrt8)) with sqrt8 = 2*sqrt2.
  const QuadExt sqrt2 = QuadExt::sqrt2();
  const QuadExt num = QuadExt(1) + sqrt2;
  const QuadExt den = sqrt2 * (QuadExt(3) + QuadExt(2) * sqrt2);
  return num / den;
}

namespace {

BigRational parse_decimal(const std::string& s) {
  const auto dot = s.find('.');
  if (dot == std::string::npos) return BigRational(mpz_class(s));
  const std::string digits = s.substr(0, dot) + s.substr(dot + 1);
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, s.size() - dot - 1);
  return BigRational(mpz_class(digits), scale);
}

DiscrepancyRow make_row(int k, QuadExt computed, const std::string& printed,
                        std::optional<QuadExt> closed_form) {
  DiscrepancyRow row;
  row.k = k;
  row.computed = std::move(computed);
  row.printed = printed;
  row.closed_form = closed_form;
  if (closed_form) {
    row.ratio = row.computed / *closed_form;
  } else {
    const BigRational p = parse_decimal(printed);
    if (!p.is_zero()) row.ratio = row.computed / QuadExt(p);
  }
  return row;
}

}  // namespace

DiscrepancyReport discrepancy_report(const std::string& table) {
  DiscrepancyReport report;
  report.table = table;
  if (table == "subtree") {
    const auto& printed = printed_subtree_table();
    const std::vector<QuadExt> probs = subtree_limit_probabilities(7);
    for (int k = 1; k <= 7; ++k) {
      // Row k = 1 is the leaf probability, the one value the source also
      // states in closed form; its ratio is exact.
      std::optional<QuadExt> closed;
      if (k == 1) closed = printed_leaf_closed_form();
      report.rows.push_back(make_row(k, probs[k], printed[k], closed));
    }
  } else if (table == "balanced") {
    const auto& printed = printed_balanced_table();
    for (int k = 0; k <= 3; ++k) {
      std::optional<QuadExt> closed;
      if (k == 0) closed = printed_leaf_closed_form();
      report.rows.push_back(make_row(k, limit_balanced_probability(k), printed[k], closed));
    }
  } else if (table == "leaf") {
    report.rows.push_back(
        make_row(1, limit_subtree_probability(1), "0.2929", printed_leaf_closed_form()));
  } else {
    throw std::invalid_argument("discrepancy_report: unknown table " + table);
  }
  return report;
}

ConvergenceTable convergence_table(const std::string& statistic, const std::vector<int>& n_list) {
  if (n_list.empty()) throw std::invalid_argument("convergence_table: empty n list");
  int max_n = 1;
  for (int n : n_list) {
    if (n < 1) throw std::invalid_argument("convergence_table: n must be >= 1");
    max_n = std::max(max_n, n);
  }

  ConvergenceTable out;
  out.statistic = statistic;

  UniSeries numer(0);
  const UniSeries context = schroeder::context_series(max_n);
  const UniSeries vertices = schroeder::tree_series(max_n) * context;
  if (statistic == "leaf") {
    numer = schroeder::subtree_root_poly(1).to_series(max_n) * context;
    out.limit = limit_subtree_probability(1);
  } else if (statistic.rfind("subtree:", 0) == 0) {
    const int k = std::stoi(statistic.substr(8));
    numer = schroeder::subtree_root_poly(k).to_series(max_n) * context;
    out.limit = limit_subtree_probability(k);
  } else if (statistic.rfind("balanced:", 0) == 0) {
    const int k = std::stoi(statistic.substr(9));
    numer = schroeder::balanced_root_gf(k).to_series(max_n) * context;
    out.limit = limit_balanced_probability(k);
  } else {
    throw std::invalid_argument("convergence_table: unknown statistic " + statistic);
  }

  for (int n : n_list) {
    ConvergencePoint pt;
    pt.n = n;
    pt.finite = numer.coeff(n) / vertices.coeff(n);
    pt.abs_diff = (QuadExt(pt.finite) - out.limit).abs();
    out.points.push_back(std::move(pt));
  }
  return out;
}

}  // namespace limits
}  // namespace treegf
