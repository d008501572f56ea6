#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "treegf/oracle.hpp"
#include "treegf/polynomial.hpp"
#include "treegf/quadratic.hpp"
#include "treegf/series.hpp"

namespace treegf {
namespace limits {

/// rho = 3 - 2*sqrt(2) for Schroeder (smaller root of 1-6x+x^2),
/// 1/3 for Motzkin (root of 1-2x-3x^2 in (0,1)).
QuadExt dominant_singularity(TreeFamily family);

/// The defining radicand evaluated at the returned singularity; exactly
/// zero for both families (used as a self-check and in tests).
QuadExt singularity_residual(TreeFamily family);

/// S evaluated at rho: (1+rho)/4 = (2-sqrt2)/2 (the radical vanishes).
QuadExt tree_series_at_singularity();

/// Input to the coefficient-ratio limit lemma c_n ~ A(b) b_n for
/// C = A * B: the analytic factor A, the point b, and optionally the
/// singular factor's coefficients for ratio diagnostics.
struct BenderInput {
  std::variant<Polynomial, RationalFunction> analytic_factor;
  QuadExt singular_point;
  std::optional<UniSeries> singular_series;
};

/// A(b), evaluated exactly in Q(sqrt2).
QuadExt bender_limit(const BenderInput& input);

/// b_{n-1} / b_n for the stored singular series (diagnostic for the
/// lemma's premise that the ratio approaches the singular point).
BigRational bender_ratio_diagnostic(const BenderInput& input, int n);

/// Limit fraction of vertices with a size-k subtree: R_k(rho) / S(rho).
QuadExt limit_subtree_probability(int k);

/// The first k_max subtree limit probabilities (index 0 unused), computed
/// in one pass by expanding the bivariate closed form at x = rho as a
/// power series in y over Q(sqrt2).  Agrees with the per-k polynomial
/// route and is the practical path for large k_max.
std::vector<QuadExt> subtree_limit_probabilities(int k_max);

/// Limit fraction of balanced rank-k vertices: B_k^*(rho) / S(rho).
QuadExt limit_balanced_probability(int k);

struct PartialSum {
  QuadExt value;
  std::string decimal;  // 12 fractional digits
};

/// Partial sum over k <= k_max of the subtree limit probabilities
/// (Schroeder) or M_k 3^-k (Motzkin).
PartialSum tightness_partial_sum(int k_max, TreeFamily family);

/// Evaluates the bivariate closed form at (rho, 1): the radicand is
/// exactly zero there, so the value collapses to (1+rho)/4 = S(rho),
/// certifying that the subtree limit probabilities sum to exactly 1.
struct TightnessCertificate {
  QuadExt radicand_at_point;  // exactly 0
  QuadExt closed_form_value;  // (1 + rho)/4
  QuadExt tree_series_value;  // S(rho)
  bool holds;                 // radicand == 0 and values equal
};
TightnessCertificate schroeder_tightness_certificate();

/// One row of the audit of the published probability tables: the exact
/// computed limit, the printed decimal it is compared against, and their
/// exact ratio.  Where the source states a closed form (the leaf
/// probability, printed as 0.2929), the ratio uses that exact closed form
/// and simplifies to exactly 2.
struct DiscrepancyRow {
  int k = 0;
  QuadExt computed;
  std::string printed;                  // decimal as printed in the table
  std::optional<QuadExt> closed_form;   // exact reference when one exists
  std::optional<QuadExt> ratio;         // computed / reference; absent when printed is 0
};

struct DiscrepancyReport {
  std::string table;  // "subtree", "balanced" or "leaf"
  std::vector<DiscrepancyRow> rows;
};

DiscrepancyReport discrepancy_report(const std::string& table);

/// Printed table constants (k-indexed from 1 for subtree, 0 for balanced).
const std::vector<std::string>& printed_subtree_table();
const std::vector<std::string>& printed_balanced_table();

/// The published closed form for the leaf-probability limit,
/// (1+sqrt2)/(sqrt2*(3+sqrt8)), as an exact field element (= (2-sqrt2)/2).
QuadExt printed_leaf_closed_form();

struct ConvergencePoint {
  int n = 0;
  BigRational finite;  // exact finite-n probability
  QuadExt abs_diff;    // |finite - limit|, exact
};

struct ConvergenceTable {
  std::string statistic;  // "subtree:k", "balanced:k" or "leaf"
  QuadExt limit;
  std::vector<ConvergencePoint> points;
};

/// Finite-n probabilities against the exact limit for each requested n
/// (single series computation at max(n_list)).
ConvergenceTable convergence_table(const std::string& statistic, const std::vector<int>& n_list);

}  // namespace limits
}  // namespace treegf
