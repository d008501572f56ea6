#pragma once

#include <string>

#include "treegf/biseries.hpp"
#include "treegf/polynomial.hpp"
#include "treegf/series.hpp"

namespace treegf {
namespace schroeder {

/// sqrt(1 - 6x + x^2), the singular factor shared by every Schroeder
/// series here.
UniSeries radical_series(int order);

/// S(x): trees with n leaves, every internal vertex with >= 2 children.
/// Coefficients 0, 1, 1, 3, 11, 45, 197, ...
UniSeries tree_series(int order);

/// A(x) = (3 - x + sqrt(1-6x+x^2)) / (4 sqrt(1-6x+x^2)), the pointing
/// factor that turns a root-property series into an all-vertices series.
/// Also satisfies A = 1/(2 - (1-S)^-2); both routes are computed and
/// compared, a mismatch throws.
UniSeries context_series(int order);

/// V(x,y) with x marking leaves and y marking vertices, solved order by
/// order from V = xy - xyV + (1+y)V^2 and cross-checked against the
/// closed form (1 + xy - sqrt(1 - 2xy + (x^2-4x)y^2)) / (2y+2), whose
/// numerator must divide exactly by 2(1+y) at every x-order.
BiSeries vertex_bivariate(int order_x);

/// R_k(x): trees with exactly k vertices, by leaf count; the coefficient
/// of y^k in vertex_bivariate.  Zero polynomial iff k = 2.
Polynomial subtree_root_poly(int k);

/// T_k(x) = R_k(x) * A(x): vertices with a size-k subtree over all trees.
UniSeries subtree_series(int k, int order);

/// V(x) = S(x) * A(x): total vertices over all trees with n leaves.
/// Coefficients 0, 1, 3, 14, 70, 363, ...
UniSeries vertex_series(int order);

/// Exact fraction of vertices with a size-k subtree among all trees with
/// n leaves: [x^n]T_k / [x^n]V.
BigRational finite_probability(int k, int n);

/// B_k^*(x): trees whose root is balanced of rank k, via the recurrence
/// B_k^* = (B_{k-1}^*)^2 / (1 - B_{k-1}^*) from B_0^* = x.
RationalFunction balanced_root_gf(int k);

/// B_k(x) = B_k^*(x) * A(x): balanced rank-k vertices over all trees.
UniSeries balanced_series(int k, int order);

enum class AsymptoticKind { trees, leaves, vertices };

AsymptoticKind asymptotic_kind_from_string(const std::string& name);

/// High-precision evaluation of the closed asymptotic formulas
///   trees:    (1+sqrt2) (n-1)^(-3/2) (3+sqrt8)^(n-1) / (2^(7/4) sqrt(pi))
///   leaves:   (1+sqrt2) (n-1)^(-1/2) (3+sqrt8)^(n-1) / (2^(7/4) sqrt(pi))
///   vertices: (3+sqrt8)^n / (2^(9/4) sqrt(pi n))
/// rendered in scientific notation with `significant` digits.
std::string asymptotic_estimate(AsymptoticKind which, unsigned long n, int significant = 15);

/// estimate / exact as a double (exact is the true integer count).
double asymptotic_ratio(AsymptoticKind which, unsigned long n, const mpz_class& exact);

}  // namespace schroeder
}  // namespace treegf
