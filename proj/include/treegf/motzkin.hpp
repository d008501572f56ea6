#pragma once

#include "treegf/rational.hpp"
#include "treegf/series.hpp"

namespace treegf {
namespace motzkin {

/// T(x): Motzkin trees (every vertex has at most 2 children) counted by
/// vertices; T = x(1 + T + T^2).  Coefficients 0, 1, 1, 2, 4, 9, 21, ...
UniSeries tree_series(int order);

/// 1/sqrt(1 - 2x - 3x^2), the pointing factor for Motzkin trees.
/// Coefficients 1, 1, 3, 7, 19, 51, ...
UniSeries context_series(int order);

/// M_k x^k / sqrt(1-2x-3x^2): vertices with a size-k subtree over all
/// Motzkin trees with n vertices, where M_k = [x^k] tree_series.
UniSeries subtree_series(int k, int order);

/// M_k with k >= 1 (the number of Motzkin trees with k vertices).
mpz_class tree_count(int k);

/// Limit fraction of vertices with a size-k subtree: M_k / 3^k.
BigRational limit_probability(int k);

}  // namespace motzkin
}  // namespace treegf
