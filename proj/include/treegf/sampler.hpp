#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "treegf/oracle.hpp"
#include "treegf/rational.hpp"

namespace treegf {
namespace sampler {

/// Deterministic bit source (mt19937_64 is fully specified by the
/// standard, so the stream is identical across platforms) with unbiased
/// big-integer draws by rejection on raw bits.
class RandomBits {
 public:
  explicit RandomBits(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t word() { return eng_(); }

  /// Uniform integer in [0, bound); bound > 0.
  mpz_class below(const mpz_class& bound);

 private:
  std::mt19937_64 eng_;
};

/// Exactly uniform sampler over Schroeder trees with a fixed number of
/// leaves, by recursive decomposition with exact big-integer counts.
class SchroederSampler {
 public:
  explicit SchroederSampler(int max_leaves);

  int max_leaves() const { return max_leaves_; }
  const mpz_class& tree_count(int n) const { return trees_.at(n); }

  /// One tree with n leaves, uniform over all tree_count(n) of them.
  PlaneTree sample(int n, RandomBits& rng) const;

 private:
  std::vector<PlaneTree> sample_forest(int total, bool at_least_two, RandomBits& rng) const;

  int max_leaves_;
  std::vector<mpz_class> trees_;    // s_n
  std::vector<mpz_class> forests_;  // nonempty forests by total leaves
  // prefix_first_[m][c-1] = sum_{c'<=c} s_{c'} * forests_[m-c']; the
  // weight table for choosing the first tree of a >= 2 forest (total s_m)
  // or the continuation branch of a >= 1 forest.
  std::vector<std::vector<mpz_class>> prefix_first_;
};

enum class Statistic { subtree, balanced, leaf };

struct StatisticSpec {
  Statistic kind = Statistic::leaf;
  int k = 1;

  /// Parses "leaf", "subtree:K" or "balanced:K".
  static StatisticSpec parse(const std::string& text);
  std::string to_string() const;
};

/// Ratio estimator of the expected vertex fraction with the statistic:
/// sum of per-tree counts over sum of per-tree vertex totals, with the
/// ratio-estimator standard error.
struct MonteCarloResult {
  int n = 0;
  long trials = 0;
  std::uint64_t seed = 0;
  StatisticSpec statistic;
  mpz_class stat_sum;
  mpz_class vertex_sum;
  BigRational estimate;  // stat_sum / vertex_sum, exact
  double std_error = 0.0;
};

MonteCarloResult monte_carlo_census(int n, long trials, std::uint64_t seed,
                                    const StatisticSpec& statistic);

/// Chi-squared statistic of `trials` samples against the uniform
/// distribution over all trees with n leaves (n within the enumeration cap).
struct ChiSquared {
  int cells = 0;
  long trials = 0;
  double statistic = 0.0;
};

ChiSquared chi_squared_uniformity(int n, long trials, std::uint64_t seed);

}  // namespace sampler
}  // namespace treegf
