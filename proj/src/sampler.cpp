#include "treegf/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

#include "treegf/schroeder.hpp"

namespace treegf {
namespace sampler {

mpz_class RandomBits::below(const mpz_class& bound) {
  if (sgn(bound) <= 0) throw std::invalid_argument("RandomBits: bound must be positive");
  if (bound == 1) return 0;
  const size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
  const size_t words = (bits + 63) / 64;
  const int top_bits = static_cast<int>(bits - (words - 1) * 64);
  const std::uint64_t top_mask =
      top_bits >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << top_bits) - 1);
  while (true) {
    mpz_class v = 0;
    for (size_t i = 0; i < words; ++i) {
      std::uint64_t w = word();
      if (i == 0) w &= top_mask;  // first word is the most significant
      mpz_mul_2exp(v.get_mpz_t(), v.get_mpz_t(), 64);
      mpz_class lo(static_cast<unsigned long>(w & 0xffffffffu));
      mpz_class hi(static_cast<unsigned long>(w >> 32));
      v += (hi << 32) + lo;
    }
    if (v < bound) return v;
  }
}

SchroederSampler::SchroederSampler(int max_leaves) : max_leaves_(max_leaves) {
  if (max_leaves < 1) throw std::invalid_argument("SchroederSampler: need max_leaves >= 1");
  const UniSeries s = schroeder::tree_series(std::max(1, max_leaves));
  trees_.resize(max_leaves + 1);
  for (int n = 1; n <= max_leaves; ++n) trees_[n] = s.coeff(n).numerator();

  // forests_[m] = #(sequences of >= 1 trees, m leaves total)
  //            = s_m + sum_{c<m} s_c * forests_[m-c].
  forests_.assign(max_leaves + 1, 0);
  prefix_first_.assign(max_leaves + 1, {});
  for (int m = 1; m <= max_leaves; ++m) {
    prefix_first_[m].resize(m - 1);
    mpz_class acc = 0;
    for (int c = 1; c <= m - 1; ++c) {
      acc += trees_[c] * forests_[m - c];
      prefix_first_[m][c - 1] = acc;
    }
    forests_[m] = trees_[m] + acc;
    // A non-leaf root's children form a >= 2 forest; counts must agree.
    if (m >= 2 && acc != trees_[m])
      throw std::logic_error("SchroederSampler: forest counts disagree with tree counts");
  }
}

std::vector<PlaneTree> SchroederSampler::sample_forest(int total, bool at_least_two,
                                                       RandomBits& rng) const {
  std::vector<PlaneTree> out;
  int m = total;
  bool need_more = at_least_two;
  while (true) {
    if (m == 0) return out;
    mpz_class u;
    if (need_more) {
      // choose the first of >= 2 trees: total weight prefix_first_[m].back()
      u = rng.below(prefix_first_[m].back());
    } else {
      u = rng.below(forests_[m]);
      if (u < trees_[m]) {
        out.push_back(sample(m, rng));
        return out;
      }
      u -= trees_[m];
    }
    // binary search the first prefix strictly greater than u
    const auto& pref = prefix_first_[m];
    const auto it = std::upper_bound(pref.begin(), pref.end(), u);
    const int c = static_cast<int>(it - pref.begin()) + 1;
    out.push_back(sample(c, rng));
    m -= c;
    need_more = false;  // the remainder is a >= 1 forest
  }
}

PlaneTree SchroederSampler::sample(int n, RandomBits& rng) const {
  if (n < 1 || n > max_leaves_) throw std::invalid_argument("SchroederSampler: n out of range");
  if (n == 1) return PlaneTree{};
  PlaneTree root;
  root.children = sample_forest(n, /*at_least_two=*/true, rng);
  return root;
}

StatisticSpec StatisticSpec::parse(const std::string& text) {
  StatisticSpec spec;
  if (text == "leaf") {
    spec.kind = Statistic::leaf;
    spec.k = 1;
    return spec;
  }
  if (text.rfind("subtree:", 0) == 0) {
    spec.kind = Statistic::subtree;
    spec.k = std::stoi(text.substr(8));
    return spec;
  }
  if (text.rfind("balanced:", 0) == 0) {
    spec.kind = Statistic::balanced;
    spec.k = std::stoi(text.substr(9));
    return spec;
  }
  throw std::invalid_argument("unknown statistic: " + text);
}

std::string StatisticSpec::to_string() const {
  switch (kind) {
    case Statistic::leaf:
      return "leaf";
    case Statistic::subtree:
      return "subtree:" + std::to_string(k);
    case Statistic::balanced:
      return "balanced:" + std::to_string(k);
  }
  return "leaf";
}

MonteCarloResult monte_carlo_census(int n, long trials, std::uint64_t seed,
                                    const StatisticSpec& statistic) {
  if (trials < 1) throw std::invalid_argument("monte_carlo_census: trials must be >= 1");
  MonteCarloResult res;
  res.n = n;
  res.trials = trials;
  res.seed = seed;
  res.statistic = statistic;

  SchroederSampler sampler(n);
  RandomBits rng(seed);
  double sum_x = 0, sum_v = 0, sum_xx = 0, sum_xv = 0, sum_vv = 0;
  long long stat_total = 0, vertex_total = 0;
  for (long t = 0; t < trials; ++t) {
    const PlaneTree tree = sampler.sample(n, rng);
    const TreeStats st = tree_stats(tree);
    long long x = 0;
    for (const VertexStats& v : st.per_vertex) {
      switch (statistic.kind) {
        case Statistic::leaf:
          x += (v.subtree_size == 1);
          break;
        case Statistic::subtree:
          x += (v.subtree_size == statistic.k);
          break;
        case Statistic::balanced:
          x += (v.balanced && v.rank == statistic.k);
          break;
      }
    }
    const long long v = st.vertices;
    stat_total += x;
    vertex_total += v;
    sum_x += double(x);
    sum_v += double(v);
    sum_xx += double(x) * double(x);
    sum_xv += double(x) * double(v);
    sum_vv += double(v) * double(v);
  }
  res.stat_sum = mpz_class(static_cast<long>(stat_total));
  res.vertex_sum = mpz_class(static_cast<long>(vertex_total));
  res.estimate = BigRational(res.stat_sum, res.vertex_sum);

  // Ratio-estimator standard error: d_i = x_i - R v_i,
  // SE = sqrt(sum d_i^2 / (T-1)) / (sqrt(T) * mean(v)).
  const double ratio = double(stat_total) / double(vertex_total);
  const double sum_dd = sum_xx - 2 * ratio * sum_xv + ratio * ratio * sum_vv;
  const double t = double(trials);
  if (trials > 1 && sum_dd > 0) {
    res.std_error = std::sqrt(sum_dd / (t - 1)) / (std::sqrt(t) * (sum_v / t));
  } else {
    res.std_error = 0.0;
  }
  return res;
}

ChiSquared chi_squared_uniformity(int n, long trials, std::uint64_t seed) {
  const std::vector<PlaneTree> all = enumerate(TreeFamily::schroeder, n);
  std::unordered_map<std::string, int> index;
  index.reserve(all.size());
  for (size_t i = 0; i < all.size(); ++i) index.emplace(all[i].serialize(), int(i));

  std::vector<long> observed(all.size(), 0);
  SchroederSampler sampler(n);
  RandomBits rng(seed);
  for (long t = 0; t < trials; ++t) {
    const PlaneTree tree = sampler.sample(n, rng);
    observed[index.at(tree.serialize())] += 1;
  }
  const double expected = double(trials) / double(all.size());
  double chi2 = 0;
  for (long obs : observed) {
    const double d = double(obs) - expected;
    chi2 += d * d / expected;
  }
  return {static_cast<int>(all.size()), trials, chi2};
}

}  // namespace sampler
}  // namespace treegf
