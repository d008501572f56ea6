#include "treegf/oracle.hpp"

#include <stdexcept>
#include <utility>

namespace treegf {

std::string family_name(TreeFamily family) {
  return family == TreeFamily::schroeder ? "schroeder" : "motzkin";
}

int PlaneTree::vertex_count() const {
  int total = 1;
  for (const PlaneTree& c : children) total += c.vertex_count();
  return total;
}

int PlaneTree::leaf_count() const {
  if (is_leaf()) return 1;
  int total = 0;
  for (const PlaneTree& c : children) total += c.leaf_count();
  return total;
}

bool PlaneTree::is_valid_schroeder() const {
  if (children.size() == 1) return false;
  for (const PlaneTree& c : children)
    if (!c.is_valid_schroeder()) return false;
  return true;
}

bool PlaneTree::is_valid_motzkin() const {
  if (children.size() > 2) return false;
  for (const PlaneTree& c : children)
    if (!c.is_valid_motzkin()) return false;
  return true;
}

std::string PlaneTree::serialize() const {
  std::string s = "(";
  for (const PlaneTree& c : children) s += c.serialize();
  return s + ")";
}

namespace {

// Bottom-up walk filling per_vertex in preorder; returns (subtree size,
// rank, longest path, balanced).
struct UpInfo {
  int size;
  int rank;
  int longest;
  bool balanced;
};

UpInfo stats_walk(const PlaneTree& t, TreeStats& out) {
  const size_t slot = out.per_vertex.size();
  out.per_vertex.emplace_back();
  out.vertices += 1;
  if (t.is_leaf()) {
    out.leaves += 1;
    out.per_vertex[slot] = {1, 0, true};
    return {1, 0, 0, true};
  }
  int size = 1, shortest = -1, longest = -1;
  bool all_balanced = true, equal_ranks = true;
  int first_rank = -1;
  for (const PlaneTree& c : t.children) {
    const UpInfo ci = stats_walk(c, out);
    size += ci.size;
    shortest = (shortest < 0) ? ci.rank : std::min(shortest, ci.rank);
    longest = std::max(longest, ci.longest);
    all_balanced = all_balanced && ci.balanced;
    if (first_rank < 0)
      first_rank = ci.rank;
    else
      equal_ranks = equal_ranks && (ci.rank == first_rank);
  }
  const int rank = shortest + 1;
  const bool balanced = all_balanced && equal_ranks;
  out.per_vertex[slot] = {size, rank, balanced};
  return {size, rank, longest + 1, balanced};
}

}  // namespace

TreeStats tree_stats(const PlaneTree& t) {
  TreeStats out;
  out.per_vertex.reserve(16);
  stats_walk(t, out);
  return out;
}

int default_enumeration_cap(TreeFamily family) {
  return family == TreeFamily::schroeder ? kSchroederEnumerationCap : kMotzkinEnumerationCap;
}

namespace {

using TreeList = std::vector<PlaneTree>;
using Visitor = std::function<void(const PlaneTree&)>;

// Sub-trees for sizes below the top level are memoized; the top level is
// streamed so a census never holds the full generation in memory.
class Enumerator {
 public:
  // memo_ is sized once so element addresses stay stable while emit()
  // holds pointers into it.
  Enumerator(TreeFamily family, int n_top) : family_(family), memo_(n_top + 1) {}

  const TreeList& lists(int n) {
    if (n >= 1 && memo_[n].empty()) {
      TreeList out;
      visit(n, [&out](const PlaneTree& t) { out.push_back(t); });
      memo_[n] = std::move(out);
    }
    return memo_[n];
  }

  void visit(int n, const Visitor& fn) {
    if (family_ == TreeFamily::schroeder) {
      if (n == 1) {
        fn(PlaneTree{});
        return;
      }
      // children-count-major: m = 2..n children
      for (int m = 2; m <= n; ++m) visit_compositions(n, m, fn);
    } else {
      if (n == 1) {
        fn(PlaneTree{});
        return;
      }
      // m = 1, then m = 2 children over the remaining n-1 vertices
      for (int m = 1; m <= 2 && m <= n - 1; ++m) visit_compositions(n - 1, m, fn);
    }
  }

 private:
  // All compositions of total into exactly m parts >= 1, lexicographic;
  // for each, the odometer product of memoized child lists.
  void visit_compositions(int total, int m, const Visitor& fn) {
    std::vector<int> parts(m);
    compose(total, m, 0, parts, fn);
  }

  void compose(int remaining, int m, int idx, std::vector<int>& parts, const Visitor& fn) {
    if (idx == m - 1) {
      parts[idx] = remaining;
      emit(parts, fn);
      return;
    }
    const int max_here = remaining - (m - 1 - idx);
    for (int c = 1; c <= max_here; ++c) {
      parts[idx] = c;
      compose(remaining - c, m, idx + 1, parts, fn);
    }
  }

  void emit(const std::vector<int>& parts, const Visitor& fn) {
    const int m = static_cast<int>(parts.size());
    std::vector<const TreeList*> pools(m);
    for (int i = 0; i < m; ++i) {
      pools[i] = &lists(parts[i]);
      if (pools[i]->empty()) return;
    }
    std::vector<size_t> pick(m, 0);
    PlaneTree t;
    t.children.resize(m);
    while (true) {
      for (int i = 0; i < m; ++i) t.children[i] = (*pools[i])[pick[i]];
      fn(t);
      int i = m - 1;  // leftmost child slowest
      while (i >= 0) {
        if (++pick[i] < pools[i]->size()) break;
        pick[i] = 0;
        --i;
      }
      if (i < 0) return;
    }
  }

  TreeFamily family_;
  std::vector<TreeList> memo_;
};

void check_size(TreeFamily family, int n, int cap) {
  if (cap < 0) cap = default_enumeration_cap(family);
  if (n < 1) throw std::invalid_argument("enumerate: size must be >= 1");
  if (n > cap)
    throw std::invalid_argument("enumerate: size " + std::to_string(n) +
                                " exceeds the enumeration cap " + std::to_string(cap));
}

}  // namespace

void enumerate_trees(TreeFamily family, int n, const Visitor& visit, int cap) {
  check_size(family, n, cap);
  Enumerator e(family, n);
  e.visit(n, visit);
}

std::vector<PlaneTree> enumerate(TreeFamily family, int n, int cap) {
  std::vector<PlaneTree> out;
  enumerate_trees(family, n, [&out](const PlaneTree& t) { out.push_back(t); }, cap);
  return out;
}

std::int64_t enumerate_count(TreeFamily family, int n, int cap) {
  std::int64_t c = 0;
  enumerate_trees(family, n, [&c](const PlaneTree&) { ++c; }, cap);
  return c;
}

CensusTable subtree_census(TreeFamily family, int n, int cap) {
  CensusTable table;
  table.family = family;
  table.n = n;
  table.statistic = "subtree";
  enumerate_trees(
      family, n,
      [&table](const PlaneTree& t) {
        const TreeStats st = tree_stats(t);
        table.total_trees += 1;
        table.total_vertices += st.vertices;
        for (const VertexStats& v : st.per_vertex) table.counts[v.subtree_size] += 1;
      },
      cap);
  return table;
}

CensusTable balanced_census(int n, int cap) {
  CensusTable table;
  table.family = TreeFamily::schroeder;
  table.n = n;
  table.statistic = "balanced";
  enumerate_trees(
      TreeFamily::schroeder, n,
      [&table](const PlaneTree& t) {
        const TreeStats st = tree_stats(t);
        table.total_trees += 1;
        table.total_vertices += st.vertices;
        for (const VertexStats& v : st.per_vertex)
          if (v.balanced) table.counts[v.rank] += 1;
      },
      cap);
  return table;
}

std::string CensusTable::to_csv() const {
  std::string out;
  for (const auto& [k, c] : counts) {
    out += family_name(family) + "," + std::to_string(n) + "," + statistic + "," +
           std::to_string(k) + "," + std::to_string(c) + "\n";
  }
  return out;
}

}  // namespace treegf
