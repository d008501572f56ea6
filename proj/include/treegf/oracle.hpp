#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace treegf {

enum class TreeFamily { schroeder, motzkin };

std::string family_name(TreeFamily family);

/// Rooted plane tree with ordered children.  Schroeder validity: every
/// vertex has 0 or >= 2 children; Motzkin validity: every vertex has at
/// most 2 children.
struct PlaneTree {
  std::vector<PlaneTree> children;

  bool is_leaf() const { return children.empty(); }
  int vertex_count() const;
  int leaf_count() const;
  bool is_valid_schroeder() const;
  bool is_valid_motzkin() const;

  /// Canonical nested-parentheses form, e.g. "(()())" for the 2-leaf
  /// Schroeder tree.  Distinct trees serialize distinctly.
  std::string serialize() const;
};

/// Per-vertex statistics in preorder (root first).
struct VertexStats {
  int subtree_size = 0;  // vertices in the subtree rooted here
  int rank = 0;          // shortest descendant path to a leaf, in edges
  bool balanced = false; // all root-to-leaf paths through descendants equal
};

struct TreeStats {
  int leaves = 0;
  int vertices = 0;
  std::vector<VertexStats> per_vertex;  // preorder
};

TreeStats tree_stats(const PlaneTree& t);

/// Exact census of a vertex statistic over every tree of a given size.
struct CensusTable {
  TreeFamily family = TreeFamily::schroeder;
  int n = 0;                          // leaves (Schroeder) or vertices (Motzkin)
  std::string statistic;              // "subtree" or "balanced"
  std::map<int, std::int64_t> counts; // statistic value -> vertex count
  std::int64_t total_trees = 0;
  std::int64_t total_vertices = 0;

  std::int64_t count(int k) const {
    auto it = counts.find(k);
    return it == counts.end() ? 0 : it->second;
  }
  /// CSV rows "family,n,statistic,k,count" (no header).
  std::string to_csv() const;
};

inline constexpr int kSchroederEnumerationCap = 10;
inline constexpr int kMotzkinEnumerationCap = 14;

int default_enumeration_cap(TreeFamily family);

/// Visits every tree of the family with size n exactly once, in a fixed
/// deterministic order (children-count-major, compositions in lexicographic
/// order, child tuples in odometer order with the leftmost child slowest).
/// Sizes above the cap are refused.
void enumerate_trees(TreeFamily family, int n, const std::function<void(const PlaneTree&)>& visit,
                     int cap = -1);

/// Materialized variant of enumerate_trees, same order.
std::vector<PlaneTree> enumerate(TreeFamily family, int n, int cap = -1);

/// Number of trees visited by enumerate_trees.
std::int64_t enumerate_count(TreeFamily family, int n, int cap = -1);

CensusTable subtree_census(TreeFamily family, int n, int cap = -1);
CensusTable balanced_census(int n, int cap = -1);  // Schroeder family

}  // namespace treegf
