#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "radio/labeling.hpp"

namespace radio {

/// Largest product order the exhaustive search accepts.
inline constexpr int kMaxOracleOrder = 20;

struct SearchBudget {
  /// 0 means unlimited.
  std::int64_t max_nodes = 0;
  /// Wall clock limit; 0 means unlimited.
  double max_seconds = 0;
  /// Span of a labeling known from elsewhere; caps hi in a bracket result.
  std::optional<std::int64_t> initial_upper_bound;
  /// Restrict the first vertex to one representative per automorphism orbit.
  bool symmetry_breaking = true;
  /// Worker threads for first-vertex branches.
  int jobs = 1;
  /// Entries kept in the failure memo of each branch before it stops growing.
  std::size_t memo_limit = 1u << 21;
};

enum class OracleStatus { exact, bracket };

struct OracleResult {
  OracleStatus status;
  /// rn(G) lies in [lo, hi]; lo == hi when exact.
  std::int64_t lo;
  std::int64_t hi;
  std::int64_t nodes_explored;
  /// A labeling of span hi, when one is known.
  std::optional<RadioLabeling> best;
};

/// Minimum span of a radio labeling of g by exhaustive search. Every
/// labeling can be pushed down to one where each label is the smallest
/// value allowed by the earlier ones, so the search runs over vertex
/// orderings with those tight labels. Distances come from BFS on the
/// product itself. Throws Error(size_guard) above kMaxOracleOrder.
/// Node counts and the result do not depend on jobs unless the budget
/// runs out.
OracleResult exact_rn(std::shared_ptr<const ProductGraph> g, const SearchBudget& budget = {});

/// Direct search over label assignments, for cross-checking on p <= 6.
std::int64_t exact_rn_naive(const ProductGraph& g);

/// Argmin of the summed BFS distance over the materialized product, sorted.
/// Throws Error(size_guard) above 4096 vertices.
std::vector<int> brute_force_weight_centers(const ProductGraph& g);

/// All-pairs BFS distances on the materialized product (p <= 4096).
std::vector<std::vector<int>> bfs_distance_matrix(const ProductGraph& g);

/// Vertex orbits of a tree under its automorphisms: orbit[v] is the smallest
/// vertex with an isomorphic rooted tree.
std::vector<int> tree_orbits(const Tree& t);

}  // namespace radio
