#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace radio {

struct Edge {
  int u;
  int v;
};

/// How two vertices of a tree sit relative to its weight center(s).
///
/// `opposite` only occurs in a tree with two weight centers w, w' and means
/// the vertices lie in different components of T - ww'. `different` means
/// their deepest common ancestor is a weight center (level 0). Everything
/// else is `same`.
enum class BranchRelation { same, different, opposite };

/// An immutable tree rooted at its weight center(s).
///
/// Construction validates the edge list and precomputes weight centers,
/// levels, parents toward the nearest center, branch ids and the diameter.
/// Queries are const and safe to share between threads.
class Tree {
 public:
  /// Branch id carried by weight centers.
  static constexpr int kCenterBranch = -1;

  /// Throws Error(bad_index) for endpoints outside [0, order) and
  /// Error(not_a_tree) unless the edges form a spanning tree.
  static Tree from_edges(int order, std::span<const Edge> edges);

  /// P_m with vertices 0..m-1 in path order.
  static Tree path(int m);
  /// K_{1,n}: hub 0, leaves 1..n.
  static Tree star(int n);

  int order() const noexcept { return static_cast<int>(adjacency_.size()); }
  int diameter() const noexcept { return diameter_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::span<const int> neighbors(int v) const { return adjacency_.at(v); }

  /// Vertices minimizing the total distance to all vertices, sorted.
  std::span<const int> weight_centers() const noexcept { return centers_; }
  bool is_center(int v) const { return level_.at(v) == 0; }

  /// Distance to the nearest weight center.
  int level(int v) const { return level_.at(v); }
  int max_level() const noexcept { return max_level_; }
  /// Sum of all levels.
  std::int64_t total_level() const noexcept { return total_level_; }

  std::optional<int> parent(int v) const;
  /// Index into weight_centers() of the center that roots v.
  int side(int v) const { return side_.at(v); }
  /// kCenterBranch for centers, otherwise a dense id in [0, num_branches()).
  int branch(int v) const { return branch_.at(v); }
  int num_branches() const noexcept { return num_branches_; }

  BranchRelation relation(int u, int v) const;

  /// Largest level among common ancestors of u and v, 0 when there are none.
  int phi(int u, int v) const;
  /// 1 iff u and v sit on opposite sides of the center edge.
  int delta(int u, int v) const { return side_.at(u) != side_.at(v) ? 1 : 0; }
  /// Path distance from the level decomposition L(u) + L(v) + delta - 2 phi.
  int distance(int u, int v) const;

  /// Plain BFS distances from source. Used to cross-check distance().
  std::vector<int> bfs_distances(int source) const;
  /// Sum of BFS distances from v to all vertices.
  std::int64_t weight(int v) const;

 private:
  Tree() = default;
  void index();
  int common_ancestor(int u, int v) const;

  std::vector<std::vector<int>> adjacency_;
  std::vector<Edge> edges_;
  std::vector<int> centers_;
  std::vector<int> level_;
  std::vector<int> parent_;
  std::vector<int> side_;
  std::vector<int> branch_;
  std::vector<int> phi_table_;  // order^2 entries, only for small trees
  int num_branches_ = 0;
  int max_level_ = 0;
  int diameter_ = 0;
  std::int64_t total_level_ = 0;
};

}  // namespace radio
