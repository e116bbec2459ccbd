#pragma once

#include <cstdint>
#include <vector>

#include "radio/tree.hpp"

namespace radio {

/// A vertex (x, y) of T1 x T2. Flat id is x * n + y with n = |T2|.
struct ProductVertex {
  int x;
  int y;
  friend bool operator==(const ProductVertex&, const ProductVertex&) = default;
  friend auto operator<=>(const ProductVertex&, const ProductVertex&) = default;
};

/// Pair of per-factor tags: a branch id, or -1 - side for a weight center.
/// Every center x center vertex carries the single tag {-1, -1}.
struct SectorId {
  int b1;
  int b2;
  friend bool operator==(const SectorId&, const SectorId&) = default;
  friend auto operator<=>(const SectorId&, const SectorId&) = default;
};

enum class SectorRelation { same, different, opposite, separate };

struct PairMetrics {
  int distance;
  int phi;
  int delta;
};

/// Cartesian product of two trees. Distances and the level decomposition
/// come from the factor trees; nothing quadratic in p is stored.
class ProductGraph {
 public:
  static constexpr std::int64_t kMaxOrder = 100000;

  /// Throws Error(size_guard) when |T1| * |T2| > kMaxOrder.
  ProductGraph(Tree t1, Tree t2);

  const Tree& t1() const noexcept { return t1_; }
  const Tree& t2() const noexcept { return t2_; }
  /// Orders of the factors.
  int m() const noexcept { return t1_.order(); }
  int n() const noexcept { return t2_.order(); }
  int order() const noexcept { return m() * n(); }
  int diameter() const noexcept { return t1_.diameter() + t2_.diameter(); }

  int id(int x, int y) const;
  int id(ProductVertex v) const { return id(v.x, v.y); }
  ProductVertex vertex(int id) const;

  int level(int v) const { return t1_.level(v / n()) + t2_.level(v % n()); }
  std::int64_t total_level() const noexcept;

  /// W(T1) x W(T2) as flat ids, sorted.
  const std::vector<int>& weight_centers() const noexcept { return centers_; }
  int center_count() const noexcept { return static_cast<int>(centers_.size()); }
  /// |W(T1)| + |W(T2)| - 2.
  int xi() const noexcept;

  SectorId sector(int v) const;
  int num_sectors() const noexcept { return num_sectors_; }
  SectorRelation relation(int a, int b) const;

  int distance(int a, int b) const {
    return t1_.distance(a / n(), b / n()) + t2_.distance(a % n(), b % n());
  }
  int phi(int a, int b) const { return t1_.phi(a / n(), b / n()) + t2_.phi(a % n(), b % n()); }
  int delta(int a, int b) const { return t1_.delta(a / n(), b / n()) + t2_.delta(a % n(), b % n()); }
  PairMetrics metrics(int a, int b) const;

  std::vector<int> neighbors(int v) const;
  std::int64_t edge_count() const noexcept;

 private:
  Tree t1_;
  Tree t2_;
  std::vector<int> centers_;
  int num_sectors_ = 0;
};

}  // namespace radio
