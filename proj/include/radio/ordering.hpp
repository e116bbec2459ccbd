#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "radio/product.hpp"

namespace radio {

/// A permutation z_0 .. z_{p-1} of the vertices of a product graph.
class VertexOrdering {
 public:
  /// Throws Error(invalid_ordering) unless sequence is a bijection onto [0, p).
  VertexOrdering(std::shared_ptr<const ProductGraph> graph, std::vector<int> sequence);
  VertexOrdering(std::shared_ptr<const ProductGraph> graph, std::span<const ProductVertex> sequence);

  const ProductGraph& graph() const noexcept { return *graph_; }
  const std::shared_ptr<const ProductGraph>& graph_ptr() const noexcept { return graph_; }
  const std::vector<int>& sequence() const noexcept { return seq_; }
  int size() const noexcept { return static_cast<int>(seq_.size()); }
  int operator[](int t) const { return seq_.at(t); }
  /// Inverse permutation: position of each vertex.
  std::vector<int> positions() const;

 private:
  std::shared_ptr<const ProductGraph> graph_;
  std::vector<int> seq_;
};

/// Sector relation required between consecutive vertices for |W(G)| = 1, 2, 4.
SectorRelation required_relation(const ProductGraph& g);

bool is_feasible_pair(const ProductGraph& g, int a, int b);

struct FeasibilityReport {
  bool feasible;
  /// Smallest t such that the pair (z_t, z_{t+1}) breaks the rule.
  std::optional<int> first_violation;
};

/// Every consecutive pair must be feasible, except that with four weight
/// centers the pair at t = p/2 - 1 must be opposite instead.
FeasibilityReport is_feasible_ordering(const VertexOrdering& ord);

/// L(z_0) + L(z_{p-1}) equals 1 with one weight center and 0 otherwise.
bool satisfies_endpoint_condition(const VertexOrdering& ord);

/// Sum of delta(z_t, z_{t+1}) over t in [0, p-2].
std::int64_t delta_sum(const VertexOrdering& ord);

}  // namespace radio
