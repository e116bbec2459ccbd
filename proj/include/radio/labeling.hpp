#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "radio/ordering.hpp"

namespace radio {

/// Integer labels indexed by flat product vertex id.
class RadioLabeling {
 public:
  /// Throws Error(bad_index) if the label count differs from the graph order.
  RadioLabeling(std::shared_ptr<const ProductGraph> graph, std::vector<std::int64_t> labels);

  const ProductGraph& graph() const noexcept { return *graph_; }
  const std::shared_ptr<const ProductGraph>& graph_ptr() const noexcept { return graph_; }
  const std::vector<std::int64_t>& labels() const noexcept { return labels_; }
  std::int64_t label(int v) const { return labels_.at(v); }
  /// max - min; 0 for an empty labeling.
  std::int64_t span() const noexcept;
  /// Same labeling shifted so the smallest label is 0.
  RadioLabeling normalized() const;

 private:
  std::shared_ptr<const ProductGraph> graph_;
  std::vector<std::int64_t> labels_;
};

/// f(z_0) = 0 and f(z_{i+1}) = f(z_i) + d + 1 - L(z_i) - L(z_{i+1}) - delta(z_i, z_{i+1}).
/// Throws Error(negative_step) if an increment is not positive.
RadioLabeling greedy_label(const VertexOrdering& ord);

struct Violation {
  int u;
  int v;
  std::int64_t gap;
  int required;
  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Checks |f(u) - f(v)| >= d + 1 - d(u, v) over all pairs u < v.
/// Throws Error(duplicate_label) before any pair check if labels repeat.
/// Violations come back sorted by (u, v) whatever the worker count.
std::vector<Violation> verify(const RadioLabeling& lab, int jobs = 1);

/// Vertices in increasing label order. Throws Error(duplicate_label).
VertexOrdering ordering_from_labeling(const RadioLabeling& lab);

}  // namespace radio
