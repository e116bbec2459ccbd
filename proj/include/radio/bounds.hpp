#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "radio/ordering.hpp"

namespace radio {

/// Which formula applies, by |W(T1)| * |W(T2)| in {1, 2, 4}.
enum class BoundCase { one_center, two_centers, four_centers };

struct BoundReport {
  std::int64_t value;
  BoundCase bound_case;
  int xi;
  std::int64_t p;
  int d;
};

/// Lower bound on the radio number of T1 x T2 from the orders, diameters,
/// total levels and center counts of the factors. 0 for a single vertex.
BoundReport lower_bound(const ProductGraph& g);

enum class Attainability {
  open,
  /// Both factors have two weight centers and the product is not P2 x P2:
  /// no radio labeling reaches lower_bound().
  strictly_above_bound,
};

Attainability attainability(const ProductGraph& g);

/// Largest product order accepted by the condition checkers.
inline constexpr int kMaxCheckedOrder = 10000;

enum class Condition {
  /// d(z_a, z_b) >= sum of consecutive level terms minus (b-a-1)(d+1), all a < b.
  distance_sum,
  /// Endpoint, level caps and phi caps for non-feasible pairs.
  level_phi,
  /// Of any two consecutive steps, one has length <= (d + xi) / 2.
  min_adjacent_steps,
  /// Every step has length <= (d + xi + 2) / 2.
  max_step,
  /// Levels <= (d + 1 - xi) / 2 and close pairs sit in different or opposite sectors.
  level_sector,
};

std::string_view condition_name(Condition c) noexcept;

/// A failed inequality lhs <= rhs (or lhs >= rhs for distance_sum) with
/// denominators cleared, at ordering positions a <= b.
struct Witness {
  int a;
  int b;
  std::int64_t lhs;
  std::int64_t rhs;
  std::string clause;
};

struct ConditionVerdict {
  Condition condition;
  bool holds;
  std::optional<Witness> witness;
};

/// Pairwise distance inequality over all a < b, with prefix sums.
/// Throws Error(not_feasible) unless the ordering is feasible and meets the
/// endpoint condition, Error(size_guard) above kMaxCheckedOrder.
ConditionVerdict check_distance_condition(const VertexOrdering& ord);

/// Level and phi form of the same characterization. Requires both factor
/// diameters >= 2 (Error(hypothesis_violated)) and a feasible ordering
/// (Error(not_feasible)); an endpoint failure is reported as a verdict.
ConditionVerdict check_level_condition(const VertexOrdering& ord);

/// The three sufficient conditions, in the order min_adjacent_steps,
/// max_step, level_sector. Requires |W(T1)| * |W(T2)| <= 2
/// (Error(hypothesis_violated)) and a feasible ordering meeting the
/// endpoint condition (Error(not_feasible)).
std::vector<ConditionVerdict> check_sufficient_conditions(const VertexOrdering& ord);

}  // namespace radio
