#include "radio/bounds.hpp"

#include <algorithm>

#include "radio/errors.hpp"

namespace radio {

BoundReport lower_bound(const ProductGraph& g) {
  const std::int64_t p = g.order(), d = g.diameter();
  const std::int64_t levels = 2 * g.total_level();
  BoundReport r{0, BoundCase::one_center, g.xi(), p, static_cast<int>(d)};
  switch (g.center_count()) {
    case 1:
      r.bound_case = BoundCase::one_center;
      r.value = (p - 1) * (d + 1) - levels + 1;
      break;
    case 2:
      r.bound_case = BoundCase::two_centers;
      r.value = (p - 1) * d - levels;
      break;
    default:
      r.bound_case = BoundCase::four_centers;
      r.value = (p - 1) * (d - 1) - levels + 1;
      break;
  }
  // The +1 comes from the endpoint levels, which do not exist for one vertex.
  if (p == 1) r.value = 0;
  return r;
}

Attainability attainability(const ProductGraph& g) {
  if (g.center_count() == 4 && !(g.m() == 2 && g.n() == 2)) return Attainability::strictly_above_bound;
  return Attainability::open;
}

std::string_view condition_name(Condition c) noexcept {
  switch (c) {
    case Condition::distance_sum: return "distance_sum";
    case Condition::level_phi: return "level_phi";
    case Condition::min_adjacent_steps: return "min_adjacent_steps";
    case Condition::max_step: return "max_step";
    case Condition::level_sector: return "level_sector";
  }
  return "unknown";
}

namespace {

void guard_size(const VertexOrdering& ord) {
  if (ord.size() > kMaxCheckedOrder)
    throw Error(ErrorCode::size_guard, "condition checks are limited to " + std::to_string(kMaxCheckedOrder) +
                                           " vertices, got " + std::to_string(ord.size()));
}

void require_feasible(const VertexOrdering& ord) {
  auto rep = is_feasible_ordering(ord);
  if (!rep.feasible)
    throw Error(ErrorCode::not_feasible, "consecutive pair at position " + std::to_string(*rep.first_violation) +
                                             " is not feasible");
}

void require_endpoints(const VertexOrdering& ord) {
  if (!satisfies_endpoint_condition(ord))
    throw Error(ErrorCode::not_feasible, "endpoint levels L(z_0) + L(z_{p-1}) do not match the center count");
}

// step[t] = L(z_t) + L(z_{t+1}) + delta(z_t, z_{t+1}); prefix[k] = sum of step[0..k-1].
std::vector<std::int64_t> step_prefix(const VertexOrdering& ord) {
  const auto& g = ord.graph();
  std::vector<std::int64_t> prefix(ord.size(), 0);
  for (int t = 0; t + 1 < ord.size(); ++t) {
    int a = ord[t], b = ord[t + 1];
    prefix[t + 1] = prefix[t] + g.level(a) + g.level(b) + g.delta(a, b);
  }
  return prefix;
}

}  // namespace

ConditionVerdict check_distance_condition(const VertexOrdering& ord) {
  guard_size(ord);
  require_feasible(ord);
  require_endpoints(ord);
  const auto& g = ord.graph();
  const int p = ord.size();
  const std::int64_t d1 = g.diameter() + 1;
  auto prefix = step_prefix(ord);
  std::int64_t max_step = 0;
  for (int t = 0; t + 1 < p; ++t) max_step = std::max(max_step, prefix[t + 1] - prefix[t]);
  // If no step exceeds d + 1 the right-hand side never grows with b, and a
  // value <= 1 is met by any pair of distinct vertices.
  const bool monotone = max_step <= d1;
  for (int a = 0; a < p; ++a) {
    for (int b = a + 1; b < p; ++b) {
      std::int64_t rhs = prefix[b] - prefix[a] - (b - a - 1) * d1;
      if (monotone && rhs <= 1) break;
      std::int64_t lhs = g.distance(ord[a], ord[b]);
      if (lhs < rhs) return {Condition::distance_sum, false, Witness{a, b, lhs, rhs, "distance"}};
    }
  }
  return {Condition::distance_sum, true, std::nullopt};
}

ConditionVerdict check_level_condition(const VertexOrdering& ord) {
  const auto& g = ord.graph();
  if (g.t1().diameter() < 2 || g.t2().diameter() < 2)
    throw Error(ErrorCode::hypothesis_violated, "both factor diameters must be at least 2");
  guard_size(ord);
  require_feasible(ord);
  const int p = ord.size();
  const std::int64_t d = g.diameter(), xi = g.xi();
  const bool four = g.center_count() == 4;
  const Condition c = Condition::level_phi;

  if (!satisfies_endpoint_condition(ord)) {
    std::int64_t ends = g.level(ord[0]) + g.level(ord[p - 1]);
    return {c, false, Witness{0, p - 1, ends, g.center_count() == 1 ? 1 : 0, "endpoints"}};
  }

  for (int s = 0; s < p; ++s) {
    bool middle = four && (s == p / 2 - 1 || s == p / 2);
    std::int64_t cap = middle ? d + 3 - 2 * xi : d + 1 - 2 * xi;
    std::int64_t lhs = 2 * g.level(ord[s]);
    if (lhs > cap) return {c, false, Witness{s, s, lhs, cap, "level"}};
  }

  // prefix_level[k] = sum of L(z_0..z_{k-1}).
  std::vector<std::int64_t> prefix_level(p + 1, 0);
  for (int t = 0; t < p; ++t) prefix_level[t + 1] = prefix_level[t] + g.level(ord[t]);
  const SectorRelation feasible = required_relation(g);
  for (int a = 0; a < p; ++a) {
    for (int b = a + 1; b < p; ++b) {
      int za = ord[a], zb = ord[b];
      if (g.relation(za, zb) == feasible) continue;
      std::int64_t mid = prefix_level[b] - prefix_level[a + 1];
      bool spans_middle = four && a <= p / 2 - 1 && p / 2 <= b;
      std::int64_t rhs = (b - a - 1) * (d + 1 - xi) - 2 * mid - (xi - g.delta(za, zb) - (spans_middle ? 1 : 0));
      std::int64_t lhs = 2 * g.phi(za, zb);
      if (lhs > rhs) return {c, false, Witness{a, b, lhs, rhs, "phi"}};
    }
  }
  return {c, true, std::nullopt};
}

std::vector<ConditionVerdict> check_sufficient_conditions(const VertexOrdering& ord) {
  const auto& g = ord.graph();
  if (g.center_count() > 2)
    throw Error(ErrorCode::hypothesis_violated, "needs at most two weight centers in the product");
  guard_size(ord);
  require_feasible(ord);
  require_endpoints(ord);
  const int p = ord.size();
  const std::int64_t d = g.diameter(), xi = g.xi();

  std::vector<std::int64_t> step(std::max(p - 1, 0));
  for (int t = 0; t + 1 < p; ++t) step[t] = g.distance(ord[t], ord[t + 1]);

  ConditionVerdict adjacent{Condition::min_adjacent_steps, true, std::nullopt};
  for (int t = 0; t + 2 < p; ++t) {
    std::int64_t lhs = 2 * std::min(step[t], step[t + 1]);
    if (lhs > d + xi) {
      adjacent = {Condition::min_adjacent_steps, false, Witness{t, t + 2, lhs, d + xi, "adjacent steps"}};
      break;
    }
  }

  ConditionVerdict longest{Condition::max_step, true, std::nullopt};
  for (int t = 0; t + 1 < p; ++t) {
    std::int64_t lhs = 2 * step[t];
    if (lhs > d + xi + 2) {
      longest = {Condition::max_step, false, Witness{t, t + 1, lhs, d + xi + 2, "step"}};
      break;
    }
  }

  ConditionVerdict sector{Condition::level_sector, true, std::nullopt};
  for (int s = 0; s < p && sector.holds; ++s) {
    std::int64_t lhs = 2 * g.level(ord[s]);
    if (lhs > d + 1 - xi) sector = {Condition::level_sector, false, Witness{s, s, lhs, d + 1 - xi, "level"}};
  }
  for (int a = 0; a < p && sector.holds; ++a) {
    for (int b = a + 1; b < p && b - a < d; ++b) {
      auto rel = g.relation(ord[a], ord[b]);
      if (rel != SectorRelation::different && rel != SectorRelation::opposite) {
        sector = {Condition::level_sector, false, Witness{a, b, b - a, d, "sector"}};
        break;
      }
    }
  }
  return {adjacent, longest, sector};
}

}  // namespace radio
