#include "radio/product.hpp"

#include <algorithm>
#include <set>

#include "radio/errors.hpp"

namespace radio {

namespace {

int tag(const Tree& t, int v) {
  return t.is_center(v) ? -1 - t.side(v) : t.branch(v);
}

}  // namespace

ProductGraph::ProductGraph(Tree t1, Tree t2) : t1_(std::move(t1)), t2_(std::move(t2)) {
  std::int64_t p = static_cast<std::int64_t>(t1_.order()) * t2_.order();
  if (p > kMaxOrder)
    throw Error(ErrorCode::size_guard,
                "product order " + std::to_string(p) + " exceeds " + std::to_string(kMaxOrder));
  for (int w1 : t1_.weight_centers())
    for (int w2 : t2_.weight_centers()) centers_.push_back(id(w1, w2));
  std::sort(centers_.begin(), centers_.end());

  std::set<SectorId> seen;
  for (int v = 0; v < order(); ++v) seen.insert(sector(v));
  num_sectors_ = static_cast<int>(seen.size());
}

int ProductGraph::id(int x, int y) const {
  if (x < 0 || x >= m() || y < 0 || y >= n())
    throw Error(ErrorCode::bad_index, "product vertex (" + std::to_string(x) + "," +
                                          std::to_string(y) + ") out of range");
  return x * n() + y;
}

ProductVertex ProductGraph::vertex(int v) const {
  if (v < 0 || v >= order()) throw Error(ErrorCode::bad_index, "product id " + std::to_string(v) + " out of range");
  return {v / n(), v % n()};
}

std::int64_t ProductGraph::total_level() const noexcept {
  return static_cast<std::int64_t>(n()) * t1_.total_level() +
         static_cast<std::int64_t>(m()) * t2_.total_level();
}

int ProductGraph::xi() const noexcept {
  return static_cast<int>(t1_.weight_centers().size() + t2_.weight_centers().size()) - 2;
}

SectorId ProductGraph::sector(int v) const {
  auto [x, y] = vertex(v);
  if (t1_.is_center(x) && t2_.is_center(y)) return {-1, -1};
  return {tag(t1_, x), tag(t2_, y)};
}

SectorRelation ProductGraph::relation(int a, int b) const {
  auto r1 = t1_.relation(a / n(), b / n());
  auto r2 = t2_.relation(a % n(), b % n());
  using B = BranchRelation;
  if (r1 == B::different && r2 == B::different) return SectorRelation::different;
  if ((r1 == B::different && r2 == B::opposite) || (r1 == B::opposite && r2 == B::different))
    return SectorRelation::opposite;
  if (r1 == B::opposite && r2 == B::opposite) return SectorRelation::separate;
  return SectorRelation::same;
}

PairMetrics ProductGraph::metrics(int a, int b) const {
  return {distance(a, b), phi(a, b), delta(a, b)};
}

std::vector<int> ProductGraph::neighbors(int v) const {
  auto [x, y] = vertex(v);
  std::vector<int> out;
  for (int x2 : t1_.neighbors(x)) out.push_back(x2 * n() + y);
  for (int y2 : t2_.neighbors(y)) out.push_back(x * n() + y2);
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t ProductGraph::edge_count() const noexcept {
  return static_cast<std::int64_t>(m()) * (n() - 1) + static_cast<std::int64_t>(n()) * (m() - 1);
}

}  // namespace radio
