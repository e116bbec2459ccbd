#include "radio/ordering.hpp"

#include "radio/errors.hpp"

namespace radio {

namespace {

std::vector<int> to_ids(const ProductGraph& g, std::span<const ProductVertex> seq) {
  std::vector<int> ids;
  ids.reserve(seq.size());
  for (const auto& v : seq) {
    if (v.x < 0 || v.x >= g.m() || v.y < 0 || v.y >= g.n())
      throw Error(ErrorCode::invalid_ordering, "vertex (" + std::to_string(v.x) + "," +
                                                   std::to_string(v.y) + ") is not in the product");
    ids.push_back(g.id(v));
  }
  return ids;
}

}  // namespace

VertexOrdering::VertexOrdering(std::shared_ptr<const ProductGraph> graph, std::vector<int> sequence)
    : graph_(std::move(graph)), seq_(std::move(sequence)) {
  if (!graph_) throw Error(ErrorCode::invalid_ordering, "ordering needs a graph");
  const int p = graph_->order();
  if (static_cast<int>(seq_.size()) != p)
    throw Error(ErrorCode::invalid_ordering, "ordering has " + std::to_string(seq_.size()) +
                                                 " entries for " + std::to_string(p) + " vertices");
  std::vector<char> seen(p, 0);
  for (int v : seq_) {
    if (v < 0 || v >= p) throw Error(ErrorCode::invalid_ordering, "vertex id " + std::to_string(v) + " out of range");
    if (seen[v]) throw Error(ErrorCode::invalid_ordering, "vertex id " + std::to_string(v) + " repeated");
    seen[v] = 1;
  }
}

VertexOrdering::VertexOrdering(std::shared_ptr<const ProductGraph> graph,
                               std::span<const ProductVertex> sequence)
    : VertexOrdering(graph, graph ? to_ids(*graph, sequence) : std::vector<int>{}) {}

std::vector<int> VertexOrdering::positions() const {
  std::vector<int> pos(seq_.size());
  for (size_t t = 0; t < seq_.size(); ++t) pos[seq_[t]] = static_cast<int>(t);
  return pos;
}

SectorRelation required_relation(const ProductGraph& g) {
  switch (g.center_count()) {
    case 1: return SectorRelation::different;
    case 2: return SectorRelation::opposite;
    default: return SectorRelation::separate;
  }
}

bool is_feasible_pair(const ProductGraph& g, int a, int b) {
  return a != b && g.relation(a, b) == required_relation(g);
}

FeasibilityReport is_feasible_ordering(const VertexOrdering& ord) {
  const auto& g = ord.graph();
  const int p = ord.size();
  const bool four = g.center_count() == 4;
  for (int t = 0; t + 1 < p; ++t) {
    int a = ord[t], b = ord[t + 1];
    bool ok = four && t == p / 2 - 1 ? g.relation(a, b) == SectorRelation::opposite
                                     : is_feasible_pair(g, a, b);
    if (!ok) return {false, t};
  }
  return {true, std::nullopt};
}

bool satisfies_endpoint_condition(const VertexOrdering& ord) {
  const auto& g = ord.graph();
  int ends = g.level(ord[0]) + g.level(ord[ord.size() - 1]);
  return ends == (g.center_count() == 1 ? 1 : 0);
}

std::int64_t delta_sum(const VertexOrdering& ord) {
  const auto& g = ord.graph();
  std::int64_t s = 0;
  for (int t = 0; t + 1 < ord.size(); ++t) s += g.delta(ord[t], ord[t + 1]);
  return s;
}

}  // namespace radio
