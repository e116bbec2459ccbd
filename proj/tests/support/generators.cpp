#include "generators.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>


namespace radio::testing {

namespace {

// Free-tree canonical form: smallest rooted form over the weight centers.
std::string free_canon(const Tree& t) {
  std::string best;
  for (int c : t.weight_centers()) {
    std::vector<int> order{c}, par(t.order(), -1);
    par[c] = c;
    for (size_t i = 0; i < order.size(); ++i)
      for (int w : t.neighbors(order[i]))
        if (par[w] < 0) {
          par[w] = order[i];
          order.push_back(w);
        }
    std::vector<std::vector<std::string>> kids(t.order());
    std::string code;
    for (int i = t.order() - 1; i >= 0; --i) {
      int v = order[i];
      std::sort(kids[v].begin(), kids[v].end());
      code = "(";
      for (auto& s : kids[v]) code += s;
      code += ")";
      if (v != c) kids[par[v]].push_back(code);
    }
    if (best.empty() || code < best) best = code;
  }
  return best;
}

}  // namespace

std::vector<Tree> all_trees(int order) {
  std::vector<Tree> level{Tree::path(1)};
  for (int k = 2; k <= order; ++k) {
    std::map<std::string, Tree> next;
    for (const Tree& t : level) {
      for (int v = 0; v < t.order(); ++v) {
        auto edges = t.edges();
        edges.push_back({v, t.order()});
        Tree grown = Tree::from_edges(t.order() + 1, edges);
        next.emplace(free_canon(grown), std::move(grown));
      }
    }
    level.clear();
    for (auto& [_, t] : next) level.push_back(std::move(t));
  }
  return level;
}

Tree random_tree(int order, std::mt19937_64& rng) {
  if (order <= 2) return Tree::path(order);
  std::uniform_int_distribution<int> pick(0, order - 1);
  std::vector<int> prufer(order - 2);
  for (auto& x : prufer) x = pick(rng);
  std::vector<int> degree(order, 1);
  for (int x : prufer) ++degree[x];
  std::vector<Edge> edges;
  std::set<int> leaves;
  for (int v = 0; v < order; ++v)
    if (degree[v] == 1) leaves.insert(v);
  for (int x : prufer) {
    int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    edges.push_back({leaf, x});
    if (--degree[x] == 1) leaves.insert(x);
  }
  int a = *leaves.begin(), b = *std::next(leaves.begin());
  edges.push_back({a, b});
  return Tree::from_edges(order, edges);
}

std::optional<VertexOrdering> random_feasible_ordering(std::shared_ptr<const ProductGraph> g, std::mt19937_64& rng,
                                                       int attempts) {
  const int p = g->order();
  const int need = g->center_count() == 1 ? 1 : 0;
  const bool four = g->center_count() == 4;
  auto ok_step = [&](int t, int a, int b) {
    return four && t == p / 2 - 1 ? g->relation(a, b) == SectorRelation::opposite : is_feasible_pair(*g, a, b);
  };
  std::vector<int> starts;
  for (int v = 0; v < p; ++v)
    if (g->level(v) <= need) starts.push_back(v);
  for (int attempt = 0; attempt < attempts; ++attempt) {
    std::vector<int> seq{starts[rng() % starts.size()]};
    std::vector<char> used(p, 0);
    used[seq[0]] = 1;
    const int last_level = need - g->level(seq[0]);
    long budget = 20L * p;
    // Randomized depth-first extension with a small backtracking budget.
    std::vector<std::vector<int>> options{{}};
    auto candidates = [&](int t) {
      std::vector<int> c;
      for (int v = 0; v < p; ++v) {
        if (used[v] || !ok_step(t, seq.back(), v)) continue;
        if (t + 2 == p && g->level(v) != last_level) continue;
        c.push_back(v);
      }
      std::shuffle(c.begin(), c.end(), rng);
      return c;
    };
    options.back() = candidates(0);
    while (!options.empty() && static_cast<int>(seq.size()) < p && budget-- > 0) {
      auto& opts = options.back();
      if (opts.empty()) {
        options.pop_back();
        if (seq.size() > 1) {
          used[seq.back()] = 0;
          seq.pop_back();
        }
        continue;
      }
      int v = opts.back();
      opts.pop_back();
      seq.push_back(v);
      used[v] = 1;
      if (static_cast<int>(seq.size()) < p) options.push_back(candidates(static_cast<int>(seq.size()) - 1));
    }
    if (static_cast<int>(seq.size()) == p) return VertexOrdering(g, std::move(seq));
  }
  return std::nullopt;
}

bool distance_condition_reference(const VertexOrdering& ord, const std::vector<std::vector<int>>& dist) {
  const auto& g = ord.graph();
  const int p = ord.size();
  const long long d = g.diameter();
  for (int a = 0; a < p; ++a) {
    long long sum = 0;
    for (int b = a + 1; b < p; ++b) {
      int u = ord[b - 1], v = ord[b];
      sum += g.level(u) + g.level(v) + g.delta(u, v);
      if (dist[ord[a]][ord[b]] < sum - (b - a - 1) * (d + 1)) return false;
    }
  }
  return true;
}

}  // namespace radio::testing
