#include "radio/tree.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>

#include "radio/errors.hpp"

namespace radio {

namespace {

std::vector<int> bfs(const std::vector<std::vector<int>>& adj, std::span<const int> sources) {
  std::vector<int> dist(adj.size(), -1);
  std::queue<int> q;
  for (int s : sources) {
    dist[s] = 0;
    q.push(s);
  }
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : adj[v]) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        q.push(w);
      }
    }
  }
  return dist;
}

}  // namespace

Tree Tree::from_edges(int order, std::span<const Edge> edges) {
  if (order < 1) throw Error(ErrorCode::not_a_tree, "order must be positive");
  for (const Edge& e : edges) {
    if (e.u < 0 || e.u >= order || e.v < 0 || e.v >= order)
      throw Error(ErrorCode::bad_index, "edge endpoint out of range [0, " + std::to_string(order) + ")");
  }
  if (static_cast<long long>(edges.size()) != order - 1)
    throw Error(ErrorCode::not_a_tree, "a tree on " + std::to_string(order) + " vertices has " +
                                           std::to_string(order - 1) + " edges, got " +
                                           std::to_string(edges.size()));
  Tree t;
  t.adjacency_.assign(order, {});
  for (const Edge& e : edges) {
    if (e.u == e.v) throw Error(ErrorCode::not_a_tree, "self loop at " + std::to_string(e.u));
    t.adjacency_[e.u].push_back(e.v);
    t.adjacency_[e.v].push_back(e.u);
  }
  // n-1 edges plus connectivity rules out cycles and parallel edges.
  int root = 0;
  auto dist = bfs(t.adjacency_, std::span<const int>(&root, 1));
  if (std::any_of(dist.begin(), dist.end(), [](int d) { return d < 0; }))
    throw Error(ErrorCode::not_a_tree, "graph is disconnected");
  for (auto& nb : t.adjacency_) std::sort(nb.begin(), nb.end());
  t.edges_.assign(edges.begin(), edges.end());
  t.index();
  return t;
}

Tree Tree::path(int m) {
  if (m < 1) throw Error(ErrorCode::bad_params, "path needs at least one vertex");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < m; ++i) edges.push_back({i, i + 1});
  return from_edges(m, edges);
}

Tree Tree::star(int n) {
  if (n < 0) throw Error(ErrorCode::bad_params, "star needs a non-negative leaf count");
  std::vector<Edge> edges;
  for (int i = 1; i <= n; ++i) edges.push_back({0, i});
  return from_edges(n + 1, edges);
}

void Tree::index() {
  const int n = order();

  // Distance sums via rerooting: w(c) = w(p) + n - 2 size(c).
  std::vector<int> order_bfs, par(n, -1);
  order_bfs.reserve(n);
  order_bfs.push_back(0);
  for (size_t i = 0; i < order_bfs.size(); ++i) {
    int v = order_bfs[i];
    for (int w : adjacency_[v]) {
      if (w != par[v]) {
        par[w] = v;
        order_bfs.push_back(w);
      }
    }
  }
  std::vector<std::int64_t> size(n, 1), wsum(n, 0);
  std::vector<int> depth(n, 0);
  for (size_t i = 1; i < order_bfs.size(); ++i) depth[order_bfs[i]] = depth[par[order_bfs[i]]] + 1;
  for (int i = n - 1; i > 0; --i) size[par[order_bfs[i]]] += size[order_bfs[i]];
  wsum[0] = std::accumulate(depth.begin(), depth.end(), std::int64_t{0});
  for (size_t i = 1; i < order_bfs.size(); ++i) {
    int v = order_bfs[i];
    wsum[v] = wsum[par[v]] + n - 2 * size[v];
  }
  std::int64_t best = *std::min_element(wsum.begin(), wsum.end());
  centers_.clear();
  for (int v = 0; v < n; ++v)
    if (wsum[v] == best) centers_.push_back(v);

  level_ = bfs(adjacency_, centers_);
  parent_.assign(n, -1);
  side_.assign(n, 0);
  branch_.assign(n, kCenterBranch);
  for (size_t k = 0; k < centers_.size(); ++k) side_[centers_[k]] = static_cast<int>(k);

  // Walk outward by level so parents and sides are settled before children.
  std::vector<int> by_level(n);
  std::iota(by_level.begin(), by_level.end(), 0);
  std::stable_sort(by_level.begin(), by_level.end(), [&](int a, int b) { return level_[a] < level_[b]; });
  for (int v : by_level) {
    if (level_[v] == 0) continue;
    for (int w : adjacency_[v]) {
      if (level_[w] == level_[v] - 1) {
        parent_[v] = w;
        side_[v] = side_[w];
        break;
      }
    }
  }

  // Branches numbered by increasing child-of-center index.
  std::vector<int> roots;
  for (int v = 0; v < n; ++v)
    if (level_[v] == 1) roots.push_back(v);
  num_branches_ = static_cast<int>(roots.size());
  for (int k = 0; k < num_branches_; ++k) branch_[roots[k]] = k;
  for (int v : by_level)
    if (level_[v] > 1) branch_[v] = branch_[parent_[v]];

  max_level_ = *std::max_element(level_.begin(), level_.end());
  total_level_ = std::accumulate(level_.begin(), level_.end(), std::int64_t{0});

  auto far = bfs(adjacency_, std::span<const int>(&order_bfs.back(), 1));
  int a = static_cast<int>(std::max_element(far.begin(), far.end()) - far.begin());
  auto far2 = bfs(adjacency_, std::span<const int>(&a, 1));
  diameter_ = *std::max_element(far2.begin(), far2.end());

  if (n <= 1024) {
    phi_table_.assign(static_cast<size_t>(n) * n, 0);
    for (int u = 0; u < n; ++u)
      for (int v = u; v < n; ++v) {
        int anc = side_[u] == side_[v] ? common_ancestor(u, v) : -1;
        int ph = anc < 0 ? 0 : level_[anc];
        phi_table_[static_cast<size_t>(u) * n + v] = ph;
        phi_table_[static_cast<size_t>(v) * n + u] = ph;
      }
  }
}

std::optional<int> Tree::parent(int v) const {
  int p = parent_.at(v);
  if (p < 0) return std::nullopt;
  return p;
}

int Tree::common_ancestor(int u, int v) const {
  while (u != v) {
    if (level_[u] >= level_[v])
      u = parent_[u];
    else
      v = parent_[v];
    if (u < 0 || v < 0) return -1;
  }
  return u;
}

int Tree::phi(int u, int v) const {
  if (!phi_table_.empty()) return phi_table_.at(static_cast<size_t>(u) * order() + v);
  if (side_.at(u) != side_.at(v)) return 0;
  int a = common_ancestor(u, v);
  return a < 0 ? 0 : level_[a];
}

BranchRelation Tree::relation(int u, int v) const {
  if (side_.at(u) != side_.at(v)) return BranchRelation::opposite;
  return phi(u, v) == 0 ? BranchRelation::different : BranchRelation::same;
}

int Tree::distance(int u, int v) const {
  return level_.at(u) + level_.at(v) + delta(u, v) - 2 * phi(u, v);
}

std::vector<int> Tree::bfs_distances(int source) const {
  if (source < 0 || source >= order()) throw Error(ErrorCode::bad_index, "vertex out of range");
  return bfs(adjacency_, std::span<const int>(&source, 1));
}

std::int64_t Tree::weight(int v) const {
  auto d = bfs_distances(v);
  return std::accumulate(d.begin(), d.end(), std::int64_t{0});
}

}  // namespace radio
