#include "radio/oracle.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <thread>
#include <unordered_map>

#include "radio/bounds.hpp"
#include "radio/constructions.hpp"
#include "radio/errors.hpp"

namespace radio {

std::vector<std::vector<int>> bfs_distance_matrix(const ProductGraph& g) {
  const int p = g.order();
  if (p > 4096) throw Error(ErrorCode::size_guard, "BFS distance matrix is limited to 4096 vertices");
  std::vector<std::vector<int>> adj(p);
  for (int v = 0; v < p; ++v) adj[v] = g.neighbors(v);
  std::vector<std::vector<int>> dist(p, std::vector<int>(p, -1));
  std::vector<int> queue(p);
  for (int s = 0; s < p; ++s) {
    auto& row = dist[s];
    int head = 0, tail = 0;
    row[s] = 0;
    queue[tail++] = s;
    while (head < tail) {
      int v = queue[head++];
      for (int w : adj[v]) {
        if (row[w] < 0) {
          row[w] = row[v] + 1;
          queue[tail++] = w;
        }
      }
    }
  }
  return dist;
}

std::vector<int> brute_force_weight_centers(const ProductGraph& g) {
  if (g.order() > 4096) throw Error(ErrorCode::size_guard, "brute-force weight centers are limited to 4096 vertices");
  auto dist = bfs_distance_matrix(g);
  std::vector<std::int64_t> w(g.order());
  for (int v = 0; v < g.order(); ++v) w[v] = std::accumulate(dist[v].begin(), dist[v].end(), std::int64_t{0});
  std::int64_t best = *std::min_element(w.begin(), w.end());
  std::vector<int> out;
  for (int v = 0; v < g.order(); ++v)
    if (w[v] == best) out.push_back(v);
  return out;
}

std::vector<int> tree_orbits(const Tree& t) {
  const int n = t.order();
  // Canonical string of the tree rooted at r, children sorted (AHU).
  auto canon = [&](int r) {
    std::vector<int> order{r}, par(n, -1);
    par[r] = r;
    for (size_t i = 0; i < order.size(); ++i)
      for (int w : t.neighbors(order[i]))
        if (par[w] < 0) {
          par[w] = order[i];
          order.push_back(w);
        }
    std::vector<std::vector<std::string>> kids(n);
    std::string code;
    for (int i = n - 1; i >= 0; --i) {
      int v = order[i];
      auto& k = kids[v];
      std::sort(k.begin(), k.end());
      code = "(";
      for (auto& s : k) code += s;
      code += ")";
      if (v != r) kids[par[v]].push_back(std::move(code));
    }
    return code;
  };
  std::map<std::string, int> first;
  std::vector<int> orbit(n);
  for (int v = 0; v < n; ++v) orbit[v] = first.emplace(canon(v), v).first->second;
  return orbit;
}

namespace {

using Clock = std::chrono::steady_clock;

// Shared, read-only view of one search problem.
struct Problem {
  int p;
  int d;
  std::vector<std::vector<int>> step;  // step[u][v] = d + 1 - dist(u, v)
};

// Lower bound on the span still needed after placing `last` with `rest`
// unplaced: every remaining vertex needs a predecessor among the others.
std::int64_t completion_floor(const Problem& pr, std::uint32_t rest, int last) {
  std::int64_t total = 0;
  for (std::uint32_t r = rest; r; r &= r - 1) {
    int w = __builtin_ctz(r);
    int best = last >= 0 ? pr.step[last][w] : pr.d + 1;
    for (std::uint32_t s = rest & ~(1u << w); s; s &= s - 1) best = std::min(best, pr.step[__builtin_ctz(s)][w]);
    total += std::max(best, 1);
  }
  return total;
}

class BranchSearch {
 public:
  BranchSearch(const Problem& pr, std::int64_t threshold, std::size_t memo_limit, const std::atomic<bool>& stop,
               std::atomic<std::int64_t>& global_nodes, std::int64_t max_nodes, Clock::time_point deadline,
               bool has_deadline)
      : pr_(pr),
        threshold_(threshold),
        memo_limit_(memo_limit),
        stop_(stop),
        global_nodes_(global_nodes),
        max_nodes_(max_nodes),
        deadline_(deadline),
        has_deadline_(has_deadline),
        label_(pr.p, 0) {}

  // true: found an ordering with span <= threshold (stored in sequence()).
  bool run(int first) {
    seq_.assign(1, first);
    label_[first] = 0;
    std::uint32_t all = (1u << pr_.p) - 1;
    return dfs(all & ~(1u << first), 0);
  }

  std::int64_t nodes() const noexcept { return nodes_; }
  bool aborted() const noexcept { return aborted_; }
  const std::vector<int>& sequence() const noexcept { return seq_; }
  std::vector<std::int64_t> labels() const {
    std::vector<std::int64_t> f(pr_.p, 0);
    for (int v : seq_) f[v] = label_[v];
    return f;
  }

 private:
  bool out_of_budget() {
    if (stop_.load(std::memory_order_relaxed)) return true;
    if (max_nodes_ > 0 && global_nodes_.load(std::memory_order_relaxed) >= max_nodes_) return true;
    if (has_deadline_ && (nodes_ & 1023) == 0 && Clock::now() > deadline_) return true;
    return false;
  }

  std::string key(std::uint32_t rest, std::int64_t last_label) const {
    std::string k(reinterpret_cast<const char*>(&rest), sizeof rest);
    // Only vertices labeled within d of the last one still constrain the future.
    for (auto it = seq_.rbegin(); it != seq_.rend(); ++it) {
      std::int64_t gap = last_label - label_[*it];
      if (gap >= pr_.d) break;
      k.push_back(static_cast<char>(*it));
      k.push_back(static_cast<char>(gap));
    }
    return k;
  }

  bool dfs(std::uint32_t rest, std::int64_t last_label) {
    if (aborted_) return false;
    ++nodes_;
    global_nodes_.fetch_add(1, std::memory_order_relaxed);
    if (out_of_budget()) {
      aborted_ = true;
      return false;
    }
    if (rest == 0) return true;

    std::string k = key(rest, last_label);
    if (auto it = memo_.find(k); it != memo_.end() && it->second <= last_label) return false;

    struct Child {
      std::int64_t label;
      int v;
    };
    std::array<Child, 32> kids;
    int nk = 0;
    for (std::uint32_t r = rest; r; r &= r - 1) {
      int v = __builtin_ctz(r);
      std::int64_t lab = last_label + 1;
      for (auto it = seq_.rbegin(); it != seq_.rend(); ++it) {
        if (last_label - label_[*it] >= pr_.d) break;
        lab = std::max(lab, label_[*it] + pr_.step[*it][v]);
      }
      if (lab > threshold_) continue;
      if (lab + completion_floor(pr_, rest & ~(1u << v), v) > threshold_) continue;
      kids[nk++] = {lab, v};
    }
    std::sort(kids.begin(), kids.begin() + nk,
              [](const Child& a, const Child& b) { return a.label != b.label ? a.label < b.label : a.v < b.v; });
    for (int i = 0; i < nk; ++i) {
      int v = kids[i].v;
      seq_.push_back(v);
      label_[v] = kids[i].label;
      if (dfs(rest & ~(1u << v), kids[i].label)) return true;
      seq_.pop_back();
      if (aborted_) return false;
    }
    if (memo_.size() < memo_limit_) {
      auto [it, inserted] = memo_.emplace(std::move(k), last_label);
      if (!inserted) it->second = std::min(it->second, last_label);
    }
    return false;
  }

  const Problem& pr_;
  std::int64_t threshold_;
  std::size_t memo_limit_;
  const std::atomic<bool>& stop_;
  std::atomic<std::int64_t>& global_nodes_;
  std::int64_t max_nodes_;
  Clock::time_point deadline_;
  bool has_deadline_;
  std::vector<int> seq_;
  std::vector<std::int64_t> label_;
  std::unordered_map<std::string, std::int64_t> memo_;
  std::int64_t nodes_ = 0;
  bool aborted_ = false;
};

int star_hub(const Tree& t) {
  if (t.order() < 4) return -1;
  for (int v = 0; v < t.order(); ++v)
    if (static_cast<int>(t.neighbors(v).size()) == t.order() - 1) return v;
  return -1;
}

std::vector<int> path_walk(const Tree& t) {
  if (t.order() < 3) return {};
  int start = -1;
  for (int v = 0; v < t.order(); ++v) {
    if (t.neighbors(v).size() > 2) return {};
    if (t.neighbors(v).size() == 1 && start < 0) start = v;
  }
  std::vector<int> walk{start};
  int prev = -1;
  while (static_cast<int>(walk.size()) < t.order()) {
    int cur = walk.back();
    for (int w : t.neighbors(cur))
      if (w != prev) {
        prev = cur;
        walk.push_back(w);
        break;
      }
  }
  return walk;
}

// Vertex i of K_{1,k} (hub 0) -> vertex of t.
std::vector<int> star_map(const Tree& t) {
  int hub = star_hub(t);
  std::vector<int> map{hub};
  for (int v = 0; v < t.order(); ++v)
    if (v != hub) map.push_back(v);
  return map;
}

// Labeling of g built from a family construction when the factors are a
// star and a star, or a path and a star.
std::optional<std::vector<std::int64_t>> family_seed(const ProductGraph& g) {
  const Tree& a = g.t1();
  const Tree& b = g.t2();
  struct Plan {
    FamilyParams params;
    std::vector<int> map1, map2;  // family factor vertex -> vertex of its tree in g
    bool swapped;                 // family factor 1 is g's second factor
  };
  std::optional<Plan> plan;
  const bool sa = star_hub(a) >= 0, sb = star_hub(b) >= 0;
  if (sa && sb) {
    int ka = a.order() - 1, kb = b.order() - 1;
    if (ka >= kb)
      plan = Plan{{Family::star_star, ka, kb}, star_map(a), star_map(b), false};
    else
      plan = Plan{{Family::star_star, kb, ka}, star_map(b), star_map(a), true};
  } else if (sb && !path_walk(a).empty()) {
    plan = Plan{{Family::path_star, a.order(), b.order() - 1}, path_walk(a), star_map(b), false};
  } else if (sa && !path_walk(b).empty()) {
    plan = Plan{{Family::path_star, b.order(), a.order() - 1}, path_walk(b), star_map(a), true};
  }
  if (!plan) return std::nullopt;
  try {
    auto ord = family_ordering(plan->params);
    auto lab = greedy_label(ord);
    const auto& fg = ord.graph();
    std::vector<std::int64_t> out(g.order());
    for (int v = 0; v < fg.order(); ++v) {
      auto [x, y] = fg.vertex(v);
      int gx = plan->map1[x], gy = plan->map2[y];
      out[plan->swapped ? g.id(gy, gx) : g.id(gx, gy)] = lab.label(v);
    }
    return out;
  } catch (const Error&) {
    return std::nullopt;
  }
}

bool valid_labels(const Problem& pr, const std::vector<std::int64_t>& f) {
  for (int u = 0; u < pr.p; ++u)
    for (int v = u + 1; v < pr.p; ++v)
      if (std::abs(f[u] - f[v]) < pr.step[u][v]) return false;
  return true;
}

}  // namespace

OracleResult exact_rn(std::shared_ptr<const ProductGraph> gp, const SearchBudget& budget) {
  if (!gp) throw Error(ErrorCode::bad_params, "exact_rn needs a graph");
  const ProductGraph& g = *gp;
  const int p = g.order();
  if (p > kMaxOracleOrder)
    throw Error(ErrorCode::size_guard, "exact search is limited to " + std::to_string(kMaxOracleOrder) +
                                           " vertices, got " + std::to_string(p));
  if (p == 1) return {OracleStatus::exact, 0, 0, 1, RadioLabeling(gp, {0})};

  Problem pr{p, g.diameter(), {}};
  auto dist = bfs_distance_matrix(g);
  pr.d = 0;
  for (auto& row : dist) pr.d = std::max(pr.d, *std::max_element(row.begin(), row.end()));
  pr.step.assign(p, std::vector<int>(p, 0));
  for (int u = 0; u < p; ++u)
    for (int v = 0; v < p; ++v) pr.step[u][v] = pr.d + 1 - dist[u][v];

  // Incumbent: best tight span over randomized greedy orderings.
  std::vector<std::int64_t> best_labels;
  std::int64_t hi = -1;
  auto offer = [&](const std::vector<std::int64_t>& f) {
    auto [lo_it, hi_it] = std::minmax_element(f.begin(), f.end());
    std::int64_t span = *hi_it - *lo_it;
    if (hi < 0 || span < hi) {
      hi = span;
      best_labels = f;
      for (auto& x : best_labels) x -= *lo_it;
    }
  };
  std::mt19937 rng(12345u + static_cast<unsigned>(p));
  for (int rep = 0; rep < 200; ++rep) {
    std::vector<int> seq{static_cast<int>(rng() % p)};
    std::vector<std::int64_t> f(p, 0);
    std::vector<char> used(p, 0);
    used[seq[0]] = 1;
    while (static_cast<int>(seq.size()) < p) {
      std::int64_t best = -1;
      std::vector<int> ties;
      for (int v = 0; v < p; ++v) {
        if (used[v]) continue;
        std::int64_t lab = f[seq.back()] + 1;
        for (int u : seq) lab = std::max(lab, f[u] + pr.step[u][v]);
        if (best < 0 || lab < best) {
          best = lab;
          ties.assign(1, v);
        } else if (lab == best) {
          ties.push_back(v);
        }
      }
      int v = ties[rng() % ties.size()];
      f[v] = best;
      used[v] = 1;
      seq.push_back(v);
    }
    offer(f);
  }
  if (auto seed = family_seed(g); seed && valid_labels(pr, *seed)) offer(*seed);


  // Floor independent of the closed-form bound: each vertex but the first
  // needs a predecessor.
  std::int64_t floor = 0;
  {
    std::uint32_t all = (1u << p) - 1;
    std::int64_t lo_all = std::numeric_limits<std::int64_t>::max();
    for (int first = 0; first < p; ++first)
      lo_all = std::min(lo_all, completion_floor(pr, all & ~(1u << first), first));
    floor = lo_all;
  }

  // First vertices: one per orbit of Aut(T1) x Aut(T2).
  std::vector<int> firsts;
  {
    auto o1 = tree_orbits(g.t1()), o2 = tree_orbits(g.t2());
    for (int v = 0; v < p; ++v) {
      auto [x, y] = g.vertex(v);
      if (!budget.symmetry_breaking || (o1[x] == x && o2[y] == y)) firsts.push_back(v);
    }
  }

  const auto start = Clock::now();
  const bool has_deadline = budget.max_seconds > 0;
  const auto deadline =
      start + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(budget.max_seconds));
  std::atomic<std::int64_t> global_nodes{0};
  std::int64_t nodes = 0;
  std::int64_t proven = floor;  // rn >= proven

  auto bracket = [&]() {
    std::int64_t top = hi;
    if (budget.initial_upper_bound) top = std::min(top, *budget.initial_upper_bound);
    OracleResult r{OracleStatus::bracket, std::max(proven, lower_bound(g).value), top, nodes, std::nullopt};
    if (top == hi) r.best = RadioLabeling(gp, best_labels);
    return r;
  };

  const int jobs = std::max(1, budget.jobs);
  // Smallest threshold admitting an ordering is rn; the incumbent covers T = hi.
  for (std::int64_t T = floor; T < hi; ++T) {
    const int nb = static_cast<int>(firsts.size());
    std::vector<std::int64_t> branch_nodes(nb, 0);
    std::vector<char> found(nb, 0), aborted(nb, 0), done(nb, 0);
    std::vector<std::vector<std::int64_t>> found_labels(nb);
    std::atomic<int> first_found{nb};
    std::atomic<int> next{0};
    std::atomic<bool> stop{false};

    auto worker = [&]() {
      for (;;) {
        int i = next.fetch_add(1);
        if (i >= nb) return;
        if (i > first_found.load()) continue;  // cannot affect the result
        BranchSearch bs(pr, T, budget.memo_limit, stop, global_nodes, budget.max_nodes, deadline, has_deadline);
        bool ok = bs.run(firsts[i]);
        branch_nodes[i] = bs.nodes();
        aborted[i] = bs.aborted();
        done[i] = 1;
        if (ok) {
          found[i] = 1;
          found_labels[i] = bs.labels();
          int cur = first_found.load();
          while (i < cur && !first_found.compare_exchange_weak(cur, i)) {
          }
        }
      }
    };
    if (jobs == 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
      for (auto& t : pool) t.join();
    }

    // Count nodes of branches up to the first success, in branch order.
    int winner = first_found.load();
    bool incomplete = false;
    for (int i = 0; i < nb && i <= winner; ++i) {
      if (i == winner) {
        nodes += branch_nodes[i];
        break;
      }
      if (!done[i] || aborted[i]) incomplete = true;
      nodes += branch_nodes[i];
    }
    if (incomplete) return bracket();
    if (winner < nb) {
      hi = T;
      best_labels = found_labels[winner];
      return {OracleStatus::exact, T, T, nodes, RadioLabeling(gp, best_labels)};
    }
    proven = T + 1;
  }
  return {OracleStatus::exact, hi, hi, nodes, RadioLabeling(gp, best_labels)};
}

std::int64_t exact_rn_naive(const ProductGraph& g) {
  const int p = g.order();
  if (p > 6) throw Error(ErrorCode::size_guard, "naive search is limited to 6 vertices");
  if (p == 1) return 0;
  auto dist = bfs_distance_matrix(g);
  int d = 0;
  for (auto& row : dist) d = std::max(d, *std::max_element(row.begin(), row.end()));
  std::vector<std::int64_t> f(p, -1);
  // Labels in [0, S] with vertex 0's label free; some vertex takes 0.
  std::function<bool(int, std::int64_t, bool)> place = [&](int v, std::int64_t S, bool zero_used) -> bool {
    if (v == p) return zero_used;
    for (std::int64_t lab = 0; lab <= S; ++lab) {
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) ok = std::abs(f[u] - lab) >= d + 1 - dist[u][v];
      if (!ok) continue;
      f[v] = lab;
      if (place(v + 1, S, zero_used || lab == 0)) return true;
    }
    return false;
  };
  for (std::int64_t S = 0;; ++S)
    if (place(0, S, false)) return S;
}

}  // namespace radio
