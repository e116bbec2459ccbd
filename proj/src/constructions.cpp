#include "radio/constructions.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <utility>
#include <vector>

#include "radio/errors.hpp"

namespace radio {

std::string_view family_name(Family f) noexcept {
  return f == Family::star_star ? "star-star" : "path-star";
}

void validate(const FamilyParams& params) {
  const int m = params.m, n = params.n;
  if (params.family == Family::star_star) {
    if (n < 3 || m < n)
      throw Error(ErrorCode::bad_params, "star-star needs m >= n >= 3, got m=" + std::to_string(m) +
                                             " n=" + std::to_string(n));
  } else if (m < 3 || n < 3) {
    throw Error(ErrorCode::bad_params, "path-star needs m, n >= 3, got m=" + std::to_string(m) +
                                           " n=" + std::to_string(n));
  }
}

std::shared_ptr<const ProductGraph> family_graph(const FamilyParams& params) {
  validate(params);
  Tree t1 = params.family == Family::star_star ? Tree::star(params.m) : Tree::path(params.m);
  return std::make_shared<const ProductGraph>(std::move(t1), Tree::star(params.n));
}

namespace {

// Collects position -> vertex assignments and rejects collisions and gaps.
class Placement {
 public:
  Placement(std::shared_ptr<const ProductGraph> g, int row_offset)
      : g_(std::move(g)), offset_(row_offset), seq_(g_->order(), -1) {}

  void put(long long t, int i, int j) {
    if (t < 0 || t >= static_cast<long long>(seq_.size()))
      throw Error(ErrorCode::construction_integrity,
                  "position " + std::to_string(t) + " for (x" + std::to_string(i) + ",y" + std::to_string(j) +
                      ") is outside [0, " + std::to_string(seq_.size()) + ")");
    if (seq_[t] >= 0)
      throw Error(ErrorCode::construction_integrity,
                  "position " + std::to_string(t) + " assigned twice, second time to (x" + std::to_string(i) +
                      ",y" + std::to_string(j) + ")");
    seq_[t] = g_->id(i - offset_, j);
  }

  VertexOrdering finish() && {
    for (size_t t = 0; t < seq_.size(); ++t)
      if (seq_[t] < 0) throw Error(ErrorCode::construction_integrity, "position " + std::to_string(t) + " unfilled");
    return VertexOrdering(g_, std::move(seq_));
  }

 private:
  std::shared_ptr<const ProductGraph> g_;
  int offset_;
  std::vector<int> seq_;
};

// Rows x_1, x_c, x_m of odd P_m x K_{1,n}, c = (m+1)/2.
long long first_rows_position(int m, int n, int i, int j) {
  const int c = (m + 1) / 2, q = n / 3, r = j % 3;
  const bool top = i == 1, mid = i == c, bot = i == m;
  if (top && j == 0) return 3LL * n + 2;
  if (bot && j == 0) return 3LL * n + 1;
  switch (n % 3) {
    case 0:
      if ((top && r == 0) || (bot && r == 2)) return n + j - 1;
      if ((top && r == 1) || (mid && r == 2)) return 2LL * n + j + 1;
      if ((top && r == 2) || (mid && r == 0) || (bot && r == 1)) return j;
      if (mid && r == 1) return n + j + 2;
      return 2LL * n + j - 2;  // bot, r == 0, j > 0
    case 1:
      if ((top && r == 0) || (mid && r == 1) || (bot && r == 2)) return 6LL * q + j + 2;
      if ((top && r == 1) || (mid && r == 2) || (bot && r == 0)) return 3LL * q + j + 1;
      return j;
    default:
      if ((top && r == 0) || (mid && r == 1) || (bot && r == 2)) return 3LL * q + j + 2;
      if ((top && r == 1) || (mid && r == 2) || (bot && r == 0)) return 6LL * q + j + 4;
      return j;
  }
}

// The other rows of odd P_m x K_{1,n}.
long long other_rows_position(int m, int n, int i, int j) {
  const int c = (m + 1) / 2;
  const long long w = n + 1;
  if (i < c) {
    if (j == 0) return (2LL * i + 1) * w - 1;
    if (j % 2 == 0) return 3 * w + 2 * ((n + 1) / 2) + 2LL * (i - 2) * w + j - 1;
    return 3 * w + 2LL * (i - 2) * w + j;
  }
  if (j == 0) return (2LL * i - m) * w;
  if (j % 2 == 0) return 3 * w + (2LL * i - m - 3) * w + j;
  return 3 * w + 2 * (n / 2) + (2LL * i - m - 3) * w + j + 1;
}

long long even_position(int m, int n, int i, int j) {
  const int c = m / 2;
  const long long w = n + 1;
  if (i <= c) {
    if (j % 2 == 1) return 2LL * (c - i) * w + 2 * (n / 2) + j + 1;
    return 2LL * (c - i) * w + j;
  }
  if (j % 2 == 1) return 2LL * (m - i) * w + j;
  if (j != 0) return 2LL * (m - i) * w + 2 * ((n + 1) / 2) + j - 1;
  return 2LL * (m - i + 1) * w - 1;
}

using Pair = std::pair<int, int>;  // (i, j) with path row i in 1..m

// Found by exhaustive search (m = 3) and local search (m = 5, 7).
const std::vector<Pair>& stored_n3(int m) {
  static const std::vector<Pair> m3{{1, 0}, {3, 1}, {2, 2}, {1, 3}, {3, 0}, {1, 1},
                                    {2, 3}, {3, 2}, {2, 1}, {1, 2}, {3, 3}, {2, 0}};
  static const std::vector<Pair> m5{{2, 0}, {5, 1}, {3, 2}, {1, 3}, {4, 0}, {2, 1}, {5, 2},
                                    {3, 3}, {1, 1}, {5, 0}, {2, 2}, {4, 1}, {2, 3}, {4, 2},
                                    {1, 0}, {4, 3}, {3, 1}, {5, 3}, {1, 2}, {3, 0}};
  static const std::vector<Pair> m7{{3, 0}, {6, 2}, {3, 3}, {5, 2}, {2, 1}, {5, 3}, {3, 2},
                                    {7, 0}, {2, 3}, {5, 1}, {1, 0}, {6, 3}, {3, 1}, {6, 0},
                                    {1, 1}, {4, 2}, {6, 1}, {1, 2}, {4, 3}, {7, 1}, {2, 2},
                                    {5, 0}, {2, 0}, {7, 3}, {4, 1}, {1, 3}, {7, 2}, {4, 0}};
  static const std::vector<Pair> none;
  switch (m) {
    case 3: return m3;
    case 5: return m5;
    case 7: return m7;
    default: return none;
  }
}

// Total shortfall of the greedy labels against the radio condition, plus
// penalties for infeasible steps and wrong endpoints. Zero means the
// ordering meets the pairwise distance condition.
long long shortfall(const ProductGraph& g, const std::vector<int>& seq) {
  const int p = static_cast<int>(seq.size()), d = g.diameter();
  long long cost = 0;
  for (int t = 0; t + 1 < p; ++t)
    if (!is_feasible_pair(g, seq[t], seq[t + 1])) cost += 4LL * d;
  if (g.level(seq[0]) + g.level(seq[p - 1]) != 1) cost += 4LL * d;
  std::vector<long long> f(p, 0);
  for (int t = 1; t < p; ++t) f[t] = f[t - 1] + d + 1 - g.level(seq[t - 1]) - g.level(seq[t]);
  for (int a = 0; a < p; ++a) {
    for (int b = a + 1; b < p && b <= a + d + 1; ++b) {
      long long need = d + 1 - g.distance(seq[a], seq[b]);
      if (f[b] - f[a] < need) cost += need - (f[b] - f[a]);
    }
  }
  return cost;
}

std::vector<int> anneal_n3(const ProductGraph& g) {
  const int p = g.order();
  std::mt19937 rng(20240607u);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<int> seq(p);
  for (int i = 0; i < p; ++i) seq[i] = i;
  for (int restart = 0; restart < 20; ++restart) {
    std::shuffle(seq.begin(), seq.end(), rng);
    long long cur = shortfall(g, seq);
    double temp = 5.0;
    for (long it = 0; it < 4000000 && cur > 0; ++it) {
      int a = static_cast<int>(rng() % p), b = static_cast<int>(rng() % p);
      if (a == b) continue;
      auto next = seq;
      switch (rng() % 3) {
        case 0: std::swap(next[a], next[b]); break;
        case 1: std::reverse(next.begin() + std::min(a, b), next.begin() + std::max(a, b) + 1); break;
        default: {
          int v = next[a];
          next.erase(next.begin() + a);
          next.insert(next.begin() + b, v);
        }
      }
      long long c = shortfall(g, next);
      if (c <= cur || std::exp((cur - c) / temp) > unit(rng)) {
        seq = std::move(next);
        cur = c;
      }
      temp = std::max(0.05, temp * 0.999998);
    }
    if (cur == 0) return seq;
  }
  throw Error(ErrorCode::construction_integrity,
              "no ordering found for P_" + std::to_string(g.m()) + " x K_{1,3} within the search budget");
}

}  // namespace

VertexOrdering star_star_ordering(int m, int n) {
  auto g = family_graph({Family::star_star, m, n});
  Placement place(g, 0);
  for (int i = 0; i <= m; ++i) {
    for (int j = 0; j <= n; ++j) {
      long long t = i >= j ? static_cast<long long>(i - j) * (n + 1) + j
                           : static_cast<long long>(m + 2 + i - j) * (n + 1) - i - 1;
      place.put(t, i, j);
    }
  }
  return std::move(place).finish();
}

VertexOrdering path_star_table_ordering(int m, int n) {
  auto g = family_graph({Family::path_star, m, n});
  Placement place(g, 1);
  if (m % 2 == 1) {
    const int c = (m + 1) / 2;
    for (int i : {1, c, m})
      for (int j = 0; j <= n; ++j) place.put(first_rows_position(m, n, i, j), i, j);
    for (int i = 2; i < m; ++i) {
      if (i == c) continue;
      for (int j = 0; j <= n; ++j) place.put(other_rows_position(m, n, i, j), i, j);
    }
  } else {
    for (int i = 1; i <= m; ++i)
      for (int j = 0; j <= n; ++j) place.put(even_position(m, n, i, j), i, j);
  }
  return std::move(place).finish();
}

VertexOrdering path_star_n3_ordering(int m) {
  auto g = family_graph({Family::path_star, m, 3});
  if (m % 2 == 0) throw Error(ErrorCode::bad_params, "only odd m needs a separate ordering");
  const auto& stored = stored_n3(m);
  if (!stored.empty()) {
    std::vector<ProductVertex> seq;
    for (auto [i, j] : stored) seq.push_back({i - 1, j});
    return VertexOrdering(g, seq);
  }
  return VertexOrdering(g, anneal_n3(*g));
}

VertexOrdering path_star_ordering(int m, int n) {
  validate({Family::path_star, m, n});
  if (n == 3 && m % 2 == 1) return path_star_n3_ordering(m);
  return path_star_table_ordering(m, n);
}

VertexOrdering family_ordering(const FamilyParams& params) {
  return params.family == Family::star_star ? star_star_ordering(params.m, params.n)
                                            : path_star_ordering(params.m, params.n);
}

std::int64_t closed_form_rn(const FamilyParams& params) {
  validate(params);
  const std::int64_t m = params.m, n = params.n;
  if (params.family == Family::star_star) return m * n + 3 * (m + n) + 1;
  if (m % 2 == 1) return (m * m * (n + 1) + 2 * m + n - 1) / 2;
  return (m * m * (n + 1) + 2 * (m - 1)) / 2;
}

}  // namespace radio
