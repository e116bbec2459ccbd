// One PASS/FAIL line per acceptance criterion. Exit status is nonzero if
// any criterion fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "generators.hpp"
#include "radio/bounds.hpp"
#include "radio/constructions.hpp"
#include "radio/errors.hpp"
#include "radio/labeling.hpp"
#include "radio/oracle.hpp"

using namespace radio;

namespace {

// Time limits, in seconds.
constexpr double kPerInstance = 1.0;
constexpr double kSmallOracle = 60.0;
constexpr double kLargeOracle = 600.0;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

std::shared_ptr<const ProductGraph> product(Tree a, Tree b) {
  return std::make_shared<const ProductGraph>(std::move(a), std::move(b));
}

int jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

std::string pair_name(const FamilyParams& fp) {
  return std::string(family_name(fp.family)) + "(" + std::to_string(fp.m) + "," + std::to_string(fp.n) + ")";
}

// Construction, greedy labeling, verification and span for one family instance.
void check_construction(const FamilyParams& fp, Outcome& o) {
  auto t0 = Clock::now();
  auto ord = family_ordering(fp);
  auto lab = greedy_label(ord);
  auto vs = verify(lab);
  auto bound = lower_bound(ord.graph()).value;
  double dt = seconds_since(t0);
  auto cf = closed_form_rn(fp);
  if (!vs.empty()) o.fail(pair_name(fp) + ": " + std::to_string(vs.size()) + " violations");
  if (lab.span() != cf) o.fail(pair_name(fp) + ": span " + std::to_string(lab.span()) + " != " + std::to_string(cf));
  if (cf != bound) o.fail(pair_name(fp) + ": closed form " + std::to_string(cf) + " != bound " + std::to_string(bound));
  if (dt >= kPerInstance) o.fail(pair_name(fp) + ": took " + std::to_string(dt) + " s");
}

Outcome a1() {
  Outcome o;
  int count = 0;
  for (int m = 3; m <= 8; ++m)
    for (int n = 3; n <= m; ++n, ++count) check_construction({Family::star_star, m, n}, o);
  if (o.pass) o.detail = std::to_string(count) + " instances";
  return o;
}

Outcome a2() {
  Outcome o;
  int count = 0;
  for (int m = 3; m <= 8; ++m)
    for (int n = 3; n <= 8; ++n, ++count) check_construction({Family::path_star, m, n}, o);
  if (o.pass) o.detail = std::to_string(count) + " instances";
  return o;
}

Outcome a3() {
  Outcome o;
  auto g = product(Tree::path(2), Tree::path(2));
  auto t0 = Clock::now();
  auto r = exact_rn(g);
  double dt = seconds_since(t0);
  auto b = lower_bound(*g).value;
  if (r.status != OracleStatus::exact || r.lo != 4 || b != 4)
    o.fail("rn=" + std::to_string(r.lo) + " bound=" + std::to_string(b));
  if (dt >= kPerInstance) o.fail("took " + std::to_string(dt) + " s");
  if (o.pass) o.detail = "rn = bound = 4";
  return o;
}

Outcome a4() {
  Outcome o;
  std::ostringstream msg;
  {
    auto g = product(Tree::path(2), Tree::path(4));
    SearchBudget b;
    b.jobs = jobs();
    b.max_seconds = kSmallOracle;
    auto t0 = Clock::now();
    auto r = exact_rn(g, b);
    double dt = seconds_since(t0);
    if (r.lo <= 14) o.fail("P2xP4: lo=" + std::to_string(r.lo));
    if (dt >= kSmallOracle) o.fail("P2xP4 took " + std::to_string(dt) + " s");
    msg << "P2xP4 " << (r.status == OracleStatus::exact ? "rn=" : "lo=") << r.lo << " > 14";
  }
  {
    auto g = product(Tree::path(4), Tree::path(4));
    auto bound = lower_bound(*g).value;
    SearchBudget b;
    b.jobs = jobs();
    b.max_seconds = kLargeOracle;
    auto t0 = Clock::now();
    auto r = exact_rn(g, b);
    double dt = seconds_since(t0);
    if (r.lo <= bound) o.fail("P4xP4: lo=" + std::to_string(r.lo) + " bound=" + std::to_string(bound));
    msg << "; P4xP4 " << (r.status == OracleStatus::exact ? "rn=" : "bracket lo=") << r.lo << " > " << bound << " ("
        << static_cast<int>(dt) << " s)";
  }
  if (o.pass) o.detail = msg.str();
  return o;
}

Outcome a5() {
  Outcome o;
  auto g = product(Tree::path(3), Tree::star(3));
  SearchBudget b;
  b.jobs = jobs();
  b.max_seconds = kLargeOracle;
  auto r = exact_rn(g, b);
  if (r.status == OracleStatus::exact) {
    if (r.lo != 22) o.fail("rn=" + std::to_string(r.lo));
  } else {
    if (r.lo > 22 || r.hi < 22) o.fail("bracket [" + std::to_string(r.lo) + "," + std::to_string(r.hi) + "]");
  }
  auto lab = greedy_label(path_star_ordering(3, 3));
  if (lab.span() != 22 || !verify(lab).empty()) o.fail("construction span " + std::to_string(lab.span()));
  if (o.pass) o.detail = "rn=22, construction verifies";
  return o;
}

Outcome a6() {
  Outcome o;
  int pairs = 0;
  for (int a = 1; a <= 10; ++a) {
    auto left = radio::testing::all_trees(a);
    for (int b = 1; a * b <= 10; ++b) {
      auto right = radio::testing::all_trees(b);
      for (const Tree& t1 : left)
        for (const Tree& t2 : right) {
          auto g = product(t1, t2);
          auto r = exact_rn(g);
          auto bound = lower_bound(*g).value;
          ++pairs;
          if (r.status != OracleStatus::exact) o.fail("oracle did not finish");
          if (r.lo < bound) o.fail("rn " + std::to_string(r.lo) + " < bound " + std::to_string(bound));
          if (!r.best || !verify(*r.best).empty()) o.fail("oracle labeling does not verify");
        }
    }
  }
  if (o.pass) o.detail = std::to_string(pairs) + " ordered pairs";
  return o;
}

Outcome a7() {
  Outcome o;
  std::mt19937_64 rng(0xA7);
  long long checked = 0;
  for (int rep = 0; rep < 200; ++rep) {
    auto g = product(radio::testing::random_tree(1 + static_cast<int>(rng() % 12), rng),
                     radio::testing::random_tree(1 + static_cast<int>(rng() % 12), rng));
    auto dist = bfs_distance_matrix(*g);
    for (int u = 0; u < g->order(); ++u)
      for (int v = 0; v < g->order(); ++v) {
        auto m = g->metrics(u, v);
        ++checked;
        if (m.distance != dist[u][v] || m.distance != g->level(u) + g->level(v) + m.delta - 2 * m.phi)
          o.fail("mismatch at pair " + std::to_string(rep));
      }
  }
  if (o.pass) o.detail = std::to_string(checked) + " vertex pairs";
  return o;
}

Outcome a8() {
  Outcome o;
  std::mt19937_64 rng(0xA8);
  int done = 0;
  while (done < 200) {
    int a = 1 + static_cast<int>(rng() % 16);
    int b = 1 + static_cast<int>(rng() % std::max(1, 64 / a));
    auto g = product(radio::testing::random_tree(a, rng), radio::testing::random_tree(b, rng));
    if (g->order() > 64) continue;
    ++done;
    if (g->weight_centers() != brute_force_weight_centers(*g)) o.fail("mismatch at " + std::to_string(done));
  }
  if (o.pass) o.detail = "200 pairs";
  return o;
}

Outcome a9() {
  Outcome o;
  int orderings = 0, sufficient_hits = 0, equality_checks = 0;
  auto examine = [&](const VertexOrdering& ord, const std::string& name, bool must_hold) {
    ++orderings;
    auto dist = check_distance_condition(ord);
    if (must_hold && !dist.holds) o.fail(name + ": distance condition fails");
    if (ord.graph().center_count() <= 2) {
      for (const auto& v : check_sufficient_conditions(ord)) {
        if (!v.holds) continue;
        ++sufficient_hits;
        if (!dist.holds) o.fail(name + ": " + std::string(condition_name(v.condition)) + " holds but distance fails");
      }
    }
    if (dist.holds && satisfies_endpoint_condition(ord)) {
      ++equality_checks;
      auto lab = greedy_label(ord);
      if (!verify(lab).empty()) o.fail(name + ": greedy labeling does not verify");
      if (lab.span() != lower_bound(ord.graph()).value) o.fail(name + ": span differs from bound");
    }
  };

  std::vector<FamilyParams> all;
  for (int m = 3; m <= 8; ++m)
    for (int n = 3; n <= 8; ++n) {
      if (m >= n) all.push_back({Family::star_star, m, n});
      all.push_back({Family::path_star, m, n});
    }
  for (const auto& fp : all) examine(family_ordering(fp), pair_name(fp), true);

  std::mt19937_64 rng(0xA9);
  for (Family fam : {Family::star_star, Family::path_star}) {
    std::vector<FamilyParams> pool;
    for (const auto& fp : all)
      if (fp.family == fam) pool.push_back(fp);
    int made = 0, tries = 0;
    while (made < 100 && tries < 10000) {
      ++tries;
      const auto& fp = pool[rng() % pool.size()];
      auto ord = radio::testing::random_feasible_ordering(family_graph(fp), rng);
      if (!ord) continue;
      ++made;
      examine(*ord, pair_name(fp) + " random", false);
    }
    if (made < 100) o.fail(std::string(family_name(fam)) + ": only " + std::to_string(made) + " random orderings");
  }
  if (o.pass)
    o.detail = std::to_string(orderings) + " orderings, " + std::to_string(sufficient_hits) + " sufficient verdicts, " +
               std::to_string(equality_checks) + " equality checks";
  return o;
}

Outcome a10() {
  Outcome o;
  long long total = 0, tight = 0;
  for (auto [a, b] : {std::pair{2, 2}, std::pair{2, 4}, std::pair{4, 2}}) {
    auto g = product(Tree::path(a), Tree::path(b));
    const int p = g->order();
    std::vector<int> perm(p);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      ++total;
      VertexOrdering ord(g, perm);
      auto s = delta_sum(ord);
      if (s > 2 * p - 3) o.fail("sum " + std::to_string(s) + " > 2p-3");
      bool pattern = true;
      for (int t = 0; t + 1 < p; ++t) pattern &= g->delta(perm[t], perm[t + 1]) == (t == p / 2 - 1 ? 1 : 2);
      if ((s == 2 * p - 3) != pattern) o.fail("equality outside the pattern");
      tight += pattern;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  if (o.pass) o.detail = std::to_string(total) + " orderings, " + std::to_string(tight) + " tight";
  return o;
}

}  // namespace

int main() {
  std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"A1", a1}, {"A2", a2}, {"A3", a3}, {"A4", a4}, {"A5", a5},
      {"A6", a6}, {"A7", a7}, {"A8", a8}, {"A9", a9}, {"A10", a10},
  };
  int failed = 0;
  for (auto& [name, fn] : criteria) {
    auto t0 = Clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    failed += !o.pass;
    std::printf("%s %s  %s  [%.2f s]\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str(), seconds_since(t0));
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
