#include <gtest/gtest.h>

#include <random>

#include "generators.hpp"
#include "radio/constructions.hpp"
#include "radio/errors.hpp"
#include "radio/labeling.hpp"

using namespace radio;

namespace {

std::shared_ptr<const ProductGraph> product(Tree a, Tree b) {
  return std::make_shared<const ProductGraph>(std::move(a), std::move(b));
}

}  // namespace

TEST(Labeling, C4Greedy) {
  auto g = product(Tree::path(2), Tree::path(2));
  VertexOrdering ord(g, std::vector<ProductVertex>{{0, 0}, {1, 1}, {1, 0}, {0, 1}});
  auto lab = greedy_label(ord);
  EXPECT_EQ(lab.label(g->id(0, 0)), 0);
  EXPECT_EQ(lab.label(g->id(1, 1)), 1);
  EXPECT_EQ(lab.label(g->id(1, 0)), 3);
  EXPECT_EQ(lab.label(g->id(0, 1)), 4);
  EXPECT_EQ(lab.span(), 4);
  EXPECT_TRUE(verify(lab).empty());
}

TEST(Labeling, SingleVertex) {
  auto g = product(Tree::path(1), Tree::path(1));
  VertexOrdering ord(g, std::vector<int>{0});
  auto lab = greedy_label(ord);
  EXPECT_EQ(lab.labels(), (std::vector<std::int64_t>{0}));
  EXPECT_EQ(lab.span(), 0);
  EXPECT_TRUE(verify(lab).empty());
}

TEST(Labeling, StarStarSpans) {
  EXPECT_EQ(greedy_label(star_star_ordering(6, 4)).span(), 55);
  for (int m = 3; m <= 6; ++m)
    for (int n = 3; n <= m; ++n) {
      auto lab = greedy_label(star_star_ordering(m, n));
      EXPECT_TRUE(verify(lab).empty());
      EXPECT_EQ(lab.span(), m * n + 3 * (m + n) + 1);
    }
}

TEST(Labeling, DuplicateLabels) {
  auto g = product(Tree::path(2), Tree::path(2));
  RadioLabeling zeros(g, {0, 0, 0, 0});
  try {
    verify(zeros);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::duplicate_label);
  }
  EXPECT_THROW(ordering_from_labeling(zeros), Error);
}

TEST(Labeling, AdjacentViolation) {
  auto g = product(Tree::star(3), Tree::star(3));
  std::vector<std::int64_t> labels(g->order());
  for (int v = 0; v < g->order(); ++v) labels[v] = 100 * v + 1000;
  int a = g->id(1, 1), b = g->id(1, 0);
  labels[a] = 0;
  labels[b] = 1;
  auto vs = verify(RadioLabeling(g, labels));
  Violation want{std::min(a, b), std::max(a, b), 1, 4};
  EXPECT_NE(std::find(vs.begin(), vs.end(), want), vs.end());
}

TEST(Labeling, WrongLabelCount) {
  auto g = product(Tree::path(2), Tree::path(2));
  EXPECT_THROW(RadioLabeling(g, {0, 1}), Error);
}

TEST(Labeling, OrderingFromLabelsSorts) {
  auto g = product(Tree::path(3), Tree::path(1));
  auto ord = ordering_from_labeling(RadioLabeling(g, {5, 0, 3}));
  EXPECT_EQ(ord.sequence(), (std::vector<int>{1, 2, 0}));
}

TEST(Labeling, NegativeStep) {
  // A broom: ten leaves on vertex 0 keep the weight center there, so the
  // far end of the handle sits deeper than half the diameter.
  std::vector<Edge> e;
  for (int i = 1; i <= 10; ++i) e.push_back({0, i});
  e.push_back({0, 11});
  for (int i = 11; i < 15; ++i) e.push_back({i, i + 1});
  auto g = product(Tree::from_edges(16, e), Tree::path(1));
  ASSERT_EQ(g->diameter(), 6);
  ASSERT_EQ(g->level(15), 5);
  std::vector<int> seq{15, 14};
  for (int v = 0; v < 14; ++v) seq.push_back(v);
  try {
    greedy_label(VertexOrdering(g, seq));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::negative_step);
  }
}

TEST(Labeling, RoundTripSpanIdentityAndInvariance) {
  std::mt19937_64 rng(17);
  int got = 0;
  for (int rep = 0; rep < 300 && got < 60; ++rep) {
    auto g = product(radio::testing::random_tree(2 + static_cast<int>(rng() % 7), rng),
                     radio::testing::random_tree(2 + static_cast<int>(rng() % 7), rng));
    auto ord = radio::testing::random_feasible_ordering(g, rng);
    if (!ord) continue;
    ++got;
    auto lab = greedy_label(*ord);
    EXPECT_EQ(ordering_from_labeling(lab).sequence(), ord->sequence());
    const int p = g->order(), d = g->diameter();
    std::int64_t sum = 0;
    for (int t = 0; t + 1 < p; ++t) {
      int u = (*ord)[t], v = (*ord)[t + 1];
      sum += g->level(u) + g->level(v) + g->delta(u, v);
    }
    EXPECT_EQ(lab.span(), std::int64_t(p - 1) * (d + 1) - sum);
    EXPECT_EQ(lab.label((*ord)[0]), 0);

    auto base = verify(lab);
    auto shifted = lab.labels();
    for (auto& x : shifted) x += 1000;
    EXPECT_EQ(verify(RadioLabeling(g, shifted)), base);
    EXPECT_EQ(RadioLabeling(g, shifted).normalized().labels(), lab.labels());
    EXPECT_EQ(verify(lab, 4), base);
    for (const auto& v : base) {
      EXPECT_LT(v.u, v.v);
      EXPECT_EQ(v.gap, std::llabs(lab.label(v.u) - lab.label(v.v)));
      EXPECT_EQ(v.required, d + 1 - g->distance(v.u, v.v));
    }
  }
  EXPECT_GT(got, 20);
}

TEST(Labeling, VerifyIsSymmetric) {
  // Reversing the labels turns (u,v) gaps into the same gaps.
  auto g = product(Tree::path(3), Tree::star(3));
  std::mt19937_64 rng(1);
  std::vector<std::int64_t> labels(g->order());
  for (int v = 0; v < g->order(); ++v) labels[v] = v * 2;
  std::shuffle(labels.begin(), labels.end(), rng);
  auto vs = verify(RadioLabeling(g, labels));
  auto neg = labels;
  for (auto& x : neg) x = -x;
  EXPECT_EQ(verify(RadioLabeling(g, neg)), vs);
  EXPECT_FALSE(vs.empty());
}
