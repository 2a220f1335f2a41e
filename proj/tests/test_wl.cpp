#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"
#include "oracles.hpp"
#include "srings/construct.hpp"
#include "srings/wl.hpp"

using namespace srings;

namespace {

RelationColoring cayley_graph_coloring(const AbelianGroup& g, const ElemSet& x) {
  const std::uint32_t n = g.order();
  std::vector<std::uint32_t> c(std::size_t(n) * n);
  for (Elem u = 0; u < n; ++u)
    for (Elem v = 0; v < n; ++v) {
      Elem d = g.sub(v, u);
      c[std::size_t(u) * n + v] = d == 0 ? 0 : std::binary_search(x.begin(), x.end(), d) ? 2 : 1;
    }
  return normalize_coloring(n, std::move(c));
}

}  // namespace

TEST(Wl, CoherentInputUnchanged) {
  for (const auto& a : testing_helpers::constructor_zoo(10)) {
    auto c = scheme_coloring(a);
    auto s = wl_stabilize(c);
    EXPECT_EQ(s.color, c.color);
    EXPECT_TRUE(is_coherent(s));
  }
}

TEST(Wl, Pentagon) {
  auto c5 = AbelianGroup::make({5});
  auto s = wl_stabilize(cayley_graph_coloring(c5, {1, 4}));
  EXPECT_EQ(s.num_colors, 3u);
  auto a = scheme_from_cayley_graph(c5, ElemSet{1, 4});
  EXPECT_EQ(a.classes(), (std::vector<ElemSet>{{0}, {1, 4}, {2, 3}}));
}

TEST(Wl, MatchesNaiveRefinement) {
  std::mt19937 rng(2024);
  for (auto factors : std::vector<std::vector<std::uint32_t>>{{8}, {2, 4}, {9}, {3, 3}, {2, 2, 2}, {12}}) {
    auto g = AbelianGroup::make(factors);
    for (int t = 0; t < 6; ++t) {
      ElemSet x = t == 0 && factors == std::vector<std::uint32_t>{8} ? ElemSet{1, 7}
                                                                       : testing_helpers::random_subset(g, rng);
      auto init = cayley_graph_coloring(g, x);
      auto fast = wl_stabilize(init);
      auto slow = oracle::naive_wl(g.order(), init.color);
      EXPECT_TRUE(oracle::same_partition(fast.color, slow)) << g.to_string();
      EXPECT_TRUE(is_coherent(fast));
    }
  }
}

TEST(Wl, GeneralColoringsMatchNaive) {
  // Colorings that are not translation invariant: random symmetric graphs.
  std::mt19937 rng(99);
  for (std::uint32_t n : {6u, 9u, 12u}) {
    for (int t = 0; t < 4; ++t) {
      std::vector<std::uint32_t> c(n * n, 0);
      std::bernoulli_distribution edge(0.4);
      for (std::uint32_t u = 0; u < n; ++u)
        for (std::uint32_t v = u + 1; v < n; ++v) c[u * n + v] = c[v * n + u] = edge(rng) ? 1 : 2;
      auto init = normalize_coloring(n, c);
      auto fast = wl_stabilize(init);
      EXPECT_TRUE(oracle::same_partition(fast.color, oracle::naive_wl(n, init.color)));
      EXPECT_TRUE(is_coherent(fast));
      // refinement of the input
      for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = 0; j < c.size(); ++j)
          if (fast.color[i] == fast.color[j]) ASSERT_EQ(init.color[i], init.color[j]);
      // diagonal never shares a color with a non-diagonal pair
      for (std::uint32_t u = 0; u < n; ++u)
        for (std::uint32_t v = 0; v < n; ++v)
          if (u != v) ASSERT_NE(fast.at(u, v), fast.at(0, 0));
    }
  }
}

TEST(Wl, Deterministic) {
  auto g = AbelianGroup::make({2, 8});
  std::mt19937 rng(5);
  auto x = testing_helpers::random_subset(g, rng);
  std::vector<std::uint64_t> t1, t2;
  auto a = wl_stabilize(cayley_graph_coloring(g, x), &t1);
  auto b = wl_stabilize(cayley_graph_coloring(g, x), &t2);
  EXPECT_EQ(a.color, b.color);
  EXPECT_EQ(t1, t2);
}

TEST(Wl, IsomorphismInvariance) {
  std::mt19937 rng(17);
  for (std::uint32_t n : {8u, 12u, 16u}) {
    std::vector<std::uint32_t> c(n * n);
    std::uniform_int_distribution<std::uint32_t> col(0, 2);
    for (auto& v : c) v = col(rng);
    for (std::uint32_t u = 0; u < n; ++u) c[u * n + u] = 3;
    std::vector<std::uint32_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0u);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::uint32_t> pc(n * n);
    for (std::uint32_t u = 0; u < n; ++u)
      for (std::uint32_t v = 0; v < n; ++v) pc[perm[u] * n + perm[v]] = c[u * n + v];
    std::vector<std::uint64_t> t1, t2;
    auto s = wl_stabilize(normalize_coloring(n, c), &t1);
    auto ps = wl_stabilize(normalize_coloring(n, pc), &t2);
    EXPECT_EQ(t1, t2);
    for (std::uint32_t u = 0; u < n; ++u)
      for (std::uint32_t v = 0; v < n; ++v) ASSERT_EQ(ps.at(perm[u], perm[v]), s.at(u, v));
  }
}

TEST(Scheme, Examples) {
  auto g = AbelianGroup::make({2, 2});
  EXPECT_EQ(scheme_from_cayley_graph(g, ElemSet{1, 2, 3}), rank2(g));
  auto c5 = AbelianGroup::make({5});
  EXPECT_EQ(scheme_from_cayley_graph(c5, ElemSet{1, 4}).rank(), 3u);
}

TEST(Scheme, SeedIsASet) {
  std::mt19937 rng(8);
  for (auto factors : std::vector<std::vector<std::uint32_t>>{{16}, {2, 8}, {4, 4}, {3, 9}, {2, 2, 2, 2}}) {
    auto g = AbelianGroup::make(factors);
    for (int t = 0; t < 5; ++t) {
      auto x = testing_helpers::random_subset(g, rng);
      auto a = scheme_from_cayley_graph(g, x);
      EXPECT_TRUE(is_a_set(a, x));
      EXPECT_EQ(a, closure(g, std::span<const ElemSet>(&x, 1)));
    }
  }
}

TEST(Scheme, FastPathAgreesWithFullRefinement) {
  // Groups above the full-refinement bound use the per-element path; both
  // must give the same colors and traces.
  std::mt19937 rng(12);
  auto g = AbelianGroup::make({2, 2, 16});
  for (int t = 0; t < 3; ++t) {
    auto x = testing_helpers::random_subset(g, rng, 0.2);
    auto cs = cayley_scheme(g, std::span<const ElemSet>(&x, 1), 0);
    std::vector<std::uint64_t> trace;
    auto full = wl_stabilize(cayley_graph_coloring(g, x), &trace);
    EXPECT_EQ(trace, cs.trace);
    for (std::size_t i = 0; i < cs.ring.rank(); ++i)
      for (Elem z : cs.ring.cls(i)) ASSERT_EQ(full.at(0, z), cs.color_of_class[i]);
  }
}
