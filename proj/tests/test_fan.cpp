#include <gtest/gtest.h>

#include <unordered_set>

#include "support.hpp"
#include "toricmg/errors.hpp"
#include "toricmg/fan.hpp"
#include "toricmg/graph_ideal.hpp"
#include "toricmg/lp.hpp"

using namespace toricmg;
using namespace toricmg::testing;

namespace {

MarkedReducedGB basis_for_weight(const GraphIdeal& gi, const IntVector& w) {
  return buchberger(gi.generators(), MonomialOrder::weighted({w}, MonomialOrder::degrevlex(gi.variables())));
}

IntVector negated(IntVector v) {
  for (auto& x : v) x = -x;
  return v;
}

}  // namespace

TEST(Lp, ConeMembership) {
  std::vector<IntVector> gens{{1, 0}, {0, 1}};
  EXPECT_TRUE(lp::in_cone(gens, {3, 5}));
  EXPECT_FALSE(lp::in_cone(gens, {-1, 5}));
  EXPECT_TRUE(lp::in_cone({{1, 1}, {1, -1}}, {2, 0}));
  EXPECT_FALSE(lp::in_cone({}, {1, 0}));
  EXPECT_TRUE(lp::in_cone({}, {0, 0}));
}

TEST(Lp, LargeEntriesFallBackToExactArithmetic) {
  const std::int64_t big = 3'000'000'000'000LL;
  std::vector<IntVector> gens{{big, 1, 0}, {1, big, 1}, {0, 1, big}};
  // target = g0 + g1 + g2 is inside, -g0 is not.
  EXPECT_TRUE(lp::in_cone(gens, {big + 1, big + 2, big + 1}));
  EXPECT_FALSE(lp::in_cone(gens, {-big, -1, 0}));
}

TEST(Lp, StrictPoint) {
  auto z = lp::strict_point({{1, 0}, {0, 1}, {-1, -1}});
  EXPECT_FALSE(z.has_value());
  z = lp::strict_point({{1, -1}, {0, 1}}, {{1, 1}});
  ASSERT_FALSE(z.has_value());
  z = lp::strict_point({{1, -1}, {0, 1}});
  ASSERT_TRUE(z.has_value());
  EXPECT_GE((*z)[0] - (*z)[1], 1);
  EXPECT_GE((*z)[1], 1);
  z = lp::strict_point({{1, 0, 0}}, {{0, 1, -1}});
  ASSERT_TRUE(z.has_value());
  EXPECT_EQ((*z)[1], (*z)[2]);
}

TEST(Fan, FourCycleHasTwoBases) {
  GraphIdeal gi(load_fixture("c4"));
  auto fan = enumerate_reduced_gbs(gi.generators());
  EXPECT_EQ(fan.gbs.size(), 2u);
  EXPECT_TRUE(fan.complete);
  EXPECT_EQ(universal_gb(fan).size(), 1u);
}

TEST(Fan, OctagonWithChordBases) {
  GraphIdeal gi(load_fixture("octagon_chord"));
  auto fan = enumerate_reduced_gbs(gi.generators());
  auto [lo, hi] = gb_size_range(fan);
  EXPECT_EQ(lo, 2u);
  EXPECT_EQ(hi, 3u);
  auto u = sign_normalized(universal_gb(fan));
  EXPECT_EQ(u, sign_normalized(universal_gb_bipartite(gi.graph())));
}

TEST(Fan, EmptyIdealHasOneBasis) {
  Graph tree = build_graph(4, {{0, 1}, {1, 2}, {1, 3}});
  GraphIdeal gi(tree);
  EXPECT_TRUE(gi.generators().empty());
  auto fan = enumerate_reduced_gbs(gi.generators());
  ASSERT_EQ(fan.gbs.size(), 1u);
  EXPECT_TRUE(fan.gbs[0].empty());
}

TEST(Fan, InteriorWeightsRecoverTheirBases) {
  for (const char* name : {"octagon_chord", "c6chord", "chordal_quadrics"}) {
    GraphIdeal gi(load_fixture(name));
    auto fan = enumerate_reduced_gbs(gi.generators());
    for (const auto& gb : fan.gbs) {
      auto cone = groebner_cone(gb);
      auto w = interior_weight(cone);
      for (auto x : w) EXPECT_GT(x, 0);
      for (const auto& ineq : cone.inequalities) {
        std::int64_t s = 0;
        for (std::size_t i = 0; i < w.size(); ++i) s += w[i] * ineq[i];
        EXPECT_GT(s, 0);
      }
      EXPECT_EQ(basis_for_weight(gi, w), gb) << name;
    }
  }
}

TEST(Fan, FlipsAgreeWithBuchbergerAndAreSymmetric) {
  for (const char* name : {"octagon_chord", "c6chord", "chordal_cubic", "walk2"}) {
    GraphIdeal gi(load_fixture(name));
    FanOptions options;
    options.record_edges = true;
    auto fan = enumerate_reduced_gbs(gi.generators(), options);
    ASSERT_FALSE(fan.edges.empty());
    for (const auto& edge : fan.edges) {
      const auto& from = fan.gbs[edge.from];
      const auto& to = fan.gbs[edge.to];
      EXPECT_EQ(flip(to, negated(edge.facet)), from) << name;
      // Across the facet: a weight on the facet, refined by the direction leaving the cone.
      auto cone = groebner_cone(from);
      const Facet* facet = nullptr;
      for (const auto& f : cone.facets) {
        if (f.normal == primitive(edge.facet)) facet = &f;
      }
      ASSERT_NE(facet, nullptr);
      auto w0 = facet_weight(cone, *facet);
      auto order = MonomialOrder::weighted({w0, negated(facet->normal)}, MonomialOrder::degrevlex(gi.variables()));
      EXPECT_EQ(buchberger(gi.generators(), order), to) << name;
    }
  }
}

TEST(Fan, RandomWeightsStayInsideTheFan) {
  std::mt19937_64 rng(101);
  for (const char* name : {"octagon_chord", "q3", "chordal_quadrics", "c6chord"}) {
    GraphIdeal gi(load_fixture(name));
    auto fan = enumerate_reduced_gbs(gi.generators());
    std::unordered_set<MarkedReducedGB, GBHash> known(fan.gbs.begin(), fan.gbs.end());
    EXPECT_EQ(known.size(), fan.gbs.size());
    for (int t = 0; t < 100; ++t) {
      EXPECT_TRUE(known.count(basis_for_weight(gi, random_weight(rng, gi.variables()))));
    }
  }
}

TEST(Fan, CubeSizes) {
  GraphIdeal gi(load_fixture("q3"));
  auto fan = enumerate_reduced_gbs(gi.generators());
  EXPECT_EQ(fan.gbs.size(), 1002u);
  auto [lo, hi] = gb_size_range(fan);
  EXPECT_EQ(lo, 12u);
  EXPECT_EQ(hi, 15u);
  EXPECT_EQ(universal_gb(fan).size(), 28u);
  // Every chordless or not cycle binomial of a bipartite graph is in U.
  EXPECT_EQ(sign_normalized(universal_gb(fan)), sign_normalized(universal_gb_bipartite(gi.graph())));
}

TEST(Fan, BudgetAndStop) {
  GraphIdeal gi(load_fixture("q3"));
  FanOptions options;
  options.max_cones = 10;
  try {
    enumerate_reduced_gbs(gi.generators(), options);
    FAIL();
  } catch (const BudgetExceeded& e) {
    EXPECT_EQ(e.code(), ErrorCode::FanBudgetExceeded);
    EXPECT_EQ(e.cap(), 10u);
  }
  options.throw_on_budget = false;
  auto partial = enumerate_reduced_gbs(gi.generators(), options);
  EXPECT_TRUE(partial.truncated);
  EXPECT_FALSE(partial.complete);
  EXPECT_EQ(partial.gbs.size(), 10u);

  FanOptions stop;
  stop.best_first = true;
  stop.stop = [](const MarkedReducedGB& gb) { return gb.size() == 12; };
  auto found = enumerate_reduced_gbs(gi.generators(), stop);
  EXPECT_FALSE(found.complete);
  EXPECT_FALSE(found.truncated);
  EXPECT_EQ(found.gbs.back().size(), 12u);
}

TEST(Fan, ConeRejectsNonReducedInput) {
  GraphIdeal gi(load_fixture("octagon_chord"));
  auto elements = gi.groebner_basis().elements();
  elements.push_back(*binomial_from_vector({1, -1, 1, -1, 1, -1, 1, -1, 0}));
  try {
    groebner_cone(MarkedReducedGB(elements));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotReduced);
  }
}

TEST(Fan, FlipRejectsNonFacets) {
  GraphIdeal gi(load_fixture("octagon_chord"));
  IntVector bogus(gi.variables(), 0);
  bogus[0] = 1;
  try {
    flip(gi.groebner_basis(), bogus);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotAFacet);
  }
}
