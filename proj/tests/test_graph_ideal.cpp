#include <gtest/gtest.h>

#include <thread>

#include "support.hpp"
#include "toricmg/errors.hpp"
#include "toricmg/fan.hpp"
#include "toricmg/fiber.hpp"
#include "toricmg/graph_ideal.hpp"

using namespace toricmg;
using namespace toricmg::testing;

namespace {

// Same ideal iff same reduced basis for one fixed order.
bool equal_reduced_bases(const std::vector<Binomial>& a, const std::vector<Binomial>& b, std::size_t m) {
  auto order = MonomialOrder::degrevlex(m);
  auto ga = buchberger(a, order), gb = buchberger(b, order);
  return ga == gb;
}

}  // namespace

TEST(GraphIdeal, OctagonWithChordCycles) {
  Graph g = load_fixture("octagon_chord");
  auto c1 = walk_binomial(g, make_walk(g, {0, 1, 2, 5, 6, 7, 0}));
  auto c2 = walk_binomial(g, make_walk(g, {2, 3, 4, 5, 2}));
  ASSERT_TRUE(c1 && c2);
  EXPECT_EQ(*c1, binomial_of(9, {1, 9, 7}, {2, 6, 8}));
  EXPECT_EQ(*c2, binomial_of(9, {3, 5}, {4, 9}));
  std::set<Binomial> markov{normalize_sign(*c1), normalize_sign(*c2)};
  EXPECT_EQ(sign_normalized(markov_basis_bipartite(g)), markov);
  auto u = sign_normalized(universal_gb_bipartite(g));
  EXPECT_EQ(u.size(), 3u);
  EXPECT_TRUE(u.count(normalize_sign(binomial_of(9, {1, 3, 5, 7}, {2, 4, 6, 8}))));
}

TEST(GraphIdeal, WalkBinomialErrors) {
  Graph k3 = build_graph(3, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_FALSE(walk_binomial(k3, make_walk(k3, {0, 1, 2, 0, 1, 2, 0})).has_value());
  try {
    walk_binomial(k3, make_walk(k3, {0, 1, 2, 0}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::OddWalk);
  }
  Graph c4 = load_fixture("c4");
  EXPECT_THROW(walk_binomial(c4, make_walk(c4, {0, 1, 2})), Error);
}

TEST(GraphIdeal, SmallExamples) {
  Graph forest = build_graph(5, {{0, 1}, {1, 2}, {3, 4}});
  EXPECT_TRUE(GraphIdeal(forest).generators().empty());
  Graph c6 = build_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
  auto m = markov_basis_bipartite(c6);
  ASSERT_EQ(m.size(), 1u);
  EXPECT_EQ(m[0].plus.degree(), 3);
  auto k23 = theta_graph(3, 2);
  EXPECT_EQ(markov_basis_bipartite(k23).size(), 3u);
  GraphIdeal gi(k23);
  EXPECT_EQ(minimal_generators(gi.groebner_basis(), gi.grading()).mu, 3u);
  EXPECT_EQ(universal_gb_bipartite(load_fixture("c6chord")).size(), 3u);
  EXPECT_EQ(universal_gb_bipartite(load_fixture("c4")).size(), 1u);
  EXPECT_THROW(markov_basis_bipartite(build_graph(3, {{0, 1}, {1, 2}, {0, 2}})), Error);
}

TEST(GraphIdeal, CubeAndNeighbours) {
  GraphIdeal q3(load_fixture("q3"));
  auto mg = minimal_generators(q3.groebner_basis(), q3.grading());
  EXPECT_EQ(mg.mu, 10u);
  GraphIdeal listed_q(load_fixture("chordal_quadrics"));
  auto mq = minimal_generators(listed_q.groebner_basis(), listed_q.grading());
  EXPECT_EQ(mq.mu, 8u);
  for (const auto& b : mq.markov) EXPECT_EQ(b.plus.degree(), 2);
}

TEST(GraphIdeal, BipartiteMarkovAndUniversalMatchGeneralEngine) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 25; ++trial) {
    int a = 2 + trial % 3, b = 3 + trial % 2;
    int m = std::min(a * b, a + b + 1 + trial % 4);
    Graph g = random_connected_bipartite(rng, a, b, m);
    GraphIdeal gi(g);
    auto markov = markov_basis_bipartite(g);
    auto mg = minimal_generators(gi.groebner_basis(), gi.grading());
    EXPECT_EQ(markov.size(), mg.mu);
    EXPECT_TRUE(equal_reduced_bases(markov, gi.generators(), gi.variables()));
    auto fan = enumerate_reduced_gbs(gi.generators());
    EXPECT_EQ(sign_normalized(universal_gb(fan)), sign_normalized(universal_gb_bipartite(g)));
    EXPECT_EQ(sign_normalized(universal_markov_basis(gi, universal_gb(fan))), sign_normalized(markov));
  }
}

TEST(GraphIdeal, GeneratorsHaveNoCommonVariable) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 25; ++trial) {
    Graph g = random_connected_graph(rng, 5 + trial % 3, 7 + trial % 4);
    GraphIdeal gi(g);
    for (const auto& b : gi.generators()) EXPECT_TRUE(b.plus.coprime(b.minus));
    for (const auto& c : enumerate_cycles(g, true)) {
      auto w = make_walk(g, [&] {
        auto vs = c.vertices;
        vs.push_back(vs.front());
        return vs;
      }());
      auto b = walk_binomial(g, w);
      ASSERT_TRUE(b.has_value());
      EXPECT_TRUE(b->plus.coprime(b->minus));
      // Even cycles lie in the ideal.
      EXPECT_TRUE(in_ideal(*b, gi.groebner_basis()));
    }
  }
}

TEST(GraphIdeal, BinomialWalkRecoversSupports) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 15; ++trial) {
    Graph g = random_connected_graph(rng, 6, 8 + trial % 3);
    GraphIdeal gi(g);
    auto fan = enumerate_reduced_gbs(gi.generators());
    for (const auto& b : universal_gb(fan)) {
      auto w = binomial_walk(g, b);
      ASSERT_TRUE(w.has_value());
      auto back = walk_binomial(g, *w);
      ASSERT_TRUE(back.has_value());
      EXPECT_EQ(normalize_sign(*back), normalize_sign(b));
    }
  }
  Graph c4 = load_fixture("c4");
  EXPECT_FALSE(binomial_walk(c4, binomial_of(4, {1, 2}, {3, 4})).has_value());
}

TEST(GraphIdeal, ScreenVerdictsOnWalkFixtures) {
  Graph g1 = load_fixture("walk1");
  auto r1 = walk_minimality_screen(make_walk(g1, {0, 1, 2, 0, 3, 4, 5, 6, 7, 3, 0}), g1);
  EXPECT_FALSE(r1.pass);
  EXPECT_EQ(r1.reason, ScreenReason::EvenChord);
  EXPECT_EQ(r1.chords, std::vector<int>{9});

  Graph g2 = load_fixture("walk2");
  auto r2 = walk_minimality_screen(make_walk(g2, {0, 1, 2, 3, 4, 5, 6, 7, 0}), g2);
  EXPECT_FALSE(r2.pass);
  EXPECT_EQ(r2.reason, ScreenReason::CrossingWithoutF4);
  EXPECT_EQ(r2.chords, (std::vector<int>{8, 9}));

  Graph g3 = load_fixture("walk3");
  Walk w3 = make_walk(g3, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 0});
  auto r3 = walk_minimality_screen(w3, g3);
  EXPECT_TRUE(r3.pass);
  GraphIdeal gi(g3);
  auto b3 = walk_binomial(g3, w3);
  ASSERT_TRUE(b3.has_value());
  EXPECT_TRUE(is_minimal_binomial(*b3, gi.groebner_basis(), gi.grading()));
  auto umb = sign_normalized(universal_markov_basis(gi));
  EXPECT_TRUE(umb.count(normalize_sign(*b3)));
}

TEST(GraphIdeal, MinimalBinomialsPassTheScreen) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 15; ++trial) {
    Graph g = random_connected_graph(rng, 6 + trial % 2, 9 + trial % 3);
    GraphIdeal gi(g);
    for (const auto& b : universal_markov_basis(gi)) {
      auto w = binomial_walk(g, b);
      if (!w) continue;
      EXPECT_TRUE(walk_minimality_screen(*w, g).pass);
    }
  }
}

TEST(GraphIdeal, OuterCycleIsNotMinimal) {
  GraphIdeal gi(load_fixture("octagon_chord"));
  auto c3 = binomial_of(9, {1, 3, 5, 7}, {2, 4, 6, 8});
  EXPECT_FALSE(is_minimal_binomial(c3, gi.groebner_basis(), gi.grading()));
  EXPECT_TRUE(is_minimal_binomial(binomial_of(9, {3, 5}, {4, 9}), gi.groebner_basis(), gi.grading()));
  try {
    is_minimal_binomial(binomial_of(9, {1}, {2}), gi.groebner_basis(), gi.grading());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotInIdeal);
  }
}

TEST(GraphIdeal, CachedBasisIsShared) {
  GraphIdeal gi(load_fixture("chordal_cubic"));
  GraphIdeal copy = gi;
  std::vector<std::thread> threads;
  std::vector<const MarkedReducedGB*> seen(4);
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&, t] { seen[static_cast<std::size_t>(t)] = &(t % 2 ? copy : gi).groebner_basis(); });
  }
  for (auto& t : threads) t.join();
  for (auto* p : seen) EXPECT_EQ(p, seen[0]);
}
