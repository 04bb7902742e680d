#include <gtest/gtest.h>

#include "support.hpp"
#include "toricmg/classifier.hpp"
#include "toricmg/errors.hpp"

using namespace toricmg;
using namespace toricmg::testing;

namespace {

std::vector<int> random_vertex_subset(std::mt19937_64& rng, int n) {
  std::vector<int> keep;
  while (keep.size() < 3) {
    keep.clear();
    for (int v = 0; v < n; ++v) {
      if (rng() % 4 != 0) keep.push_back(v);
    }
  }
  return keep;
}

bool is_mg_flag(const Graph& g) { return is_mg(GraphIdeal(g)).is_mg; }

}  // namespace

TEST(Decompose, ThetaLeaf) {
  Graph g = load_fixture("theta45");
  auto d = theta_decompose(g);
  ASSERT_TRUE(d.has_value());
  EXPECT_EQ(d->k, 5);
  auto ls = leaves(d->root);
  ASSERT_EQ(ls.size(), 1u);
  EXPECT_EQ(ls[0]->kind, LeafKind::Theta);
  EXPECT_EQ(ls[0]->r, 4);
  EXPECT_EQ(ls[0]->k, 5);
  EXPECT_TRUE(reassembles_to(d->root, g));
}

TEST(Decompose, ThetaClique) {
  Graph g = clique_sum(theta_graph(3, 3), theta_graph(2, 3), EdgeGlue{0, 0}).graph;
  for (const auto& c : enumerate_chordless_cycles(g)) EXPECT_EQ(c.length(), 6u);
  auto d = theta_decompose(g);
  ASSERT_TRUE(d.has_value());
  EXPECT_EQ(d->k, 3);
  EXPECT_EQ(leaf_count(d->root), 2u);
  EXPECT_EQ(d->root.kind, DecompositionNode::Kind::EdgeSum);
  EXPECT_EQ(d->root.seam_edge, 0);
  EXPECT_TRUE(reassembles_to(d->root, g));
}

TEST(Decompose, OddCycles) {
  Graph c5 = cycle_graph(5);
  auto d = odd_cycle_decompose(c5);
  ASSERT_TRUE(d.has_value());
  EXPECT_EQ(d->k, 3);
  ASSERT_EQ(leaf_count(d->root), 1u);
  EXPECT_EQ(leaves(d->root)[0]->kind, LeafKind::Cycle);

  Graph two = clique_sum(c5, c5, EdgeGlue{2, 4}).graph;
  auto d2 = odd_cycle_decompose(two);
  ASSERT_TRUE(d2.has_value());
  EXPECT_EQ(leaf_count(d2->root), 2u);
  EXPECT_TRUE(reassembles_to(d2->root, two));

  EXPECT_FALSE(odd_cycle_decompose(cycle_graph(3)).has_value());
  EXPECT_FALSE(theta_decompose(cycle_graph(5)).has_value());
}

TEST(Decompose, AbsentWhenLengthsDiffer) {
  EXPECT_FALSE(theta_decompose(load_fixture("c6chord")).has_value());
  EXPECT_FALSE(theta_decompose(load_fixture("octagon_chord")).has_value());
  EXPECT_FALSE(theta_decompose(load_fixture("q3")).has_value());
  std::mt19937_64 rng(8);
  for (int t = 0; t < 30; ++t) {
    Graph g = random_connected_graph(rng, 7, 9);
    std::set<std::size_t> lengths;
    for (const auto& c : enumerate_chordless_cycles(g)) lengths.insert(c.length());
    if (lengths.size() > 1) EXPECT_FALSE(theta_decompose(g).has_value());
  }
}

TEST(Decompose, BlocksAndBridges) {
  // Two theta graphs joined by a path of two bridges.
  Graph a = theta_graph(3, 3);
  Graph ab = clique_sum(a, build_graph(3, {{0, 1}, {1, 2}}), VertexGlue{1, 0}).graph;
  Graph g = clique_sum(ab, theta_graph(2, 3), VertexGlue{ab.vertex_count() - 1, 0}).graph;
  auto d = theta_decompose(g);
  ASSERT_TRUE(d.has_value());
  EXPECT_EQ(d->root.kind, DecompositionNode::Kind::VertexSum);
  std::size_t edges = 0, thetas = 0;
  for (const auto* l : leaves(d->root)) {
    edges += l->kind == LeafKind::Edge;
    thetas += l->kind == LeafKind::Theta;
  }
  EXPECT_EQ(edges, 2u);
  EXPECT_EQ(thetas, 2u);
  EXPECT_TRUE(reassembles_to(d->root, g));
}

TEST(Decompose, RingGraphs) {
  EXPECT_TRUE(is_ring_graph(load_fixture("ring")));
  EXPECT_TRUE(is_ring_graph(cycle_graph(7)));
  EXPECT_FALSE(is_ring_graph(load_fixture("q3")));
  EXPECT_TRUE(is_complete_intersection_bipartite(load_fixture("c6chord")));
  EXPECT_TRUE(is_complete_intersection_bipartite(load_fixture("c4")));
  EXPECT_FALSE(is_complete_intersection_bipartite(load_fixture("q3")));
  EXPECT_THROW(is_complete_intersection_bipartite(cycle_graph(5)), Error);
  // Ring graphs of even cycles: complete intersection, mu = m - n + 1.
  for (const char* name : {"ring", "c6chord", "c4", "octagon_chord"}) {
    Graph g = load_fixture(name);
    GraphIdeal gi(g);
    auto mu = minimal_generators(gi.groebner_basis(), gi.grading()).mu;
    EXPECT_EQ(is_ring_graph(g), mu == static_cast<std::size_t>(g.edge_count() - g.vertex_count() + 1)) << name;
  }
}

TEST(Decompose, OrderFromDecompositionFindsMinimalBasis) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 10; ++t) {
    Graph g = random_theta_sum(rng, 3 + t % 3, 2, 4, 2 + t % 2);
    auto d = theta_decompose(g);
    ASSERT_TRUE(d.has_value());
    GraphIdeal gi(g);
    auto gb = buchberger(gi.generators(), decomposition_order(g, d->root));
    EXPECT_EQ(gb.size(), minimal_generators(gi.groebner_basis(), gi.grading()).mu);
  }
}

TEST(Classifier, MinimalGenerationExamples) {
  EXPECT_FALSE(is_mg(GraphIdeal(load_fixture("q3"))).is_mg);
  auto h = is_mg(GraphIdeal(load_fixture("cube_plus")));
  EXPECT_TRUE(h.is_mg);
  ASSERT_TRUE(h.witness.has_value());
  EXPECT_EQ(h.witness->size(), 13u);
  ASSERT_TRUE(h.weight.has_value());
  GraphIdeal gh(load_fixture("cube_plus"));
  EXPECT_EQ(buchberger(gh.generators(), MonomialOrder::weighted({*h.weight}, MonomialOrder::degrevlex(13))),
            *h.witness);
  auto forest = is_mg(GraphIdeal(build_graph(4, {{0, 1}, {0, 2}, {0, 3}})));
  EXPECT_TRUE(forest.is_mg);
  EXPECT_EQ(forest.mu, 0u);
}

TEST(Classifier, UniversalAndRobustExamples) {
  GraphIdeal c6chord(load_fixture("c6chord")), theta45(load_fixture("theta45")), c4(load_fixture("c4"));
  GraphIdeal octagon(load_fixture("octagon_chord")), theta33(theta_graph(3, 3));
  EXPECT_FALSE(is_umg(c6chord));
  EXPECT_TRUE(is_umg(theta45));
  EXPECT_TRUE(is_umg(c4));
  EXPECT_FALSE(is_generalized_robust(octagon));
  EXPECT_TRUE(is_generalized_robust(theta33));
  EXPECT_TRUE(is_generalized_robust(c4));
  EXPECT_TRUE(is_robust(c4));
  EXPECT_FALSE(is_robust(octagon));
  EXPECT_TRUE(is_robust(theta33));
}

TEST(Classifier, Reports) {
  auto q3 = classify(load_fixture("q3"));
  EXPECT_EQ(q3.mu, 10u);
  EXPECT_EQ(q3.gb_size_min, 12u);
  EXPECT_EQ(q3.is_mg, false);
  EXPECT_TRUE(q3.consistency_violations.empty());

  auto octagon = classify(load_fixture("octagon_chord"));
  EXPECT_EQ(octagon.is_gen_robust, false);
  EXPECT_EQ(octagon.is_umg, false);
  EXPECT_EQ(octagon.is_mg, true);
  EXPECT_EQ(octagon.universal_gb_size, 3u);
  EXPECT_EQ(octagon.universal_markov_size, 2u);
  EXPECT_EQ(octagon.chordless_cycle_lengths, (std::vector<std::size_t>{4, 6}));

  auto t33 = classify(theta_graph(3, 3));
  EXPECT_EQ(t33.is_robust, true);
  EXPECT_EQ(t33.is_umg, true);
  EXPECT_EQ(t33.is_mg, true);
  EXPECT_TRUE(t33.theta_decomposition.has_value());
  EXPECT_EQ(t33.complete_intersection, false);

  auto k3 = classify(cycle_graph(3));
  EXPECT_FALSE(k3.bipartite);
  EXPECT_EQ(k3.mu, 0u);
  EXPECT_FALSE(k3.complete_intersection.has_value());
}

TEST(Classifier, BudgetMarkers) {
  Budget tight;
  tight.max_cones = 50;
  auto r = classify(load_fixture("q3"), tight);
  EXPECT_TRUE(r.budget_exceeded());
  EXPECT_EQ(r.mu, 10u);
  EXPECT_FALSE(r.reduced_gb_count.has_value());
  EXPECT_FALSE(r.is_mg.has_value());
  // A best-first search still finds a witness within the same budget.
  auto h = classify(load_fixture("cube_plus"), tight);
  EXPECT_TRUE(h.budget_exceeded());
  EXPECT_EQ(h.is_mg, true);
  EXPECT_EQ(h.gb_size_min, 13u);
  tight.max_cycles = 2;
  auto c = classify(load_fixture("q3"), tight);
  EXPECT_FALSE(c.chordless_cycle_lengths.has_value());
}

TEST(Classifier, Deterministic) {
  Graph g = load_fixture("chordal_quadrics");
  auto a = classify(g), b = classify(g);
  EXPECT_EQ(a.mg_witness_weight, b.mg_witness_weight);
  EXPECT_EQ(a.gb_size_min, b.gb_size_min);
  EXPECT_EQ(a.reduced_gb_count, b.reduced_gb_count);
}

TEST(ClassifierProperties, InducedSubgraphsOfMGGraphsAreMG) {
  std::mt19937_64 rng(31);
  for (const char* name : {"cube_plus", "octagon_chord", "theta45", "ring", "chordal_quadrics"}) {
    Graph g = load_fixture(name);
    // listed_q is not MG; its subgraphs may still be, so only MG parents are checked.
    if (!is_mg_flag(g)) continue;
    for (int t = 0; t < 20; ++t) {
      Graph sub = induced_subgraph(g, random_vertex_subset(rng, g.vertex_count())).graph;
      EXPECT_TRUE(is_mg_flag(sub)) << name;
    }
  }
}

TEST(ClassifierProperties, VertexSumsPreserveMG) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 10; ++t) {
    Graph a = random_connected_bipartite(rng, 2 + t % 2, 3, 6);
    Graph b = random_connected_bipartite(rng, 3, 3, 6 + t % 3);
    Graph s = clique_sum(a, b, VertexGlue{0, 0}).graph;
    EXPECT_EQ(is_mg_flag(s), is_mg_flag(a) && is_mg_flag(b));
  }
  Graph q3 = load_fixture("q3");
  EXPECT_FALSE(is_mg_flag(clique_sum(q3, load_fixture("c4"), VertexGlue{0, 0}).graph));
}

TEST(ClassifierProperties, UMGSumsWithMGAreMG) {
  Graph umg = theta_graph(3, 3);
  for (const char* name : {"octagon_chord", "c6chord", "cube_plus"}) {
    Graph mg = load_fixture(name);
    EXPECT_TRUE(is_mg_flag(clique_sum(umg, mg, VertexGlue{0, 0}).graph)) << name;
    EXPECT_TRUE(is_mg_flag(clique_sum(umg, mg, EdgeGlue{0, 0}).graph)) << name;
  }
}

TEST(ClassifierProperties, UniformLengthAndRingGraphsAreMG) {
  std::mt19937_64 rng(77);
  for (int t = 0; t < 8; ++t) {
    Graph g = random_theta_sum(rng, 3 + t % 3, 2, 3, 2);
    EXPECT_TRUE(is_mg_flag(g));
    Graph ring = random_ring_graph(rng, 3);
    EXPECT_TRUE(is_ring_graph(ring));
    auto cert = is_mg(GraphIdeal(ring));
    EXPECT_TRUE(cert.is_mg);
    EXPECT_EQ(cert.mu, static_cast<std::size_t>(ring.edge_count() - ring.vertex_count() + 1));
  }
  for (const char* name : {"theta45", "c4", "ring"}) EXPECT_TRUE(is_mg_flag(load_fixture(name))) << name;
}

TEST(ClassifierProperties, OutsideVerticesSeeOneNeighbour) {
  std::mt19937_64 rng(3);
  std::vector<Graph> graphs{load_fixture("theta45"), theta_graph(3, 3)};
  for (int t = 0; t < 5; ++t) graphs.push_back(random_theta_sum(rng, 3 + t % 2, 2, 3, 3));
  for (const Graph& g : graphs) {
    for (const auto& c : enumerate_cycles(g)) {
      std::set<int> inside(c.vertices.begin(), c.vertices.end());
      for (int v = 0; v < g.vertex_count(); ++v) {
        if (inside.count(v)) continue;
        int hits = 0;
        for (auto [u, e] : g.incident(v)) hits += inside.count(u) ? 1 : 0;
        EXPECT_LE(hits, 1);
      }
    }
  }
}
