#include <gtest/gtest.h>

#include <functional>
#include <map>

#include "support.hpp"
#include "toricmg/errors.hpp"
#include "toricmg/graph.hpp"

using namespace toricmg;
using namespace toricmg::testing;

namespace {

bool is_cycle_edge_set(const Graph& g, const std::vector<int>& edges) {
  std::map<int, int> degree;
  std::map<int, int> parent;
  std::function<int(int)> find = [&](int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); };
  for (int e : edges) {
    ++degree[g.edge(e).u];
    ++degree[g.edge(e).v];
    parent.try_emplace(g.edge(e).u, g.edge(e).u);
    parent.try_emplace(g.edge(e).v, g.edge(e).v);
  }
  for (auto [v, d] : degree) {
    if (d != 2) return false;
  }
  int roots = 0;
  for (int e : edges) parent[find(g.edge(e).u)] = find(g.edge(e).v);
  for (auto& [v, p] : parent) roots += find(v) == v;
  return roots == 1;
}

// Cycles as edge subsets: connected and 2-regular.
std::set<std::vector<int>> brute_force_cycles(const Graph& g) {
  std::set<std::vector<int>> out;
  const int m = g.edge_count();
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    std::vector<int> edges;
    for (int e = 0; e < m; ++e) {
      if (mask >> e & 1u) edges.push_back(e);
    }
    if (edges.size() >= 3 && is_cycle_edge_set(g, edges)) out.insert(edges);
  }
  return out;
}

std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::set<int> cycle_vertices(const Graph& g, const std::vector<int>& edges) {
  std::set<int> vs;
  for (int e : edges) {
    vs.insert(g.edge(e).u);
    vs.insert(g.edge(e).v);
  }
  return vs;
}

bool brute_chordless(const Graph& g, const std::vector<int>& edges) {
  auto vs = cycle_vertices(g, edges);
  int inside = 0;
  for (const Edge& e : g.edges()) inside += vs.count(e.u) && vs.count(e.v);
  return inside == static_cast<int>(edges.size());
}

}  // namespace

TEST(Graph, RejectsLoopsAndDuplicates) {
  EXPECT_THROW(build_graph(2, {{0, 0}}), Error);
  EXPECT_THROW(build_graph(2, {{0, 1}, {1, 0}}), Error);
  try {
    build_graph(3, {{0, 5}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::VertexOutOfRange);
  }
}

TEST(Graph, CycleEnumerationMatchesEdgeSubsets) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = random_connected_graph(rng, 4 + trial % 4, 5 + trial % 7);
    auto expected = brute_force_cycles(g);
    std::set<std::vector<int>> got, chordless_got;
    for (const auto& c : enumerate_cycles(g)) got.insert(sorted(c.edges));
    EXPECT_EQ(got, expected);
    std::set<std::vector<int>> chordless_expected;
    for (const auto& c : expected) {
      if (brute_chordless(g, c)) chordless_expected.insert(c);
    }
    for (const auto& c : enumerate_chordless_cycles(g)) chordless_got.insert(sorted(c.edges));
    EXPECT_EQ(chordless_got, chordless_expected);
    std::set<std::vector<int>> even_expected;
    for (const auto& c : expected) {
      if (c.size() % 2 == 0) even_expected.insert(c);
    }
    std::set<std::vector<int>> even_got;
    for (const auto& c : enumerate_cycles(g, true)) even_got.insert(sorted(c.edges));
    EXPECT_EQ(even_got, even_expected);
  }
}

TEST(Graph, CyclesAreCanonical) {
  Graph g = load_fixture("q3");
  for (const auto& c : enumerate_cycles(g)) {
    EXPECT_EQ(c.vertices.front(), *std::min_element(c.vertices.begin(), c.vertices.end()));
    EXPECT_LT(c.vertices[1], c.vertices.back());
    EXPECT_EQ(canonical_cycle_vertices(c.vertices), c.vertices);
  }
}

TEST(Graph, CycleBudget) {
  Graph g = load_fixture("q3");
  try {
    enumerate_cycles(g, false, 3);
    FAIL();
  } catch (const BudgetExceeded& e) {
    EXPECT_EQ(e.code(), ErrorCode::CycleBudgetExceeded);
    EXPECT_EQ(e.cap(), 3u);
  }
}

TEST(Graph, BipartiteMatchesOddCycleAbsence) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = random_connected_graph(rng, 5 + trial % 3, 6 + trial % 5);
    bool odd = false;
    for (const auto& c : brute_force_cycles(g)) odd = odd || c.size() % 2 == 1;
    auto bip = is_bipartite(g);
    EXPECT_EQ(bip.has_value(), !odd);
    if (bip) {
      std::vector<int> side(static_cast<std::size_t>(g.vertex_count()), -1);
      for (int v : bip->first) side[static_cast<std::size_t>(v)] = 0;
      for (int v : bip->second) side[static_cast<std::size_t>(v)] = 1;
      for (const Edge& e : g.edges()) EXPECT_NE(side[static_cast<std::size_t>(e.u)], side[static_cast<std::size_t>(e.v)]);
    }
  }
}

TEST(Graph, BlocksAreCycleClasses) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = random_connected_graph(rng, 6, 6 + trial % 4);
    auto blocks = biconnected_blocks(g);
    std::vector<int> block_of(static_cast<std::size_t>(g.edge_count()), -1);
    for (std::size_t b = 0; b < blocks.blocks.size(); ++b) {
      for (int e : blocks.blocks[b]) block_of[static_cast<std::size_t>(e)] = static_cast<int>(b);
    }
    for (int x : block_of) EXPECT_GE(x, 0);
    auto cycles = brute_force_cycles(g);
    for (int e = 0; e < g.edge_count(); ++e) {
      for (int f = e + 1; f < g.edge_count(); ++f) {
        bool share = false;
        for (const auto& c : cycles) share = share || (std::binary_search(c.begin(), c.end(), e) && std::binary_search(c.begin(), c.end(), f));
        EXPECT_EQ(share, block_of[static_cast<std::size_t>(e)] == block_of[static_cast<std::size_t>(f)]);
      }
    }
    const int base = component_count(g);
    std::vector<int> cuts;
    for (int v = 0; v < g.vertex_count(); ++v) {
      std::vector<int> keep;
      for (int u = 0; u < g.vertex_count(); ++u) {
        if (u != v) keep.push_back(u);
      }
      if (component_count(induced_subgraph(g, keep).graph) > base) cuts.push_back(v);
    }
    EXPECT_EQ(blocks.cut_vertices, cuts);
  }
}

TEST(Graph, ChordlessGraphs) {
  EXPECT_TRUE(is_chordless_graph(theta_graph(3, 3)));
  EXPECT_TRUE(is_chordless_graph(load_fixture("c4")));
  EXPECT_FALSE(is_chordless_graph(load_fixture("octagon_chord")));
  EXPECT_FALSE(is_chordless_graph(load_fixture("c6chord")));
}

TEST(Graph, ThetaGraphShape) {
  for (int r = 2; r <= 4; ++r) {
    for (int k = 2; k <= 5; ++k) {
      Graph t = theta_graph(r, k);
      EXPECT_EQ(t.vertex_count(), 2 + r * (k - 1));
      EXPECT_EQ(t.edge_count(), r * k);
      auto cycles = enumerate_cycles(t);
      EXPECT_EQ(cycles.size(), static_cast<std::size_t>(r * (r - 1) / 2));
      for (const auto& c : cycles) EXPECT_EQ(c.length(), static_cast<std::size_t>(2 * k));
    }
  }
}

TEST(Graph, CliqueSums) {
  Graph a = theta_graph(3, 3), b = theta_graph(2, 3);
  auto s = clique_sum(a, b, EdgeGlue{0, 0});
  EXPECT_EQ(s.graph.vertex_count(), a.vertex_count() + b.vertex_count() - 2);
  EXPECT_EQ(s.graph.edge_count(), a.edge_count() + b.edge_count() - 1);
  EXPECT_EQ(s.edge_map[0], 0);
  for (const auto& c : enumerate_chordless_cycles(s.graph)) EXPECT_EQ(c.length(), 6u);
  auto v = clique_sum(a, b, VertexGlue{0, 3});
  EXPECT_EQ(v.graph.vertex_count(), a.vertex_count() + b.vertex_count() - 1);
  EXPECT_EQ(v.graph.edge_count(), a.edge_count() + b.edge_count());
  EXPECT_EQ(biconnected_blocks(v.graph).cut_vertices, std::vector<int>{0});
}

TEST(Graph, InducedSubgraphMaps) {
  Graph g = load_fixture("octagon_chord");
  auto sub = induced_subgraph(g, {2, 3, 4, 5});
  EXPECT_EQ(sub.graph.edge_count(), 4);
  EXPECT_EQ(sub.vertex_map[0], -1);
  EXPECT_EQ(sub.edge_map[8], 3);
}

TEST(Graph, EvenClosedWalksIncludeEvenCycles) {
  Graph g = load_fixture("octagon_chord");
  auto walks = enumerate_even_closed_walks(g, 8);
  std::size_t cycles = 0;
  for (const auto& w : walks) {
    EXPECT_TRUE(w.closed());
    EXPECT_EQ(w.length() % 2, 0u);
    std::set<int> distinct(w.vertices.begin(), w.vertices.end() - 1);
    cycles += distinct.size() == w.length();
  }
  EXPECT_EQ(cycles, 3u);
}

TEST(Graph, ChordParitiesOfWalkFixtures) {
  // Closed walk through the triangle, then the 5-cycle, and back.
  Graph g1 = load_fixture("walk1");
  Walk w1 = make_walk(g1, {0, 1, 2, 0, 3, 4, 5, 6, 7, 3, 0});
  auto r1 = classify_chords(w1, g1);
  ASSERT_EQ(r1.size(), 1u);
  EXPECT_EQ(r1[0].chord, 9);
  EXPECT_EQ(r1[0].parity, ChordParity::Even);

  Graph g2 = load_fixture("walk2");
  auto r2 = classify_chords(make_walk(g2, {0, 1, 2, 3, 4, 5, 6, 7, 0}), g2);
  ASSERT_EQ(r2.size(), 2u);
  for (const auto& r : r2) {
    EXPECT_EQ(r.parity, ChordParity::Odd);
    EXPECT_EQ(r.crosses_with.size(), 1u);
    EXPECT_TRUE(r.f4_partners.empty());
  }

  Graph g3 = load_fixture("walk3");
  auto r3 = classify_chords(make_walk(g3, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 0}), g3);
  ASSERT_EQ(r3.size(), 4u);
  for (const auto& r : r3) {
    EXPECT_EQ(r.parity, ChordParity::Odd);
    if (r.chord == 12) EXPECT_EQ(r.f4_partners, std::vector<int>{13});
    if (r.chord == 13) EXPECT_EQ(r.f4_partners, std::vector<int>{12});
    if (r.chord == 10 || r.chord == 11) EXPECT_TRUE(r.crosses_with.empty());
  }
}

TEST(Graph, MakeWalkRejectsNonEdges) {
  Graph g = load_fixture("c4");
  EXPECT_THROW(make_walk(g, {0, 2, 0}), Error);
}
