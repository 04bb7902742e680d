#pragma once

#include <algorithm>
#include <fstream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "toricmg/binomial.hpp"
#include "toricmg/graph.hpp"
#include "toricmg/io.hpp"

namespace toricmg::testing {

inline Graph load_fixture(const std::string& name) {
  std::ifstream in(std::string(TORICMG_FIXTURE_DIR) + "/" + name + ".edges");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_edge_list(ss.str());
}

inline const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names{"octagon_chord", "q3",    "cube_plus", "chordal_cubic", "chordal_quadrics",
                                              "walk1",         "walk2", "walk3",     "c4",            "c6chord",
                                              "theta45",       "ring"};
  return names;
}

/// Connected bipartite graph with sides of size a and b and m edges
/// (m >= a + b - 1, m <= a * b): random spanning tree plus random extra edges.
inline Graph random_connected_bipartite(std::mt19937_64& rng, int a, int b, int m) {
  std::vector<std::pair<int, int>> edges;
  std::set<std::pair<int, int>> used;
  std::vector<int> order(static_cast<std::size_t>(a + b));
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  // Grow a tree: each new vertex attaches to an earlier vertex of the other side.
  std::vector<int> placed;
  auto side = [a](int v) { return v < a ? 0 : 1; };
  std::vector<int> pending(order.begin(), order.end());
  placed.push_back(pending.front());
  pending.erase(pending.begin());
  while (!pending.empty()) {
    bool progressed = false;
    for (std::size_t i = 0; i < pending.size(); ++i) {
      std::vector<int> options;
      for (int p : placed) {
        if (side(p) != side(pending[i])) options.push_back(p);
      }
      if (options.empty()) continue;
      int p = options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)];
      int u = std::min(p, pending[i]), v = std::max(p, pending[i]);
      edges.emplace_back(u, v);
      used.emplace(u, v);
      placed.push_back(pending[i]);
      pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(i));
      progressed = true;
      break;
    }
    if (!progressed) break;
  }
  std::vector<std::pair<int, int>> rest;
  for (int u = 0; u < a; ++u) {
    for (int v = a; v < a + b; ++v) {
      if (!used.count({u, v})) rest.emplace_back(u, v);
    }
  }
  std::shuffle(rest.begin(), rest.end(), rng);
  for (std::size_t i = 0; i < rest.size() && static_cast<int>(edges.size()) < m; ++i) edges.push_back(rest[i]);
  std::shuffle(edges.begin(), edges.end(), rng);
  return build_graph(a + b, edges);
}

/// Random connected graph on n vertices with about m edges.
inline Graph random_connected_graph(std::mt19937_64& rng, int n, int m) {
  std::vector<std::pair<int, int>> edges;
  std::set<std::pair<int, int>> used;
  for (int v = 1; v < n; ++v) {
    int u = std::uniform_int_distribution<int>(0, v - 1)(rng);
    edges.emplace_back(u, v);
    used.emplace(u, v);
  }
  std::vector<std::pair<int, int>> rest;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!used.count({u, v})) rest.emplace_back(u, v);
    }
  }
  std::shuffle(rest.begin(), rest.end(), rng);
  for (std::size_t i = 0; i < rest.size() && static_cast<int>(edges.size()) < m; ++i) edges.push_back(rest[i]);
  return build_graph(n, edges);
}

inline std::set<Binomial> sign_normalized(const std::vector<Binomial>& bs) {
  std::set<Binomial> out;
  for (const auto& b : bs) out.insert(normalize_sign(b));
  return out;
}

/// Random positive weight vector.
inline std::vector<std::int64_t> random_weight(std::mt19937_64& rng, std::size_t m, std::int64_t hi = 1000) {
  std::vector<std::int64_t> w(m);
  std::uniform_int_distribution<std::int64_t> dist(1, hi);
  for (auto& x : w) x = dist(rng);
  return w;
}

/// Binomial from 1-based variable lists, repeated indices raise the power.
inline Binomial binomial_of(std::size_t m, std::initializer_list<int> plus, std::initializer_list<int> minus) {
  std::vector<Exponent> p(m, 0), q(m, 0);
  for (int i : plus) ++p[static_cast<std::size_t>(i - 1)];
  for (int i : minus) ++q[static_cast<std::size_t>(i - 1)];
  return Binomial(Monomial(p), Monomial(q));
}


inline Graph cycle_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return build_graph(n, edges);
}

/// Iterated 2-clique sum of `pieces` theta graphs with path length k and
/// random path counts in [r_lo, r_hi], glued on random edges.
inline Graph random_theta_sum(std::mt19937_64& rng, int k, int r_lo, int r_hi, int pieces) {
  std::uniform_int_distribution<int> rdist(r_lo, r_hi);
  Graph g = theta_graph(rdist(rng), k);
  for (int i = 1; i < pieces; ++i) {
    Graph t = theta_graph(rdist(rng), k);
    int e1 = std::uniform_int_distribution<int>(0, g.edge_count() - 1)(rng);
    int e2 = std::uniform_int_distribution<int>(0, t.edge_count() - 1)(rng);
    g = clique_sum(g, t, EdgeGlue{e1, e2, static_cast<bool>(rng() & 1u)}).graph;
  }
  return g;
}

/// Even cycles of length 4..8 glued on random edges, with an occasional
/// cut vertex instead.
inline Graph random_ring_graph(std::mt19937_64& rng, int pieces) {
  auto length = [&] { return 2 * std::uniform_int_distribution<int>(2, 4)(rng); };
  Graph g = cycle_graph(length());
  for (int i = 1; i < pieces; ++i) {
    Graph c = cycle_graph(length());
    if (rng() % 4 == 0) {
      int v = std::uniform_int_distribution<int>(0, g.vertex_count() - 1)(rng);
      g = clique_sum(g, c, VertexGlue{v, 0}).graph;
    } else {
      int e = std::uniform_int_distribution<int>(0, g.edge_count() - 1)(rng);
      g = clique_sum(g, c, EdgeGlue{e, 0, static_cast<bool>(rng() & 1u)}).graph;
    }
  }
  return g;
}

}  // namespace toricmg::testing
