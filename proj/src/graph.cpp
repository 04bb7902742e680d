#include "toricmg/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <string>

#include "toricmg/errors.hpp"

namespace toricmg {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::LoopEdge: return "LoopEdge";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::CycleBudgetExceeded: return "CycleBudgetExceeded";
    case ErrorCode::WalkBudgetExceeded: return "WalkBudgetExceeded";
    case ErrorCode::FiberBudgetExceeded: return "FiberBudgetExceeded";
    case ErrorCode::FanBudgetExceeded: return "FanBudgetExceeded";
    case ErrorCode::NotAWalk: return "NotAWalk";
    case ErrorCode::OddWalk: return "OddWalk";
    case ErrorCode::BadParameters: return "BadParameters";
    case ErrorCode::GlueElementMissing: return "GlueElementMissing";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ZeroBinomial: return "ZeroBinomial";
    case ErrorCode::NotReduced: return "NotReduced";
    case ErrorCode::NotAFacet: return "NotAFacet";
    case ErrorCode::NotHomogeneous: return "NotHomogeneous";
    case ErrorCode::NotBipartite: return "NotBipartite";
    case ErrorCode::NotInIdeal: return "NotInIdeal";
    case ErrorCode::ExponentOverflow: return "ExponentOverflow";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::MalformedGraph6: return "MalformedGraph6";
  }
  return "Unknown";
}

Graph::Graph(int vertex_count, std::vector<Edge> edges) : n_(vertex_count), edges_(std::move(edges)) {
  if (n_ < 0) throw Error(ErrorCode::BadParameters, "negative vertex count");
  adjacency_.resize(static_cast<std::size_t>(n_));
  index_.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), -1);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.u < 0 || e.v < 0 || e.u >= n_ || e.v >= n_) {
      throw Error(ErrorCode::VertexOutOfRange,
                  "edge " + std::to_string(i) + " = {" + std::to_string(e.u) + "," +
                      std::to_string(e.v) + "} with n = " + std::to_string(n_));
    }
    if (e.u == e.v) throw Error(ErrorCode::LoopEdge, "edge " + std::to_string(i));
    auto slot = static_cast<std::size_t>(e.u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(e.v);
    if (index_[slot] >= 0) {
      throw Error(ErrorCode::DuplicateEdge, "edge " + std::to_string(i) + " repeats edge " +
                                                std::to_string(index_[slot]));
    }
    index_[slot] = static_cast<int>(i);
    index_[static_cast<std::size_t>(e.v) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(e.u)] =
        static_cast<int>(i);
    adjacency_[static_cast<std::size_t>(e.u)].push_back({e.v, static_cast<int>(i)});
    adjacency_[static_cast<std::size_t>(e.v)].push_back({e.u, static_cast<int>(i)});
  }
}

int Graph::edge_index(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) return -1;
  return index_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v)];
}

Graph build_graph(int vertex_count, const std::vector<std::pair<int, int>>& edges) {
  std::vector<Edge> list;
  list.reserve(edges.size());
  for (auto [u, v] : edges) list.push_back({u, v});
  return Graph(vertex_count, std::move(list));
}

Walk make_walk(const Graph& g, const std::vector<int>& vertices) {
  Walk w;
  w.vertices = vertices;
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
    int e = g.edge_index(vertices[i], vertices[i + 1]);
    if (e < 0) {
      throw Error(ErrorCode::NotAWalk, "no edge between " + std::to_string(vertices[i]) + " and " +
                                           std::to_string(vertices[i + 1]));
    }
    w.edges.push_back(e);
  }
  return w;
}

Walk Cycle::to_walk() const {
  Walk w;
  w.vertices = vertices;
  w.vertices.push_back(vertices.front());
  w.edges = edges;
  return w;
}

std::vector<int> canonical_cycle_vertices(std::vector<int> vertices) {
  if (vertices.empty()) return vertices;
  auto min_it = std::min_element(vertices.begin(), vertices.end());
  std::rotate(vertices.begin(), min_it, vertices.end());
  if (vertices.size() > 2 && vertices[1] > vertices.back()) {
    std::reverse(vertices.begin() + 1, vertices.end());
  }
  return vertices;
}

Cycle make_cycle(const Graph& g, std::vector<int> vertices) {
  Cycle c;
  c.vertices = canonical_cycle_vertices(std::move(vertices));
  const std::size_t len = c.vertices.size();
  for (std::size_t i = 0; i < len; ++i) {
    int e = g.edge_index(c.vertices[i], c.vertices[(i + 1) % len]);
    if (e < 0) throw Error(ErrorCode::NotAWalk, "cycle uses a missing edge");
    c.edges.push_back(e);
  }
  return c;
}

std::optional<Bipartition> is_bipartite(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  for (int s = 0; s < n; ++s) {
    if (color[static_cast<std::size_t>(s)] >= 0) continue;
    color[static_cast<std::size_t>(s)] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (auto [x, e] : g.incident(v)) {
        auto& cx = color[static_cast<std::size_t>(x)];
        if (cx < 0) {
          cx = 1 - color[static_cast<std::size_t>(v)];
          queue.push_back(x);
        } else if (cx == color[static_cast<std::size_t>(v)]) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition parts;
  for (int v = 0; v < n; ++v) (color[static_cast<std::size_t>(v)] == 0 ? parts.first : parts.second).push_back(v);
  return parts;
}

BlockDecomposition biconnected_blocks(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
  std::vector<int> edge_stack;
  std::set<int> cuts;
  BlockDecomposition out;
  int timer = 0;

  std::function<void(int, int)> dfs = [&](int v, int parent_edge) {
    disc[static_cast<std::size_t>(v)] = low[static_cast<std::size_t>(v)] = timer++;
    int children = 0;
    for (auto [x, e] : g.incident(v)) {
      if (e == parent_edge) continue;
      if (disc[static_cast<std::size_t>(x)] < 0) {
        ++children;
        edge_stack.push_back(e);
        dfs(x, e);
        low[static_cast<std::size_t>(v)] = std::min(low[static_cast<std::size_t>(v)], low[static_cast<std::size_t>(x)]);
        if (low[static_cast<std::size_t>(x)] >= disc[static_cast<std::size_t>(v)]) {
          if (parent_edge >= 0 || children > 1) cuts.insert(v);
          std::vector<int> block;
          while (true) {
            int top = edge_stack.back();
            edge_stack.pop_back();
            block.push_back(top);
            if (top == e) break;
          }
          std::sort(block.begin(), block.end());
          out.blocks.push_back(std::move(block));
        }
      } else if (disc[static_cast<std::size_t>(x)] < disc[static_cast<std::size_t>(v)]) {
        edge_stack.push_back(e);
        low[static_cast<std::size_t>(v)] = std::min(low[static_cast<std::size_t>(v)], disc[static_cast<std::size_t>(x)]);
      }
    }
  };
  for (int v = 0; v < n; ++v) {
    if (disc[static_cast<std::size_t>(v)] < 0) dfs(v, -1);
  }
  std::sort(out.blocks.begin(), out.blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  out.cut_vertices.assign(cuts.begin(), cuts.end());
  return out;
}

namespace {

void check_cap(std::size_t count, std::size_t cap, ErrorCode code) {
  if (count > cap) throw BudgetExceeded(code, cap, count - 1);
}

void sort_cycles(std::vector<Cycle>& cycles) {
  std::sort(cycles.begin(), cycles.end(), [](const Cycle& a, const Cycle& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.vertices < b.vertices;
  });
}

}  // namespace

std::vector<Cycle> enumerate_cycles(const Graph& g, bool even_only, std::size_t cap) {
  const int n = g.vertex_count();
  std::vector<Cycle> out;
  std::vector<int> path;
  std::vector<char> on_path(static_cast<std::size_t>(n), 0);
  std::size_t found = 0;

  std::function<void(int, int)> extend = [&](int s, int v) {
    for (auto [x, e] : g.incident(v)) {
      if (x == s) {
        if (path.size() >= 3 && path[1] < v) {
          check_cap(++found, cap, ErrorCode::CycleBudgetExceeded);
          if (!even_only || path.size() % 2 == 0) out.push_back(make_cycle(g, path));
        }
      } else if (x > s && !on_path[static_cast<std::size_t>(x)]) {
        on_path[static_cast<std::size_t>(x)] = 1;
        path.push_back(x);
        extend(s, x);
        path.pop_back();
        on_path[static_cast<std::size_t>(x)] = 0;
      }
    }
  };
  for (int s = 0; s < n; ++s) {
    path = {s};
    on_path[static_cast<std::size_t>(s)] = 1;
    extend(s, s);
    on_path[static_cast<std::size_t>(s)] = 0;
  }
  sort_cycles(out);
  return out;
}

std::vector<Cycle> enumerate_chordless_cycles(const Graph& g, std::size_t cap) {
  // Grow induced paths from the minimal vertex s; a path closes as soon as its
  // new end sees s, and is dropped as soon as the new end sees an inner vertex.
  const int n = g.vertex_count();
  std::vector<Cycle> out;
  std::vector<int> path;
  std::vector<char> on_path(static_cast<std::size_t>(n), 0);

  std::function<void(int)> extend = [&](int s) {
    const int v = path.back();
    for (auto [x, e] : g.incident(v)) {
      if (x <= s || on_path[static_cast<std::size_t>(x)]) continue;
      bool inner_neighbor = false;
      for (std::size_t i = 1; i + 1 < path.size(); ++i) {
        if (g.adjacent(x, path[i])) {
          inner_neighbor = true;
          break;
        }
      }
      if (inner_neighbor) continue;
      if (path.size() >= 2 && g.adjacent(x, s)) {
        if (path[1] < x) {
          path.push_back(x);
          check_cap(out.size() + 1, cap, ErrorCode::CycleBudgetExceeded);
          out.push_back(make_cycle(g, path));
          path.pop_back();
        }
        continue;
      }
      on_path[static_cast<std::size_t>(x)] = 1;
      path.push_back(x);
      extend(s);
      path.pop_back();
      on_path[static_cast<std::size_t>(x)] = 0;
    }
  };
  for (int s = 0; s < n; ++s) {
    path = {s};
    on_path[static_cast<std::size_t>(s)] = 1;
    extend(s);
    on_path[static_cast<std::size_t>(s)] = 0;
  }
  sort_cycles(out);
  return out;
}

bool has_chord(const Graph& g, const Cycle& c) {
  const std::size_t len = c.length();
  for (std::size_t i = 0; i < len; ++i) {
    for (std::size_t j = i + 2; j < len; ++j) {
      if (i == 0 && j == len - 1) continue;
      if (g.adjacent(c.vertices[i], c.vertices[j])) return true;
    }
  }
  return false;
}

bool is_chordless_graph(const Graph& g, std::size_t cap) {
  return enumerate_cycles(g, false, cap).size() == enumerate_chordless_cycles(g, cap).size();
}

std::vector<Walk> enumerate_even_closed_walks(const Graph& g, std::size_t max_length, std::size_t cap) {
  if (max_length < 4 || max_length % 2 != 0) {
    throw Error(ErrorCode::BadParameters, "walk length bound must be even and at least 4");
  }
  std::set<std::vector<int>> seen;
  std::vector<int> path;
  std::size_t steps = 0;
  const std::size_t step_cap = cap * 64;

  auto canonical = [](const std::vector<int>& cyc) {
    const std::size_t len = cyc.size();
    std::vector<int> best, cand(len);
    for (int dir = 0; dir < 2; ++dir) {
      for (std::size_t r = 0; r < len; ++r) {
        for (std::size_t i = 0; i < len; ++i) {
          cand[i] = dir == 0 ? cyc[(r + i) % len] : cyc[(r + len - i) % len];
        }
        if (best.empty() || cand < best) best = cand;
      }
    }
    return best;
  };

  std::function<void(int)> extend = [&](int s) {
    if (++steps > step_cap) throw BudgetExceeded(ErrorCode::WalkBudgetExceeded, cap, seen.size());
    const int v = path.back();
    for (auto [x, e] : g.incident(v)) {
      if (x < s) continue;
      if (x == s && path.size() >= 4 && path.size() % 2 == 0) {
        if (seen.insert(canonical(path)).second && seen.size() > cap) {
          throw BudgetExceeded(ErrorCode::WalkBudgetExceeded, cap, seen.size() - 1);
        }
      }
      if (path.size() < max_length) {
        path.push_back(x);
        extend(s);
        path.pop_back();
      }
    }
  };
  for (int s = 0; s < g.vertex_count(); ++s) {
    path = {s};
    extend(s);
  }
  std::vector<Walk> out;
  out.reserve(seen.size());
  for (const auto& cyc : seen) {
    std::vector<int> closed = cyc;
    closed.push_back(cyc.front());
    out.push_back(make_walk(g, closed));
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const Walk& a, const Walk& b) { return a.length() < b.length(); });
  return out;
}

Subgraph edge_subgraph(const Graph& g, const std::vector<int>& edges) {
  Subgraph out;
  out.vertex_map.resize(static_cast<std::size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v) out.vertex_map[static_cast<std::size_t>(v)] = v;
  out.edge_map.assign(static_cast<std::size_t>(g.edge_count()), -1);
  std::vector<int> sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<Edge> list;
  for (int e : sorted) {
    out.edge_map[static_cast<std::size_t>(e)] = static_cast<int>(list.size());
    list.push_back(g.edge(e));
  }
  out.graph = Graph(g.vertex_count(), std::move(list));
  return out;
}

std::vector<ChordReport> classify_chords(const Walk& w, const Graph& g) {
  const std::size_t len = w.length();
  if (!w.closed() || w.vertices.size() != len + 1 || len == 0) {
    throw Error(ErrorCode::NotAWalk, "walk is not closed");
  }
  for (std::size_t i = 0; i < len; ++i) {
    int e = w.edges[i];
    if (e < 0 || e >= g.edge_count() || g.edge_index(w.vertices[i], w.vertices[i + 1]) != e) {
      throw Error(ErrorCode::NotAWalk, "step " + std::to_string(i) + " does not follow its edge");
    }
  }
  if (len % 2 != 0) throw Error(ErrorCode::OddWalk, "closed walk of odd length");

  const int n = g.vertex_count();
  std::vector<std::vector<int>> occurrences(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < len; ++i) occurrences[static_cast<std::size_t>(w.vertices[i])].push_back(static_cast<int>(i));
  std::vector<char> in_walk(static_cast<std::size_t>(g.edge_count()), 0);
  for (int e : w.edges) in_walk[static_cast<std::size_t>(e)] = 1;

  // Blocks of the walk subgraph V(w), E(w).
  std::vector<int> walk_edges(w.edges.begin(), w.edges.end());
  Subgraph sub = edge_subgraph(g, walk_edges);
  BlockDecomposition blocks = biconnected_blocks(sub.graph);
  std::vector<std::set<int>> block_of(static_cast<std::size_t>(n));
  for (std::size_t b = 0; b < blocks.blocks.size(); ++b) {
    for (int e : blocks.blocks[b]) {
      const Edge& ed = sub.graph.edge(e);
      block_of[static_cast<std::size_t>(ed.u)].insert(static_cast<int>(b));
      block_of[static_cast<std::size_t>(ed.v)].insert(static_cast<int>(b));
    }
  }
  auto same_block = [&](int a, int b) {
    for (int x : block_of[static_cast<std::size_t>(a)]) {
      if (block_of[static_cast<std::size_t>(b)].count(x)) return true;
    }
    return false;
  };

  std::vector<ChordReport> reports;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (in_walk[static_cast<std::size_t>(e)]) continue;
    const Edge& ed = g.edge(e);
    const auto& pa = occurrences[static_cast<std::size_t>(ed.u)];
    const auto& pb = occurrences[static_cast<std::size_t>(ed.v)];
    if (pa.empty() || pb.empty()) continue;
    ChordReport r;
    r.chord = e;
    int i = pa.front(), j = pb.front();
    r.positions = {std::min(i, j), std::max(i, j)};
    if (!same_block(ed.u, ed.v)) {
      r.parity = ChordParity::Bridge;
    } else {
      bool odd_gap = false;
      for (int x : pa) {
        for (int y : pb) odd_gap = odd_gap || ((x - y) % 2 != 0);
      }
      r.parity = odd_gap ? ChordParity::Even : ChordParity::Odd;
    }
    reports.push_back(r);
  }

  auto crosses = [&](const Edge& e1, const Edge& e2) {
    for (int a : occurrences[static_cast<std::size_t>(e1.u)]) {
      for (int b : occurrences[static_cast<std::size_t>(e1.v)]) {
        int i = std::min(a, b), j = std::max(a, b);
        for (int c : occurrences[static_cast<std::size_t>(e2.u)]) {
          for (int d : occurrences[static_cast<std::size_t>(e2.v)]) {
            int i2 = std::min(c, d), j2 = std::max(c, d);
            if ((i2 - i) % 2 == 0) continue;
            if ((i < i2 && i2 < j && j < j2) || (i2 < i && i < j2 && j2 < j)) return true;
          }
        }
      }
    }
    return false;
  };
  // Walk edge f_s joins z_{s-1} and z_s (s = 1..len); record the parities of s per edge.
  auto walk_edge_parities = [&](int x, int y) {
    int mask = 0;
    int e = g.edge_index(x, y);
    if (e < 0) return 0;
    for (std::size_t s = 1; s <= len; ++s) {
      if (w.edges[s - 1] == e) mask |= 1 << (s % 2);
    }
    return mask;
  };
  auto forms_f4 = [&](const Edge& e1, const Edge& e2) {
    auto try_pairing = [&](int a, int b, int c, int d) {
      int p = walk_edge_parities(a, c), q = walk_edge_parities(b, d);
      if ((p & q) == 0) return false;
      // Two distinct walk edges: {a,c} and {b,d} differ because e1 and e2 are disjoint.
      return true;
    };
    return try_pairing(e1.u, e1.v, e2.u, e2.v) || try_pairing(e1.u, e1.v, e2.v, e2.u);
  };

  for (auto& r : reports) {
    if (r.parity != ChordParity::Odd) continue;
    for (const auto& other : reports) {
      if (other.chord == r.chord || other.parity != ChordParity::Odd) continue;
      const Edge& e1 = g.edge(r.chord);
      const Edge& e2 = g.edge(other.chord);
      if (e1.u == e2.u || e1.u == e2.v || e1.v == e2.u || e1.v == e2.v) continue;
      if (!crosses(e1, e2)) continue;
      r.crosses_with.push_back(other.chord);
      if (forms_f4(e1, e2)) r.f4_partners.push_back(other.chord);
    }
  }
  return reports;
}

Graph theta_graph(int paths, int length) {
  if (paths < 2 || length < 2) throw Error(ErrorCode::BadParameters, "theta graph needs r >= 2 and k >= 2");
  const int n = 2 + paths * (length - 1);
  std::vector<Edge> edges;
  for (int i = 0; i < paths; ++i) {
    auto inner = [&](int j) { return 2 + i * (length - 1) + (j - 1); };
    edges.push_back({0, inner(1)});
    for (int j = 1; j + 1 <= length - 1; ++j) edges.push_back({inner(j), inner(j + 1)});
    edges.push_back({inner(length - 1), 1});
  }
  return Graph(n, std::move(edges));
}

CliqueSum clique_sum(const Graph& g1, const Graph& g2, const Glue& glue) {
  const int n1 = g1.vertex_count();
  CliqueSum out;
  out.vertex_map.assign(static_cast<std::size_t>(g2.vertex_count()), -1);
  int skip_edge = -1;
  if (const auto* vg = std::get_if<VertexGlue>(&glue)) {
    if (vg->v1 < 0 || vg->v1 >= n1 || vg->v2 < 0 || vg->v2 >= g2.vertex_count()) {
      throw Error(ErrorCode::GlueElementMissing, "glue vertex out of range");
    }
    out.vertex_map[static_cast<std::size_t>(vg->v2)] = vg->v1;
  } else {
    const auto& eg = std::get<EdgeGlue>(glue);
    if (eg.e1 < 0 || eg.e1 >= g1.edge_count() || eg.e2 < 0 || eg.e2 >= g2.edge_count()) {
      throw Error(ErrorCode::GlueElementMissing, "glue edge out of range");
    }
    const Edge& a = g1.edge(eg.e1);
    const Edge& b = g2.edge(eg.e2);
    out.vertex_map[static_cast<std::size_t>(b.u)] = eg.reversed ? a.v : a.u;
    out.vertex_map[static_cast<std::size_t>(b.v)] = eg.reversed ? a.u : a.v;
    skip_edge = eg.e2;
  }
  int next = n1;
  for (auto& v : out.vertex_map) {
    if (v < 0) v = next++;
  }
  std::vector<Edge> edges(g1.edges().begin(), g1.edges().end());
  out.edge_map.assign(static_cast<std::size_t>(g2.edge_count()), -1);
  for (int e = 0; e < g2.edge_count(); ++e) {
    if (e == skip_edge) {
      out.edge_map[static_cast<std::size_t>(e)] = std::get<EdgeGlue>(glue).e1;
      continue;
    }
    const Edge& ed = g2.edge(e);
    out.edge_map[static_cast<std::size_t>(e)] = static_cast<int>(edges.size());
    edges.push_back({out.vertex_map[static_cast<std::size_t>(ed.u)], out.vertex_map[static_cast<std::size_t>(ed.v)]});
  }
  out.graph = Graph(next, std::move(edges));
  return out;
}

Subgraph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
  Subgraph out;
  out.vertex_map.assign(static_cast<std::size_t>(g.vertex_count()), -1);
  std::vector<int> sorted = vertices;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  int next = 0;
  for (int v : sorted) {
    if (v < 0 || v >= g.vertex_count()) throw Error(ErrorCode::VertexOutOfRange, std::to_string(v));
    out.vertex_map[static_cast<std::size_t>(v)] = next++;
  }
  out.edge_map.assign(static_cast<std::size_t>(g.edge_count()), -1);
  std::vector<Edge> edges;
  for (int e = 0; e < g.edge_count(); ++e) {
    int a = out.vertex_map[static_cast<std::size_t>(g.edge(e).u)];
    int b = out.vertex_map[static_cast<std::size_t>(g.edge(e).v)];
    if (a < 0 || b < 0) continue;
    out.edge_map[static_cast<std::size_t>(e)] = static_cast<int>(edges.size());
    edges.push_back({a, b});
  }
  out.graph = Graph(next, std::move(edges));
  return out;
}

int component_count(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  int count = 0;
  for (int s = 0; s < n; ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    ++count;
    std::vector<int> stack{s};
    seen[static_cast<std::size_t>(s)] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (auto [x, e] : g.incident(v)) {
        if (!seen[static_cast<std::size_t>(x)]) {
          seen[static_cast<std::size_t>(x)] = 1;
          stack.push_back(x);
        }
      }
    }
  }
  return count;
}

bool is_connected(const Graph& g) { return component_count(g) <= 1; }

}  // namespace toricmg
