#include "toricmg/graph_ideal.hpp"

#include <algorithm>
#include <array>

#include "toricmg/errors.hpp"
#include "toricmg/lattice.hpp"

namespace toricmg {

GradingMatrix incidence_matrix(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  const auto m = static_cast<std::size_t>(g.edge_count());
  std::vector<std::int64_t> data(n * m, 0);
  for (std::size_t e = 0; e < m; ++e) {
    const Edge& ed = g.edge(static_cast<int>(e));
    data[static_cast<std::size_t>(ed.u) * m + e] = 1;
    data[static_cast<std::size_t>(ed.v) * m + e] = 1;
  }
  return GradingMatrix(n, m, std::move(data));
}

std::optional<Binomial> walk_binomial(const Graph& g, const Walk& w) {
  if (!w.closed() || w.length() % 2 != 0) throw Error(ErrorCode::OddWalk, "walk is not an even closed walk");
  if (w.vertices.size() != w.length() + 1) throw Error(ErrorCode::NotAWalk, "vertex and edge counts disagree");
  const auto m = static_cast<std::size_t>(g.edge_count());
  Monomial plus(m), minus(m);
  for (std::size_t i = 0; i < w.length(); ++i) {
    const int e = w.edges[i];
    if (e < 0 || e >= g.edge_count() || g.edge_index(w.vertices[i], w.vertices[i + 1]) != e) {
      throw Error(ErrorCode::NotAWalk, "step " + std::to_string(i) + " does not follow its edge");
    }
    Monomial& side = i % 2 == 0 ? plus : minus;
    side[static_cast<std::size_t>(e)] += 1;
  }
  if (plus == minus) return std::nullopt;
  return Binomial(std::move(plus), std::move(minus));
}

GraphIdeal::GraphIdeal(Graph g)
    : graph_(std::move(g)), grading_(incidence_matrix(graph_)), cache_(std::make_shared<Cache>()) {
  generators_ = saturate(lattice_ideal_generators(integer_kernel(grading_)));
}

const MarkedReducedGB& GraphIdeal::groebner_basis() const {
  std::call_once(cache_->once, [this] {
    if (!generators_.empty()) cache_->gb = buchberger(generators_, MonomialOrder::degrevlex(variables()));
  });
  return cache_->gb;
}

GraphIdeal toric_ideal(const Graph& g) { return GraphIdeal(g); }

namespace {

std::vector<Binomial> cycle_binomials(const Graph& g, const std::vector<Cycle>& cycles) {
  std::vector<Binomial> out;
  for (const auto& c : cycles) {
    if (auto b = walk_binomial(g, c.to_walk())) out.push_back(normalize_sign(*b));
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

}  // namespace

std::vector<Binomial> markov_basis_bipartite(const Graph& g, std::size_t cycle_cap) {
  if (!is_bipartite(g)) throw Error(ErrorCode::NotBipartite, "Markov basis by chordless cycles");
  return cycle_binomials(g, enumerate_chordless_cycles(g, cycle_cap));
}

std::vector<Binomial> universal_gb_bipartite(const Graph& g, std::size_t cycle_cap) {
  if (!is_bipartite(g)) throw Error(ErrorCode::NotBipartite, "universal basis by cycles");
  return cycle_binomials(g, enumerate_cycles(g, true, cycle_cap));
}

std::vector<Binomial> universal_markov_basis(const GraphIdeal& gi, const std::vector<Binomial>& universal,
                                             std::size_t fiber_cap) {
  std::vector<Binomial> out;
  for (const auto& b : universal) {
    if (is_minimal_binomial(b, gi.groebner_basis(), gi.grading(), fiber_cap)) out.push_back(b);
  }
  return out;
}

std::vector<Binomial> universal_markov_basis(const GraphIdeal& gi, std::size_t max_cones, std::size_t fiber_cap) {
  return universal_markov_basis(gi, universal_gb(gi.generators(), max_cones), fiber_cap);
}

namespace {

// Depth-first search for an alternating closed walk that uses every edge of
// the binomial with its multiplicity; `side` is 0 for plus edges.
bool extend_walk(const Graph& g, std::array<std::vector<std::int64_t>, 2>& left, std::size_t remaining, int side,
                 Walk& w) {
  const int here = w.vertices.back();
  if (remaining == 0) return here == w.vertices.front();
  for (const auto& inc : g.incident(here)) {
    auto& count = left[static_cast<std::size_t>(side)][static_cast<std::size_t>(inc.edge)];
    if (count == 0) continue;
    --count;
    w.vertices.push_back(inc.neighbor);
    w.edges.push_back(inc.edge);
    if (extend_walk(g, left, remaining - 1, 1 - side, w)) return true;
    w.vertices.pop_back();
    w.edges.pop_back();
    ++count;
  }
  return false;
}

}  // namespace

std::optional<Walk> binomial_walk(const Graph& g, const Binomial& b) {
  const auto m = static_cast<std::size_t>(g.edge_count());
  if (b.variables() != m) throw Error(ErrorCode::DimensionMismatch, "binomial_walk");
  for (const Binomial& oriented : {b, b.negated()}) {
    std::array<std::vector<std::int64_t>, 2> left{std::vector<std::int64_t>(m), std::vector<std::int64_t>(m)};
    std::size_t total = 0;
    int first = -1;
    for (std::size_t i = 0; i < m; ++i) {
      left[0][i] = oriented.plus[i];
      left[1][i] = oriented.minus[i];
      total += static_cast<std::size_t>(oriented.plus[i] + oriented.minus[i]);
      if (first < 0 && oriented.plus[i] > 0) first = static_cast<int>(i);
    }
    if (first < 0 || total % 2 != 0) continue;
    for (int start : {g.edge(first).u, g.edge(first).v}) {
      Walk w;
      w.vertices = {start, g.edge(first).other(start)};
      w.edges = {first};
      --left[0][static_cast<std::size_t>(first)];
      if (extend_walk(g, left, total - 1, 1, w)) return w;
      ++left[0][static_cast<std::size_t>(first)];
    }
  }
  return std::nullopt;
}

ScreenResult walk_minimality_screen(const Walk& w, const Graph& g) {
  ScreenResult result;
  const auto reports = classify_chords(w, g);
  for (const auto& r : reports) {
    if (r.parity == ChordParity::Even) {
      result.pass = false;
      result.reason = ScreenReason::EvenChord;
      result.chords.push_back(r.chord);
    }
  }
  if (!result.pass) return result;
  for (const auto& r : reports) {
    if (r.parity == ChordParity::Bridge) {
      result.pass = false;
      result.reason = ScreenReason::BridgeChord;
      result.chords.push_back(r.chord);
    }
  }
  if (!result.pass) return result;
  for (const auto& r : reports) {
    for (int other : r.crosses_with) {
      if (std::find(r.f4_partners.begin(), r.f4_partners.end(), other) != r.f4_partners.end()) continue;
      if (r.chord > other) continue;  // each pair once
      result.pass = false;
      result.reason = ScreenReason::CrossingWithoutF4;
      result.chords.push_back(r.chord);
      result.chords.push_back(other);
    }
  }
  return result;
}

std::string_view to_string(ScreenReason reason) {
  switch (reason) {
    case ScreenReason::EvenChord: return "EvenChord";
    case ScreenReason::CrossingWithoutF4: return "CrossingWithoutF4";
    case ScreenReason::BridgeChord: return "BridgeChord";
  }
  return "?";
}

}  // namespace toricmg
