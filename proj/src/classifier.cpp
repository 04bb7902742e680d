#include "toricmg/classifier.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "toricmg/errors.hpp"

namespace toricmg {

namespace {

using Recognizer = std::function<std::optional<LeafDescriptor>(const Graph&, const std::vector<int>&)>;

struct LocalView {
  std::map<int, std::vector<std::pair<int, int>>> adj;  // vertex -> (neighbor, edge)
};

LocalView local_view(const Graph& g, const std::vector<int>& edges) {
  LocalView view;
  for (int e : edges) {
    const Edge& ed = g.edge(e);
    view.adj[ed.u].emplace_back(ed.v, e);
    view.adj[ed.v].emplace_back(ed.u, e);
  }
  for (auto& [v, list] : view.adj) std::sort(list.begin(), list.end(), [](auto a, auto b) { return a.second < b.second; });
  return view;
}

/// Vertex sequence of a connected 2-regular edge set, starting at its least
/// vertex toward its smaller neighbour; empty when the edges are not a cycle.
std::vector<int> cycle_sequence(const Graph& g, const std::vector<int>& edges) {
  LocalView view = local_view(g, edges);
  for (const auto& [v, list] : view.adj) {
    if (list.size() != 2) return {};
  }
  if (view.adj.size() != edges.size() || edges.size() < 3) return {};
  const int start = view.adj.begin()->first;
  const auto& first = view.adj.at(start);
  int prev = start;
  int cur = std::min(first[0].first, first[1].first);
  std::vector<int> seq{start};
  while (cur != start) {
    seq.push_back(cur);
    const auto& list = view.adj.at(cur);
    int next = list[0].first == prev ? list[1].first : list[0].first;
    prev = cur;
    cur = next;
    if (seq.size() > edges.size()) return {};
  }
  if (seq.size() != edges.size()) return {};
  return seq;
}

std::optional<LeafDescriptor> recognize_cycle(const Graph& g, const std::vector<int>& edges, int length) {
  auto seq = cycle_sequence(g, edges);
  if (seq.empty() || (length > 0 && static_cast<int>(seq.size()) != length)) return std::nullopt;
  LeafDescriptor leaf;
  leaf.kind = LeafKind::Cycle;
  leaf.k = static_cast<int>(seq.size());
  leaf.vertices = std::move(seq);
  leaf.edges = edges;
  std::sort(leaf.edges.begin(), leaf.edges.end());
  return leaf;
}

std::optional<LeafDescriptor> recognize_theta(const Graph& g, const std::vector<int>& edges, int k) {
  LocalView view = local_view(g, edges);
  std::vector<int> high;
  for (const auto& [v, list] : view.adj) {
    if (list.size() != 2) high.push_back(v);
  }
  LeafDescriptor leaf;
  leaf.kind = LeafKind::Theta;
  leaf.k = k;
  leaf.edges = edges;
  std::sort(leaf.edges.begin(), leaf.edges.end());
  if (high.empty()) {
    auto seq = cycle_sequence(g, edges);
    if (seq.empty() || static_cast<int>(seq.size()) != 2 * k) return std::nullopt;
    leaf.r = 2;
    leaf.vertices.assign(static_cast<std::size_t>(2 + 2 * (k - 1)), -1);
    leaf.vertices[0] = seq[0];
    leaf.vertices[1] = seq[static_cast<std::size_t>(k)];
    for (int j = 1; j < k; ++j) {
      leaf.vertices[static_cast<std::size_t>(2 + (j - 1))] = seq[static_cast<std::size_t>(j)];
      leaf.vertices[static_cast<std::size_t>(2 + (k - 1) + (j - 1))] = seq[static_cast<std::size_t>(2 * k - j)];
    }
    return leaf;
  }
  if (high.size() != 2) return std::nullopt;
  const int a = high[0], b = high[1];
  const int r = static_cast<int>(view.adj.at(a).size());
  if (r < 3 || static_cast<int>(view.adj.at(b).size()) != r) return std::nullopt;
  if (static_cast<std::size_t>(r * k) != edges.size()) return std::nullopt;
  leaf.r = r;
  leaf.vertices.assign(static_cast<std::size_t>(2 + r * (k - 1)), -1);
  leaf.vertices[0] = a;
  leaf.vertices[1] = b;
  int path = 0;
  for (auto [first, e] : view.adj.at(a)) {
    int prev = a, cur = first, steps = 1;
    std::vector<int> inner;
    while (cur != b) {
      const auto& list = view.adj.at(cur);
      if (list.size() != 2) return std::nullopt;
      inner.push_back(cur);
      int next = list[0].first == prev ? list[1].first : list[0].first;
      prev = cur;
      cur = next;
      if (++steps > k) return std::nullopt;
    }
    if (steps != k) return std::nullopt;
    for (int j = 1; j < k; ++j) {
      leaf.vertices[static_cast<std::size_t>(2 + path * (k - 1) + (j - 1))] = inner[static_cast<std::size_t>(j - 1)];
    }
    ++path;
  }
  return leaf;
}

std::optional<DecompositionNode> decompose_piece(const Graph& g, const std::vector<int>& edges, const Recognizer& rec) {
  if (auto leaf = rec(g, edges)) {
    DecompositionNode node;
    node.leaf = std::move(*leaf);
    return node;
  }
  LocalView view = local_view(g, edges);
  std::vector<int> sorted_edges = edges;
  std::sort(sorted_edges.begin(), sorted_edges.end());
  for (int seam : sorted_edges) {
    const int u = g.edge(seam).u, v = g.edge(seam).v;
    // Components of the piece with u and v removed.
    std::map<int, int> comp;
    int count = 0;
    for (const auto& [start, list] : view.adj) {
      if (start == u || start == v || comp.count(start)) continue;
      std::vector<int> stack{start};
      comp[start] = count;
      while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (auto [y, e] : view.adj.at(x)) {
          if (y == u || y == v || comp.count(y)) continue;
          comp[y] = count;
          stack.push_back(y);
        }
      }
      ++count;
    }
    if (count < 2) continue;
    std::vector<std::vector<int>> parts(static_cast<std::size_t>(count));
    for (int e : sorted_edges) {
      if (e == seam) continue;
      const Edge& ed = g.edge(e);
      int side = comp.count(ed.u) ? comp[ed.u] : comp[ed.v];
      parts[static_cast<std::size_t>(side)].push_back(e);
    }
    DecompositionNode node;
    node.kind = DecompositionNode::Kind::EdgeSum;
    node.seam_edge = seam;
    for (auto& part : parts) {
      part.push_back(seam);
      auto child = decompose_piece(g, part, rec);
      if (!child) return std::nullopt;
      node.children.push_back(std::move(*child));
    }
    return node;
  }
  return std::nullopt;
}

std::optional<DecompositionNode> decompose_graph(const Graph& g, const Recognizer& rec) {
  BlockDecomposition blocks = biconnected_blocks(g);
  std::vector<DecompositionNode> nodes;
  for (const auto& block : blocks.blocks) {
    if (block.size() == 1) {
      DecompositionNode node;
      node.leaf.kind = LeafKind::Edge;
      node.leaf.vertices = {g.edge(block[0]).u, g.edge(block[0]).v};
      node.leaf.edges = block;
      nodes.push_back(std::move(node));
      continue;
    }
    auto node = decompose_piece(g, block, rec);
    if (!node) return std::nullopt;
    nodes.push_back(std::move(*node));
  }
  if (nodes.size() == 1) return std::move(nodes.front());
  DecompositionNode root;
  root.kind = DecompositionNode::Kind::VertexSum;
  root.children = std::move(nodes);
  return root;
}

std::optional<int> uniform_chordless_length(const Graph& g, std::size_t cap) {
  auto cycles = enumerate_chordless_cycles(g, cap);
  if (cycles.empty()) return std::nullopt;
  const std::size_t len = cycles.front().length();
  for (const auto& c : cycles) {
    if (c.length() != len) return std::nullopt;
  }
  return static_cast<int>(len);
}

void collect_leaves(const DecompositionNode& node, std::vector<const LeafDescriptor*>& out) {
  if (node.kind == DecompositionNode::Kind::Leaf) {
    out.push_back(&node.leaf);
    return;
  }
  for (const auto& c : node.children) collect_leaves(c, out);
}

MonomialOrder block_degrevlex(std::size_t m, const std::vector<std::vector<int>>& blocks) {
  std::vector<MonomialOrder::Row> rows;
  for (const auto& block : blocks) {
    if (block.empty()) continue;
    MonomialOrder::Row ones;
    for (int v : block) ones.emplace_back(v, 1);
    rows.push_back(std::move(ones));
    for (std::size_t t = block.size(); t-- > 1;) rows.push_back({{block[t], -1}});
  }
  std::vector<int> tie(m);
  std::iota(tie.begin(), tie.end(), 0);
  return MonomialOrder(m, std::move(rows), std::move(tie));
}

using Clock = std::chrono::steady_clock;

std::string budget_marker(const std::string& stage, const BudgetExceeded& e) {
  return stage + ": " + std::string(to_string(e.code())) + " cap=" + std::to_string(e.cap()) +
         " partial=" + std::to_string(e.partial());
}

struct WitnessSearch {
  std::optional<MarkedReducedGB> gb;
  std::string method;
};

/// Orders that tend to give small bases: identity degrevlex, block orders
/// from structural decompositions, and lex on small instances.
WitnessSearch structured_witness(const GraphIdeal& gi, std::size_t mu, std::size_t cycle_cap) {
  const std::size_t m = gi.variables();
  if (gi.groebner_basis().size() == mu) return {gi.groebner_basis(), "degrevlex"};
  const auto try_order = [&](const MonomialOrder& order, const std::string& name) -> WitnessSearch {
    auto gb = buchberger(gi.generators(), order);
    if (gb.size() == mu) return {std::move(gb), name};
    return {};
  };
  std::vector<std::pair<std::string, std::optional<Decomposition>>> decompositions;
  try {
    decompositions.emplace_back("theta-block", theta_decompose(gi.graph(), cycle_cap));
    decompositions.emplace_back("odd-cycle-block", odd_cycle_decompose(gi.graph(), cycle_cap));
  } catch (const BudgetExceeded&) {
  }
  decompositions.emplace_back("ring-block", ring_decompose(gi.graph()));
  for (const auto& [name, dec] : decompositions) {
    if (!dec) continue;
    if (auto w = try_order(decomposition_order(gi.graph(), dec->root), name); w.gb) return w;
  }
  if (m <= 16) {
    std::vector<int> ident(m);
    std::iota(ident.begin(), ident.end(), 0);
    if (auto w = try_order(MonomialOrder::lex(ident), "lex"); w.gb) return w;
  }
  return {};
}

}  // namespace

std::vector<const LeafDescriptor*> leaves(const DecompositionNode& node) {
  std::vector<const LeafDescriptor*> out;
  collect_leaves(node, out);
  return out;
}

std::size_t leaf_count(const DecompositionNode& node) { return leaves(node).size(); }

std::vector<std::pair<int, int>> reassemble(const DecompositionNode& node) {
  std::set<std::pair<int, int>> edges;
  auto add = [&edges](int a, int b) { edges.emplace(std::min(a, b), std::max(a, b)); };
  for (const LeafDescriptor* leaf : leaves(node)) {
    switch (leaf->kind) {
      case LeafKind::Theta: {
        Graph t = theta_graph(leaf->r, leaf->k);
        for (const Edge& e : t.edges()) {
          add(leaf->vertices[static_cast<std::size_t>(e.u)], leaf->vertices[static_cast<std::size_t>(e.v)]);
        }
        break;
      }
      case LeafKind::Cycle:
        for (std::size_t i = 0; i < leaf->vertices.size(); ++i) {
          add(leaf->vertices[i], leaf->vertices[(i + 1) % leaf->vertices.size()]);
        }
        break;
      case LeafKind::Edge:
        add(leaf->vertices[0], leaf->vertices[1]);
        break;
    }
  }
  return {edges.begin(), edges.end()};
}

bool reassembles_to(const DecompositionNode& node, const Graph& g) {
  std::vector<std::pair<int, int>> expected;
  for (const Edge& e : g.edges()) expected.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
  std::sort(expected.begin(), expected.end());
  return reassemble(node) == expected;
}

std::optional<Decomposition> theta_decompose(const Graph& g, std::size_t cycle_cap) {
  auto len = uniform_chordless_length(g, cycle_cap);
  if (!len || *len % 2 != 0 || *len < 6) return std::nullopt;
  const int k = *len / 2;
  auto root = decompose_graph(g, [k](const Graph& gg, const std::vector<int>& edges) {
    return recognize_theta(gg, edges, k);
  });
  if (!root) return std::nullopt;
  return Decomposition{k, std::move(*root)};
}

std::optional<Decomposition> odd_cycle_decompose(const Graph& g, std::size_t cycle_cap) {
  auto len = uniform_chordless_length(g, cycle_cap);
  if (!len || *len % 2 == 0 || *len < 5) return std::nullopt;
  const int length = *len;
  auto root = decompose_graph(g, [length](const Graph& gg, const std::vector<int>& edges) {
    return recognize_cycle(gg, edges, length);
  });
  if (!root) return std::nullopt;
  return Decomposition{(length + 1) / 2, std::move(*root)};
}

std::optional<Decomposition> ring_decompose(const Graph& g) {
  auto root = decompose_graph(g, [](const Graph& gg, const std::vector<int>& edges) {
    return recognize_cycle(gg, edges, 0);
  });
  if (!root) return std::nullopt;
  return Decomposition{0, std::move(*root)};
}

bool is_ring_graph(const Graph& g) { return ring_decompose(g).has_value(); }

bool is_complete_intersection_bipartite(const Graph& g) {
  if (!is_bipartite(g)) throw Error(ErrorCode::NotBipartite, "complete intersection test");
  return is_ring_graph(g);
}

MonomialOrder decomposition_order(const Graph& g, const DecompositionNode& node) {
  const auto m = static_cast<std::size_t>(g.edge_count());
  std::vector<std::vector<int>> remaining;
  for (const LeafDescriptor* leaf : leaves(node)) remaining.push_back(leaf->edges);
  std::vector<std::vector<int>> blocks;
  std::vector<char> placed(m, 0);
  while (!remaining.empty()) {
    std::size_t pick = 0;
    std::vector<int> shared_pick;
    for (std::size_t i = 0; i < remaining.size(); ++i) {
      std::vector<int> shared;
      for (int e : remaining[i]) {
        for (std::size_t j = 0; j < remaining.size(); ++j) {
          if (j != i && std::binary_search(remaining[j].begin(), remaining[j].end(), e)) {
            shared.push_back(e);
            break;
          }
        }
      }
      if (shared.size() <= 1) {
        pick = i;
        shared_pick = std::move(shared);
        break;
      }
    }
    std::vector<int> own;
    for (int e : remaining[pick]) {
      if (std::find(shared_pick.begin(), shared_pick.end(), e) == shared_pick.end() && !placed[static_cast<std::size_t>(e)]) {
        own.push_back(e);
        placed[static_cast<std::size_t>(e)] = 1;
      }
    }
    blocks.push_back(std::move(own));
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  std::vector<int> rest;
  for (std::size_t e = 0; e < m; ++e) {
    if (!placed[e]) rest.push_back(static_cast<int>(e));
  }
  blocks.push_back(std::move(rest));
  return block_degrevlex(m, blocks);
}

MGCertificate is_mg(const GraphIdeal& gi, const Budget& budget) {
  MGCertificate cert;
  if (gi.generators().empty()) {
    cert.is_mg = true;
    cert.witness = MarkedReducedGB();
    cert.weight = IntVector(gi.variables(), 1);
    cert.method = "zero ideal";
    return cert;
  }
  cert.mu = minimal_generators(gi.groebner_basis(), gi.grading(), budget.max_fiber).mu;
  auto found = structured_witness(gi, cert.mu, budget.max_cycles);
  if (!found.gb) {
    FanOptions options;
    options.max_cones = budget.max_cones;
    options.best_first = true;
    options.throw_on_budget = false;
    const std::size_t mu = cert.mu;
    options.stop = [mu](const MarkedReducedGB& gb) { return gb.size() == mu; };
    FanResult fan = enumerate_reduced_gbs(gi.groebner_basis(), options);
    cert.cones_explored = fan.gbs.size();
    if (fan.truncated) throw BudgetExceeded(ErrorCode::FanBudgetExceeded, budget.max_cones, fan.gbs.size());
    if (!fan.complete) found = {fan.gbs.back(), "fan search"};
  }
  if (found.gb) {
    cert.is_mg = true;
    cert.weight = interior_weight(groebner_cone(*found.gb));
    cert.witness = std::move(found.gb);
    cert.method = found.method;
  }
  return cert;
}

bool is_umg(const GraphIdeal& gi, const Budget& budget) {
  if (gi.generators().empty()) return true;
  const std::size_t mu = minimal_generators(gi.groebner_basis(), gi.grading(), budget.max_fiber).mu;
  FanOptions options;
  options.max_cones = budget.max_cones;
  options.stop = [mu](const MarkedReducedGB& gb) { return gb.size() != mu; };
  FanResult fan = enumerate_reduced_gbs(gi.groebner_basis(), options);
  return fan.complete;
}

bool is_generalized_robust(const GraphIdeal& gi, const Budget& budget) {
  if (gi.generators().empty()) return true;
  FanOptions options;
  options.max_cones = budget.max_cones;
  auto universal = universal_gb(enumerate_reduced_gbs(gi.groebner_basis(), options));
  for (const auto& b : universal) {
    if (!is_minimal_binomial(b, gi.groebner_basis(), gi.grading(), budget.max_fiber)) return false;
  }
  return true;
}

bool is_robust(const GraphIdeal& gi, const Budget& budget) {
  if (gi.generators().empty()) return true;
  const std::size_t mu = minimal_generators(gi.groebner_basis(), gi.grading(), budget.max_fiber).mu;
  FanOptions options;
  options.max_cones = budget.max_cones;
  return universal_gb(enumerate_reduced_gbs(gi.groebner_basis(), options)).size() == mu;
}

ClassificationReport classify(const Graph& g, const Budget& budget, std::string graph_id) {
  ClassificationReport report;
  report.graph_id = std::move(graph_id);
  report.vertices = g.vertex_count();
  report.edges = g.edge_count();
  report.bipartite = is_bipartite(g).has_value();

  auto stage_start = Clock::now();
  auto end_stage = [&](const std::string& name) {
    auto now = Clock::now();
    report.timings.push_back({name, std::chrono::duration<double>(now - stage_start).count()});
    stage_start = now;
  };

  try {
    auto cycles = enumerate_chordless_cycles(g, budget.max_cycles);
    std::vector<std::size_t> lengths;
    for (const auto& c : cycles) lengths.push_back(c.length());
    std::sort(lengths.begin(), lengths.end());
    report.chordless_cycle_lengths = std::move(lengths);
    report.chordless_graph = is_chordless_graph(g, budget.max_cycles);
  } catch (const BudgetExceeded& e) {
    report.budget_markers.push_back(budget_marker("cycles", e));
  }
  end_stage("cycles");

  GraphIdeal gi(g);
  end_stage("ideal");

  try {
    report.mu = gi.generators().empty()
                    ? 0
                    : minimal_generators(gi.groebner_basis(), gi.grading(), budget.max_fiber).mu;
  } catch (const BudgetExceeded& e) {
    report.budget_markers.push_back(budget_marker("generators", e));
  }
  end_stage("generators");

  if (report.mu) {
    const std::size_t mu = *report.mu;
    FanOptions options;
    options.max_cones = budget.max_cones;
    options.throw_on_budget = false;
    FanResult fan = gi.generators().empty() ? enumerate_reduced_gbs(MarkedReducedGB(), options)
                                            : enumerate_reduced_gbs(gi.groebner_basis(), options);
    auto universal = universal_gb(fan);
    const MarkedReducedGB* witness = nullptr;
    bool larger = false;
    for (const auto& gb : fan.gbs) {
      if (gb.size() == mu && !witness) witness = &gb;
      larger = larger || gb.size() > mu;
    }
    if (fan.complete) {
      auto [lo, hi] = gb_size_range(fan);
      report.gb_size_min = lo;
      report.gb_size_max = hi;
      report.reduced_gb_count = fan.gbs.size();
      report.universal_gb_size = universal.size();
      report.is_mg = lo == mu;
      report.is_umg = lo == mu && hi == mu;
      report.is_robust = universal.size() == mu;
      try {
        std::size_t minimal = 0;
        for (const auto& b : universal) {
          if (gi.generators().empty() || is_minimal_binomial(b, gi.groebner_basis(), gi.grading(), budget.max_fiber)) {
            ++minimal;
          }
        }
        report.universal_markov_size = minimal;
        report.is_gen_robust = minimal == universal.size();
      } catch (const BudgetExceeded& e) {
        report.budget_markers.push_back(budget_marker("universal markov", e));
      }
    } else {
      report.budget_markers.push_back("fan: " + std::string(to_string(ErrorCode::FanBudgetExceeded)) +
                                      " cap=" + std::to_string(budget.max_cones) +
                                      " partial=" + std::to_string(fan.gbs.size()));
      // Facts that a partial traversal settles on its own.
      if (larger) {
        report.is_umg = false;
        report.is_robust = false;
      }
      if (!witness) {
        try {
          auto found = structured_witness(gi, mu, budget.max_cycles);
          if (!found.gb) {
            FanOptions search;
            search.max_cones = budget.max_cones;
            search.best_first = true;
            search.throw_on_budget = false;
            search.stop = [mu](const MarkedReducedGB& gb) { return gb.size() == mu; };
            FanResult best = enumerate_reduced_gbs(gi.groebner_basis(), search);
            if (!best.complete && !best.truncated) found.gb = best.gbs.back();
          }
          if (found.gb) {
            fan.gbs.push_back(std::move(*found.gb));
            witness = &fan.gbs.back();
          }
        } catch (const BudgetExceeded& e) {
          report.budget_markers.push_back(budget_marker("witness", e));
        }
      }
      if (witness) {
        report.is_mg = true;
        report.gb_size_min = mu;
      }
    }
    if (witness && !gi.generators().empty()) report.mg_witness_weight = interior_weight(groebner_cone(*witness));
  }
  end_stage("fan");

  try {
    report.theta_decomposition = theta_decompose(g, budget.max_cycles);
    report.odd_cycle_decomposition = odd_cycle_decompose(g, budget.max_cycles);
  } catch (const BudgetExceeded& e) {
    report.budget_markers.push_back(budget_marker("decomposition", e));
  }
  report.ring_graph = is_ring_graph(g);
  if (report.bipartite) report.complete_intersection = report.ring_graph;
  end_stage("decompositions");

  auto violation = [&report](bool ok, const std::string& what) {
    if (!ok) report.consistency_violations.push_back(what);
  };
  if (report.is_umg && report.is_mg) violation(!*report.is_umg || *report.is_mg, "UMG without MG");
  if (report.is_robust && report.is_gen_robust) {
    violation(!*report.is_robust || *report.is_gen_robust, "robust without generalized robust");
  }
  if (report.is_umg && report.is_gen_robust) violation(*report.is_umg == *report.is_gen_robust, "UMG differs from generalized robust");
  if (report.is_mg && report.gb_size_min && report.mu) {
    violation(*report.is_mg == (*report.gb_size_min == *report.mu), "MG flag differs from size test");
  }
  return report;
}

}  // namespace toricmg
