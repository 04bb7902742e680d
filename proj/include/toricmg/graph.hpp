#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

namespace toricmg {

inline constexpr std::size_t kDefaultCycleCap = 1'000'000;
inline constexpr std::size_t kDefaultWalkCap = 1'000'000;

struct Edge {
  int u = 0;
  int v = 0;

  int other(int w) const { return w == u ? v : u; }
  bool operator==(const Edge&) const = default;
};

/// Simple undirected graph with stable edge indices. Edge i is the variable
/// x_{i+1} of the toric ideal, so edge order is part of the graph's identity.
class Graph {
 public:
  struct Incidence {
    int neighbor;
    int edge;
  };

  Graph() = default;
  /// Throws DuplicateEdge, LoopEdge or VertexOutOfRange.
  Graph(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const Edge& edge(int index) const { return edges_[static_cast<std::size_t>(index)]; }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const Incidence> incident(int vertex) const {
    return adjacency_[static_cast<std::size_t>(vertex)];
  }
  int degree(int vertex) const { return static_cast<int>(incident(vertex).size()); }

  /// Index of the edge {u, v}, or -1.
  int edge_index(int u, int v) const;
  bool adjacent(int u, int v) const { return edge_index(u, v) >= 0; }

  bool operator==(const Graph& other) const { return n_ == other.n_ && edges_ == other.edges_; }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
  std::vector<int> index_;  // n*n, -1 when absent
};

Graph build_graph(int vertex_count, const std::vector<std::pair<int, int>>& edges);

/// Closed or open walk: vertices z_0..z_l and the l edge indices between them.
struct Walk {
  std::vector<int> vertices;
  std::vector<int> edges;

  std::size_t length() const { return edges.size(); }
  bool closed() const { return !vertices.empty() && vertices.front() == vertices.back(); }
};

/// Builds a walk from a vertex sequence, looking up the edges. Throws NotAWalk.
Walk make_walk(const Graph& g, const std::vector<int>& vertices);

/// A cycle in canonical form: vertices[0] is the minimal vertex and
/// vertices[1] < vertices.back(). edges[i] joins vertices[i] and vertices[i+1 mod l].
struct Cycle {
  std::vector<int> vertices;
  std::vector<int> edges;

  std::size_t length() const { return vertices.size(); }
  Walk to_walk() const;
  bool operator==(const Cycle&) const = default;
};

/// Rotates/reflects a vertex cycle into canonical form.
std::vector<int> canonical_cycle_vertices(std::vector<int> vertices);
Cycle make_cycle(const Graph& g, std::vector<int> vertices);

using Bipartition = std::pair<std::vector<int>, std::vector<int>>;

/// Two-coloring with the lowest vertex of each component on side A.
std::optional<Bipartition> is_bipartite(const Graph& g);

struct BlockDecomposition {
  std::vector<std::vector<int>> blocks;  // edge indices, each sorted
  std::vector<int> cut_vertices;         // sorted
};

BlockDecomposition biconnected_blocks(const Graph& g);

std::vector<Cycle> enumerate_cycles(const Graph& g, bool even_only = false,
                                    std::size_t cap = kDefaultCycleCap);
std::vector<Cycle> enumerate_chordless_cycles(const Graph& g, std::size_t cap = kDefaultCycleCap);
bool has_chord(const Graph& g, const Cycle& c);
bool is_chordless_graph(const Graph& g, std::size_t cap = kDefaultCycleCap);

/// Even closed walks of length 4..max_length up to rotation and reflection.
std::vector<Walk> enumerate_even_closed_walks(const Graph& g, std::size_t max_length,
                                              std::size_t cap = kDefaultWalkCap);

enum class ChordParity { Even, Odd, Bridge };

struct ChordReport {
  int chord = -1;                  // edge index in g
  std::pair<int, int> positions;   // walk positions i < j of the endpoints (first occurrences)
  ChordParity parity = ChordParity::Odd;
  std::vector<int> crosses_with;   // chords (edge indices) crossed effectively
  std::vector<int> f4_partners;    // subset of crosses_with forming an F4
};

/// Chords of an even closed walk. A chord joining two blocks of the walk
/// subgraph is reported as Bridge; otherwise a chord at positions i, j is odd
/// when j - i is even. Throws NotAWalk.
std::vector<ChordReport> classify_chords(const Walk& w, const Graph& g);

Graph theta_graph(int paths, int length);

struct VertexGlue {
  int v1;
  int v2;
};
/// Identify edge e1 of g1 with e2 of g2; endpoint u of e1 meets endpoint u of
/// e2 unless `reversed`.
struct EdgeGlue {
  int e1;
  int e2;
  bool reversed = false;
};
using Glue = std::variant<VertexGlue, EdgeGlue>;

struct CliqueSum {
  Graph graph;
  std::vector<int> vertex_map;  // g2 vertex -> result vertex (g1 vertices keep their ids)
  std::vector<int> edge_map;    // g2 edge -> result edge (g1 edges keep their ids)
};

CliqueSum clique_sum(const Graph& g1, const Graph& g2, const Glue& glue);

struct Subgraph {
  Graph graph;
  std::vector<int> vertex_map;  // old -> new, -1 outside
  std::vector<int> edge_map;    // old -> new, -1 outside
};

Subgraph induced_subgraph(const Graph& g, const std::vector<int>& vertices);
Subgraph edge_subgraph(const Graph& g, const std::vector<int>& edges);

bool is_connected(const Graph& g);
int component_count(const Graph& g);

}  // namespace toricmg
