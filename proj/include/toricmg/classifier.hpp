#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "toricmg/fan.hpp"
#include "toricmg/fiber.hpp"
#include "toricmg/graph.hpp"
#include "toricmg/graph_ideal.hpp"

namespace toricmg {

struct Budget {
  std::size_t max_cones = kDefaultConeCap;
  std::size_t max_cycles = kDefaultCycleCap;
  std::size_t max_fiber = kDefaultFiberCap;
};

enum class LeafKind { Theta, Cycle, Edge };

/// A piece of a decomposition together with its labeling in the input graph.
/// For Theta leaves `vertices[i]` is the input vertex playing vertex i of
/// theta_graph(r, k); for Cycle leaves it is the cycle's vertex sequence; for
/// Edge leaves the two endpoints.
struct LeafDescriptor {
  LeafKind kind = LeafKind::Edge;
  int r = 0;       // paths (Theta)
  int k = 0;       // path length (Theta) or cycle length (Cycle)
  std::vector<int> vertices;
  std::vector<int> edges;  // input edge indices, sorted
};

struct DecompositionNode {
  enum class Kind { Leaf, EdgeSum, VertexSum };
  Kind kind = Kind::Leaf;
  LeafDescriptor leaf;     // Kind::Leaf
  int seam_edge = -1;      // Kind::EdgeSum: the shared edge
  int cut_vertex = -1;     // Kind::VertexSum: shared vertex, -1 for a disjoint union of blocks
  std::vector<DecompositionNode> children;
};

struct Decomposition {
  int k = 0;  // Theta: chordless cycles have length 2k; odd cycles: 2k - 1; ring graphs: 0
  DecompositionNode root;
};

std::vector<const LeafDescriptor*> leaves(const DecompositionNode& node);
std::size_t leaf_count(const DecompositionNode& node);

/// Rebuilds the graph from the leaves' labelings (n vertices, edges in input
/// index order). Edges claimed by no leaf are absent.
std::vector<std::pair<int, int>> reassemble(const DecompositionNode& node);
/// True when reassembling gives exactly the edge set of g.
bool reassembles_to(const DecompositionNode& node, const Graph& g);

/// Every block either recognized as Theta_r^k or split along a seam edge whose
/// endpoints separate the block. Absent unless all chordless cycles have one
/// length 2k with k >= 3 and the recursion succeeds. Throws CycleBudgetExceeded.
std::optional<Decomposition> theta_decompose(const Graph& g, std::size_t cycle_cap = kDefaultCycleCap);
/// Same with chordless-cycle leaves of a common odd length 2k - 1, k >= 3.
std::optional<Decomposition> odd_cycle_decompose(const Graph& g, std::size_t cycle_cap = kDefaultCycleCap);
/// Blocks split recursively into cycles along seam edges; absent when some
/// block does not.
std::optional<Decomposition> ring_decompose(const Graph& g);
bool is_ring_graph(const Graph& g);
/// Throws NotBipartite.
bool is_complete_intersection_bipartite(const Graph& g);

/// Block-degrevlex order read off a decomposition: leaves are peeled while
/// they share at most one edge with the remaining pieces; each peeled leaf's
/// unshared edges form the next (more significant) block.
MonomialOrder decomposition_order(const Graph& g, const DecompositionNode& node);

struct MGCertificate {
  bool is_mg = false;
  std::size_t mu = 0;
  std::optional<MarkedReducedGB> witness;  // reduced basis of size mu
  std::optional<IntVector> weight;         // interior point of the witness cone
  std::string method;                      // which order or search found the witness
  std::size_t cones_explored = 0;
};

/// Decides MG: a reduced basis of size mu. Structured orders are tried before
/// a best-first fan search. Throws BudgetExceeded when the search is cut off
/// without a decision.
MGCertificate is_mg(const GraphIdeal& gi, const Budget& budget = {});
bool is_umg(const GraphIdeal& gi, const Budget& budget = {});
bool is_generalized_robust(const GraphIdeal& gi, const Budget& budget = {});
bool is_robust(const GraphIdeal& gi, const Budget& budget = {});

struct StageTiming {
  std::string stage;
  double seconds = 0;
};

struct ClassificationReport {
  std::string graph_id;
  int vertices = 0;
  int edges = 0;
  bool bipartite = false;
  std::optional<std::size_t> mu;
  std::optional<std::size_t> gb_size_min;
  std::optional<std::size_t> gb_size_max;
  std::optional<std::size_t> reduced_gb_count;
  std::optional<std::size_t> universal_gb_size;
  std::optional<std::size_t> universal_markov_size;
  std::optional<bool> is_mg;
  std::optional<bool> is_umg;
  std::optional<bool> is_robust;
  std::optional<bool> is_gen_robust;
  std::optional<IntVector> mg_witness_weight;
  std::optional<std::vector<std::size_t>> chordless_cycle_lengths;  // sorted
  std::optional<bool> chordless_graph;
  std::optional<Decomposition> theta_decomposition;
  std::optional<Decomposition> odd_cycle_decomposition;
  std::optional<bool> ring_graph;
  std::optional<bool> complete_intersection;  // bipartite only
  std::vector<std::string> budget_markers;
  std::vector<std::string> consistency_violations;
  std::vector<StageTiming> timings;

  bool budget_exceeded() const { return !budget_markers.empty(); }
};

/// Fills every field that fits in the budget; exceeded stages leave their
/// fields empty and add a marker.
ClassificationReport classify(const Graph& g, const Budget& budget = {}, std::string graph_id = {});

}  // namespace toricmg
