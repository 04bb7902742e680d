#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "toricmg/binomial.hpp"
#include "toricmg/fan.hpp"
#include "toricmg/fiber.hpp"
#include "toricmg/graph.hpp"
#include "toricmg/groebner.hpp"

namespace toricmg {

/// Vertex-edge incidence matrix: column e has ones at the endpoints of e.
GradingMatrix incidence_matrix(const Graph& g);

/// B_w: product of the odd-position edges minus product of the even-position
/// edges (positions counted from 1). std::nullopt when the two coincide.
/// Throws OddWalk for odd or open walks, NotAWalk for inconsistent walks.
std::optional<Binomial> walk_binomial(const Graph& g, const Walk& w);

/// An even closed walk w with B_w = b or B_w = -b, if one exists. The walk
/// starts at an endpoint of the lowest-index edge of b.plus.
std::optional<Walk> binomial_walk(const Graph& g, const Binomial& b);

/// Toric ideal of a graph with its generators (kernel lattice, saturated) and
/// a lazily computed degrevlex basis shared between copies.
class GraphIdeal {
 public:
  explicit GraphIdeal(Graph g);

  const Graph& graph() const { return graph_; }
  const GradingMatrix& grading() const { return grading_; }
  const std::vector<Binomial>& generators() const { return generators_; }
  std::size_t variables() const { return static_cast<std::size_t>(graph_.edge_count()); }

  /// Identity degrevlex reduced basis, computed once.
  const MarkedReducedGB& groebner_basis() const;

 private:
  struct Cache {
    std::once_flag once;
    MarkedReducedGB gb;
  };

  Graph graph_;
  GradingMatrix grading_;
  std::vector<Binomial> generators_;
  std::shared_ptr<Cache> cache_;
};

GraphIdeal toric_ideal(const Graph& g);

/// Cycle binomials of the chordless cycles. Throws NotBipartite.
std::vector<Binomial> markov_basis_bipartite(const Graph& g, std::size_t cycle_cap = kDefaultCycleCap);
/// Cycle binomials of all cycles. Throws NotBipartite.
std::vector<Binomial> universal_gb_bipartite(const Graph& g, std::size_t cycle_cap = kDefaultCycleCap);

/// Elements of the universal Groebner basis that are minimal binomials.
std::vector<Binomial> universal_markov_basis(const GraphIdeal& gi, std::size_t max_cones = kDefaultConeCap,
                                             std::size_t fiber_cap = kDefaultFiberCap);
std::vector<Binomial> universal_markov_basis(const GraphIdeal& gi, const std::vector<Binomial>& universal,
                                             std::size_t fiber_cap = kDefaultFiberCap);

enum class ScreenReason { EvenChord, CrossingWithoutF4, BridgeChord };

struct ScreenResult {
  bool pass = true;
  std::optional<ScreenReason> reason;
  std::vector<int> chords;  // offending chord edge indices
};

/// Necessary chord conditions for B_w to be a minimal binomial: every chord
/// odd, and every effectively crossing pair of odd chords forms an F4.
ScreenResult walk_minimality_screen(const Walk& w, const Graph& g);

std::string_view to_string(ScreenReason reason);

}  // namespace toricmg
