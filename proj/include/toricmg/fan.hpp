#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "toricmg/groebner.hpp"
#include "toricmg/lattice.hpp"

namespace toricmg {

inline constexpr std::size_t kDefaultConeCap = 100'000;

struct Facet {
  IntVector normal;                   // primitive, in variable space
  std::vector<std::size_t> elements;  // basis elements whose inequality is a positive multiple
};

/// Groebner cone {w : w.(lead - tail) >= 0} of a reduced basis, modulo its
/// lineality space. Inequalities are projected onto a lattice basis made of
/// basis vectors, so the cone is full dimensional there.
struct GroebnerCone {
  std::vector<IntVector> inequalities;  // lead - tail, one per basis element
  std::vector<Facet> facets;
  std::size_t dimension = 0;             // rank of the lattice
  std::vector<IntVector> lattice_basis;  // `dimension` independent inequalities
  std::vector<IntVector> projected;      // one per distinct direction
  std::vector<IntVector> directions;     // primitive inequality directions
};

/// Throws NotReduced when the basis is not reduced.
GroebnerCone groebner_cone(const MarkedReducedGB& gb);

/// Positive integer weight in the interior of the cone.
IntVector interior_weight(const GroebnerCone& cone);
/// Positive integer weight in the relative interior of a facet.
IntVector facet_weight(const GroebnerCone& cone, const Facet& facet);

/// Neighbouring reduced basis across a facet. The facet is given by its
/// inequality vector (any positive multiple). Throws NotAFacet.
MarkedReducedGB flip(const MarkedReducedGB& gb, const IntVector& facet);
/// Same, with the cone precomputed.
MarkedReducedGB flip(const MarkedReducedGB& gb, const GroebnerCone& cone, const Facet& facet);

struct FanOptions {
  std::size_t max_cones = kDefaultConeCap;
  /// Traversal stops as soon as this returns true for a newly found basis.
  std::function<bool(const MarkedReducedGB&)> stop;
  /// Expand small bases first instead of breadth first.
  bool best_first = false;
  bool record_edges = false;
  /// When false, hitting `max_cones` returns the partial traversal with
  /// `truncated` set instead of throwing.
  bool throw_on_budget = true;
};

struct FanEdge {
  std::size_t from;
  std::size_t to;
  IntVector facet;
};

struct FanResult {
  std::vector<MarkedReducedGB> gbs;  // in discovery order, gbs[0] is the start
  std::vector<FanEdge> edges;
  bool complete = true;    // false when `stop` fired or the budget ran out
  bool truncated = false;  // the budget ran out
};

/// All reduced Groebner bases of a total-degree homogeneous binomial ideal,
/// by flipping from identity degrevlex. Throws NotHomogeneous, or
/// BudgetExceeded(FanBudgetExceeded) past `max_cones`.
FanResult enumerate_reduced_gbs(const std::vector<Binomial>& gens, const FanOptions& options = {});
FanResult enumerate_reduced_gbs(const MarkedReducedGB& start, const FanOptions& options = {});

/// Union of all reduced bases, sign normalized and canonically sorted.
std::vector<Binomial> universal_gb(const std::vector<Binomial>& gens, std::size_t max_cones = kDefaultConeCap);
std::vector<Binomial> universal_gb(const FanResult& fan);

std::pair<std::size_t, std::size_t> gb_size_range(const std::vector<Binomial>& gens,
                                                  std::size_t max_cones = kDefaultConeCap);
std::pair<std::size_t, std::size_t> gb_size_range(const FanResult& fan);

}  // namespace toricmg
