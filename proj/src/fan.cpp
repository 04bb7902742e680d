#include "toricmg/fan.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <queue>
#include <unordered_map>

#include "toricmg/errors.hpp"
#include "toricmg/lp.hpp"

namespace toricmg {

namespace {

/// Row echelon form over Q, grown one vector at a time.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t width) : width_(width) {}

  /// Adds v when it is independent of the rows so far.
  bool insert(const IntVector& v) {
    std::vector<lp::Rational> r(width_);
    for (std::size_t i = 0; i < width_; ++i) r[i] = lp::Rational(static_cast<long>(v[i]));
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const std::size_t p = pivots_[k];
      if (r[p] == 0) continue;
      lp::Rational f = r[p] / rows_[k][p];
      for (std::size_t i = p; i < width_; ++i) r[i] -= f * rows_[k][i];
    }
    std::size_t p = 0;
    while (p < width_ && r[p] == 0) ++p;
    if (p == width_) return false;
    rows_.push_back(std::move(r));
    pivots_.push_back(p);
    return true;
  }

 private:
  std::size_t width_;
  std::vector<std::vector<lp::Rational>> rows_;
  std::vector<std::size_t> pivots_;
};

std::int64_t dot_checked(const IntVector& a, const IntVector& b) {
  __int128 s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<__int128>(a[i]) * b[i];
  if (s > INT64_MAX || s < INT64_MIN) throw Error(ErrorCode::ExponentOverflow, "cone projection");
  return static_cast<std::int64_t>(s);
}

IntVector as_vector(const Binomial& b) { return b.vector(); }

GroebnerCone build_cone(const MarkedReducedGB& gb) {
  GroebnerCone cone;
  const std::size_t m = gb.variables();
  std::map<IntVector, std::size_t> by_direction;
  for (std::size_t i = 0; i < gb.size(); ++i) {
    IntVector v = as_vector(gb.elements()[i]);
    IntVector dir = primitive(v);
    auto [it, fresh] = by_direction.try_emplace(dir, cone.directions.size());
    if (fresh) cone.directions.push_back(dir);
    cone.inequalities.push_back(std::move(v));
  }
  EchelonBasis echelon(m);
  for (const auto& dir : cone.directions) {
    if (echelon.insert(dir)) cone.lattice_basis.push_back(dir);
  }
  cone.dimension = cone.lattice_basis.size();
  for (const auto& dir : cone.directions) {
    IntVector p(cone.dimension);
    for (std::size_t k = 0; k < cone.dimension; ++k) p[k] = dot_checked(cone.lattice_basis[k], dir);
    cone.projected.push_back(std::move(p));
  }

  std::vector<Facet> facets(cone.directions.size());
  for (std::size_t i = 0; i < gb.size(); ++i) {
    facets[by_direction.at(primitive(cone.inequalities[i]))].elements.push_back(i);
  }
  for (std::size_t j = 0; j < cone.directions.size(); ++j) {
    bool redundant = false;
    if (cone.directions.size() > 1) {
      std::vector<IntVector> others;
      others.reserve(cone.projected.size() - 1);
      for (std::size_t k = 0; k < cone.projected.size(); ++k) {
        if (k != j) others.push_back(cone.projected[k]);
      }
      redundant = lp::in_cone(others, cone.projected[j]);
    }
    if (!redundant) {
      facets[j].normal = cone.directions[j];
      cone.facets.push_back(std::move(facets[j]));
    }
  }
  return cone;
}

std::size_t direction_index(const GroebnerCone& cone, const IntVector& normal) {
  auto it = std::find(cone.directions.begin(), cone.directions.end(), normal);
  if (it == cone.directions.end()) throw Error(ErrorCode::NotAFacet, "not an inequality of the cone");
  return static_cast<std::size_t>(it - cone.directions.begin());
}

/// Positive integer vector w = B z + c * (1,...,1) with the same signs on
/// every inequality as z (the inequalities are orthogonal to the all-ones vector).
IntVector lift_weight(const GroebnerCone& cone, const std::vector<lp::Rational>& z, std::size_t m) {
  std::vector<lp::Rational> w(m);
  for (std::size_t k = 0; k < cone.dimension; ++k) {
    for (std::size_t i = 0; i < m; ++i) w[i] += z[k] * lp::Rational(static_cast<long>(cone.lattice_basis[k][i]));
  }
  mpz_class denom = 1;
  for (const auto& x : w) mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), x.get_den_mpz_t());
  std::vector<mpz_class> scaled(m);
  mpz_class low = 0;
  for (std::size_t i = 0; i < m; ++i) {
    mpq_class s = w[i] * denom;
    scaled[i] = s.get_num();
    if (i == 0 || scaled[i] < low) low = scaled[i];
  }
  IntVector out(m);
  for (std::size_t i = 0; i < m; ++i) {
    mpz_class v = scaled[i] - low + 1;
    if (!v.fits_slong_p()) throw Error(ErrorCode::ExponentOverflow, "weight vector entry");
    out[i] = v.get_si();
  }
  return out;
}

}  // namespace

GroebnerCone groebner_cone(const MarkedReducedGB& gb) {
  if (!gb.is_reduced()) throw Error(ErrorCode::NotReduced, "cone of a non-reduced basis");
  for (const auto& g : gb.elements()) {
    if (!g.homogeneous()) throw Error(ErrorCode::NotHomogeneous, format_binomial(g));
  }
  return build_cone(gb);
}

IntVector interior_weight(const GroebnerCone& cone) {
  const std::size_t m = cone.inequalities.empty() ? 0 : cone.inequalities.front().size();
  auto z = lp::strict_point(cone.projected);
  if (!z) throw Error(ErrorCode::BadParameters, "cone has empty interior");
  return lift_weight(cone, *z, m);
}

IntVector facet_weight(const GroebnerCone& cone, const Facet& facet) {
  const std::size_t m = cone.inequalities.empty() ? 0 : cone.inequalities.front().size();
  const std::size_t j = direction_index(cone, facet.normal);
  std::vector<IntVector> rows;
  for (std::size_t k = 0; k < cone.projected.size(); ++k) {
    if (k != j) rows.push_back(cone.projected[k]);
  }
  if (rows.empty()) {
    // A single inequality: any point of the hyperplane will do.
    return lift_weight(cone, std::vector<lp::Rational>(cone.dimension), m);
  }
  auto z = lp::strict_point(rows, {cone.projected[j]});
  if (!z) throw Error(ErrorCode::NotAFacet, "facet has empty relative interior");
  return lift_weight(cone, *z, m);
}

MarkedReducedGB flip(const MarkedReducedGB& gb, const GroebnerCone& /*cone*/, const Facet& facet) {
  const std::size_t m = gb.variables();
  std::vector<bool> on_facet(gb.size(), false);
  for (std::size_t i : facet.elements) on_facet[i] = true;

  std::vector<engine::MarkedTerm> current, initial;
  for (std::size_t i = 0; i < gb.size(); ++i) {
    const auto& g = gb.elements()[i];
    current.push_back({g.plus, g.minus});
    initial.push_back({g.plus, on_facet[i] ? std::optional<Monomial>(g.minus) : std::nullopt});
  }
  std::vector<std::int64_t> against(facet.normal.begin(), facet.normal.end());
  for (auto& x : against) x = -x;
  const auto order = MonomialOrder::weighted({std::vector<std::int64_t>(m, 1), against}, MonomialOrder::degrevlex(m));
  auto reduced = engine::reduced_basis(initial, order);

  std::vector<engine::MarkedTerm> lifted;
  lifted.reserve(reduced.size());
  for (auto& h : reduced) {
    if (h.tail) {
      // Both terms of an initial binomial have the same normal form in a lattice ideal.
      if (engine::reduce(h.lead, current) != engine::reduce(*h.tail, current)) {
        throw Error(ErrorCode::BadParameters, "flip needs a lattice ideal");
      }
      lifted.push_back(std::move(h));
    } else {
      auto tail = engine::reduce(h.lead, current);
      if (!tail) throw Error(ErrorCode::BadParameters, "monomial in a binomial ideal");
      lifted.push_back({std::move(h.lead), std::move(tail)});
    }
  }
  std::vector<Binomial> out;
  for (auto& t : engine::autoreduce(std::move(lifted))) {
    if (!t.tail) throw Error(ErrorCode::BadParameters, "lifted basis lost a tail");
    out.emplace_back(std::move(t.lead), std::move(*t.tail));
  }
  return MarkedReducedGB(std::move(out));
}

MarkedReducedGB flip(const MarkedReducedGB& gb, const IntVector& facet) {
  auto cone = groebner_cone(gb);
  const IntVector normal = primitive(facet);
  for (const auto& f : cone.facets) {
    if (f.normal == normal) return flip(gb, cone, f);
  }
  throw Error(ErrorCode::NotAFacet, "vector is not a facet normal of the cone");
}

FanResult enumerate_reduced_gbs(const MarkedReducedGB& start, const FanOptions& options) {
  FanResult result;
  std::unordered_map<MarkedReducedGB, std::size_t, GBHash> index;
  result.gbs.push_back(start);
  index.emplace(start, 0);
  if (options.stop && options.stop(start)) {
    result.complete = false;
    return result;
  }
  using Entry = std::pair<std::size_t, std::size_t>;  // (size, id)
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  std::deque<std::size_t> queue;
  auto push = [&](std::size_t id) {
    if (options.best_first) heap.emplace(result.gbs[id].size(), id);
    else queue.push_back(id);
  };
  push(0);
  while (!queue.empty() || !heap.empty()) {
    std::size_t id;
    if (options.best_first) {
      id = heap.top().second;
      heap.pop();
    } else {
      id = queue.front();
      queue.pop_front();
    }
    const MarkedReducedGB gb = result.gbs[id];
    const GroebnerCone cone = build_cone(gb);
    for (const Facet& facet : cone.facets) {
      MarkedReducedGB next = flip(gb, cone, facet);
      auto [it, fresh] = index.try_emplace(next, result.gbs.size());
      if (fresh && result.gbs.size() >= options.max_cones) {
        if (options.throw_on_budget) {
          throw BudgetExceeded(ErrorCode::FanBudgetExceeded, options.max_cones, result.gbs.size());
        }
        index.erase(it);
        result.complete = false;
        result.truncated = true;
        return result;
      }
      if (options.record_edges) result.edges.push_back({id, it->second, facet.normal});
      if (!fresh) continue;
      result.gbs.push_back(std::move(next));
      if (options.stop && options.stop(result.gbs.back())) {
        result.complete = false;
        return result;
      }
      push(result.gbs.size() - 1);
    }
  }
  return result;
}

FanResult enumerate_reduced_gbs(const std::vector<Binomial>& gens, const FanOptions& options) {
  if (gens.empty()) return enumerate_reduced_gbs(MarkedReducedGB(), options);
  for (const auto& g : gens) {
    if (!g.homogeneous()) throw Error(ErrorCode::NotHomogeneous, format_binomial(g));
  }
  const std::size_t m = gens.front().variables();
  return enumerate_reduced_gbs(buchberger(gens, MonomialOrder::degrevlex(m)), options);
}

std::vector<Binomial> universal_gb(const FanResult& fan) {
  std::vector<Binomial> out;
  for (const auto& gb : fan.gbs) {
    for (const auto& b : gb.elements()) out.push_back(normalize_sign(b));
  }
  std::sort(out.begin(), out.end(), canonical_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Binomial> universal_gb(const std::vector<Binomial>& gens, std::size_t max_cones) {
  FanOptions options;
  options.max_cones = max_cones;
  return universal_gb(enumerate_reduced_gbs(gens, options));
}

std::pair<std::size_t, std::size_t> gb_size_range(const FanResult& fan) {
  std::size_t lo = SIZE_MAX, hi = 0;
  for (const auto& gb : fan.gbs) {
    lo = std::min(lo, gb.size());
    hi = std::max(hi, gb.size());
  }
  if (fan.gbs.empty()) lo = 0;
  return {lo, hi};
}

std::pair<std::size_t, std::size_t> gb_size_range(const std::vector<Binomial>& gens, std::size_t max_cones) {
  FanOptions options;
  options.max_cones = max_cones;
  return gb_size_range(enumerate_reduced_gbs(gens, options));
}

}  // namespace toricmg
