#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "toricmg/binomial.hpp"

namespace toricmg {

/// Reduced Groebner basis of a binomial ideal. Each element's `plus` is its
/// marked (initial) monomial. Elements are kept in canonical order, so two
/// bases of the same ideal and order compare equal as lists.
class MarkedReducedGB {
 public:
  MarkedReducedGB() = default;
  explicit MarkedReducedGB(std::vector<Binomial> marked, std::optional<MonomialOrder> order = std::nullopt);

  const std::vector<Binomial>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  std::size_t variables() const { return variables_; }
  const std::optional<MonomialOrder>& order() const { return order_; }

  /// No marked monomial divides a monomial of another element or its own tail.
  bool is_reduced() const;

  bool operator==(const MarkedReducedGB& other) const { return elements_ == other.elements_; }

 private:
  std::vector<Binomial> elements_;
  std::size_t variables_ = 0;
  std::optional<MonomialOrder> order_;
};

struct GBHash {
  std::size_t operator()(const MarkedReducedGB& gb) const;
};

/// Canonical comparison used to sort basis elements (identity degrevlex on the
/// marked monomial, then on the tail).
bool canonical_less(const Binomial& a, const Binomial& b);

/// Orients f so that `plus` is the order-larger monomial. Throws ZeroBinomial.
Binomial initial_term(const MonomialOrder& order, const Binomial& f);

/// Remainder of f modulo the marked basis; std::nullopt when it is zero.
std::optional<Binomial> normal_form(const Binomial& f, const MarkedReducedGB& gb);
/// Remainder of a monomial modulo the marked elements.
Monomial normal_form(const Monomial& m, const MarkedReducedGB& gb);

/// lcm/in1 * g1 - lcm/in2 * g2 for marked g1, g2; std::nullopt when zero.
std::optional<Binomial> s_pair(const Binomial& g1, const Binomial& g2);

MarkedReducedGB buchberger(const std::vector<Binomial>& generators, const MonomialOrder& order);

/// True when f lies in the ideal spanned by the basis.
bool in_ideal(const Binomial& f, const MarkedReducedGB& gb);
/// Mutual membership of two generating sets, using a basis of each.
bool same_ideal(const std::vector<Binomial>& a, const std::vector<Binomial>& b);

namespace engine {

/// Marked element of a binomial-or-monomial ideal; `tail` is empty for a
/// monomial generator.
struct MarkedTerm {
  Monomial lead;
  std::optional<Monomial> tail;
};

/// Reduced basis of the ideal generated by `generators` (orientation of the
/// inputs is ignored) with respect to `order`.
std::vector<MarkedTerm> reduced_basis(const std::vector<MarkedTerm>& generators, const MonomialOrder& order);

/// Minimizes and tail-reduces a marked Groebner basis using only its markings.
std::vector<MarkedTerm> autoreduce(std::vector<MarkedTerm> basis);

/// Normal form of a monomial by marked reduction; std::nullopt when it hits a
/// monomial element.
std::optional<Monomial> reduce(Monomial m, const std::vector<MarkedTerm>& basis);

}  // namespace engine

}  // namespace toricmg
