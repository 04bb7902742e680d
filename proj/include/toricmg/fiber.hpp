#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "toricmg/binomial.hpp"
#include "toricmg/groebner.hpp"

namespace toricmg {

inline constexpr std::size_t kDefaultFiberCap = 100'000;

/// All monomials x^u with A u = d, in lex order of exponent vectors.
/// Throws FiberBudgetExceeded past `cap` monomials.
std::vector<Monomial> fiber(const GradingMatrix& a, const std::vector<std::int64_t>& d,
                            std::size_t cap = kDefaultFiberCap);

/// Component label per fiber monomial in the graph joining monomials that
/// share a variable. Two monomials of a fiber are connected exactly when their
/// difference lies in the ideal generated by elements of smaller degree.
std::vector<std::size_t> fiber_components(const std::vector<Monomial>& fib, std::size_t* count = nullptr);

struct DegreeCount {
  std::vector<std::int64_t> degree;
  std::size_t count = 0;
};

struct MinimalGenerators {
  std::size_t mu = 0;
  /// One minimal generating set, sign normalized and canonically sorted.
  std::vector<Binomial> markov;
  /// Degrees with a nonzero number of minimal generators, by total degree.
  std::vector<DegreeCount> degrees;
};

/// Minimal generators of the A-graded toric ideal spanned by `gb`. Only the
/// A-degrees of the basis elements are examined: every minimal generator of a
/// graded ideal has the degree of some element of any of its Groebner bases.
MinimalGenerators minimal_generators(const MarkedReducedGB& gb, const GradingMatrix& a,
                                     std::size_t cap = kDefaultFiberCap);
MinimalGenerators minimal_generators(const std::vector<Binomial>& gens, const GradingMatrix& a,
                                     std::size_t cap = kDefaultFiberCap);

/// True when b is not in (x1,...,xm) * I. Throws NotInIdeal when b is not in
/// the ideal of `gb`.
bool is_minimal_binomial(const Binomial& b, const MarkedReducedGB& gb, const GradingMatrix& a,
                         std::size_t cap = kDefaultFiberCap);
bool is_minimal_binomial(const Binomial& b, const std::vector<Binomial>& gens, const GradingMatrix& a,
                         std::size_t cap = kDefaultFiberCap);

}  // namespace toricmg
