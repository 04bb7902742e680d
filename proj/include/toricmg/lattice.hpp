#pragma once

#include <cstdint>
#include <vector>

#include "toricmg/binomial.hpp"

namespace toricmg {

using IntVector = std::vector<std::int64_t>;

/// Basis of {u in Z^m : A u = 0}, computed by unimodular column operations on
/// [A; I]. Entries are checked 64-bit integers (ExponentOverflow on overflow).
std::vector<IntVector> integer_kernel(const GradingMatrix& a);

/// x^{u+} - x^{u-} for every nonzero u.
std::vector<Binomial> lattice_ideal_generators(const std::vector<IntVector>& basis);

/// Generators of (I : (x1...xm)^inf) for a total-degree homogeneous binomial
/// ideal I. One pass over the variables: a degrevlex basis with x_i cheapest,
/// then every element is divided by its largest power of x_i. Output is sign
/// normalized and sorted.
std::vector<Binomial> saturate(const std::vector<Binomial>& gens);

/// v divided by the gcd of its entries (sign kept).
IntVector primitive(const IntVector& v);

/// Rank over Q of the given integer vectors.
std::size_t rational_rank(const std::vector<IntVector>& vectors);

}  // namespace toricmg
