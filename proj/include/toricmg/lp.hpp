#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <vector>

namespace toricmg::lp {

using Rational = mpq_class;
using RationalMatrix = std::vector<std::vector<Rational>>;  // row-major

/// Some x >= 0 with M x = b, found by phase-one simplex with Bland's rule in
/// exact rational arithmetic; std::nullopt when infeasible.
std::optional<std::vector<Rational>> feasible_point(const RationalMatrix& m, const std::vector<Rational>& b);

/// True when target is a nonnegative combination of `generators`.
bool in_cone(const std::vector<std::vector<std::int64_t>>& generators, const std::vector<std::int64_t>& target);

/// Some z with rows[i] . z >= 1 for every i, and equalities[j] . z = 0.
std::optional<std::vector<Rational>> strict_point(const std::vector<std::vector<std::int64_t>>& rows,
                                                  const std::vector<std::vector<std::int64_t>>& equalities = {});

}  // namespace toricmg::lp
