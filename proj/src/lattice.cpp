#include "toricmg/lattice.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <numeric>

#include "toricmg/errors.hpp"
#include "toricmg/groebner.hpp"

namespace toricmg {

namespace {

std::int64_t checked_mul_sub(std::int64_t a, std::int64_t q, std::int64_t b) {
  std::int64_t prod, r;
  if (__builtin_mul_overflow(q, b, &prod) || __builtin_sub_overflow(a, prod, &r)) {
    throw Error(ErrorCode::ExponentOverflow, "kernel elimination");
  }
  return r;
}

}  // namespace

std::vector<IntVector> integer_kernel(const GradingMatrix& a) {
  const std::size_t n = a.rows(), m = a.cols();
  // cols[c] = column c of [A; I].
  std::vector<IntVector> cols(m, IntVector(n + m, 0));
  for (std::size_t c = 0; c < m; ++c) {
    for (std::size_t r = 0; r < n; ++r) cols[c][r] = a.at(r, c);
    cols[c][n + c] = 1;
  }
  std::size_t pivot = 0;
  for (std::size_t r = 0; r < n && pivot < m; ++r) {
    while (true) {
      std::size_t best = m;
      for (std::size_t c = pivot; c < m; ++c) {
        if (cols[c][r] == 0) continue;
        if (best == m || std::abs(cols[c][r]) < std::abs(cols[best][r])) best = c;
      }
      if (best == m) break;
      bool others = false;
      for (std::size_t c = pivot; c < m; ++c) {
        if (c == best || cols[c][r] == 0) continue;
        const std::int64_t q = cols[c][r] / cols[best][r];
        for (std::size_t i = 0; i < n + m; ++i) cols[c][i] = checked_mul_sub(cols[c][i], q, cols[best][i]);
        others = others || cols[c][r] != 0;
      }
      if (!others) {
        std::swap(cols[pivot], cols[best]);
        ++pivot;
        break;
      }
    }
  }
  std::vector<IntVector> basis;
  for (std::size_t c = pivot; c < m; ++c) basis.emplace_back(cols[c].begin() + static_cast<std::ptrdiff_t>(n), cols[c].end());
  return basis;
}

std::vector<Binomial> lattice_ideal_generators(const std::vector<IntVector>& basis) {
  std::vector<Binomial> out;
  for (const auto& u : basis) {
    if (auto b = binomial_from_vector(u)) out.push_back(std::move(*b));
  }
  return out;
}

std::vector<Binomial> saturate(const std::vector<Binomial>& gens) {
  if (gens.empty()) return {};
  const std::size_t m = gens.front().variables();
  for (const auto& g : gens) {
    if (!g.homogeneous()) throw Error(ErrorCode::NotHomogeneous, "saturation needs total-degree homogeneous input");
  }
  std::vector<Binomial> current = gens;
  for (std::size_t var = 0; var < m; ++var) {
    std::vector<int> order;
    for (std::size_t i = 0; i < m; ++i) {
      if (i != var) order.push_back(static_cast<int>(i));
    }
    order.push_back(static_cast<int>(var));
    auto gb = buchberger(current, MonomialOrder::degrevlex(order));
    current.clear();
    for (const auto& g : gb.elements()) {
      Monomial p = g.plus, q = g.minus;
      const Exponent common = std::min(p[var], q[var]);
      p[var] -= common;
      q[var] -= common;
      current.emplace_back(std::move(p), std::move(q));
    }
  }
  for (auto& g : current) g = normalize_sign(g);
  std::sort(current.begin(), current.end(), canonical_less);
  current.erase(std::unique(current.begin(), current.end()), current.end());
  return current;
}

IntVector primitive(const IntVector& v) {
  std::int64_t g = 0;
  for (auto x : v) g = std::gcd(g, x);
  if (g <= 1) return v;
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
  return out;
}

std::size_t rational_rank(const std::vector<IntVector>& vectors) {
  if (vectors.empty()) return 0;
  std::vector<std::vector<mpq_class>> rows;
  for (const auto& v : vectors) {
    std::vector<mpq_class> row(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) row[i] = mpq_class(static_cast<long>(v[i]));
    rows.push_back(std::move(row));
  }
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      mpq_class f = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace toricmg
