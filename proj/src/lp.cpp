#include "toricmg/lp.hpp"

#include <climits>
#include <numeric>

#include "toricmg/errors.hpp"

namespace toricmg::lp {

namespace {

Rational to_rational(std::int64_t x) { return Rational(static_cast<long>(x)); }


/// Rational with int64 parts; arithmetic throws Overflow instead of wrapping so
/// callers can redo the computation with GMP.
struct Overflow {};

struct SmallRational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  SmallRational() = default;
  SmallRational(std::int64_t n) : num(n) {}  // NOLINT
  SmallRational(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den < 0) {
      if (num == INT64_MIN || den == INT64_MIN) throw Overflow{};
      num = -num;
      den = -den;
    }
    std::int64_t g = std::gcd(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }
  static std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static std::int64_t add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  SmallRational operator-() const {
    if (num == INT64_MIN) throw Overflow{};
    SmallRational r;
    r.num = -num;
    r.den = den;
    return r;
  }
  friend SmallRational operator+(const SmallRational& a, const SmallRational& b) {
    if (a.den == b.den) return {add(a.num, b.num), a.den};
    return {add(mul(a.num, b.den), mul(b.num, a.den)), mul(a.den, b.den)};
  }
  friend SmallRational operator-(const SmallRational& a, const SmallRational& b) { return a + (-b); }
  friend SmallRational operator*(const SmallRational& a, const SmallRational& b) {
    std::int64_t g1 = std::gcd(a.num, b.den), g2 = std::gcd(b.num, a.den);
    if (g1 == 0) g1 = 1;
    if (g2 == 0) g2 = 1;
    return {mul(a.num / g1, b.num / g2), mul(a.den / g2, b.den / g1)};
  }
  friend SmallRational operator/(const SmallRational& a, const SmallRational& b) {
    SmallRational inv;
    inv.num = b.den;
    inv.den = b.num;
    inv.normalize();
    return a * inv;
  }
  SmallRational& operator+=(const SmallRational& o) { return *this = *this + o; }
  SmallRational& operator-=(const SmallRational& o) { return *this = *this - o; }
  SmallRational& operator/=(const SmallRational& o) { return *this = *this / o; }
  friend bool operator==(const SmallRational& a, const SmallRational& b) { return a.num == b.num && a.den == b.den; }
  friend bool operator<(const SmallRational& a, const SmallRational& b) {
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
  }
  friend bool operator<(const SmallRational& a, int b) { return a < SmallRational(b); }
  friend bool operator<=(const SmallRational& a, int b) { return !(SmallRational(b) < a); }
  friend bool operator!=(const SmallRational& a, int b) { return !(a == SmallRational(b)); }
  friend bool operator==(const SmallRational& a, int b) { return a == SmallRational(b); }
};

Rational to_mpq(const SmallRational& x) {
  return Rational(mpz_class(static_cast<long>(x.num)), mpz_class(static_cast<long>(x.den)));
}

template <class T>
std::optional<std::vector<T>> solve(const std::vector<std::vector<T>>& m, const std::vector<T>& b) {
  const std::size_t rows = m.size();
  if (b.size() != rows) throw Error(ErrorCode::DimensionMismatch, "lp right-hand side");
  const std::size_t cols = rows == 0 ? 0 : m.front().size();

  // Tableau over the original columns plus the right-hand side; artificial
  // columns are implicit and dropped once they leave the basis.
  std::vector<std::vector<T>> t(rows, std::vector<T>(cols + 1));
  for (std::size_t r = 0; r < rows; ++r) {
    if (m[r].size() != cols) throw Error(ErrorCode::DimensionMismatch, "lp row length");
    const bool flip = b[r] < 0;
    for (std::size_t c = 0; c < cols; ++c) t[r][c] = flip ? T(-m[r][c]) : m[r][c];
    t[r][cols] = flip ? T(-b[r]) : b[r];
  }
  std::vector<T> cost(cols + 1);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c <= cols; ++c) cost[c] -= t[r][c];
  }
  // Artificial of row r has index cols + r.
  std::vector<std::size_t> basis(rows);
  for (std::size_t r = 0; r < rows; ++r) basis[r] = cols + r;

  while (true) {
    std::size_t enter = cols;
    for (std::size_t c = 0; c < cols; ++c) {
      if (cost[c] < 0) {
        enter = c;
        break;
      }
    }
    if (enter == cols) break;
    std::size_t leave = rows;
    T best;
    for (std::size_t r = 0; r < rows; ++r) {
      if (t[r][enter] <= 0) continue;
      T ratio = t[r][cols] / t[r][enter];
      // Bland: artificials are ordered after every original column.
      if (leave == rows || ratio < best || (ratio == best && basis[r] < basis[leave])) {
        leave = r;
        best = ratio;
      }
    }
    if (leave == rows) break;  // unbounded direction cannot occur in phase one
    T pivot = t[leave][enter];
    for (auto& x : t[leave]) x /= pivot;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == leave || t[r][enter] == 0) continue;
      T f = t[r][enter];
      for (std::size_t c = 0; c <= cols; ++c) t[r][c] -= f * t[leave][c];
    }
    if (cost[enter] != 0) {
      T f = cost[enter];
      for (std::size_t c = 0; c <= cols; ++c) cost[c] -= f * t[leave][c];
    }
    basis[leave] = enter;
  }
  if (cost[cols] != 0) return std::nullopt;
  std::vector<T> x(cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (basis[r] < cols) x[basis[r]] = t[r][cols];
  }
  return x;
}

/// Runs the simplex on int64 rationals and redoes it with GMP on overflow.
std::optional<std::vector<Rational>> solve_small_first(const std::vector<std::vector<std::int64_t>>& m,
                                                       const std::vector<std::int64_t>& b) {
  try {
    std::vector<std::vector<SmallRational>> ms(m.size());
    for (std::size_t r = 0; r < m.size(); ++r) ms[r].assign(m[r].begin(), m[r].end());
    std::vector<SmallRational> bs(b.begin(), b.end());
    auto x = solve(ms, bs);
    if (!x) return std::nullopt;
    std::vector<Rational> out;
    for (const auto& v : *x) out.push_back(to_mpq(v));
    return out;
  } catch (const Overflow&) {
  }
  RationalMatrix mq(m.size());
  for (std::size_t r = 0; r < m.size(); ++r) {
    for (auto v : m[r]) mq[r].push_back(to_rational(v));
  }
  std::vector<Rational> bq;
  for (auto v : b) bq.push_back(to_rational(v));
  return solve(mq, bq);
}

}  // namespace

std::optional<std::vector<Rational>> feasible_point(const RationalMatrix& m, const std::vector<Rational>& b) {
  if (b.size() != m.size()) throw Error(ErrorCode::DimensionMismatch, "lp right-hand side");
  return solve(m, b);
}


bool in_cone(const std::vector<std::vector<std::int64_t>>& generators, const std::vector<std::int64_t>& target) {
  const std::size_t d = target.size();
  std::vector<std::vector<std::int64_t>> m(d, std::vector<std::int64_t>(generators.size()));
  for (std::size_t j = 0; j < generators.size(); ++j) {
    if (generators[j].size() != d) throw Error(ErrorCode::DimensionMismatch, "cone generator length");
    for (std::size_t i = 0; i < d; ++i) m[i][j] = generators[j][i];
  }
  return solve_small_first(m, target).has_value();
}

std::optional<std::vector<Rational>> strict_point(const std::vector<std::vector<std::int64_t>>& rows,
                                                  const std::vector<std::vector<std::int64_t>>& equalities) {
  std::size_t d = 0;
  if (!rows.empty()) d = rows.front().size();
  else if (!equalities.empty()) d = equalities.front().size();
  // Columns: z+ (d), z- (d), one surplus per inequality.
  const std::size_t cols = 2 * d + rows.size();
  std::vector<std::vector<std::int64_t>> m;
  std::vector<std::int64_t> b;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != d) throw Error(ErrorCode::DimensionMismatch, "inequality length");
    std::vector<std::int64_t> row(cols);
    for (std::size_t k = 0; k < d; ++k) {
      row[k] = rows[i][k];
      row[d + k] = -row[k];
    }
    row[2 * d + i] = -1;
    m.push_back(std::move(row));
    b.push_back(1);
  }
  for (const auto& e : equalities) {
    if (e.size() != d) throw Error(ErrorCode::DimensionMismatch, "equality length");
    std::vector<std::int64_t> row(cols);
    for (std::size_t k = 0; k < d; ++k) {
      row[k] = e[k];
      row[d + k] = -row[k];
    }
    m.push_back(std::move(row));
    b.push_back(0);
  }
  auto x = solve_small_first(m, b);
  if (!x) return std::nullopt;
  std::vector<Rational> z(d);
  for (std::size_t k = 0; k < d; ++k) z[k] = (*x)[k] - (*x)[d + k];
  return z;
}

}  // namespace toricmg::lp
