#include "toricmg/binomial.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "toricmg/errors.hpp"

namespace toricmg {

namespace {

Exponent checked_add(Exponent a, Exponent b) {
  Exponent r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorCode::ExponentOverflow, "exponent sum");
  return r;
}

void require_same_size(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::DimensionMismatch,
                std::to_string(a.size()) + " vs " + std::to_string(b.size()) + " variables");
  }
}

}  // namespace

Monomial::Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {
  for (Exponent e : exps_) {
    if (e < 0) throw Error(ErrorCode::BadParameters, "negative exponent");
  }
}

Monomial Monomial::from_variables(std::size_t variables, std::initializer_list<int> indices) {
  Monomial m(variables);
  for (int i : indices) {
    if (i < 0 || static_cast<std::size_t>(i) >= variables) throw Error(ErrorCode::DimensionMismatch, "variable index");
    m.exps_[static_cast<std::size_t>(i)] = checked_add(m.exps_[static_cast<std::size_t>(i)], 1);
  }
  return m;
}

std::int64_t Monomial::degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), std::int64_t{0});
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > 0 && other.exps_[i] > 0) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  require_same_size(*this, other);
  Monomial r(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = checked_add(exps_[i], other.exps_[i]);
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
  require_same_size(*this, other);
  Monomial r(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (other.exps_[i] > exps_[i]) throw Error(ErrorCode::BadParameters, "monomial does not divide");
    r.exps_[i] = exps_[i] - other.exps_[i];
  }
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  require_same_size(*this, other);
  Monomial r(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = std::max(exps_[i], other.exps_[i]);
  return r;
}

Monomial Monomial::gcd(const Monomial& other) const {
  require_same_size(*this, other);
  Monomial r(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = std::min(exps_[i], other.exps_[i]);
  return r;
}

std::size_t MonomialHash::operator()(const Monomial& m) const {
  std::size_t h = 1469598103934665603ull;
  for (Exponent e : m.exponents()) {
    h ^= static_cast<std::size_t>(e) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

Binomial::Binomial(Monomial p, Monomial m) : plus(std::move(p)), minus(std::move(m)) {
  require_same_size(plus, minus);
  if (plus == minus) throw Error(ErrorCode::ZeroBinomial, "x^a - x^a");
}

std::vector<std::int64_t> Binomial::vector() const {
  std::vector<std::int64_t> v(plus.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = std::int64_t{plus[i]} - minus[i];
  return v;
}

std::size_t BinomialHash::operator()(const Binomial& b) const {
  MonomialHash h;
  return h(b.plus) * 31 + h(b.minus);
}

std::optional<Binomial> binomial_from_vector(const std::vector<std::int64_t>& u) {
  Monomial p(u.size()), m(u.size());
  bool nonzero = false;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] > std::numeric_limits<Exponent>::max() || -u[i] > std::numeric_limits<Exponent>::max()) {
      throw Error(ErrorCode::ExponentOverflow, "lattice vector entry");
    }
    if (u[i] > 0) p[i] = static_cast<Exponent>(u[i]);
    if (u[i] < 0) m[i] = static_cast<Exponent>(-u[i]);
    nonzero = nonzero || u[i] != 0;
  }
  if (!nonzero) return std::nullopt;
  return Binomial(std::move(p), std::move(m));
}

std::string format_monomial(const Monomial& m, const std::vector<std::string>* names) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += names ? (*names)[i] : "x" + std::to_string(i + 1);
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string format_binomial(const Binomial& b, const std::vector<std::string>* names) {
  return format_monomial(b.plus, names) + " - " + format_monomial(b.minus, names);
}

MonomialOrder::MonomialOrder(std::size_t variables, std::vector<Row> rows, std::vector<int> tie_break)
    : variables_(variables), rows_(std::move(rows)), tie_break_(std::move(tie_break)) {
  std::vector<int> sorted = tie_break_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted.size() != variables_ || sorted[i] != static_cast<int>(i)) {
      throw Error(ErrorCode::BadParameters, "tie-break must permute all variables");
    }
  }
  for (const auto& row : rows_) {
    for (auto [v, w] : row) {
      if (v < 0 || static_cast<std::size_t>(v) >= variables_) throw Error(ErrorCode::BadParameters, "row variable");
    }
  }
}

namespace {

std::vector<int> identity(std::size_t m) {
  std::vector<int> p(m);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

MonomialOrder::Row dense_row(const std::vector<std::int64_t>& w) {
  MonomialOrder::Row row;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] != 0) row.emplace_back(static_cast<int>(i), w[i]);
  }
  return row;
}

}  // namespace

MonomialOrder MonomialOrder::degrevlex(std::size_t variables) { return degrevlex(identity(variables)); }

MonomialOrder MonomialOrder::degrevlex(std::vector<int> order) {
  const std::size_t m = order.size();
  std::vector<Row> rows;
  rows.push_back(dense_row(std::vector<std::int64_t>(m, 1)));
  for (std::size_t k = m; k-- > 1;) rows.push_back({{order[k], -1}});
  return MonomialOrder(m, std::move(rows), std::move(order));
}

MonomialOrder MonomialOrder::lex(std::vector<int> order) {
  const std::size_t m = order.size();
  return MonomialOrder(m, {}, std::move(order));
}

MonomialOrder MonomialOrder::weighted(const std::vector<std::vector<std::int64_t>>& weights,
                                      const MonomialOrder& refinement) {
  std::vector<Row> rows;
  for (const auto& w : weights) {
    if (w.size() != refinement.variables()) throw Error(ErrorCode::DimensionMismatch, "weight length");
    rows.push_back(dense_row(w));
  }
  rows.insert(rows.end(), refinement.rows().begin(), refinement.rows().end());
  return MonomialOrder(refinement.variables(), std::move(rows), refinement.tie_break());
}

std::vector<MonomialOrder::Row> MonomialOrder::as_rows() const {
  std::vector<Row> rows = rows_;
  for (int v : tie_break_) rows.push_back({{v, 1}});
  return rows;
}

MonomialOrder MonomialOrder::product(std::size_t variables, const MonomialOrder& first,
                                     const std::vector<int>& first_vars, const MonomialOrder& second,
                                     const std::vector<int>& second_vars) {
  if (first.variables() != first_vars.size() || second.variables() != second_vars.size() ||
      first_vars.size() + second_vars.size() != variables) {
    throw Error(ErrorCode::DimensionMismatch, "product order blocks");
  }
  std::vector<Row> rows;
  auto embed = [&rows](const MonomialOrder& o, const std::vector<int>& vars) {
    for (const Row& r : o.as_rows()) {
      Row mapped;
      for (auto [v, w] : r) mapped.emplace_back(vars[static_cast<std::size_t>(v)], w);
      rows.push_back(std::move(mapped));
    }
  };
  embed(first, first_vars);
  embed(second, second_vars);
  return MonomialOrder(variables, std::move(rows), identity(variables));
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.size() != variables_ || b.size() != variables_) {
    throw Error(ErrorCode::DimensionMismatch, "monomial size does not match the order");
  }
  return compare_unchecked(a, b);
}

std::strong_ordering MonomialOrder::compare_unchecked(const Monomial& a, const Monomial& b) const {
  for (const Row& row : rows_) {
    __int128 diff = 0;
    for (auto [v, w] : row) {
      diff += static_cast<__int128>(w) * (std::int64_t{a[static_cast<std::size_t>(v)]} - b[static_cast<std::size_t>(v)]);
    }
    if (diff > 0) return std::strong_ordering::greater;
    if (diff < 0) return std::strong_ordering::less;
  }
  for (int v : tie_break_) {
    auto av = a[static_cast<std::size_t>(v)], bv = b[static_cast<std::size_t>(v)];
    if (av != bv) return av > bv ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

GradingMatrix::GradingMatrix(std::size_t rows, std::size_t cols, std::vector<std::int64_t> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows * cols) throw Error(ErrorCode::DimensionMismatch, "grading matrix data");
  for (std::size_t c = 0; c < cols; ++c) {
    bool nonzero = false;
    for (std::size_t r = 0; r < rows; ++r) {
      if (at(r, c) < 0) throw Error(ErrorCode::BadParameters, "negative grading entry");
      nonzero = nonzero || at(r, c) != 0;
    }
    if (!nonzero) throw Error(ErrorCode::BadParameters, "zero column " + std::to_string(c));
  }
}

std::vector<std::int64_t> GradingMatrix::degree(const Monomial& m) const {
  if (m.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "monomial vs grading");
  std::vector<std::int64_t> d(rows_, 0);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (m[c] == 0) continue;
    for (std::size_t r = 0; r < rows_; ++r) d[r] += at(r, c) * m[c];
  }
  return d;
}

Binomial normalize_sign(const Binomial& b) {
  static thread_local std::size_t cached_m = 0;
  static thread_local MonomialOrder cached;
  if (cached_m != b.variables()) {
    cached = MonomialOrder::degrevlex(b.variables());
    cached_m = b.variables();
  }
  return cached.compare(b.plus, b.minus) == std::strong_ordering::less ? b.negated() : b;
}

}  // namespace toricmg
