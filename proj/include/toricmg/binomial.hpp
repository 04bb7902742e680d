#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace toricmg {

using Exponent = std::int32_t;

/// Exponent vector over the m edge variables. Arithmetic is overflow-checked.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t variables) : exps_(variables, 0) {}
  explicit Monomial(std::vector<Exponent> exps);
  Monomial(std::initializer_list<Exponent> exps) : Monomial(std::vector<Exponent>(exps)) {}

  /// x_{i+1} for each listed 0-based index, repeated indices multiply.
  static Monomial from_variables(std::size_t variables, std::initializer_list<int> indices);

  std::size_t size() const { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  Exponent& operator[](std::size_t i) { return exps_[i]; }
  const std::vector<Exponent>& exponents() const { return exps_; }

  std::int64_t degree() const;
  bool is_one() const;
  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  Monomial operator*(const Monomial& other) const;
  /// Requires divisibility.
  Monomial operator/(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;

  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;

 private:
  std::vector<Exponent> exps_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const;
};

/// x^plus - x^minus with plus != minus.
struct Binomial {
  Monomial plus;
  Monomial minus;

  Binomial() = default;
  /// Throws ZeroBinomial when the monomials agree, DimensionMismatch on size.
  Binomial(Monomial p, Monomial m);

  std::size_t variables() const { return plus.size(); }
  /// plus - minus as an integer vector.
  std::vector<std::int64_t> vector() const;
  Binomial negated() const { return Binomial(minus, plus); }
  bool homogeneous() const { return plus.degree() == minus.degree(); }

  auto operator<=>(const Binomial&) const = default;
  bool operator==(const Binomial&) const = default;
};

struct BinomialHash {
  std::size_t operator()(const Binomial& b) const;
};

/// x^{u+} - x^{u-}; std::nullopt for the zero vector.
std::optional<Binomial> binomial_from_vector(const std::vector<std::int64_t>& u);

/// Writes "x1*x3 - x2*x4"; `names` overrides the default x1..xm spelling.
std::string format_monomial(const Monomial& m, const std::vector<std::string>* names = nullptr);
std::string format_binomial(const Binomial& b, const std::vector<std::string>* names = nullptr);

/// Matrix order: weight rows compared in turn, then lex along `tie_break`
/// (tie_break[0] is the most significant variable).
class MonomialOrder {
 public:
  using Row = std::vector<std::pair<int, std::int64_t>>;  // sparse (variable, weight)

  MonomialOrder() = default;
  MonomialOrder(std::size_t variables, std::vector<Row> rows, std::vector<int> tie_break);

  static MonomialOrder degrevlex(std::size_t variables);
  /// Degrevlex where `order[0]` is the largest variable and `order.back()` the cheapest.
  static MonomialOrder degrevlex(std::vector<int> order);
  static MonomialOrder lex(std::vector<int> order);
  /// Dense weight rows first, then the rows and tie-break of `refinement`.
  static MonomialOrder weighted(const std::vector<std::vector<std::int64_t>>& weights,
                                const MonomialOrder& refinement);
  /// Block order: the first factor's comparison decides, then the second's.
  /// Each factor acts on the listed variables only.
  static MonomialOrder product(std::size_t variables, const MonomialOrder& first,
                               const std::vector<int>& first_vars, const MonomialOrder& second,
                               const std::vector<int>& second_vars);

  std::size_t variables() const { return variables_; }
  const std::vector<Row>& rows() const { return rows_; }
  const std::vector<int>& tie_break() const { return tie_break_; }

  /// Throws DimensionMismatch on size disagreement.
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  std::strong_ordering compare_unchecked(const Monomial& a, const Monomial& b) const;

  /// The order as a list of rows where each tie-break variable becomes a unit row.
  std::vector<Row> as_rows() const;

 private:
  std::size_t variables_ = 0;
  std::vector<Row> rows_;
  std::vector<int> tie_break_;
};

/// Nonnegative integer grading matrix A; column i is deg_A(x_{i+1}).
class GradingMatrix {
 public:
  GradingMatrix() = default;
  /// Throws BadParameters for a zero column.
  GradingMatrix(std::size_t rows, std::size_t cols, std::vector<std::int64_t> data);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::int64_t at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::vector<std::int64_t> degree(const Monomial& m) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

/// Orientation used for stable output and set comparison: the larger side
/// under identity degrevlex is `plus`.
Binomial normalize_sign(const Binomial& b);

}  // namespace toricmg
