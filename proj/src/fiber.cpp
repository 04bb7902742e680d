#include "toricmg/fiber.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>

#include "toricmg/errors.hpp"

namespace toricmg {

namespace {

class FiberSearch {
 public:
  FiberSearch(const GradingMatrix& a, std::vector<std::int64_t> d, std::size_t cap)
      : a_(a), remaining_(std::move(d)), cap_(cap), current_(a.cols()) {
    last_cover_.assign(a.rows(), -1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      for (std::size_t c = 0; c < a.cols(); ++c) {
        if (a.at(r, c) > 0) last_cover_[r] = static_cast<int>(c);
      }
    }
  }

  std::vector<Monomial> run() {
    for (std::size_t r = 0; r < remaining_.size(); ++r) {
      if (remaining_[r] > 0 && last_cover_[r] < 0) return {};
    }
    visit(0);
    return std::move(out_);
  }

 private:
  void visit(std::size_t var) {
    if (var == a_.cols()) {
      if (std::all_of(remaining_.begin(), remaining_.end(), [](std::int64_t x) { return x == 0; })) {
        if (out_.size() >= cap_) throw BudgetExceeded(ErrorCode::FiberBudgetExceeded, cap_, out_.size());
        out_.push_back(current_);
      }
      return;
    }
    std::int64_t bound = std::numeric_limits<std::int64_t>::max();
    for (std::size_t r = 0; r < a_.rows(); ++r) {
      if (a_.at(r, var) > 0) bound = std::min(bound, remaining_[r] / a_.at(r, var));
    }
    for (std::int64_t e = 0; e <= bound; ++e) {
      if (e > 0) {
        for (std::size_t r = 0; r < a_.rows(); ++r) remaining_[r] -= a_.at(r, var);
      }
      current_[var] = static_cast<Exponent>(e);
      bool feasible = true;
      for (std::size_t r = 0; r < a_.rows() && feasible; ++r) {
        feasible = remaining_[r] == 0 || last_cover_[r] > static_cast<int>(var);
      }
      if (feasible) visit(var + 1);
    }
    for (std::size_t r = 0; r < a_.rows(); ++r) remaining_[r] += bound * a_.at(r, var);
    current_[var] = 0;
  }

  const GradingMatrix& a_;
  std::vector<std::int64_t> remaining_;
  std::size_t cap_;
  Monomial current_;
  std::vector<int> last_cover_;
  std::vector<Monomial> out_;
};

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

std::vector<Monomial> fiber(const GradingMatrix& a, const std::vector<std::int64_t>& d, std::size_t cap) {
  if (d.size() != a.rows()) throw Error(ErrorCode::DimensionMismatch, "degree length");
  for (auto x : d) {
    if (x < 0) throw Error(ErrorCode::BadParameters, "negative degree");
  }
  return FiberSearch(a, d, cap).run();
}

std::vector<std::size_t> fiber_components(const std::vector<Monomial>& fib, std::size_t* count) {
  std::vector<std::size_t> parent(fib.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  const std::size_t m = fib.empty() ? 0 : fib.front().size();
  for (std::size_t var = 0; var < m; ++var) {
    std::size_t first = fib.size();
    for (std::size_t i = 0; i < fib.size(); ++i) {
      if (fib[i][var] == 0) continue;
      if (first == fib.size()) {
        first = i;
      } else {
        parent[find_root(parent, i)] = find_root(parent, first);
      }
    }
  }
  // Relabel by first appearance so labels are 0..count-1 in fiber order.
  std::vector<std::size_t> label(fib.size());
  std::map<std::size_t, std::size_t> seen;
  for (std::size_t i = 0; i < fib.size(); ++i) {
    auto [it, fresh] = seen.emplace(find_root(parent, i), seen.size());
    label[i] = it->second;
  }
  if (count) *count = seen.size();
  return label;
}

MinimalGenerators minimal_generators(const MarkedReducedGB& gb, const GradingMatrix& a, std::size_t cap) {
  std::vector<std::vector<std::int64_t>> degrees;
  for (const auto& g : gb.elements()) degrees.push_back(a.degree(g.plus));
  std::sort(degrees.begin(), degrees.end(), [](const auto& x, const auto& y) {
    auto sx = std::accumulate(x.begin(), x.end(), std::int64_t{0});
    auto sy = std::accumulate(y.begin(), y.end(), std::int64_t{0});
    return sx != sy ? sx < sy : x < y;
  });
  degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());

  MinimalGenerators out;
  for (const auto& d : degrees) {
    auto fib = fiber(a, d, cap);
    std::size_t count = 0;
    auto label = fiber_components(fib, &count);
    if (count <= 1) continue;
    std::vector<std::size_t> rep(count, fib.size());
    for (std::size_t i = 0; i < fib.size(); ++i) {
      if (rep[label[i]] == fib.size()) rep[label[i]] = i;
    }
    for (std::size_t c = 1; c < count; ++c) out.markov.push_back(normalize_sign(Binomial(fib[rep[0]], fib[rep[c]])));
    out.mu += count - 1;
    out.degrees.push_back({d, count - 1});
  }
  std::sort(out.markov.begin(), out.markov.end(), canonical_less);
  return out;
}

MinimalGenerators minimal_generators(const std::vector<Binomial>& gens, const GradingMatrix& a, std::size_t cap) {
  if (gens.empty()) return {};
  return minimal_generators(buchberger(gens, MonomialOrder::degrevlex(gens.front().variables())), a, cap);
}

bool is_minimal_binomial(const Binomial& b, const MarkedReducedGB& gb, const GradingMatrix& a, std::size_t cap) {
  if (gb.empty() || !in_ideal(b, gb)) throw Error(ErrorCode::NotInIdeal, format_binomial(b));
  auto fib = fiber(a, a.degree(b.plus), cap);
  auto label = fiber_components(fib);
  auto find = [&fib](const Monomial& x) {
    return static_cast<std::size_t>(std::lower_bound(fib.begin(), fib.end(), x) - fib.begin());
  };
  const std::size_t i = find(b.plus), j = find(b.minus);
  if (i == fib.size() || j == fib.size() || fib[i] != b.plus || fib[j] != b.minus) {
    throw Error(ErrorCode::NotInIdeal, "monomials differ in A-degree");
  }
  return label[i] != label[j];
}

bool is_minimal_binomial(const Binomial& b, const std::vector<Binomial>& gens, const GradingMatrix& a,
                         std::size_t cap) {
  if (gens.empty()) throw Error(ErrorCode::NotInIdeal, format_binomial(b));
  return is_minimal_binomial(b, buchberger(gens, MonomialOrder::degrevlex(gens.front().variables())), a, cap);
}

}  // namespace toricmg
