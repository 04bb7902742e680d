#include "toricmg/groebner.hpp"

#include <algorithm>
#include <queue>

#include "toricmg/errors.hpp"

namespace toricmg {

namespace {

std::strong_ordering degrevlex_compare(const Monomial& a, const Monomial& b) {
  auto da = a.degree(), db = b.degree();
  if (da != db) return da <=> db;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

std::uint64_t signature(const Monomial& m) {
  std::uint64_t s = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] > 0) s |= std::uint64_t{1} << (i & 63);
  }
  return s;
}

struct Element {
  Monomial lead;
  Monomial tail;
  bool has_tail = false;
  std::uint64_t sig = 0;
};

Element make_element(engine::MarkedTerm t) {
  Element e;
  e.sig = signature(t.lead);
  e.lead = std::move(t.lead);
  if (t.tail) {
    e.tail = std::move(*t.tail);
    e.has_tail = true;
  }
  return e;
}

/// Replaces x by its normal form. Returns false when x reduces to zero.
bool reduce_in_place(Monomial& x, const std::vector<Element>& basis) {
  std::uint64_t xs = signature(x);
  const std::size_t m = x.size();
  while (true) {
    const Element* divisor = nullptr;
    for (const Element& e : basis) {
      if ((e.sig & ~xs) == 0 && e.lead.divides(x)) {
        divisor = &e;
        break;
      }
    }
    if (!divisor) return true;
    if (!divisor->has_tail) return false;
    for (std::size_t i = 0; i < m; ++i) {
      Exponent v;
      if (__builtin_add_overflow(x[i] - divisor->lead[i], divisor->tail[i], &v)) {
        throw Error(ErrorCode::ExponentOverflow, "reduction step");
      }
      x[i] = v;
    }
    xs = signature(x);
  }
}

engine::MarkedTerm to_term(const Element& e) {
  engine::MarkedTerm t{e.lead, std::nullopt};
  if (e.has_tail) t.tail = e.tail;
  return t;
}

class BuchbergerRun {
 public:
  explicit BuchbergerRun(const MonomialOrder& order) : order_(order) {}

  void add(std::optional<Monomial> t1, std::optional<Monomial> t2) {
    if (t1 && !reduce_in_place(*t1, basis_)) t1.reset();
    if (t2 && !reduce_in_place(*t2, basis_)) t2.reset();
    if (!t1 && !t2) return;
    if (t1 && t2 && *t1 == *t2) return;
    engine::MarkedTerm term;
    if (t1 && t2) {
      if (order_.compare_unchecked(*t1, *t2) == std::strong_ordering::greater) {
        term = {std::move(*t1), std::move(t2)};
      } else {
        term = {std::move(*t2), std::move(t1)};
      }
    } else {
      term = {t1 ? std::move(*t1) : std::move(*t2), std::nullopt};
    }
    const int index = static_cast<int>(basis_.size());
    basis_.push_back(make_element(std::move(term)));
    for (auto& row : pending_) row.push_back(0);
    pending_.emplace_back(basis_.size(), 0);
    for (int j = 0; j < index; ++j) {
      Monomial l = basis_[static_cast<std::size_t>(j)].lead.lcm(basis_[static_cast<std::size_t>(index)].lead);
      queue_.push(Pair{l.degree(), sequence_++, j, index});
      set_pending(j, index, true);
    }
  }

  void run() {
    while (!queue_.empty()) {
      Pair p = queue_.top();
      queue_.pop();
      set_pending(p.i, p.j, false);
      const Element& a = basis_[static_cast<std::size_t>(p.i)];
      const Element& b = basis_[static_cast<std::size_t>(p.j)];
      if (!a.has_tail && !b.has_tail) continue;
      if (a.lead.coprime(b.lead)) continue;
      Monomial l = a.lead.lcm(b.lead);
      if (chain_criterion(p.i, p.j, l)) continue;
      std::optional<Monomial> t1, t2;
      if (a.has_tail) t1 = l / a.lead * a.tail;
      if (b.has_tail) t2 = l / b.lead * b.tail;
      add(std::move(t1), std::move(t2));
    }
  }

  std::vector<engine::MarkedTerm> terms() const {
    std::vector<engine::MarkedTerm> out;
    out.reserve(basis_.size());
    for (const Element& e : basis_) out.push_back(to_term(e));
    return out;
  }

 private:
  struct Pair {
    std::int64_t degree;
    std::size_t sequence;
    int i, j;
    bool operator>(const Pair& o) const {
      return degree != o.degree ? degree > o.degree : sequence > o.sequence;
    }
  };

  void set_pending(int i, int j, bool value) {
    pending_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = value;
    pending_[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = value;
  }

  bool chain_criterion(int i, int j, const Monomial& l) const {
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      if (static_cast<int>(k) == i || static_cast<int>(k) == j) continue;
      if (pending_[k][static_cast<std::size_t>(i)] || pending_[k][static_cast<std::size_t>(j)]) continue;
      if (basis_[k].lead.divides(l)) return true;
    }
    return false;
  }

  const MonomialOrder& order_;
  std::vector<Element> basis_;
  std::vector<std::vector<char>> pending_;
  std::priority_queue<Pair, std::vector<Pair>, std::greater<>> queue_;
  std::size_t sequence_ = 0;
};

bool term_less(const engine::MarkedTerm& a, const engine::MarkedTerm& b) {
  auto c = degrevlex_compare(a.lead, b.lead);
  if (c != 0) return c < 0;
  if (!a.tail || !b.tail) return !a.tail && b.tail;
  return degrevlex_compare(*a.tail, *b.tail) < 0;
}

}  // namespace

namespace engine {

std::optional<Monomial> reduce(Monomial m, const std::vector<MarkedTerm>& basis) {
  std::vector<Element> elems;
  elems.reserve(basis.size());
  for (const auto& t : basis) elems.push_back(make_element(t));
  if (!reduce_in_place(m, elems)) return std::nullopt;
  return m;
}

std::vector<MarkedTerm> autoreduce(std::vector<MarkedTerm> basis) {
  std::sort(basis.begin(), basis.end(), term_less);
  std::vector<Element> elems;
  elems.reserve(basis.size());
  for (auto& t : basis) elems.push_back(make_element(std::move(t)));

  std::vector<Element> kept;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < elems.size() && !redundant; ++j) {
      if (i == j) continue;
      if ((elems[j].sig & ~elems[i].sig) != 0 || !elems[j].lead.divides(elems[i].lead)) continue;
      redundant = elems[j].lead != elems[i].lead || j < i;
    }
    if (!redundant) kept.push_back(elems[i]);
  }
  std::vector<MarkedTerm> out;
  out.reserve(kept.size());
  for (const Element& e : kept) {
    MarkedTerm t{e.lead, std::nullopt};
    if (e.has_tail) {
      Monomial tail = e.tail;
      if (reduce_in_place(tail, kept)) t.tail = std::move(tail);
    }
    out.push_back(std::move(t));
  }
  std::sort(out.begin(), out.end(), term_less);
  return out;
}

std::vector<MarkedTerm> reduced_basis(const std::vector<MarkedTerm>& generators, const MonomialOrder& order) {
  BuchbergerRun run(order);
  for (const auto& g : generators) {
    if (g.lead.size() != order.variables() || (g.tail && g.tail->size() != order.variables())) {
      throw Error(ErrorCode::DimensionMismatch, "generator size does not match the order");
    }
    run.add(g.lead, g.tail);
  }
  run.run();
  return autoreduce(run.terms());
}

}  // namespace engine

MarkedReducedGB::MarkedReducedGB(std::vector<Binomial> marked, std::optional<MonomialOrder> order)
    : elements_(std::move(marked)), order_(std::move(order)) {
  std::sort(elements_.begin(), elements_.end(), canonical_less);
  if (!elements_.empty()) variables_ = elements_.front().variables();
  if (order_) variables_ = order_->variables();
}

bool MarkedReducedGB::is_reduced() const {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    const auto& lead = elements_[i].plus;
    if (lead.divides(elements_[i].minus)) return false;
    for (std::size_t j = 0; j < elements_.size(); ++j) {
      if (i == j) continue;
      if (lead.divides(elements_[j].plus) || lead.divides(elements_[j].minus)) return false;
    }
  }
  return true;
}

std::size_t GBHash::operator()(const MarkedReducedGB& gb) const {
  std::size_t h = gb.size();
  BinomialHash bh;
  for (const auto& b : gb.elements()) h = h * 1000003u ^ bh(b);
  return h;
}

bool canonical_less(const Binomial& a, const Binomial& b) {
  auto c = degrevlex_compare(a.plus, b.plus);
  if (c != 0) return c < 0;
  return degrevlex_compare(a.minus, b.minus) < 0;
}

Binomial initial_term(const MonomialOrder& order, const Binomial& f) {
  auto c = order.compare(f.plus, f.minus);
  if (c == 0) throw Error(ErrorCode::ZeroBinomial, "initial term of zero");
  return c > 0 ? f : f.negated();
}

namespace {

std::vector<Element> elements_of(const MarkedReducedGB& gb) {
  std::vector<Element> elems;
  elems.reserve(gb.size());
  for (const auto& b : gb.elements()) elems.push_back(make_element({b.plus, b.minus}));
  return elems;
}

}  // namespace

Monomial normal_form(const Monomial& m, const MarkedReducedGB& gb) {
  Monomial x = m;
  reduce_in_place(x, elements_of(gb));
  return x;
}

std::optional<Binomial> normal_form(const Binomial& f, const MarkedReducedGB& gb) {
  if (!gb.empty() && f.variables() != gb.variables()) throw Error(ErrorCode::DimensionMismatch, "normal form");
  auto elems = elements_of(gb);
  Monomial p = f.plus, q = f.minus;
  reduce_in_place(p, elems);
  reduce_in_place(q, elems);
  if (p == q) return std::nullopt;
  return Binomial(std::move(p), std::move(q));
}

std::optional<Binomial> s_pair(const Binomial& g1, const Binomial& g2) {
  Monomial l = g1.plus.lcm(g2.plus);
  Monomial from_second = l / g2.plus * g2.minus;
  Monomial from_first = l / g1.plus * g1.minus;
  if (from_first == from_second) return std::nullopt;
  return Binomial(std::move(from_second), std::move(from_first));
}

MarkedReducedGB buchberger(const std::vector<Binomial>& generators, const MonomialOrder& order) {
  std::vector<engine::MarkedTerm> terms;
  terms.reserve(generators.size());
  for (const auto& g : generators) terms.push_back({g.plus, g.minus});
  std::vector<Binomial> out;
  for (auto& t : engine::reduced_basis(terms, order)) {
    if (!t.tail) throw Error(ErrorCode::BadParameters, "binomial generators produced a monomial");
    out.emplace_back(std::move(t.lead), std::move(*t.tail));
  }
  return MarkedReducedGB(std::move(out), order);
}

bool in_ideal(const Binomial& f, const MarkedReducedGB& gb) { return !normal_form(f, gb).has_value(); }

bool same_ideal(const std::vector<Binomial>& a, const std::vector<Binomial>& b) {
  if (a.empty() || b.empty()) return a.empty() == b.empty();
  const auto order = MonomialOrder::degrevlex(a.front().variables());
  auto ga = buchberger(a, order);
  auto gb = buchberger(b, order);
  return ga == gb;
}

}  // namespace toricmg
