#include "grady/groebner.hpp"

#include <algorithm>
#include <set>
#include <tuple>
#include <utility>

namespace grady {
namespace {

template <class F>
using Work = std::vector<Term<F>>;

template <class F>
Work<F> to_work(const Polynomial<F>& p, const TermOrder& order) {
  Work<F> w = p.terms();
  if (order.kind() != TermOrder::Kind::grevlex) {
    std::sort(w.begin(), w.end(),
              [&](const Term<F>& a, const Term<F>& b) { return order.greater(a.monomial, b.monomial); });
  }
  return w;
}

template <class F>
void make_monic(const F& k, Work<F>& w) {
  if (w.empty() || k.is_one(w.front().coeff)) return;
  auto inv = k.inv(w.front().coeff);
  for (auto& t : w) t.coeff = k.mul(t.coeff, inv);
}

// f[start..] − c·m·g, assuming the leading terms cancel (they are skipped).
template <class F>
Work<F> cancel_leading(const F& k, const Work<F>& f, std::size_t start, const typename F::value_type& c,
                       const Monomial& m, const Work<F>& g, const TermOrder& order) {
  Work<F> out;
  out.reserve(f.size() - start + g.size());
  std::size_t i = start + 1, j = 1;
  while (i < f.size() || j < g.size()) {
    if (j == g.size()) {
      out.push_back(f[i++]);
      continue;
    }
    Monomial gm = g[j].monomial * m;
    if (i == f.size()) {
      out.push_back({std::move(gm), k.neg(k.mul(c, g[j].coeff))});
      ++j;
      continue;
    }
    auto cmp = order.compare(f[i].monomial, gm);
    if (cmp > 0) {
      out.push_back(f[i++]);
    } else if (cmp < 0) {
      out.push_back({std::move(gm), k.neg(k.mul(c, g[j].coeff))});
      ++j;
    } else {
      auto coeff = k.sub(f[i].coeff, k.mul(c, g[j].coeff));
      if (!k.is_zero(coeff)) out.push_back({f[i].monomial, std::move(coeff)});
      ++i;
      ++j;
    }
  }
  return out;
}

// Full reduction of f by monic `basis` (index `skip` excluded).
template <class F>
Work<F> reduce(Work<F> f, const std::vector<Work<F>>& basis, const TermOrder& order, const F& k,
               std::size_t skip = static_cast<std::size_t>(-1)) {
  Work<F> rem;
  std::size_t start = 0;
  while (start < f.size()) {
    const Term<F>& lead = f[start];
    const Work<F>* divisor = nullptr;
    for (std::size_t b = 0; b < basis.size(); ++b) {
      if (b == skip) continue;
      if (basis[b].front().monomial.divides(lead.monomial)) {
        divisor = &basis[b];
        break;
      }
    }
    if (divisor) {
      auto c = lead.coeff;
      Monomial m = lead.monomial / divisor->front().monomial;
      f = cancel_leading(k, f, start, c, m, *divisor, order);
      start = 0;
    } else {
      rem.push_back(f[start++]);
    }
  }
  return rem;
}

template <class F>
Work<F> s_polynomial(const F& k, const Work<F>& a, const Work<F>& b, const TermOrder& order) {
  Monomial l = lcm(a.front().monomial, b.front().monomial);
  Monomial ma = l / a.front().monomial;
  Work<F> lifted;
  lifted.reserve(a.size());
  for (const auto& t : a) lifted.push_back({t.monomial * ma, t.coeff});
  return cancel_leading(k, lifted, 0, k.one(), l / b.front().monomial, b, order);
}

template <class F>
std::vector<Work<F>> buchberger(std::vector<Work<F>> input, const TermOrder& order, const F& k) {
  std::vector<Work<F>> g;
  struct Pair {
    Monomial lcm;
    std::size_t i, j;
  };
  auto pair_less = [&order](const Pair& a, const Pair& b) {
    auto c = order.compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    return std::tie(a.i, a.j) < std::tie(b.i, b.j);
  };
  std::set<Pair, decltype(pair_less)> queue(pair_less);
  std::set<std::pair<std::size_t, std::size_t>> pending;

  auto add = [&](Work<F> h) {
    make_monic(k, h);
    std::size_t idx = g.size();
    g.push_back(std::move(h));
    for (std::size_t i = 0; i < idx; ++i) {
      queue.insert({lcm(g[i].front().monomial, g[idx].front().monomial), i, idx});
      pending.insert({i, idx});
    }
  };

  for (auto& f : input) {
    auto h = reduce(std::move(f), g, order, k);
    if (!h.empty()) add(std::move(h));
  }

  while (!queue.empty()) {
    Pair p = *queue.begin();
    queue.erase(queue.begin());
    pending.erase({p.i, p.j});
    const Monomial& li = g[p.i].front().monomial;
    const Monomial& lj = g[p.j].front().monomial;
    if (coprime(li, lj)) continue;
    bool chain = false;
    for (std::size_t c = 0; c < g.size() && !chain; ++c) {
      if (c == p.i || c == p.j) continue;
      if (!g[c].front().monomial.divides(p.lcm)) continue;
      if (pending.count(std::minmax(p.i, c)) || pending.count(std::minmax(p.j, c))) continue;
      chain = true;
    }
    if (chain) continue;
    auto h = reduce(s_polynomial(k, g[p.i], g[p.j], order), g, order, k);
    if (!h.empty()) add(std::move(h));
  }

  // Minimalize, then reduce tails against the survivors.
  std::vector<Work<F>> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial& mi = g[i].front().monomial;
      const Monomial& mj = g[j].front().monomial;
      if (mj.divides(mi) && (mj != mi || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  std::vector<Work<F>> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    Work<F> tail(minimal[i].begin() + 1, minimal[i].end());
    Work<F> r{minimal[i].front()};
    auto rest = reduce(std::move(tail), minimal, order, k, i);
    r.insert(r.end(), rest.begin(), rest.end());
    reduced.push_back(std::move(r));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Work<F>& a, const Work<F>& b) {
    return order.compare(a.front().monomial, b.front().monomial) < 0;
  });
  return reduced;
}

template <class F>
std::vector<Work<F>> work_elements(const GroebnerBasis<F>& basis) {
  std::vector<Work<F>> out;
  for (const auto& e : basis.elements()) out.push_back(to_work(e, basis.order()));
  return out;
}

template <class F>
std::string fresh_name(const RingPtr<F>& ring, std::string base) {
  while (ring->index_of(base)) base += "'";
  return base;
}

// Drops the trailing variables of `big` (which must not occur in f).
template <class F>
Polynomial<F> contract(const Polynomial<F>& f, const RingPtr<F>& small) {
  std::vector<std::size_t> map(f.ring()->num_vars(), static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < small->num_vars(); ++i) map[i] = i;
  return relabel(f, small, map);
}

template <class F>
bool involves(const Polynomial<F>& f, std::size_t var) {
  for (const auto& t : f.terms())
    if (t.monomial[var]) return true;
  return false;
}

// Eliminates the trailing variables of `big`, returning generators in `small`.
template <class F>
Ideal<F> eliminate_trailing(const RingPtr<F>& big, const RingPtr<F>& small, std::vector<Polynomial<F>> gens) {
  std::vector<bool> mask(big->num_vars(), false);
  for (std::size_t v = small->num_vars(); v < big->num_vars(); ++v) mask[v] = true;
  auto gb = groebner_basis<F>(big, gens, TermOrder::elimination(mask));
  std::vector<Polynomial<F>> kept;
  for (const auto& e : gb.elements()) {
    bool free = true;
    for (std::size_t v = small->num_vars(); v < big->num_vars() && free; ++v) free = !involves(e, v);
    if (free) kept.push_back(contract(e, small));
  }
  return Ideal<F>(small, std::move(kept));
}

}  // namespace

template <class F>
GroebnerBasis<F> groebner_basis(const RingPtr<F>& ring, std::span<const Polynomial<F>> generators,
                                const TermOrder& order) {
  std::vector<Work<F>> input;
  for (const auto& f : generators) {
    if (!same_ring(f.ring(), ring)) throw RingMismatch();
    if (!f.is_zero()) input.push_back(to_work(f, order));
  }
  auto reduced = buchberger(std::move(input), order, ring->field());
  std::vector<Polynomial<F>> elements;
  elements.reserve(reduced.size());
  for (auto& w : reduced) elements.emplace_back(ring, std::move(w));
  return GroebnerBasis<F>(ring, order, std::move(elements));
}

template <class F>
GroebnerBasis<F> groebner_basis(const Ideal<F>& ideal, const TermOrder& order) {
  if (order == TermOrder::grevlex()) return ideal.basis();
  return groebner_basis<F>(ideal.ring(), ideal.generators(), order);
}

template <class F>
Polynomial<F> normal_form(const Polynomial<F>& f, const GroebnerBasis<F>& basis) {
  if (!same_ring(f.ring(), basis.ring())) throw RingMismatch();
  auto rem = reduce(to_work(f, basis.order()), work_elements(basis), basis.order(), basis.ring()->field());
  return Polynomial<F>(basis.ring(), std::move(rem));
}

template <class F>
bool satisfies_buchberger_criterion(const GroebnerBasis<F>& basis) {
  auto g = work_elements(basis);
  const F& k = basis.ring()->field();
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      if (!reduce(s_polynomial(k, g[i], g[j], basis.order()), g, basis.order(), k).empty()) return false;
  return true;
}

template <class F>
bool is_reduced(const GroebnerBasis<F>& basis) {
  auto g = work_elements(basis);
  const F& k = basis.ring()->field();
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i].empty() || !k.is_one(g[i].front().coeff)) return false;
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : g[i])
        if (g[j].front().monomial.divides(t.monomial)) return false;
    }
  }
  return true;
}

template <class F>
Ideal<F>::Ideal(RingPtr<F> ring, std::vector<Polynomial<F>> generators)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  for (auto& g : generators) {
    if (!same_ring(g.ring(), ring_)) throw RingMismatch();
    if (!g.is_zero()) generators_.push_back(std::move(g));
  }
}

template <class F>
Ideal<F>::Ideal(const GroebnerBasis<F>& basis) : Ideal(basis.ring(), basis.elements()) {
  if (basis.order() == TermOrder::grevlex()) {
    std::call_once(cache_->once, [&] { cache_->basis = basis; });
  }
}

template <class F>
const GroebnerBasis<F>& Ideal<F>::basis() const {
  std::call_once(cache_->once, [this] {
    cache_->basis = groebner_basis<F>(ring_, generators_, TermOrder::grevlex());
  });
  return *cache_->basis;
}

template <class F>
bool Ideal<F>::contains(const Polynomial<F>& f) const {
  if (f.is_zero()) return true;
  return normal_form(f, basis()).is_zero();
}

template <class F>
bool Ideal<F>::contains(const Ideal& other) const {
  if (!same_ring(ring_, other.ring_)) throw RingMismatch();
  for (const auto& g : other.basis().elements())
    if (!contains(g)) return false;
  return true;
}

template <class F>
bool ideal_equal(const Ideal<F>& i, const Ideal<F>& j) {
  if (!same_ring(i.ring(), j.ring())) throw RingMismatch();
  return i.basis().elements() == j.basis().elements();
}

template <class F>
Ideal<F> sum(const Ideal<F>& i, const Ideal<F>& j) {
  auto gens = i.generators();
  gens.insert(gens.end(), j.generators().begin(), j.generators().end());
  return Ideal<F>(i.ring(), std::move(gens));
}

template <class F>
Ideal<F> product(const Ideal<F>& i, const Ideal<F>& j) {
  std::vector<Polynomial<F>> gens;
  for (const auto& a : i.basis().elements())
    for (const auto& b : j.basis().elements()) gens.push_back(a * b);
  return Ideal<F>(i.ring(), std::move(gens));
}

template <class F>
Ideal<F> power(const Ideal<F>& i, unsigned n) {
  Ideal<F> result = Ideal<F>::unit(i.ring());
  for (unsigned e = 0; e < n; ++e) result = product(result, i);
  return result;
}

template <class F>
Ideal<F> intersect(const Ideal<F>& i, const Ideal<F>& j) {
  if (!same_ring(i.ring(), j.ring())) throw RingMismatch();
  if (i.is_zero() || j.is_zero()) return Ideal<F>::zero(i.ring());
  if (i.is_unit()) return j;
  if (j.is_unit()) return i;
  const auto& ring = i.ring();
  auto big = extend_ring(ring, {fresh_name(ring, "@t")});
  auto t = Polynomial<F>::variable(big, ring->num_vars());
  auto one_minus_t = Polynomial<F>::one(big) - t;
  std::vector<Polynomial<F>> gens;
  for (const auto& f : i.basis().elements()) gens.push_back(t * embed(f, big));
  for (const auto& g : j.basis().elements()) gens.push_back(one_minus_t * embed(g, big));
  return eliminate_trailing(big, ring, std::move(gens));
}

template <class F>
Ideal<F> intersect_all(const RingPtr<F>& ring, std::span<const Ideal<F>> ideals) {
  Ideal<F> acc = Ideal<F>::unit(ring);
  for (const auto& i : ideals) acc = intersect(acc, i);
  return acc;
}

template <class F>
Polynomial<F> exact_divide(const Polynomial<F>& f, const Polynomial<F>& g) {
  if (g.is_zero()) throw DomainError("division by the zero polynomial");
  const auto order = TermOrder::grevlex();
  const F& k = f.field();
  Polynomial<F> quotient(f.ring()), rest = f;
  const auto& lg = g.leading_term(order);
  auto inv = k.inv(lg.coeff);
  while (!rest.is_zero()) {
    const auto& lr = rest.leading_term(order);
    if (!lg.monomial.divides(lr.monomial)) throw DomainError("polynomial is not divisible");
    Monomial m = lr.monomial / lg.monomial;
    auto c = k.mul(lr.coeff, inv);
    quotient += Polynomial<F>::monomial(f.ring(), m).scaled(c);
    rest -= g.times_term(m, c);
  }
  return quotient;
}

template <class F>
Ideal<F> colon(const Ideal<F>& i, const Polynomial<F>& f) {
  if (f.is_zero()) throw DomainError("colon by the zero ideal");
  auto meet = intersect(i, Ideal<F>(i.ring(), {f}));
  std::vector<Polynomial<F>> gens;
  for (const auto& g : meet.basis().elements()) gens.push_back(exact_divide(g, f));
  return Ideal<F>(i.ring(), std::move(gens));
}

template <class F>
Ideal<F> colon(const Ideal<F>& i, const Ideal<F>& j) {
  if (!same_ring(i.ring(), j.ring())) throw RingMismatch();
  const auto& gens = j.basis().elements();
  if (gens.empty()) throw DomainError("colon by the zero ideal");
  std::vector<Ideal<F>> parts;
  for (const auto& g : gens) parts.push_back(colon(i, g));
  return intersect_all<F>(i.ring(), parts);
}

template <class F>
Saturation<F> saturate(const Ideal<F>& i, const Polynomial<F>& f) {
  if (f.is_zero()) throw DomainError("saturation by the zero polynomial");
  const auto& ring = i.ring();
  auto big = extend_ring(ring, {fresh_name(ring, "@z")});
  auto z = Polynomial<F>::variable(big, ring->num_vars());
  std::vector<Polynomial<F>> gens;
  for (const auto& g : i.basis().elements()) gens.push_back(embed(g, big));
  gens.push_back(Polynomial<F>::one(big) - z * embed(f, big));
  Ideal<F> sat = eliminate_trailing(big, ring, std::move(gens));

  constexpr unsigned cap = 64;
  Ideal<F> current = i;
  unsigned n = 0;
  while (!ideal_equal(current, sat)) {
    if (++n > cap) throw Error("saturation exponent did not stabilize within 64 colons");
    current = colon(current, f);
  }
  return {sat, n};
}

template <class F>
Ideal<F> eliminate(const Ideal<F>& i, std::span<const std::size_t> variables) {
  const auto& ring = i.ring();
  if (variables.empty()) return Ideal<F>(i.basis());
  std::vector<bool> mask(ring->num_vars(), false);
  for (auto v : variables) {
    if (v >= ring->num_vars()) throw DomainError("elimination variable out of range");
    mask[v] = true;
  }
  auto gb = groebner_basis<F>(ring, i.generators(), TermOrder::elimination(mask));
  std::vector<Polynomial<F>> kept;
  for (const auto& e : gb.elements()) {
    bool free = true;
    for (auto v : variables) free = free && !involves(e, v);
    if (free) kept.push_back(e);
  }
  return Ideal<F>(ring, std::move(kept));
}

template <class F>
bool radical_member(const Polynomial<F>& f, const Ideal<F>& i) {
  if (f.is_zero()) return true;
  const auto& ring = i.ring();
  auto big = extend_ring(ring, {fresh_name(ring, "@z")});
  auto z = Polynomial<F>::variable(big, ring->num_vars());
  std::vector<Polynomial<F>> gens;
  for (const auto& g : i.basis().elements()) gens.push_back(embed(g, big));
  gens.push_back(Polynomial<F>::one(big) - z * embed(f, big));
  return groebner_basis<F>(big, gens, TermOrder::grevlex()).is_unit();
}

#define GRADY_INSTANTIATE(F)                                                                       \
  template GroebnerBasis<F> groebner_basis(const RingPtr<F>&, std::span<const Polynomial<F>>,      \
                                           const TermOrder&);                                      \
  template GroebnerBasis<F> groebner_basis(const Ideal<F>&, const TermOrder&);                     \
  template Polynomial<F> normal_form(const Polynomial<F>&, const GroebnerBasis<F>&);               \
  template bool satisfies_buchberger_criterion(const GroebnerBasis<F>&);                           \
  template bool is_reduced(const GroebnerBasis<F>&);                                               \
  template class Ideal<F>;                                                                         \
  template bool ideal_equal(const Ideal<F>&, const Ideal<F>&);                                     \
  template Ideal<F> sum(const Ideal<F>&, const Ideal<F>&);                                         \
  template Ideal<F> product(const Ideal<F>&, const Ideal<F>&);                                     \
  template Ideal<F> power(const Ideal<F>&, unsigned);                                              \
  template Ideal<F> intersect(const Ideal<F>&, const Ideal<F>&);                                   \
  template Ideal<F> intersect_all(const RingPtr<F>&, std::span<const Ideal<F>>);                   \
  template Polynomial<F> exact_divide(const Polynomial<F>&, const Polynomial<F>&);                 \
  template Ideal<F> colon(const Ideal<F>&, const Polynomial<F>&);                                  \
  template Ideal<F> colon(const Ideal<F>&, const Ideal<F>&);                                       \
  template Saturation<F> saturate(const Ideal<F>&, const Polynomial<F>&);                          \
  template Ideal<F> eliminate(const Ideal<F>&, std::span<const std::size_t>);                      \
  template bool radical_member(const Polynomial<F>&, const Ideal<F>&);

GRADY_INSTANTIATE(Rationals)
GRADY_INSTANTIATE(PrimeField)

}  // namespace grady
