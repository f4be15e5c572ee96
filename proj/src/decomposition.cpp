#include "grady/decomposition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <type_traits>

namespace grady {
namespace {

// ---------------------------------------------------------------------------
// Monomial ideals as minimal generator lists.

using Gens = std::vector<Monomial>;

Gens minimalize(Gens gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  Gens out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j)
      if (i != j && gens[j].divides(gens[i])) redundant = true;
    if (!redundant) out.push_back(gens[i]);
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

// a ⊆ b
bool monomial_subset(const Gens& a, const Gens& b) {
  for (const auto& m : a) {
    bool hit = false;
    for (const auto& g : b)
      if (g.divides(m)) {
        hit = true;
        break;
      }
    if (!hit) return false;
  }
  return true;
}

Gens monomial_intersect(const Gens& a, const Gens& b) {
  Gens out;
  for (const auto& x : a)
    for (const auto& y : b) out.push_back(lcm(x, y));
  return minimalize(std::move(out));
}

Monomial support_of(const Gens& gens, std::size_t n) {
  Monomial s(n);
  for (const auto& g : gens)
    for (std::size_t i = 0; i < n; ++i)
      if (g[i]) s[i] = 1;
  return s;
}

bool is_monomial_primary(const Gens& gens, std::size_t n) {
  Monomial s = support_of(gens, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!s[i]) continue;
    bool pure = false;
    for (const auto& g : gens)
      if (g[i] && g.support_size() == 1) pure = true;
    if (!pure) return false;
  }
  return true;
}

void split_irreducible(const Gens& gens, std::vector<Gens>& leaves) {
  for (const auto& m : gens) {
    if (m.support_size() < 2) continue;
    std::size_t var = 0;
    while (!m[var]) ++var;
    Monomial u = Monomial::variable(m.size(), var, m[var]);
    Monomial v = m / u;
    Gens left = gens, right = gens;
    left.push_back(u);
    right.push_back(v);
    split_irreducible(minimalize(std::move(left)), leaves);
    split_irreducible(minimalize(std::move(right)), leaves);
    return;
  }
  leaves.push_back(gens);
}

struct MonomialComponent {
  Gens gens;
  Monomial support;
};

std::vector<MonomialComponent> monomial_components(const Gens& ideal_gens, std::size_t n) {
  std::vector<Gens> leaves;
  split_irreducible(minimalize(ideal_gens), leaves);
  std::sort(leaves.begin(), leaves.end());
  leaves.erase(std::unique(leaves.begin(), leaves.end()), leaves.end());
  std::vector<Gens> irredundant;
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < leaves.size() && !redundant; ++j)
      if (i != j && monomial_subset(leaves[j], leaves[i])) redundant = true;
    if (!redundant) irredundant.push_back(leaves[i]);
  }
  std::map<Monomial, Gens> groups;
  for (const auto& leaf : irredundant) {
    Monomial s = support_of(leaf, n);
    auto it = groups.find(s);
    if (it == groups.end()) {
      groups.emplace(s, leaf);
    } else {
      it->second = monomial_intersect(it->second, leaf);
    }
  }
  std::vector<MonomialComponent> out;
  for (auto& [s, g] : groups) out.push_back({g, s});
  std::sort(out.begin(), out.end(), [](const MonomialComponent& a, const MonomialComponent& b) {
    if (a.support.degree() != b.support.degree()) return a.support.degree() < b.support.degree();
    return a.support > b.support;
  });
  return out;
}

template <class F>
Ideal<F> to_ideal(const RingPtr<F>& ring, const Gens& gens) {
  std::vector<Polynomial<F>> polys;
  for (const auto& g : gens) polys.push_back(Polynomial<F>::monomial(ring, g));
  return Ideal<F>(ring, std::move(polys));
}

template <class F>
Decomposition<F> assemble(const Ideal<F>& target, const std::vector<MonomialComponent>& comps) {
  Decomposition<F> d{target, {}, false};
  const auto& ring = target.ring();
  for (const auto& c : comps) {
    Gens rad;
    for (std::size_t i = 0; i < c.support.size(); ++i)
      if (c.support[i]) rad.push_back(Monomial::variable(c.support.size(), i));
    d.components.push_back({to_ideal(ring, c.gens), to_ideal(ring, rad), Provenance::verified});
  }
  d.minimal = is_minimal_decomposition(d);
  return d;
}

template <class F>
void require_proper_monomial(const Ideal<F>& ideal) {
  if (!is_monomial_ideal(ideal)) throw DomainError("ideal is not monomial");
  if (ideal.is_unit()) throw DomainError("the unit ideal has no primary decomposition");
}

// ---------------------------------------------------------------------------
// Dense univariate arithmetic, coefficients low to high, no trailing zeros.

template <class F>
using Dense = std::vector<typename F::value_type>;

template <class F>
void trim(const F& k, Dense<F>& a) {
  while (!a.empty() && k.is_zero(a.back())) a.pop_back();
}

template <class F>
Dense<F> to_dense(const Polynomial<F>& f) {
  const F& k = f.field();
  Dense<F> a;
  for (const auto& t : f.terms()) {
    std::size_t e = t.monomial[0];
    if (a.size() <= e) a.resize(e + 1, k.zero());
    a[e] = t.coeff;
  }
  trim(k, a);
  return a;
}

template <class F>
Polynomial<F> from_dense(const RingPtr<F>& ring, const Dense<F>& a) {
  std::vector<Term<F>> terms;
  for (std::size_t e = 0; e < a.size(); ++e)
    terms.push_back({Monomial{static_cast<Monomial::exponent_type>(e)}, a[e]});
  return Polynomial<F>(ring, std::move(terms));
}

// a = q·b + r
template <class F>
std::pair<Dense<F>, Dense<F>> divmod(const F& k, Dense<F> a, const Dense<F>& b) {
  if (b.empty()) throw DomainError("division by zero polynomial");
  if (a.size() < b.size()) return {Dense<F>{}, a};
  Dense<F> q(a.size() - b.size() + 1, k.zero());
  auto inv = k.inv(b.back());
  for (std::size_t i = a.size(); i-- >= b.size();) {
    auto c = k.mul(a[i], inv);
    q[i - (b.size() - 1)] = c;
    if (k.is_zero(c)) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      a[i - (b.size() - 1) + j] = k.sub(a[i - (b.size() - 1) + j], k.mul(c, b[j]));
  }
  trim(k, a);
  trim(k, q);
  return {q, a};
}

template <class F>
Dense<F> monic(const F& k, Dense<F> a) {
  if (a.empty()) return a;
  auto inv = k.inv(a.back());
  for (auto& c : a) c = k.mul(c, inv);
  return a;
}

template <class F>
Dense<F> gcd(const F& k, Dense<F> a, Dense<F> b) {
  while (!b.empty()) {
    auto r = divmod(k, a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(k, a);
}

template <class F>
Dense<F> derivative(const F& k, const Dense<F>& a) {
  Dense<F> d;
  for (std::size_t e = 1; e < a.size(); ++e) d.push_back(k.mul(k.from_integer(mpz_class(static_cast<unsigned long>(e))), a[e]));
  trim(k, d);
  return d;
}

template <class F>
Dense<F> squarefree_part(const F& k, const Dense<F>& a) {
  auto d = derivative(k, a);
  if (d.empty()) return monic(k, a);  // only reachable in characteristic p for p-th powers
  return monic(k, divmod(k, a, gcd(k, a, d)).first);
}

template <class F>
std::size_t degree(const Dense<F>& a) {
  return a.empty() ? 0 : a.size() - 1;
}

// Trial division by monic polynomials of ascending degree over F_p.
std::vector<std::pair<Dense<PrimeField>, unsigned>> factor_prime_field(const PrimeField& k, Dense<PrimeField> f) {
  std::vector<std::pair<Dense<PrimeField>, unsigned>> out;
  const std::uint64_t p = k.characteristic();
  constexpr std::uint64_t budget = 4'000'000;
  std::uint64_t spent = 0;
  for (std::size_t d = 1; 2 * d <= degree<PrimeField>(f); ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) {
      count *= p;
      if (count > budget) throw UnsupportedClass("univariate factorization exceeds the trial-division budget");
    }
    spent += count;
    if (spent > budget) throw UnsupportedClass("univariate factorization exceeds the trial-division budget");
    Dense<PrimeField> g(d + 1, 0);
    g[d] = 1;
    for (std::uint64_t code = 0; code < count && 2 * d <= degree<PrimeField>(f); ++code) {
      std::uint64_t c = code;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      unsigned mult = 0;
      for (;;) {
        auto [q, r] = divmod(k, f, g);
        if (!r.empty()) break;
        f = std::move(q);
        ++mult;
      }
      if (mult) out.push_back({g, mult});
    }
  }
  if (degree<PrimeField>(f) > 0) out.push_back({monic(k, f), 1});
  return out;
}

std::vector<mpz_class> divisors(mpz_class n, bool& ok) {
  n = abs(n);
  std::vector<mpz_class> out;
  if (n > mpz_class("1000000000000")) {
    ok = false;
    return out;
  }
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  }
  return out;
}

struct RationalFactors {
  std::vector<std::pair<Dense<Rationals>, unsigned>> resolved;
  Dense<Rationals> leftover;  // monic, no rational roots; empty or constant when none
  bool leftover_irreducible = false;
};

RationalFactors factor_rationals(const Rationals& k, Dense<Rationals> f) {
  RationalFactors out;
  f = monic(k, f);
  auto take_root = [&](const mpq_class& r) {
    Dense<Rationals> lin{-r, mpq_class(1)};
    unsigned mult = 0;
    for (;;) {
      auto [q, rem] = divmod(k, f, lin);
      if (!rem.empty()) break;
      f = std::move(q);
      ++mult;
    }
    if (mult) out.resolved.push_back({lin, mult});
  };
  if (!f.empty() && k.is_zero(f[0])) take_root(mpq_class(0));

  Dense<Rationals> sqf = squarefree_part(k, f);
  bool searchable = true;
  if (degree<Rationals>(sqf) > 0) {
    mpz_class den = 1;
    for (const auto& c : sqf) den = lcm(den, c.get_den());
    std::vector<mpz_class> ints;
    for (const auto& c : sqf) ints.push_back(mpz_class(c * den));
    auto ps = divisors(ints.front(), searchable);
    auto qs = divisors(ints.back(), searchable);
    if (searchable) {
      std::vector<mpq_class> candidates;
      for (const auto& p : ps)
        for (const auto& q : qs) {
          mpq_class r(p, q);
          r.canonicalize();
          candidates.push_back(r);
          candidates.push_back(-r);
        }
      std::sort(candidates.begin(), candidates.end());
      candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
      for (const auto& r : candidates) {
        mpq_class v = 0;
        for (std::size_t e = sqf.size(); e-- > 0;) v = v * r + sqf[e];
        if (v == 0) take_root(r);
      }
    }
  }
  if (degree<Rationals>(f) > 0) {
    out.leftover = f;
    // Without rational roots, a squarefree part of degree ≤ 3 is irreducible.
    out.leftover_irreducible = searchable && degree<Rationals>(squarefree_part(k, f)) <= 3;
  }
  return out;
}

template <class F>
bool is_linear_coordinate_prime(const Ideal<F>& p, std::size_t& generators) {
  std::vector<bool> seen(p.ring()->num_vars(), false);
  for (const auto& g : p.basis().elements()) {
    if (g.total_degree() != 1) return false;
    std::size_t vars = 0, var = 0;
    for (const auto& t : g.terms())
      if (!t.monomial.is_one()) ++vars, var = std::find(t.monomial.exponents().begin(), t.monomial.exponents().end(), 1u) - t.monomial.exponents().begin();
    if (vars != 1 || seen[var]) return false;
    seen[var] = true;
  }
  generators = p.basis().elements().size();
  return true;
}

}  // namespace

template <class F>
bool is_monomial_ideal(const Ideal<F>& ideal) {
  for (const auto& g : ideal.basis().elements())
    if (!g.is_monomial()) return false;
  return true;
}

template <class F>
std::vector<Monomial> monomial_generators(const Ideal<F>& ideal) {
  if (!is_monomial_ideal(ideal)) throw DomainError("ideal is not monomial");
  Gens g;
  for (const auto& e : ideal.basis().elements()) g.push_back(e.terms().front().monomial);
  return minimalize(std::move(g));
}

template <class F>
Ideal<F> monomial_radical(const Ideal<F>& ideal) {
  Gens g;
  for (const auto& m : monomial_generators(ideal)) g.push_back(m.support());
  return to_ideal(ideal.ring(), minimalize(std::move(g)));
}

template <class F>
Decomposition<F> monomial_primary_decomposition(const Ideal<F>& ideal) {
  require_proper_monomial(ideal);
  return assemble(ideal, monomial_components(monomial_generators(ideal), ideal.ring()->num_vars()));
}

template <class F>
std::optional<Decomposition<F>> thickened_monomial_decomposition(const Ideal<F>& ideal) {
  require_proper_monomial(ideal);
  const std::size_t n = ideal.ring()->num_vars();
  Gens gens = monomial_generators(ideal);
  auto comps = monomial_components(gens, n);
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const Monomial& s = comps[i].support;
    bool embedded = false;
    for (std::size_t j = 0; j < comps.size(); ++j)
      if (j != i && comps[j].support.divides(s) && comps[j].support != s) embedded = true;
    if (!embedded) continue;

    Gens localized;
    for (auto m : gens) {
      for (std::size_t v = 0; v < n; ++v)
        if (!s[v]) m[v] = 0;
      localized.push_back(m);
    }
    Gens others{Monomial(n)};
    for (std::size_t j = 0; j < comps.size(); ++j)
      if (j != i) others = monomial_intersect(others, comps[j].gens);
    const Gens target = minimalize(gens);
    Gens power{Monomial(n)};
    for (unsigned k = 1; k <= 64; ++k) {
      Gens next;
      for (const auto& m : power)
        for (std::size_t v = 0; v < n; ++v)
          if (s[v]) next.push_back(m * Monomial::variable(n, v));
      power = minimalize(std::move(next));
      Gens candidate = localized;
      candidate.insert(candidate.end(), power.begin(), power.end());
      candidate = minimalize(std::move(candidate));
      if (candidate == comps[i].gens) continue;
      if (monomial_intersect(others, candidate) != target) continue;
      auto alt = comps;
      alt[i].gens = candidate;
      return assemble(ideal, alt);
    }
  }
  return std::nullopt;
}

template <class F>
std::vector<Ideal<F>> monomial_associated_primes(const Ideal<F>& ideal) {
  auto d = monomial_primary_decomposition(ideal);
  std::vector<Ideal<F>> out;
  for (const auto& c : d.components) out.push_back(c.radical);
  return out;
}

template <class F>
std::vector<Ideal<F>> monomial_minimal_primes(const Ideal<F>& ideal) {
  return minimal_primes(monomial_primary_decomposition(ideal));
}

template <class F>
std::size_t monomial_dimension(const Ideal<F>& ideal) {
  require_proper_monomial(ideal);
  const std::size_t n = ideal.ring()->num_vars();
  std::size_t best = n;
  for (const auto& c : monomial_components(monomial_generators(ideal), n))
    best = std::min<std::size_t>(best, c.support.degree());
  return n - best;
}

template <class F>
Decomposition<F> univariate_primary_decomposition(const Ideal<F>& ideal, bool require_verified) {
  const auto& ring = ideal.ring();
  if (ring->num_vars() != 1) throw DomainError("univariate decomposition needs a one-variable ring");
  const auto& basis = ideal.basis().elements();
  if (basis.empty()) throw DomainError("univariate decomposition of the zero ideal");
  if (ideal.is_unit()) throw DomainError("the unit ideal has no primary decomposition");
  const F& k = ring->field();
  Dense<F> f = to_dense(basis.front());

  Decomposition<F> d{ideal, {}, false};
  auto push = [&](const Dense<F>& p, unsigned e, Provenance status) {
    Dense<F> power{k.one()};
    for (unsigned i = 0; i < e; ++i) {
      Dense<F> next(power.size() + p.size() - 1, k.zero());
      for (std::size_t a = 0; a < power.size(); ++a)
        for (std::size_t b = 0; b < p.size(); ++b) next[a + b] = k.add(next[a + b], k.mul(power[a], p[b]));
      power = std::move(next);
    }
    d.components.push_back({Ideal<F>(ring, {from_dense(ring, power)}), Ideal<F>(ring, {from_dense(ring, p)}), status});
  };

  if constexpr (std::is_same_v<F, PrimeField>) {
    for (const auto& [p, e] : factor_prime_field(k, f)) push(p, e, Provenance::verified);
  } else {
    auto factors = factor_rationals(k, f);
    for (const auto& [p, e] : factors.resolved) push(p, e, Provenance::verified);
    if (degree<F>(factors.leftover) > 0) {
      auto rad = squarefree_part(k, factors.leftover);
      bool verified = factors.leftover_irreducible;
      if (!verified && require_verified)
        throw UnsupportedClass("univariate polynomial over Q has an unresolved nonlinear factor");
      d.components.push_back({Ideal<F>(ring, {from_dense(ring, factors.leftover)}), Ideal<F>(ring, {from_dense(ring, rad)}),
                              verified ? Provenance::verified : Provenance::assumed});
    }
  }
  d.minimal = is_minimal_decomposition(d);
  return d;
}

template <class F>
Decomposition<F> certified_decomposition(const Ideal<F>& ideal, std::span<const CertificateComponent<F>> components) {
  const auto& ring = ideal.ring();
  std::vector<Ideal<F>> parts;
  for (const auto& c : components) parts.push_back(c.component);
  if (!ideal_equal(intersect_all<F>(ring, parts), ideal))
    throw DomainError("certificate components do not intersect to the target ideal");

  Decomposition<F> d{ideal, {}, false};
  for (const auto& c : components) {
    const auto& q = c.component;
    if (q.is_unit()) throw DomainError("certificate component is the unit ideal");
    if (is_monomial_ideal(q)) {
      auto gens = monomial_generators(q);
      if (!is_monomial_primary(gens, ring->num_vars())) throw DomainError("monomial certificate component is not primary");
      d.components.push_back({q, monomial_radical(q), Provenance::verified});
      continue;
    }
    if (ring->num_vars() == 1) {
      auto sub = univariate_primary_decomposition(q);
      if (sub.components.size() != 1) throw DomainError("certificate component is not primary");
      d.components.push_back(sub.components.front());
      continue;
    }
    // Primary to a rational point: the radical is maximal, so q is primary
    // as soon as the point's ideal lies in √q.
    Ideal<F> point = c.radical ? *c.radical : [&] {
      std::vector<Polynomial<F>> vars;
      for (std::size_t i = 0; i < ring->num_vars(); ++i) vars.push_back(Polynomial<F>::variable(ring, i));
      return Ideal<F>(ring, std::move(vars));
    }();
    std::size_t count = 0;
    if (is_linear_coordinate_prime(point, count) && count == ring->num_vars()) {
      bool inside = true;
      for (const auto& g : point.basis().elements()) inside = inside && radical_member(g, q);
      if (inside) {
        d.components.push_back({q, point, Provenance::verified});
        continue;
      }
      if (!c.radical) throw UnsupportedClass("cannot determine the radical of a certificate component");
    }
    if (!c.radical) throw UnsupportedClass("cannot determine the radical of a certificate component");
    d.components.push_back({q, *c.radical, Provenance::assumed});
  }
  d.minimal = is_minimal_decomposition(d);
  return d;
}

template <class F>
Decomposition<F> classical_decomposition(const Ideal<F>& ideal, std::span<const CertificateComponent<F>> certificate) {
  if (ideal.is_unit()) throw DomainError("the unit ideal has no primary decomposition");
  if (!certificate.empty()) return certified_decomposition(ideal, certificate);
  if (is_monomial_ideal(ideal)) return monomial_primary_decomposition(ideal);
  if (ideal.ring()->num_vars() == 1) return univariate_primary_decomposition(ideal);
  throw UnsupportedClass("no primary decomposition available: ideal is neither monomial nor univariate");
}

template <class F>
bool intersects_to_target(const Decomposition<F>& d) {
  std::vector<Ideal<F>> parts;
  for (const auto& c : d.components) parts.push_back(c.component);
  return ideal_equal(intersect_all<F>(d.target.ring(), parts), d.target);
}

template <class F>
bool is_minimal_decomposition(const Decomposition<F>& d) {
  const auto& comps = d.components;
  for (std::size_t i = 0; i < comps.size(); ++i)
    for (std::size_t j = i + 1; j < comps.size(); ++j)
      if (ideal_equal(comps[i].radical, comps[j].radical)) return false;
  if (comps.size() < 2) return true;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    std::vector<Ideal<F>> rest;
    for (std::size_t j = 0; j < comps.size(); ++j)
      if (j != i) rest.push_back(comps[j].component);
    if (ideal_equal(intersect_all<F>(d.target.ring(), rest), d.target)) return false;
  }
  return true;
}

template <class F>
std::vector<Ideal<F>> dedupe(std::vector<Ideal<F>> ideals) {
  std::vector<Ideal<F>> out;
  for (auto& i : ideals) {
    bool seen = false;
    for (const auto& o : out) seen = seen || ideal_equal(o, i);
    if (!seen) out.push_back(std::move(i));
  }
  return out;
}

template <class F>
bool same_ideal_set(const std::vector<Ideal<F>>& a, const std::vector<Ideal<F>>& b) {
  auto in = [](const Ideal<F>& x, const std::vector<Ideal<F>>& s) {
    for (const auto& y : s)
      if (ideal_equal(x, y)) return true;
    return false;
  };
  for (const auto& x : a)
    if (!in(x, b)) return false;
  for (const auto& y : b)
    if (!in(y, a)) return false;
  return true;
}

template <class F>
std::vector<Ideal<F>> associated_primes(const Decomposition<F>& d) {
  std::vector<Ideal<F>> rads;
  for (const auto& c : d.components) rads.push_back(c.radical);
  return dedupe(std::move(rads));
}

template <class F>
std::vector<Ideal<F>> minimal_primes(const Decomposition<F>& d) {
  auto ass = associated_primes(d);
  std::vector<Ideal<F>> out;
  for (std::size_t i = 0; i < ass.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < ass.size() && minimal; ++j)
      if (i != j && ideal_subset(ass[j], ass[i])) minimal = false;
    if (minimal) out.push_back(ass[i]);
  }
  return out;
}

template <class F>
std::optional<std::size_t> prime_dimension(const Ideal<F>& prime) {
  const std::size_t n = prime.ring()->num_vars();
  if (prime.is_unit()) return std::nullopt;
  std::size_t count = 0;
  if (is_linear_coordinate_prime(prime, count)) return n - count;
  if (n == 1 && prime.basis().elements().size() == 1) return 0;
  return std::nullopt;
}

#define GRADY_INSTANTIATE(F)                                                                               \
  template bool is_monomial_ideal(const Ideal<F>&);                                                        \
  template std::vector<Monomial> monomial_generators(const Ideal<F>&);                                     \
  template Ideal<F> monomial_radical(const Ideal<F>&);                                                     \
  template Decomposition<F> monomial_primary_decomposition(const Ideal<F>&);                               \
  template std::optional<Decomposition<F>> thickened_monomial_decomposition(const Ideal<F>&);              \
  template std::vector<Ideal<F>> monomial_associated_primes(const Ideal<F>&);                              \
  template std::vector<Ideal<F>> monomial_minimal_primes(const Ideal<F>&);                                 \
  template std::size_t monomial_dimension(const Ideal<F>&);                                                \
  template Decomposition<F> univariate_primary_decomposition(const Ideal<F>&, bool);                       \
  template Decomposition<F> certified_decomposition(const Ideal<F>&, std::span<const CertificateComponent<F>>); \
  template Decomposition<F> classical_decomposition(const Ideal<F>&, std::span<const CertificateComponent<F>>); \
  template bool intersects_to_target(const Decomposition<F>&);                                             \
  template bool is_minimal_decomposition(const Decomposition<F>&);                                         \
  template std::vector<Ideal<F>> dedupe(std::vector<Ideal<F>>);                                            \
  template bool same_ideal_set(const std::vector<Ideal<F>>&, const std::vector<Ideal<F>>&);                \
  template std::vector<Ideal<F>> associated_primes(const Decomposition<F>&);                               \
  template std::vector<Ideal<F>> minimal_primes(const Decomposition<F>&);                                  \
  template std::optional<std::size_t> prime_dimension(const Ideal<F>&);

GRADY_INSTANTIATE(Rationals)
GRADY_INSTANTIATE(PrimeField)

}  // namespace grady
