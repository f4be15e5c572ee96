#include "grady/g_theory.hpp"

#include <algorithm>
#include <functional>

namespace grady {
namespace {

template <class F>
void require_g_ideal(const Ideal<F>& ideal, const GradedRing<F>& ring) {
  if (!same_ring(ideal.ring(), ring.ring)) throw RingMismatch();
  if (!is_g_ideal(ideal, ring)) throw DomainError("ideal is not homogeneous for the grading");
}

template <class F>
std::string basis_key(const Ideal<F>& ideal) {
  std::string s;
  for (const auto& g : ideal.basis().elements()) s += g.to_string() + ";";
  return s;
}

template <class F>
Ideal<F> intersect_components(const RingPtr<F>& ring, const std::vector<GPrimaryComponent<F>>& comps,
                              std::size_t skip = static_cast<std::size_t>(-1)) {
  std::vector<Ideal<F>> parts;
  for (std::size_t j = 0; j < comps.size(); ++j)
    if (j != skip) parts.push_back(comps[j].component);
  return intersect_all<F>(ring, parts);
}

template <class F>
bool g_minimal(const GDecomposition<F>& d) {
  const auto& c = d.components;
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j)
      if (ideal_equal(c[i].g_radical, c[j].g_radical)) return false;
  if (c.size() < 2) return true;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (ideal_equal(intersect_components(d.target.ring(), c, i), d.target)) return false;
  return true;
}

Provenance status_of(bool verified) { return verified ? Provenance::verified : Provenance::assumed; }

}  // namespace

template <class F>
Ideal<F> radical(const Ideal<F>& ideal, Certificate<F> certificate) {
  if (ideal.is_unit() || ideal.is_zero()) return ideal;
  if (is_monomial_ideal(ideal)) return monomial_radical(ideal);
  auto mins = minimal_primes(classical_decomposition(ideal, certificate));
  return intersect_all<F>(ideal.ring(), mins);
}

template <class F>
Ideal<F> g_radical(const Ideal<F>& ideal, const GradedRing<F>& ring, Certificate<F> certificate) {
  require_g_ideal(ideal, ring);
  return star(radical(ideal, certificate), ring);
}

template <class F>
Verdict is_g_radical(const Ideal<F>& ideal, const GradedRing<F>& ring, Certificate<F> certificate) {
  bool verified = true;
  if (!ideal.is_unit() && !ideal.is_zero() && !is_monomial_ideal(ideal))
    verified = classical_decomposition(ideal, certificate).all_verified();
  return {ideal_equal(ideal, g_radical(ideal, ring, certificate)), status_of(verified)};
}

template <class F>
Verdict is_g_prime(const Ideal<F>& ideal, const GradedRing<F>& ring, Certificate<F> certificate) {
  require_g_ideal(ideal, ring);
  if (ideal.is_unit()) return {false, Provenance::verified};
  auto d = classical_decomposition(ideal, certificate);
  bool holds = true;
  for (const auto& p : minimal_primes(d)) holds = holds && ideal_equal(star(p, ring), ideal);
  return {holds, status_of(d.all_verified())};
}

template <class F>
Verdict is_g_primary(const Ideal<F>& ideal, const GradedRing<F>& ring, Certificate<F> certificate) {
  require_g_ideal(ideal, ring);
  if (ideal.is_unit()) return {false, Provenance::verified};
  auto d = classical_decomposition(ideal, certificate);
  bool holds = false;
  for (const auto& c : d.components) holds = holds || ideal_equal(star(c.component, ring), ideal);
  return {holds, status_of(d.all_verified())};
}

template <class F>
GDecomposition<F> g_primary_decomposition(const Ideal<F>& ideal, const GradedRing<F>& ring,
                                          Certificate<F> certificate) {
  require_g_ideal(ideal, ring);
  auto classical = classical_decomposition(ideal, certificate);

  GDecomposition<F> d{ideal, {}, false};
  for (const auto& c : classical.components) {
    Ideal<F> sc = star(c.component, ring);
    Ideal<F> sr = star(c.radical, ring);
    auto same = std::find_if(d.components.begin(), d.components.end(),
                             [&](const GPrimaryComponent<F>& g) { return ideal_equal(g.g_radical, sr); });
    if (same == d.components.end()) {
      d.components.push_back({sc, sr, {c}, c.status});
    } else {
      same->component = intersect(same->component, sc);
      same->witnesses.push_back(c);
      if (c.status == Provenance::assumed) same->status = Provenance::assumed;
    }
  }
  for (std::size_t i = 0; i < d.components.size() && d.components.size() > 1;) {
    if (ideal_equal(intersect_components(ideal.ring(), d.components, i), ideal))
      d.components.erase(d.components.begin() + static_cast<std::ptrdiff_t>(i));
    else
      ++i;
  }
  for (auto& c : d.components) {
    c.component = Ideal<F>(c.component.basis());
    c.g_radical = Ideal<F>(c.g_radical.basis());
  }
  std::stable_sort(d.components.begin(), d.components.end(), [](const auto& a, const auto& b) {
    return basis_key(a.g_radical) < basis_key(b.g_radical);
  });
  d.minimal = g_minimal(d);
  return d;
}

template <class F>
std::vector<Ideal<F>> g_associated_primes(const Ideal<F>& ideal, const GradedRing<F>& ring,
                                          Certificate<F> certificate) {
  require_g_ideal(ideal, ring);
  std::vector<Ideal<F>> out;
  for (const auto& p : associated_primes(classical_decomposition(ideal, certificate))) out.push_back(star(p, ring));
  return dedupe(std::move(out));
}

template <class F>
std::vector<Ideal<F>> g_minimal_primes(const Ideal<F>& ideal, const GradedRing<F>& ring,
                                       Certificate<F> certificate) {
  require_g_ideal(ideal, ring);
  std::vector<Ideal<F>> out;
  for (const auto& p : minimal_primes(classical_decomposition(ideal, certificate))) out.push_back(star(p, ring));
  return dedupe(std::move(out));
}

template <class F>
std::optional<Polynomial<F>> g_ass_witness(const GDecomposition<F>& d, std::size_t index, const GradedRing<F>& ring) {
  const auto& comps = d.components;
  if (index >= comps.size()) throw DomainError("component index out of range");
  const auto& target = d.target;
  const Ideal<F>& p = comps[index].g_radical;
  const Ideal<F>& q = comps[index].component;
  Ideal<F> rest = intersect_components(target.ring(), comps, index);

  unsigned n = 1;
  Ideal<F> lower = rest;  // P^{n-1}·M
  for (;; ++n) {
    if (n > 64) throw Error("no power of the G-radical annihilates the complementary components");
    Ideal<F> next = product(lower, p);
    if (ideal_subset(next, q)) break;
    lower = std::move(next);
  }

  auto works = [&](const Polynomial<F>& f) {
    return !f.is_zero() && is_homogeneous(f, ring) && ideal_equal(colon(target, f), p);
  };
  const auto& basis = lower.basis().elements();
  for (const auto& f : basis)
    if (works(f)) return f;
  std::map<Hdeg, Polynomial<F>> sums;
  for (const auto& f : basis) {
    auto deg = degree_of_term(f.leading_term(TermOrder::grevlex()).monomial, ring);
    auto it = sums.find(deg);
    if (it == sums.end()) sums.emplace(deg, f);
    else it->second = it->second + f;
  }
  for (const auto& [deg, f] : sums)
    if (works(f)) return f;
  return std::nullopt;
}

template <class F>
PosetComponent<F> poset_component(const GDecomposition<F>& d, std::span<const Ideal<F>> omega) {
  const auto& comps = d.components;
  const auto& ring = d.target.ring();
  std::vector<bool> in(comps.size(), false);
  for (const auto& w : omega) {
    bool found = false;
    for (std::size_t i = 0; i < comps.size(); ++i)
      if (ideal_equal(comps[i].g_radical, w)) in[i] = found = true;
    if (!found) throw DomainError("omega contains an ideal that is not a G-radical of the decomposition");
  }
  for (std::size_t j = 0; j < comps.size(); ++j)
    for (std::size_t i = 0; i < comps.size(); ++i)
      if (in[i] && !in[j] && ideal_subset(comps[j].g_radical, comps[i].g_radical))
        throw DomainError("omega is not downward closed");
  if (std::none_of(in.begin(), in.end(), [](bool b) { return b; })) return {Ideal<F>::unit(ring), 0};

  std::vector<Ideal<F>> inside, outside;
  for (std::size_t i = 0; i < comps.size(); ++i)
    (in[i] ? inside.push_back(comps[i].component) : outside.push_back(comps[i].g_radical));
  Ideal<F> direct = intersect_all<F>(ring, inside);
  if (outside.empty()) {
    if (!ideal_equal(direct, d.target)) throw Error("poset component disagrees with the target");
    return {Ideal<F>(d.target.basis()), 0};
  }
  Ideal<F> j = intersect_all<F>(ring, outside);

  std::vector<Ideal<F>> sats;
  for (const auto& g : j.generators()) sats.push_back(saturate(d.target, g).ideal);
  Ideal<F> saturated = intersect_all<F>(ring, sats);

  Ideal<F> current = d.target;
  unsigned k = 0;
  for (;; ++k) {
    if (k > 64) throw Error("colon iteration did not stabilise within 64 steps");
    Ideal<F> next = colon(current, j);
    if (ideal_equal(next, current)) break;
    current = std::move(next);
  }
  if (!ideal_equal(direct, saturated) || !ideal_equal(direct, current))
    throw Error("poset component computations disagree");
  return {Ideal<F>(direct.basis()), k};
}

template <class F>
std::vector<CheckEntry> verify_theorem_suite(const Ideal<F>& ideal, const GradedRing<F>& ring,
                                             Certificate<F> certificate) {
  require_g_ideal(ideal, ring);
  std::vector<CheckEntry> report;
  const auto& base = ideal.ring();

  std::optional<Decomposition<F>> classical;
  std::optional<GDecomposition<F>> gd;
  try {
    classical = classical_decomposition(ideal, certificate);
    gd = g_primary_decomposition(ideal, ring, certificate);
  } catch (const UnsupportedClass& e) {
    report.push_back({"decomposition", CheckStatus::unsupported, e.what()});
    return report;
  }
  const bool verified = classical->all_verified() && gd->all_verified();

  auto check = [&](const std::string& name, const std::function<std::pair<bool, std::string>()>& body) {
    try {
      auto [ok, detail] = body();
      CheckStatus s = ok ? (verified ? CheckStatus::pass : CheckStatus::assumed) : CheckStatus::fail;
      report.push_back({name, s, detail});
    } catch (const UnsupportedClass& e) {
      report.push_back({name, CheckStatus::unsupported, e.what()});
    }
  };

  auto count = [](std::size_t n, const char* what) { return std::to_string(n) + " " + what; };

  check("star-fixed-point", [&] { return std::pair{ideal_equal(star(ideal, ring), ideal), std::string()}; });

  check("g-decomposition", [&] {
    bool ok = ideal_equal(intersect_components(base, gd->components), ideal) && gd->minimal;
    return std::pair{ok, count(gd->components.size(), "components")};
  });

  check("g-primary-components", [&] {
    bool ok = true;
    for (const auto& c : gd->components) ok = ok && is_g_primary(c.component, ring).holds;
    return std::pair{ok, std::string()};
  });

  check("g-prime-radicals", [&] {
    bool ok = true;
    for (const auto& c : gd->components) ok = ok && is_g_prime(c.g_radical, ring).holds;
    return std::pair{ok, std::string()};
  });

  check("concatenated-decomposition", [&] {
    Decomposition<F> joined{ideal, {}, false};
    for (const auto& c : gd->components) {
      auto part = classical_decomposition(c.component);
      joined.components.insert(joined.components.end(), part.components.begin(), part.components.end());
    }
    bool ok = intersects_to_target(joined) && is_minimal_decomposition(joined);
    return std::pair{ok, count(joined.components.size(), "classical components")};
  });

  check("g-primary-no-embedded", [&] {
    bool ok = true;
    for (const auto& c : gd->components) {
      auto part = classical_decomposition(c.component);
      ok = ok && associated_primes(part).size() == minimal_primes(part).size();
    }
    return std::pair{ok, std::string()};
  });

  auto ass = associated_primes(*classical);
  auto mins = minimal_primes(*classical);
  auto g_ass = g_associated_primes(ideal, ring, certificate);
  auto g_min = g_minimal_primes(ideal, ring, certificate);

  check("ass-equals-min", [&] {
    bool classical_eq = ass.size() == mins.size();
    bool g_eq = g_ass.size() == g_min.size();
    return std::pair{classical_eq == g_eq, std::string(classical_eq ? "no embedded primes" : "embedded primes")};
  });

  check("g-radical-no-embedded", [&] {
    if (!is_g_radical(ideal, ring, certificate).holds) return std::pair{true, std::string("not G-radical")};
    return std::pair{ass.size() == mins.size(), std::string("G-radical")};
  });

  check("equidimensional", [&] {
    if (!is_g_primary(ideal, ring, certificate).holds) return std::pair{true, std::string("not G-primary")};
    std::optional<std::size_t> dim;
    for (const auto& p : mins) {
      auto d = prime_dimension(p);
      if (!d) throw UnsupportedClass("dimension of a minimal prime is not computable");
      if (dim && *dim != *d) return std::pair{false, std::string("minimal primes of different dimension")};
      dim = d;
    }
    return std::pair{true, "dimension " + std::to_string(dim.value_or(0))};
  });

  check("ass-g-from-stars", [&] {
    return std::pair{same_ideal_set(g_ass, gd->g_radicals()), count(g_ass.size(), "G-associated primes")};
  });

  check("min-g-from-stars", [&] {
    std::vector<Ideal<F>> minimal;
    auto rads = gd->g_radicals();
    for (std::size_t i = 0; i < rads.size(); ++i) {
      bool keep = true;
      for (std::size_t j = 0; j < rads.size(); ++j)
        if (i != j && ideal_subset(rads[j], rads[i])) keep = false;
      if (keep) minimal.push_back(rads[i]);
    }
    return std::pair{same_ideal_set(g_min, minimal), count(g_min.size(), "minimal G-primes")};
  });

  check("g-ass-witnesses", [&] {
    bool ok = true;
    for (std::size_t i = 0; i < gd->components.size(); ++i) ok = ok && g_ass_witness(*gd, i, ring).has_value();
    return std::pair{ok, std::string()};
  });

  check("g-radical-bounds", [&] {
    auto grad = g_radical(ideal, ring, certificate);
    auto rad = radical(ideal, certificate);
    bool ok = ideal_subset(ideal, grad) && ideal_subset(grad, rad) && is_g_ideal(grad, ring);
    return std::pair{ok, std::string()};
  });

  return report;
}

#define GRADY_INSTANTIATE(F)                                                                                  \
  template Ideal<F> radical(const Ideal<F>&, Certificate<F>);                                                 \
  template Ideal<F> g_radical(const Ideal<F>&, const GradedRing<F>&, Certificate<F>);                         \
  template Verdict is_g_radical(const Ideal<F>&, const GradedRing<F>&, Certificate<F>);                       \
  template Verdict is_g_prime(const Ideal<F>&, const GradedRing<F>&, Certificate<F>);                         \
  template Verdict is_g_primary(const Ideal<F>&, const GradedRing<F>&, Certificate<F>);                       \
  template GDecomposition<F> g_primary_decomposition(const Ideal<F>&, const GradedRing<F>&, Certificate<F>);  \
  template std::vector<Ideal<F>> g_associated_primes(const Ideal<F>&, const GradedRing<F>&, Certificate<F>);  \
  template std::vector<Ideal<F>> g_minimal_primes(const Ideal<F>&, const GradedRing<F>&, Certificate<F>);     \
  template std::optional<Polynomial<F>> g_ass_witness(const GDecomposition<F>&, std::size_t, const GradedRing<F>&); \
  template PosetComponent<F> poset_component(const GDecomposition<F>&, std::span<const Ideal<F>>);            \
  template std::vector<CheckEntry> verify_theorem_suite(const Ideal<F>&, const GradedRing<F>&, Certificate<F>);

GRADY_INSTANTIATE(Rationals)
GRADY_INSTANTIATE(PrimeField)

}  // namespace grady
