#pragma once

#include <optional>
#include <span>
#include <vector>

#include "grady/groebner.hpp"

namespace grady {

enum class Provenance { verified, assumed };

template <class F>
struct PrimaryComponent {
  Ideal<F> component;
  Ideal<F> radical;
  Provenance status = Provenance::verified;
};

template <class F>
struct Decomposition {
  Ideal<F> target;
  std::vector<PrimaryComponent<F>> components;
  bool minimal = false;

  bool all_verified() const {
    for (const auto& c : components)
      if (c.status != Provenance::verified) return false;
    return true;
  }
};

/// A caller-supplied primary component; the radical may be omitted when the
/// library can derive it.
template <class F>
struct CertificateComponent {
  Ideal<F> component;
  std::optional<Ideal<F>> radical;
};

/// Reduced Groebner basis consists of monomials.
template <class F>
bool is_monomial_ideal(const Ideal<F>& ideal);

/// Minimal monomial generators of a monomial ideal, sorted lex-descending.
template <class F>
std::vector<Monomial> monomial_generators(const Ideal<F>& ideal);

template <class F>
Ideal<F> monomial_radical(const Ideal<F>& ideal);

/// Minimal primary decomposition by recursive splitting of mixed generators,
/// grouping irreducible components by radical. Deterministic.
template <class F>
Decomposition<F> monomial_primary_decomposition(const Ideal<F>& ideal);

/// A second minimal decomposition that differs from the canonical one in its
/// first embedded component, replaced by loc_P(I) + P^k for the least k that
/// keeps the intersection. Empty when I has no embedded prime.
template <class F>
std::optional<Decomposition<F>> thickened_monomial_decomposition(const Ideal<F>& ideal);

template <class F>
std::vector<Ideal<F>> monomial_associated_primes(const Ideal<F>& ideal);
template <class F>
std::vector<Ideal<F>> monomial_minimal_primes(const Ideal<F>& ideal);
template <class F>
std::size_t monomial_dimension(const Ideal<F>& ideal);

/// (f) = ⋂ (p_i^{e_i}) in one variable. Over F_p by trial division by monic
/// polynomials of ascending degree; over Q by squarefree splitting and
/// rational roots, leaving unresolved nonlinear parts as assumed components
/// (or throwing UnsupportedClass when `require_verified`).
template <class F>
Decomposition<F> univariate_primary_decomposition(const Ideal<F>& ideal, bool require_verified = false);

/// Checks a caller-supplied decomposition: it must intersect to `ideal`;
/// each component is verified when it falls in a supported class.
template <class F>
Decomposition<F> certified_decomposition(const Ideal<F>& ideal, std::span<const CertificateComponent<F>> components);

/// A supplied certificate takes precedence; otherwise dispatches on the
/// supported classes (monomial, principal univariate). Throws UnsupportedClass
/// otherwise.
template <class F>
Decomposition<F> classical_decomposition(const Ideal<F>& ideal,
                                         std::span<const CertificateComponent<F>> certificate = {});

template <class F>
bool intersects_to_target(const Decomposition<F>& d);
/// Radicals pairwise distinct and no component can be dropped.
template <class F>
bool is_minimal_decomposition(const Decomposition<F>& d);

/// Distinct radicals of the components.
template <class F>
std::vector<Ideal<F>> associated_primes(const Decomposition<F>& d);
/// Inclusion-minimal elements of associated_primes.
template <class F>
std::vector<Ideal<F>> minimal_primes(const Decomposition<F>& d);

/// Krull dimension of R/P for a prime P in a supported class (generated by
/// variables, a rational point, or a one-variable irreducible).
template <class F>
std::optional<std::size_t> prime_dimension(const Ideal<F>& prime);

/// Removes ideal-equal duplicates, keeping first occurrences.
template <class F>
std::vector<Ideal<F>> dedupe(std::vector<Ideal<F>> ideals);

template <class F>
bool same_ideal_set(const std::vector<Ideal<F>>& a, const std::vector<Ideal<F>>& b);

}  // namespace grady
