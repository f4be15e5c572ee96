#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "grady/decomposition.hpp"
#include "grady/grading.hpp"
#include "grady/report.hpp"

namespace grady {

template <class F>
using Certificate = std::span<const CertificateComponent<F>>;

template <class F>
struct GPrimaryComponent {
  Ideal<F> component;
  Ideal<F> g_radical;
  /// Classical components whose star is `component`.
  std::vector<PrimaryComponent<F>> witnesses;
  Provenance status = Provenance::verified;
};

template <class F>
struct GDecomposition {
  Ideal<F> target;
  std::vector<GPrimaryComponent<F>> components;
  bool minimal = false;

  bool all_verified() const {
    for (const auto& c : components)
      if (c.status != Provenance::verified) return false;
    return true;
  }
  std::vector<Ideal<F>> g_radicals() const {
    std::vector<Ideal<F>> out;
    for (const auto& c : components) out.push_back(c.g_radical);
    return out;
  }
};

struct Verdict {
  bool holds = false;
  Provenance status = Provenance::verified;
};

/// √I as the intersection of the minimal primes of a classical decomposition.
template <class F>
Ideal<F> radical(const Ideal<F>& ideal, Certificate<F> certificate = {});

template <class F>
Ideal<F> g_radical(const Ideal<F>& ideal, const GradedRing<F>& ring, Certificate<F> certificate = {});
template <class F>
Verdict is_g_radical(const Ideal<F>& ideal, const GradedRing<F>& ring, Certificate<F> certificate = {});
template <class F>
Verdict is_g_prime(const Ideal<F>& ideal, const GradedRing<F>& ring, Certificate<F> certificate = {});
template <class F>
Verdict is_g_primary(const Ideal<F>& ideal, const GradedRing<F>& ring, Certificate<F> certificate = {});

/// Stars every classical component, merges equal G-radicals, drops redundant
/// components and sorts by the printed basis of the G-radical.
template <class F>
GDecomposition<F> g_primary_decomposition(const Ideal<F>& ideal, const GradedRing<F>& ring,
                                          Certificate<F> certificate = {});

template <class F>
std::vector<Ideal<F>> g_associated_primes(const Ideal<F>& ideal, const GradedRing<F>& ring,
                                          Certificate<F> certificate = {});
template <class F>
std::vector<Ideal<F>> g_minimal_primes(const Ideal<F>& ideal, const GradedRing<F>& ring,
                                       Certificate<F> certificate = {});

/// Homogeneous f with N : (f) = P_i, taken from (⋂_{j≠i} Q_j)·P_i^{n−1} for
/// the least n with P_i^n·⋂_{j≠i} Q_j ⊆ Q_i.
template <class F>
std::optional<Polynomial<F>> g_ass_witness(const GDecomposition<F>& d, std::size_t index, const GradedRing<F>& ring);

template <class F>
struct PosetComponent {
  Ideal<F> ideal;
  /// Least k with N : J^k = N : J^{k+1}.
  unsigned exponent = 0;
};

/// ⋂_{P_j ∈ Ω} Q_j, computed directly and as N : J^∞ with J = ⋂_{P_i ∉ Ω} P_i.
/// Ω must be a downward-closed subset of the G-radicals of `d`.
template <class F>
PosetComponent<F> poset_component(const GDecomposition<F>& d, std::span<const Ideal<F>> omega);

template <class F>
std::vector<CheckEntry> verify_theorem_suite(const Ideal<F>& ideal, const GradedRing<F>& ring,
                                             Certificate<F> certificate = {});

}  // namespace grady
