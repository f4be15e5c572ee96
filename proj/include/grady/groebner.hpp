#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include "grady/polynomial.hpp"

namespace grady {

/// Reduced, monic Groebner basis; elements sorted by ascending leading monomial.
template <class F>
class GroebnerBasis {
 public:
  GroebnerBasis(RingPtr<F> ring, TermOrder order, std::vector<Polynomial<F>> elements)
      : ring_(std::move(ring)), order_(std::move(order)), elements_(std::move(elements)) {}

  const RingPtr<F>& ring() const noexcept { return ring_; }
  const TermOrder& order() const noexcept { return order_; }
  const std::vector<Polynomial<F>>& elements() const noexcept { return elements_; }
  bool is_unit() const { return elements_.size() == 1 && elements_[0].is_constant(); }

 private:
  RingPtr<F> ring_;
  TermOrder order_;
  std::vector<Polynomial<F>> elements_;
};

template <class F>
class Ideal;

/// Buchberger with the product and chain criteria; deterministic pair queue.
template <class F>
GroebnerBasis<F> groebner_basis(const RingPtr<F>& ring, std::span<const Polynomial<F>> generators,
                                const TermOrder& order);

template <class F>
GroebnerBasis<F> groebner_basis(const Ideal<F>& ideal, const TermOrder& order);

/// Remainder of f under full reduction by `basis`.
template <class F>
Polynomial<F> normal_form(const Polynomial<F>& f, const GroebnerBasis<F>& basis);

/// Every S-polynomial of two elements reduces to zero.
template <class F>
bool satisfies_buchberger_criterion(const GroebnerBasis<F>& basis);

/// Monic, no leading monomial divides another, tails fully reduced.
template <class F>
bool is_reduced(const GroebnerBasis<F>& basis);

/// Finitely generated ideal. Generators are kept as given (zeros dropped);
/// the grevlex basis is computed once on first use and shared between copies.
template <class F>
class Ideal {
 public:
  Ideal(RingPtr<F> ring, std::vector<Polynomial<F>> generators);
  explicit Ideal(const GroebnerBasis<F>& basis);

  static Ideal zero(const RingPtr<F>& ring) { return Ideal(ring, {}); }
  static Ideal unit(const RingPtr<F>& ring) { return Ideal(ring, {Polynomial<F>::one(ring)}); }

  const RingPtr<F>& ring() const noexcept { return ring_; }
  const std::vector<Polynomial<F>>& generators() const noexcept { return generators_; }

  /// Reduced grevlex Groebner basis (cached).
  const GroebnerBasis<F>& basis() const;

  bool is_zero() const { return basis().elements().empty(); }
  bool is_unit() const { return basis().is_unit(); }
  bool contains(const Polynomial<F>& f) const;
  /// other ⊆ *this
  bool contains(const Ideal& other) const;

 private:
  struct Cache {
    std::once_flag once;
    std::optional<GroebnerBasis<F>> basis;
  };

  RingPtr<F> ring_;
  std::vector<Polynomial<F>> generators_;
  std::shared_ptr<Cache> cache_;
};

template <class F>
bool ideal_member(const Polynomial<F>& f, const Ideal<F>& ideal) {
  return ideal.contains(f);
}
/// I ⊆ J
template <class F>
bool ideal_subset(const Ideal<F>& i, const Ideal<F>& j) {
  return j.contains(i);
}
template <class F>
bool ideal_equal(const Ideal<F>& i, const Ideal<F>& j);

template <class F>
Ideal<F> sum(const Ideal<F>& i, const Ideal<F>& j);
template <class F>
Ideal<F> product(const Ideal<F>& i, const Ideal<F>& j);
template <class F>
Ideal<F> power(const Ideal<F>& i, unsigned n);

/// I ∩ J via t·I + (1−t)·J with t eliminated.
template <class F>
Ideal<F> intersect(const Ideal<F>& i, const Ideal<F>& j);
/// Intersection of all ideals; the empty intersection is the unit ideal of `ring`.
template <class F>
Ideal<F> intersect_all(const RingPtr<F>& ring, std::span<const Ideal<F>> ideals);

/// f / g, throwing DomainError unless g divides f.
template <class F>
Polynomial<F> exact_divide(const Polynomial<F>& f, const Polynomial<F>& g);

/// I : (f) = (I ∩ (f)) / f
template <class F>
Ideal<F> colon(const Ideal<F>& i, const Polynomial<F>& f);
/// I : J = ⋂_{g ∈ gens J} I : (g). Throws DomainError when J = 0.
template <class F>
Ideal<F> colon(const Ideal<F>& i, const Ideal<F>& j);

template <class F>
struct Saturation {
  Ideal<F> ideal;
  /// Least n with I : f^n = I : f^∞.
  unsigned exponent;
};

/// I : f^∞ by eliminating z from I + (1 − z·f); the exponent comes from
/// iterating colons and is cross-checked against the elimination result.
template <class F>
Saturation<F> saturate(const Ideal<F>& i, const Polynomial<F>& f);

/// I ∩ k[remaining variables], as an ideal of the same ring.
template <class F>
Ideal<F> eliminate(const Ideal<F>& i, std::span<const std::size_t> variables);

/// f ∈ √I, via 1 ∈ I + (1 − z·f).
template <class F>
bool radical_member(const Polynomial<F>& f, const Ideal<F>& i);

}  // namespace grady
