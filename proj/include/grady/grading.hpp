#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "grady/groebner.hpp"

namespace grady {

/// Element of H = Z^r ⊕ Z/m_1 ⊕ ... ⊕ Z/m_s; torsion entries reduced into [0, m_k).
struct Hdeg {
  std::vector<std::int64_t> free;
  std::vector<std::int64_t> torsion;

  std::string to_string() const;
  friend bool operator==(const Hdeg&, const Hdeg&) = default;
  friend auto operator<=>(const Hdeg&, const Hdeg&) = default;
};

/// Finitely generated abelian group H, given by its free rank and torsion moduli.
class GradingGroup {
 public:
  GradingGroup() = default;
  GradingGroup(std::size_t free_rank, std::vector<std::int64_t> torsion);

  std::size_t free_rank() const noexcept { return free_rank_; }
  const std::vector<std::int64_t>& torsion() const noexcept { return torsion_; }
  bool is_trivial() const noexcept { return free_rank_ == 0 && torsion_.empty(); }
  bool is_torsion_free() const noexcept { return torsion_.empty(); }

  Hdeg identity() const;
  /// Validates lengths and reduces torsion residues.
  Hdeg element(std::vector<std::int64_t> free, std::vector<std::int64_t> torsion) const;
  Hdeg add(const Hdeg& a, const Hdeg& b) const;
  Hdeg sub(const Hdeg& a, const Hdeg& b) const;
  Hdeg scale(const Hdeg& a, std::int64_t k) const;

  bool operator==(const GradingGroup&) const = default;

 private:
  void reduce(Hdeg& d) const;

  std::size_t free_rank_ = 0;
  std::vector<std::int64_t> torsion_;
};

/// Degree map: one element of H per variable.
struct Grading {
  GradingGroup group;
  std::vector<Hdeg> degrees;

  Grading() = default;
  Grading(GradingGroup g, std::vector<Hdeg> d);

  /// Z^n with x_i in degree e_i.
  static Grading fine(std::size_t num_vars);
  /// Z with every variable in degree 1.
  static Grading standard(std::size_t num_vars);
  static Grading trivial(std::size_t num_vars);

  std::size_t num_vars() const noexcept { return degrees.size(); }
  /// Torsion-free with every free coordinate of every degree ≥ 0.
  bool is_nonnegative() const;

  bool operator==(const Grading&) const = default;
};

Hdeg degree_of_term(const Monomial& m, const Grading& grading);

template <class F>
struct GradedRing {
  RingPtr<F> ring;
  Grading grading;

  GradedRing(RingPtr<F> r, Grading g) : ring(std::move(r)), grading(std::move(g)) {
    if (grading.num_vars() != ring->num_vars()) throw DomainError("grading has the wrong number of degrees");
  }
};

template <class F>
Hdeg degree_of_term(const Monomial& m, const GradedRing<F>& ring) {
  return degree_of_term(m, ring.grading);
}

/// f = Σ components; no zero components are stored.
template <class F>
std::map<Hdeg, Polynomial<F>> homogeneous_components(const Polynomial<F>& f, const GradedRing<F>& ring);

template <class F>
bool is_homogeneous(const Polynomial<F>& f, const GradedRing<F>& ring) {
  return homogeneous_components(f, ring).size() <= 1;
}

/// True iff every homogeneous component of every basis element lies in I.
template <class F>
bool is_g_ideal(const Ideal<F>& ideal, const GradedRing<F>& ring);

/// I*, the largest homogeneous ideal contained in I: the preimage of
/// I·k[x]⊗k[H] under the coaction x_i ↦ χ(d_i)·x_i, computed with a graph ideal.
template <class F>
Ideal<F> star(const Ideal<F>& ideal, const GradedRing<F>& ring);

/// Sound under-approximation of I*: homogeneous components of basis
/// elements that already lie in I. Always a subideal of star(I).
template <class F>
Ideal<F> star_filter(const Ideal<F>& ideal, const GradedRing<F>& ring);

}  // namespace grady
