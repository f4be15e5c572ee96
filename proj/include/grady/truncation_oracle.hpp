#pragma once

#include <optional>
#include <string>
#include <vector>

#include "grady/grading.hpp"

namespace grady {

/// Polynomials of total degree ≤ D over F_p, coordinates on the monomials
/// of that degree range (sorted ascending).
class TruncatedSpace {
 public:
  TruncatedSpace(RingPtr<PrimeField> ring, unsigned degree_bound);

  const RingPtr<PrimeField>& ring() const noexcept { return ring_; }
  unsigned degree_bound() const noexcept { return bound_; }
  std::size_t dimension() const noexcept { return monomials_.size(); }
  const std::vector<Monomial>& monomials() const noexcept { return monomials_; }
  std::size_t index_of(const Monomial& m) const;

  /// Throws DomainError if f has degree above the bound.
  std::vector<std::uint32_t> coordinates(const Polynomial<PrimeField>& f) const;
  Polynomial<PrimeField> polynomial(const std::vector<std::uint32_t>& v) const;

 private:
  RingPtr<PrimeField> ring_;
  unsigned bound_;
  std::vector<Monomial> monomials_;
};

/// A subspace of a TruncatedSpace, held as a reduced row echelon basis.
class Subspace {
 public:
  Subspace(const TruncatedSpace& space, std::vector<std::vector<std::uint32_t>> rows);

  std::size_t dimension() const noexcept { return rows_.size(); }
  const std::vector<std::vector<std::uint32_t>>& rows() const noexcept { return rows_; }
  bool contains(const std::vector<std::uint32_t>& v) const;
  std::vector<Polynomial<PrimeField>> polynomials() const;

 private:
  const TruncatedSpace* space_;
  std::vector<std::vector<std::uint32_t>> rows_;
  std::vector<std::size_t> pivots_;
};

/// {f ∈ I : deg f ≤ D}, as the kernel of f ↦ NF(f) on the truncated space.
Subspace truncated_ideal_basis(const TruncatedSpace& space, const Ideal<PrimeField>& ideal);

/// {f : deg f ≤ D, every homogeneous component of f in I}, as the sum over
/// degree classes of the kernel of NF restricted to that class.
Subspace truncated_star_basis(const TruncatedSpace& space, const Ideal<PrimeField>& ideal,
                              const GradedRing<PrimeField>& ring);

enum class OracleStatus { pass, fail, degree_too_small };

std::string to_string(OracleStatus s);

struct OracleVerdict {
  OracleStatus status = OracleStatus::pass;
  std::string witness;
  std::string detail;
  std::size_t oracle_dimension = 0;
  std::size_t candidate_dimension = 0;
  /// Set for rational inputs checked through reductions modulo small primes.
  bool heuristic = false;
};

/// Compares `candidate` (default: star(I)) with the truncated star space:
/// every oracle vector must lie in the candidate and every candidate vector
/// of degree ≤ D must lie in the oracle space. D must exceed the largest
/// candidate generator degree by at least 2.
OracleVerdict oracle_compare(const Ideal<PrimeField>& ideal, const GradedRing<PrimeField>& ring, unsigned degree_bound,
                             const std::optional<Ideal<PrimeField>>& candidate = std::nullopt);

/// Rational inputs: star is computed over Q, then I and star(I) are reduced
/// modulo 5, 7 and 11 and compared there. Primes dividing a denominator are
/// skipped. A heuristic check.
OracleVerdict oracle_compare(const Ideal<Rationals>& ideal, const GradedRing<Rationals>& ring, unsigned degree_bound);

}  // namespace grady
