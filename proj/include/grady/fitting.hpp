#pragma once

#include <optional>
#include <vector>

#include "grady/grading.hpp"
#include "grady/report.hpp"

namespace grady {

/// Map F → R^r given by an r×c grid of entries, stored row-major.
template <class F>
struct PresentationMatrix {
  RingPtr<F> ring;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Polynomial<F>> entries;
  std::optional<std::vector<Hdeg>> row_degrees;
  std::optional<std::vector<Hdeg>> col_degrees;

  PresentationMatrix(RingPtr<F> r, std::size_t rows, std::size_t cols, std::vector<Polynomial<F>> entries);

  const Polynomial<F>& at(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }
};

/// Ideal of (r − j)-minors: (1) when r − j ≤ 0, (0) when r − j > min(r, c).
template <class F>
Ideal<F> fitting_ideal(const PresentationMatrix<F>& m, long j);

/// Every nonzero entry (i, j) is homogeneous of degree row_i − col_j.
template <class F>
bool is_graded_matrix(const PresentationMatrix<F>& m, const GradedRing<F>& ring);

/// Checks the graded-matrix condition, then homogeneity of Fitt_j for
/// j = −1 … r + 1. Stops after the first entry when the matrix is not graded.
template <class F>
Report graded_matrix_check(const PresentationMatrix<F>& m, const GradedRing<F>& ring);

}  // namespace grady
