#include "grady/fitting.hpp"

#include <bit>
#include <cstdint>
#include <map>

namespace grady {
namespace {

// Determinants of square submatrices, expanded along the first chosen row.
template <class F>
class Minors {
 public:
  explicit Minors(const PresentationMatrix<F>& m) : m_(m) {}

  Polynomial<F> det(std::uint32_t rows, std::uint32_t cols) {
    if (rows == 0) return Polynomial<F>::one(m_.ring);
    auto key = std::pair{rows, cols};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const auto r = static_cast<std::size_t>(std::countr_zero(rows));
    const std::uint32_t rest = rows & (rows - 1);
    Polynomial<F> sum(m_.ring);
    bool negative = false;
    for (std::size_t c = 0; c < m_.cols; ++c) {
      if (!(cols >> c & 1u)) continue;
      const auto& e = m_.at(r, c);
      if (!e.is_zero()) {
        auto term = e * det(rest, cols & ~(1u << c));
        sum = negative ? sum - term : sum + term;
      }
      negative = !negative;
    }
    memo_.emplace(key, sum);
    return sum;
  }

 private:
  const PresentationMatrix<F>& m_;
  std::map<std::pair<std::uint32_t, std::uint32_t>, Polynomial<F>> memo_;
};

void subsets(std::size_t n, std::size_t k, std::uint32_t acc, std::size_t from, std::vector<std::uint32_t>& out) {
  if (k == 0) {
    out.push_back(acc);
    return;
  }
  for (std::size_t i = from; i + k <= n; ++i) subsets(n, k - 1, acc | (1u << i), i + 1, out);
}

std::vector<std::uint32_t> subsets(std::size_t n, std::size_t k) {
  std::vector<std::uint32_t> out;
  subsets(n, k, 0, 0, out);
  return out;
}

}  // namespace

template <class F>
PresentationMatrix<F>::PresentationMatrix(RingPtr<F> r, std::size_t rows, std::size_t cols,
                                          std::vector<Polynomial<F>> entries)
    : ring(std::move(r)), rows(rows), cols(cols), entries(std::move(entries)) {
  if (this->entries.size() != rows * cols) throw DomainError("matrix entry count does not match its shape");
  if (rows > 31 || cols > 31) throw DomainError("matrix too large");
  for (const auto& e : this->entries)
    if (!same_ring(e.ring(), ring)) throw RingMismatch();
}

template <class F>
Ideal<F> fitting_ideal(const PresentationMatrix<F>& m, long j) {
  const long k = static_cast<long>(m.rows) - j;
  if (k <= 0) return Ideal<F>::unit(m.ring);
  if (k > static_cast<long>(std::min(m.rows, m.cols))) return Ideal<F>::zero(m.ring);
  Minors<F> minors(m);
  std::vector<Polynomial<F>> gens;
  const auto size = static_cast<std::size_t>(k);
  for (auto rows : subsets(m.rows, size))
    for (auto cols : subsets(m.cols, size)) {
      auto d = minors.det(rows, cols);
      if (!d.is_zero()) gens.push_back(std::move(d));
    }
  return Ideal<F>(m.ring, std::move(gens));
}

template <class F>
bool is_graded_matrix(const PresentationMatrix<F>& m, const GradedRing<F>& ring) {
  if (!m.row_degrees || !m.col_degrees) throw DomainError("matrix has no degree data");
  if (m.row_degrees->size() != m.rows || m.col_degrees->size() != m.cols)
    throw DomainError("degree lists do not match the matrix shape");
  const auto& group = ring.grading.group;
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) {
      const auto& e = m.at(i, j);
      if (e.is_zero()) continue;
      auto parts = homogeneous_components(e, ring);
      if (parts.size() != 1) return false;
      if (parts.begin()->first != group.sub((*m.row_degrees)[i], (*m.col_degrees)[j])) return false;
    }
  return true;
}

template <class F>
Report graded_matrix_check(const PresentationMatrix<F>& m, const GradedRing<F>& ring) {
  Report report;
  if (!is_graded_matrix(m, ring)) {
    report.push_back({"graded-matrix", CheckStatus::fail, "entry degrees do not match row and column degrees"});
    return report;
  }
  report.push_back({"graded-matrix", CheckStatus::pass, ""});
  for (long j = -1; j <= static_cast<long>(m.rows) + 1; ++j) {
    bool ok = is_g_ideal(fitting_ideal(m, j), ring);
    report.push_back({"fitting-" + std::to_string(j) + "-homogeneous", ok ? CheckStatus::pass : CheckStatus::fail, ""});
  }
  return report;
}

#define GRADY_INSTANTIATE(F)                                                         \
  template struct PresentationMatrix<F>;                                             \
  template Ideal<F> fitting_ideal(const PresentationMatrix<F>&, long);               \
  template bool is_graded_matrix(const PresentationMatrix<F>&, const GradedRing<F>&); \
  template Report graded_matrix_check(const PresentationMatrix<F>&, const GradedRing<F>&);

GRADY_INSTANTIATE(Rationals)
GRADY_INSTANTIATE(PrimeField)

}  // namespace grady
