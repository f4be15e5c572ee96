#include "grady/truncation_oracle.hpp"

#include <algorithm>
#include <map>

namespace grady {
namespace {

using Vec = std::vector<std::uint32_t>;

struct Arith {
  std::uint64_t p;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return static_cast<std::uint32_t>(std::uint64_t{a} * b % p); }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return static_cast<std::uint32_t>((a + p - b) % p); }
  std::uint32_t inv(std::uint32_t a) const {
    std::uint64_t result = 1, base = a, e = p - 2;
    while (e) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return static_cast<std::uint32_t>(result);
  }
  // row -= c · other
  void axpy(Vec& row, std::uint32_t c, const Vec& other) const {
    if (!c) return;
    for (std::size_t i = 0; i < row.size(); ++i)
      if (other[i]) row[i] = sub(row[i], mul(c, other[i]));
  }
  void normalize(Vec& row, std::size_t pivot) const {
    auto c = inv(row[pivot]);
    for (auto& x : row) x = mul(x, c);
  }
};

std::size_t first_nonzero(const Vec& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i]) return i;
  return v.size();
}

void enumerate(std::size_t n, std::size_t var, unsigned left, Monomial& m, std::vector<Monomial>& out) {
  if (var == n) {
    out.push_back(m);
    return;
  }
  for (unsigned e = 0; e <= left; ++e) {
    m[var] = e;
    enumerate(n, var + 1, left - e, m, out);
  }
  m[var] = 0;
}

// Kernel of k ↦ images[k] over the chosen monomials, by elimination of the
// augmented rows [image | unit vector].
std::vector<Vec> kernel(const TruncatedSpace& space, const Arith& a, const std::vector<std::size_t>& chosen,
                        const std::vector<Vec>& images) {
  struct Row {
    Vec image;
    Vec tag;
    std::size_t pivot;
  };
  std::vector<Row> pivots;
  std::vector<Vec> out;
  for (std::size_t k = 0; k < chosen.size(); ++k) {
    Vec image = images[chosen[k]];
    Vec tag(space.dimension(), 0);
    tag[chosen[k]] = 1;
    for (const auto& r : pivots) {
      auto c = image[r.pivot];
      if (!c) continue;
      a.axpy(image, c, r.image);
      a.axpy(tag, c, r.tag);
    }
    std::size_t p = first_nonzero(image);
    if (p == image.size()) {
      out.push_back(std::move(tag));
      continue;
    }
    auto c = a.inv(image[p]);
    for (auto& x : image) x = a.mul(x, c);
    for (auto& x : tag) x = a.mul(x, c);
    // keep earlier pivot rows reduced against the new pivot column
    for (auto& r : pivots) {
      auto d = r.image[p];
      if (!d) continue;
      a.axpy(r.image, d, image);
      a.axpy(r.tag, d, tag);
    }
    pivots.push_back({std::move(image), std::move(tag), p});
  }
  return out;
}

std::vector<Vec> normal_form_images(const TruncatedSpace& space, const Ideal<PrimeField>& ideal) {
  const auto& basis = ideal.basis();
  std::vector<Vec> images;
  images.reserve(space.dimension());
  for (const auto& m : space.monomials())
    images.push_back(space.coordinates(normal_form(Polynomial<PrimeField>::monomial(space.ring(), m), basis)));
  return images;
}

Polynomial<PrimeField> reduce_mod(const Polynomial<Rationals>& f, const RingPtr<PrimeField>& target) {
  const auto& k = target->field();
  std::vector<Term<PrimeField>> terms;
  for (const auto& t : f.terms()) {
    auto c = k.from_fraction(t.coeff.get_num(), t.coeff.get_den());
    terms.push_back({t.monomial, c});
  }
  return Polynomial<PrimeField>(target, std::move(terms));
}

}  // namespace

TruncatedSpace::TruncatedSpace(RingPtr<PrimeField> ring, unsigned degree_bound)
    : ring_(std::move(ring)), bound_(degree_bound) {
  Monomial m(ring_->num_vars());
  enumerate(ring_->num_vars(), 0, bound_, m, monomials_);
  std::sort(monomials_.begin(), monomials_.end());
}

std::size_t TruncatedSpace::index_of(const Monomial& m) const {
  auto it = std::lower_bound(monomials_.begin(), monomials_.end(), m);
  if (it == monomials_.end() || *it != m) throw DomainError("monomial outside the truncated space");
  return static_cast<std::size_t>(it - monomials_.begin());
}

std::vector<std::uint32_t> TruncatedSpace::coordinates(const Polynomial<PrimeField>& f) const {
  Vec v(dimension(), 0);
  for (const auto& t : f.terms()) v[index_of(t.monomial)] = t.coeff;
  return v;
}

Polynomial<PrimeField> TruncatedSpace::polynomial(const std::vector<std::uint32_t>& v) const {
  std::vector<Term<PrimeField>> terms;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i]) terms.push_back({monomials_[i], v[i]});
  return Polynomial<PrimeField>(ring_, std::move(terms));
}

Subspace::Subspace(const TruncatedSpace& space, std::vector<std::vector<std::uint32_t>> rows) : space_(&space) {
  Arith a{space.ring()->field().characteristic()};
  for (auto& row : rows) {
    for (std::size_t k = 0; k < rows_.size(); ++k) a.axpy(row, row[pivots_[k]], rows_[k]);
    std::size_t p = first_nonzero(row);
    if (p == row.size()) continue;
    a.normalize(row, p);
    for (auto& r : rows_) a.axpy(r, r[p], row);
    rows_.push_back(std::move(row));
    pivots_.push_back(p);
  }
  std::vector<std::size_t> order(rows_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](auto x, auto y) { return pivots_[x] < pivots_[y]; });
  std::vector<Vec> sorted_rows;
  std::vector<std::size_t> sorted_pivots;
  for (auto i : order) {
    sorted_rows.push_back(std::move(rows_[i]));
    sorted_pivots.push_back(pivots_[i]);
  }
  rows_ = std::move(sorted_rows);
  pivots_ = std::move(sorted_pivots);
}

bool Subspace::contains(const std::vector<std::uint32_t>& v) const {
  Arith a{space_->ring()->field().characteristic()};
  Vec w = v;
  for (std::size_t k = 0; k < rows_.size(); ++k) a.axpy(w, w[pivots_[k]], rows_[k]);
  return first_nonzero(w) == w.size();
}

std::vector<Polynomial<PrimeField>> Subspace::polynomials() const {
  std::vector<Polynomial<PrimeField>> out;
  for (const auto& r : rows_) out.push_back(space_->polynomial(r));
  return out;
}

Subspace truncated_ideal_basis(const TruncatedSpace& space, const Ideal<PrimeField>& ideal) {
  if (!same_ring(space.ring(), ideal.ring())) throw RingMismatch();
  Arith a{space.ring()->field().characteristic()};
  std::vector<std::size_t> all(space.dimension());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return Subspace(space, kernel(space, a, all, normal_form_images(space, ideal)));
}

Subspace truncated_star_basis(const TruncatedSpace& space, const Ideal<PrimeField>& ideal,
                              const GradedRing<PrimeField>& ring) {
  if (!same_ring(space.ring(), ideal.ring()) || !same_ring(space.ring(), ring.ring)) throw RingMismatch();
  Arith a{space.ring()->field().characteristic()};
  auto images = normal_form_images(space, ideal);
  std::map<Hdeg, std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < space.dimension(); ++i)
    classes[degree_of_term(space.monomials()[i], ring)].push_back(i);
  std::vector<Vec> rows;
  for (const auto& [deg, members] : classes) {
    auto k = kernel(space, a, members, images);
    rows.insert(rows.end(), std::make_move_iterator(k.begin()), std::make_move_iterator(k.end()));
  }
  return Subspace(space, std::move(rows));
}

std::string to_string(OracleStatus s) {
  switch (s) {
    case OracleStatus::pass: return "pass";
    case OracleStatus::fail: return "fail";
    case OracleStatus::degree_too_small: return "degree_too_small";
  }
  return "unknown";
}

OracleVerdict oracle_compare(const Ideal<PrimeField>& ideal, const GradedRing<PrimeField>& ring, unsigned degree_bound,
                             const std::optional<Ideal<PrimeField>>& candidate) {
  Ideal<PrimeField> cand = candidate ? *candidate : star(ideal, ring);
  OracleVerdict v;
  std::size_t top = 0;
  for (const auto& g : cand.basis().elements()) top = std::max<std::size_t>(top, g.total_degree());
  if (degree_bound < top + 2) {
    v.status = OracleStatus::degree_too_small;
    v.detail = "degree bound " + std::to_string(degree_bound) + " below generator degree " + std::to_string(top) + " + 2";
    return v;
  }
  TruncatedSpace space(ideal.ring(), degree_bound);
  Subspace oracle = truncated_star_basis(space, ideal, ring);
  Subspace mine = truncated_ideal_basis(space, cand);
  v.oracle_dimension = oracle.dimension();
  v.candidate_dimension = mine.dimension();
  for (const auto& f : oracle.polynomials())
    if (!cand.contains(f)) {
      v.status = OracleStatus::fail;
      v.witness = f.to_string();
      v.detail = "oracle element missing from candidate";
      return v;
    }
  for (const auto& row : mine.rows())
    if (!oracle.contains(row)) {
      v.status = OracleStatus::fail;
      v.witness = space.polynomial(row).to_string();
      v.detail = "candidate element outside the truncated star space";
      return v;
    }
  return v;
}

OracleVerdict oracle_compare(const Ideal<Rationals>& ideal, const GradedRing<Rationals>& ring, unsigned degree_bound) {
  Ideal<Rationals> s = star(ideal, ring);
  OracleVerdict result;
  result.heuristic = true;
  std::string used;
  for (std::uint32_t p : {5u, 7u, 11u}) {
    auto target = make_ring(PrimeField(p), ideal.ring()->names());
    std::vector<Polynomial<PrimeField>> gens, star_gens;
    try {
      for (const auto& g : ideal.generators()) gens.push_back(reduce_mod(g, target));
      for (const auto& g : s.basis().elements()) star_gens.push_back(reduce_mod(g, target));
    } catch (const DomainError&) {
      continue;
    }
    GradedRing<PrimeField> graded(target, ring.grading);
    auto v = oracle_compare(Ideal<PrimeField>(target, gens), graded, degree_bound,
                            Ideal<PrimeField>(target, star_gens));
    v.heuristic = true;
    if (v.status != OracleStatus::pass) {
      v.detail += " (mod " + std::to_string(p) + ")";
      return v;
    }
    used += (used.empty() ? "" : ",") + std::to_string(p);
    result.oracle_dimension = v.oracle_dimension;
    result.candidate_dimension = v.candidate_dimension;
  }
  if (used.empty()) {
    result.status = OracleStatus::fail;
    result.detail = "no usable prime among 5, 7, 11";
  } else {
    result.detail = "agreement modulo " + used;
  }
  return result;
}

}  // namespace grady
