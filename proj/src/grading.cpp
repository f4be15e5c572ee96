#include "grady/grading.hpp"

#include <algorithm>

namespace grady {

std::string Hdeg::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < free.size(); ++i) s += (i ? "," : "") + std::to_string(free[i]);
  s += ";";
  for (std::size_t i = 0; i < torsion.size(); ++i) s += (i ? "," : "") + std::to_string(torsion[i]);
  return s + ")";
}

GradingGroup::GradingGroup(std::size_t free_rank, std::vector<std::int64_t> torsion)
    : free_rank_(free_rank), torsion_(std::move(torsion)) {
  for (auto m : torsion_)
    if (m < 2) throw DomainError("torsion moduli must be at least 2");
}

void GradingGroup::reduce(Hdeg& d) const {
  for (std::size_t k = 0; k < torsion_.size(); ++k) {
    d.torsion[k] %= torsion_[k];
    if (d.torsion[k] < 0) d.torsion[k] += torsion_[k];
  }
}

Hdeg GradingGroup::identity() const {
  return Hdeg{std::vector<std::int64_t>(free_rank_, 0), std::vector<std::int64_t>(torsion_.size(), 0)};
}

Hdeg GradingGroup::element(std::vector<std::int64_t> free, std::vector<std::int64_t> torsion) const {
  if (free.size() != free_rank_) throw DomainError("degree has the wrong free rank");
  if (torsion.size() != torsion_.size()) throw DomainError("degree has the wrong number of torsion entries");
  Hdeg d{std::move(free), std::move(torsion)};
  reduce(d);
  return d;
}

Hdeg GradingGroup::add(const Hdeg& a, const Hdeg& b) const {
  Hdeg r = a;
  for (std::size_t i = 0; i < r.free.size(); ++i) r.free[i] += b.free[i];
  for (std::size_t i = 0; i < r.torsion.size(); ++i) r.torsion[i] += b.torsion[i];
  reduce(r);
  return r;
}

Hdeg GradingGroup::sub(const Hdeg& a, const Hdeg& b) const { return add(a, scale(b, -1)); }

Hdeg GradingGroup::scale(const Hdeg& a, std::int64_t k) const {
  Hdeg r = a;
  for (auto& v : r.free) v *= k;
  for (auto& v : r.torsion) v *= k;
  reduce(r);
  return r;
}

Grading::Grading(GradingGroup g, std::vector<Hdeg> d) : group(std::move(g)) {
  degrees.reserve(d.size());
  for (auto& h : d) degrees.push_back(group.element(std::move(h.free), std::move(h.torsion)));
}

Grading Grading::fine(std::size_t num_vars) {
  GradingGroup g(num_vars, {});
  std::vector<Hdeg> d;
  for (std::size_t i = 0; i < num_vars; ++i) {
    std::vector<std::int64_t> e(num_vars, 0);
    e[i] = 1;
    d.push_back({std::move(e), {}});
  }
  return Grading(std::move(g), std::move(d));
}

Grading Grading::standard(std::size_t num_vars) {
  return Grading(GradingGroup(1, {}), std::vector<Hdeg>(num_vars, Hdeg{{1}, {}}));
}

Grading Grading::trivial(std::size_t num_vars) {
  return Grading(GradingGroup(), std::vector<Hdeg>(num_vars, Hdeg{}));
}

bool Grading::is_nonnegative() const {
  if (!group.is_torsion_free()) return false;
  for (const auto& d : degrees)
    for (auto v : d.free)
      if (v < 0) return false;
  return true;
}

Hdeg degree_of_term(const Monomial& m, const Grading& grading) {
  if (m.size() != grading.num_vars()) throw DomainError("monomial and grading disagree on variable count");
  Hdeg d = grading.group.identity();
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i]) d = grading.group.add(d, grading.group.scale(grading.degrees[i], m[i]));
  return d;
}

template <class F>
std::map<Hdeg, Polynomial<F>> homogeneous_components(const Polynomial<F>& f, const GradedRing<F>& ring) {
  if (!same_ring(f.ring(), ring.ring)) throw RingMismatch();
  std::map<Hdeg, std::vector<Term<F>>> buckets;
  for (const auto& t : f.terms()) buckets[degree_of_term(t.monomial, ring.grading)].push_back(t);
  std::map<Hdeg, Polynomial<F>> out;
  for (auto& [deg, terms] : buckets) out.emplace(deg, Polynomial<F>(f.ring(), std::move(terms)));
  return out;
}

template <class F>
bool is_g_ideal(const Ideal<F>& ideal, const GradedRing<F>& ring) {
  for (const auto& g : ideal.basis().elements())
    for (const auto& [deg, part] : homogeneous_components(g, ring))
      if (!ideal.contains(part)) return false;
  return true;
}

template <class F>
Ideal<F> star_filter(const Ideal<F>& ideal, const GradedRing<F>& ring) {
  std::vector<Polynomial<F>> kept;
  for (const auto& g : ideal.basis().elements())
    for (const auto& [deg, part] : homogeneous_components(g, ring))
      if (ideal.contains(part)) kept.push_back(part);
  return Ideal<F>(ideal.ring(), std::move(kept));
}

template <class F>
Ideal<F> star(const Ideal<F>& ideal, const GradedRing<F>& graded) {
  if (!same_ring(ideal.ring(), graded.ring)) throw RingMismatch();
  const auto& ring = ideal.ring();
  const Grading& grading = graded.grading;
  if (ideal.is_zero() || ideal.is_unit() || grading.group.is_trivial()) return Ideal<F>(ideal.basis());
  if (is_g_ideal(ideal, graded)) return Ideal<F>(ideal.basis());

  const std::size_t n = ring->num_vars();
  const std::size_t r = grading.group.free_rank();
  const auto& moduli = grading.group.torsion();

  // Group-algebra coordinates: t_j (and u_j = t_j^{-1} where some degree is
  // negative in column j), s_k with s_k^{m_k} = 1. Unused columns are skipped.
  std::vector<std::string> names = ring->names();
  std::vector<std::size_t> t_index(r, 0), u_index(r, 0), s_index(moduli.size(), 0);
  std::vector<bool> t_used(r, false), u_used(r, false), s_used(moduli.size(), false);
  for (const auto& d : grading.degrees) {
    for (std::size_t j = 0; j < r; ++j) {
      if (d.free[j] != 0) t_used[j] = true;
      if (d.free[j] < 0) u_used[j] = true;
    }
    for (std::size_t k = 0; k < moduli.size(); ++k)
      if (d.torsion[k] != 0) s_used[k] = true;
  }
  for (std::size_t j = 0; j < r; ++j)
    if (t_used[j]) t_index[j] = names.size(), names.push_back("@t" + std::to_string(j));
  for (std::size_t j = 0; j < r; ++j)
    if (u_used[j]) u_index[j] = names.size(), names.push_back("@u" + std::to_string(j));
  for (std::size_t k = 0; k < moduli.size(); ++k)
    if (s_used[k]) s_index[k] = names.size(), names.push_back("@s" + std::to_string(k));
  const std::size_t y_start = names.size();
  for (std::size_t i = 0; i < n; ++i) names.push_back("@y" + std::to_string(i));
  auto big = make_ring(ring->field(), names);

  std::vector<Polynomial<F>> gens;
  for (const auto& g : ideal.basis().elements()) gens.push_back(embed(g, big));
  auto one = Polynomial<F>::one(big);
  for (std::size_t j = 0; j < r; ++j)
    if (u_used[j])
      gens.push_back(Polynomial<F>::variable(big, t_index[j]) * Polynomial<F>::variable(big, u_index[j]) - one);
  for (std::size_t k = 0; k < moduli.size(); ++k)
    if (s_used[k])
      gens.push_back(Polynomial<F>::variable(big, s_index[k]).pow(static_cast<unsigned>(moduli[k])) - one);
  for (std::size_t i = 0; i < n; ++i) {
    Monomial chi = Monomial::variable(big->num_vars(), i);
    const Hdeg& d = grading.degrees[i];
    for (std::size_t j = 0; j < r; ++j) {
      if (d.free[j] > 0) chi[t_index[j]] += static_cast<Monomial::exponent_type>(d.free[j]);
      if (d.free[j] < 0) chi[u_index[j]] += static_cast<Monomial::exponent_type>(-d.free[j]);
    }
    for (std::size_t k = 0; k < moduli.size(); ++k)
      if (d.torsion[k]) chi[s_index[k]] += static_cast<Monomial::exponent_type>(d.torsion[k]);
    gens.push_back(Polynomial<F>::variable(big, y_start + i) - Polynomial<F>::monomial(big, std::move(chi)));
  }

  std::vector<bool> mask(big->num_vars(), true);
  for (std::size_t i = 0; i < n; ++i) mask[y_start + i] = false;
  auto gb = groebner_basis<F>(big, gens, TermOrder::elimination(mask));

  std::vector<std::size_t> back(big->num_vars(), static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < n; ++i) back[y_start + i] = i;
  std::vector<Polynomial<F>> result;
  for (const auto& e : gb.elements()) {
    bool free_of_eliminated = true;
    for (const auto& t : e.terms())
      for (std::size_t v = 0; v < y_start && free_of_eliminated; ++v)
        if (t.monomial[v]) free_of_eliminated = false;
    if (free_of_eliminated) result.push_back(relabel(e, ring, back));
  }
  return Ideal<F>(ring, std::move(result));
}

#define GRADY_INSTANTIATE(F)                                                                                 \
  template std::map<Hdeg, Polynomial<F>> homogeneous_components(const Polynomial<F>&, const GradedRing<F>&); \
  template bool is_g_ideal(const Ideal<F>&, const GradedRing<F>&);                                           \
  template Ideal<F> star_filter(const Ideal<F>&, const GradedRing<F>&);                                      \
  template Ideal<F> star(const Ideal<F>&, const GradedRing<F>&);

GRADY_INSTANTIATE(Rationals)
GRADY_INSTANTIATE(PrimeField)

}  // namespace grady
