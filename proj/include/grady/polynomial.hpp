#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "grady/error.hpp"
#include "grady/monomial.hpp"
#include "grady/ring.hpp"
#include "grady/term_order.hpp"

namespace grady {

template <class F>
struct Term {
  Monomial monomial;
  typename F::value_type coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial in canonical form: terms strictly descending in grevlex,
/// no zero coefficients. Value type; equality is equality of term lists.
template <class F>
class Polynomial {
 public:
  using value_type = typename F::value_type;
  using term_type = Term<F>;

  Polynomial() = default;
  explicit Polynomial(RingPtr<F> ring) : ring_(std::move(ring)) {}

  /// Canonicalizes: sorts, merges equal monomials, drops zeros.
  Polynomial(RingPtr<F> ring, std::vector<term_type> terms) : ring_(std::move(ring)) {
    terms_ = canonicalize(*ring_, std::move(terms));
  }

  static Polynomial constant(const RingPtr<F>& ring, value_type c) {
    std::vector<term_type> t;
    t.push_back({Monomial(ring->num_vars()), std::move(c)});
    return Polynomial(ring, std::move(t));
  }
  static Polynomial constant(const RingPtr<F>& ring, std::int64_t c) {
    return constant(ring, ring->field().from_integer(mpz_class(static_cast<long>(c))));
  }
  static Polynomial one(const RingPtr<F>& ring) { return constant(ring, ring->field().one()); }
  static Polynomial variable(const RingPtr<F>& ring, std::size_t index) {
    return monomial(ring, Monomial::variable(ring->num_vars(), index));
  }
  static Polynomial monomial(const RingPtr<F>& ring, Monomial m) {
    Polynomial p(ring);
    p.terms_.push_back({std::move(m), ring->field().one()});
    return p;
  }

  const RingPtr<F>& ring() const noexcept { return ring_; }
  const F& field() const { return ring_->field(); }
  const std::vector<term_type>& terms() const noexcept { return terms_; }
  std::size_t num_terms() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }
  bool is_monomial() const noexcept { return terms_.size() == 1; }

  std::uint64_t total_degree() const {
    std::uint64_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
    return d;
  }

  /// The order-maximal term. Throws DomainError on the zero polynomial.
  const term_type& leading_term(const TermOrder& order) const {
    if (terms_.empty()) throw DomainError("leading term of the zero polynomial");
    if (order.kind() == TermOrder::Kind::grevlex) return terms_.front();
    const term_type* best = &terms_.front();
    for (const auto& t : terms_)
      if (order.greater(t.monomial, best->monomial)) best = &t;
    return *best;
  }

  /// Coefficient of monomial m (zero when absent).
  value_type coefficient(const Monomial& m) const {
    for (const auto& t : terms_)
      if (t.monomial == m) return t.coeff;
    return field().zero();
  }

  Polynomial operator-() const {
    Polynomial r(*this);
    for (auto& t : r.terms_) t.coeff = field().neg(t.coeff);
    return r;
  }
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return combine(a, b, false); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return combine(a, b, true); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    check_same(a, b);
    std::vector<term_type> prod;
    prod.reserve(a.terms_.size() * b.terms_.size());
    const F& k = a.field();
    for (const auto& s : a.terms_)
      for (const auto& t : b.terms_) prod.push_back({s.monomial * t.monomial, k.mul(s.coeff, t.coeff)});
    return Polynomial(a.ring_, std::move(prod));
  }
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial scaled(const value_type& c) const {
    if (field().is_zero(c)) return Polynomial(ring_);
    Polynomial r(*this);
    for (auto& t : r.terms_) t.coeff = field().mul(t.coeff, c);
    return r;
  }
  /// Multiplication by c·m; grevlex is multiplicative so the order survives.
  Polynomial times_term(const Monomial& m, const value_type& c) const {
    if (field().is_zero(c)) return Polynomial(ring_);
    Polynomial r(*this);
    for (auto& t : r.terms_) {
      t.monomial = t.monomial * m;
      t.coeff = field().mul(t.coeff, c);
    }
    return r;
  }
  Polynomial pow(unsigned k) const {
    Polynomial result = one(ring_), base = *this;
    while (k) {
      if (k & 1) result *= base;
      k >>= 1;
      if (k) base *= base;
    }
    return result;
  }
  /// Scaled so the leading coefficient under `order` is 1 (zero stays zero).
  Polynomial monic(const TermOrder& order = TermOrder::grevlex()) const {
    if (is_zero()) return *this;
    return scaled(field().inv(leading_term(order).coeff));
  }

  /// Human-readable canonical text, accepted back by parse_polynomial.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    const F& k = field();
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
      value_type c = t.coeff;
      bool negative = k.is_negative(c);
      if (negative) c = k.neg(c);
      if (first) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      first = false;
      std::string mono = monomial_string(t.monomial);
      if (mono.empty()) {
        out += k.to_string(c);
      } else if (k.is_one(c)) {
        out += mono;
      } else {
        out += k.to_string(c) + "*" + mono;
      }
    }
    return out;
  }

  std::string monomial_string(const Monomial& m) const {
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (!m[i]) continue;
      if (!s.empty()) s += "*";
      s += ring_->name(i);
      if (m[i] > 1) s += "^" + std::to_string(m[i]);
    }
    return s;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
  }

 private:
  static void check_same(const Polynomial& a, const Polynomial& b) {
    if (!same_ring(a.ring_, b.ring_)) throw RingMismatch();
  }

  static std::vector<term_type> canonicalize(const PolynomialRing<F>& ring, std::vector<term_type> terms) {
    const auto order = TermOrder::grevlex();
    const F& k = ring.field();
    for (const auto& t : terms)
      if (t.monomial.size() != ring.num_vars()) throw DomainError("monomial length does not match ring");
    std::sort(terms.begin(), terms.end(),
              [&](const term_type& a, const term_type& b) { return order.greater(a.monomial, b.monomial); });
    std::vector<term_type> out;
    out.reserve(terms.size());
    for (auto& t : terms) {
      if (!out.empty() && out.back().monomial == t.monomial) {
        out.back().coeff = k.add(out.back().coeff, t.coeff);
      } else {
        if (!out.empty() && k.is_zero(out.back().coeff)) out.pop_back();
        out.push_back(std::move(t));
      }
    }
    if (!out.empty() && k.is_zero(out.back().coeff)) out.pop_back();
    return out;
  }

  static Polynomial combine(const Polynomial& a, const Polynomial& b, bool subtract) {
    check_same(a, b);
    const F& k = a.field();
    const auto order = TermOrder::grevlex();
    Polynomial r(a.ring_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      if (j == b.terms_.size() ||
          (i < a.terms_.size() && order.greater(a.terms_[i].monomial, b.terms_[j].monomial))) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (i == a.terms_.size() || order.greater(b.terms_[j].monomial, a.terms_[i].monomial)) {
        auto t = b.terms_[j++];
        if (subtract) t.coeff = k.neg(t.coeff);
        r.terms_.push_back(std::move(t));
      } else {
        auto c = subtract ? k.sub(a.terms_[i].coeff, b.terms_[j].coeff) : k.add(a.terms_[i].coeff, b.terms_[j].coeff);
        if (!k.is_zero(c)) r.terms_.push_back({a.terms_[i].monomial, std::move(c)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  RingPtr<F> ring_;
  std::vector<term_type> terms_;
};

/// Image of f under the ring map sending variable i to images[i].
template <class F>
Polynomial<F> substitute(const Polynomial<F>& f, const RingPtr<F>& target,
                         std::span<const Polynomial<F>> images) {
  if (images.size() != f.ring()->num_vars()) throw DomainError("substitution arity mismatch");
  Polynomial<F> result(target);
  for (const auto& t : f.terms()) {
    Polynomial<F> term = Polynomial<F>::constant(target, t.coeff);
    for (std::size_t i = 0; i < t.monomial.size(); ++i)
      if (t.monomial[i]) term *= images[i].pow(t.monomial[i]);
    result += term;
  }
  return result;
}

/// Moves f into `target`, sending variable i to target variable index_map[i].
template <class F>
Polynomial<F> relabel(const Polynomial<F>& f, const RingPtr<F>& target, std::span<const std::size_t> index_map) {
  std::vector<Term<F>> terms;
  terms.reserve(f.num_terms());
  for (const auto& t : f.terms()) {
    Monomial m(target->num_vars());
    for (std::size_t i = 0; i < t.monomial.size(); ++i) {
      if (!t.monomial[i]) continue;
      if (index_map[i] >= target->num_vars()) throw DomainError("variable has no image in target ring");
      m[index_map[i]] += t.monomial[i];
    }
    terms.push_back({std::move(m), t.coeff});
  }
  return Polynomial<F>(target, std::move(terms));
}

/// Embeds f into a ring whose variable list starts with f's variables.
template <class F>
Polynomial<F> embed(const Polynomial<F>& f, const RingPtr<F>& target) {
  std::vector<std::size_t> map(f.ring()->num_vars());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = i;
  return relabel(f, target, map);
}

}  // namespace grady
