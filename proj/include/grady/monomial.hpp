#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace grady {

/// Exponent vector, one entry per ring variable.
class Monomial {
 public:
  using exponent_type = std::uint32_t;

  Monomial() = default;
  explicit Monomial(std::size_t num_vars) : exps_(num_vars, 0) {}
  explicit Monomial(std::vector<exponent_type> exps) : exps_(std::move(exps)) {}
  Monomial(std::initializer_list<exponent_type> exps) : exps_(exps) {}

  static Monomial variable(std::size_t num_vars, std::size_t index, exponent_type power = 1) {
    Monomial m(num_vars);
    m.exps_[index] = power;
    return m;
  }

  std::size_t size() const noexcept { return exps_.size(); }
  exponent_type operator[](std::size_t i) const { return exps_[i]; }
  exponent_type& operator[](std::size_t i) { return exps_[i]; }
  std::span<const exponent_type> exponents() const noexcept { return exps_; }

  std::uint64_t degree() const noexcept {
    std::uint64_t d = 0;
    for (auto e : exps_) d += e;
    return d;
  }
  bool is_one() const noexcept {
    for (auto e : exps_)
      if (e) return false;
    return true;
  }
  /// Number of variables with a positive exponent.
  std::size_t support_size() const noexcept {
    std::size_t n = 0;
    for (auto e : exps_) n += e != 0;
    return n;
  }

  bool divides(const Monomial& other) const noexcept {
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > other.exps_[i]) return false;
    return true;
  }
  /// Precondition: divisor.divides(*this).
  Monomial operator/(const Monomial& divisor) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= divisor.exps_[i];
    return r;
  }
  Monomial operator*(const Monomial& other) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += other.exps_[i];
    return r;
  }
  Monomial pow(exponent_type k) const {
    Monomial r(*this);
    for (auto& e : r.exps_) e *= k;
    return r;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a);
    for (std::size_t i = 0; i < r.exps_.size(); ++i)
      if (b.exps_[i] > r.exps_[i]) r.exps_[i] = b.exps_[i];
    return r;
  }
  friend bool coprime(const Monomial& a, const Monomial& b) noexcept {
    for (std::size_t i = 0; i < a.exps_.size(); ++i)
      if (a.exps_[i] && b.exps_[i]) return false;
    return true;
  }
  /// Squarefree part: every positive exponent replaced by 1.
  Monomial support() const {
    Monomial r(*this);
    for (auto& e : r.exps_) e = e ? 1 : 0;
    return r;
  }

  // Plain lexicographic comparison of exponent vectors; for containers only,
  // term orders live in TermOrder.
  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<exponent_type> exps_;
};

}  // namespace grady
