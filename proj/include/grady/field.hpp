#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "grady/error.hpp"

namespace grady {

// Coefficient fields. Both model the same policy interface: a value_type plus
// arithmetic member functions, so polynomial code is written once against `F`.

class Rationals {
 public:
  using value_type = mpq_class;

  static constexpr std::uint32_t characteristic() noexcept { return 0; }
  static std::string name() { return "Q"; }

  value_type zero() const { return value_type(0); }
  value_type one() const { return value_type(1); }
  value_type from_integer(const mpz_class& z) const { return value_type(z); }
  value_type from_fraction(const mpz_class& num, const mpz_class& den) const {
    if (den == 0) throw DomainError("division by zero in rational literal");
    value_type q(num, den);
    q.canonicalize();
    return q;
  }

  bool is_zero(const value_type& a) const { return sgn(a) == 0; }
  bool is_one(const value_type& a) const { return a == 1; }
  bool is_negative(const value_type& a) const { return sgn(a) < 0; }

  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type inv(const value_type& a) const {
    if (is_zero(a)) throw DomainError("inverse of zero");
    return 1 / a;
  }

  std::string to_string(const value_type& a) const { return a.get_str(); }

  bool operator==(const Rationals&) const = default;
};

bool is_prime(std::uint64_t n);

/// Z/p with p prime and p < 2^31; residues are kept in [0, p).
class PrimeField {
 public:
  using value_type = std::uint32_t;

  explicit PrimeField(std::uint32_t p);

  std::uint32_t characteristic() const noexcept { return p_; }
  std::string name() const { return "F" + std::to_string(p_); }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_integer(const mpz_class& z) const {
    mpz_class r = z % p_;
    if (r < 0) r += p_;
    return static_cast<value_type>(r.get_ui());
  }
  value_type from_fraction(const mpz_class& num, const mpz_class& den) const {
    value_type d = from_integer(den);
    if (d == 0) throw DomainError("denominator vanishes in " + name());
    return mul(from_integer(num), inv(d));
  }
  value_type from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<value_type>(r);
  }

  bool is_zero(value_type a) const { return a == 0; }
  bool is_one(value_type a) const { return a == 1; }
  bool is_negative(value_type) const { return false; }

  value_type add(value_type a, value_type b) const {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<value_type>(s >= p_ ? s - p_ : s);
  }
  value_type sub(value_type a, value_type b) const {
    return a >= b ? a - b : static_cast<value_type>(std::uint64_t{a} + p_ - b);
  }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>(std::uint64_t{a} * b % p_);
  }
  value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
  value_type inv(value_type a) const;

  std::string to_string(value_type a) const { return std::to_string(a); }

  bool operator==(const PrimeField&) const = default;

 private:
  std::uint32_t p_;
};

}  // namespace grady
