#include "grady/field.hpp"

namespace grady {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31) || !is_prime(p)) {
    throw DomainError("F" + std::to_string(p) + " is not a prime field below 2^31");
  }
}

PrimeField::value_type PrimeField::inv(value_type a) const {
  if (a == 0) throw DomainError("inverse of zero");
  // Fermat: a^(p-2)
  std::uint64_t base = a, result = 1;
  std::uint32_t e = p_ - 2;
  while (e) {
    if (e & 1) result = result * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  return static_cast<value_type>(result);
}

}  // namespace grady
