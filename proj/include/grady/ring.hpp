#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "grady/error.hpp"
#include "grady/field.hpp"

namespace grady {

/// k[x_0, ..., x_{n-1}] with named variables. Immutable; shared by pointer.
template <class F>
class PolynomialRing {
 public:
  PolynomialRing(F field, std::vector<std::string> names)
      : field_(std::move(field)), names_(std::move(names)) {
    for (std::size_t i = 0; i < names_.size(); ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (names_[i] == names_[j]) throw DomainError("duplicate variable name '" + names_[i] + "'");
  }

  const F& field() const noexcept { return field_; }
  std::size_t num_vars() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(std::size_t i) const { return names_[i]; }

  std::optional<std::size_t> index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return i;
    return std::nullopt;
  }

  bool operator==(const PolynomialRing&) const = default;

 private:
  F field_;
  std::vector<std::string> names_;
};

template <class F>
using RingPtr = std::shared_ptr<const PolynomialRing<F>>;

template <class F>
RingPtr<F> make_ring(F field, std::vector<std::string> names) {
  return std::make_shared<const PolynomialRing<F>>(std::move(field), std::move(names));
}

template <class F>
bool same_ring(const RingPtr<F>& a, const RingPtr<F>& b) {
  return a == b || (a && b && *a == *b);
}

/// Ring with `extra` variables appended after the existing ones.
template <class F>
RingPtr<F> extend_ring(const RingPtr<F>& ring, const std::vector<std::string>& extra) {
  auto names = ring->names();
  names.insert(names.end(), extra.begin(), extra.end());
  return make_ring(ring->field(), std::move(names));
}

}  // namespace grady
