#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "grady/monomial.hpp"

namespace grady {

/// Monomial order on a fixed number of variables. Variables are ranked by
/// index (x0 > x1 > ...) in every order.
class TermOrder {
 public:
  enum class Kind { grevlex, lex, block_elimination };

  static TermOrder grevlex() { return TermOrder(Kind::grevlex, {}); }
  static TermOrder lex() { return TermOrder(Kind::lex, {}); }
  /// Eliminated variables form a grevlex block that dominates the grevlex
  /// block of the remaining variables.
  static TermOrder elimination(std::vector<bool> eliminated) {
    return TermOrder(Kind::block_elimination, std::move(eliminated));
  }

  Kind kind() const noexcept { return kind_; }
  const std::vector<bool>& eliminated() const noexcept { return eliminated_; }
  bool is_eliminated(std::size_t var) const {
    return var < eliminated_.size() && eliminated_[var];
  }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  bool operator==(const TermOrder&) const = default;

 private:
  TermOrder(Kind kind, std::vector<bool> eliminated)
      : kind_(kind), eliminated_(std::move(eliminated)) {}

  Kind kind_;
  std::vector<bool> eliminated_;
};

}  // namespace grady
