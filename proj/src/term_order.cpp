#include "grady/term_order.hpp"

#include <cstdint>

namespace grady {
namespace {

// grevlex restricted to the variables whose mask bit equals `want`
// (mask may be empty meaning "all variables, want = false").
std::strong_ordering grevlex_block(const Monomial& a, const Monomial& b,
                                   const std::vector<bool>& mask, bool want) {
  const std::size_t n = a.size();
  auto in_block = [&](std::size_t i) {
    bool bit = i < mask.size() && mask[i];
    return bit == want;
  };
  std::uint64_t da = 0, db = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!in_block(i)) continue;
    da += a[i];
    db += b[i];
  }
  if (da != db) return da <=> db;
  for (std::size_t i = n; i-- > 0;) {
    if (!in_block(i)) continue;
    if (a[i] != b[i]) return b[i] <=> a[i];  // smaller trailing exponent wins
  }
  return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering TermOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case Kind::lex:
      for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] <=> b[i];
      return std::strong_ordering::equal;
    case Kind::grevlex:
      return grevlex_block(a, b, {}, false);
    case Kind::block_elimination: {
      auto c = grevlex_block(a, b, eliminated_, true);
      if (c != 0) return c;
      return grevlex_block(a, b, eliminated_, false);
    }
  }
  return std::strong_ordering::equal;
}

}  // namespace grady
