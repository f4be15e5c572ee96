#include <random>

#include <catch_amalgamated.hpp>

#include "grady/parser.hpp"
#include "random_polys.hpp"

using namespace grady;

namespace {

template <class F>
Polynomial<F> P(const RingPtr<F>& ring, const char* text) {
  return parse_polynomial(text, ring);
}

}  // namespace

TEST_CASE("parse drops zero terms", "[parse]") {
  auto r = make_ring(Rationals{}, {"x", "y"});
  auto f = P(r, "x^4 + 0*y");
  CHECK(f == Polynomial<Rationals>::monomial(r, Monomial{4, 0}));
  CHECK(f.to_string() == "x^4");
}

TEST_CASE("parse the binomial generator of q", "[parse]") {
  auto r = make_ring(Rationals{}, {"x", "y"});
  auto f = P(r, "y^2*x^2 + y^3*x");
  REQUIRE(f.num_terms() == 2);
  CHECK(f.to_string() == "x^2*y^2 + x*y^3");
}

TEST_CASE("parse reduces coefficients in F5", "[parse]") {
  auto r = make_ring(PrimeField(5), {"x"});
  CHECK(P(r, "(x-1)*(x+1)").to_string() == "x^2 + 4");
}

TEST_CASE("parse rational literals and signs", "[parse]") {
  auto r = make_ring(Rationals{}, {"x", "y"});
  CHECK(P(r, "-x + 1/2*y - 3").to_string() == "-x + 1/2*y - 3");
  CHECK(P(r, "2/4*x") == P(r, "1/2*x"));
  auto f5 = make_ring(PrimeField(5), {"x"});
  CHECK(P(f5, "1/2*x").to_string() == "3*x");
}

TEST_CASE("parse errors carry a position", "[parse]") {
  auto r = make_ring(Rationals{}, {"x", "y"});
  auto fails_at = [&](const char* text, std::size_t pos, const char* needle) {
    try {
      P(r, text);
      FAIL("expected a parse error for " << text);
    } catch (const ParseError& e) {
      CHECK(e.position() == pos);
      CHECK(std::string(e.what()).find(needle) != std::string::npos);
    }
  };
  fails_at("x + z", 4, "unknown variable 'z'");
  fails_at("x^", 2, "malformed exponent");
  fails_at("x^y", 2, "malformed exponent");
  fails_at("(x + y", 0, "unbalanced");
  fails_at("x + y)", 5, "unbalanced");
  fails_at("2x", 1, "unexpected character");
  fails_at("x + -y", 4, "unexpected character");
  fails_at("", 0, "empty");
}

TEST_CASE("arithmetic examples", "[arith]") {
  auto q = make_ring(Rationals{}, {"x"});
  auto x = Polynomial<Rationals>::variable(q, 0);
  auto one = Polynomial<Rationals>::one(q);
  CHECK((x + (-x)).is_zero());
  CHECK(((x - one) * (x + one)).to_string() == "x^2 - 1");

  auto f2 = make_ring(PrimeField(2), {"x"});
  auto y = Polynomial<PrimeField>::variable(f2, 0);
  auto e = Polynomial<PrimeField>::one(f2);
  CHECK(((y + e) * (y + e)).to_string() == "x^2 + 1");
}

TEST_CASE("ring mismatch is rejected", "[arith]") {
  auto a = make_ring(Rationals{}, {"x"});
  auto b = make_ring(Rationals{}, {"y"});
  CHECK_THROWS_AS(Polynomial<Rationals>::variable(a, 0) + Polynomial<Rationals>::variable(b, 0), RingMismatch);
  // structurally equal rings interoperate
  auto c = make_ring(Rationals{}, {"x"});
  CHECK_NOTHROW(Polynomial<Rationals>::variable(a, 0) * Polynomial<Rationals>::variable(c, 0));
}

TEST_CASE("leading terms", "[order]") {
  auto r = make_ring(Rationals{}, {"x", "y"});
  auto lt = P(r, "x^2*y + x*y^2 + y").leading_term(TermOrder::grevlex());
  CHECK(lt.monomial == Monomial{2, 1});
  CHECK(lt.coeff == 1);
  CHECK(P(r, "x + y^5").leading_term(TermOrder::lex()).monomial == Monomial{1, 0});
  auto c = P(r, "7").leading_term(TermOrder::grevlex());
  CHECK(c.monomial.is_one());
  CHECK(c.coeff == 7);
  CHECK_THROWS_AS(Polynomial<Rationals>(r).leading_term(TermOrder::grevlex()), DomainError);
}

TEST_CASE("block elimination order dominates", "[order]") {
  auto order = TermOrder::elimination({true, false, false});
  CHECK(order.greater(Monomial{1, 0, 0}, Monomial{0, 9, 9}));
  CHECK(order.greater(Monomial{0, 2, 0}, Monomial{0, 1, 1}));
  CHECK(order.greater(Monomial{0, 1, 0}, Monomial{0, 0, 1}));
}

TEST_CASE("prime field construction", "[field]") {
  CHECK_THROWS_AS(PrimeField(4), DomainError);
  CHECK_THROWS_AS(PrimeField(1), DomainError);
  CHECK_THROWS_AS(PrimeField(2147483659u), DomainError);
  CHECK_NOTHROW(PrimeField(2147483647u));
}

TEST_CASE("canonical form properties", "[property]") {
  std::mt19937_64 rng(7);
  auto q = make_ring(Rationals{}, {"x", "y", "z"});
  auto f7 = make_ring(PrimeField(7), {"x", "y", "z"});
  for (int trial = 0; trial < 200; ++trial) {
    auto f = testing::random_polynomial(rng, q, 4, 4);
    auto g = testing::random_polynomial(rng, q, 4, 4);
    auto h = testing::random_polynomial(rng, q, 3, 3);
    CHECK(parse_polynomial(f.to_string(), q) == f);
    CHECK(f + g == g + f);
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * (g + h) == f * g + f * h);

    auto a = testing::random_polynomial(rng, f7, 4, 4);
    auto b = testing::random_polynomial(rng, f7, 4, 4);
    CHECK(parse_polynomial(a.to_string(), f7) == a);
    CHECK(a * b == b * a);
  }
}

TEST_CASE("field inverses", "[property]") {
  std::mt19937_64 rng(11);
  Rationals qq;
  PrimeField f(2147483647u);
  std::uniform_int_distribution<long> d(-1000000, 1000000);
  for (int i = 0; i < 500; ++i) {
    long n = d(rng), m = d(rng);
    if (n == 0 || m == 0) continue;
    auto a = qq.from_fraction(n, m);
    CHECK(qq.is_one(qq.mul(a, qq.inv(a))));
    auto b = f.from_int(n);
    CHECK(f.is_one(f.mul(b, f.inv(b))));
  }
}

TEST_CASE("leading term is multiplicative", "[property]") {
  std::mt19937_64 rng(13);
  auto r = make_ring(PrimeField(5), {"x", "y", "z"});
  std::vector<TermOrder> orders{TermOrder::grevlex(), TermOrder::lex(), TermOrder::elimination({false, true, false})};
  const PrimeField& k = r->field();
  for (int trial = 0; trial < 200; ++trial) {
    auto f = testing::random_polynomial(rng, r, 4, 3);
    auto g = testing::random_polynomial(rng, r, 4, 3);
    if (f.is_zero() || g.is_zero()) continue;
    for (const auto& o : orders) {
      auto lf = f.leading_term(o), lg = g.leading_term(o), lfg = (f * g).leading_term(o);
      CHECK(lfg.monomial == lf.monomial * lg.monomial);
      CHECK(lfg.coeff == k.mul(lf.coeff, lg.coeff));
    }
  }
}
