#include <catch_amalgamated.hpp>

#include <random>

#include "grady/decomposition.hpp"
#include "grady/parser.hpp"
#include "random_polys.hpp"

using namespace grady;

namespace {

template <class F>
Ideal<F> ideal(const RingPtr<F>& ring, std::initializer_list<const char*> gens) {
  std::vector<Polynomial<F>> polys;
  for (auto g : gens) polys.push_back(parse_polynomial(g, ring));
  return Ideal<F>(ring, std::move(polys));
}

template <class F>
Ideal<F> random_monomial_ideal(std::mt19937_64& rng, const RingPtr<F>& ring, std::size_t max_gens, unsigned max_degree) {
  std::uniform_int_distribution<std::size_t> count(1, max_gens);
  std::vector<Polynomial<F>> gens;
  for (std::size_t i = count(rng); i > 0; --i) {
    auto m = testing::random_monomial(rng, ring->num_vars(), max_degree);
    if (m.is_one()) continue;
    gens.push_back(Polynomial<F>::monomial(ring, m));
  }
  if (gens.empty()) gens.push_back(Polynomial<F>::variable(ring, 0));
  return Ideal<F>(ring, std::move(gens));
}

}  // namespace

TEST_CASE("monomial decomposition of (x^2, xy)", "[monomial]") {
  auto q = make_ring(Rationals{}, {"x", "y"});
  auto d = monomial_primary_decomposition(ideal(q, {"x^2", "x*y"}));
  REQUIRE(d.components.size() == 2);
  CHECK(ideal_equal(d.components[0].component, ideal(q, {"x"})));
  CHECK(ideal_equal(d.components[1].component, ideal(q, {"x^2", "y"})));
  CHECK(ideal_equal(d.components[1].radical, ideal(q, {"x", "y"})));
  CHECK(d.minimal);
  CHECK(intersects_to_target(d));
}

TEST_CASE("monomial decomposition of (x^4, x^3 y)", "[monomial]") {
  auto q = make_ring(Rationals{}, {"x", "y"});
  auto i = ideal(q, {"x^4", "x^3*y"});
  auto d = monomial_primary_decomposition(i);
  REQUIRE(d.components.size() == 2);
  CHECK(ideal_equal(d.components[0].component, ideal(q, {"x^3"})));
  CHECK(ideal_equal(d.components[1].component, ideal(q, {"x^4", "y"})));
  CHECK(monomial_dimension(i) == 1);
  CHECK(same_ideal_set(associated_primes(d), {ideal(q, {"x"}), ideal(q, {"x", "y"})}));
  CHECK(same_ideal_set(minimal_primes(d), {ideal(q, {"x"})}));
  CHECK(ideal_equal(monomial_radical(i), ideal(q, {"x"})));
}

TEST_CASE("monomial generators are minimal and lex-descending", "[monomial]") {
  auto q = make_ring(Rationals{}, {"x", "y"});
  auto gens = monomial_generators(ideal(q, {"y^4", "x^2*y^3", "x^4", "x^3*y", "x^4*y"}));
  std::vector<std::string> printed;
  for (const auto& m : gens) printed.push_back(Polynomial<Rationals>::monomial(q, m).to_string());
  CHECK(printed == std::vector<std::string>{"x^4", "x^3*y", "x^2*y^3", "y^4"});
  CHECK_THROWS_AS(monomial_generators(ideal(q, {"x + y"})), DomainError);
}

TEST_CASE("monomial edge cases", "[monomial]") {
  auto q = make_ring(Rationals{}, {"x", "y", "z"});
  auto zero = monomial_primary_decomposition(Ideal<Rationals>::zero(q));
  REQUIRE(zero.components.size() == 1);
  CHECK(zero.components[0].component.is_zero());
  CHECK_THROWS_AS(monomial_primary_decomposition(Ideal<Rationals>::unit(q)), DomainError);

  auto d = monomial_primary_decomposition(ideal(q, {"x*y", "y*z", "x*z"}));
  CHECK(d.components.size() == 3);
  CHECK(monomial_dimension(ideal(q, {"x*y", "y*z", "x*z"})) == 1);
}

TEST_CASE("thickened alternate decomposition", "[monomial]") {
  auto q = make_ring(Rationals{}, {"x", "y"});
  auto i = ideal(q, {"x^2", "x*y"});
  auto alt = thickened_monomial_decomposition(i);
  REQUIRE(alt);
  CHECK(intersects_to_target(*alt));
  CHECK(alt->minimal);
  auto d = monomial_primary_decomposition(i);
  CHECK_FALSE(ideal_equal(alt->components[1].component, d.components[1].component));
  CHECK(same_ideal_set(associated_primes(*alt), associated_primes(d)));
  CHECK_FALSE(thickened_monomial_decomposition(ideal(q, {"x*y"})));
}

TEST_CASE("univariate decomposition over F5", "[univariate]") {
  auto f5 = make_ring(PrimeField(5), {"x"});
  auto d = univariate_primary_decomposition(ideal(f5, {"x^2 - 1"}));
  REQUIRE(d.components.size() == 2);
  // Roots 1 and 4; note x + 4 = x - 1 in F5.
  CHECK(ideal_equal(d.components[0].component, ideal(f5, {"x - 4"})));
  CHECK(ideal_equal(d.components[1].component, ideal(f5, {"x + 4"})));
  CHECK(d.all_verified());

  auto e = univariate_primary_decomposition(ideal(f5, {"(x^2 + 2)^2*(x + 1)^3"}));
  REQUIRE(e.components.size() == 2);
  CHECK(ideal_equal(e.components[0].radical, ideal(f5, {"x + 1"})));
  CHECK(ideal_equal(e.components[1].component, ideal(f5, {"(x^2 + 2)^2"})));
  CHECK(intersects_to_target(e));
}

TEST_CASE("univariate decomposition over Q", "[univariate]") {
  auto q = make_ring(Rationals{}, {"x"});
  auto d = univariate_primary_decomposition(ideal(q, {"x^2 - 2*x + 1"}));
  REQUIRE(d.components.size() == 1);
  CHECK(ideal_equal(d.components[0].component, ideal(q, {"(x - 1)^2"})));
  CHECK(ideal_equal(d.components[0].radical, ideal(q, {"x - 1"})));

  auto e = univariate_primary_decomposition(ideal(q, {"(2*x - 1)*x^2*(x^2 - 2)"}));
  CHECK(e.components.size() == 3);
  CHECK(e.all_verified());
  CHECK(intersects_to_target(e));

  // (x^2 + 1)(x^2 + 2) has no rational roots and degree 4: left as assumed.
  auto f = univariate_primary_decomposition(ideal(q, {"(x^2 + 1)*(x^2 + 2)"}));
  CHECK_FALSE(f.all_verified());
  CHECK_THROWS_AS(univariate_primary_decomposition(ideal(q, {"(x^2 + 1)*(x^2 + 2)"}), true), UnsupportedClass);
  CHECK_THROWS_AS(univariate_primary_decomposition(Ideal<Rationals>::unit(q)), DomainError);
}

TEST_CASE("certified decompositions", "[certificate]") {
  auto q = make_ring(Rationals{}, {"x", "y"});
  auto qq = ideal(q, {"x^4", "x^3*y", "x^2*y^2 + x*y^3", "y^4"});
  auto target = intersect(ideal(q, {"x^3"}), qq);
  std::vector<CertificateComponent<Rationals>> cert{{ideal(q, {"x^3"}), std::nullopt}, {qq, std::nullopt}};
  auto d = certified_decomposition<Rationals>(target, cert);
  CHECK(d.all_verified());
  CHECK(d.minimal);
  CHECK(ideal_equal(d.components[1].radical, ideal(q, {"x", "y"})));

  std::vector<CertificateComponent<Rationals>> wrong{{ideal(q, {"x^2"}), std::nullopt}};
  CHECK_THROWS_AS(certified_decomposition<Rationals>(target, wrong), DomainError);

  auto curve = ideal(q, {"x^2 + y^2 - 1"});
  std::vector<CertificateComponent<Rationals>> bare{{curve, std::nullopt}};
  CHECK_THROWS_AS(classical_decomposition<Rationals>(curve, bare), UnsupportedClass);
  std::vector<CertificateComponent<Rationals>> given{{curve, curve}};
  CHECK(classical_decomposition<Rationals>(curve, given).components[0].status == Provenance::assumed);
  CHECK_THROWS_AS(classical_decomposition(curve), UnsupportedClass);
}

TEST_CASE("prime dimensions", "[dimension]") {
  auto q = make_ring(Rationals{}, {"x", "y", "z"});
  CHECK(prime_dimension(ideal(q, {"x", "z"})) == 1u);
  CHECK(prime_dimension(ideal(q, {"x - 1", "y + 2", "z"})) == 0u);
  CHECK(prime_dimension(Ideal<Rationals>::zero(q)) == 3u);
  CHECK_FALSE(prime_dimension(ideal(q, {"x^2 + y^2 - 1"})));
}

TEST_CASE("random monomial decompositions are minimal and exact", "[monomial][property]") {
  std::mt19937_64 rng(7);
  auto f5 = make_ring(PrimeField(5), {"x", "y", "z"});
  for (int trial = 0; trial < 60; ++trial) {
    auto i = random_monomial_ideal(rng, f5, 4, 4);
    auto d = monomial_primary_decomposition(i);
    INFO(trial);
    CHECK(intersects_to_target(d));
    CHECK(d.minimal);
    for (const auto& c : d.components) {
      CHECK(ideal_equal(monomial_radical(c.component), c.radical));
      CHECK(ideal_subset(i, c.component));
    }
    if (auto alt = thickened_monomial_decomposition(i)) {
      CHECK(intersects_to_target(*alt));
      CHECK(alt->minimal);
      CHECK(same_ideal_set(associated_primes(*alt), associated_primes(d)));
    }
  }
}
