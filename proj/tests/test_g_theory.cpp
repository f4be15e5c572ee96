#include <catch_amalgamated.hpp>

#include <random>

#include "grady/g_theory.hpp"
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

Grading z2_grading() { return Grading(GradingGroup(0, {2}), {Hdeg{{}, {1}}}); }

struct Fine {
  RingPtr<Rationals> q = make_ring(Rationals{}, {"x", "y"});
  GradedRing<Rationals> graded{q, Grading::fine(2)};
  Ideal<Rationals> i = ideal(q, {"x^4", "x^3*y"});
};

struct Cyclic {
  RingPtr<PrimeField> f5 = make_ring(PrimeField(5), {"x"});
  GradedRing<PrimeField> graded{f5, z2_grading()};
  Ideal<PrimeField> i = ideal(f5, {"x^2 - 1"});
};

template <class F>
void require_all_pass(const std::vector<CheckEntry>& report) {
  for (const auto& e : report) {
    INFO(e.name << ": " << e.detail);
    CHECK(e.status == CheckStatus::pass);
  }
}

}  // namespace

TEST_CASE("g_radical", "[g_theory]") {
  Fine a;
  CHECK(ideal_equal(g_radical(a.i, a.graded), ideal(a.q, {"x"})));
  CHECK(g_radical(Ideal<Rationals>::unit(a.q), a.graded).is_unit());
  CHECK_FALSE(is_g_radical(a.i, a.graded).holds);
  CHECK(is_g_radical(Ideal<Rationals>::zero(a.q), a.graded).holds);
  CHECK_THROWS_AS(g_radical(ideal(a.q, {"x - 1"}), a.graded), DomainError);

  Cyclic b;
  CHECK(ideal_equal(g_radical(b.i, b.graded), b.i));
  CHECK(is_g_radical(b.i, b.graded).holds);
}

TEST_CASE("G-prime and G-primary predicates", "[g_theory]") {
  Fine a;
  CHECK(is_g_prime(ideal(a.q, {"x"}), a.graded).holds);
  CHECK_FALSE(is_g_prime(a.i, a.graded).holds);
  CHECK(is_g_primary(ideal(a.q, {"x^4", "x^3*y", "x^2*y^3", "y^4"}), a.graded).holds);
  CHECK_FALSE(is_g_primary(a.i, a.graded).holds);

  Cyclic b;
  CHECK(is_g_prime(b.i, b.graded).holds);
  CHECK(is_g_primary(b.i, b.graded).holds);
  CHECK_FALSE(is_g_prime(Ideal<PrimeField>::unit(b.f5), b.graded).holds);
}

TEST_CASE("G-primary decomposition of (x^4, x^3 y)", "[g_theory]") {
  Fine a;
  auto d = g_primary_decomposition(a.i, a.graded);
  REQUIRE(d.components.size() == 2);
  CHECK(d.minimal);
  CHECK(ideal_equal(d.components[0].component, ideal(a.q, {"x^3"})));
  CHECK(ideal_equal(d.components[0].g_radical, ideal(a.q, {"x"})));
  CHECK(ideal_equal(d.components[1].component, ideal(a.q, {"x^4", "y"})));
  CHECK(ideal_equal(d.components[1].g_radical, ideal(a.q, {"x", "y"})));

  CHECK(same_ideal_set(g_associated_primes(a.i, a.graded), {ideal(a.q, {"x"}), ideal(a.q, {"x", "y"})}));
  CHECK(same_ideal_set(g_minimal_primes(a.i, a.graded), {ideal(a.q, {"x"})}));
}

TEST_CASE("G-primary decomposition through a certificate reaches q*", "[g_theory]") {
  Fine a;
  auto qq = ideal(a.q, {"x^4", "x^3*y", "x^2*y^2 + x*y^3", "y^4"});
  REQUIRE(ideal_equal(intersect(ideal(a.q, {"x^3"}), qq), a.i));
  std::vector<CertificateComponent<Rationals>> cert{{ideal(a.q, {"x^3"}), std::nullopt}, {qq, std::nullopt}};
  auto d = g_primary_decomposition<Rationals>(a.i, a.graded, cert);
  REQUIRE(d.components.size() == 2);
  CHECK(d.minimal);
  CHECK(d.all_verified());
  CHECK(ideal_equal(d.components[0].component, ideal(a.q, {"x^3"})));
  CHECK(ideal_equal(d.components[1].component, ideal(a.q, {"x^4", "x^3*y", "x^2*y^3", "y^4"})));
}

TEST_CASE("G-primary decomposition under Z/2 merges conjugate points", "[g_theory]") {
  Cyclic b;
  auto d = g_primary_decomposition(b.i, b.graded);
  REQUIRE(d.components.size() == 1);
  CHECK(ideal_equal(d.components[0].component, b.i));
  CHECK(d.components[0].witnesses.size() == 2);
  CHECK(same_ideal_set(g_associated_primes(b.i, b.graded), {b.i}));
  CHECK(same_ideal_set(g_minimal_primes(b.i, b.graded), {b.i}));
}

TEST_CASE("G-associated witnesses", "[g_theory]") {
  Fine a;
  auto d = g_primary_decomposition(a.i, a.graded);
  for (std::size_t k = 0; k < d.components.size(); ++k) {
    auto f = g_ass_witness(d, k, a.graded);
    REQUIRE(f);
    CHECK(is_homogeneous(*f, a.graded));
    CHECK(ideal_equal(colon(a.i, *f), d.components[k].g_radical));
  }
}

TEST_CASE("poset components", "[g_theory]") {
  Fine a;
  auto d = g_primary_decomposition(a.i, a.graded);
  std::vector<Ideal<Rationals>> lower{ideal(a.q, {"x"})};
  CHECK(ideal_equal(poset_component<Rationals>(d, lower).ideal, ideal(a.q, {"x^3"})));
  CHECK(ideal_equal(poset_component<Rationals>(d, d.g_radicals()).ideal, a.i));
  CHECK(poset_component<Rationals>(d, {}).ideal.is_unit());
  std::vector<Ideal<Rationals>> upper{ideal(a.q, {"x", "y"})};
  CHECK_THROWS_AS(poset_component<Rationals>(d, upper), DomainError);
  std::vector<Ideal<Rationals>> stranger{ideal(a.q, {"y"})};
  CHECK_THROWS_AS(poset_component<Rationals>(d, stranger), DomainError);
}

TEST_CASE("poset components agree across decompositions", "[g_theory]") {
  Fine a;
  auto d = g_primary_decomposition(a.i, a.graded);
  auto alt = thickened_monomial_decomposition(a.i);
  REQUIRE(alt);
  std::vector<CertificateComponent<Rationals>> cert;
  for (const auto& c : alt->components) cert.push_back({c.component, c.radical});
  // The alternate decomposition enters through the certificate path.
  auto e = g_primary_decomposition<Rationals>(a.i, a.graded, cert);
  CHECK_FALSE(ideal_equal(d.components[1].component, e.components[1].component));
  std::vector<Ideal<Rationals>> lower{ideal(a.q, {"x"})};
  CHECK(ideal_equal(poset_component<Rationals>(d, lower).ideal, poset_component<Rationals>(e, lower).ideal));
}

TEST_CASE("theorem suite", "[g_theory]") {
  Fine a;
  require_all_pass<Rationals>(verify_theorem_suite(a.i, a.graded));
  Cyclic b;
  require_all_pass<PrimeField>(verify_theorem_suite(b.i, b.graded));
  require_all_pass<Rationals>(verify_theorem_suite(ideal(a.q, {"x"}), a.graded));
  require_all_pass<Rationals>(verify_theorem_suite(ideal(a.q, {"x*y"}), a.graded));
}

TEST_CASE("G-radical laws on random monomial ideals", "[g_theory][property]") {
  std::mt19937_64 rng(11);
  auto f5 = make_ring(PrimeField(5), {"x", "y", "z"});
  GradedRing<PrimeField> graded(f5, Grading::standard(3));
  auto random_ideal = [&] {
    std::vector<Polynomial<PrimeField>> gens;
    for (int k = 0; k < 3; ++k) {
      auto m = testing::random_monomial(rng, 3, 3);
      if (!m.is_one()) gens.push_back(Polynomial<PrimeField>::monomial(f5, m));
    }
    if (gens.empty()) gens.push_back(Polynomial<PrimeField>::variable(f5, 1));
    return Ideal<PrimeField>(f5, gens);
  };
  for (int trial = 0; trial < 25; ++trial) {
    INFO(trial);
    auto i = random_ideal(), j = random_ideal();
    auto gi = g_radical(i, graded), gj = g_radical(j, graded);
    CHECK(ideal_equal(g_radical(product(i, j), graded), intersect(gi, gj)));
    CHECK(ideal_equal(g_radical(intersect(i, j), graded), intersect(gi, gj)));
    for (unsigned n = 1; n <= 3; ++n) CHECK(ideal_equal(g_radical(power(i, n), graded), gi));
    CHECK(ideal_equal(g_radical(gi, graded), gi));
  }
}
