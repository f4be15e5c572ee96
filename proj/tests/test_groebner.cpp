#include <random>

#include <catch_amalgamated.hpp>

#include "grady/groebner.hpp"
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
std::vector<std::string> strings(const GroebnerBasis<F>& gb) {
  std::vector<std::string> out;
  for (const auto& e : gb.elements()) out.push_back(e.to_string());
  return out;
}

const auto Q2 = make_ring(Rationals{}, {"x", "y"});
const auto Q3 = make_ring(Rationals{}, {"x", "y", "z"});

}  // namespace

TEST_CASE("groebner basis examples", "[groebner]") {
  auto gb = groebner_basis(ideal(Q2, {"x^2 - y", "y^2 - x"}), TermOrder::lex());
  CHECK(strings(gb) == std::vector<std::string>{"y^4 - y", "-y^2 + x"});
  CHECK(gb.elements()[1] == parse_polynomial("x - y^2", Q2));

  CHECK(strings(ideal(Q2, {"x", "x"}).basis()) == std::vector<std::string>{"x"});
  CHECK(strings(ideal(Q2, {"1 + x", "x"}).basis()) == std::vector<std::string>{"1"});
  CHECK(Ideal<Rationals>::zero(Q2).basis().elements().empty());
}

TEST_CASE("normal form examples", "[groebner]") {
  auto f = [](const char* s) { return parse_polynomial(s, Q2); };
  CHECK(normal_form(f("x^2"), ideal(Q2, {"x"}).basis()).is_zero());
  CHECK(normal_form(f("x^2 + y"), ideal(Q2, {"x^2 - y"}).basis()) == f("2*y"));
  CHECK(normal_form(f("y"), ideal(Q2, {"x"}).basis()) == f("y"));
}

TEST_CASE("ideal membership on the q example", "[groebner]") {
  auto q = ideal(Q2, {"x^4", "x^3*y", "x^2*y^2 + x*y^3", "y^4"});
  CHECK(q.contains(parse_polynomial("x^2*y^3", Q2)));
  CHECK_FALSE(q.contains(parse_polynomial("x^2*y^2", Q2)));
  CHECK(q.contains(Polynomial<Rationals>(Q2)));
}

TEST_CASE("ideal equality", "[groebner]") {
  auto q = ideal(Q2, {"x^4", "x^3*y", "x^2*y^2 + x*y^3", "y^4"});
  CHECK(ideal_equal(ideal(Q2, {"x^4", "x^3*y"}), intersect(ideal(Q2, {"x^3"}), q)));
  CHECK(ideal_equal(ideal(Q2, {"x"}), ideal(Q2, {"2*x"})));
  CHECK_FALSE(ideal_equal(ideal(Q2, {"x"}), ideal(Q2, {"x^2"})));
}

TEST_CASE("intersection", "[groebner]") {
  CHECK(ideal_equal(intersect(ideal(Q2, {"x"}), ideal(Q2, {"y"})), ideal(Q2, {"x*y"})));
  CHECK(ideal_equal(intersect(ideal(Q2, {"x^3"}), ideal(Q2, {"x^4", "x^3*y", "x^2*y^3", "y^4"})),
                    ideal(Q2, {"x^4", "x^3*y"})));
  auto i = ideal(Q2, {"x^2 - y", "x*y"});
  CHECK(ideal_equal(intersect(i, Ideal<Rationals>::unit(Q2)), i));
}

TEST_CASE("colon", "[groebner]") {
  auto i = ideal(Q2, {"x^4", "x^3*y"});
  CHECK(ideal_equal(colon(i, ideal(Q2, {"x^3"})), ideal(Q2, {"x", "y"})));
  CHECK(ideal_equal(colon(i, Ideal<Rationals>::unit(Q2)), i));
  auto q1 = make_ring(Rationals{}, {"x"});
  CHECK(ideal_equal(colon(ideal(q1, {"x^2 - 1"}), ideal(q1, {"x - 1"})), ideal(q1, {"x + 1"})));
  CHECK_THROWS_AS(colon(i, Ideal<Rationals>::zero(Q2)), DomainError);
}

TEST_CASE("saturation", "[groebner]") {
  auto y = parse_polynomial("y", Q2);
  auto s = saturate(ideal(Q2, {"x^4", "x^3*y"}), y);
  CHECK(ideal_equal(s.ideal, ideal(Q2, {"x^3"})));
  CHECK(s.exponent <= 3);
  CHECK(s.exponent == 1);

  auto t = saturate(ideal(Q2, {"x"}), parse_polynomial("x", Q2));
  CHECK(t.ideal.is_unit());

  auto u = saturate(ideal(Q2, {"x^2"}), y);
  CHECK(ideal_equal(u.ideal, ideal(Q2, {"x^2"})));
  CHECK(u.exponent == 0);
}

TEST_CASE("elimination", "[groebner]") {
  std::vector<std::size_t> y{1};
  CHECK(ideal_equal(eliminate(ideal(Q3, {"x - y", "y - z^2"}), std::span<const std::size_t>(y)),
                    ideal(Q3, {"x - z^2"})));
  std::vector<std::size_t> x{0};
  CHECK(eliminate(ideal(Q3, {"x"}), std::span<const std::size_t>(x)).is_zero());
  CHECK(ideal_equal(eliminate(ideal(Q3, {"x - 1"}), std::span<const std::size_t>()), ideal(Q3, {"x - 1"})));
}

TEST_CASE("radical membership", "[groebner]") {
  auto i = ideal(Q2, {"x^4", "x^3*y"});
  CHECK(radical_member(parse_polynomial("x", Q2), i));
  CHECK_FALSE(radical_member(parse_polynomial("y", Q2), i));
  CHECK(radical_member(parse_polynomial("x*y + 3", Q2), Ideal<Rationals>::unit(Q2)));
}

TEST_CASE("random ideals: Buchberger soundness and ideal laws", "[property]") {
  std::mt19937_64 rng(2024);
  auto r = make_ring(PrimeField(5), {"x", "y", "z"});
  auto random_ideal = [&](unsigned gens) {
    std::vector<Polynomial<PrimeField>> g;
    for (unsigned i = 0; i < gens; ++i) g.push_back(testing::random_polynomial(rng, r, 3, 3));
    return Ideal<PrimeField>(r, std::move(g));
  };
  for (int trial = 0; trial < 40; ++trial) {
    auto i = random_ideal(2), j = random_ideal(2), k = random_ideal(1);
    for (auto order : {TermOrder::grevlex(), TermOrder::lex(), TermOrder::elimination({true, false, false})}) {
      auto gb = groebner_basis(i, order);
      CHECK(satisfies_buchberger_criterion(gb));
      CHECK(is_reduced(gb));
      for (const auto& g : i.generators()) CHECK(normal_form(g, gb).is_zero());
    }
    auto ij = intersect(i, j);
    CHECK(ideal_subset(ij, i));
    CHECK(ideal_subset(ij, j));
    CHECK(ideal_equal(intersect(ij, k), intersect(i, intersect(j, k))));
    if (!j.is_zero() && !k.is_zero()) {
      auto c = colon(i, j);
      CHECK(ideal_subset(i, c));
      CHECK(ideal_equal(colon(i, product(j, k)), colon(c, k)));
    }
    if (!k.is_zero()) {
      const auto& f = k.basis().elements().front();
      auto s = saturate(i, f);
      auto n = s.exponent;
      Ideal<PrimeField> cn = i;
      for (unsigned e = 0; e < n; ++e) cn = colon(cn, f);
      CHECK(ideal_equal(cn, colon(cn, f)));
      CHECK(ideal_equal(cn, s.ideal));
    }
  }
}
