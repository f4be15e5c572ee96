#include <catch_amalgamated.hpp>

#include "grady/parser.hpp"
#include "grady/truncation_oracle.hpp"

using namespace grady;

namespace {

template <class F>
Ideal<F> ideal(const RingPtr<F>& ring, std::initializer_list<const char*> gens) {
  std::vector<Polynomial<F>> polys;
  for (auto g : gens) polys.push_back(parse_polynomial(g, ring));
  return Ideal<F>(ring, std::move(polys));
}

Grading z2_grading() { return Grading(GradingGroup(0, {2}), {Hdeg{{}, {1}}}); }

std::vector<std::string> printed(const Subspace& s) {
  std::vector<std::string> out;
  for (const auto& f : s.polynomials()) out.push_back(f.to_string());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("truncated space dimension", "[oracle]") {
  auto f5 = make_ring(PrimeField(5), {"x", "y", "z"});
  CHECK(TruncatedSpace(f5, 4).dimension() == 35);
  CHECK(TruncatedSpace(f5, 0).dimension() == 1);
}

TEST_CASE("truncated ideal bases", "[oracle]") {
  auto f5 = make_ring(PrimeField(5), {"x", "y"});
  TruncatedSpace s2(f5, 2);
  auto a = truncated_ideal_basis(s2, ideal(f5, {"x"}));
  CHECK(a.dimension() == 3);
  CHECK(printed(a) == std::vector<std::string>{"x", "x*y", "x^2"});

  auto line = make_ring(PrimeField(5), {"x"});
  TruncatedSpace l2(line, 2);
  auto b = truncated_ideal_basis(l2, ideal(line, {"x - 1"}));
  CHECK(b.dimension() == 2);
  CHECK(b.contains(l2.coordinates(parse_polynomial("x - 1", line))));
  CHECK(b.contains(l2.coordinates(parse_polynomial("x^2 - x", line))));
  CHECK_FALSE(b.contains(l2.coordinates(parse_polynomial("x", line))));

  TruncatedSpace point(f5, 0);
  CHECK(truncated_ideal_basis(point, Ideal<PrimeField>::unit(f5)).dimension() == 1);
}

TEST_CASE("truncated star bases", "[oracle]") {
  auto line = make_ring(PrimeField(5), {"x"});
  TruncatedSpace l4(line, 4);
  GradedRing<PrimeField> z2(line, z2_grading());
  auto s = truncated_star_basis(l4, ideal(line, {"x - 1"}), z2);
  CHECK(s.dimension() == 3);
  for (const char* f : {"x^2 - 1", "x^3 - x", "x^4 - x^2"})
    CHECK(s.contains(l4.coordinates(parse_polynomial(f, line))));

  GradedRing<PrimeField> z(line, Grading::standard(1));
  TruncatedSpace l5(line, 5);
  CHECK(truncated_star_basis(l5, ideal(line, {"x - 1"}), z).dimension() == 0);

  auto f5 = make_ring(PrimeField(5), {"x", "y"});
  TruncatedSpace s3(f5, 3);
  auto hom = ideal(f5, {"x^2 - y^2", "x*y"});
  GradedRing<PrimeField> std2(f5, Grading::standard(2));
  CHECK(printed(truncated_star_basis(s3, hom, std2)) == printed(truncated_ideal_basis(s3, hom)));
}

TEST_CASE("oracle agrees with star", "[oracle]") {
  auto f5 = make_ring(PrimeField(5), {"x", "y"});
  GradedRing<PrimeField> fine(f5, Grading::fine(2));
  auto q = ideal(f5, {"x^4", "x^3*y", "x^2*y^2 + x*y^3", "y^4"});
  auto v = oracle_compare(q, fine, 8);
  CHECK(v.status == OracleStatus::pass);
  CHECK(v.oracle_dimension == v.candidate_dimension);

  auto line = make_ring(PrimeField(5), {"x"});
  GradedRing<PrimeField> z2(line, z2_grading());
  CHECK(oracle_compare(ideal(line, {"x - 1"}), z2, 6).status == OracleStatus::pass);
  CHECK(oracle_compare(ideal(line, {"x - 1"}), z2, 3).status == OracleStatus::degree_too_small);
}

TEST_CASE("oracle rejects corrupted star outputs", "[oracle]") {
  auto f5 = make_ring(PrimeField(5), {"x", "y"});
  GradedRing<PrimeField> fine(f5, Grading::fine(2));
  auto q = ideal(f5, {"x^4", "x^3*y", "x^2*y^2 + x*y^3", "y^4"});

  auto dropped = oracle_compare(q, fine, 8, ideal(f5, {"x^4", "x^3*y", "y^4"}));
  CHECK(dropped.status == OracleStatus::fail);
  CHECK_FALSE(dropped.witness.empty());

  auto inflated = oracle_compare(q, fine, 8, ideal(f5, {"x^4", "x^3*y", "x^2*y^3", "y^4", "x^2*y^2 + x*y^3"}));
  CHECK(inflated.status == OracleStatus::fail);
  CHECK_FALSE(inflated.witness.empty());
}

TEST_CASE("rational oracle reduces modulo small primes", "[oracle]") {
  auto q = make_ring(Rationals{}, {"x"});
  auto v = oracle_compare(ideal(q, {"x - 1"}), GradedRing<Rationals>(q, z2_grading()), 6);
  CHECK(v.status == OracleStatus::pass);
  CHECK(v.heuristic);
  auto w = oracle_compare(ideal(q, {"x - 1/5"}), GradedRing<Rationals>(q, z2_grading()), 6);
  CHECK(w.status == OracleStatus::pass);
  CHECK(w.detail == "agreement modulo 7,11");
}
