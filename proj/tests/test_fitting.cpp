#include <catch_amalgamated.hpp>

#include <random>

#include "grady/fitting.hpp"
#include "grady/parser.hpp"
#include "random_polys.hpp"

using namespace grady;

namespace {

template <class F>
PresentationMatrix<F> matrix(const RingPtr<F>& ring, std::size_t rows, std::size_t cols,
                             std::initializer_list<const char*> entries) {
  std::vector<Polynomial<F>> polys;
  for (auto e : entries) polys.push_back(parse_polynomial(e, ring));
  return PresentationMatrix<F>(ring, rows, cols, std::move(polys));
}

template <class F>
Ideal<F> ideal(const RingPtr<F>& ring, std::initializer_list<const char*> gens) {
  std::vector<Polynomial<F>> polys;
  for (auto g : gens) polys.push_back(parse_polynomial(g, ring));
  return Ideal<F>(ring, std::move(polys));
}

bool all_pass(const Report& r) {
  for (const auto& e : r)
    if (e.status != CheckStatus::pass) return false;
  return true;
}

}  // namespace

TEST_CASE("Fitting ideals of small matrices", "[fitting]") {
  auto q = make_ring(Rationals{}, {"x", "y"});
  auto row = matrix(q, 1, 3, {"x^2", "x*y", "y^3 - x"});
  CHECK(ideal_equal(fitting_ideal(row, 0), ideal(q, {"x^2", "x*y", "y^3 - x"})));

  auto m = matrix(q, 2, 2, {"x", "y", "y", "x"});
  CHECK(ideal_equal(fitting_ideal(m, 1), ideal(q, {"x", "y"})));
  CHECK(ideal_equal(fitting_ideal(m, 0), ideal(q, {"x^2 - y^2"})));
  CHECK(fitting_ideal(m, 2).is_unit());
  CHECK(fitting_ideal(m, 5).is_unit());
  CHECK(fitting_ideal(m, -1).is_zero());

  auto three = matrix(q, 3, 3, {"1", "2", "3", "4", "5", "6", "7", "8", "10"});
  CHECK(ideal_equal(fitting_ideal(three, 0), Ideal<Rationals>::unit(q)));
  auto singular = matrix(q, 3, 3, {"1", "2", "3", "4", "5", "6", "7", "8", "9"});
  CHECK(fitting_ideal(singular, 0).is_zero());
  CHECK(fitting_ideal(singular, 1).is_unit());
}

TEST_CASE("zero matrix has constant rank cokernel", "[fitting]") {
  auto q = make_ring(Rationals{}, {"x"});
  auto zero = matrix(q, 2, 1, {"0", "0"});
  CHECK(fitting_ideal(zero, 2).is_unit());
  CHECK(fitting_ideal(zero, 1).is_zero());
  CHECK(fitting_ideal(zero, 0).is_zero());
}

TEST_CASE("row and column operations preserve Fitting ideals", "[fitting]") {
  auto q = make_ring(Rationals{}, {"x", "y"});
  auto m = matrix(q, 2, 3, {"x", "y^2", "x*y", "y", "x + 1", "0"});
  auto swapped = matrix(q, 2, 3, {"y", "x + 1", "0", "x", "y^2", "x*y"});
  auto permuted = matrix(q, 2, 3, {"x*y", "x", "y^2", "0", "y", "x + 1"});
  // second row plus x times the first
  auto combined = matrix(q, 2, 3, {"x", "y^2", "x*y", "y + x^2", "x + 1 + x*y^2", "x^2*y"});
  for (long j = -1; j <= 3; ++j) {
    INFO(j);
    CHECK(ideal_equal(fitting_ideal(m, j), fitting_ideal(swapped, j)));
    CHECK(ideal_equal(fitting_ideal(m, j), fitting_ideal(permuted, j)));
    CHECK(ideal_equal(fitting_ideal(m, j), fitting_ideal(combined, j)));
  }
}

TEST_CASE("graded matrix check", "[fitting]") {
  auto q = make_ring(Rationals{}, {"x", "y"});
  GradedRing<Rationals> z(q, Grading::standard(2));
  auto m = matrix(q, 2, 2, {"x", "y", "y", "x"});
  m.row_degrees = std::vector<Hdeg>{Hdeg{{1}, {}}, Hdeg{{1}, {}}};
  m.col_degrees = std::vector<Hdeg>{Hdeg{{0}, {}}, Hdeg{{0}, {}}};
  auto report = graded_matrix_check(m, z);
  CHECK(report.size() == 6);
  CHECK(all_pass(report));

  GradedRing<Rationals> fine(q, Grading::fine(2));
  auto one = matrix(q, 1, 1, {"x^2*y"});
  one.row_degrees = std::vector<Hdeg>{Hdeg{{2, 1}, {}}};
  one.col_degrees = std::vector<Hdeg>{Hdeg{{0, 0}, {}}};
  CHECK(all_pass(graded_matrix_check(one, fine)));

  auto q1 = make_ring(Rationals{}, {"x"});
  auto bad = matrix(q1, 1, 1, {"x + 1"});
  bad.row_degrees = std::vector<Hdeg>{Hdeg{{1}, {}}};
  bad.col_degrees = std::vector<Hdeg>{Hdeg{{0}, {}}};
  auto rejected = graded_matrix_check(bad, GradedRing<Rationals>(q1, Grading::standard(1)));
  REQUIRE(rejected.size() == 1);
  CHECK(rejected[0].status == CheckStatus::fail);

  auto bare = matrix(q1, 1, 1, {"x"});
  CHECK_THROWS_AS(graded_matrix_check(bare, GradedRing<Rationals>(q1, Grading::standard(1))), DomainError);
}

TEST_CASE("Fitting ideals commute with x -> 0", "[fitting][property]") {
  std::mt19937_64 rng(5);
  auto f5 = make_ring(PrimeField(5), {"x", "y"});
  auto line = make_ring(PrimeField(5), {"y"});
  std::vector<Polynomial<PrimeField>> images{Polynomial<PrimeField>(line), Polynomial<PrimeField>::variable(line, 0)};
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t cols = 2 + trial % 2;
    std::vector<Polynomial<PrimeField>> entries, special;
    for (std::size_t k = 0; k < 2 * cols; ++k) {
      entries.push_back(testing::random_polynomial(rng, f5, 3, 2));
      special.push_back(substitute<PrimeField>(entries.back(), line, images));
    }
    PresentationMatrix<PrimeField> m(f5, 2, cols, entries), s(line, 2, cols, special);
    for (long j = 0; j <= 2; ++j) {
      std::vector<Polynomial<PrimeField>> mapped;
      auto fitt = fitting_ideal(m, j);
      for (const auto& g : fitt.generators()) mapped.push_back(substitute<PrimeField>(g, line, images));
      INFO(trial << " " << j);
      CHECK(ideal_equal(Ideal<PrimeField>(line, mapped), fitting_ideal(s, j)));
    }
  }
}
