#include <doctest.h>

#include "fcensus/census.hpp"
#include "fcensus/formulas.hpp"
#include "fcensus/subalgebras.hpp"

using namespace fcensus;

namespace {

Subspace coordinate_span(const Field& f, std::size_t n, std::size_t k) {
  Matrix m(f, k, n);
  for (std::size_t i = 0; i < k; ++i) m(i, i) = 1;
  return Subspace::span_of(m);
}

}  // namespace

TEST_CASE("subalgebra predicate") {
  const Field f2 = make_field(2, 1);
  const Matrix i2 = Matrix::identity(f2, 2);
  const Matrix j2 = Matrix::from_rows(f2, {{0, 1}, {0, 0}});
  const Matrix e21 = Matrix::from_rows(f2, {{0, 0}, {1, 0}});
  CHECK(is_commutative_subalgebra({i2}));
  CHECK(is_commutative_subalgebra({i2, j2}));
  CHECK_FALSE(is_commutative_subalgebra({i2, j2, e21}));
  CHECK_FALSE(is_commutative_subalgebra({j2}));
  CHECK_THROWS_AS(is_commutative_subalgebra({i2, Matrix::identity(f2, 3)}), Error);
}

TEST_CASE("commutative subalgebra counts") {
  CHECK(commutative_census(2, 2, 2).count == 7);
  CHECK(commutative_census(2, 2, 3).count == 0);
  CHECK(commutative_census(3, 2, 2).count == 13);
  const CommutativeCensus n3 = commutative_census(2, 3, 3);
  CHECK(n3.count == 183);
  CHECK(n3.count == c_inf(2, 3));
  CHECK(n3.candidates == 10795);
  CHECK(commutative_census(2, 3, 4).count == 0);
  CHECK(commutative_census(3, 2, 3).count == 0);
  for (const auto& alg : n3.algebras) CHECK(is_commutative_subalgebra(alg.basis()));
  CHECK(commutative_census(2, 2, 1).count == 1);
  CHECK_THROWS_AS(commutative_census(2, 2, 5), Error);
  CHECK_THROWS_AS(commutative_census(2, 3, 4, 1000), Error);
}

TEST_CASE("maximal algebras for n = 2 are generated by one matrix") {
  const Field f2 = make_field(2, 1);
  const Matrix id = Matrix::identity(f2, 2);
  for (const auto& alg : commutative_census(2, 2, 2).algebras) {
    const auto basis = alg.basis();
    const Matrix* generator = nullptr;
    for (const auto& m : basis) {
      if (!(Subspace::span_of(Matrix(f2, 1, 4, m.codes())) == Subspace::span_of(Matrix(f2, 1, 4, id.codes())))) {
        generator = &m;
        break;
      }
    }
    REQUIRE(generator != nullptr);
    Matrix rows(f2, 2, 4);
    for (std::size_t t = 0; t < 4; ++t) {
      rows(0, t) = id.codes()[t];
      rows(1, t) = generator->codes()[t];
    }
    CHECK(Subspace::span_of(rows) == alg.span());
  }
}

TEST_CASE("non-unital lines against brute force") {
  // One-dimensional algebras span{A}: A != 0 with A^2 in {0, A} over F_2.
  const Field f2 = make_field(2, 1);
  std::uint64_t brute = 0;
  for (std::uint64_t idx = 1; idx < 16; ++idx) {
    const Matrix a = matrix_from_index(f2, 2, idx);
    const Matrix sq = a * a;
    if (sq.is_zero() || sq == a) ++brute;
  }
  CHECK(brute == 10);
  CHECK(commutative_census(2, 2, 1, kDefaultSubalgebraCap, false).count == brute);
}

TEST_CASE("diagonalizable subalgebras") {
  CHECK(diag_subalgebra_census(2, 2) == 4);
  CHECK(diag_subalgebra_census(3, 2) == 9);
  CHECK(diag_subalgebra_census(5, 2) == 25);
  CHECK(diag_subalgebra_census(2, 3) == 64);
  CHECK(diag_subalgebra_census(2, 1) == 1);
  for (const auto& [p, n] : std::vector<std::pair<unsigned, unsigned>>{{2, 2}, {3, 2}, {2, 3}})
    CHECK(diag_subalgebra_census(p, n) == diag_count_via_pi(p, n));
}

TEST_CASE("Schur algebras") {
  const Field f2 = make_field(2, 1);
  const SubalgebraBasis two = schur_algebra(coordinate_span(f2, 2, 1));
  CHECK(two.dim() == 2);
  CHECK(two.contains(Matrix::from_rows(f2, {{0, 1}, {0, 0}})));
  CHECK(two.contains(Matrix::identity(f2, 2)));
  for (unsigned p : {2u, 3u}) {
    const Field f = make_field(p, 1);
    for (std::size_t n = 4; n <= 6; ++n) {
      for (std::size_t k : {n / 2, (n + 1) / 2}) {
        const SubalgebraBasis s = schur_algebra(coordinate_span(f, n, k));
        CHECK(s.dim() == n * n / 4 + 1);
        CHECK(is_commutative_subalgebra(s.basis()));
      }
    }
  }
  CHECK_THROWS_AS(schur_algebra(Subspace(f2, 3)), Error);
  CHECK_THROWS_AS(schur_algebra(coordinate_span(f2, 3, 3)), Error);
}
