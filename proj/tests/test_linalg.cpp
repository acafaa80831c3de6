#include <doctest.h>

#include <algorithm>
#include <random>

#include "modwitt/linalg.hpp"
#include "modwitt/ordinary.hpp"
#include "modwitt/restricted.hpp"

using namespace modwitt;

namespace {

Matrix random_matrix(const PrimeField& f, std::size_t r, std::size_t c, std::mt19937_64& rng,
                     unsigned zero_bias = 0) {
  std::uniform_int_distribution<Scalar> d(0, f.order() - 1);
  std::uniform_int_distribution<unsigned> z(0, 9);
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = z(rng) < zero_bias ? 0 : d(rng);
  return m;
}

}  // namespace

TEST_CASE("field arithmetic") {
  CHECK(PrimeField(5).inv(2) == 3);
  for (int p : {3, 7, 31}) CHECK(PrimeField(p).inv(1) == 1);
  CHECK_THROWS_AS(PrimeField(7).inv(0), DivisionByZero);
  CHECK_THROWS_AS(PrimeField(9), NotPrime);
  CHECK_THROWS_AS(PrimeField(1), std::invalid_argument);
  CHECK_THROWS_AS(PrimeField(2), std::invalid_argument);
  const PrimeField f(13);
  for (Scalar a = 1; a < 13; ++a) {
    CHECK(f.mul(a, f.inv(a)) == 1);
    CHECK(f.frobenius(a) == a);
  }
  CHECK(f.reduce(-1) == 12);
  CHECK(f.sub(2, 5) == 10);
}

TEST_CASE("rref examples") {
  const PrimeField f(5);
  auto id = rref(Matrix::identity(f, 3));
  CHECK(id.reduced == Matrix::identity(f, 3));
  CHECK(id.pivots == std::vector<std::size_t>{0, 1, 2});

  auto r = rref(Matrix::from_rows(f, {{1, 2}, {2, 4}}));
  CHECK(r.reduced == Matrix::from_rows(f, {{1, 2}, {0, 0}}));
  CHECK(r.pivots == std::vector<std::size_t>{0});

  auto z = rref(Matrix(f, 2, 3));
  CHECK(z.reduced.is_zero());
  CHECK(z.pivots.empty());
}

TEST_CASE("rank and kernel examples") {
  const PrimeField f(5);
  CHECK(rank(Matrix::identity(f, 4)) == 4);
  const Matrix m = Matrix::from_rows(f, {{1, 2}, {2, 4}});
  CHECK(rank(m) == 1);
  CHECK(rank(Matrix(f, 3, 3)) == 0);

  auto ker = kernel_basis(m);
  REQUIRE(ker.size() == 1);
  CHECK(m * ker[0] == Vector{0, 0});
  // proportional to (3, 1)
  CHECK(f.mul(ker[0][0], 1) == f.mul(ker[0][1], 3));

  CHECK(kernel_basis(Matrix::identity(f, 3)).empty());
  auto zk = kernel_basis(Matrix(f, 2, 2));
  CHECK(zk.size() == 2);
  CHECK(span_rank(f, 2, zk) == 2);
}

TEST_CASE("membership and quotient examples") {
  const PrimeField f(5);
  const std::vector<Vector> e1{{1, 0}};
  auto x = solve_membership(f, e1, Vector{3, 0});
  REQUIRE(x);
  CHECK(*x == Vector{3});
  CHECK_FALSE(solve_membership(f, e1, Vector{0, 1}));
  auto empty = solve_membership(f, std::vector<Vector>{}, Vector{0, 0});
  REQUIRE(empty);
  CHECK(empty->empty());
  CHECK_FALSE(solve_membership(f, std::vector<Vector>{}, Vector{1, 0}));

  const std::vector<Vector> plane{{1, 0}, {0, 1}};
  auto reps = quotient_representatives(f, plane, e1);
  REQUIRE(reps.size() == 1);
  CHECK_FALSE(solve_membership(f, e1, reps[0]));
  CHECK(quotient_representatives(f, plane, plane).empty());
  CHECK(quotient_representatives(f, plane, std::vector<Vector>{}) == plane);

  CHECK_THROWS_AS(quotient_representatives(f, e1, std::vector<Vector>{{0, 1}}), InconsistentSubspace);
  CHECK_THROWS_AS(quotient_representatives(f, plane, std::vector<Vector>{{1, 0}, {2, 0}}),
                  InconsistentSubspace);
}

TEST_CASE("rank-nullity, idempotence and kernel substitution on random matrices") {
  std::mt19937_64 rng(11);
  for (int p : {3, 5, 7, 31}) {
    const PrimeField f(p);
    for (int t = 0; t < 20; ++t) {
      const std::size_t r = 1 + rng() % 9, c = 1 + rng() % 9;
      const Matrix m = random_matrix(f, r, c, rng, 6);
      const auto red = rref(m);
      CHECK(rref(red.reduced).reduced == red.reduced);
      CHECK(rref(red.reduced).pivots == red.pivots);
      const auto ker = kernel_basis(m);
      CHECK(rank(m) + ker.size() == c);
      for (const auto& v : ker) {
        const Vector image = m * v;
        CHECK(std::all_of(image.begin(), image.end(), [](Scalar s) { return s == 0; }));
      }
      CHECK(span_rank(f, c, ker) == ker.size());
    }
  }
}

TEST_CASE("rank is invariant under row permutation") {
  std::mt19937_64 rng(12);
  const PrimeField f(7);
  for (int t = 0; t < 30; ++t) {
    Matrix m = random_matrix(f, 8, 6, rng, 7);
    const std::size_t before = rank(m);
    for (int s = 0; s < 10; ++s) m.swap_rows(rng() % 8, rng() % 8);
    CHECK(rank(m) == before);
  }
}

TEST_CASE("parallel and serial kernels agree") {
  std::mt19937_64 rng(13);
  const PrimeField f(11);
  for (int t = 0; t < 5; ++t) {
    const Matrix m = random_matrix(f, 200, 150, rng, 8);
    const auto a = rref(m), b = serial::rref(m);
    CHECK(a.reduced == b.reduced);
    CHECK(a.pivots == b.pivots);
    CHECK(kernel_basis(m) == serial::kernel_basis(m));
  }
  for (int p : {7, 13}) {
    const PrimeField g(p);
    const Matrix d2 = delta2_res_matrix(g);
    CHECK(rank(d2) == serial::rank(d2));
    CHECK(kernel_basis(d2) == serial::kernel_basis(d2));
  }
}

TEST_CASE("matrix helpers") {
  const PrimeField f(5);
  const Matrix m = Matrix::from_rows(f, {{1, 2, 3}, {4, 0, -1}});
  CHECK(m(1, 2) == 4);
  CHECK(m.transposed().transposed() == m);
  CHECK(m * Matrix::identity(f, 3) == m);
  const std::vector<Vector> cols{{1, 4}, {2, 0}, {3, 4}};
  CHECK(Matrix::from_columns(f, 2, cols) == m);
  CHECK(m.column(2) == Vector{3, 4});
}
