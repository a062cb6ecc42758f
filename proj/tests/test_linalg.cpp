#include <doctest.h>

#include "helpers.hpp"
#include "nlie/linalg.hpp"

using namespace nlie;
using nlie::testing::rvec;

TEST_CASE("rref on the canonical small cases") {
  SUBCASE("identity is its own reduced form") {
    RrefResult rr = rref(Matrix::identity(3));
    CHECK(rr.reduced == Matrix::identity(3));
    CHECK(rr.rank == 3);
    CHECK(rr.pivots == std::vector<int>{0, 1, 2});
  }
  SUBCASE("zero matrix") {
    RrefResult rr = rref(Matrix(2, 4));
    CHECK(rr.reduced == Matrix(2, 4));
    CHECK(rr.rank == 0);
    CHECK(rr.pivots.empty());
  }
  SUBCASE("proportional rows collapse") {
    Matrix m = Matrix::from_rows({rvec({1, 2, 3}), rvec({2, 4, 6})}, 3);
    RrefResult rr = rref(m);
    CHECK(rr.rank == 1);
    CHECK(rr.reduced.row(0) == rvec({1, 2, 3}));
    CHECK(is_zero_vec(rr.reduced.row(1)));
  }
}

TEST_CASE("rref is idempotent and rank-nullity holds on random matrices") {
  testing::Rng rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    int rows = rng.range(1, 6), cols = rng.range(1, 6);
    Matrix m = rng.matrix(rows, cols);
    RrefResult rr = rref(m);
    CHECK(rref(rr.reduced).reduced == rr.reduced);
    Subspace ns = nullspace(m);
    CHECK(rr.rank + ns.dim() == cols);
    // independent oracle for the nullspace: exact matrix-vector products
    for (const Vec& x : ns.basis_rows()) CHECK(is_zero_vec(m.mul(x)));
  }
}

TEST_CASE("nullspace examples") {
  CHECK(nullspace(Matrix::identity(4)).is_zero());
  CHECK(nullspace(Matrix(3, 3)) == Subspace::full(3));

  // solved by hand: x1 = -x2, x3 free
  Subspace s = nullspace(Matrix::from_rows({rvec({1, 1, 0})}, 3));
  CHECK(s.dim() == 2);
  CHECK(s.contains(rvec({1, -1, 0})));
  CHECK(s.contains(rvec({0, 0, 1})));
  Matrix m = Matrix::from_rows({rvec({1, 1, 0})}, 3);
  for (const Vec& x : s.basis_rows()) CHECK(is_zero_vec(m.mul(x)));
}

TEST_CASE("span canonical form and lattice operations") {
  CHECK(Subspace::span(3, {}).is_zero());
  CHECK(Subspace::span(2, {rvec({1, 0}), rvec({0, 1}), rvec({1, 1})}) == Subspace::full(2));
  CHECK(Subspace::span(3, {rvec({1, 2, 0}), rvec({2, 4, 0})}).dim() == 1);

  Subspace x = Subspace::span(2, {rvec({1, 0})});
  CHECK(Subspace::zero(2).leq(x));
  CHECK(x.contains(rvec({2, 0})));
  CHECK_FALSE(x.contains(rvec({0, 1})));
  Subspace xy = Subspace::span(3, {rvec({1, 0, 0})}).sum(Subspace::span(3, {rvec({0, 1, 0})}));
  CHECK(xy.dim() == 2);
  CHECK_THROWS_AS((void)x.leq(xy), DimensionError);
  CHECK_THROWS_AS((void)x.contains(rvec({1, 0, 0})), DimensionError);
}

TEST_CASE("span is invariant under shuffling and rescaling generators") {
  testing::Rng rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    int n = rng.range(2, 5);
    int k = rng.range(1, 4);
    std::vector<Vec> vs;
    for (int i = 0; i < k; ++i) vs.push_back(rng.vec(n));
    Subspace a = Subspace::span(n, vs);

    std::vector<Vec> shuffled = vs;
    for (size_t i = shuffled.size(); i > 1; --i)
      std::swap(shuffled[i - 1], shuffled[static_cast<size_t>(rng.range(0, static_cast<int>(i) - 1))]);
    for (Vec& v : shuffled) {
      Rational c;
      while (c.is_zero()) c = rng.rational();
      v = scale_vec(c, v);
    }
    shuffled.push_back(add_vec(shuffled[0], shuffled.back()));  // redundant generator
    CHECK(Subspace::span(n, shuffled) == a);
  }
}
