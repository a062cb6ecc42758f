#include <doctest.h>

#include "helpers.hpp"
#include "nlie/catalog.hpp"
#include "nlie/cohomology.hpp"

using namespace nlie;
using nlie::testing::make_algebra;
using nlie::testing::rvec;

namespace {
StructureConstants m4() { return make_algebra(2, 4, {{{2, 4}, {{3, 1}}}, {{3, 4}, {{3, 1}}}}); }
StructureConstants m5() { return make_algebra(2, 4, {{{2, 4}, {{3, 1}}}}); }
StructureConstants gl2() {
  return make_algebra(2, 4, {{{1, 2}, {{2, 2}}}, {{1, 3}, {{3, -2}}}, {{2, 3}, {{1, 1}}}});
}

Cochain random_cochain(testing::Rng& rng, Theory theory, Coeffs coeffs, int degree, int dim) {
  size_t n = Cochain::key_order(theory, degree, dim).size() *
             static_cast<size_t>(coeffs == Coeffs::Adjoint ? dim : 1);
  Vec flat(n);
  for (auto& x : flat) x = rng.rational();
  return Cochain::unflatten(theory, coeffs, degree, dim, flat);
}
}  // namespace

TEST_CASE("delta squared vanishes on random cochains") {
  testing::Rng rng(31);
  for (const StructureConstants& a : {m4(), m5(), gl2()})
    for (Coeffs coeffs : {Coeffs::Adjoint, Coeffs::Scalar})
      for (int trial = 0; trial < 10; ++trial) {
        Cochain c = random_cochain(rng, Theory::Lie, coeffs, 1, 4);
        CHECK(lie_delta(a, lie_delta(a, c)).is_zero());
      }
}

TEST_CASE("scalar delta1 follows the declared convention") {
  // on M4: delta1 alpha(e2,e4) = delta1 alpha(e3,e4) = alpha_3, others zero
  Cochain alpha(Theory::Lie, Coeffs::Scalar, 1, 4);
  alpha.set({1}, {Rational(5)});
  alpha.set({2}, {Rational(7)});
  alpha.set({3}, {Rational(1)});
  alpha.set({4}, {Rational(-2)});
  Cochain d = lie_delta(m4(), alpha);
  CHECK(d.eval_basis({2, 4}) == Vec{Rational(1)});
  CHECK(d.eval_basis({3, 4}) == Vec{Rational(1)});
  CHECK(d.eval_basis({1, 2})[0].is_zero());
  CHECK(d.eval_basis({1, 3})[0].is_zero());
  CHECK(d.eval_basis({1, 4})[0].is_zero());
  CHECK(d.eval_basis({2, 3})[0].is_zero());
}

TEST_CASE("delta1 of the identity map vanishes exactly on abelian algebras") {
  Cochain id = cochain_from_matrix(Theory::Lie, Matrix::identity(3));
  CHECK(lie_delta(StructureConstants::abelian(2, 3), id).is_zero());
  StructureConstants l3m1 = make_algebra(2, 3, {{{1, 2}, {{2, 1}}}});
  CHECK_FALSE(lie_delta(l3m1, id).is_zero());
}

TEST_CASE("table7 dimensions: Lie and induced, all four algebras") {
  struct Row {
    const char* id;
    int z_lie, b_lie, h_lie, z_ind, b_ind, h_ind;
  };
  const Row rows[] = {
      {"gl2", 4, 3, 1, 7, 6, 1},
      {"M4", 8, 2, 6, 9, 3, 6},
      {"M5", 10, 2, 8, 12, 3, 9},
      {"M8", 4, 4, 0, 9, 5, 4},
  };
  for (const Row& r : rows) {
    Table7Row out = table7_for(r.id);
    CHECK(out.lie_report.dim_Z == r.z_lie);
    CHECK(out.lie_report.dim_B == r.b_lie);
    CHECK(out.lie_report.dim_H == r.h_lie);
    CHECK(out.induced_report.dim_Z == r.z_ind);
    CHECK(out.induced_report.dim_B == r.b_ind);
    CHECK(out.induced_report.dim_H == r.h_ind);
  }
}

TEST_CASE("derivation spaces match the displayed cocycle matrix shapes") {
  // free-parameter supports transcribed from the displayed matrices
  using Support = std::vector<std::pair<int, int>>;
  Subspace zgl = derivations(gl2());
  CHECK(zgl.dim() == 4);
  CHECK(matrix_support(zgl, 4) ==
        Support{{1, 2}, {1, 3}, {2, 1}, {2, 2}, {3, 1}, {3, 3}, {4, 4}});

  Subspace zm5 = derivations(m5());
  CHECK(zm5.dim() == 10);
  CHECK(matrix_support(zm5, 4) == Support{{1, 1},
                                          {1, 2},
                                          {1, 4},
                                          {2, 2},
                                          {2, 4},
                                          {3, 1},
                                          {3, 2},
                                          {3, 3},
                                          {3, 4},
                                          {4, 2},
                                          {4, 4}});
  // abelian: every linear map is a derivation, no inner ones
  CohomologyReport ab = cohomology_report(StructureConstants::abelian(2, 3), Coeffs::Adjoint, 1);
  CHECK(ab.dim_Z == 9);
  CHECK(ab.dim_B == 0);
}

TEST_CASE("derivations satisfy the Leibniz rule") {
  testing::Rng rng(37);
  for (const StructureConstants& a : {m5(), gl2()}) {
    auto rows = derivations(a).basis_rows();
    for (int trial = 0; trial < 12; ++trial) {
      // random combination of basis derivations
      Vec flat = zero_vec(static_cast<int>(rows[0].size()));
      for (const Vec& r : rows) flat = add_vec(flat, scale_vec(rng.rational(), r));
      Cochain f = Cochain::unflatten(Theory::Lie, Coeffs::Adjoint, 1, 4, flat);
      Vec x = rng.vec(4), y = rng.vec(4);
      Vec lhs = f.eval({a.bracket({x, y})});
      Vec rhs = add_vec(a.bracket({f.eval({x}), y}), a.bracket({x, f.eval({y})}));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("trilie d1 on the induced M5 algebra") {
  StructureConstants ind = induce_bracket(m5(), rvec({1, 0, 0, 0}));
  SUBCASE("diag(0,0,1,1) is a derivation of the induced algebra") {
    Matrix f(4, 4);
    f.at(2, 2) = Rational(1);
    f.at(3, 3) = Rational(1);
    CHECK(trilie_d(ind, cochain_from_matrix(Theory::TriLie, f)).is_zero());
  }
  SUBCASE("diag(1,0,0,0) fails with defect e3 at (e1,e2,e4)") {
    Matrix f(4, 4);
    f.at(0, 0) = Rational(1);
    Cochain d = trilie_d(ind, cochain_from_matrix(Theory::TriLie, f));
    CHECK_FALSE(d.is_zero());
    // [f e1, e2, e4] = e3 while f([e1,e2,e4]) = f(e3) = 0
    CHECK(d.eval_basis({1, 2, 4}) == rvec({0, 0, 1, 0}));
  }
  SUBCASE("abelian 3-Lie algebra: both operators vanish") {
    StructureConstants ab = StructureConstants::abelian(3, 4);
    testing::Rng rng(3);
    Cochain c1 = random_cochain(rng, Theory::TriLie, Coeffs::Adjoint, 1, 4);
    Cochain c2 = random_cochain(rng, Theory::TriLie, Coeffs::Adjoint, 2, 4);
    CHECK(trilie_d(ab, c1).is_zero());
    CHECK(trilie_d(ab, c2).is_zero());
  }
}

TEST_CASE("trilie d2 after d1 vanishes") {
  testing::Rng rng(41);
  StructureConstants ind5 = induce_bracket(m5(), rvec({1, 0, 0, 0}));
  StructureConstants ind8 =
      induce_bracket(make_algebra(2, 4, {{{1, 2}, {{2, 1}}}, {{3, 4}, {{4, 1}}}}), rvec({1, 0, 1, 0}));
  for (const StructureConstants& a : {ind5, ind8})
    for (Coeffs coeffs : {Coeffs::Adjoint, Coeffs::Scalar})
      for (int trial = 0; trial < 6; ++trial) {
        Cochain c = random_cochain(rng, Theory::TriLie, coeffs, 1, 4);
        CHECK(trilie_d(a, trilie_d(a, c)).is_zero());
      }
}

TEST_CASE("reports keep coboundaries inside cocycles") {
  for (const StructureConstants& a : {m4(), m5(), gl2()})
    for (Coeffs coeffs : {Coeffs::Adjoint, Coeffs::Scalar})
      for (int degree : {1, 2}) {
        CohomologyReport rep = cohomology_report(a, coeffs, degree);
        CHECK(rep.B.leq(rep.Z));
        CHECK(rep.dim_H == rep.dim_Z - rep.dim_B);
        CHECK(rep.dim_H >= 0);
      }
}

TEST_CASE("trace composed with a derivation is a trace") {
  StructureConstants a = m5();
  LinearForm tau = rvec({1, 0, 0, 0});
  SUBCASE("zero map") {
    CHECK(trace_compose_check(a, tau, Matrix(4, 4)) == zero_vec(4));
  }
  SUBCASE("diag(1,0,0,0) composes to x1") {
    Matrix f(4, 4);
    f.at(0, 0) = Rational(1);
    CHECK(trace_compose_check(a, tau, f) == rvec({1, 0, 0, 0}));
  }
  SUBCASE("diag(0,0,1,1) composes to zero") {
    Matrix f(4, 4);
    f.at(2, 2) = Rational(1);
    f.at(3, 3) = Rational(1);
    CHECK(trace_compose_check(a, tau, f) == zero_vec(4));
  }
  SUBCASE("non-derivations are rejected") {
    Matrix f(4, 4);
    f.at(2, 0) = Rational(1);  // e1 -> e3 is not a derivation of M5
    f.at(0, 2) = Rational(1);
    CHECK_THROWS_AS(trace_compose_check(a, tau, f), CocycleError);
  }
}

TEST_CASE("derivation transfer matches the direct d1 test") {
  StructureConstants a = m5();
  LinearForm tau = rvec({1, 0, 0, 0});
  StructureConstants ind = induce_bracket(a, tau);

  Matrix f(4, 4);
  f.at(0, 0) = Rational(1);
  DerivationTransfer t = derivation_transfer(a, tau, f);
  CHECK_FALSE(t.is_induced_derivation);
  CHECK(t.obstruction.bracket_basis({1, 2, 4}) == rvec({0, 0, 1, 0}));
  CHECK_FALSE(trilie_d(ind, cochain_from_matrix(Theory::TriLie, f)).is_zero());

  Matrix g(4, 4);
  g.at(2, 2) = Rational(1);
  g.at(3, 3) = Rational(1);
  DerivationTransfer tg = derivation_transfer(a, tau, g);
  CHECK(tg.is_induced_derivation);
  CHECK(trilie_d(ind, cochain_from_matrix(Theory::TriLie, g)).is_zero());

  // inner derivations always transfer: tau kills brackets
  for (int y = 1; y <= 4; ++y) {
    Matrix ad(4, 4);
    for (int j = 1; j <= 4; ++j) {
      Vec col = a.bracket_basis({y, j});
      for (int q = 0; q < 4; ++q) ad.at(q, j - 1) = col[static_cast<size_t>(q)];
    }
    CHECK(derivation_transfer(a, tau, ad).is_induced_derivation);
  }
}

TEST_CASE("scalar 1-cocycles transfer to the induced algebra") {
  StructureConstants a = m5();
  CHECK(scalar_1cocycle_transfer(a, rvec({1, 0, 0, 0}), rvec({0, 1, 0, 0})));
  CHECK(scalar_1cocycle_transfer(gl2(), rvec({0, 0, 0, 1}), rvec({0, 0, 0, 1})));
  for (const InducedMember& m : induced_family(StructureConstants::abelian(2, 4)))
    for (int i = 0; i < 4; ++i) CHECK(scalar_1cocycle_transfer(StructureConstants::abelian(2, 4), m.tau, unit_vec(4, i)));
  CHECK_THROWS_AS(scalar_1cocycle_transfer(a, rvec({1, 0, 0, 0}), rvec({0, 0, 1, 0})), CocycleError);
}

TEST_CASE("the induced coboundary identity holds on all basis triples") {
  testing::Rng rng(43);
  CHECK(induced_coboundary_identity(m4(), rvec({1, 0, 0, 0}), zero_vec(4)));
  CHECK(induced_coboundary_identity(m4(), rvec({1, 0, 0, 0}), rvec({0, 0, 1, 0})));
  for (const StructureConstants& a : {m4(), m5(), gl2()})
    for (const InducedMember& m : induced_family(a))
      for (int trial = 0; trial < 8; ++trial)
        CHECK(induced_coboundary_identity(a, m.tau, rng.vec(4)));
}

TEST_CASE("lifting a 2-cocycle along omega = lambda tau") {
  StructureConstants a = m4();
  LinearForm tau = rvec({1, 0, 0, 0});

  SUBCASE("omega = 0 lifts to the zero cochain") {
    Cochain phi(Theory::Lie, Coeffs::Scalar, 2, 4);
    phi.set({2, 4}, {Rational(1)});
    phi.set({3, 4}, {Rational(-1)});
    LiftResult r = lift_2cocycle(a, tau, phi, zero_vec(4));
    CHECK(r.psi.is_zero());
  }
  SUBCASE("the mu cocycle lifts to omega_tau") {
    Cochain mu(Theory::Lie, Coeffs::Scalar, 2, 4);
    mu.set({2, 4}, {Rational(1)});
    mu.set({3, 4}, {Rational(-1)});
    LiftResult r = lift_2cocycle(a, tau, mu, tau);
    CHECK(r.psi.eval_basis({1, 2, 4}) == Vec{Rational(1)});
    CHECK(r.psi.eval_basis({1, 3, 4}) == Vec{Rational(-1)});
    CHECK(r.psi.eval_basis({1, 2, 3})[0].is_zero());
    CHECK(r.psi.eval_basis({2, 3, 4})[0].is_zero());
    CHECK(is_fully_skew(r.psi));
    // d^2 psi = 0 is asserted inside the call; confirm independently
    StructureConstants ind = induce_bracket(a, tau);
    CHECK(trilie_d(ind, r.psi).is_zero());
  }
  SUBCASE("phi = delta1 alpha lifts to d1 alpha") {
    Cochain alpha(Theory::Lie, Coeffs::Scalar, 1, 4);
    alpha.set({3}, {Rational(2)});
    Cochain phi = lie_delta(a, alpha);
    LiftResult r = lift_2cocycle(a, tau, phi, tau);
    Cochain alpha3(Theory::TriLie, Coeffs::Scalar, 1, 4);
    alpha3.set({3}, {Rational(2)});
    StructureConstants ind = induce_bracket(a, tau);
    CHECK(r.psi == trilie_d(ind, alpha3));
  }
  SUBCASE("non-cocycles and non-proportional omega are rejected") {
    Cochain bad(Theory::Lie, Coeffs::Scalar, 2, 4);
    bad.set({1, 3}, {Rational(1)});  // delta2 condition requires omega13 = 0
    CHECK_THROWS_AS(lift_2cocycle(a, tau, bad, tau), LiftPreconditionError);

    Cochain mu(Theory::Lie, Coeffs::Scalar, 2, 4);
    mu.set({2, 4}, {Rational(1)});
    mu.set({3, 4}, {Rational(-1)});
    try {
      lift_2cocycle(a, tau, mu, rvec({0, 1, 0, 0}));
      CHECK(false);
    } catch (const LiftPreconditionError& e) {
      CHECK(e.condition() == "condition-1");
    }
  }
  SUBCASE("adjoint lift with condition 3") {
    // phi(x,y) = [x,y] is an adjoint 2-cocycle; tau kills its values, so
    // condition 3 holds and the lift is the induced bracket itself
    Cochain phi(Theory::Lie, Coeffs::Adjoint, 2, 4);
    for (int i = 1; i <= 4; ++i)
      for (int j = i + 1; j <= 4; ++j) phi.set({i, j}, a.bracket_basis({i, j}));
    REQUIRE(lie_delta(a, phi).is_zero());
    LiftResult r = lift_2cocycle(a, tau, phi, tau);
    StructureConstants ind = induce_bracket(a, tau);
    for (int i = 1; i <= 4; ++i)
      for (int j = i + 1; j <= 4; ++j)
        for (int k = j + 1; k <= 4; ++k) CHECK(r.psi.eval_basis({i, j, k}) == ind.bracket_basis({i, j, k}));
  }
}

TEST_CASE("cocycles in one class lift to cocycles in one class") {
  // phi2 - phi1 = delta1 alpha implies psi2 - psi1 = d1 alpha
  StructureConstants a = m4();
  LinearForm tau = rvec({1, 0, 0, 0});
  StructureConstants ind = induce_bracket(a, tau);
  testing::Rng rng(53);
  for (int trial = 0; trial < 8; ++trial) {
    Cochain phi1(Theory::Lie, Coeffs::Scalar, 2, 4);
    phi1.set({2, 4}, {rng.rational()});
    phi1.set({1, 2}, {rng.rational()});
    phi1.set({3, 4}, {rng.rational()});
    REQUIRE(lie_delta(a, phi1).is_zero());
    Cochain alpha(Theory::Lie, Coeffs::Scalar, 1, 4);
    for (int i = 1; i <= 4; ++i) alpha.set({i}, {rng.rational()});
    Cochain dalpha = lie_delta(a, alpha);
    // phi2 = phi1 + delta1 alpha
    Cochain phi2(Theory::Lie, Coeffs::Scalar, 2, 4);
    for (int i = 1; i <= 4; ++i)
      for (int j = i + 1; j <= 4; ++j)
        phi2.set({i, j}, add_vec(phi1.eval_basis({i, j}), dalpha.eval_basis({i, j})));
    Cochain psi1 = lift_2cocycle(a, tau, phi1, tau).psi;
    Cochain psi2 = lift_2cocycle(a, tau, phi2, tau).psi;
    Cochain alpha3(Theory::TriLie, Coeffs::Scalar, 1, 4);
    for (int i = 1; i <= 4; ++i) alpha3.set({i}, alpha.eval_basis({i}));
    Cochain d1a = trilie_d(ind, alpha3);
    for (int i = 1; i <= 4; ++i)
      for (int j = 1; j <= 4; ++j)
        for (int k = 1; k <= 4; ++k) {
          Vec diff = sub_vec(psi2.eval_basis({i, j, k}), psi1.eval_basis({i, j, k}));
          CHECK(diff == d1a.eval_basis({i, j, k}));
        }
  }
}

TEST_CASE("unsupported degrees are rejected") {
  CHECK_THROWS_AS(cocycle_space(m5(), Coeffs::Adjoint, 3), DegreeError);
  Cochain c3(Theory::Lie, Coeffs::Scalar, 3, 4);
  CHECK_THROWS_AS(lie_delta(m5(), c3), DegreeError);
  Cochain t3(Theory::TriLie, Coeffs::Scalar, 3, 4);
  CHECK_THROWS_AS(trilie_d(induce_bracket(m5(), rvec({1, 0, 0, 0})), t3), DegreeError);
}
