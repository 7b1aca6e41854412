#include "../test_util.hpp"
#include "doctest.h"
#include "torsionlab/finite_field.hpp"

using namespace tl_test;

TEST_SUITE("ecurve") {
  TEST_CASE("construction") {
    for (long D : {-2L, -7L, -11L, -19L, -43L, -67L, -163L}) CHECK_NOTHROW(curve(D, "64", "189"));
    CHECK_THROWS_AS(curve(0, "1", "1"), SingularCurve);
    CHECK_THROWS_AS(curve(0, "0", "1"), SingularCurve);
    auto N = normalize_curve(curve(0, "36", "81"));
    CHECK(N.curve.alpha() == QuadElem(4));
    CHECK(N.curve.beta() == QuadElem(9));
    CHECK((N.z == QuadElem(3) || N.z == QuadElem(-3)));
    auto I = integral_model(curve(-7, "1/4", "(1+w)/2"));
    CHECK(is_integral(I.curve.alpha()));
    CHECK(is_integral(I.curve.beta()));
  }

  TEST_CASE("group law") {
    CurveK E = curve(0, "1", "4");
    PointK P = PointK::affine(QuadElem(2), QuadElem(6));
    E.require(P);
    CHECK(point_add(P, point_neg(P, E), E).inf);
    PointK P2 = point_mul(2, P, E);
    CHECK(!P2.inf);
    CHECK(P2.y.is_zero());
    CHECK(*order_of_point(P, E, 100) == 4);
    CHECK(*order_of_point(PointK::affine(QuadElem(0), QuadElem(0)), E, 10) == 2);
    CHECK(*order_of_point(PointK::infinity(QuadElem(0)), E, 10) == 1);
    CHECK_THROWS_AS(E.require(PointK::affine(QuadElem(1), QuadElem(1))), PointNotOnCurve);
  }

  TEST_CASE("two torsion and halving") {
    auto T = two_torsion(curve(0, "1", "2"));
    REQUIRE(T.size() == 4);
    CHECK(T[2].x == QuadElem(-1));
    CHECK(T[3].x == QuadElem(-2));
    auto T2 = two_torsion(curve(0, "64", "189"));
    CHECK(T2[3].x == QuadElem(-189));
    CurveK E = curve(0, "1", "4");
    PointK T0 = PointK::affine(QuadElem(0), QuadElem(0));
    auto H = halve_point(T0, E);
    REQUIRE(H.size() == 4);
    for (const auto& Q : H) {
      CHECK((Q.x == QuadElem(2) || Q.x == QuadElem(-2)));
      CHECK(point_mul(2, Q, E) == T0);
    }
    CHECK(halve_point(PointK::affine(QuadElem(0), QuadElem(0)), curve(0, "2", "3")).empty());
  }

  TEST_CASE("order criteria") {
    auto c4 = order_criteria(curve(-7, "729", "2304"), 4);
    CHECK(c4.holds);
    CHECK(c4.model == 0);
    CHECK(!order_criteria(curve(0, "1", "2"), 4).holds);
    CurveK E = curve(0, "64", "189");
    auto c3 = order_criteria(E, 3);
    REQUIRE(c3.holds);
    QuadElem a = c3.witness.at("a"), b = c3.witness.at("b"), z = c3.witness.at("z");
    QuadElem two(2);
    CHECK(a * a * a * (a + two * b) * z * z == E.alpha());
    CHECK(b * b * b * (b + two * a) * z * z == E.beta());
    auto c8 = order_criteria(curve(0, "81", "256"), 8);
    REQUIRE(c8.holds);
    QuadElem u = c8.witness.at("u"), v = c8.witness.at("v"), w = c8.witness.at("w");
    CHECK(u * u + v * v == w * w);
    CHECK_THROWS(order_criteria(E, 5));
  }

  TEST_CASE("division polynomial") {
    CurveK E = curve(0, "64", "189");
    auto pts = ell_power_torsion_points(E, 3, 1);
    bool seen = false;
    for (const auto& P : pts) {
      if (P.inf) continue;
      seen = true;
      CHECK(division_poly(E, 3).eval(P.x).is_zero());
    }
    CHECK(seen);
    auto psi3 = division_poly(curve(0, "1", "4"), 3).coeffs();
    REQUIRE(psi3.size() == 5);
    CHECK(psi3[0] == QuadElem(-16));
    CHECK(psi3[1] == QuadElem(0));
    CHECK(psi3[2] == QuadElem(24));
    CHECK(psi3[3] == QuadElem(20));
    CHECK(psi3[4] == QuadElem(3));
    CHECK(division_poly(curve(0, "1", "4"), 5).degree() == 12);
  }

  TEST_CASE("reduction and point counts") {
    CurveK E = curve(0, "1", "4");
    CHECK_FALSE(reduce_curve(E, splitting_type(3, FieldTag())).has_value());
    CHECK(reduce_curve(E, splitting_type(7, FieldTag())).has_value());
    // disc of E(64,189) is 16 * 64^2 * 189^2 * 125^2, a unit mod 11
    CHECK(reduce_curve(curve(0, "64", "189"), splitting_type(11, FieldTag())).has_value());
    CHECK_FALSE(reduce_curve(curve(0, "64", "189"), splitting_type(7, FieldTag())).has_value());

    const auto& F5 = FiniteField::prime(5);
    auto c = [&](const FiniteField& F, long v) { return FFElem::from_int(F, v); };
    auto E5 = Curve<FFElem>::weierstrass(c(F5, 0), c(F5, 0), c(F5, 0), c(F5, -1), c(F5, 0));
    CHECK(count_points(E5) == 8);
    // character sum against enumeration on y^2 = x(x+1)(x+4) over F_7
    const auto& F7 = FiniteField::prime(7);
    auto E7 = Curve<FFElem>::alpha_beta(c(F7, 1), c(F7, 4));
    long n = 1;
    for (long x = 0; x < 7; ++x)
      for (long y = 0; y < 7; ++y)
        if (E7.residual(c(F7, x), c(F7, y)).is_zero()) ++n;
    CHECK(count_points(E7) == n);
  }

  TEST_CASE("torsion") {
    CHECK(torsion_subgroup(curve(-11, "64", "189")).shape == shape("2x6"));
    CHECK(torsion_subgroup(twist_curve(curve(-7, "68121", "69696"), QuadElem(-1))).shape == shape("2x4"));
    CHECK(torsion_subgroup(curve(-2, "1", "2")).shape == shape("2x2"));
    CHECK(torsion_subgroup(curve(0, "1", "4")).shape == shape("2x4"));
    CHECK(odd_torsion(curve(-7, "64", "189")).shape == shape("3"));
    CHECK(odd_torsion(curve(-2, "1", "4")).shape.order() == 1);
    auto two = two_primary_torsion(curve(-7, "729", "2304"));
    CHECK(two.shape.n % 4 == 0);
    // Tate normal form with t = 2: a point of order 10 (PARI: Z/10 over Q(sqrt -2))
    FieldTag K(-2);
    auto c = [&](long v) { return QuadElem(v).with_tag(K); };
    CurveK T = CurveK::weierstrass(c(-5), c(-24), c(-24), c(0), c(0));
    auto G = torsion_subgroup_generic(T);
    CHECK(G.shape == shape("10"));
    CHECK(*order_of_point(PointK::affine(c(0), c(0)), T, 20) == 10);
    EngineInfo info;
    torsion_subgroup(curve(-7, "64", "189"), &info);
    CHECK(!info.primes.empty());
    CHECK(info.bound % 12 == 0);
  }

  TEST_CASE("torsion over K(sqrt d)") {
    CHECK(torsion_subgroup_ext(curve(-7, "64", "189"), QuadElem(21)).group.shape == shape("2x12"));
    CHECK(torsion_subgroup_ext(curve(-7, "68121", "69696"), QuadElem(-1)).group.shape == shape("4x4"));
    auto X = torsion_subgroup_ext(curve(-7, "(42525*w-44415)/2", "(-42525*w-44415)/2"), QuadElem(-15));
    CHECK(X.group.shape == shape("2x16"));
    CHECK(X.twist.shape == shape("2x8"));
    CHECK(X.base.shape == shape("2x2"));
    CHECK_THROWS_AS(torsion_subgroup_ext(curve(-7, "1", "2"), QuadElem(4)), SquareTwistParameter);
    CHECK_THROWS_AS(torsion_subgroup_ext(curve(-7, "1", "2"), el("-7", -7)), SquareTwistParameter);
  }

  TEST_CASE("galois square units") {
    CHECK(galois_square_units(32) == std::set<long>{1, 15, 17, 31});
    CHECK(galois_square_units(16) == std::set<long>{1, 7, 9, 15});
    CHECK(galois_square_units(20) == std::set<long>{1, 9, 11, 19});
  }

  TEST_CASE("stable subgroups") {
    CurveK E = curve(-7, "64", "189");
    QuadElem d(21);
    auto X = torsion_subgroup_ext(E, d);
    std::vector<PointL> C;
    for (const auto& P : two_torsion(E)) C.push_back(lift_point(P, X.L));
    auto r = verify_stable_subgroup(E, d, C);
    CHECK(r.stable);
    CHECK(r.order == 4);
    // a point P of E(L) with P != sigma(P) and sigma(P) outside <P>
    bool found_unstable = false;
    for (const auto& g : X.group.gens) {
      PointL s = sigma_point(g);
      if (s == g) continue;
      auto rr = verify_stable_subgroup(E, d, {g});
      if (!rr.stable) found_unstable = true;
    }
    CHECK(found_unstable);
  }

  TEST_CASE("allowed torsion") {
    auto S = allowed_torsion(FieldTag(-2));
    CHECK(S.count(shape("2x10")));
    CHECK_FALSE(S.count(shape("2x12")));
    CHECK(allowed_torsion(FieldTag(-19)).count(shape("2x12")));
    CHECK_FALSE(S.count(shape("2x14")));
    CHECK_FALSE(S.count(shape("4x4")));
    CHECK_FALSE(allowed_torsion(FieldTag()).count(shape("2x10")));
  }
}
