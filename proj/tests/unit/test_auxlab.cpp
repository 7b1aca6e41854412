#include "../test_util.hpp"
#include "doctest.h"
#include "torsionlab/auxlab.hpp"
#include "torsionlab/dataset.hpp"

using namespace tl_test;

namespace {
ProjPoint pp(const std::string& s, long D = 0) { return ProjPoint::parse(s, field(D)); }

Poly<FFElem> ffpoly(const std::vector<long>& c, const FiniteField& F) {
  std::vector<FFElem> v;
  for (long x : c) v.push_back(FFElem::from_int(F, x));
  return Poly<FFElem>(v, FFElem::from_int(F, 0));
}
}  // namespace

TEST_SUITE("auxlab") {
  TEST_CASE("mpoly") {
    MPoly p = MPoly::parse("2*x^2*y - 3*y*z^2 + 1");
    CHECK(p.total_degree() == 3);
    CHECK_FALSE(p.is_homogeneous());
    CHECK(p.eval(QuadElem(1), QuadElem(2), QuadElem(1)) == QuadElem(-1));
    CHECK(MPoly::parse("2x^2y") == MPoly::parse("2*x^2*y"));
    MPoly x = MPoly::var(0), y = MPoly::var(1);
    CHECK((x + y).pow(2) == MPoly::parse("x^2 + 2*x*y + y^2"));
    CHECK_THROWS_AS(MPoly::parse("x^"), SyntaxError);
  }

  TEST_CASE("auxiliary curves") {
    CHECK(torsion_subgroup_generic(aux_curve("E0", FieldTag(-2)).curve).shape == shape("2x4"));
    CHECK(torsion_subgroup_generic(aux_curve("E1", FieldTag(-11)).curve).shape == shape("4"));
    CHECK(torsion_subgroup_generic(aux_curve("E2", FieldTag(-19)).curve).shape == shape("2x2"));
    // PARI: E_C(Q(sqrt -7))_tor = Z/6
    CHECK(torsion_subgroup_generic(aux_curve("EC", FieldTag(-7)).curve).shape == shape("6"));
    CHECK_THROWS_AS(aux_curve("E9"), UnknownName);
    CHECK(aux_curve_names().size() == 4);
  }

  TEST_CASE("maps") {
    auto phi = phi_map(), psi = psi_map();
    auto img = apply_map(psi, pp("[0,-2,1]"));
    REQUIRE(img);
    CHECK(img->same(pp("[-2,0,1]")));
    CHECK_FALSE(apply_map(psi, pp("[0,1,0]")));
    auto one = apply_map(phi, pp("[1,-1,1]"));
    REQUIRE(one);
    CHECK(one->same(pp("[0,1,0]")));
    CHECK_THROWS_AS(apply_map(phi, pp("[1,1,1]")), PointNotOnSource);
    CHECK(phi.source.F.is_homogeneous());
    CHECK(psi.source.contains(pp("[0,-2,1]")));
  }

  TEST_CASE("non-regular points") {
    auto c = check_base_locus(phi_map());
    CHECK(c.matches());
    CHECK(c.computed.irrational_degree == 0);
    CHECK(c.computed.rational.size() == 4);
    // psi is regular at [0,0,1], which the stated list includes
    auto d = check_base_locus(psi_map());
    REQUIRE(d.missing.size() == 1);
    CHECK(d.missing[0].same(pp("[0,0,1]")));
    CHECK(d.extra.empty());
    auto img = apply_map(psi_map(), pp("[0,0,1]"));
    REQUIRE(img);
    CHECK(img->same(pp("[0,1,0]")));
  }

  TEST_CASE("factorization identity") {
    auto f = factorization_identity();
    CHECK_FALSE(f.printed_equal);
    CHECK(f.derived_negated);
    // -4xy^3 in the product, 2xy^3 in the printed expansion
    CHECK(f.product.terms().at({1, 3, 0}) == QuadElem(-4));
    CHECK(f.derived.terms().at({1, 3, 0}) == QuadElem(4));
    CHECK(f.printed.terms().at({1, 3, 0}) == QuadElem(2));
    CHECK(f.product.is_homogeneous() == false);
  }

  TEST_CASE("phi preimage table") {
    auto T = verify_phi_inverse_table(false);
    CHECK(T.rows.size() == static_cast<std::size_t>(kPhiRows));
    CHECK(T.all_rows_pass());
    const auto& rows = phi_table();
    CHECK(rows[0].point == "[0,1,0]");
    CHECK(rows[0].printed == "[1,-1,1]");
    int empty = 0;
    for (const auto& r : rows) empty += r.printed.empty();
    CHECK(empty > 0);
    // D = -7 row
    auto phi = phi_map();
    auto img = apply_map(phi, pp("[(-3*w-1)/8,(w+3)/4,1]", -7));
    REQUIRE(img);
    CHECK(img->same(pp("[-2,1-w,1]", -7)));
    CHECK_NOTHROW(verify_phi_inverse_table(true));
  }

  TEST_CASE("paired order-3 system") {
    const DatasetEntry* e = nullptr;
    for (const auto& c : embedded_dataset().curves)
      if (c.id == "m19-2x6-a") e = &c;
    REQUIRE(e);
    CurveK E = e->curve();
    QuadElem d = el("-3", -19);
    auto c1 = order_criteria(E, 3), c2 = order_criteria(twist_curve(E, d), 3);
    REQUIRE(c1.holds);
    REQUIRE(c2.holds);
    QuadElem one = el("1", -19);
    QuadElem c0 = c2.witness.at("z") / c1.witness.at("z");
    CHECK(lem3_solution_check(c1.witness.at("a"), one, c2.witness.at("a"), one, c0, d));
    CHECK_FALSE(lem3_solution_check(el("3", -19), one, el("3", -19), one, one, d));
    CHECK_FALSE(lem3_solution_check(el("5", -19), one, el("7", -19), one, el("2", -19), d));
    CHECK(lem3_excluded(QuadElem(Rat(-1, 2))));
    CHECK_FALSE(lem3_excluded(QuadElem(2)));
  }

  TEST_CASE("pythagorean parametrization") {
    auto a = pythag_param(QuadElem(2));
    CHECK(a[0] == QuadElem(4));
    CHECK(a[1] == QuadElem(3));
    CHECK(a[2] == QuadElem(5));
    auto b = pythag_param(QuadElem(3));
    CHECK(b[0] == QuadElem(6));
    CHECK(b[1] == QuadElem(8));
    CHECK(b[2] == QuadElem(10));
    CHECK_THROWS_AS(pythag_param(QuadElem(1)), DegenerateParameter);
    CHECK_THROWS_AS(pythag_param(QuadElem(0)), DegenerateParameter);
  }

  TEST_CASE("C' and C''") {
    for (std::string w : {"C'", "C''"}) {
      auto C = cprime_curves(w);
      CHECK(cprime_identity(C));
      CHECK(squarefree_over_Q(C.working));
    }
    CHECK(cprime_curves("C'").working.degree() == 3);
    CHECK(cprime_curves("C''").working.degree() == 5);
    CHECK_THROWS_AS(cprime_curves("C'''"), UnknownName);
  }

  TEST_CASE("cantor") {
    const auto& F = FiniteField::prime(3);
    auto f = ffpoly(c2_working_model(), F);
    Mumford O = mumford_identity(F);
    std::vector<Mumford> pts;
    for (long a = 0; a < 3; ++a)
      for (long b = 0; b < 3; ++b) {
        Mumford D{ffpoly({a, 1}, F), ffpoly({b}, F)};
        if (mumford_valid(D, f)) pts.push_back(D);
      }
    REQUIRE(!pts.empty());
    for (const auto& D : pts) {
      CHECK(cantor_add(D, O, f) == D);
      CHECK(cantor_add(D, mumford_neg(D), f) == O);
      for (const auto& E : pts) CHECK(cantor_add(D, E, f) == cantor_add(E, D, f));
    }
    Mumford bad{ffpoly({1, 1}, F), ffpoly({1}, F)};
    if (!mumford_valid(bad, f)) CHECK_THROWS_AS(cantor_add(bad, O, f), InvalidDivisor);
  }

  TEST_CASE("jacobians") {
    auto J3 = jacobian_group(c2_working_model(), 3);
    CHECK(J3.agree());
    CHECK(J3.structure() == "Z/2xZ/10");
    auto J5 = jacobian_group(c2_working_model(), 5);
    CHECK(J5.structure() == "Z/2xZ/2xZ/10");
    auto J9 = jacobian_group(c2_working_model(), 9);
    CHECK(J9.structure() == "Z/2xZ/2xZ/2xZ/10");
    CHECK(J9.agree());
    CHECK(jacobian_group(c2_working_model(), 25, false).zeta_order == 640);
    CHECK_THROWS_AS(jacobian_group(c2_working_model(), 2), BadReduction);
    CHECK_THROWS_AS(jacobian_group(c2_working_model(), 6), UnsupportedField);
  }

  TEST_CASE("gcd bound") {
    CHECK(torsion_gcd_bound({{20, 3, "F3"}, {40, 5, "F5"}}).value == 20);
    CHECK(torsion_gcd_bound({{20, 3, "F3"}, {640, 5, "F25"}}).value == 20);
    CHECK(torsion_gcd_bound({{80, 3, "F9"}, {40, 5, "F5"}}).value == 40);
    CHECK(torsion_gcd_bound({{80, 3, "F9"}, {40, 5, "F5"}}, {{2, 4}}).value == 20);
    auto single = torsion_gcd_bound({{20, 5, "F5"}});
    CHECK(single.uncontrolled.count(5));
  }
}
