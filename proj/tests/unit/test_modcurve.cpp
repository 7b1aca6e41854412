#include "../test_util.hpp"
#include "doctest.h"
#include "torsionlab/dataset.hpp"
#include "torsionlab/modcurve.hpp"

using namespace tl_test;

TEST_SUITE("modcurve") {
  TEST_CASE("model evaluation") {
    FieldTag Q5 = FieldTag::quadratic(5);
    CHECK(model_eval(30, ModelForm::Long, parse_elem("(-w-3)/2", Q5), parse_elem("4*w+9", Q5)).is_zero());
    CHECK(model_eval(30, ModelForm::Long, el("(w-3)/2", -7), el("-w-3", -7)).is_zero());
    CHECK(model_eval(48, ModelForm::Short, QuadElem(0), QuadElem(0)) == QuadElem(1));
    CHECK_THROWS_AS(model_eval(40, ModelForm::Long, QuadElem(0), QuadElem(0)), UnsupportedField);
    CHECK_THROWS_AS(hyper_model(31), UnknownName);
  }

  TEST_CASE("long and short forms") {
    CHECK(long_short_identity());
    auto [x, y] = long_to_short(el("(w-3)/2", -7), el("-w-3", -7));
    CHECK(model_eval(30, ModelForm::Short, x, y).is_zero());
    CHECK_THROWS_AS(long_to_short(QuadElem(5), QuadElem(5)), PointNotOnModel);
    auto Y = long_model_infinity_Y();
    REQUIRE(Y.size() == 2);
    CHECK(Y[0] == 0);
    CHECK(Y[1] == 1);
  }

  TEST_CASE("sturm") {
    CHECK(sturm_real_roots(hyper_model(48).f) == 0);
    CHECK(sturm_real_roots(hyper_model(40).f) == 0);
    CHECK(sturm_real_roots(Poly<Rat>({Rat(-1), Rat(0), Rat(1)}, Rat(0))) == 2);
    CHECK(sturm_real_roots(Poly<Rat>({Rat(1), Rat(2), Rat(1)}, Rat(0))) == 1);
    CHECK_THROWS_AS(sturm_real_roots(Poly<Rat>(Rat(0))), ZeroPolynomial);
  }

  TEST_CASE("point audits") {
    const auto& recs = embedded_dataset().quad_points;
    for (int N : {30, 40, 48}) {
      auto A = quad_point_audit(N, recs);
      CHECK(A.ok());
      CHECK(!A.rows.empty());
    }
    QuadPointRecord bad{30, -7, "(w-3)/2", "w-3", "long", "test", ""};
    CHECK_FALSE(quad_point_audit(30, {bad}).ok());
    CHECK_THROWS_AS(quad_point_audit(30, {bad}, true), RecordMismatch);
    QuadPointRecord wrong_field{48, -2, "w", "4", "short", "test", ""};
    CHECK_FALSE(quad_point_audit(48, {wrong_field}).ok());
  }
}
