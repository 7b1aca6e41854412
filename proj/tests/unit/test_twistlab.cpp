#include <cstdlib>

#include "../test_util.hpp"
#include "doctest.h"
#include "torsionlab/dataset.hpp"
#include "torsionlab/twistlab.hpp"

using namespace tl_test;

namespace {
ShapeSet shapes(std::initializer_list<const char*> s) {
  ShapeSet out;
  for (const char* x : s) out.insert(shape(x));
  return out;
}
}  // namespace

TEST_SUITE("twistlab") {
  TEST_CASE("twist curve") {
    CurveK E = twist_curve(curve(0, "1", "4"), QuadElem(-1));
    CHECK(E.alpha() == QuadElem(-1));
    CHECK(E.beta() == QuadElem(-4));
    CurveK F = twist_curve(curve(-7, "64", "189"), QuadElem(21));
    CHECK(F.alpha() == QuadElem(1344));
    CHECK(F.beta() == QuadElem(3969));
  }

  TEST_CASE("predicted twists") {
    CHECK(predicted_twist_groups(FieldTag(-7), shape("2x8")) == shapes({"2x2", "2x4", "2x8"}));
    CHECK(predicted_twist_groups(FieldTag(-2), shape("2x6")) == shapes({"2x2"}));
    CHECK(predicted_twist_groups(FieldTag(-43), shape("2x4")) == shapes({"2x2", "2x4", "2x6"}));
    CHECK(predicted_twist_groups(FieldTag(-11), shape("2x6")) == shapes({"2x2", "2x6"}));
    CHECK(predicted_twist_groups(FieldTag(-19), shape("2x12")) == shapes({"2x2", "2x4"}));
    CHECK(classification_table(FieldTag(-7), shape("2x2")).twists_upper_bound);
    CHECK_THROWS_AS(predicted_twist_groups(FieldTag(-7), shape("2x14")), UnsupportedGroup);
    CHECK_THROWS_AS(predicted_twist_groups(FieldTag(-7), shape("4")), UnsupportedGroup);
    CHECK_THROWS_AS(predicted_twist_groups(FieldTag(), shape("2x2")), UnsupportedField);
  }

  TEST_CASE("predicted growth") {
    CurveK E = curve(-7, "68121", "69696");
    auto P = predict_growth(E, shape("2x4"));
    REQUIRE(P.criterion);
    CHECK(*P.criterion);
    CHECK(P.groups == shapes({"4x4", "4x8"}));
    auto z = four_by_four_witness(E);
    REQUIRE(z);
    CHECK((*z == el("15*w", -7) || *z == el("-15*w", -7)));
    CHECK(predicted_growth_groups(curve(-2, "64", "189"), shape("2x6")) == shapes({"2x6", "2x12"}));
    CHECK(predicted_growth_groups(curve(-19, "81", "256"), shape("2x8")) == shapes({"2x8"}));
    CHECK(predicted_growth_groups(curve(-7, "81", "256"), shape("2x8")) == shapes({"2x8", "4x8", "2x16"}));
    CHECK(predicted_growth_groups(curve(-11, "64", "189"), shape("2x6")) == shapes({"2x6", "2x12", "6x6"}));
    CHECK(predicted_growth_groups(curve(-2, "64", "189"), shape("2x10")) == shapes({"2x10"}));
    // criterion fails: Z/2xZ/4 with no z
    auto Q = predict_growth(curve(-11, "1", "4"), shape("2x4"));
    REQUIRE(Q.criterion);
    CHECK_FALSE(*Q.criterion);
    CHECK(Q.groups == shapes({"2x4", "2x8"}));
  }

  TEST_CASE("injection") {
    for (const auto& e : embedded_dataset().curves) {
      if (e.slow) continue;
      for (const auto& r : e.rows) {
        auto rep = injection_report(e.curve(), e.twist_param(r));
        CHECK_MESSAGE(rep.ok, e.id);
        CHECK(rep.ext.order() % rep.base.order() == 0);
        CHECK(rep.twist.order() % rep.image_order == 0);
      }
    }
  }

  TEST_CASE("square classes and d lists") {
    FieldTag K(-7);
    CHECK(same_square_class(el("-1", -7), el("-4", -7)));
    CHECK(same_square_class(el("-3", -7), el("21", -7)));  // -3 * 21 = (3w)^2
    CHECK_FALSE(same_square_class(el("-1", -7), el("2", -7)));
    auto ds = default_twist_list(K, 30, 50, paper_twist_values(K));
    CHECK(!ds.empty());
    for (std::size_t i = 0; i < ds.size(); ++i) {
      CHECK_FALSE(is_square_in_K(ds[i]));
      for (std::size_t j = 0; j < i; ++j) CHECK_FALSE(same_square_class(ds[i], ds[j]));
    }
    for (std::size_t i = 1; i < ds.size(); ++i) CHECK(abs(ds[i - 1].norm()) <= abs(ds[i].norm()));
    CHECK(default_twist_list(K, 0, 0).empty());
  }

  TEST_CASE("scan") {
    auto R = scan(curve(-2, "64", "189"), default_twist_list(FieldTag(-2), 30, 50, paper_twist_values(FieldTag(-2))));
    CHECK(R.ok());
    CHECK(R.predictions);
    bool saw21 = false;
    for (const auto& row : R.rows) {
      CHECK(row.error.empty());
      if (same_square_class(row.d, QuadElem(21))) {
        saw21 = true;
        CHECK(*row.twist == shape("2x2"));
        CHECK(*row.ext == shape("2x12"));
      }
    }
    CHECK(saw21);
    auto R2 = scan(curve(-2, "1", "2"), {el("-1", -2)});
    REQUIRE(R2.rows.size() == 1);
    CHECK(*R2.rows[0].ext == shape("4x4"));
    CHECK(scan(curve(-2, "1", "2"), {}).rows.empty());
    // outside the classified set: rows, no predictions
    auto R3 = scan(curve(0, "1", "2"), {QuadElem(-1)});
    CHECK_FALSE(R3.predictions);
    CHECK(R3.rows.size() == 1);
  }

  TEST_CASE("worker count") {
    setenv("TORSIONLAB_THREADS", "3", 1);
    CHECK(worker_count() == 3);
    setenv("TORSIONLAB_THREADS", "1", 1);
    CHECK(worker_count() == 1);
    unsetenv("TORSIONLAB_THREADS");
    CHECK(worker_count() >= 1);
  }
}
