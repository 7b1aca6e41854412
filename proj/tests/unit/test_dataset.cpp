#include "../test_util.hpp"
#include "doctest.h"
#include "torsionlab/dataset.hpp"

using namespace tl_test;

TEST_SUITE("dataset") {
  TEST_CASE("embedded dataset") {
    const auto& ds = embedded_dataset();
    CHECK(ds.curves.size() == 17);
    CHECK(!ds.quad_points.empty());
    int slow = 0, dual = 0;
    for (const auto& e : ds.curves) {
      slow += e.slow;
      dual += e.dual_purpose;
      CHECK(e.base.n % e.base.m == 0);
      for (const auto& r : e.rows) {
        CHECK(r.ext.order() % e.base.order() == 0);
        CHECK_FALSE(is_square_in_K(e.twist_param(r)));
      }
    }
    CHECK(slow == 2);
    CHECK(dual == 7);
  }

  TEST_CASE("element strings round trip") {
    for (const auto& e : embedded_dataset().curves) {
      FieldTag K = e.field();
      QuadElem a = parse_elem(e.alpha, K), b = parse_elem(e.beta, K);
      CHECK(parse_elem(a.str(), K) == a);
      CHECK(parse_elem(b.str(), K) == b);
      CHECK(parse_elem(a.str(), K).str() == a.str());
    }
  }

  TEST_CASE("file matches embedded copy") {
    auto file = load_dataset_file(TORSIONLAB_SOURCE_DIR "/data/dataset.json");
    CHECK(file.curves.size() == embedded_dataset().curves.size());
    for (std::size_t i = 0; i < file.curves.size(); ++i) CHECK(file.curves[i].id == embedded_dataset().curves[i].id);
  }

  TEST_CASE("malformed documents") {
    CHECK_THROWS_AS(parse_dataset("{"), SyntaxError);
    CHECK_THROWS_AS(parse_dataset("[]"), SyntaxError);
    CHECK_THROWS_AS(parse_dataset(R"({"curves": [{"id": "x"}]})"), SyntaxError);
    CHECK_THROWS_AS(parse_dataset(R"({"curves": [{"id": "x", "field": -7, "alpha": "1+", "beta": "2", "base": "2x2", "twists": []}]})"),
                    SyntaxError);
    CHECK_THROWS_AS(parse_dataset(R"({"curves": [{"id": "x", "field": -7, "alpha": "1", "beta": "2", "base": "3x2", "twists": []}]})"),
                    SyntaxError);
    CHECK_THROWS(load_dataset_file("/nonexistent/dataset.json"));
  }
}
