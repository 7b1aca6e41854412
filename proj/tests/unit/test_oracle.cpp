// Engine against PARI/GP results stored in tests/data/pari_torsion.json.
#include "../test_util.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace tl_test;

TEST_SUITE("oracle") {
  TEST_CASE("torsion over K, of twists and over K(sqrt d)") {
    auto doc = nlohmann::json::parse(read_file(TORSIONLAB_TEST_DATA "/pari_torsion.json"));
    long bases = 0, rows = 0;
    for (const auto& c : doc["curves"]) {
      long D = c["D"];
      CurveK E = curve(D, c["alpha"], c["beta"]);
      std::string id = std::to_string(D) + ": " + E.str();
      CHECK_MESSAGE(torsion_subgroup(E).shape == shape(c["base"]), id);
      ++bases;
      if (!c.contains("twists")) continue;
      for (const auto& r : c["twists"]) {
        QuadElem d = el(r["d"], D);
        auto X = torsion_subgroup_ext(E, d);
        std::string tag = id + " d=" + d.str();
        CHECK_MESSAGE(X.twist.shape == shape(r["twist"]), tag);
        CHECK_MESSAGE(X.group.shape == shape(r["ext"]), tag);
        ++rows;
      }
    }
    CHECK(bases >= 1400);
    CHECK(rows >= 1000);
  }
}
