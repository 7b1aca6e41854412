#include "../test_util.hpp"
#include "doctest.h"
#include "torsionlab/harness.hpp"

using namespace tl_test;

namespace {
std::vector<CurveK> corpus(long D) {
  auto c = random_corpus(field(D), 6, 20240611 + static_cast<std::uint64_t>(-D), 2000);
  auto k = constructed_corpus(field(D));
  c.insert(c.end(), k.begin(), k.end());
  return c;
}
}  // namespace

TEST_SUITE("properties") {
  TEST_CASE("order criteria agree with the torsion group") {
    for (long D : {-2L, -7L, -11L}) {
      for (const auto& E : corpus(D)) {
        auto G = torsion_subgroup(E).shape;
        CHECK_MESSAGE(order_criteria(E, 4).holds == (G.n % 4 == 0), E.str());
        CHECK_MESSAGE(order_criteria(E, 3).holds == (G.n % 3 == 0), E.str());
        CHECK_MESSAGE(order_criteria(E, 8).holds == (G.n % 8 == 0), E.str());
        CHECK_MESSAGE(allowed_torsion(field(D)).count(G), E.str());
      }
    }
  }

  TEST_CASE("halving (0,0) iff alpha and beta are squares") {
    for (long D : {-2L, -19L}) {
      for (const auto& E : corpus(D)) {
        bool halves = !halve_point(PointK::affine(QuadElem(0).with_tag(field(D)), QuadElem(0).with_tag(field(D))), E).empty();
        CHECK_MESSAGE(halves == (is_square_in_K(E.alpha()) && is_square_in_K(E.beta())), E.str());
      }
    }
  }

  TEST_CASE("random corpus is reproducible") {
    auto a = random_corpus(field(-7), 5, 1), b = random_corpus(field(-7), 5, 1);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].str() == b[i].str());
    for (const auto& E : a) CHECK(E.alpha().norm() <= 10000);
  }
}
