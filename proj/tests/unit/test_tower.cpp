#include <random>

#include "../test_util.hpp"
#include "doctest.h"
#include "torsionlab/tower.hpp"

using namespace tl_test;

namespace {
std::shared_ptr<const TowerTag> tower(long D, long d) {
  return std::make_shared<const TowerTag>(field(D), QuadElem(d).with_tag(field(D)));
}
}  // namespace

TEST_SUITE("tower") {
  TEST_CASE("arithmetic") {
    auto L = tower(-7, -15);
    TowerElem s = TowerElem::sqrt_d(L);
    CHECK(s * s == TowerElem::lift(L, QuadElem(-15)));
    TowerElem x(L, el("1+w", -7), el("2", -7));
    CHECK(x / x == TowerElem::lift(L, QuadElem(1)));
    TowerElem a(L, QuadElem(1), QuadElem(1)), b(L, QuadElem(1), QuadElem(-1));
    CHECK(a * b == TowerElem::lift(L, QuadElem(16)));
    CHECK(a.norm() == QuadElem(16));
  }

  TEST_CASE("square twist parameter") {
    CHECK_THROWS_AS(tower(-7, 4), SquareTwistParameter);
    CHECK_THROWS_AS(TowerTag(field(-7), el("-7", -7)), SquareTwistParameter);
  }

  TEST_CASE("sigma") {
    auto L = tower(-2, -5);
    TowerElem s = TowerElem::sqrt_d(L);
    CHECK(galois_sigma(s) == -s);
    TowerElem three = TowerElem::lift(L, QuadElem(3));
    CHECK(galois_sigma(three) == three);
    std::mt19937_64 rng(5);
    for (int i = 0; i < 20; ++i) {
      TowerElem x(L, QuadElem(static_cast<long>(rng() % 100)), QuadElem(static_cast<long>(rng() % 100) - 50));
      CHECK(galois_sigma(galois_sigma(x)) == x);
      CHECK(x * galois_sigma(x) == TowerElem::lift(L, x.norm()));
    }
  }

  TEST_CASE("square roots in L") {
    auto L = tower(-7, -1);
    auto i = sqrt_in_L(TowerElem::lift(L, QuadElem(-1)));
    REQUIRE(i);
    CHECK(*i * *i == TowerElem::lift(L, QuadElem(-1)));

    // (1 + s)^2 = -14 + 2s when s^2 = -15
    auto L15 = tower(-7, -15);
    auto r = sqrt_in_L(TowerElem(L15, QuadElem(-14), QuadElem(2)));
    REQUIRE(r);
    CHECK((*r == TowerElem(L15, QuadElem(1), QuadElem(1)) || *r == TowerElem(L15, QuadElem(-1), QuadElem(-1))));
    // 2 + s: p^2 - 15 q^2 = 2, 2pq = 1 forces 60 q^4 + 8 q^2 - 1 = 0, no root in K
    CHECK_FALSE(sqrt_in_L(TowerElem(L15, QuadElem(2), QuadElem(1))));

    std::mt19937_64 rng(9);
    for (int k = 0; k < 30; ++k) {
      TowerElem x(L15, QuadElem(Rat(static_cast<long>(rng() % 41) - 20), Rat(static_cast<long>(rng() % 41) - 20), field(-7)),
                  QuadElem(static_cast<long>(rng() % 41) - 20));
      auto y = sqrt_in_L(x * x);
      REQUIRE(y);
      CHECK((*y == x || *y == -x));
    }
  }

  TEST_CASE("contains_sqrt") {
    CHECK(contains_sqrt(el("-1", -7), tower(-7, -1)));
    CHECK(contains_sqrt(el("-3", -7), tower(-7, -3)));
    CHECK_FALSE(contains_sqrt(el("-1", -2), tower(-2, -5)));
    // -3 * -7 = 21: sqrt(-3) lies in Q(sqrt -7, sqrt 21)
    CHECK(contains_sqrt(el("-3", -7), tower(-7, 21)));
  }
}
