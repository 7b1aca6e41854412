#include <random>

#include "../test_util.hpp"
#include "doctest.h"
#include "torsionlab/finite_field.hpp"

using namespace tl_test;

TEST_SUITE("qfield") {
  TEST_CASE("arithmetic") {
    QuadElem x = el("1+w", -2), y = el("1-w", -2);
    CHECK(x * y == QuadElem(3));
    QuadElem z = el("3+2*w", -7);
    CHECK(z / z == QuadElem(1));
    CHECK(x * x == el("-1+2*w", -2));
    CHECK(el("w*w", -2) == QuadElem(-2));
    CHECK_THROWS_AS(z / QuadElem(0), DivisionByZero);
    CHECK_THROWS_AS(el("w", -2) + el("w", -7), MixedFields);
  }

  TEST_CASE("conj norm trace") {
    QuadElem x = el("1+w", -2);
    CHECK(x.conj() == el("1-w", -2));
    CHECK(x.norm() == 3);
    CHECK(x.trace() == 2);
    CHECK(QuadElem(5).norm() == 25);
    CHECK(QuadElem(5).trace() == 10);
    QuadElem s = el("w", -7);
    CHECK(s.conj() == -s);
    CHECK(s.norm() == 7);
    CHECK(s.trace() == 0);
  }

  TEST_CASE("integrality") {
    CHECK(is_integral(el("(1+w)/2", -7)));
    CHECK_FALSE(is_integral(el("(1+w)/2", -2)));
    CHECK(is_integral(el("(21*w-39)/2", -7)));
    CHECK(integral_denominator(el("(1+w)/6", -7)) == 3);
  }

  TEST_CASE("square roots") {
    CHECK(*sqrt_in_K(QuadElem(4)) == QuadElem(2));
    auto r = sqrt_in_K(el("-1+2*w", -2));
    REQUIRE(r);
    CHECK(*r * *r == el("-1+2*w", -2));
    auto z = sqrt_in_K(el("-1575", -7));
    REQUIRE(z);
    CHECK((*z == el("15*w", -7) || *z == el("-15*w", -7)));
    CHECK_FALSE(sqrt_in_K(el("2", -7)));
    CHECK_FALSE(is_square_in_K(el("-1", -2)));
  }

  TEST_CASE("splitting") {
    auto P = splitting_type(3, field(-11));
    CHECK(P.kind == SplitKind::split);
    CHECK((P.r == 1 || P.r == 2));
    CHECK(splitting_type(5, field(-2)).kind == SplitKind::inert);
    CHECK(splitting_type(7, field(-7)).kind == SplitKind::ramified);
    CHECK(splitting_type(3, field(-2)).kind == SplitKind::split);
    CHECK(splitting_type(3, field(-19)).kind == SplitKind::inert);
  }

  TEST_CASE("reduction") {
    auto P = splitting_type(3, field(-11));
    P.r = 1;
    CHECK(reduce_mod(el("1+w", -11), P) == FFElem::from_int(FiniteField::prime(3), 2));
    auto Q = splitting_type(5, field(-2));
    FFElem seven = reduce_mod(el("7", -2), Q);
    CHECK(seven.field().q() == 25);
    CHECK(seven == FFElem::from_int(seven.field(), 2));
    // (1 + r) / 2 with r^2 = -7 = 4 mod 11
    auto R = splitting_type(11, field(-7));
    REQUIRE(R.kind == SplitKind::split);
    FFElem h = reduce_mod(el("(1+w)/2", -7), R);
    const auto& F11 = FiniteField::prime(11);
    CHECK(h == (FFElem::from_int(F11, 1) + FFElem::from_int(F11, R.r)) / FFElem::from_int(F11, 2));
    CHECK_THROWS(reduce_mod(el("1/11", -7), R));
  }

  TEST_CASE("reconstruction") {
    FieldTag K = field(-7);
    long p = 0;
    for (long q = 101; !p; q = next_prime(q))
      if (splitting_type(q, K).kind == SplitKind::split) p = q;
    auto P = splitting_type(p, K);
    Int pk = Int(p) * p * p * p;
    Int s = lift_sqrt_D(P, 4);
    QuadElem x = QuadElem(1).with_tag(K) + QuadElem::omega(K);
    auto back = reconstruct_from_residue(residue_mod(x, pk, s), p, 4, P, Int(1000));
    REQUIRE(back);
    CHECK(*back == x);
    auto five = reconstruct_from_residue(residue_mod(QuadElem(5).with_tag(K), pk, s), p, 4, P, Int(1000));
    REQUIRE(five);
    CHECK(*five == QuadElem(5));

    // absence agrees with an exhaustive search of the box
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
      Int c = Int(static_cast<long>(rng() % 1000000007ULL)) % pk;
      auto got = reconstruct_from_residue(c, p, 4, P, Int(3));
      bool any = false;
      for (long a = -3; a <= 3; ++a)
        for (long b = -3; b <= 3; ++b) {
          QuadElem y = QuadElem(a).with_tag(K) + QuadElem(b) * QuadElem::omega(K);
          if (residue_mod(y, pk, s) == c) any = true;
        }
      CHECK(got.has_value() == any);
    }
  }

  TEST_CASE("parsing") {
    CHECK(el("(21*w - 39)/2", -7) == QuadElem(Rat(-39, 2), Rat(21, 2), field(-7)));
    CHECK(el("0", -7).is_zero());
    CHECK_THROWS_AS(el("1+", -7), SyntaxError);
    CHECK_THROWS_AS(el("(1+w", -7), SyntaxError);
    CHECK_THROWS_AS(el("w", 0), SyntaxError);
    CHECK_THROWS_AS(FieldTag(5), UnsupportedField);
    CHECK(FieldTag::quadratic(5).D() == 5);
  }

  TEST_CASE("canonical print round trip") {
    std::mt19937_64 rng(11);
    for (long D : {-2L, -7L, -163L}) {
      for (int i = 0; i < 50; ++i) {
        QuadElem x(Rat(static_cast<long>(rng() % 2001) - 1000, static_cast<long>(rng() % 9) + 1),
                   Rat(static_cast<long>(rng() % 2001) - 1000, static_cast<long>(rng() % 9) + 1), field(D));
        CHECK(parse_elem(x.str(), field(D)) == x);
      }
    }
  }

  TEST_CASE("field axioms on random elements") {
    std::mt19937_64 rng(3);
    auto r = [&] { return Rat(static_cast<long>(rng() % 201) - 100, static_cast<long>(rng() % 5) + 1); };
    for (long D : {-2L, -11L, -67L}) {
      for (int i = 0; i < 40; ++i) {
        QuadElem x(r(), r(), field(D)), y(r(), r(), field(D)), z(r(), r(), field(D));
        CHECK((x + y) * z == x * z + y * z);
        CHECK((x * y).norm() == x.norm() * y.norm());
        if (!x.is_zero()) CHECK(x * x.inverse() == QuadElem(1));
        auto s = sqrt_in_K(x * x);
        REQUIRE(s);
        CHECK((*s == x || *s == -x));
      }
    }
  }
}
