#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <climits>

#include "latfano/numeric.hpp"
#include "latfano/rng.hpp"
#include "latfano/vec.hpp"

using namespace latfano;

TEST_CASE("Int arithmetic is exact and overflow throws instead of wrapping") {
  CHECK(Int(3) + Int(4) == Int(7));
  CHECK(Int(3) - Int(10) == Int(-7));
  CHECK(Int(-6) * Int(7) == Int(-42));
  CHECK(-Int(5) == Int(-5));
  CHECK(abs(Int(-9)) == Int(9));
  CHECK(sgn(Int(-2)) == -1);
  CHECK(sgn(Int(0)) == 0);
  CHECK(sgn(Int(17)) == 1);

  CHECK_THROWS_AS(Int(LLONG_MAX) + Int(1), OverflowError);
  CHECK_THROWS_AS(Int(LLONG_MIN) - Int(1), OverflowError);
  CHECK_THROWS_AS(Int(LLONG_MAX) * Int(2), OverflowError);
  CHECK_THROWS_AS(-Int(LLONG_MIN), OverflowError);
  // the near-miss cases must still work
  CHECK(Int(LLONG_MAX) + Int(0) == Int(LLONG_MAX));
  CHECK(Int(LLONG_MIN) * Int(1) == Int(LLONG_MIN));
}

TEST_CASE("gcd, floordiv, ceildiv, divexact across signs") {
  CHECK(gcd(Int(12), Int(18)) == Int(6));
  CHECK(gcd(Int(-12), Int(18)) == Int(6));
  CHECK(gcd(Int(0), Int(-7)) == Int(7));
  CHECK(gcd(Int(0), Int(0)) == Int(0));
  // LLONG_MIN has no positive 64-bit magnitude partner except via unsigned
  CHECK(gcd(Int(LLONG_MIN), Int(2)) == Int(2));
  CHECK_THROWS_AS(gcd(Int(LLONG_MIN), Int(0)), OverflowError);

  CHECK(floordiv(Int(7), Int(2)) == Int(3));
  CHECK(floordiv(Int(-7), Int(2)) == Int(-4));
  CHECK(floordiv(Int(7), Int(-2)) == Int(-4));
  CHECK(floordiv(Int(-7), Int(-2)) == Int(3));
  CHECK_THROWS_AS(floordiv(Int(LLONG_MIN), Int(-1)), OverflowError);
  CHECK(floordiv(Int(LLONG_MIN + 1), Int(-1)) == Int(LLONG_MAX));
  CHECK(ceildiv(Int(7), Int(2)) == Int(4));
  CHECK(ceildiv(Int(-7), Int(2)) == Int(-3));

  CHECK(divexact(Int(-42), Int(6)) == Int(-7));
  CHECK_THROWS_AS(divexact(Int(7), Int(2)), std::logic_error);
  CHECK_THROWS_AS(divexact(Int(7), Int(0)), std::invalid_argument);
}

TEST_CASE("Rat is stored reduced with positive denominator") {
  Rat a(Int(6), Int(-4));
  CHECK(a.num == Int(-3));
  CHECK(a.den == Int(2));
  CHECK(!a.is_integer());
  CHECK(a.floor() == Int(-2));
  CHECK(a.ceil() == Int(-1));

  CHECK(Rat(Int(1), Int(3)) + Rat(Int(1), Int(6)) == Rat(Int(1), Int(2)));
  CHECK(Rat(Int(2), Int(3)) * Rat(Int(3), Int(4)) == Rat(Int(1), Int(2)));
  CHECK(Rat(Int(1), Int(2)) / Rat(Int(-1), Int(4)) == Rat(Int(-2)));
  CHECK(Rat(Int(1), Int(3)) < Rat(Int(1), Int(2)));
  CHECK(to_string(Rat(Int(-3), Int(2))) == "-3/2");
  CHECK(to_string(Rat(Int(4), Int(2))) == "2");
  CHECK_THROWS_AS(Rat(Int(1), Int(0)), std::invalid_argument);
  CHECK_THROWS_AS(Rat(Int(1)) / Rat(Int(0)), std::invalid_argument);
}

TEST_CASE("Vec construction, order and the multilinear forms") {
  Vec a{1, 2, 3}, b{4, 5, 6};
  CHECK(a.dim() == 3);
  CHECK(dot(a, b) == Int(32));
  CHECK(a + b == Vec{5, 7, 9});
  CHECK(b - a == Vec{3, 3, 3});
  CHECK(Int(2) * a == Vec{2, 4, 6});
  CHECK(-a == Vec{-1, -2, -3});
  CHECK(Vec{0, 1} < Vec{1, 0});
  CHECK(Vec{1, 0, 0} < Vec{1, 0, 1});
  CHECK_THROWS_AS(Vec({1, 2, 3, 4}), std::invalid_argument);
  CHECK_THROWS_AS(dot(Vec{1, 2}, Vec{1, 2, 3}), std::invalid_argument);

  CHECK(det2(Vec{2, 1}, Vec{1, 3}) == Int(5));
  CHECK(cross(Vec{1, 0, 0}, Vec{0, 1, 0}) == Vec{0, 0, 1});
  CHECK(det3(Vec{1, 0, 0}, Vec{0, 1, 0}, Vec{0, 0, 1}) == Int(1));
  CHECK(det3(Vec{2, 0, 0}, Vec{0, 3, 0}, Vec{0, 0, 4}) == Int(24));

  CHECK(primitive(Vec{4, -6, 8}) == Vec{2, -3, 4});
  CHECK(is_primitive(Vec{2, -3, 4}));
  CHECK(!is_primitive(Vec{2, 4, 6}));
  CHECK(!is_primitive(Vec::zero(3)));
  CHECK_THROWS_AS(primitive(Vec::zero(2)), std::invalid_argument);
}

TEST_CASE("UnimodularMap validates its determinant and applies affinely") {
  std::array<std::array<Int, 3>, 3> rows{};
  rows[0] = {Int(1), Int(1), Int(0)};
  rows[1] = {Int(0), Int(1), Int(0)};
  rows[2] = {Int(0), Int(0), Int(1)};
  UnimodularMap u(3, rows, Vec{1, 0, -1});
  CHECK(u.apply(Vec{2, 3, 4}) == Vec{6, 3, 3});

  rows[0] = {Int(2), Int(0), Int(0)};
  CHECK_THROWS_AS(UnimodularMap(3, rows, Vec::zero(3)),
                  std::invalid_argument);
  CHECK(UnimodularMap::identity(2).apply(Vec{5, -7}) == Vec{5, -7});
}

TEST_CASE("SplitMix64 is the published sequence and child seeds split") {
  // reference values for seed 0 from the SplitMix64 definition
  SplitMix64 r(0);
  CHECK(r.next() == 0xE220A8397B1DCDAFull);
  CHECK(r.next() == 0x6E789E6AA1B965F4ull);
  CHECK(r.next() == 0x06C45D188009454Full);

  SplitMix64 s(12345);
  auto a = s.below(10);
  CHECK(a < 10);

  CHECK(child_seed(7, 0) != child_seed(7, 1));
  CHECK(child_seed(7, 0) != child_seed(8, 0));
  // splitting is pure: same inputs, same child
  CHECK(child_seed(7, 3) == child_seed(7, 3));
}
