#include "doctest.h"
#include "starsemi/ints.hpp"
#include "starsemi/rational.hpp"

using namespace starsemi;

TEST_CASE("checked arithmetic detects overflow") {
    Int big = Int(1);
    for (int i = 0; i < 126; ++i) big = big * Int(2);
    CHECK_THROWS_AS(big * Int(4), OverflowError);
    CHECK_THROWS_AS(big + big, OverflowError);
    CHECK_NOTHROW(big + Int(-1));
    CHECK_THROWS_AS(Int(1) / Int(0), Error);
}

TEST_CASE("int128 string round-trip") {
    CHECK(to_string(Int(0)) == "0");
    CHECK(to_string(Int(-17)) == "-17");
    Int big = parse_int("170141183460469231731687303715884105727");  // 2^127 - 1
    CHECK(to_string(big) == "170141183460469231731687303715884105727");
    CHECK(parse_int(to_string(-big)) == -big);
    CHECK_THROWS_AS(parse_int("12x"), ParseError);
    CHECK_THROWS_AS(parse_int(""), ParseError);
}

TEST_CASE("gcd, lcm, division helpers") {
    CHECK(gcd(Int(12), Int(18)) == Int(6));
    CHECK(gcd(Int(0), Int(5)) == Int(5));
    CHECK(gcd(Int(-4), Int(6)) == Int(2));
    CHECK(lcm(Int(4), Int(6)) == Int(12));
    CHECK(floor_div(Int(-5), Int(3)) == Int(-2));
    CHECK(ceil_div(Int(-5), Int(3)) == Int(-1));
    CHECK(ceil_div(Int(5), Int(3)) == Int(2));
    CHECK(mod_floor(Int(-5), Int(3)) == Int(1));
    CHECK(checked_pow(Int(3), Int(5)) == Int(243));
    CHECK(checked_pow(Int(7), Int(0)) == Int(1));
}

TEST_CASE("modular inverse") {
    CHECK(mod_inverse(Int(3), Int(5)) == Int(2));
    CHECK(mod_inverse(Int(13), Int(35)) == Int(27));
    CHECK(mod_inverse(Int(7), Int(1)) == Int(0));
    CHECK_THROWS_AS(mod_inverse(Int(2), Int(4)), Error);
}

TEST_CASE("rationals are exact and ordered") {
    Rational a(Int(1), Int(3));
    Rational b(Int(2), Int(6));
    CHECK(a == b);
    CHECK(a + a == Rational(Int(2), Int(3)));
    CHECK(Rational(Int(1), Int(2)) * Rational(Int(2), Int(3)) == Rational(Int(1), Int(3)));
    CHECK(Rational(Int(-3), Int(-6)) == Rational(Int(1), Int(2)));
    CHECK(Rational(Int(7), Int(2)).floor() == Int(3));
    CHECK(Rational(Int(-7), Int(2)).floor() == Int(-4));
    CHECK(Rational(Int(7), Int(2)).ceil() == Int(4));
    CHECK(Rational(Int(1), Int(3)) < Rational(Int(1), Int(2)));
    CHECK(Rational(Int(6), Int(3)).as_integer() == Int(2));
    CHECK_THROWS_AS(Rational(Int(1), Int(3)).as_integer(), Error);
    CHECK_THROWS_AS(Rational(Int(1), Int(0)), Error);
    CHECK(Rational(Int(5), Int(-10)).to_string() == "-1/2");
}
