#include <doctest.h>

#include "helpers.hpp"
#include "m1poly/scalar.hpp"

using namespace m1poly;
using m1poly::test::Q;

TEST_CASE("rational arithmetic is exact and normalized") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(3, -6).denominator() == 2);
    CHECK(Rational(0, 5).denominator() == 1);
    CHECK((Rational(7, 3) * Rational(3, 7)) == Rational(1));
    CHECK_THROWS_AS(Rational(1, 2) / Rational(0), division_by_zero);
    CHECK_THROWS_AS(Rational(1, 0), division_by_zero);
}

TEST_CASE("gaussian arithmetic") {
    Scalar i = Scalar::i();
    CHECK(i * i == Scalar(-1));
    // (1+i)/(1-i) = i
    Scalar one_plus(Rational(1), Rational(1));
    Scalar one_minus(Rational(1), Rational(-1));
    CHECK(one_plus / one_minus == i);
    CHECK_THROWS_AS(one_plus / Scalar(0), division_by_zero);
    CHECK(Q(1, 2).is_real());
    CHECK(!i.is_real());
    CHECK((i + i.conjugate()).is_zero());
}

TEST_CASE("field axioms on random samples") {
    m1poly::test::RationalGen gen(2024);
    for (int t = 0; t < 200; ++t) {
        Scalar a = gen.gaussian(), b = gen.gaussian(), c = gen.gaussian();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) CHECK(a * (Scalar(1) / a) == Scalar(1));
    }
}

TEST_CASE("parse_scalar grammar") {
    CHECK(parse_scalar("-3/4") == Q(-3, 4));
    CHECK(parse_scalar("0") == Q(0));
    CHECK(parse_scalar("17") == Q(17));
    CHECK(parse_scalar("1/2+2/3i") == Scalar(Rational(1, 2), Rational(2, 3)));
    CHECK(parse_scalar("1/2-2/3i") == Scalar(Rational(1, 2), Rational(-2, 3)));
    CHECK(parse_scalar("i") == Scalar::i());
    CHECK(parse_scalar("-i") == -Scalar::i());
    CHECK(parse_scalar("3i") == Scalar(Rational(0), Rational(3)));
    CHECK(parse_scalar("0+1i") == Scalar::i());
    CHECK(parse_scalar("-2-i") == Scalar(Rational(-2), Rational(-1)));

    CHECK_THROWS_AS(parse_scalar(""), parse_error);
    CHECK_THROWS_AS(parse_scalar("1/"), parse_error);
    CHECK_THROWS_AS(parse_scalar("1//2"), parse_error);
    CHECK_THROWS_AS(parse_scalar("1+2"), parse_error);
    CHECK_THROWS_AS(parse_scalar("1+2j"), parse_error);
    CHECK_THROWS_AS(parse_scalar("x"), parse_error);
    CHECK_THROWS_AS(parse_scalar("1/0"), parse_error);

    // the reported position points at the offending character
    try {
        parse_scalar("1/2+2/3x");
        CHECK(false);
    } catch (const parse_error& e) {
        CHECK(e.position == 7);
    }
}

TEST_CASE("render/parse round-trips") {
    CHECK(render_scalar(Q(-3, 4)) == "-3/4");
    CHECK(render_scalar(Q(5)) == "5");
    CHECK(render_scalar(Scalar(Rational(1, 2), Rational(2, 3))) == "1/2+2/3i");
    CHECK(render_scalar(Scalar(Rational(0), Rational(-1))) == "0-1i");

    m1poly::test::RationalGen gen(99);
    for (int t = 0; t < 200; ++t) {
        Scalar a = t % 2 == 0 ? gen.scalar() : gen.gaussian();
        CHECK(parse_scalar(render_scalar(a)) == a);
    }
}
