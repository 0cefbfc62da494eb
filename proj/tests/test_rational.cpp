#include "fps/rational.hpp"

#include "fps/errors.hpp"
#include "support/oracles.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <doctest.h>

#include <random>

using fps::Integer;
using fps::Rational;

TEST_SUITE_BEGIN("rational");

TEST_CASE("construction canonicalizes") {
    CHECK(Rational(2, 4).str() == "1/2");
    CHECK(Rational(-3, -6).str() == "1/2");
    CHECK(Rational(3, -6).str() == "-1/2");
    CHECK(Rational(0, -5).str() == "0");
    CHECK(Rational(7, 1).str() == "7");
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK_THROWS_AS(Rational(1, 0), fps::MalformedInputError);
}

TEST_CASE("canonical invariants hold after arithmetic") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        const auto a = fps::testing::random_rational(rng, 50);
        const auto b = fps::testing::random_rational(rng, 50);
        for (const auto& r : {a + b, a - b, a * b}) {
            CHECK(r.denominator() > 0);
            CHECK(boost::multiprecision::gcd(boost::multiprecision::abs(r.numerator()),
                                             r.denominator()) == 1);
            // re-canonicalization is a no-op
            CHECK(Rational(r.numerator(), r.denominator()) == r);
        }
    }
}

TEST_CASE("exact field arithmetic") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 3) - Rational(1, 2) == Rational(-1, 6));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(Rational(1, 7) / Rational(2, 7) == Rational(1, 2));
    CHECK(-Rational(1, 2) == Rational(-1, 2));
    CHECK_THROWS_AS(Rational(1) / Rational(0), fps::NotInvertibleError);

    std::mt19937_64 rng(12);
    for (int i = 0; i < 200; ++i) {
        const auto a = fps::testing::random_rational(rng, 99);
        const auto b = fps::testing::random_rational(rng, 99);
        const auto c = fps::testing::random_rational(rng, 99);
        CHECK(a + b == b + a);
        CHECK((a + b) - b == a);
        CHECK(a * (b + c) == a * b + a * c);
        if (!b.is_zero()) CHECK((a / b) * b == a);
    }
}

TEST_CASE("ordering and sign") {
    CHECK(Rational(-1, 2) < Rational(1, 3));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(0).sign() == 0);
    CHECK(Rational(-3, 7).sign() == -1);
    CHECK(Rational(3, 7).sign() == 1);
    CHECK(Rational(0).is_zero());
}

TEST_CASE("text form round trip") {
    for (const char* text : {"0", "3", "-7", "-1/30", "22/7", "100000000000000000000000000001/3"}) {
        const auto r = Rational::parse(text);
        CHECK(r.str() == text);
        CHECK(Rational::parse(r.str()) == r);
    }
    CHECK(Rational::parse("4/6") == Rational(2, 3));  // input need not be reduced
    CHECK_THROWS_AS(Rational::parse(""), fps::MalformedInputError);
    CHECK_THROWS_AS(Rational::parse("1/0"), fps::MalformedInputError);
    CHECK_THROWS_AS(Rational::parse("1.5"), fps::MalformedInputError);
    CHECK_THROWS_AS(Rational::parse("1/-2"), fps::MalformedInputError);
    CHECK_THROWS_AS(Rational::parse("/2"), fps::MalformedInputError);
    CHECK_THROWS_AS(Rational::parse("2/"), fps::MalformedInputError);
}

TEST_SUITE_END();
