#include "fps/inversion.hpp"

#include "fps/elementary.hpp"
#include "fps/errors.hpp"
#include "fps/theorem.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

using fps::Rational;
using fps::TruncatedPowerSeries;

namespace {

TruncatedPowerSeries series(std::vector<Rational> coeffs) {
    return TruncatedPowerSeries::from_coeffs(std::move(coeffs));
}

TruncatedPowerSeries x_minus_x_squared(int n) {
    auto c = TruncatedPowerSeries::zero(n).coefficients();
    c[1] = Rational(1);
    c[2] = Rational(-1);
    return TruncatedPowerSeries::from_coeffs(std::move(c));
}

}  // namespace

TEST_SUITE_BEGIN("inversion");

TEST_CASE("identity is self-inverse") {
    for (int n : {1, 4}) {
        const auto x = TruncatedPowerSeries::identity(n);
        CHECK(fps::lagrange_inverse(x) == x);
        CHECK(fps::newton_inverse(x) == x);
        CHECK(fps::verify_inverse(x, x));
    }
}

TEST_CASE("reversion of x - x^2 yields the Catalan numbers") {
    const auto catalan = fps::testing::catalan_numbers(12);
    const auto inv = fps::lagrange_inverse(x_minus_x_squared(12));
    CHECK(inv.coefficient(0).is_zero());
    for (int n = 1; n <= 12; ++n)
        CHECK(inv.coefficient(n) == Rational(catalan[n - 1]));
    CHECK(fps::newton_inverse(x_minus_x_squared(12)) == inv);
    CHECK(fps::truncated(inv, 5) == series({0, 1, 1, 2, 5, 14}));
}

TEST_CASE("reversion of sin is arcsin") {
    const auto expected =
        series({0, 1, 0, Rational(1, 6), 0, Rational(3, 40), 0, Rational(15, 336)});
    CHECK(fps::lagrange_inverse(fps::series_sin(7)) == expected);
    CHECK(fps::newton_inverse(fps::series_sin(7)) == expected);
}

TEST_CASE("non-regular input is rejected") {
    CHECK_THROWS_AS(fps::lagrange_inverse(series({0, 0, 1})), fps::NotRegularError);
    CHECK_THROWS_AS(fps::lagrange_inverse(series({1, 1})), fps::NotRegularError);
    CHECK_THROWS_AS(fps::newton_inverse(series({0, 0, 1})), fps::NotRegularError);
    CHECK_THROWS_AS(fps::lagrange_inverse(TruncatedPowerSeries::constant(Rational(0), 0)),
                    fps::PrecisionExceededError);
}

TEST_CASE("the two methods agree on random regular series") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        // every third series gets a non-unit slope; the formula does not need slope 1
        const auto f = seed % 3 == 0
                           ? fps::testing::random_regular_any_slope(1000 + seed, 12, 9)
                           : fps::random_regular(1000 + seed, 12, 9);
        const auto lagrange = fps::lagrange_inverse(f);
        CHECK(fps::newton_inverse(f) == lagrange);
        CHECK(fps::verify_inverse(f, lagrange));
        CHECK(fps::verify_inverse(lagrange, f));
    }
}

TEST_CASE("slope 3/2 works") {
    auto c = fps::random_regular(77, 10, 9).coefficients();
    c[1] = Rational(3, 2);
    const auto f = series(c);
    CHECK(fps::newton_inverse(f) == fps::lagrange_inverse(f));
    CHECK(fps::lagrange_inverse(f).coefficient(1) == Rational(2, 3));
}

TEST_CASE("inversion is an involution") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto f = fps::testing::random_regular_any_slope(2000 + seed, 10, 9);
        CHECK(fps::lagrange_inverse(fps::lagrange_inverse(f)) == f);
    }
}

TEST_CASE("coefficient n of the inverse depends only on coefficients up to n") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto f = fps::random_regular(3000 + seed, 12, 9);
        const auto g = fps::random_regular(4000 + seed, 12, 9);
        const auto f_inv = fps::lagrange_inverse(f);
        for (int n = 2; n <= 12; ++n) {
            // splice: low part from f, tail from g
            auto c = g.coefficients();
            for (int i = 0; i <= n; ++i) c[i] = f.coefficient(i);
            const auto spliced_inv = fps::lagrange_inverse(series(c));
            for (int i = 0; i <= n; ++i) CHECK(spliced_inv.coefficient(i) == f_inv.coefficient(i));
        }
    }
}

TEST_CASE("perturbing coefficient k shifts inverse coefficient k by the negation") {
    std::mt19937_64 rng(99);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto f = fps::random_regular(5000 + seed, 12, 9);
        const auto f_inv = fps::lagrange_inverse(f);
        for (int k = 2; k <= 12; ++k) {
            const auto delta = fps::testing::random_rational(rng, 9);
            if (delta.is_zero()) continue;
            auto c = f.coefficients();
            c[k] += delta;
            const auto g_inv = fps::lagrange_inverse(series(c));
            CHECK(g_inv.coefficient(k) - f_inv.coefficient(k) == -delta);
            for (int n = 0; n < k; ++n) CHECK(g_inv.coefficient(n) == f_inv.coefficient(n));
        }
    }
}

TEST_CASE("verify_inverse") {
    CHECK(fps::verify_inverse(fps::series_sin(7), fps::lagrange_inverse(fps::series_sin(7))));
    // x + x^2 is not the inverse of x - x^2: the x^3 term of the composition survives
    CHECK_FALSE(fps::verify_inverse(x_minus_x_squared(3), series({0, 1, 1, 0})));
    CHECK_THROWS_AS(fps::verify_inverse(x_minus_x_squared(3), x_minus_x_squared(4)),
                    fps::MalformedInputError);
    CHECK_THROWS_AS(fps::verify_inverse(series({0, 0, 1, 0}), x_minus_x_squared(3)),
                    fps::NotRegularError);
}

TEST_SUITE_END();
