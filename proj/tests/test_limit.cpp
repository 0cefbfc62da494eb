#include "fps/limit.hpp"

#include "fps/errors.hpp"
#include "fps/expr.hpp"

#include <doctest.h>

#include <string>
#include <variant>

using fps::FiniteLimit;
using fps::LimitResult;
using fps::Rational;
using fps::SignedInfinityLimit;
using fps::TwoSidedDivergenceLimit;
using fps::UndeterminedLimit;

namespace {

LimitResult limit(const std::string& num, const std::string& den, int start = 16, int cap = 64) {
    return fps::limit_ratio(*fps::parse(num), *fps::parse(den), start, cap);
}

}  // namespace

TEST_SUITE_BEGIN("limit");

TEST_CASE("finite limits") {
    CHECK(limit("x", "x") == LimitResult{FiniteLimit{Rational(1)}});
    CHECK(limit("sin(x)", "x") == LimitResult{FiniteLimit{Rational(1)}});
    CHECK(limit("x^2", "x") == LimitResult{FiniteLimit{Rational(0)}});
    CHECK(limit("sin(x) - x", "x^3") == LimitResult{FiniteLimit{Rational(-1, 6)}});
    CHECK(limit("3*x^2", "-2*x^2") == LimitResult{FiniteLimit{Rational(-3, 2)}});
}

TEST_CASE("the arnold ratio is exactly 1") {
    const auto result = limit("sin(tan(x)) - tan(sin(x))", "asin(atan(x)) - atan(asin(x))");
    CHECK(result == LimitResult{FiniteLimit{Rational(1)}});
}

TEST_CASE("divergence taxonomy by order gap parity") {
    CHECK(limit("x", "x^3") == LimitResult{SignedInfinityLimit{+1, 2}});
    CHECK(limit("-x", "x^3") == LimitResult{SignedInfinityLimit{-1, 2}});
    CHECK(limit("x", "x^2") == LimitResult{TwoSidedDivergenceLimit{1}});
    CHECK(limit("x^2", "x^5") == LimitResult{TwoSidedDivergenceLimit{3}});
}

TEST_CASE("identically zero series stay undetermined") {
    CHECK(limit("x - x", "x", 1, 8) == LimitResult{UndeterminedLimit{8}});
    CHECK(limit("x", "x - x", 1, 8) == LimitResult{UndeterminedLimit{8}});
    CHECK(limit("0", "x", 2, 32) == LimitResult{UndeterminedLimit{32}});
}

TEST_CASE("precision escalation finds high-order leading terms") {
    // both differences first become nonzero at x^7
    for (int start : {1, 2, 5, 8, 16, 64}) {
        const auto result =
            limit("sin(tan(x)) - tan(sin(x))", "asin(atan(x)) - atan(asin(x))", start, 64);
        CAPTURE(start);
        CHECK(result == LimitResult{FiniteLimit{Rational(1)}});
    }
}

TEST_CASE("results are stable across resolving precisions") {
    for (const auto& [num, den] : {std::pair<std::string, std::string>{"sin(x)", "x"},
                                   {"x", "x^3"},
                                   {"x", "x^2"},
                                   {"sin(x) - x", "x^3"}}) {
        const auto first = limit(num, den, 4, 64);
        for (int start : {8, 16, 33, 64}) CHECK(limit(num, den, start, 64) == first);
    }
}

TEST_CASE("finite limits scale with the numerator") {
    const auto num = fps::parse("sin(x) - x");
    const auto den = fps::parse("x^3");
    const auto base = std::get<FiniteLimit>(fps::limit_ratio(*num, *den, 4, 64)).value;
    for (const auto& c : {Rational(2), Rational(-3), Rational(5, 7)}) {
        const auto scaled = fps::Expr::mul(fps::Expr::constant(c), num);
        const auto result = fps::limit_ratio(*scaled, *den, 4, 64);
        CHECK(result == LimitResult{FiniteLimit{c * base}});
    }
}

TEST_CASE("bad orders and propagated evaluation errors") {
    const auto x = fps::parse("x");
    CHECK_THROWS_AS(fps::limit_ratio(*x, *x, 0, 4), fps::PreconditionError);
    CHECK_THROWS_AS(fps::limit_ratio(*x, *x, 5, 4), fps::PreconditionError);
    CHECK_THROWS_AS(limit("1/x", "x"), fps::DivisionOrderError);
    CHECK_THROWS_AS(limit("inverse(x^2)", "x"), fps::NotRegularError);
}

TEST_SUITE_END();
