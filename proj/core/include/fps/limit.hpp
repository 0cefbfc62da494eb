#pragma once

#include "fps/expr.hpp"
#include "fps/rational.hpp"

#include <variant>

namespace fps {

/// lim_{x->0} num/den exists and equals `value` (m(num)/m(den) on equal
/// orders, 0 when the numerator vanishes to higher order).
struct FiniteLimit {
    Rational value;
    friend bool operator==(const FiniteLimit&, const FiniteLimit&) = default;
};

/// ord(den) - ord(num) = gap > 0 and even: the ratio blows up with one sign.
struct SignedInfinityLimit {
    int sign;  // +1 or -1, the sign of m(num)/m(den)
    int gap;
    friend bool operator==(const SignedInfinityLimit&, const SignedInfinityLimit&) = default;
};

/// Odd order gap: the ratio blows up with opposite signs from the two sides
/// of 0, so no signed limit exists.
struct TwoSidedDivergenceLimit {
    int gap;
    friend bool operator==(const TwoSidedDivergenceLimit&, const TwoSidedDivergenceLimit&) = default;
};

/// One of the series stayed identically zero through the precision cap;
/// the truncation cannot decide the limit.
struct UndeterminedLimit {
    int reached_order;
    friend bool operator==(const UndeterminedLimit&, const UndeterminedLimit&) = default;
};

using LimitResult =
    std::variant<FiniteLimit, SignedInfinityLimit, TwoSidedDivergenceLimit, UndeterminedLimit>;

/// Ratio limit at 0 by series expansion: evaluates both expressions at
/// precision start_order, doubling (capped at max_order) until both have a
/// nonzero coefficient, then classifies by comparing orders and leading
/// coefficients. Once resolved, the answer is independent of the precision
/// it was resolved at. Requires 1 <= start_order <= max_order.
LimitResult limit_ratio(const Expr& num, const Expr& den, int start_order, int max_order);

}  // namespace fps
