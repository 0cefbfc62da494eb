#include "fps/limit.hpp"

#include "fps/errors.hpp"
#include "fps/theorem.hpp"

#include <algorithm>

namespace fps {

namespace {

LimitResult classify(const OrdLead& num, const OrdLead& den) {
    if (num.order > den.order) return FiniteLimit{Rational(0)};
    if (num.order == den.order) return FiniteLimit{num.leading / den.leading};
    const int gap = den.order - num.order;
    if (gap % 2 == 0) return SignedInfinityLimit{(num.leading / den.leading).sign(), gap};
    return TwoSidedDivergenceLimit{gap};
}

}  // namespace

LimitResult limit_ratio(const Expr& num, const Expr& den, int start_order, int max_order) {
    if (start_order < 1 || start_order > max_order)
        throw PreconditionError("limit_ratio needs 1 <= start_order <= max_order");
    int order = start_order;
    while (true) {
        const auto num_series = evaluate(num, order);
        const auto den_series = evaluate(den, order);
        if (!num_series.is_zero() && !den_series.is_zero())
            return classify(ord_lead(num_series), ord_lead(den_series));
        if (order >= max_order) return UndeterminedLimit{max_order};
        order = std::min(2 * order, max_order);
    }
}

}  // namespace fps
