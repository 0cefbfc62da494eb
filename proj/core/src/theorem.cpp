#include "fps/theorem.hpp"

#include "fps/errors.hpp"
#include "fps/inversion.hpp"

#include <random>
#include <vector>

namespace fps {

OrdLead ord_lead(const TruncatedPowerSeries& f) {
    for (int n = 0; n <= f.precision(); ++n)
        if (!f.coefficient(n).is_zero()) return {n, f.coefficient(n)};
    throw ZeroAtPrecisionError("series vanishes through precision " +
                               std::to_string(f.precision()));
}

Theorem2Report check_theorem2(const TruncatedPowerSeries& f, const TruncatedPowerSeries& g) {
    if (!is_regular(f) || !is_regular(g))
        throw NotRegularError("check_theorem2 needs two regular series");
    if (f.precision() != g.precision())
        throw MalformedInputError("check_theorem2 needs equal precisions");
    if (f.coefficient(1) != Rational(1) || g.coefficient(1) != Rational(1))
        throw PreconditionError("check_theorem2 needs unit slope on both series");

    // Both sides from scratch; nothing is shared between them, so agreement
    // genuinely exercises the inversion path.
    const auto direct = ord_lead(sub(f, g));  // ZeroAtPrecisionError when f = g at this precision
    const auto inverse_side = ord_lead(sub(lagrange_inverse(g), lagrange_inverse(f)));
    const bool holds =
        direct.order == inverse_side.order && direct.leading == inverse_side.leading;
    return {direct.order, direct.leading, inverse_side.order, inverse_side.leading, holds};
}

TruncatedPowerSeries random_regular(std::uint64_t seed, int precision, int coeff_bound) {
    if (precision < 1) throw PreconditionError("random_regular needs precision >= 1");
    if (coeff_bound < 1) throw PreconditionError("random_regular needs coeff_bound >= 1");
    std::mt19937_64 rng(seed);
    const auto span = static_cast<std::uint64_t>(2 * coeff_bound + 1);
    std::vector<Rational> c(static_cast<std::size_t>(precision) + 1);
    c[1] = Rational(1);
    for (int k = 2; k <= precision; ++k) {
        const auto num = static_cast<long long>(rng() % span) - coeff_bound;
        const auto den = static_cast<long long>(rng() % static_cast<std::uint64_t>(coeff_bound)) + 1;
        c[k] = Rational(num, den);
    }
    return TruncatedPowerSeries::from_coeffs(std::move(c));
}

}  // namespace fps
