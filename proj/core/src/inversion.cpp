#include "fps/inversion.hpp"

#include "fps/errors.hpp"

#include <algorithm>
#include <utility>
#include <vector>

namespace fps {

namespace {

// Working representative with a zero tail. Coefficient n of the inverse
// depends only on coefficients 1..n of the input, so any choice of tail
// yields the same first precision(f) inverse coefficients; the Newton
// iteration just needs some representative to run its doubling ladder on.
TruncatedPowerSeries zero_extended(const TruncatedPowerSeries& f, int precision) {
    auto c = f.coefficients();
    c.resize(static_cast<std::size_t>(precision) + 1);
    return TruncatedPowerSeries::from_coeffs(std::move(c));
}

}  // namespace

TruncatedPowerSeries lagrange_inverse(const TruncatedPowerSeries& f) {
    if (!is_regular(f)) throw NotRegularError("lagrange_inverse needs a regular series");
    const int n_max = f.precision();
    // h = x/f(x): f shifted down one degree has constant term [x^1]f != 0.
    const auto h = reciprocal(shift_down(f, 1));
    std::vector<Rational> g(static_cast<std::size_t>(n_max) + 1);
    auto h_power = h;  // h^n while n runs upward
    for (int n = 1; n <= n_max; ++n) {
        g[n] = h_power.coefficient(n - 1) / Rational(n);
        if (n < n_max) h_power = mul(h_power, h);
    }
    return TruncatedPowerSeries::from_coeffs(std::move(g));
}

TruncatedPowerSeries newton_inverse(const TruncatedPowerSeries& f) {
    if (!is_regular(f)) throw NotRegularError("newton_inverse needs a regular series");
    const int n_max = f.precision();

    int top = 1;
    while (top < n_max) top *= 2;
    const auto fe = zero_extended(f, top + 1);

    auto g = TruncatedPowerSeries::from_coeffs({Rational(0), Rational(1) / f.coefficient(1)});
    int correct = 1;  // g matches the inverse through this degree
    while (correct < n_max) {
        const int next = 2 * correct;
        const auto lifted = zero_extended(g, next);
        const auto residual = sub(compose(truncated(fe, next), lifted),
                                  TruncatedPowerSeries::identity(next));
        const auto slope = compose(derivative(truncated(fe, next + 1)), lifted);
        g = sub(lifted, mul(residual, reciprocal(slope)));
        correct = next;
    }
    return correct == n_max ? g : truncated(g, n_max);
}

bool verify_inverse(const TruncatedPowerSeries& f, const TruncatedPowerSeries& g) {
    if (!is_regular(f) || !is_regular(g))
        throw NotRegularError("verify_inverse needs two regular series");
    if (f.precision() != g.precision())
        throw MalformedInputError("verify_inverse needs equal precisions");
    const auto x = TruncatedPowerSeries::identity(f.precision());
    return compose(f, g) == x && compose(g, f) == x;
}

}  // namespace fps
