#include "fps/elementary.hpp"

#include "fps/errors.hpp"

#include <vector>

namespace fps {

namespace {

std::vector<Rational> zeros(int n) {
    if (n < 0) throw MalformedInputError("negative precision");
    return std::vector<Rational>(static_cast<std::size_t>(n) + 1);
}

// factorials 0! .. n!
std::vector<Integer> factorials(int n) {
    std::vector<Integer> f(static_cast<std::size_t>(n) + 1);
    f[0] = 1;
    for (int i = 1; i <= n; ++i) f[i] = f[i - 1] * i;
    return f;
}

}  // namespace

TruncatedPowerSeries series_sin(int n) {
    auto c = zeros(n);
    const auto fact = factorials(n);
    for (int m = 1; m <= n; m += 2) {
        const int k = (m - 1) / 2;
        c[m] = Rational(Integer(k % 2 == 0 ? 1 : -1), fact[m]);
    }
    return TruncatedPowerSeries::from_coeffs(std::move(c));
}

TruncatedPowerSeries series_cos(int n) {
    auto c = zeros(n);
    const auto fact = factorials(n);
    for (int m = 0; m <= n; m += 2) {
        const int k = m / 2;
        c[m] = Rational(Integer(k % 2 == 0 ? 1 : -1), fact[m]);
    }
    return TruncatedPowerSeries::from_coeffs(std::move(c));
}

TruncatedPowerSeries series_exp(int n) {
    auto c = zeros(n);
    const auto fact = factorials(n);
    for (int m = 0; m <= n; ++m) c[m] = Rational(Integer(1), fact[m]);
    return TruncatedPowerSeries::from_coeffs(std::move(c));
}

TruncatedPowerSeries series_log1p(int n) {
    auto c = zeros(n);
    for (int m = 1; m <= n; ++m) c[m] = Rational(m % 2 == 1 ? 1 : -1, m);
    return TruncatedPowerSeries::from_coeffs(std::move(c));
}

TruncatedPowerSeries series_arctan(int n) {
    auto c = zeros(n);
    for (int m = 1; m <= n; m += 2) {
        const int k = (m - 1) / 2;
        c[m] = Rational(k % 2 == 0 ? 1 : -1, m);
    }
    return TruncatedPowerSeries::from_coeffs(std::move(c));
}

TruncatedPowerSeries series_arcsin(int n) {
    auto c = zeros(n);
    Integer binom = 1;  // binomial(2k, k)
    Integer four_pow = 1;
    for (int k = 0; 2 * k + 1 <= n; ++k) {
        if (k > 0) {
            binom = binom * (2 * (2 * k - 1)) / k;  // C(2k,k) = C(2k-2,k-1) * 2(2k-1)/k
            four_pow *= 4;
        }
        c[2 * k + 1] = Rational(binom, four_pow * (2 * k + 1));
    }
    return TruncatedPowerSeries::from_coeffs(std::move(c));
}

TruncatedPowerSeries series_tan(int n) {
    return mul(series_sin(n), reciprocal(series_cos(n)));
}

}  // namespace fps
