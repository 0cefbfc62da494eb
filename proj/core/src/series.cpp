#include "fps/series.hpp"

#include "fps/errors.hpp"

#include <algorithm>
#include <ostream>
#include <utility>

namespace fps {

TruncatedPowerSeries TruncatedPowerSeries::from_coeffs(std::vector<Rational> coeffs) {
    if (coeffs.empty()) throw MalformedInputError("a series needs at least the constant coefficient");
    return TruncatedPowerSeries(std::move(coeffs));
}

TruncatedPowerSeries TruncatedPowerSeries::zero(int precision) {
    if (precision < 0) throw MalformedInputError("negative precision");
    return TruncatedPowerSeries(std::vector<Rational>(static_cast<std::size_t>(precision) + 1));
}

TruncatedPowerSeries TruncatedPowerSeries::constant(const Rational& c, int precision) {
    auto s = zero(precision);
    s.coeffs_[0] = c;
    return s;
}

TruncatedPowerSeries TruncatedPowerSeries::identity(int precision) {
    if (precision < 1) throw MalformedInputError("the identity series needs precision >= 1");
    auto s = zero(precision);
    s.coeffs_[1] = Rational(1);
    return s;
}

const Rational& TruncatedPowerSeries::coefficient(int n) const {
    if (n < 0) throw MalformedInputError("negative coefficient index");
    if (n > precision())
        throw PrecisionExceededError("coefficient " + std::to_string(n) +
                                     " is beyond precision " + std::to_string(precision()));
    return coeffs_[static_cast<std::size_t>(n)];
}

bool TruncatedPowerSeries::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.is_zero(); });
}

std::string TruncatedPowerSeries::str() const {
    std::string out = "[";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i > 0) out += ", ";
        out += coeffs_[i].str();
    }
    out += "]";
    return out;
}

TruncatedPowerSeries add(const TruncatedPowerSeries& f, const TruncatedPowerSeries& g) {
    const int n = std::min(f.precision(), g.precision());
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) c[i] = f.coefficient(i) + g.coefficient(i);
    return TruncatedPowerSeries::from_coeffs(std::move(c));
}

TruncatedPowerSeries sub(const TruncatedPowerSeries& f, const TruncatedPowerSeries& g) {
    const int n = std::min(f.precision(), g.precision());
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) c[i] = f.coefficient(i) - g.coefficient(i);
    return TruncatedPowerSeries::from_coeffs(std::move(c));
}

TruncatedPowerSeries neg(const TruncatedPowerSeries& f) {
    std::vector<Rational> c(f.coefficients().size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = -f.coefficients()[i];
    return TruncatedPowerSeries::from_coeffs(std::move(c));
}

TruncatedPowerSeries scale(const Rational& k, const TruncatedPowerSeries& f) {
    std::vector<Rational> c(f.coefficients().size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = k * f.coefficients()[i];
    return TruncatedPowerSeries::from_coeffs(std::move(c));
}

TruncatedPowerSeries mul(const TruncatedPowerSeries& f, const TruncatedPowerSeries& g) {
    const int n = std::min(f.precision(), g.precision());
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        if (f.coefficient(i).is_zero()) continue;
        for (int j = 0; i + j <= n; ++j) c[i + j] += f.coefficient(i) * g.coefficient(j);
    }
    return TruncatedPowerSeries::from_coeffs(std::move(c));
}

TruncatedPowerSeries reciprocal(const TruncatedPowerSeries& f) {
    if (f.coefficient(0).is_zero())
        throw NotInvertibleError("reciprocal of a series with zero constant term");
    const int n = f.precision();
    const Rational inv_a0 = Rational(1) / f.coefficient(0);
    std::vector<Rational> b(static_cast<std::size_t>(n) + 1);
    // b0 = 1/a0, b_n = -(1/a0) * sum_{i=1..n} a_i b_{n-i}
    b[0] = inv_a0;
    for (int m = 1; m <= n; ++m) {
        Rational acc;
        for (int i = 1; i <= m; ++i) acc += f.coefficient(i) * b[m - i];
        b[m] = -(inv_a0 * acc);
    }
    return TruncatedPowerSeries::from_coeffs(std::move(b));
}

TruncatedPowerSeries compose(const TruncatedPowerSeries& f, const TruncatedPowerSeries& g) {
    if (!g.coefficient(0).is_zero())
        throw NotComposableError("compose needs an inner series with zero constant term");
    const int n = std::min(f.precision(), g.precision());
    const TruncatedPowerSeries inner = g.precision() == n ? g : truncated(g, n);
    // Horner over the coefficients of f; terms of f beyond degree n cannot
    // reach x^n since ord(inner) >= 1.
    auto acc = TruncatedPowerSeries::constant(f.coefficient(n), n);
    for (int i = n - 1; i >= 0; --i)
        acc = add(mul(acc, inner), TruncatedPowerSeries::constant(f.coefficient(i), n));
    return acc;
}

TruncatedPowerSeries derivative(const TruncatedPowerSeries& f) {
    if (f.precision() == 0)
        throw PrecisionExceededError("derivative of a precision-0 series has no known coefficients");
    std::vector<Rational> c(static_cast<std::size_t>(f.precision()));
    for (int i = 1; i <= f.precision(); ++i) c[i - 1] = Rational(i) * f.coefficient(i);
    return TruncatedPowerSeries::from_coeffs(std::move(c));
}

TruncatedPowerSeries integrate(const TruncatedPowerSeries& f) {
    std::vector<Rational> c(static_cast<std::size_t>(f.precision()) + 2);
    for (int i = 0; i <= f.precision(); ++i) c[i + 1] = f.coefficient(i) / Rational(i + 1);
    return TruncatedPowerSeries::from_coeffs(std::move(c));
}

TruncatedPowerSeries pow(const TruncatedPowerSeries& f, int k) {
    if (k < 0) throw MalformedInputError("pow needs a nonnegative exponent");
    auto result = TruncatedPowerSeries::constant(Rational(1), f.precision());
    auto base = f;
    while (k > 0) {
        if (k & 1) result = mul(result, base);
        k >>= 1;
        if (k > 0) base = mul(base, base);
    }
    return result;
}

bool is_regular(const TruncatedPowerSeries& f) {
    if (f.precision() < 1)
        throw PrecisionExceededError("regularity needs the linear coefficient; precision is 0");
    return f.coefficient(0).is_zero() && !f.coefficient(1).is_zero();
}

TruncatedPowerSeries truncated(const TruncatedPowerSeries& f, int precision) {
    if (precision < 0) throw MalformedInputError("negative precision");
    if (precision > f.precision())
        throw PrecisionExceededError("cannot truncate precision " + std::to_string(f.precision()) +
                                     " up to " + std::to_string(precision));
    std::vector<Rational> c(f.coefficients().begin(),
                            f.coefficients().begin() + precision + 1);
    return TruncatedPowerSeries::from_coeffs(std::move(c));
}

TruncatedPowerSeries shift_down(const TruncatedPowerSeries& f, int k) {
    if (k < 0) throw MalformedInputError("negative shift");
    if (k > f.precision())
        throw PrecisionExceededError("shift by " + std::to_string(k) + " exceeds precision " +
                                     std::to_string(f.precision()));
    for (int i = 0; i < k; ++i)
        if (!f.coefficient(i).is_zero())
            throw PreconditionError("shift_down needs the low " + std::to_string(k) +
                                    " coefficients to vanish");
    std::vector<Rational> c(f.coefficients().begin() + k, f.coefficients().end());
    return TruncatedPowerSeries::from_coeffs(std::move(c));
}

std::ostream& operator<<(std::ostream& os, const TruncatedPowerSeries& f) { return os << f.str(); }

}  // namespace fps
