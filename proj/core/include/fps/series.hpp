#pragma once

#include "fps/rational.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace fps {

/// A formal power series over the rationals, known exactly through degree
/// `precision`: coefficient n holds [x^n]f for 0 <= n <= precision, and the
/// O(x^{precision+1}) tail is unknown. Reading past the precision is an
/// error, never a silent zero. Values are immutable; every operation returns
/// a new series, so values may be shared freely between threads.
///
/// Binary operations carry precision as the minimum of the operand
/// precisions: the result is exactly as far as both inputs are known.
class TruncatedPowerSeries {
  public:
    /// Builds a series from coefficients, lowest degree first.
    /// The precision is length - 1; an empty list is malformed input.
    static TruncatedPowerSeries from_coeffs(std::vector<Rational> coeffs);
    static TruncatedPowerSeries zero(int precision);
    static TruncatedPowerSeries constant(const Rational& c, int precision);
    /// The identity series x; needs precision >= 1.
    static TruncatedPowerSeries identity(int precision);

    int precision() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    /// [x^n]f. Throws PrecisionExceededError for n > precision.
    const Rational& coefficient(int n) const;
    const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

    /// True when every known coefficient vanishes.
    bool is_zero() const;

    /// "[c0, c1, ...]" with canonical rational coefficients.
    std::string str() const;

    friend bool operator==(const TruncatedPowerSeries&, const TruncatedPowerSeries&) = default;

  private:
    explicit TruncatedPowerSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {}

    std::vector<Rational> coeffs_;
};

TruncatedPowerSeries add(const TruncatedPowerSeries& f, const TruncatedPowerSeries& g);
TruncatedPowerSeries sub(const TruncatedPowerSeries& f, const TruncatedPowerSeries& g);
TruncatedPowerSeries neg(const TruncatedPowerSeries& f);
TruncatedPowerSeries scale(const Rational& c, const TruncatedPowerSeries& f);

/// Cauchy product, truncated at the minimum of the operand precisions.
TruncatedPowerSeries mul(const TruncatedPowerSeries& f, const TruncatedPowerSeries& g);

/// Multiplicative inverse: f * reciprocal(f) = 1 modulo x^{precision+1}.
/// Requires a nonzero constant term.
TruncatedPowerSeries reciprocal(const TruncatedPowerSeries& f);

/// f(g(x)) modulo x^{N+1}, N = min of the precisions. Requires [x^0]g = 0.
TruncatedPowerSeries compose(const TruncatedPowerSeries& f, const TruncatedPowerSeries& g);

/// Formal derivative; the precision drops by one.
TruncatedPowerSeries derivative(const TruncatedPowerSeries& f);
/// Formal antiderivative with zero constant term; the precision rises by one.
TruncatedPowerSeries integrate(const TruncatedPowerSeries& f);

/// f^k by repeated squaring, truncated at precision(f). k >= 0.
TruncatedPowerSeries pow(const TruncatedPowerSeries& f, int k);

/// Regular means [x^0]f = 0 and [x^1]f != 0; exactly the compositionally
/// invertible series. Needs precision >= 1.
bool is_regular(const TruncatedPowerSeries& f);

/// Restriction to a lower precision (discards known coefficients).
TruncatedPowerSeries truncated(const TruncatedPowerSeries& f, int precision);

/// Division by x^k. The low k coefficients must vanish; the precision drops by k.
TruncatedPowerSeries shift_down(const TruncatedPowerSeries& f, int k);

inline TruncatedPowerSeries operator+(const TruncatedPowerSeries& f, const TruncatedPowerSeries& g) {
    return add(f, g);
}
inline TruncatedPowerSeries operator-(const TruncatedPowerSeries& f, const TruncatedPowerSeries& g) {
    return sub(f, g);
}
inline TruncatedPowerSeries operator-(const TruncatedPowerSeries& f) { return neg(f); }
inline TruncatedPowerSeries operator*(const TruncatedPowerSeries& f, const TruncatedPowerSeries& g) {
    return mul(f, g);
}
inline TruncatedPowerSeries operator*(const Rational& c, const TruncatedPowerSeries& f) {
    return scale(c, f);
}

std::ostream& operator<<(std::ostream& os, const TruncatedPowerSeries& f);

}  // namespace fps
