#pragma once

#include "fps/series.hpp"

#include <cstdint>

namespace fps {

/// Order (smallest n with [x^n]f != 0) and the leading coefficient there.
struct OrdLead {
    int order;
    Rational leading;

    friend bool operator==(const OrdLead&, const OrdLead&) = default;
};

/// Throws ZeroAtPrecisionError when every known coefficient vanishes: the
/// order is undefined at this truncation, not infinite.
OrdLead ord_lead(const TruncatedPowerSeries& f);

/// Both sides of the order/leading-coefficient identity for a pair of
/// distinct unit-slope regular series f, g: the direct side measures f - g,
/// the inverse side measures g^{-1} - f^{-1} (inverses compositional,
/// computed independently from scratch via lagrange_inverse).
struct Theorem2Report {
    int k_direct;
    Rational m_direct;
    int k_inverse;
    Rational m_inverse;
    bool holds;  // k_direct == k_inverse && m_direct == m_inverse
};

Theorem2Report check_theorem2(const TruncatedPowerSeries& f, const TruncatedPowerSeries& g);

/// Deterministic pseudo-random unit-slope regular series for property tests:
/// [x^0] = 0, [x^1] = 1, and for k = 2..precision the coefficient is
/// num/den with num = next() mod (2*coeff_bound + 1) - coeff_bound and
/// den = next() mod coeff_bound + 1, drawn in order from std::mt19937_64
/// seeded with `seed`.
TruncatedPowerSeries random_regular(std::uint64_t seed, int precision, int coeff_bound);

}  // namespace fps
