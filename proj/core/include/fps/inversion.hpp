#pragma once

#include "fps/series.hpp"

namespace fps {

/// Compositional inverse of a regular series by the Lagrange inversion
/// formula: [x^n]g = (1/n) [x^{n-1}] (x/f(x))^n, with x/f(x) realized as the
/// reciprocal of f shifted down one degree. Result precision equals
/// precision(f); [x^0]g = 0.
TruncatedPowerSeries lagrange_inverse(const TruncatedPowerSeries& f);

/// Same contract as lagrange_inverse, computed by precision-doubling Newton
/// iteration g <- g - (f(g) - x) / f'(g) seeded with g = x/[x^1]f. Serves as
/// an independent cross-check; the two agree coefficient for coefficient.
TruncatedPowerSeries newton_inverse(const TruncatedPowerSeries& f);

/// True iff f(g(x)) = g(f(x)) = x modulo x^{N+1}. Both series must be
/// regular and of equal precision N.
bool verify_inverse(const TruncatedPowerSeries& f, const TruncatedPowerSeries& g);

}  // namespace fps
