#pragma once

#include "fps/series.hpp"

namespace fps {

// Exact rational Taylor series at 0, each to precision exactly n.

TruncatedPowerSeries series_sin(int n);     // (-1)^k / (2k+1)!  at x^{2k+1}
TruncatedPowerSeries series_cos(int n);     // (-1)^k / (2k)!    at x^{2k}
TruncatedPowerSeries series_exp(int n);     // 1 / n!
TruncatedPowerSeries series_log1p(int n);   // (-1)^{n-1} / n, log(1+x)
TruncatedPowerSeries series_arctan(int n);  // (-1)^k / (2k+1)   at x^{2k+1}
/// binomial(2k, k) / (4^k (2k+1)) at x^{2k+1}
TruncatedPowerSeries series_arcsin(int n);
/// sin / cos; no closed form is used, so the ODE test tan' = 1 + tan^2
/// stays an independent check.
TruncatedPowerSeries series_tan(int n);

}  // namespace fps
