#pragma once

namespace proxcatch {

// Standard normal distribution function, good to a few ulp.
double norm_cdf(double x);

// Inverse of norm_cdf on (0, 1): rational initial guess (AS 241 style)
// polished with one Halley step on the CDF. Returns +-inf at the endpoints.
double norm_quantile(double p);

}  // namespace proxcatch
