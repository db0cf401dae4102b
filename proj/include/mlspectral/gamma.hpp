#pragma once

namespace mlspectral {

// sin(pi*x) with argument reduction done in exact integer arithmetic,
// accurate near integer x where std::sin(M_PI*x) loses digits.
double sin_pi(double x);

// Gamma(x) for real non-pole x via a 13-term Lanczos approximation,
// reflection formula for x < 0.5. Relative error below 1e-14 on (0, 171).
// Poles (x a non-positive integer) raise InvalidParameter.
double gamma_fn(double x);

// log|Gamma(x)| for x > 0.
double log_gamma(double x);

// 1/Gamma(x) for any real x; exactly 0 at non-positive integer x.
// This is the form needed by asymptotic series whose terms hit Gamma poles.
double reciprocal_gamma(double x);

}  // namespace mlspectral
