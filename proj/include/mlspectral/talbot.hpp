#pragma once

#include <complex>
#include <functional>

namespace mlspectral {

// Numerical inverse Laplace transform on a fixed cotangent (Talbot-type)
// contour, midpoint rule. `nodes` counts quadrature points on the full
// contour; by conjugate symmetry only nodes/2 transform evaluations are made.
// Valid when F is analytic to the right of the contour apart from the
// negative real axis; returns f(t) for t > 0.
double talbot_invert(const std::function<std::complex<double>(std::complex<double>)>& transform,
                     double t, int nodes = 32);

// Same, with a crude accuracy estimate from comparing two node counts.
struct TalbotResult {
    double value;
    double est_abs_error;
};
TalbotResult talbot_invert_est(const std::function<std::complex<double>(std::complex<double>)>& transform,
                               double t, int nodes = 32);

}  // namespace mlspectral
