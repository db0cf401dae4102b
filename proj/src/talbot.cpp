#include "mlspectral/talbot.hpp"

#include <cmath>

#include "mlspectral/errors.hpp"

namespace mlspectral {

namespace {

// Contour sigma(theta) = -0.6122 + 0.2645 i theta + 0.5017 theta cot(0.6407 theta),
// theta in (-pi, pi); the widely used cotangent modification of Talbot's contour.
std::complex<double> contour(double theta) {
    double a = 0.6407 * theta;
    double re = -0.6122 + 0.5017 * theta * (std::cos(a) / std::sin(a));
    return {re, 0.2645 * theta};
}

std::complex<double> contour_deriv(double theta) {
    double a = 0.6407 * theta;
    double s = std::sin(a);
    double re = 0.5017 * (std::cos(a) / s - 0.6407 * theta / (s * s));
    return {re, 0.2645};
}

}  // namespace

double talbot_invert(const std::function<std::complex<double>(std::complex<double>)>& transform,
                     double t, int nodes) {
    if (t <= 0.0) throw InvalidParameter("talbot_invert: requires t > 0");
    if (nodes < 8) throw InvalidParameter("talbot_invert: requires >= 8 nodes");
    const int half = nodes / 2;
    const double scale = static_cast<double>(nodes) / t;
    double acc = 0.0;
    for (int j = 0; j < half; ++j) {
        double theta = (j + 0.5) * M_PI / half;
        std::complex<double> s = scale * contour(theta);
        std::complex<double> term = std::exp(s * t) * transform(s) * contour_deriv(theta);
        acc += term.imag();
    }
    return 2.0 * acc / t;
}

TalbotResult talbot_invert_est(const std::function<std::complex<double>(std::complex<double>)>& transform,
                               double t, int nodes) {
    double v1 = talbot_invert(transform, t, nodes);
    double v2 = talbot_invert(transform, t, nodes - nodes / 4);
    double est = std::abs(v1 - v2) + 4e-15 * (1.0 + std::abs(v1));
    return {v1, est};
}

}  // namespace mlspectral
