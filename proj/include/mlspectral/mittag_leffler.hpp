#pragma once

#include <vector>

namespace mlspectral {

// Parameters of the two-parameter function E_{alpha,rho}.
struct MLIndex {
    double alpha = 1.0;
    double rho = 1.0;
};

// Parameters of the multivariate function E_{(alpha_1..alpha_m),lambda}.
struct MultiMLIndex {
    std::vector<double> alphas;
    double lambda = 1.0;
};

enum class EvalRegime {
    TaylorSeries,
    AsymptoticNegative,
    ContourIntegral,
};

struct EvalReport {
    double value = 0.0;
    double est_abs_error = 0.0;
    EvalRegime regime = EvalRegime::TaylorSeries;
};

struct MLOptions {
    double tolerance = 1e-12;   // absolute accuracy target
    int talbot_nodes = 32;      // contour nodes for the Laplace-inversion regime
    int series_cap = 4000;      // Taylor term cap
    int degree_cap = 10000;     // multivariate total-degree cap
    double taylor_radius = 1.0; // |z| at or below which plain Taylor is used
    double asym_switch = 50.0;  // x >= asym_switch^alpha switches to the asymptotic
                                // series for alpha <= 1 (32^alpha for alpha > 1,
                                // where the conjugate-pole residue pair is added)
};

// E_alpha(z) = E_{alpha,1}(z) for real z. For 0 < alpha <= 1 and z <= 0 the
// returned value lies in (0, 1], matching the range of the true function.
EvalReport ml1(const MLIndex& index, double z, const MLOptions& opts = {});

// E_{alpha,rho}(z) for real z.
EvalReport ml2(const MLIndex& index, double z, const MLOptions& opts = {});

// Multivariate series summed by total degree, truncated when a geometric
// tail bound falls below tol.
EvalReport ml_multi(const MultiMLIndex& index, const std::vector<double>& ws,
                    double tol, const MLOptions& opts = {});

// Several lambda values sharing the same alphas and arguments (the per-mode
// multi-term propagator needs m+1 of them); one pass over the series.
std::vector<EvalReport> ml_multi_batch(const std::vector<double>& alphas,
                                       const std::vector<double>& lambdas,
                                       const std::vector<double>& ws, double tol,
                                       const MLOptions& opts = {});

// 1/(1 + x/Gamma(1+alpha)), the global upper bound for E_alpha(-x) on
// 0 < alpha <= 1, x >= 0.
double ml_upper_bound(double alpha, double x);

}  // namespace mlspectral
