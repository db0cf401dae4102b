#pragma once

#include <complex>
#include <vector>

namespace mlspectral {

enum class GridKind { Uniform, Graded };

// Time grid on [0, T]; nodes strictly increasing, nodes[0] = 0.
struct TimeGrid {
    std::vector<double> nodes;
    GridKind kind = GridKind::Uniform;
    double grading = 1.0;

    static TimeGrid uniform(double t_end, std::size_t n_nodes);
    // t_j = T (j/N)^r, r >= 1; clusters nodes near the t -> 0 singularity.
    static TimeGrid graded(double t_end, std::size_t n_nodes, double exponent);

    std::size_t size() const { return nodes.size(); }
    void validate() const;
};

struct TimeSeries {
    TimeGrid grid;
    std::vector<std::complex<double>> values;

    void validate() const;
};

// Riemann-Liouville fractional integral of order beta > 0, discretized by
// exact integration of the piecewise-linear interpolant against the kernel
// (t-s)^{beta-1}/Gamma(beta) (product trapezoid).
TimeSeries rl_integral(double beta, const TimeSeries& f);

// Caputo derivative of order alpha in (0,1), classic L1 scheme.
TimeSeries caputo_l1(double alpha, const TimeSeries& f);

// Caputo derivative of order alpha in (1,2): subtract f(0) + t f'(0), apply
// the RL integral of order 2-alpha exactly on the piecewise-linear
// interpolant, then second finite differences (interior nodes; endpoints 0).
TimeSeries caputo_l1_order2(double alpha, const TimeSeries& f, std::complex<double> f_prime_0);

// Max interior-node residual |(C d_t^alpha u)(t) + mu u(t)| for one spectral
// mode. Nodes with t < burn_in_fraction * T are excluded: the one-sided
// scheme carries an O(1) truncation spike in the initial layer and the
// residual is a convergence measure away from it. For alpha = 1 the residual
// is measured against the exact exponential mode.
double residual_mode(double alpha, double mu, const TimeSeries& u_hat,
                     std::complex<double> u_prime_0 = {0.0, 0.0},
                     double burn_in_fraction = 0.05);

}  // namespace mlspectral
