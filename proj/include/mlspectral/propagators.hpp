#pragma once

#include <string>
#include <vector>

#include "mlspectral/harmonics.hpp"
#include "mlspectral/mittag_leffler.hpp"

namespace mlspectral {

// d_t^alpha u + L u = 0, u(0) = u0, 0 < alpha <= 1.
struct HeatProblem {
    GroupSpec spec;
    double alpha = 0.5;
    SpectralField u0;

    void validate() const;
};

// d_t^alpha u + L u = 0, u(0) = u0, u_t(0) = u1, 1 < alpha < 2 nominally;
// alpha = 1 and alpha = 2 evaluate but are flagged by problem_warnings.
struct WaveProblem {
    GroupSpec spec;
    double alpha = 1.5;
    SpectralField u0;
    SpectralField u1;

    void validate() const;
};

// d_t^{a0} u + sum_k gamma_k d_t^{a_k} u + L u = 0 with
// 0 < a_m < ... < a_1 < a_0 <= 1. alphas = (a_0, ..., a_m); gammas = (g_1...g_m).
// The Sobolev estimates hold on (0, t_max]; evaluation beyond t_max is allowed
// and flagged.
struct MultiTermProblem {
    GroupSpec spec;
    std::vector<double> alphas;
    std::vector<double> gammas;
    SpectralField u0;
    double t_max = 10.0;

    void validate() const;
};

// Mode-diagonal propagator actions. Entries of each dual-point matrix are
// scaled by the factor of their row eigenvalue.
SpectralField heat_evolve(const HeatProblem& p, double t, const MLOptions& opts = {});
SpectralField wave_evolve(const WaveProblem& p, double t, const MLOptions& opts = {});
// Time derivative of the wave solution; at t = 0 returns u1 (the limit).
SpectralField wave_velocity(const WaveProblem& p, double t, const MLOptions& opts = {});
SpectralField multiterm_evolve(const MultiTermProblem& p, double t, const MLOptions& opts = {});

std::vector<std::string> problem_warnings(const WaveProblem& p);
std::vector<std::string> problem_warnings(const MultiTermProblem& p, double t);

}  // namespace mlspectral
