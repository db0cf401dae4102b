#pragma once

#include <cstdint>
#include <vector>

#include "mlspectral/harmonics.hpp"
#include "mlspectral/mittag_leffler.hpp"
#include "mlspectral/propagators.hpp"

namespace mlspectral {

struct BoundRow {
    double t = 0.0;
    double lhs = 0.0;
    double rhs = 0.0;
    double ratio = 0.0;
};

// Ratio sweep against a theoretical bound with the constant fitted as the max
// observed ratio. "Bounded" means the ratio does not grow toward either end
// of the sweep (log-log end slopes within 0.05, measured outward). A rising
// trend toward an endpoint is accepted only when probing two further decades
// shows the per-decade increments contracting, i.e. saturation toward a
// finite plateau rather than a power-law violation. Decay toward an endpoint
// never fails.
struct BoundReport {
    std::vector<BoundRow> rows;
    double max_ratio = 0.0;
    double early_slope = 0.0;
    double late_slope = 0.0;
    bool passed = false;
};

struct DecayStudyConfig {
    GroupSpec spec;
    double alpha = 0.5;
    double p = 4.0 / 3.0;
    double q = 4.0;
    std::vector<double> t_samples;
    std::uint64_t seed = 1;
    int oversample = 2;  // grid refinement for the L^q quadrature of |u|^q

    void validate() const;
};

struct DecayStudyResult {
    double fitted_slope = 0.0;
    double predicted_slope = 0.0;
    BoundReport report;
    bool passed = false;  // fitted <= predicted + 0.05
};

struct LorentzSup {
    double value = 0.0;
    double argmax_s = 0.0;
};

// sup_s tau(E_(0,s))^{1/r} E_alpha(-t^alpha s) on a log grid of `points`
// candidates over [s_lo, s_hi], augmented with the closed-form stationary
// point of the power-law surrogate. Throws TruncationInsufficient if the
// maximizer lands on the upper grid edge.
LorentzSup lorentz_sup(const GroupSpec& spec, double alpha, double t, double r,
                       double s_lo_scale = 1e-4, double s_hi_scale = 1e6, int points = 500,
                       const MLOptions& opts = {});

// Same supremum for the pure power surrogate tau(s) = s^lambda; scales exactly
// as t^{-alpha lambda / r}.
double lorentz_sup_power(double lambda, double alpha, double t, double r,
                         const MLOptions& opts = {});

// Stationary point lambda Gamma(1+alpha) / (r (1 - lambda/r)) * t^{-alpha};
// requires lambda < r.
double s_star(double alpha, double lambda, double r, double t);

// Seeded zero-mean data, evolve, fit the log-log slope of ||u(t)||_q over the
// largest decade of the sweep; passes when the fitted slope is at most the
// predicted -alpha lambda (1/p - 1/q) plus 0.05 (the theorem is an upper
// bound, so faster decay never fails).
DecayStudyResult heat_decay_study(const DecayStudyConfig& cfg, const MLOptions& opts = {});

// ||u(t)||_{H^{beta+2}} against the six right-hand sides of the wave theorem.
BoundReport wave_sobolev_check(const WaveProblem& p, double beta, int case_id,
                               const std::vector<double>& t_samples, const MLOptions& opts = {});

// ||du/dt(t)||_{H^beta} against branch 1: t^{-1}||u0|| + ||u1||, or
// branch 2: ||u0||_{H^{beta+2/alpha}} + ||u1||.
BoundReport wave_velocity_check(const WaveProblem& p, double beta, int branch,
                                const std::vector<double>& t_samples, const MLOptions& opts = {});

// ||u(t)||_{H^{beta+2}} against (sum_k gamma_k t^{a0-ak}) x
// case 1: (1+t^{-a0}) ||u0||_{H^beta}; case 2: ||u0||_{H^{beta+2}}. Samples
// must lie in (0, t_max].
BoundReport multiterm_bound_check(const MultiTermProblem& p, double beta, int case_id,
                                  const std::vector<double>& t_samples, const MLOptions& opts = {});

// log-log least-squares slope; throws WindowTooShort on fewer than two points.
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

// Log-spaced samples, inclusive endpoints.
std::vector<double> log_spaced(double lo, double hi, int n);

}  // namespace mlspectral
