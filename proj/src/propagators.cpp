#include "mlspectral/propagators.hpp"

#include <algorithm>
#include <cmath>

#include "mlspectral/errors.hpp"
#include "mlspectral/parallel.hpp"

namespace mlspectral {

namespace {

// Distinct eigenvalues across the dual, sorted; eigenvalues are exact small
// products so equality comparison is safe.
std::vector<double> distinct_eigenvalues(const std::vector<DualPoint>& dual) {
    std::vector<double> mus;
    for (const auto& p : dual) {
        mus.insert(mus.end(), p.eigenvalues.begin(), p.eigenvalues.end());
    }
    std::sort(mus.begin(), mus.end());
    mus.erase(std::unique(mus.begin(), mus.end()), mus.end());
    return mus;
}

std::size_t mu_slot(const std::vector<double>& mus, double mu) {
    return static_cast<std::size_t>(std::lower_bound(mus.begin(), mus.end(), mu) - mus.begin());
}

// Scale every entry by a per-row factor table (one factor per distinct
// eigenvalue). The factor computation parallelizes over distinct eigenvalues
// with slot writes, so results do not depend on scheduling.
template <typename FactorFn>
SpectralField apply_diagonal(const GroupSpec& spec, const SpectralField& u0,
                             const FactorFn& factor_of_mu) {
    auto dual = enumerate_dual(spec);
    auto mus = distinct_eigenvalues(dual);
    std::vector<cplx> factors(mus.size());
    parallel_for(mus.size(), [&](std::size_t i) { factors[i] = factor_of_mu(mus[i]); });
    SpectralField out = u0;
    for (std::size_t p = 0; p < dual.size(); ++p) {
        const int dim = dual[p].dim;
        for (int i = 0; i < dim; ++i) {
            const cplx f = factors[mu_slot(mus, dual[p].eigenvalues[i])];
            for (int j = 0; j < dim; ++j) {
                out.coeffs[p][static_cast<std::size_t>(i) * dim + j] *= f;
            }
        }
    }
    return out;
}

// Same but with two initial fields and per-row factor pairs (wave).
template <typename FactorFn>
SpectralField apply_diagonal_pair(const GroupSpec& spec, const SpectralField& u0,
                                  const SpectralField& u1, const FactorFn& factors_of_mu) {
    auto dual = enumerate_dual(spec);
    auto mus = distinct_eigenvalues(dual);
    std::vector<std::pair<cplx, cplx>> factors(mus.size());
    parallel_for(mus.size(), [&](std::size_t i) { factors[i] = factors_of_mu(mus[i]); });
    SpectralField out = u0;
    for (std::size_t p = 0; p < dual.size(); ++p) {
        const int dim = dual[p].dim;
        for (int i = 0; i < dim; ++i) {
            const auto f = factors[mu_slot(mus, dual[p].eigenvalues[i])];
            for (int j = 0; j < dim; ++j) {
                const std::size_t e = static_cast<std::size_t>(i) * dim + j;
                out.coeffs[p][e] = f.first * u0.coeffs[p][e] + f.second * u1.coeffs[p][e];
            }
        }
    }
    return out;
}

}  // namespace

void HeatProblem::validate() const {
    spec.validate();
    u0.validate();
    if (!(u0.spec == spec)) throw InvalidParameter("HeatProblem: u0 spec mismatch");
    if (!(alpha > 0.0 && alpha <= 1.0)) throw InvalidParameter("HeatProblem: requires alpha in (0,1]");
}

void WaveProblem::validate() const {
    spec.validate();
    u0.validate();
    u1.validate();
    if (!(u0.spec == spec) || !(u1.spec == spec)) {
        throw InvalidParameter("WaveProblem: field spec mismatch");
    }
    // nominal range (1,2); the closed boundary values evaluate for testing and
    // are reported by problem_warnings
    if (!(alpha >= 1.0 && alpha <= 2.0)) {
        throw InvalidParameter("WaveProblem: requires alpha in [1,2]");
    }
}

void MultiTermProblem::validate() const {
    spec.validate();
    u0.validate();
    if (!(u0.spec == spec)) throw InvalidParameter("MultiTermProblem: u0 spec mismatch");
    if (alphas.empty()) throw InvalidParameter("MultiTermProblem: requires alpha_0");
    if (!(alphas[0] > 0.0 && alphas[0] <= 1.0)) {
        throw InvalidParameter("MultiTermProblem: requires alpha_0 in (0,1]");
    }
    for (std::size_t k = 1; k < alphas.size(); ++k) {
        if (!(alphas[k] > 0.0 && alphas[k] < alphas[k - 1])) {
            throw InvalidParameter("MultiTermProblem: alphas must strictly decrease and stay positive");
        }
    }
    if (gammas.size() + 1 != alphas.size()) {
        throw InvalidParameter("MultiTermProblem: needs one gamma per extra term");
    }
    for (double g : gammas) {
        if (!(g > 0.0)) throw InvalidParameter("MultiTermProblem: gammas must be positive");
    }
    if (!(t_max > 0.0)) throw InvalidParameter("MultiTermProblem: requires t_max > 0");
}

SpectralField heat_evolve(const HeatProblem& p, double t, const MLOptions& opts) {
    p.validate();
    if (!(t >= 0.0)) throw InvalidParameter("heat_evolve: requires t >= 0");
    if (t == 0.0) return p.u0;
    const double ta = std::pow(t, p.alpha);
    return apply_diagonal(p.spec, p.u0, [&](double mu) -> cplx {
        return ml1({p.alpha, 1.0}, -mu * ta, opts).value;
    });
}

SpectralField wave_evolve(const WaveProblem& p, double t, const MLOptions& opts) {
    p.validate();
    if (!(t >= 0.0)) throw InvalidParameter("wave_evolve: requires t >= 0");
    if (t == 0.0) return p.u0;
    const double ta = std::pow(t, p.alpha);
    return apply_diagonal_pair(p.spec, p.u0, p.u1, [&](double mu) -> std::pair<cplx, cplx> {
        const double z = -mu * ta;
        return {ml2({p.alpha, 1.0}, z, opts).value, t * ml2({p.alpha, 2.0}, z, opts).value};
    });
}

SpectralField wave_velocity(const WaveProblem& p, double t, const MLOptions& opts) {
    p.validate();
    if (!(t >= 0.0)) throw InvalidParameter("wave_velocity: requires t >= 0");
    if (t == 0.0) return p.u1;
    const double ta = std::pow(t, p.alpha);
    const double ta1 = std::pow(t, p.alpha - 1.0);
    return apply_diagonal_pair(p.spec, p.u0, p.u1, [&](double mu) -> std::pair<cplx, cplx> {
        const double z = -mu * ta;
        return {-mu * ta1 * ml2({p.alpha, p.alpha}, z, opts).value,
                ml2({p.alpha, 1.0}, z, opts).value};
    });
}

SpectralField multiterm_evolve(const MultiTermProblem& p, double t, const MLOptions& opts) {
    p.validate();
    if (!(t > 0.0)) throw InvalidParameter("multiterm_evolve: requires t > 0");
    const std::size_t m = p.gammas.size();
    const double a0 = p.alphas[0];

    std::vector<double> ml_alphas;    // (a0-a1, ..., a0-am, a0)
    std::vector<double> ws(m + 1);    // (-g1 t^{a0-a1}, ..., -gm t^{a0-am}, -mu t^{a0})
    std::vector<double> lambdas(m + 1);
    std::vector<double> gamma_full(m + 1);
    std::vector<double> tpow(m + 1);
    gamma_full[0] = 1.0;
    tpow[0] = 1.0;  // t^{a0 - a0}
    for (std::size_t k = 1; k <= m; ++k) {
        const double diff = a0 - p.alphas[k];
        ml_alphas.push_back(diff);
        gamma_full[k] = p.gammas[k - 1];
        tpow[k] = std::pow(t, diff);
        ws[k - 1] = -p.gammas[k - 1] * tpow[k];
    }
    ml_alphas.push_back(a0);
    for (std::size_t k = 0; k <= m; ++k) lambdas[k] = a0 - p.alphas[k] + 1.0;
    const double ta0 = std::pow(t, a0);

    return apply_diagonal(p.spec, p.u0, [&](double mu) -> cplx {
        std::vector<double> w = ws;
        w[m] = -mu * ta0;
        auto reports = ml_multi_batch(ml_alphas, lambdas, w, opts.tolerance, opts);
        double acc = 0.0;
        for (std::size_t k = 0; k <= m; ++k) {
            acc += gamma_full[k] * tpow[k] * reports[k].value;
        }
        return acc;
    });
}

std::vector<std::string> problem_warnings(const WaveProblem& p) {
    std::vector<std::string> w;
    if (p.alpha == 1.0) w.push_back("outside_paper_range: wave evaluation at alpha = 1");
    if (p.alpha == 2.0) w.push_back("outside_paper_range: wave evaluation at alpha = 2");
    return w;
}

std::vector<std::string> problem_warnings(const MultiTermProblem& p, double t) {
    std::vector<std::string> w;
    if (t > p.t_max) {
        w.push_back("outside_estimate_domain: multi-term evaluation beyond configured T");
    }
    return w;
}

}  // namespace mlspectral
