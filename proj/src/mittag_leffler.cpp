#include "mlspectral/mittag_leffler.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <string>

#include "mlspectral/errors.hpp"
#include "mlspectral/gamma.hpp"
#include "mlspectral/talbot.hpp"

namespace mlspectral {

namespace {

using cplx = std::complex<double>;

struct Partial {
    double value = 0.0;
    double est = std::numeric_limits<double>::infinity();
};

// RAII mpfr scalar.
struct Mp {
    mpfr_t v;
    explicit Mp(mpfr_prec_t prec) { mpfr_init2(v, prec); mpfr_set_zero(v, 1); }
    ~Mp() { mpfr_clear(v); }
    Mp(const Mp&) = delete;
    Mp& operator=(const Mp&) = delete;
};

// Plain double Taylor sum of E_{a,r}(z). Reliable for |z| <= ~1 and for any
// z > 0 (positive terms, no cancellation).
Partial taylor_double(double a, double r, double z, int cap) {
    double sum = 0.0;
    double max_mag = 0.0;
    double zk = 1.0;
    double last = 0.0;
    int small_run = 0;
    int k = 0;
    for (; k < cap; ++k) {
        double term = zk * reciprocal_gamma(a * k + r);
        sum += term;
        max_mag = std::max(max_mag, std::abs(sum));
        last = std::abs(term);
        zk *= z;
        if (!std::isfinite(zk) || !std::isfinite(sum)) {
            return {sum, std::numeric_limits<double>::infinity()};
        }
        // Past the Gamma dip the terms decrease monotonically; two consecutive
        // negligible terms end the sum.
        if (a * k + r > 2.0 && last <= 1e-18 * (1.0 + std::abs(sum))) {
            if (++small_run >= 2) break;
        } else {
            small_run = 0;
        }
    }
    double tail = 2.0 * last;
    double round = 1.5e-16 * max_mag * std::sqrt(static_cast<double>(k + 1));
    return {sum, tail + round};
}

// Taylor sum in mpfr at the given precision; covers the cancellation band of
// negative arguments for alpha > 1 where neither the plain series nor the
// fixed contour is adequate.
Partial taylor_mpfr(double a, double r, double z, mpfr_prec_t prec, int cap) {
    Mp sum(prec), zk(prec), term(prec), garg(prec), tmp(prec);
    mpfr_set_d(zk.v, 1.0, MPFR_RNDN);
    long max_exp = std::numeric_limits<long>::min();
    double last_mag = 0.0;
    int small_run = 0;
    for (int k = 0; k < cap; ++k) {
        double arg = a * k + r;
        // form alpha k + rho in extended precision: its double rounding,
        // amplified by the cancellation, would poison the sum
        mpfr_set_d(garg.v, a, MPFR_RNDN);
        mpfr_mul_ui(garg.v, garg.v, static_cast<unsigned long>(k), MPFR_RNDN);
        mpfr_add_d(garg.v, garg.v, r, MPFR_RNDN);
        mpfr_gamma(tmp.v, garg.v, MPFR_RNDN);
        mpfr_div(term.v, zk.v, tmp.v, MPFR_RNDN);
        mpfr_add(sum.v, sum.v, term.v, MPFR_RNDN);
        mpfr_mul_d(zk.v, zk.v, z, MPFR_RNDN);
        if (!mpfr_zero_p(sum.v)) max_exp = std::max(max_exp, static_cast<long>(mpfr_get_exp(sum.v)));
        if (!mpfr_zero_p(term.v)) max_exp = std::max(max_exp, static_cast<long>(mpfr_get_exp(term.v)));
        last_mag = std::abs(mpfr_get_d(term.v, MPFR_RNDN));
        if (arg > 2.0 && (mpfr_zero_p(term.v) ||
                          (!mpfr_zero_p(sum.v) &&
                           mpfr_get_exp(term.v) < mpfr_get_exp(sum.v) - static_cast<long>(prec) - 8))) {
            if (++small_run >= 2) break;
        } else {
            small_run = 0;
        }
    }
    double value = mpfr_get_d(sum.v, MPFR_RNDN);
    long res_exp = mpfr_zero_p(sum.v) ? -1074 : mpfr_get_exp(sum.v);
    long cancel_bits = std::max(0L, max_exp - res_exp);
    double round = std::ldexp(std::abs(value) + 1e-300,
                              static_cast<int>(std::min<long>(cancel_bits - prec + 10, 0)));
    if (cancel_bits - prec + 10 > 0) round = std::numeric_limits<double>::infinity();
    return {value, round + 2.0 * last_mag + 1e-17 * std::abs(value)};
}

// Asymptotic evaluation for z = -x, x large. Algebraic series in 1/x plus,
// for alpha > 1, the residue contribution of the conjugate pole pair of the
// Laplace transform at x^{1/alpha} e^{+-i pi/alpha}.
Partial asymptotic_negative(double a, double r, double x) {
    double sum = 0.0;
    double xk = 1.0;
    double prev_envelope = std::numeric_limits<double>::infinity();
    double omitted = 0.0;
    for (int k = 1; k <= 220; ++k) {
        xk /= x;
        const double arg = r - a * k;
        const double rg = reciprocal_gamma(arg);
        // |1/Gamma| oscillates through the reflection sine (period 1/alpha in
        // k), so the truncation logic follows the sine-free majorant
        // Gamma(1-arg)/pi instead of the raw term magnitudes.
        double envelope;
        if (arg >= 0.5) {
            envelope = xk * std::abs(rg);
        } else if (1.0 - arg > 170.0) {
            envelope = std::numeric_limits<double>::infinity();
        } else {
            envelope = xk * gamma_fn(1.0 - arg) / M_PI;
        }
        if (envelope >= prev_envelope) {
            omitted = envelope;  // divergence onset: stop at the smallest term
            break;
        }
        if (rg != 0.0) {
            sum += ((k % 2 == 1) ? 1.0 : -1.0) * xk * rg;
        }
        prev_envelope = envelope;
        omitted = envelope;
        if (envelope < 1e-19) break;
    }
    double X = std::pow(x, 1.0 / a);
    double value = sum;
    double est = omitted + 1e-16 * std::abs(sum);
    if (a > 1.0) {
        cplx w = std::polar(X, M_PI / a);
        cplx lw(std::log(X), M_PI / a);
        cplx res = std::exp((1.0 - r) * lw + w);
        value += (2.0 / a) * res.real();
        est += std::abs(res) * (2.0 / a) * 1e-15 * (1.0 + X);
    }
    // Remainder beyond optimal truncation is exponentially small in x^{1/alpha}.
    est += (X > 700.0) ? 0.0 : std::exp(-X);
    return {value, est};
}

// Laplace inversion regime: E_{a,r}(-x) = f(1) with
// L{t^{r-1} E_{a,r}(-x t^a)}(s) = s^{a-r} / (s^a + x), valid for r > 0.
Partial talbot_ml(double a, double r, double x, int nodes) {
    auto transform = [a, r, x](cplx s) { return std::pow(s, a - r) / (std::pow(s, a) + x); };
    TalbotResult t = talbot_invert_est(transform, 1.0, nodes);
    return {t.value, t.est_abs_error};
}

void validate_index(const MLIndex& index) {
    if (!(index.alpha > 0.0) || !std::isfinite(index.alpha)) {
        throw InvalidParameter("ml: requires alpha > 0");
    }
    if (!std::isfinite(index.rho)) {
        throw InvalidParameter("ml: requires finite rho");
    }
}

EvalReport ml_eval(double a, double r, double z, const MLOptions& opts) {
    if (!std::isfinite(z)) throw InvalidParameter("ml: requires finite argument");
    EvalReport rep;
    if (z == 0.0) {
        rep.value = (r == 1.0) ? 1.0 : reciprocal_gamma(r);
        rep.est_abs_error = (r == 1.0) ? 0.0 : 4e-16 * std::abs(rep.value);
        rep.regime = EvalRegime::TaylorSeries;
        return rep;
    }

    const bool clamp_to_unit = (r == 1.0 && a <= 1.0 && z < 0.0);
    auto finish = [&](Partial p, EvalRegime regime) {
        rep.value = p.value;
        rep.est_abs_error = p.est;
        rep.regime = regime;
        if (clamp_to_unit) {
            // E_alpha(-x) is completely monotone with range (0, 1]; keep the
            // returned double inside that range when roundoff/underflow leaves it.
            if (rep.value > 1.0) rep.value = 1.0;
            if (rep.value <= 0.0) rep.value = std::numeric_limits<double>::denorm_min();
        }
        if (!(rep.est_abs_error <= opts.tolerance)) {
            throw NonConvergence("ml: estimated error " + std::to_string(rep.est_abs_error) +
                                 " above tolerance at alpha=" + std::to_string(a) +
                                 " rho=" + std::to_string(r) + " z=" + std::to_string(z));
        }
        return rep;
    };

    if (z > 0.0 || std::abs(z) <= opts.taylor_radius) {
        Partial p = taylor_double(a, r, z, opts.series_cap);
        if (p.est <= opts.tolerance || z > 0.0) return finish(p, EvalRegime::TaylorSeries);
        // fall through for negative z when the plain series cancels too hard
    }

    const double x = -z;
    const double X = std::pow(x, 1.0 / a);
    if (a <= 1.0) {
        if (x >= std::pow(opts.asym_switch, a)) {
            return finish(asymptotic_negative(a, r, x), EvalRegime::AsymptoticNegative);
        }
        double rr = r;
        double shift_acc = 0.0;  // E_{a,r}(z) = 1/Gamma(r) + z E_{a,r+a}(z)
        double zpow = 1.0;
        while (rr <= 0.05) {
            shift_acc += zpow * reciprocal_gamma(rr);
            zpow *= z;
            rr += a;
        }
        Partial p = talbot_ml(a, rr, x, opts.talbot_nodes);
        if (p.est > opts.tolerance) p = talbot_ml(a, rr, x, opts.talbot_nodes + 16);
        p.value = shift_acc + zpow * p.value;
        p.est = std::abs(zpow) * p.est + 4e-16 * std::abs(shift_acc);
        return finish(p, EvalRegime::ContourIntegral);
    }

    const double x_switch = std::pow(std::min(opts.asym_switch, 32.0), a);
    if (x >= x_switch) {
        return finish(asymptotic_negative(a, r, x), EvalRegime::AsymptoticNegative);
    }
    // Cancellation band: series in extended precision sized from the ratio of
    // the largest term ~exp(alpha X) to the result ~exp(X cos(pi/alpha)).
    double cancel = X * (a - std::cos(M_PI / a));
    mpfr_prec_t prec = static_cast<mpfr_prec_t>(96 + 1.4427 * cancel);
    Partial p = taylor_mpfr(a, r, z, prec, opts.series_cap * 4);
    if (p.est > opts.tolerance) {
        p = taylor_mpfr(a, r, z, prec + prec / 2, opts.series_cap * 8);
    }
    return finish(p, EvalRegime::TaylorSeries);
}

}  // namespace

EvalReport ml1(const MLIndex& index, double z, const MLOptions& opts) {
    validate_index(index);
    if (index.rho != 1.0) throw InvalidParameter("ml1: requires rho = 1");
    return ml_eval(index.alpha, 1.0, z, opts);
}

EvalReport ml2(const MLIndex& index, double z, const MLOptions& opts) {
    validate_index(index);
    return ml_eval(index.alpha, index.rho, z, opts);
}

double ml_upper_bound(double alpha, double x) {
    if (!(alpha > 0.0 && alpha <= 1.0)) {
        throw InvalidParameter("ml_upper_bound: requires alpha in (0, 1]");
    }
    if (!(x >= 0.0)) throw InvalidParameter("ml_upper_bound: requires x >= 0");
    return 1.0 / (1.0 + x / gamma_fn(1.0 + alpha));
}

namespace {

// Commensuration of the alpha vector: alphas[i] ~= n[i] * h with integer n[i].
// Decimal inputs always commensurate; irrational ratios fall back to the
// composition enumeration.
struct Commensuration {
    bool ok = false;
    std::vector<long> n;
    double h = 0.0;
};

Commensuration commensurate(const std::vector<double>& alphas) {
    Commensuration c;
    for (long d = 1; d <= 4096; ++d) {
        bool all = true;
        for (double a : alphas) {
            double p = a * static_cast<double>(d);
            if (std::abs(p - std::nearbyint(p)) > 1e-9 * static_cast<double>(d)) {
                all = false;
                break;
            }
        }
        if (!all) continue;
        c.ok = true;
        c.n.reserve(alphas.size());
        double num = 0.0, den = 0.0;
        for (double a : alphas) {
            long ni = static_cast<long>(std::nearbyint(a * static_cast<double>(d)));
            c.n.push_back(ni);
            num += a * static_cast<double>(ni);
            den += static_cast<double>(ni) * static_cast<double>(ni);
        }
        c.h = num / den;  // least-squares h, slightly cleaner than 1/d
        return c;
    }
    return c;
}

// Window-maximum geometric tail bound shared by both summation paths: once
// the per-window maxima decay by a fixed factor, the tail is dominated by a
// geometric series.
class TailMonitor {
public:
    TailMonitor(std::size_t window, double target) : window_(window), target_(target) {}

    // Feed |S_M|; returns true when the tail bound has closed below target.
    bool push(double mag) {
        cur_max_ = std::max(cur_max_, mag);
        if (++count_ % window_ != 0) return false;
        maxima_.push_back(cur_max_);
        cur_max_ = 0.0;
        std::size_t w = maxima_.size();
        if (w < 4) return false;
        double q = 0.0;
        for (std::size_t j = w - 3; j < w; ++j) {
            double prev = maxima_[j - 1];
            double cur = maxima_[j];
            double ratio;
            if (!std::isfinite(prev) || !std::isfinite(cur)) {
                ratio = 2.0;
            } else if (prev == 0.0) {
                ratio = (cur == 0.0) ? 0.0 : 2.0;
            } else {
                ratio = cur / prev;
            }
            q = std::max(q, ratio);
        }
        if (q >= 0.8) return false;
        tail_bound_ = static_cast<double>(window_) * maxima_.back() * q / (1.0 - q);
        return tail_bound_ <= target_;
    }

    double tail_bound() const { return tail_bound_; }

private:
    std::size_t window_;
    double target_;
    std::size_t count_ = 0;
    double cur_max_ = 0.0;
    std::vector<double> maxima_;
    double tail_bound_ = std::numeric_limits<double>::infinity();
};

// Level-recurrence path (commensurate alphas). Grouping the multivariate
// series by the common exponent step h turns the multinomial multi-sum into
// the linear recurrence C_M = sum_i w_i C_{M - n_i} over words, leaving a
// single division by Gamma(h M + lambda) per level.
struct LevelResult {
    std::vector<double> values;
    std::vector<double> ests;
    bool converged = false;
    long cancel_bits = 0;
};

LevelResult multi_levels(const std::vector<long>& n, double h,
                         const std::vector<double>& lambdas,
                         const std::vector<double>& ws, double tol,
                         mpfr_prec_t prec, long level_cap) {
    const std::size_t m = n.size();
    const std::size_t nl = lambdas.size();
    const long nmax = *std::max_element(n.begin(), n.end());
    LevelResult out;
    out.values.assign(nl, 0.0);
    out.ests.assign(nl, 0.0);

    std::vector<Mp*> ring;
    ring.reserve(nmax + 1);
    for (long i = 0; i <= nmax; ++i) ring.push_back(new Mp(prec));
    std::vector<Mp*> sums;
    for (std::size_t j = 0; j < nl; ++j) sums.push_back(new Mp(prec));
    Mp cm(prec), tmp(prec), garg(prec), gval(prec), term(prec);

    long max_exp = std::numeric_limits<long>::min();
    TailMonitor monitor(static_cast<std::size_t>(nmax), tol * 0.25);
    bool closed = false;

    for (long M = 0; M <= level_cap && !closed; ++M) {
        if (M == 0) {
            mpfr_set_d(cm.v, 1.0, MPFR_RNDN);
        } else {
            mpfr_set_zero(cm.v, 1);
            for (std::size_t i = 0; i < m; ++i) {
                long back = M - n[i];
                if (back < 0) continue;
                mpfr_mul_d(tmp.v, ring[back % (nmax + 1)]->v, ws[i], MPFR_RNDN);
                mpfr_add(cm.v, cm.v, tmp.v, MPFR_RNDN);
            }
        }
        mpfr_set(ring[M % (nmax + 1)]->v, cm.v, MPFR_RNDN);

        if (mpfr_zero_p(cm.v)) {
            // weight M not reachable by any word (e.g. m = 1 with step n > 1)
            closed = monitor.push(0.0);
            continue;
        }

        double level_mag = 0.0;
        for (std::size_t j = 0; j < nl; ++j) {
            mpfr_set_d(garg.v, h, MPFR_RNDN);
            mpfr_mul_ui(garg.v, garg.v, static_cast<unsigned long>(M), MPFR_RNDN);
            mpfr_add_d(garg.v, garg.v, lambdas[j], MPFR_RNDN);
            mpfr_gamma(gval.v, garg.v, MPFR_RNDN);
            mpfr_div(term.v, cm.v, gval.v, MPFR_RNDN);
            mpfr_add(sums[j]->v, sums[j]->v, term.v, MPFR_RNDN);
            if (!mpfr_zero_p(term.v)) {
                long e = mpfr_get_exp(term.v);
                max_exp = std::max(max_exp, e);
                level_mag = std::max(level_mag, (e > 1020) ? std::numeric_limits<double>::infinity()
                                                           : std::ldexp(1.0, static_cast<int>(e)));
            }
            if (!mpfr_zero_p(sums[j]->v)) max_exp = std::max(max_exp, static_cast<long>(mpfr_get_exp(sums[j]->v)));
        }
        closed = monitor.push(level_mag);
    }

    long res_exp = -1074;
    for (std::size_t j = 0; j < nl; ++j) {
        out.values[j] = mpfr_get_d(sums[j]->v, MPFR_RNDN);
        if (!mpfr_zero_p(sums[j]->v)) res_exp = std::max(res_exp, static_cast<long>(mpfr_get_exp(sums[j]->v)));
    }
    out.cancel_bits = std::max(0L, max_exp - res_exp);
    double round = (out.cancel_bits + 12 > prec)
                       ? std::numeric_limits<double>::infinity()
                       : std::ldexp(1.0, static_cast<int>(out.cancel_bits - prec + 12)) *
                             (std::abs(out.values.empty() ? 0.0 : out.values[0]) + 1.0);
    for (std::size_t j = 0; j < nl; ++j) {
        out.ests[j] = monitor.tail_bound() + round + 1e-17;
    }
    out.converged = closed;

    for (auto* p : ring) delete p;
    for (auto* p : sums) delete p;
    return out;
}

// Composition-enumeration fallback for non-commensurate alpha vectors,
// log-space multinomial weights.
struct DegreeResult {
    std::vector<double> values;
    std::vector<double> ests;
    bool converged = false;
};

DegreeResult multi_degrees(const std::vector<double>& alphas,
                           const std::vector<double>& lambdas,
                           const std::vector<double>& ws, double tol, long degree_cap) {
    const std::size_t m = alphas.size();
    const std::size_t nl = lambdas.size();
    DegreeResult out;
    out.values.assign(nl, 0.0);
    out.ests.assign(nl, 0.0);

    std::vector<std::size_t> active;  // slots with nonzero argument
    for (std::size_t i = 0; i < m; ++i) {
        if (ws[i] != 0.0) active.push_back(i);
    }
    if (active.empty()) {
        for (std::size_t j = 0; j < nl; ++j) {
            out.values[j] = reciprocal_gamma(lambdas[j]);
            out.ests[j] = 4e-16 * std::abs(out.values[j]);
        }
        out.converged = true;
        return out;
    }

    std::vector<double> log_abs_w(m, 0.0);
    std::vector<int> neg(m, 0);
    for (std::size_t i : active) {
        log_abs_w[i] = std::log(std::abs(ws[i]));
        neg[i] = ws[i] < 0.0 ? 1 : 0;
    }

    TailMonitor monitor(1, tol * 0.25);
    double max_mag = 0.0;
    long long budget = 30000000;
    std::vector<long> k(active.size(), 0);
    bool closed = false;

    for (long K = 0; K <= degree_cap && !closed; ++K) {
        std::vector<double> level_sum(nl, 0.0);
        // odometer over compositions of K into the active slots
        std::fill(k.begin(), k.end(), 0);
        k[0] = K;
        while (true) {
            if (--budget < 0) throw NonConvergence("ml_multi: term budget exhausted before tail closed");
            double lw = 0.0;
            double lmult = log_gamma(static_cast<double>(K) + 1.0);
            double garg = 0.0;
            int sign_par = 0;
            for (std::size_t i = 0; i < active.size(); ++i) {
                std::size_t slot = active[i];
                lw += static_cast<double>(k[i]) * log_abs_w[slot];
                lmult -= log_gamma(static_cast<double>(k[i]) + 1.0);
                garg += alphas[slot] * static_cast<double>(k[i]);
                sign_par += neg[slot] * static_cast<int>(k[i] % 2);
            }
            double common = std::exp(lmult + lw) * ((sign_par % 2) ? -1.0 : 1.0);
            for (std::size_t j = 0; j < nl; ++j) {
                level_sum[j] += common * reciprocal_gamma(garg + lambdas[j]);
            }
            // next composition
            if (active.size() == 1) break;
            std::size_t i = 0;
            while (i + 1 < active.size() && k[i] == 0) ++i;
            if (i + 1 >= active.size()) break;
            long v = k[i];
            k[i] = 0;
            k[0] = v - 1;
            k[i + 1] += 1;
        }
        double level_mag = 0.0;
        for (std::size_t j = 0; j < nl; ++j) {
            out.values[j] += level_sum[j];
            level_mag = std::max(level_mag, std::abs(level_sum[j]));
            max_mag = std::max(max_mag, std::abs(out.values[j]));
        }
        closed = monitor.push(level_mag);
    }
    for (std::size_t j = 0; j < nl; ++j) {
        out.ests[j] = monitor.tail_bound() + 2e-16 * max_mag;
    }
    out.converged = closed;
    return out;
}

std::vector<EvalReport> multi_eval(const std::vector<double>& alphas,
                                   const std::vector<double>& lambdas,
                                   const std::vector<double>& ws, double tol,
                                   const MLOptions& opts) {
    if (alphas.empty()) throw InvalidParameter("ml_multi: requires a nonempty alpha vector");
    for (double a : alphas) {
        if (!(a > 0.0) || !std::isfinite(a)) throw InvalidParameter("ml_multi: requires every alpha > 0");
    }
    if (ws.size() != alphas.size()) {
        throw InvalidParameter("ml_multi: argument count must match alpha count");
    }
    if (!(tol > 0.0)) throw InvalidParameter("ml_multi: requires tol > 0");

    std::vector<EvalReport> reports(lambdas.size());
    bool all_zero = std::all_of(ws.begin(), ws.end(), [](double w) { return w == 0.0; });
    if (all_zero) {
        for (std::size_t j = 0; j < lambdas.size(); ++j) {
            reports[j].value = (lambdas[j] == 1.0) ? 1.0 : reciprocal_gamma(lambdas[j]);
            reports[j].est_abs_error = 4e-16 * std::abs(reports[j].value);
            reports[j].regime = EvalRegime::TaylorSeries;
        }
        return reports;
    }

    Commensuration c = commensurate(alphas);
    if (c.ok) {
        long nmax = *std::max_element(c.n.begin(), c.n.end());
        long level_cap = std::min<long>(static_cast<long>(opts.degree_cap) * nmax, 400000);
        mpfr_prec_t prec = 160;
        for (int attempt = 0; attempt < 3; ++attempt) {
            LevelResult lr = multi_levels(c.n, c.h, lambdas, ws, tol, prec, level_cap);
            bool precise = true;
            for (double e : lr.ests) precise = precise && (e <= tol);
            if (lr.converged && precise) {
                for (std::size_t j = 0; j < lambdas.size(); ++j) {
                    reports[j].value = lr.values[j];
                    reports[j].est_abs_error = lr.ests[j];
                    reports[j].regime = EvalRegime::TaylorSeries;
                }
                return reports;
            }
            if (!lr.converged) {
                throw NonConvergence("ml_multi: degree cap hit before tail bound closed");
            }
            prec = static_cast<mpfr_prec_t>(lr.cancel_bits + 96);
        }
        throw NonConvergence("ml_multi: precision escalation failed");
    }

    DegreeResult dr = multi_degrees(alphas, lambdas, ws, tol, opts.degree_cap);
    if (!dr.converged) throw NonConvergence("ml_multi: degree cap hit before tail bound closed");
    for (std::size_t j = 0; j < lambdas.size(); ++j) {
        reports[j].value = dr.values[j];
        reports[j].est_abs_error = dr.ests[j];
        reports[j].regime = EvalRegime::TaylorSeries;
        if (!(dr.ests[j] <= std::max(tol, 1e-13))) {
            throw NonConvergence("ml_multi: estimated error above tolerance");
        }
    }
    return reports;
}

}  // namespace

EvalReport ml_multi(const MultiMLIndex& index, const std::vector<double>& ws, double tol,
                    const MLOptions& opts) {
    if (!std::isfinite(index.lambda)) throw InvalidParameter("ml_multi: requires finite lambda");
    return multi_eval(index.alphas, {index.lambda}, ws, tol, opts)[0];
}

std::vector<EvalReport> ml_multi_batch(const std::vector<double>& alphas,
                                       const std::vector<double>& lambdas,
                                       const std::vector<double>& ws, double tol,
                                       const MLOptions& opts) {
    return multi_eval(alphas, lambdas, ws, tol, opts);
}

}  // namespace mlspectral
