#include "mlspectral/harmonics.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "mlspectral/errors.hpp"

namespace mlspectral {

namespace {

const double* factorial_table() {
    static const std::vector<double> table = [] {
        std::vector<double> t(171);
        t[0] = 1.0;
        for (int k = 1; k < 171; ++k) t[k] = t[k - 1] * static_cast<double>(k);
        return t;
    }();
    return table.data();
}

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
    nodes.assign(n, 0.0);
    weights.assign(n, 0.0);
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = 0.0;
            for (int k = 0; k < n; ++k) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * k + 1.0) * x * p1 - k * p2) / (k + 1.0);
            }
            pp = n * (x * p0 - p1) / (x * x - 1.0);
            double dx = p0 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        double w = 2.0 / ((1.0 - x * x) * pp * pp);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
}

struct Su2Sizes {
    int n_phi;
    int n_theta;
    int n_psi;
};

Su2Sizes su2_sizes(const GroupSpec& spec, int oversample) {
    return {2 * spec.truncation * oversample + 1, spec.truncation * oversample + 1,
            2 * spec.truncation * oversample + 1};
}

int torus_axis(const GroupSpec& spec, int oversample) {
    return 2 * spec.truncation * oversample + 1;
}

std::size_t ipow(std::size_t base, int e) {
    std::size_t r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

// splitmix64; fixed sequence independent of the standard library
std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97f4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double uniform01(std::uint64_t& state) {
    return (static_cast<double>(splitmix64(state) >> 11) + 0.5) * 0x1.0p-53;
}

cplx complex_normal(std::uint64_t& state) {
    double u1 = uniform01(state);
    double u2 = uniform01(state);
    double r = std::sqrt(-2.0 * std::log(u1));
    return {r * std::cos(2.0 * M_PI * u2) * M_SQRT1_2, r * std::sin(2.0 * M_PI * u2) * M_SQRT1_2};
}

}  // namespace

void GroupSpec::validate() const {
    if (truncation < 1) throw InvalidParameter("GroupSpec: truncation must be >= 1");
    if (group == GroupKind::Torus) {
        if (torus_dim < 1) throw InvalidParameter("GroupSpec: torus dimension must be >= 1");
        if (op == OperatorKind::SubLaplacian) {
            throw InvalidParameter("GroupSpec: sub-Laplacian is defined here only on SU(2)");
        }
    }
}

std::vector<DualPoint> enumerate_dual(const GroupSpec& spec) {
    spec.validate();
    std::vector<DualPoint> dual;
    if (spec.group == GroupKind::Torus) {
        const int n = spec.torus_dim;
        const int tau = spec.truncation;
        std::vector<int> m(n, -tau);
        while (true) {
            DualPoint p;
            p.index = m;
            p.dim = 1;
            double mu = 0.0;
            for (int v : m) mu += static_cast<double>(v) * v;
            p.eigenvalues = {mu};
            dual.push_back(std::move(p));
            int axis = n - 1;
            while (axis >= 0 && m[axis] == tau) {
                m[axis] = -tau;
                --axis;
            }
            if (axis < 0) break;
            ++m[axis];
        }
        return dual;
    }
    for (int twol = 0; twol <= spec.truncation; ++twol) {
        DualPoint p;
        p.index = {twol};
        p.dim = twol + 1;
        const double l = 0.5 * twol;
        p.eigenvalues.resize(p.dim);
        for (int i = 0; i < p.dim; ++i) {
            const double k = l - static_cast<double>(i);  // row weight
            p.eigenvalues[i] =
                (spec.op == OperatorKind::Laplacian) ? l * (l + 1.0) : l * (l + 1.0) - k * k;
        }
        dual.push_back(std::move(p));
    }
    return dual;
}

SpectralField SpectralField::zeros(const GroupSpec& spec) {
    SpectralField f;
    f.spec = spec;
    auto dual = enumerate_dual(spec);
    f.coeffs.reserve(dual.size());
    for (const auto& p : dual) {
        f.coeffs.emplace_back(static_cast<std::size_t>(p.dim) * p.dim, cplx{0.0, 0.0});
    }
    return f;
}

void SpectralField::validate() const {
    spec.validate();
    auto dual = enumerate_dual(spec);
    if (coeffs.size() != dual.size()) {
        throw InvalidParameter("SpectralField: dual point count mismatch");
    }
    for (std::size_t p = 0; p < dual.size(); ++p) {
        if (coeffs[p].size() != static_cast<std::size_t>(dual[p].dim) * dual[p].dim) {
            throw InvalidParameter("SpectralField: matrix shape mismatch");
        }
    }
}

void GridFunction::validate() const {
    spec.validate();
    if (oversample < 1) throw ResolutionTooLow("GridFunction: oversample must be >= 1");
    std::size_t expected;
    if (spec.group == GroupKind::Torus) {
        expected = ipow(static_cast<std::size_t>(torus_axis(spec, oversample)), spec.torus_dim);
    } else {
        auto sz = su2_sizes(spec, oversample);
        expected = static_cast<std::size_t>(sz.n_phi) * sz.n_theta * sz.n_psi;
    }
    if (samples.size() != expected || weights.size() != expected) {
        throw ResolutionTooLow("GridFunction: sample count does not match the spec's grid");
    }
    double total = 0.0;
    for (double w : weights) total += w;
    if (std::abs(total - 1.0) > 1e-12) {
        throw InvalidParameter("GridFunction: Haar weights must sum to 1");
    }
}

GridFunction make_grid(const GroupSpec& spec, int oversample) {
    spec.validate();
    if (oversample < 1) throw InvalidParameter("make_grid: oversample must be >= 1");
    GridFunction g;
    g.spec = spec;
    g.oversample = oversample;
    if (spec.group == GroupKind::Torus) {
        const std::size_t n = ipow(static_cast<std::size_t>(torus_axis(spec, oversample)), spec.torus_dim);
        g.samples.assign(n, cplx{0.0, 0.0});
        g.weights.assign(n, 1.0 / static_cast<double>(n));
        return g;
    }
    auto sz = su2_sizes(spec, oversample);
    std::vector<double> gl_nodes, gl_weights;
    gauss_legendre(sz.n_theta, gl_nodes, gl_weights);
    const std::size_t total = static_cast<std::size_t>(sz.n_phi) * sz.n_theta * sz.n_psi;
    g.samples.assign(total, cplx{0.0, 0.0});
    g.weights.resize(total);
    for (int a = 0; a < sz.n_phi; ++a) {
        for (int b = 0; b < sz.n_theta; ++b) {
            for (int c = 0; c < sz.n_psi; ++c) {
                g.weights[(static_cast<std::size_t>(a) * sz.n_theta + b) * sz.n_psi + c] =
                    gl_weights[b] / (2.0 * sz.n_phi * sz.n_psi);
            }
        }
    }
    return g;
}

double wigner_d(int twol, int twom_row, int twom_col, double theta) {
    if (twol < 0 || std::abs(twom_row) > twol || std::abs(twom_col) > twol ||
        ((twol - twom_row) % 2 != 0) || ((twol - twom_col) % 2 != 0)) {
        throw InvalidParameter("wigner_d: invalid doubled indices");
    }
    const double* fact = factorial_table();
    const int jpm = (twol + twom_col) / 2;   // j + m
    const int jmm = (twol - twom_col) / 2;   // j - m
    const int jpmp = (twol + twom_row) / 2;  // j + m'
    const int jmmp = (twol - twom_row) / 2;  // j - m'
    const int mp_minus_m = (twom_row - twom_col) / 2;
    const double pref = std::sqrt(fact[jpmp] * fact[jmmp] * fact[jpm] * fact[jmm]);
    const double c = std::cos(0.5 * theta);
    const double s = std::sin(0.5 * theta);
    const int kmin = std::max(0, -mp_minus_m);
    const int kmax = std::min(jpm, jmmp);
    double sum = 0.0;
    for (int k = kmin; k <= kmax; ++k) {
        const double denom = fact[jpm - k] * fact[k] * fact[jmmp - k] * fact[mp_minus_m + k];
        const int cpow = twol - 2 * k - mp_minus_m;  // 2j - 2k + m - m'
        const int spow = mp_minus_m + 2 * k;
        double term = std::pow(c, cpow) * std::pow(s, spow) / denom;
        if ((mp_minus_m + k) % 2 != 0) term = -term;
        sum += term;
    }
    return pref * sum;
}

namespace {

// Wigner d-matrices for every retained band at one theta node; d[twol] is a
// (twol+1)^2 row-major matrix over (row a, col b) with weights l - a, l - b.
std::vector<std::vector<double>> d_matrices(int trunc, double theta) {
    std::vector<std::vector<double>> out(trunc + 1);
    for (int twol = 0; twol <= trunc; ++twol) {
        const int d = twol + 1;
        out[twol].resize(static_cast<std::size_t>(d) * d);
        for (int a = 0; a < d; ++a) {
            for (int b = 0; b < d; ++b) {
                out[twol][static_cast<std::size_t>(a) * d + b] =
                    wigner_d(twol, twol - 2 * a, twol - 2 * b, theta);
            }
        }
    }
    return out;
}

SpectralField torus_forward(const GridFunction& f) {
    const GroupSpec& spec = f.spec;
    const int n = spec.torus_dim;
    const int tau = spec.truncation;
    const int axis = torus_axis(spec, f.oversample);
    SpectralField out = SpectralField::zeros(spec);
    auto dual = enumerate_dual(spec);

    // per-axis twiddles: tw[m + tau][idx] = exp(-i m x_idx)
    std::vector<std::vector<cplx>> tw(2 * tau + 1, std::vector<cplx>(axis));
    for (int m = -tau; m <= tau; ++m) {
        for (int idx = 0; idx < axis; ++idx) {
            double x = 2.0 * M_PI * idx / axis;
            tw[m + tau][idx] = std::polar(1.0, -m * x);
        }
    }
    const std::size_t total = f.samples.size();
    for (std::size_t p = 0; p < dual.size(); ++p) {
        const auto& m = dual[p].index;
        cplx acc = 0.0;
        for (std::size_t flat = 0; flat < total; ++flat) {
            cplx phase = f.weights[flat] * f.samples[flat];
            std::size_t rem = flat;
            for (int ax = n - 1; ax >= 0; --ax) {
                int idx = static_cast<int>(rem % axis);
                rem /= axis;
                phase *= tw[m[ax] + tau][idx];
            }
            acc += phase;
        }
        out.coeffs[p][0] = acc;
    }
    return out;
}

GridFunction torus_inverse(const SpectralField& field, int oversample) {
    const GroupSpec& spec = field.spec;
    const int n = spec.torus_dim;
    const int tau = spec.truncation;
    GridFunction g = make_grid(spec, oversample);
    const int axis = torus_axis(spec, oversample);
    auto dual = enumerate_dual(spec);

    std::vector<std::vector<cplx>> tw(2 * tau + 1, std::vector<cplx>(axis));
    for (int m = -tau; m <= tau; ++m) {
        for (int idx = 0; idx < axis; ++idx) {
            double x = 2.0 * M_PI * idx / axis;
            tw[m + tau][idx] = std::polar(1.0, m * x);
        }
    }
    const std::size_t total = g.samples.size();
    for (std::size_t flat = 0; flat < total; ++flat) {
        std::vector<int> idx(n);
        std::size_t rem = flat;
        for (int ax = n - 1; ax >= 0; --ax) {
            idx[ax] = static_cast<int>(rem % axis);
            rem /= axis;
        }
        cplx acc = 0.0;
        for (std::size_t p = 0; p < dual.size(); ++p) {
            cplx phase = field.coeffs[p][0];
            for (int ax = 0; ax < n; ++ax) phase *= tw[dual[p].index[ax] + tau][idx[ax]];
            acc += phase;
        }
        g.samples[flat] = acc;
    }
    return g;
}

SpectralField su2_forward(const GridFunction& f) {
    const GroupSpec& spec = f.spec;
    const int T = spec.truncation;
    const auto sz = su2_sizes(spec, f.oversample);
    SpectralField out = SpectralField::zeros(spec);

    std::vector<double> gl_nodes, gl_weights;
    gauss_legendre(sz.n_theta, gl_nodes, gl_weights);

    // phase tables over doubled weights
    std::vector<std::vector<cplx>> epsi(2 * T + 1, std::vector<cplx>(sz.n_psi));
    std::vector<std::vector<cplx>> ephi(2 * T + 1, std::vector<cplx>(sz.n_phi));
    for (int tw = -T; tw <= T; ++tw) {
        for (int c = 0; c < sz.n_psi; ++c) {
            epsi[tw + T][c] = std::polar(1.0, 2.0 * M_PI * tw * c / sz.n_psi);
        }
        for (int a = 0; a < sz.n_phi; ++a) {
            ephi[tw + T][a] = std::polar(1.0, M_PI * tw * a / sz.n_phi);
        }
    }

    const int nw = 2 * T + 1;
    // S1[a][b][tw_row] = sum_c w f exp(+i (tw/2) psi_c)
    std::vector<cplx> s1(static_cast<std::size_t>(sz.n_phi) * sz.n_theta * nw, cplx{0.0, 0.0});
    for (int a = 0; a < sz.n_phi; ++a) {
        for (int b = 0; b < sz.n_theta; ++b) {
            const std::size_t base = (static_cast<std::size_t>(a) * sz.n_theta + b) * sz.n_psi;
            for (int tw = -T; tw <= T; ++tw) {
                cplx acc = 0.0;
                for (int c = 0; c < sz.n_psi; ++c) {
                    acc += f.weights[base + c] * f.samples[base + c] * epsi[tw + T][c];
                }
                s1[(static_cast<std::size_t>(a) * sz.n_theta + b) * nw + (tw + T)] = acc;
            }
        }
    }
    // S2[b][tw_col][tw_row] = sum_a S1 exp(+i (tw_col/2) phi_a)
    std::vector<cplx> s2(static_cast<std::size_t>(sz.n_theta) * nw * nw, cplx{0.0, 0.0});
    for (int b = 0; b < sz.n_theta; ++b) {
        for (int twc = -T; twc <= T; ++twc) {
            for (int twr = -T; twr <= T; ++twr) {
                cplx acc = 0.0;
                for (int a = 0; a < sz.n_phi; ++a) {
                    acc += s1[(static_cast<std::size_t>(a) * sz.n_theta + b) * nw + (twr + T)] *
                           ephi[twc + T][a];
                }
                s2[(static_cast<std::size_t>(b) * nw + (twc + T)) * nw + (twr + T)] = acc;
            }
        }
    }
    // contract with the d-matrices
    for (int b = 0; b < sz.n_theta; ++b) {
        auto dmats = d_matrices(T, std::acos(gl_nodes[b]));
        for (int twol = 0; twol <= T; ++twol) {
            const int dim = twol + 1;
            auto& mat = out.coeffs[twol];
            for (int i = 0; i < dim; ++i) {
                const int twr = twol - 2 * i;  // psi weight (row of F)
                for (int j = 0; j < dim; ++j) {
                    const int twc = twol - 2 * j;  // phi weight (col of F)
                    mat[static_cast<std::size_t>(i) * dim + j] +=
                        dmats[twol][static_cast<std::size_t>(j) * dim + i] *
                        s2[(static_cast<std::size_t>(b) * nw + (twc + T)) * nw + (twr + T)];
                }
            }
        }
    }
    return out;
}

GridFunction su2_inverse(const SpectralField& field, int oversample) {
    const GroupSpec& spec = field.spec;
    const int T = spec.truncation;
    GridFunction g = make_grid(spec, oversample);
    const auto sz = su2_sizes(spec, oversample);
    std::vector<double> gl_nodes, gl_weights;
    gauss_legendre(sz.n_theta, gl_nodes, gl_weights);

    const int nw = 2 * T + 1;
    std::vector<std::vector<cplx>> epsi(2 * T + 1, std::vector<cplx>(sz.n_psi));
    std::vector<std::vector<cplx>> ephi(2 * T + 1, std::vector<cplx>(sz.n_phi));
    for (int tw = -T; tw <= T; ++tw) {
        for (int c = 0; c < sz.n_psi; ++c) {
            epsi[tw + T][c] = std::polar(1.0, -2.0 * M_PI * tw * c / sz.n_psi);
        }
        for (int a = 0; a < sz.n_phi; ++a) {
            ephi[tw + T][a] = std::polar(1.0, -M_PI * tw * a / sz.n_phi);
        }
    }

    for (int b = 0; b < sz.n_theta; ++b) {
        auto dmats = d_matrices(T, std::acos(gl_nodes[b]));
        // T1[tw_row][tw_col] = sum_l (2l+1) d^l_{w_r w_s} F^l[s][r]
        std::vector<cplx> t1(static_cast<std::size_t>(nw) * nw, cplx{0.0, 0.0});
        for (int twol = 0; twol <= T; ++twol) {
            const int dim = twol + 1;
            const auto& mat = field.coeffs[twol];
            for (int r = 0; r < dim; ++r) {
                const int twr = twol - 2 * r;
                for (int s = 0; s < dim; ++s) {
                    const int tws = twol - 2 * s;
                    t1[static_cast<std::size_t>(twr + T) * nw + (tws + T)] +=
                        static_cast<double>(dim) * dmats[twol][static_cast<std::size_t>(r) * dim + s] *
                        mat[static_cast<std::size_t>(s) * dim + r];
                }
            }
        }
        // T2[a][tw_col] = sum_{tw_row} exp(-i (tw_row/2) phi_a) T1
        std::vector<cplx> t2(static_cast<std::size_t>(sz.n_phi) * nw, cplx{0.0, 0.0});
        for (int a = 0; a < sz.n_phi; ++a) {
            for (int tws = -T; tws <= T; ++tws) {
                cplx acc = 0.0;
                for (int twr = -T; twr <= T; ++twr) {
                    acc += ephi[twr + T][a] * t1[static_cast<std::size_t>(twr + T) * nw + (tws + T)];
                }
                t2[static_cast<std::size_t>(a) * nw + (tws + T)] = acc;
            }
        }
        for (int a = 0; a < sz.n_phi; ++a) {
            const std::size_t base = (static_cast<std::size_t>(a) * sz.n_theta + b) * sz.n_psi;
            for (int c = 0; c < sz.n_psi; ++c) {
                cplx acc = 0.0;
                for (int tws = -T; tws <= T; ++tws) {
                    acc += epsi[tws + T][c] * t2[static_cast<std::size_t>(a) * nw + (tws + T)];
                }
                g.samples[base + c] = acc;
            }
        }
    }
    return g;
}

}  // namespace

SpectralField forward_transform(const GridFunction& f) {
    f.validate();
    return (f.spec.group == GroupKind::Torus) ? torus_forward(f) : su2_forward(f);
}

GridFunction inverse_transform(const SpectralField& field, int oversample) {
    field.validate();
    return (field.spec.group == GroupKind::Torus) ? torus_inverse(field, oversample)
                                                  : su2_inverse(field, oversample);
}

double plancherel_norm(const SpectralField& field) {
    field.validate();
    auto dual = enumerate_dual(field.spec);
    double acc = 0.0;
    for (std::size_t p = 0; p < dual.size(); ++p) {
        double hs = 0.0;
        for (const cplx& v : field.coeffs[p]) hs += std::norm(v);
        acc += static_cast<double>(dual[p].dim) * hs;
    }
    return std::sqrt(acc);
}

double sobolev_norm(const SpectralField& field, double beta) {
    field.validate();
    auto dual = enumerate_dual(field.spec);
    double acc = 0.0;
    for (std::size_t p = 0; p < dual.size(); ++p) {
        const int dim = dual[p].dim;
        double sub = 0.0;
        for (int i = 0; i < dim; ++i) {
            const double w = std::pow(1.0 + dual[p].eigenvalues[i], beta);
            for (int j = 0; j < dim; ++j) {
                sub += w * std::norm(field.coeffs[p][static_cast<std::size_t>(i) * dim + j]);
            }
        }
        acc += static_cast<double>(dim) * sub;
    }
    return std::sqrt(acc);
}

double lq_norm(const GridFunction& f, double q) {
    f.validate();
    if (!(q >= 1.0) || !std::isfinite(q)) throw InvalidParameter("lq_norm: requires q in [1, inf)");
    double acc = 0.0;
    for (std::size_t i = 0; i < f.samples.size(); ++i) {
        acc += f.weights[i] * std::pow(std::abs(f.samples[i]), q);
    }
    return std::pow(acc, 1.0 / q);
}

double linf_dual_norm(const SpectralField& field) {
    field.validate();
    auto dual = enumerate_dual(field.spec);
    double best = 0.0;
    for (std::size_t p = 0; p < dual.size(); ++p) {
        double hs = 0.0;
        for (const cplx& v : field.coeffs[p]) hs += std::norm(v);
        best = std::max(best, std::sqrt(hs / static_cast<double>(dual[p].dim)));
    }
    return best;
}

namespace {

// largest nonnegative integer m with m^2 < s (s > 0)
long long axis_reach(double s) {
    long long mm = static_cast<long long>(std::floor(std::sqrt(s)));
    while (mm > 0 && static_cast<double>(mm) * mm >= s) --mm;
    while (static_cast<double>(mm + 1) * (mm + 1) < s) ++mm;
    return mm;
}

long long torus_count(int n, int tau, double s) {
    // lattice points with |m|_inf <= tau and |m|^2 < s; closed form on the
    // last axis keeps the Lorentz-sup sweeps cheap
    if (!(s > 0.0)) return 0;
    if (n == 1) {
        long long mm = std::min<long long>(axis_reach(s), tau);
        return 2 * mm + 1;
    }
    long long total = 0;
    for (int m1 = -tau; m1 <= tau; ++m1) {
        const double rem = s - static_cast<double>(m1) * m1;
        if (rem > 0.0) total += torus_count(n - 1, tau, rem);
    }
    return total;
}

}  // namespace

long long counting_function(const GroupSpec& spec, double s) {
    spec.validate();
    if (!(s > 0.0)) throw InvalidParameter("counting_function: requires s > 0");
    if (spec.group == GroupKind::Torus) {
        const double next = static_cast<double>(spec.truncation + 1) * (spec.truncation + 1);
        if (next < s) {
            throw TruncationInsufficient("counting_function: torus truncation too small for s");
        }
        return torus_count(spec.torus_dim, spec.truncation, s);
    }
    long long total = 0;
    if (spec.op == OperatorKind::Laplacian) {
        const double lnext = 0.5 * (spec.truncation + 1);
        if (lnext * (lnext + 1.0) < s) {
            throw TruncationInsufficient("counting_function: SU(2) truncation too small for s");
        }
        for (int twol = 0; twol <= spec.truncation; ++twol) {
            const double l = 0.5 * twol;
            if (l * (l + 1.0) < s) {
                total += static_cast<long long>(twol + 1) * (twol + 1);
            }
        }
        return total;
    }
    // sub-Laplacian: eigenvalues l(l+1) - k^2, smallest in band is l
    const double lnext = 0.5 * (spec.truncation + 1);
    if (lnext < s) {
        throw TruncationInsufficient("counting_function: SU(2) truncation too small for s");
    }
    for (int twol = 0; twol <= spec.truncation; ++twol) {
        const double l = 0.5 * twol;
        const double c = l * (l + 1.0) - s;
        long long in_band;
        if (c < 0.0) {
            in_band = twol + 1;  // whole band below s
        } else {
            // ladder k = l, l-1, ...; count k with k^2 > c (strict), both signs
            double root = std::sqrt(c);
            long long cnt = static_cast<long long>(std::ceil(l - root - 1e-12));
            if (cnt < 0) cnt = 0;
            in_band = 2 * cnt;
        }
        total += static_cast<long long>(twol + 1) * in_band;
    }
    return total;
}

double counting_exponent(const GroupSpec& spec) {
    spec.validate();
    if (spec.group == GroupKind::Torus) return 0.5 * spec.torus_dim;
    return (spec.op == OperatorKind::Laplacian) ? 1.5 : 2.0;
}

std::vector<double> su2_generator_spectrum(int twol, OperatorKind op) {
    if (twol < 0) throw InvalidParameter("su2_generator_spectrum: requires twol >= 0");
    const int d = twol + 1;
    const double l = 0.5 * twol;
    Eigen::MatrixXd jp = Eigen::MatrixXd::Zero(d, d);
    for (int k = 1; k < d; ++k) {
        const double m = l - static_cast<double>(k);  // column weight
        jp(k - 1, k) = std::sqrt(l * (l + 1.0) - m * (m + 1.0));
    }
    Eigen::MatrixXd jm = jp.transpose();
    // -X^2 - Y^2 = Jx^2 + Jy^2 = (J+ J- + J- J+)/2, real symmetric
    Eigen::MatrixXd q = 0.5 * (jp * jm + jm * jp);
    if (op == OperatorKind::Laplacian) {
        for (int k = 0; k < d; ++k) {
            const double m = l - static_cast<double>(k);
            q(k, k) += m * m;
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(q);
    std::vector<double> out(d);
    for (int k = 0; k < d; ++k) out[k] = solver.eigenvalues()(k);
    return out;
}

void save_field(const SpectralField& field, std::ostream& out) {
    field.validate();
    auto dual = enumerate_dual(field.spec);
    out << "mlspectral-field 1\n";
    if (field.spec.group == GroupKind::Torus) {
        out << "group torus " << field.spec.torus_dim;
    } else {
        out << "group su2 1";
    }
    out << " operator "
        << (field.spec.op == OperatorKind::Laplacian ? "laplacian" : "sublaplacian")
        << " truncation " << field.spec.truncation << "\n";
    char buf[128];
    for (std::size_t p = 0; p < dual.size(); ++p) {
        const int dim = dual[p].dim;
        for (int i = 0; i < dim; ++i) {
            for (int j = 0; j < dim; ++j) {
                for (int v : dual[p].index) out << v << ' ';
                const cplx z = field.coeffs[p][static_cast<std::size_t>(i) * dim + j];
                std::snprintf(buf, sizeof buf, "%d %d %.17g %.17g\n", i, j, z.real(), z.imag());
                out << buf;
            }
        }
    }
}

SpectralField load_field(std::istream& in) {
    std::string magic;
    int version = 0;
    in >> magic >> version;
    if (magic != "mlspectral-field" || version != 1) {
        throw InvalidParameter("load_field: not a spectral-field file");
    }
    std::string kw, group_name, op_name;
    int dim_or_one = 0, trunc = 0;
    in >> kw >> group_name >> dim_or_one;
    std::string kw2, kw3;
    in >> kw2 >> op_name >> kw3 >> trunc;
    if (kw != "group" || kw2 != "operator" || kw3 != "truncation") {
        throw InvalidParameter("load_field: malformed header");
    }
    GroupSpec spec;
    if (group_name == "torus") {
        spec.group = GroupKind::Torus;
        spec.torus_dim = dim_or_one;
    } else if (group_name == "su2") {
        spec.group = GroupKind::SU2;
    } else {
        throw InvalidParameter("load_field: unknown group " + group_name);
    }
    spec.op = (op_name == "sublaplacian") ? OperatorKind::SubLaplacian : OperatorKind::Laplacian;
    spec.truncation = trunc;
    SpectralField field = SpectralField::zeros(spec);
    auto dual = enumerate_dual(spec);
    const std::size_t index_width = dual[0].index.size();
    for (std::size_t p = 0; p < dual.size(); ++p) {
        const int dim = dual[p].dim;
        for (int i = 0; i < dim; ++i) {
            for (int j = 0; j < dim; ++j) {
                std::vector<int> idx(index_width);
                for (auto& v : idx) in >> v;
                int ri = 0, rj = 0;
                double re = 0.0, im = 0.0;
                in >> ri >> rj >> re >> im;
                if (!in || idx != dual[p].index || ri != i || rj != j) {
                    throw InvalidParameter("load_field: row order/indices corrupted");
                }
                field.coeffs[p][static_cast<std::size_t>(i) * dim + j] = {re, im};
            }
        }
    }
    return field;
}

SpectralField random_band_limited(const GroupSpec& spec, std::uint64_t seed, bool zero_mean) {
    SpectralField field = SpectralField::zeros(spec);
    auto dual = enumerate_dual(spec);
    std::uint64_t state = seed * 0x9E3779B97f4A7C15ULL + 0x2545F4914F6CDD1DULL;
    for (std::size_t p = 0; p < dual.size(); ++p) {
        for (auto& v : field.coeffs[p]) v = complex_normal(state);
    }
    if (zero_mean) {
        for (std::size_t p = 0; p < dual.size(); ++p) {
            bool trivial = true;
            for (int v : dual[p].index) trivial = trivial && (v == 0);
            if (trivial) {
                std::fill(field.coeffs[p].begin(), field.coeffs[p].end(), cplx{0.0, 0.0});
            }
        }
    }
    return field;
}

SpectralField field_axpy(cplx a, const SpectralField& x, const SpectralField& y) {
    x.validate();
    y.validate();
    if (!(x.spec == y.spec)) throw InvalidParameter("field_axpy: spec mismatch");
    SpectralField out = y;
    for (std::size_t p = 0; p < x.coeffs.size(); ++p) {
        for (std::size_t e = 0; e < x.coeffs[p].size(); ++e) {
            out.coeffs[p][e] += a * x.coeffs[p][e];
        }
    }
    return out;
}

SpectralField field_scale(cplx a, const SpectralField& x) {
    x.validate();
    SpectralField out = x;
    for (auto& mat : out.coeffs) {
        for (auto& v : mat) v *= a;
    }
    return out;
}

}  // namespace mlspectral
