#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <vector>

namespace mlspectral {

using cplx = std::complex<double>;

enum class GroupKind { Torus, SU2 };
enum class OperatorKind { Laplacian, SubLaplacian };

// Group + operator + band limit. Torus truncation bounds |m|_inf; for SU(2)
// the truncation is 2*l_max (half-integer spins stored as integers).
struct GroupSpec {
    GroupKind group = GroupKind::Torus;
    int torus_dim = 1;
    OperatorKind op = OperatorKind::Laplacian;
    int truncation = 1;

    void validate() const;
    bool operator==(const GroupSpec&) const = default;
};

// One element of the unitary dual with the operator eigenvalues attached to
// matrix rows.
struct DualPoint {
    std::vector<int> index;  // m in Z^n for the torus; {2l} for SU(2)
    int dim = 1;
    std::vector<double> eigenvalues;
};

// Matrix-valued Fourier coefficients in enumeration order; coeffs[p] is the
// dim x dim matrix of dual point p, row-major.
struct SpectralField {
    GroupSpec spec;
    std::vector<std::vector<cplx>> coeffs;

    static SpectralField zeros(const GroupSpec& spec);
    void validate() const;
};

// Samples on the quadrature grid of the group with normalized Haar weights.
// Torus layout: row-major over the n axes, N = 2*truncation*oversample + 1
// points per axis. SU(2) layout: ((a_phi * N_theta) + b_theta) * N_psi + c_psi
// with phi in [0,2pi), psi in [0,4pi) uniform and Gauss-Legendre in cos(theta).
struct GridFunction {
    GroupSpec spec;
    int oversample = 1;
    std::vector<cplx> samples;
    std::vector<double> weights;

    void validate() const;
};

std::vector<DualPoint> enumerate_dual(const GroupSpec& spec);

// Zero-initialized grid with Haar weights; oversample >= 1 scales the node
// counts beyond the exactness minimum (useful for grid L^q norms of products).
GridFunction make_grid(const GroupSpec& spec, int oversample = 1);

SpectralField forward_transform(const GridFunction& f);
GridFunction inverse_transform(const SpectralField& field, int oversample = 1);

double plancherel_norm(const SpectralField& field);
double sobolev_norm(const SpectralField& field, double beta);
double lq_norm(const GridFunction& f, double q);
// sup over the dual of d^{-1/2} ||F||_HS, the L^infty(dual) norm.
double linf_dual_norm(const SpectralField& field);

// Dimension-weighted count of eigenvalues strictly below s, over the part of
// the dual covered by spec.truncation; throws TruncationInsufficient when the
// first excluded band could still contribute below s.
long long counting_function(const GroupSpec& spec, double s);

// Counting exponent lambda with tau(s) ~ s^lambda: n/2 for the torus, 3/2 for
// the SU(2) Laplacian, 2 for the SU(2) sub-Laplacian.
double counting_exponent(const GroupSpec& spec);

// Wigner small-d matrix element, indices in doubled units (twol = 2l etc).
double wigner_d(int twol, int twom_row, int twom_col, double theta);

// Spectrum of the operator on the spin-(twol/2) representation obtained by
// building the generator matrices and diagonalizing numerically; sorted
// ascending. Oracle for the closed-form eigenvalue assignments.
std::vector<double> su2_generator_spectrum(int twol, OperatorKind op);

// Plain-text tabular serialization (one row per matrix entry).
void save_field(const SpectralField& field, std::ostream& out);
SpectralField load_field(std::istream& in);

// Seeded band-limited data: i.i.d. standard complex normal coefficients from
// a splitmix64-fed Box-Muller generator (platform-independent sequence);
// zero_mean clears the trivial representation.
SpectralField random_band_limited(const GroupSpec& spec, std::uint64_t seed, bool zero_mean);

// Field arithmetic used by the solvers and tests.
SpectralField field_axpy(cplx a, const SpectralField& x, const SpectralField& y);
SpectralField field_scale(cplx a, const SpectralField& x);

}  // namespace mlspectral
