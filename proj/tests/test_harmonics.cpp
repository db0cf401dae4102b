#include "doctest.h"

#include <Eigen/Dense>

#include <cmath>
#include <sstream>

#include "mlspectral/errors.hpp"
#include "mlspectral/estimates.hpp"
#include "mlspectral/harmonics.hpp"

using namespace mlspectral;

namespace {

// fill a torus grid with a function of the angles
template <typename Fn>
GridFunction torus_fill(const GroupSpec& spec, int oversample, Fn&& fn) {
    GridFunction g = make_grid(spec, oversample);
    const int axis = 2 * spec.truncation * oversample + 1;
    const int n = spec.torus_dim;
    for (std::size_t flat = 0; flat < g.samples.size(); ++flat) {
        std::size_t rem = flat;
        std::vector<double> x(n);
        for (int ax = n - 1; ax >= 0; --ax) {
            x[ax] = 2.0 * M_PI * static_cast<double>(rem % axis) / axis;
            rem /= axis;
        }
        g.samples[flat] = fn(x);
    }
    return g;
}

long long torus_count_brute(const GroupSpec& spec, double s) {
    long long total = 0;
    for (const auto& p : enumerate_dual(spec)) {
        for (double mu : p.eigenvalues) {
            if (mu < s) total += p.dim;
        }
    }
    return total;
}

}  // namespace

TEST_CASE("dual enumeration examples") {
    GroupSpec t1{GroupKind::Torus, 1, OperatorKind::Laplacian, 2};
    auto dual = enumerate_dual(t1);
    REQUIRE(dual.size() == 5);
    CHECK(dual[0].index == std::vector<int>{-2});
    CHECK(dual[0].eigenvalues[0] == 4.0);
    CHECK(dual[2].eigenvalues[0] == 0.0);
    CHECK(dual[4].eigenvalues[0] == 4.0);

    GroupSpec su2{GroupKind::SU2, 1, OperatorKind::Laplacian, 4};
    auto sdual = enumerate_dual(su2);
    REQUIRE(sdual.size() == 5);
    CHECK(sdual[2].dim == 3);  // l = 1
    for (double mu : sdual[2].eigenvalues) CHECK(mu == doctest::Approx(2.0));

    GroupSpec sub{GroupKind::SU2, 1, OperatorKind::SubLaplacian, 4};
    auto bdual = enumerate_dual(sub);
    // l = 1 band: eigenvalues l(l+1) - k^2 over k = 1, 0, -1
    CHECK(bdual[2].eigenvalues[0] == doctest::Approx(1.0));
    CHECK(bdual[2].eigenvalues[1] == doctest::Approx(2.0));
    CHECK(bdual[2].eigenvalues[2] == doctest::Approx(1.0));

    CHECK_THROWS_AS(enumerate_dual(GroupSpec{GroupKind::Torus, 1, OperatorKind::SubLaplacian, 2}),
                    InvalidParameter);
}

TEST_CASE("wigner d equals the exponential of the generator") {
    for (int twol : {1, 2, 3, 5, 8}) {
        const int d = twol + 1;
        const double l = 0.5 * twol;
        Eigen::MatrixXd jp = Eigen::MatrixXd::Zero(d, d);
        for (int k = 1; k < d; ++k) {
            const double m = l - k;
            jp(k - 1, k) = std::sqrt(l * (l + 1.0) - m * (m + 1.0));
        }
        // Jy = (J+ - J-)/(2i); d(theta) = exp(-i theta Jy) is real
        Eigen::MatrixXcd jy = (jp - Eigen::MatrixXd(jp.transpose())).cast<std::complex<double>>() /
                              std::complex<double>(0.0, 2.0);
        for (double theta : {0.17, 0.83, 1.9, 2.94}) {
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(jy);
            Eigen::VectorXcd phases(d);
            for (int k = 0; k < d; ++k) {
                phases(k) = std::exp(std::complex<double>(0.0, -theta * es.eigenvalues()(k)));
            }
            Eigen::MatrixXcd expm =
                es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
            for (int a = 0; a < d; ++a) {
                for (int b = 0; b < d; ++b) {
                    CHECK(std::abs(expm(a, b).imag()) <= 1e-10);
                    CHECK(wigner_d(twol, twol - 2 * a, twol - 2 * b, theta) ==
                          doctest::Approx(expm(a, b).real()).epsilon(1e-9));
                }
            }
        }
    }
}

TEST_CASE("torus transform orthonormality and round trip") {
    GroupSpec spec{GroupKind::Torus, 1, OperatorKind::Laplacian, 4};
    auto f = torus_fill(spec, 1, [](const std::vector<double>& x) {
        return std::polar(1.0, x[0]);  // e^{ix}
    });
    auto field = forward_transform(f);
    auto dual = enumerate_dual(spec);
    for (std::size_t p = 0; p < dual.size(); ++p) {
        const cplx expected = (dual[p].index[0] == 1) ? cplx{1.0, 0.0} : cplx{0.0, 0.0};
        CHECK(std::abs(field.coeffs[p][0] - expected) <= 1e-12);
    }

    GroupSpec spec2{GroupKind::Torus, 2, OperatorKind::Laplacian, 3};
    auto c = torus_fill(spec2, 1, [](const std::vector<double>&) { return cplx{1.0, 0.0}; });
    auto cf = forward_transform(c);
    auto dual2 = enumerate_dual(spec2);
    for (std::size_t p = 0; p < dual2.size(); ++p) {
        const bool zero_mode = dual2[p].index[0] == 0 && dual2[p].index[1] == 0;
        CHECK(std::abs(cf.coeffs[p][0] - (zero_mode ? cplx{1.0, 0.0} : cplx{0.0, 0.0})) <= 1e-12);
    }

    auto rnd = random_band_limited(spec2, 77, false);
    auto back = forward_transform(inverse_transform(rnd));
    double worst = 0.0;
    for (std::size_t p = 0; p < rnd.coeffs.size(); ++p) {
        worst = std::max(worst, std::abs(rnd.coeffs[p][0] - back.coeffs[p][0]));
    }
    CHECK(worst <= 1e-10);
}

TEST_CASE("su2 peter-weyl normalization and round trip") {
    GroupSpec spec{GroupKind::SU2, 1, OperatorKind::Laplacian, 3};
    // f = sqrt(2) xi^{1/2}_{11}: unit L2 norm, HS norm 1/sqrt(2) on l = 1/2
    SpectralField delta = SpectralField::zeros(spec);
    delta.coeffs[1][0] = std::sqrt(2.0) / 2.0;  // hat f = sqrt(2)/d at (0,0), d = 2
    auto f = inverse_transform(delta);
    CHECK(lq_norm(f, 2.0) == doctest::Approx(1.0).epsilon(1e-10));
    auto field = forward_transform(f);
    double hs = 0.0;
    for (const auto& v : field.coeffs[1]) hs += std::norm(v);
    CHECK(std::sqrt(hs) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-10));
    // other bands empty
    for (std::size_t p = 0; p < field.coeffs.size(); ++p) {
        if (p == 1) continue;
        for (const auto& v : field.coeffs[p]) CHECK(std::abs(v) <= 1e-11);
    }

    auto rnd = random_band_limited(spec, 31, false);
    auto back = forward_transform(inverse_transform(rnd));
    double worst = 0.0;
    for (std::size_t p = 0; p < rnd.coeffs.size(); ++p) {
        for (std::size_t e = 0; e < rnd.coeffs[p].size(); ++e) {
            worst = std::max(worst, std::abs(rnd.coeffs[p][e] - back.coeffs[p][e]));
        }
    }
    CHECK(worst <= 1e-10);
}

TEST_CASE("plancherel and sobolev norms") {
    GroupSpec spec{GroupKind::SU2, 1, OperatorKind::SubLaplacian, 4};
    auto rnd = random_band_limited(spec, 5, false);
    CHECK(plancherel_norm(rnd) ==
          doctest::Approx(lq_norm(inverse_transform(rnd), 2.0)).epsilon(1e-8));
    CHECK(sobolev_norm(rnd, 0.0) == doctest::Approx(plancherel_norm(rnd)).epsilon(1e-12));

    // beta = 2 equals the norm of the field scaled by (1 + mu_i)
    auto dual = enumerate_dual(spec);
    SpectralField scaled = rnd;
    for (std::size_t p = 0; p < dual.size(); ++p) {
        const int dim = dual[p].dim;
        for (int i = 0; i < dim; ++i) {
            for (int j = 0; j < dim; ++j) {
                scaled.coeffs[p][static_cast<std::size_t>(i) * dim + j] *=
                    1.0 + dual[p].eigenvalues[i];
            }
        }
    }
    CHECK(sobolev_norm(rnd, 2.0) == doctest::Approx(plancherel_norm(scaled)).epsilon(1e-12));

    // torus single mode: (1+|m|^2)^{beta/2}
    GroupSpec t{GroupKind::Torus, 1, OperatorKind::Laplacian, 3};
    SpectralField single = SpectralField::zeros(t);
    single.coeffs[5][0] = 1.0;  // m = +2
    CHECK(sobolev_norm(single, 1.4) == doctest::Approx(std::pow(5.0, 0.7)).epsilon(1e-13));
}

TEST_CASE("lq norms on the torus") {
    GroupSpec spec{GroupKind::Torus, 1, OperatorKind::Laplacian, 4};
    auto c = torus_fill(spec, 1, [](const std::vector<double>&) { return cplx{-2.5, 0.0}; });
    for (double q : {1.0, 2.0, 3.5, 7.0}) CHECK(lq_norm(c, q) == doctest::Approx(2.5).epsilon(1e-13));
    auto wave = torus_fill(spec, 1, [](const std::vector<double>& x) { return std::polar(1.0, x[0]); });
    CHECK(lq_norm(wave, 4.0) == doctest::Approx(1.0).epsilon(1e-13));
    auto cosx = torus_fill(spec, 2, [](const std::vector<double>& x) {
        return cplx{2.0 * std::cos(x[0]), 0.0};
    });
    CHECK(lq_norm(cosx, 4.0) == doctest::Approx(std::pow(6.0, 0.25)).epsilon(1e-12));
    CHECK_THROWS_AS(lq_norm(cosx, 0.5), InvalidParameter);
}

TEST_CASE("fourier transform is L1 to Linf bounded") {
    GroupSpec spec{GroupKind::SU2, 1, OperatorKind::Laplacian, 3};
    for (std::uint64_t seed : {1u, 2u, 3u, 9u}) {
        auto f = inverse_transform(random_band_limited(spec, seed, false));
        GridFunction g = f;
        CHECK(linf_dual_norm(forward_transform(g)) <= lq_norm(g, 1.0) * (1.0 + 1e-10));
    }
}

TEST_CASE("counting function pinned examples") {
    CHECK(counting_function({GroupKind::Torus, 1, OperatorKind::Laplacian, 4}, 10.0) == 7);
    CHECK(counting_function({GroupKind::Torus, 2, OperatorKind::Laplacian, 3}, 5.0) == 13);
    CHECK(counting_function({GroupKind::SU2, 1, OperatorKind::Laplacian, 4}, 2.1) == 14);
    CHECK_THROWS_AS(counting_function({GroupKind::Torus, 1, OperatorKind::Laplacian, 2}, 10.0),
                    TruncationInsufficient);
    CHECK_THROWS_AS(counting_function({GroupKind::Torus, 1, OperatorKind::Laplacian, 4}, 0.0),
                    InvalidParameter);

    // closed-form band counts match the brute force over the enumerated dual
    for (double s : {0.5, 1.0, 2.5, 7.0, 19.0, 30.0}) {
        GroupSpec sub{GroupKind::SU2, 1, OperatorKind::SubLaplacian, 70};
        CHECK(counting_function(sub, s) == torus_count_brute(sub, s));
        GroupSpec t2{GroupKind::Torus, 2, OperatorKind::Laplacian, 8};
        CHECK(counting_function(t2, s) == torus_count_brute(t2, s));
    }

    // nondecreasing in s
    GroupSpec sub{GroupKind::SU2, 1, OperatorKind::SubLaplacian, 50};
    long long prev = 0;
    for (double s : log_spaced(0.5, 20.0, 40)) {
        long long cur = counting_function(sub, s);
        CHECK(cur >= prev);
        prev = cur;
    }
}

TEST_CASE("counting exponents via log-log slope") {
    auto slope_of = [](const GroupSpec& spec) {
        auto ss = log_spaced(1e2, 1e4, 41);
        std::vector<double> tau(ss.size());
        for (std::size_t i = 0; i < ss.size(); ++i) {
            tau[i] = static_cast<double>(counting_function(spec, ss[i]));
        }
        return loglog_slope(ss, tau);
    };
    CHECK(std::abs(slope_of({GroupKind::Torus, 1, OperatorKind::Laplacian, 101}) - 0.5) <= 0.05);
    CHECK(std::abs(slope_of({GroupKind::Torus, 2, OperatorKind::Laplacian, 101}) - 1.0) <= 0.05);
    CHECK(std::abs(slope_of({GroupKind::SU2, 1, OperatorKind::Laplacian, 200}) - 1.5) <= 0.05);
    CHECK(std::abs(slope_of({GroupKind::SU2, 1, OperatorKind::SubLaplacian, 20001}) - 2.0) <= 0.05);

    CHECK(counting_exponent({GroupKind::Torus, 2, OperatorKind::Laplacian, 3}) == 1.0);
    CHECK(counting_exponent({GroupKind::SU2, 1, OperatorKind::SubLaplacian, 3}) == 2.0);
}

TEST_CASE("sub-laplacian closed form matches generator diagonalization") {
    for (int twol = 0; twol <= 8; ++twol) {
        for (auto op : {OperatorKind::Laplacian, OperatorKind::SubLaplacian}) {
            auto numeric = su2_generator_spectrum(twol, op);
            GroupSpec spec{GroupKind::SU2, 1, op, std::max(twol, 1)};
            auto dual = enumerate_dual(spec);
            auto closed = dual[twol].eigenvalues;
            std::sort(closed.begin(), closed.end());
            REQUIRE(numeric.size() == closed.size());
            for (std::size_t i = 0; i < closed.size(); ++i) {
                CHECK(std::abs(numeric[i] - closed[i]) <= 1e-8);
            }
        }
    }
}

TEST_CASE("spectral field serialization round trip") {
    GroupSpec spec{GroupKind::SU2, 1, OperatorKind::SubLaplacian, 3};
    auto f = random_band_limited(spec, 123, true);
    std::stringstream buf;
    save_field(f, buf);
    auto g = load_field(buf);
    CHECK(g.spec == spec);
    for (std::size_t p = 0; p < f.coeffs.size(); ++p) {
        for (std::size_t e = 0; e < f.coeffs[p].size(); ++e) {
            CHECK(f.coeffs[p][e] == g.coeffs[p][e]);  // bit-exact via %.17g
        }
    }
    // byte-identical re-serialization
    std::stringstream buf2;
    save_field(g, buf2);
    CHECK(buf.str() == buf2.str());
}

TEST_CASE("random fields are seeded and zero-mean when asked") {
    GroupSpec spec{GroupKind::Torus, 2, OperatorKind::Laplacian, 3};
    auto a = random_band_limited(spec, 42, true);
    auto b = random_band_limited(spec, 42, true);
    auto c = random_band_limited(spec, 43, true);
    CHECK(plancherel_norm(field_axpy({-1.0, 0.0}, a, b)) == 0.0);
    CHECK(plancherel_norm(field_axpy({-1.0, 0.0}, a, c)) > 0.1);
    auto dual = enumerate_dual(spec);
    for (std::size_t p = 0; p < dual.size(); ++p) {
        if (dual[p].index[0] == 0 && dual[p].index[1] == 0) {
            CHECK(std::abs(a.coeffs[p][0]) == 0.0);
        }
    }
}
