#include "doctest.h"

#include <cmath>
#include <vector>

#include "mlspectral/errors.hpp"
#include "mlspectral/estimates.hpp"
#include "mlspectral/gamma.hpp"
#include "mlspectral/mittag_leffler.hpp"
#include "mlspectral/talbot.hpp"
#include "oracles.hpp"

using namespace mlspectral;

TEST_CASE("lanczos gamma against mpfr") {
    for (double x = 0.02; x < 171.0; x += 0.374) {
        const double ref = oracles::gamma_ref(x);
        CHECK(std::abs(gamma_fn(x) - ref) <= 1e-13 * std::abs(ref));
    }
    // reflection region, non-integer
    for (double x : {-0.5, -1.25, -3.75, -10.5, -20.3}) {
        const double ref = oracles::gamma_ref(x);
        CHECK(std::abs(gamma_fn(x) - ref) <= 1e-12 * std::abs(ref));
    }
    CHECK(reciprocal_gamma(0.0) == 0.0);
    CHECK(reciprocal_gamma(-1.0) == 0.0);
    CHECK(reciprocal_gamma(-7.0) == 0.0);
    CHECK(reciprocal_gamma(2.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK_THROWS_AS(gamma_fn(-3.0), InvalidParameter);
    CHECK(sin_pi(4.0) == 0.0);
    CHECK(sin_pi(-7.0) == 0.0);
    CHECK(sin_pi(0.5) == doctest::Approx(1.0).epsilon(1e-15));
    for (double x = 0.5; x < 170.0; x += 1.37) {
        CHECK(log_gamma(x) == doctest::Approx(std::lgamma(x)).epsilon(1e-12));
    }
}

TEST_CASE("talbot inversion of reference transforms") {
    for (double a : {0.5, 2.0, 10.0, 30.0}) {
        auto F = [a](std::complex<double> s) { return 1.0 / (s + a); };
        for (double t : {0.3, 1.0, 2.5}) {
            if (a * t > 40.0) continue;
            CHECK(std::abs(talbot_invert(F, t) - std::exp(-a * t)) <= 2e-13);
        }
    }
    auto ramp = [](std::complex<double> s) { return 1.0 / (s * s); };
    CHECK(talbot_invert(ramp, 1.7) == doctest::Approx(1.7).epsilon(1e-12));
    auto root = [](std::complex<double> s) { return std::pow(s, -0.5); };
    CHECK(std::abs(talbot_invert(root, 2.0) - 1.0 / std::sqrt(M_PI * 2.0)) <= 1e-12);
}

TEST_CASE("ml1 exponential identity and E_alpha(0)") {
    for (int i = 0; i <= 100; ++i) {
        const double z = -5.0 + 8.0 * i / 100.0;
        CHECK(std::abs(ml1({1.0, 1.0}, z).value - std::exp(z)) <= 1e-10);
    }
    for (double a : {0.1, 0.3, 0.5, 0.9, 1.0, 1.3, 1.7, 2.0, 2.5}) {
        CHECK(ml1({a, 1.0}, 0.0).value == 1.0);
    }
}

TEST_CASE("ml1 erfc closed form at alpha one half") {
    const double v1 = ml1({0.5, 1.0}, -1.0).value;
    CHECK(std::abs(v1 - 0.42758357615580700442) <= 1e-10);
    CHECK(std::abs(v1 - oracles::exp_x2_erfc(1.0)) <= 1e-11);
    for (int i = 0; i <= 100; ++i) {
        const double x = 0.01 + 30.0 * i / 100.0;
        CHECK(std::abs(ml1({0.5, 1.0}, -x).value - oracles::exp_x2_erfc(x)) <= 1e-10);
    }
}

TEST_CASE("ml2 identities") {
    // E_{1,2}(z) = (e^z - 1)/z
    for (int i = 0; i <= 100; ++i) {
        const double z = (i == 50) ? 0.7 : -4.0 + 8.0 * i / 100.0;
        const double ref = (std::exp(z) - 1.0) / z;
        CHECK(std::abs(ml2({1.0, 2.0}, z).value - ref) <= 1e-10);
    }
    CHECK(std::abs(ml2({1.0, 2.0}, 1.0).value - 1.7182818284590452354) <= 1e-12);
    // E_2(-x^2) = cos x, x E_{2,2}(-x^2) = sin x
    for (int i = 0; i <= 100; ++i) {
        const double x = 0.05 + 20.0 * i / 100.0;
        CHECK(std::abs(ml2({2.0, 1.0}, -x * x).value - std::cos(x)) <= 1e-10);
        CHECK(std::abs(x * ml2({2.0, 2.0}, -x * x).value - std::sin(x)) <= 1e-10);
    }
    CHECK(std::abs(M_PI * ml2({2.0, 2.0}, -M_PI * M_PI).value - 0.0) <= 1e-10);
    // only the k = 0 term survives at z = 0
    CHECK(ml2({1.5, 1.5}, 0.0).value == doctest::Approx(1.1283791670955125739).epsilon(1e-13));
}

TEST_CASE("ml negative axis against the spectral integral oracle") {
    for (double a : {0.25, 0.5, 0.75, 0.9}) {
        for (double x : log_spaced(0.5, 1e5, 25)) {
            const double ref = oracles::ml_neg_integral_ref(a, x);
            CHECK(std::abs(ml1({a, 1.0}, -x).value - ref) <= 1e-11);
        }
    }
}

TEST_CASE("ml mid-band against the extended-precision series") {
    for (double a : {1.2, 1.5, 1.8, 1.95, 2.0}) {
        for (double rho : {1.0, 2.0, a}) {
            for (double big : {1.5, 3.0, 7.0, 14.0, 25.0, 31.0}) {
                const double x = std::pow(big, a);
                const double ref = oracles::ml_series_ref(a, rho, -x);
                CHECK(std::abs(ml2({a, rho}, -x).value - ref) <= 2e-12);
            }
        }
    }
    // asymptotic regime spot checks, alpha > 1 (residue pair + algebraic tail)
    for (double a : {1.2, 1.5, 1.8}) {
        for (double big : {33.0, 40.0, 55.0}) {
            const double x = std::pow(big, a);
            const double ref = oracles::ml_series_ref(a, 1.0, -x);
            CHECK(std::abs(ml1({a, 1.0}, -x).value - ref) <= 1e-11);
        }
    }
}

TEST_CASE("ml bound and discrete complete monotonicity") {
    auto xs = log_spaced(1e-6, 1e6, 200);
    for (double a : {0.25, 0.5, 0.75, 1.0}) {
        std::vector<double> v(xs.size());
        for (std::size_t i = 0; i < xs.size(); ++i) {
            v[i] = ml1({a, 1.0}, -xs[i]).value;
            CHECK(v[i] > 0.0);
            CHECK(v[i] <= ml_upper_bound(a, xs[i]) + 1e-10);
        }
        for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
            const double d1 = (v[i + 1] - v[i]) / (xs[i + 1] - xs[i]);
            CHECK(d1 <= 1e-8);
        }
        for (std::size_t i = 0; i + 2 < xs.size(); ++i) {
            const double d1a = (v[i + 1] - v[i]) / (xs[i + 1] - xs[i]);
            const double d1b = (v[i + 2] - v[i + 1]) / (xs[i + 2] - xs[i + 1]);
            const double d2 = (d1b - d1a) / (xs[i + 2] - xs[i]);
            CHECK(d2 >= -1e-8);
        }
    }
}

TEST_CASE("ml upper bound values and domain") {
    CHECK(ml_upper_bound(1.0, 0.0) == 1.0);
    CHECK(ml_upper_bound(0.5, 1.0) ==
          doctest::Approx(1.0 / (1.0 + 1.0 / oracles::gamma_ref(1.5))).epsilon(1e-13));
    CHECK_THROWS_AS(ml_upper_bound(1.5, 1.0), InvalidParameter);
    CHECK_THROWS_AS(ml_upper_bound(0.5, -1.0), InvalidParameter);
    // inequality sweep at alpha = 0.7 up to 1e3
    for (double x : log_spaced(1e-3, 1e3, 60)) {
        CHECK(ml1({0.7, 1.0}, -x).value <= ml_upper_bound(0.7, x) + 1e-10);
    }
}

TEST_CASE("ml derivative identity by central differences") {
    for (double a : {1.2, 1.5, 1.9}) {
        for (double mu : {0.1, 1.0, 10.0}) {
            for (double t : {0.1, 0.4, 1.0, 3.1, 10.0}) {
                const double h = t * 1e-5;
                const double fp = ml1({a, 1.0}, -mu * std::pow(t + h, a)).value;
                const double fm = ml1({a, 1.0}, -mu * std::pow(t - h, a)).value;
                const double numeric = (fp - fm) / (2.0 * h);
                const double analytic =
                    -mu * std::pow(t, a - 1.0) * ml2({a, a}, -mu * std::pow(t, a)).value;
                const double scale = std::max(std::abs(analytic), 1e-8);
                CHECK(std::abs(numeric - analytic) <= 1e-6 * scale + 1e-9);
            }
        }
    }
}

TEST_CASE("ml rho-shift identity ties the regimes together") {
    // E_{a,r}(z) = 1/Gamma(r) + z E_{a,r+a}(z); the right side amplifies the
    // shifted evaluation's error by |z|
    for (double a : {0.4, 0.8, 1.3, 1.9}) {
        for (double x : {0.5, 3.0, 20.0, 300.0}) {
            const double lhs = ml2({a, 1.0}, -x).value;
            const double rhs = 1.0 - x * ml2({a, 1.0 + a}, -x).value;
            CHECK(std::abs(lhs - rhs) <= 1e-11 * (1.0 + x));
        }
    }
}

TEST_CASE("ml parameter errors") {
    CHECK_THROWS_AS(ml1({0.0, 1.0}, 1.0), InvalidParameter);
    CHECK_THROWS_AS(ml1({-0.5, 1.0}, 1.0), InvalidParameter);
    CHECK_THROWS_AS(ml1({0.5, 2.0}, 1.0), InvalidParameter);
    CHECK_THROWS_AS(ml2({0.7, 1.0}, std::nan("")), InvalidParameter);
}

TEST_CASE("ml_multi reductions and oracle agreement") {
    // all-zero arguments: only the zero multi-index survives
    CHECK(ml_multi({{0.4, 0.9}, 1.7}, {0.0, 0.0}, 1e-12).value ==
          doctest::Approx(1.0 / oracles::gamma_ref(1.7)).epsilon(1e-13));

    // m = 1 reduction to the two-parameter function, seeded sweep
    std::uint64_t state = 12345;
    auto next_u = [&state]() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<double>(state >> 11) * 0x1.0p-53;
    };
    for (int i = 0; i < 25; ++i) {
        const double a = 0.2 + 1.6 * next_u();
        const double lam = 0.5 + 1.5 * next_u();
        const double w = -3.0 + 4.0 * next_u();
        const double tol = 1e-10;
        const double lhs = ml_multi({{a}, lam}, {w}, tol).value;
        const double rhs = ml2({a, lam}, w, {}).value;
        CHECK(std::abs(lhs - rhs) <= 2.0 * tol + 1e-12 * std::abs(rhs));
    }

    // pinned two-variable case against the brute-force double sum
    {
        const double ref = oracles::ml_multi_bruteforce({0.3, 0.5}, 1.0, {-0.2, -0.4}, 400);
        CHECK(std::abs(ml_multi({{0.3, 0.5}, 1.0}, {-0.2, -0.4}, 1e-10).value - ref) <= 1e-10);
    }

    // non-commensurate alphas take the composition path
    {
        const double irr = M_PI / 4.0;
        const double ref = oracles::ml_multi_bruteforce({irr, 0.5}, 1.2, {-0.3, 0.2}, 200);
        CHECK(std::abs(ml_multi({{irr, 0.5}, 1.2}, {-0.3, 0.2}, 1e-10).value - ref) <= 1e-9);
    }

    // three variables near the unit box; the degree-ordered brute force is
    // only feasible for small sum|w| (its per-degree sums all share one sign,
    // so the tail closes slowly). Larger heat-slot arguments are covered by
    // the Laplace-inversion oracle in the propagator tests.
    {
        const double ref = oracles::ml_multi_bruteforce({0.4, 0.7, 1.0}, 1.0, {-0.8, -0.6, -0.9}, 200);
        CHECK(std::abs(ml_multi({{0.4, 0.7, 1.0}, 1.0}, {-0.8, -0.6, -0.9}, 1e-9).value - ref) <= 1e-8);
    }

    // very large heat-slot argument: m = 1 reduction against the asymptotic path
    {
        const double tol = 1e-10;
        const double lhs = ml_multi({{1.0}, 1.0}, {-120.0}, tol).value;
        const double rhs = ml2({1.0, 1.0}, -120.0).value;
        CHECK(std::abs(lhs - rhs) <= 2.0 * tol);
    }

    CHECK_THROWS_AS(ml_multi({{0.4}, 1.0}, {0.1, 0.2}, 1e-10), InvalidParameter);
    CHECK_THROWS_AS(ml_multi({{}, 1.0}, {}, 1e-10), InvalidParameter);
    CHECK_THROWS_AS(ml_multi({{0.4}, 1.0}, {0.1}, -1.0), InvalidParameter);
}
