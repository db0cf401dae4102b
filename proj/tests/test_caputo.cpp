#include "doctest.h"

#include <cmath>
#include <complex>

#include "mlspectral/errors.hpp"
#include "mlspectral/gamma.hpp"
#include "mlspectral/mittag_leffler.hpp"
#include "mlspectral/time_fractional.hpp"

using namespace mlspectral;

namespace {

TimeSeries sample(const TimeGrid& grid, double (*fn)(double)) {
    TimeSeries s;
    s.grid = grid;
    s.values.reserve(grid.size());
    for (double t : grid.nodes) s.values.push_back({fn(t), 0.0});
    return s;
}

TimeSeries sample_ml_mode(const TimeGrid& grid, double alpha, double mu) {
    TimeSeries s;
    s.grid = grid;
    s.values.reserve(grid.size());
    for (double t : grid.nodes) {
        s.values.push_back({ml1({alpha, 1.0}, -mu * std::pow(t, alpha)).value, 0.0});
    }
    return s;
}

double max_err(const TimeSeries& got, double (*ref)(double), double t_min = 0.0) {
    double worst = 0.0;
    for (std::size_t i = 0; i < got.grid.size(); ++i) {
        const double t = got.grid.nodes[i];
        if (t < t_min) continue;
        worst = std::max(worst, std::abs(got.values[i] - std::complex<double>{ref(t), 0.0}));
    }
    return worst;
}

}  // namespace

TEST_CASE("grid construction and validation") {
    auto g = TimeGrid::uniform(5.0, 11);
    CHECK(g.nodes.front() == 0.0);
    CHECK(g.nodes.back() == doctest::Approx(5.0));
    auto gg = TimeGrid::graded(5.0, 11, 3.0);
    CHECK(gg.nodes[1] == doctest::Approx(5.0 * std::pow(0.1, 3.0)));
    CHECK_THROWS_AS(TimeGrid::uniform(-1.0, 11), InvalidParameter);
    CHECK_THROWS_AS(TimeGrid::uniform(1.0, 2), InvalidParameter);
    CHECK_THROWS_AS(TimeGrid::graded(1.0, 11, 0.5), InvalidParameter);

    TimeSeries bad;
    bad.grid = g;
    bad.values.assign(3, {0.0, 0.0});
    CHECK_THROWS_AS(bad.validate(), InvalidParameter);
}

TEST_CASE("rl_integral power rules") {
    auto grid = TimeGrid::uniform(2.0, 201);
    auto one = sample(grid, [](double) { return 1.0; });
    auto ramp = sample(grid, [](double t) { return t; });

    auto i1 = rl_integral(1.0, one);
    CHECK(max_err(i1, [](double t) { return t; }) <= 1e-12);

    auto ih = rl_integral(0.5, one);
    CHECK(max_err(ih, [](double t) { return std::sqrt(t) / gamma_fn(1.5); }) <= 1e-12);

    auto i2 = rl_integral(1.0, ramp);
    CHECK(max_err(i2, [](double t) { return 0.5 * t * t; }) <= 1e-12);

    CHECK_THROWS_AS(rl_integral(0.0, one), InvalidParameter);
    CHECK_THROWS_AS(rl_integral(-0.3, one), InvalidParameter);
}

TEST_CASE("rl_integral semigroup property") {
    auto grid = TimeGrid::uniform(2.0, 401);
    auto f = sample(grid, [](double t) { return std::sin(t); });
    auto a = rl_integral(0.3, rl_integral(0.7, f));
    auto b = rl_integral(1.0, f);
    double worst = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        worst = std::max(worst, std::abs(a.values[i] - b.values[i]));
    }
    CHECK(worst <= 2e-5);

    // halving the step shrinks the defect at second order
    auto grid2 = TimeGrid::uniform(2.0, 801);
    auto f2 = sample(grid2, [](double t) { return std::sin(t); });
    auto a2 = rl_integral(0.3, rl_integral(0.7, f2));
    auto b2 = rl_integral(1.0, f2);
    double worst2 = 0.0;
    for (std::size_t i = 0; i < grid2.size(); ++i) {
        worst2 = std::max(worst2, std::abs(a2.values[i] - b2.values[i]));
    }
    CHECK(worst2 <= worst / 2.5);
}

TEST_CASE("caputo_l1 exact cases") {
    auto grid = TimeGrid::uniform(2.0, 301);
    auto constant = sample(grid, [](double) { return 3.7; });
    for (double alpha : {0.3, 0.5, 0.8}) {
        auto d = caputo_l1(alpha, constant);
        for (const auto& v : d.values) CHECK(std::abs(v) == 0.0);
    }
    auto ramp = sample(grid, [](double t) { return t; });
    auto d = caputo_l1(0.4, ramp);
    CHECK(max_err(d, [](double t) { return std::pow(t, 0.6) / gamma_fn(1.6); }) <= 1e-12);
    CHECK_THROWS_AS(caputo_l1(1.0, ramp), InvalidParameter);
    CHECK_THROWS_AS(caputo_l1(0.0, ramp), InvalidParameter);
}

TEST_CASE("caputo_l1 inverts rl_integral on smooth data") {
    auto grid = TimeGrid::uniform(2.0, 801);
    auto f = sample(grid, [](double t) { return std::sin(t); });
    const double alpha = 0.6;
    auto roundtrip = caputo_l1(alpha, rl_integral(alpha, f));
    double worst = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (grid.nodes[i] < 0.2) continue;
        worst = std::max(worst, std::abs(roundtrip.values[i] - f.values[i]));
    }
    CHECK(worst <= 5e-3);
}

TEST_CASE("caputo_l1_order2 exact and power cases") {
    auto grid = TimeGrid::uniform(2.0, 401);
    auto affine = sample(grid, [](double t) { return 2.0 - 3.0 * t; });
    auto d0 = caputo_l1_order2(1.5, affine, {-3.0, 0.0});
    for (const auto& v : d0.values) CHECK(std::abs(v) <= 1e-12);

    auto quad = sample(grid, [](double t) { return t * t; });
    auto d = caputo_l1_order2(1.5, quad, {0.0, 0.0});
    double worst = 0.0;
    for (std::size_t i = 1; i + 1 < grid.size(); ++i) {
        const double t = grid.nodes[i];
        if (t < 0.2) continue;
        worst = std::max(worst,
                         std::abs(d.values[i] - std::complex<double>{
                                                    2.0 * std::pow(t, 0.5) / gamma_fn(1.5), 0.0}));
    }
    CHECK(worst <= 2e-3);
    CHECK_THROWS_AS(caputo_l1_order2(1.0, quad, {0.0, 0.0}), InvalidParameter);
    CHECK_THROWS_AS(caputo_l1_order2(2.0, quad, {0.0, 0.0}), InvalidParameter);
}

TEST_CASE("residual_mode trivial and classical branches") {
    auto grid = TimeGrid::uniform(5.0, 101);
    // zero mode is constant in the heat case
    auto constant = sample(grid, [](double) { return 0.83; });
    CHECK(residual_mode(0.5, 0.0, constant) <= 1e-14);

    // alpha = 1: exact exponential mode
    TimeSeries expo;
    expo.grid = grid;
    for (double t : grid.nodes) expo.values.push_back({std::exp(-2.0 * t), 0.0});
    CHECK(residual_mode(1.0, 2.0, expo) <= 1e-10);
    // perturbed data is flagged
    expo.values[40] += 1e-3;
    CHECK(residual_mode(1.0, 2.0, expo) > 1e-4);
}

TEST_CASE("residual_mode heat eigenfunction converges at L1 order") {
    const double alpha = 0.5;
    const double mu = 4.0;
    auto coarse = sample_ml_mode(TimeGrid::uniform(5.0, 1001), alpha, mu);
    auto fine = sample_ml_mode(TimeGrid::uniform(5.0, 2001), alpha, mu);
    const double r1 = residual_mode(alpha, mu, coarse);
    const double r2 = residual_mode(alpha, mu, fine);
    const double order = std::log2(r1 / r2);
    CHECK(order >= 1.4);
}

TEST_CASE("residual_mode wave eigenfunction converges") {
    const double alpha = 1.5;
    const double mu = 2.0;
    auto coarse = sample_ml_mode(TimeGrid::uniform(5.0, 1001), alpha, mu);
    auto fine = sample_ml_mode(TimeGrid::uniform(5.0, 2001), alpha, mu);
    const double r1 = residual_mode(alpha, mu, coarse, {0.0, 0.0});
    const double r2 = residual_mode(alpha, mu, fine, {0.0, 0.0});
    CHECK(std::log2(r1 / r2) >= 0.8);
}
