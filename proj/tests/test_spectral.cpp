// test_spectral.cpp — Spectral densities, reorganization energies, validation

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/special_functions/trigamma.hpp>

#include <cmath>
#include <numbers>

#include "doctest.h"
#include "gaplaw/errors.hpp"
#include "gaplaw/spectral.hpp"

using namespace gaplaw;
constexpr double pi = std::numbers::pi;

namespace {

SpectralModel case_i() { return SpectralModel(HighFreqMode{1000.0, 0.1}, OhmicDensity{1.0, 200.0}); }

}  // namespace

TEST_CASE("reorganization energies of the two components") {
    const auto m = case_i();
    CHECK(lambda_h(m) == 100.0);
    CHECK(lambda_l(m) == 200.0);
    CHECK(lambda_total(m) == 300.0);
    CHECK(stokes_shift(m) == 600.0);
    CHECK(gamma_ratio(m) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    const SpectralModel iii(HighFreqMode{2000.0, 0.1}, OhmicDensity{1.0, 200.0});
    CHECK(gamma_ratio(iii) == 0.5);
}

TEST_CASE("Ohmic density values") {
    const auto m = case_i();
    CHECK(j_low_at(m, 0.0) == 0.0);
    CHECK(j_low_at(m, 200.0) == doctest::Approx(pi * 200.0 * std::exp(-1.0)));
    CHECK(std::exp(log_j_low(m, 300.0)) == doctest::Approx(j_low_at(m, 300.0)).epsilon(1e-14));
}

TEST_CASE("lambda_l by quadrature on a tabulated Ohmic density") {
    std::vector<std::pair<double, double>> pts;
    for (int i = 1; i <= 4000; ++i) {
        const double w = 2.0 * i;
        pts.emplace_back(w, pi * w * std::exp(-w / 200.0));
    }
    const SpectralModel m(HighFreqMode{1000.0, 0.1}, TabulatedDensity(pts));
    // the table starts at w = 2, so lambda_l = eta * w_c * exp(-2 / w_c); the tail beyond 8000 is negligible
    CHECK(lambda_l(m) == doctest::Approx(200.0 * std::exp(-0.01)).epsilon(1e-4));
    CHECK(tau_upper_limit(m) == std::numeric_limits<double>::infinity());
    CHECK_THROWS_AS(m.ohmic(), InputError);
}

TEST_CASE("quantum reorganization energies match digamma-series oracles") {
    // Ohmic low parts in closed form:
    //   lambda_qc,l = eta/(2kT) [w_l^2 + 2 kT^2 psi1(1 + kT/w_l)]
    //   lambda_qs,l = eta kT psi1(kT/w_l + 1/2)
    for (double ratio : {0.3, 0.5, 1.0, 3.0}) {
        const double wl = 200.0, kT = ratio * wl, eta = 1.7, wh = 1300.0, g2 = 0.3;
        const Bath bath(SpectralModel(HighFreqMode{wh, g2}, OhmicDensity{eta, wl}), kT);
        const auto r = reorg_set(bath);
        const double x = wh / (2.0 * kT);
        const double lh = g2 * wh;
        const double qc = lh * x / std::tanh(x) +
                          eta / (2.0 * kT) * (wl * wl + 2.0 * kT * kT * boost::math::trigamma(1.0 + kT / wl));
        const double qs = lh * x / std::sinh(x) + eta * kT * boost::math::trigamma(kT / wl + 0.5);
        CHECK(r.lambda_qc == doctest::Approx(qc).epsilon(1e-11));
        CHECK(r.lambda_qs == doctest::Approx(qs).epsilon(1e-11));

        // lambda_qt low part by an independent double-exponential quadrature
        boost::math::quadrature::exp_sinh<double> es;
        const double qt_low = 4.0 * kT * eta *
                              es.integrate([&](double w) { return std::exp(-w / wl) / w * std::tanh(w / (4.0 * kT)); });
        const double qt = lh * (4.0 * kT / wh) * std::tanh(wh / (4.0 * kT)) + qt_low;
        CHECK(r.lambda_qt == doctest::Approx(qt).epsilon(1e-9));
    }
}

TEST_CASE("quantum reorganization energies reach lambda in the classical limit") {
    const Bath hot(case_i(), 1e6);
    const auto r = reorg_set(hot);
    CHECK(r.lambda_qc == doctest::Approx(300.0).epsilon(1e-6));
    CHECK(r.lambda_qs == doctest::Approx(300.0).epsilon(1e-6));
    CHECK(r.lambda_qt == doctest::Approx(300.0).epsilon(1e-6));
}

TEST_CASE("validation of model parameters") {
    CHECK_THROWS_AS(SpectralModel(HighFreqMode{0.0, 0.1}, OhmicDensity{1.0, 200.0}), InputError);
    CHECK_THROWS_AS(SpectralModel(HighFreqMode{1000.0, -0.1}, OhmicDensity{1.0, 200.0}), InputError);
    CHECK_THROWS_AS(SpectralModel(HighFreqMode{1000.0, 0.1}, OhmicDensity{-1.0, 200.0}), InputError);
    CHECK_THROWS_AS(SpectralModel(HighFreqMode{1000.0, 0.1}, OhmicDensity{1.0, 0.0}), InputError);
    CHECK_THROWS_AS(SpectralModel(HighFreqMode{NAN, 0.1}, OhmicDensity{1.0, 200.0}), InputError);
    CHECK_THROWS_AS(Bath(case_i(), 0.0), InputError);
    CHECK_THROWS_AS(TabulatedDensity({{1.0, 1.0}}), InputError);
    CHECK_THROWS_AS(TabulatedDensity({{2.0, 1.0}, {1.0, 1.0}}), InputError);
    CHECK_THROWS_AS(TabulatedDensity({{1.0, 1.0}, {1.0, 1.0}}), InputError);
    CHECK_THROWS_AS(TabulatedDensity({{0.0, 1.0}, {1.0, 1.0}}), InputError);
    CHECK_THROWS_AS(TabulatedDensity({{1.0, -1.0}, {2.0, 1.0}}), InputError);
    CHECK_THROWS_AS(TabulatedDensity({{1.0, INFINITY}, {2.0, 1.0}}), InputError);
    const SpectralModel zero(HighFreqMode{1000.0, 0.0}, OhmicDensity{0.0, 200.0});
    CHECK_THROWS_AS(gamma_ratio(zero), InputError);
}

TEST_CASE("omega_l >= omega_h is a warning, not an error") {
    const SpectralModel ok = case_i();
    CHECK(ok.warnings().empty());
    const SpectralModel inverted(HighFreqMode{100.0, 0.1}, OhmicDensity{1.0, 200.0});
    CHECK(inverted.warnings().size() == 1);
}

TEST_CASE("tabulated density interpolates linearly and vanishes outside") {
    const TabulatedDensity t({{1.0, 2.0}, {3.0, 6.0}});
    CHECK(t(0.5) == 0.0);
    CHECK(t(2.0) == doctest::Approx(4.0));
    CHECK(t(3.5) == 0.0);
}
