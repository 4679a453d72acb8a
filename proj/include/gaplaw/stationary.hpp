// stationary.hpp — Imaginary-time stationary point and the saddle-point functions D and G
//
// With tau = -i t the stationary condition reads
//   dE = (1/pi) int dw J(w)/w sinh(w(beta/2 + tau)) / sinh(w beta/2)  =: rhs(tau)
// and the saddle-point rate uses
//   D(i tau) = (1/pi) int dw J(w) [coth(w beta/2) cosh(w tau) + sinh(w tau)]     = d rhs / d tau
//   G(tau)   = (1/pi) int dw J(w)/w^2 [coth(w beta/2)(cosh(w tau) - 1) + sinh(w tau)]

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gaplaw/spectral.hpp"

namespace gaplaw {

enum class StationaryMethod { exact_root, tau0, geg_min, tau0_corrected };

std::string_view to_string(StationaryMethod m);

// Which candidate of the Min rule produced tau_s.
enum class GegBranch { high_mode, low_mode, tie };

std::string_view to_string(GegBranch b);

struct GegCandidates {
    double high_mode;  // (1/w_h) ln(dE / lambda_h)
    double low_mode;   // (1/w_l) (1 - lambda_l / dE)
    GegBranch chosen;
};

struct StationaryPoint {
    double tau_s = 0.0;
    StationaryMethod method = StationaryMethod::exact_root;
    // |rhs(tau_s) - dE| / dE; NaN when no bath temperature was available,
    // +inf when tau_s lies outside the convergence strip.
    double residual = 0.0;
    std::optional<GegCandidates> candidates;
    std::vector<std::string> warnings;
};

struct DGValues {
    double d = 0.0;  // D(i tau), cm^-2
    double g = 0.0;  // G(tau), dimensionless
};

// Open interval of tau on which the frequency integrals converge.
struct Strip {
    double lower;
    double upper;
    bool contains(double tau) const noexcept { return tau > lower && tau < upper; }
};

Strip convergence_strip(const Bath& bath);

double rhs_stationary(const Bath& bath, double tau);
double stationary_residual(const Bath& bath, double delta_e, double tau);

StationaryPoint tau_s_exact(double delta_e, const Bath& bath);
StationaryPoint tau_s_zero(double delta_e, const SpectralModel& model);
StationaryPoint tau_s_zero(double delta_e, const Bath& bath);
StationaryPoint tau_s_geg(double delta_e, const SpectralModel& model);
StationaryPoint tau_s_geg(double delta_e, const Bath& bath);
StationaryPoint tau_s_corrected(double delta_e, const Bath& bath);

// coth(x/2) ~ 1 + 2 e^{-x} + 2 e^{-2x} + (2/x) e^{-5x/2}
double coth_approx(double x);

DGValues dg_numeric(const Bath& bath, double tau);

// Closed forms obtained by integrating the coth_approx expansion against the
// Ohmic density; the high-frequency parts keep coth exact.
DGValues dg_closed_geg(const SpectralModel& model, double kT, double tau);

}  // namespace gaplaw
