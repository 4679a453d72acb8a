// spectral.hpp — Spectral densities of the harmonic bath and their reorganization energies
//
// Units: hbar = 1. Energies, frequencies and kT are in cm^-1; times in (cm^-1)^-1.
// The full density is J(w) = pi g2_h w_h^2 delta(w - w_h) + J_l(w).

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "gaplaw/quadrature.hpp"

namespace gaplaw {

struct HighFreqMode {
    double omega_h = 0.0;  // cm^-1
    double g2_h = 0.0;     // dimensionless squared displacement
};

// J_l(w) = pi eta_l w exp(-w / omega_l)
struct OhmicDensity {
    double eta_l = 0.0;
    double omega_l = 0.0;  // cutoff, cm^-1
};

// Piecewise-linear J_l sampled on a strictly ascending grid; zero outside it.
class TabulatedDensity {
public:
    explicit TabulatedDensity(std::vector<std::pair<double, double>> points);

    double operator()(double omega) const noexcept;

    std::span<const double> omegas() const noexcept { return omega_; }
    std::span<const double> values() const noexcept { return value_; }
    double omega_min() const noexcept { return omega_.front(); }
    double omega_max() const noexcept { return omega_.back(); }

private:
    std::vector<double> omega_;
    std::vector<double> value_;
};

using LowFreqDensity = std::variant<OhmicDensity, TabulatedDensity>;

class SpectralModel {
public:
    SpectralModel(HighFreqMode high, LowFreqDensity low);

    const HighFreqMode& high() const noexcept { return high_; }
    const LowFreqDensity& low() const noexcept { return low_; }
    bool is_ohmic() const noexcept { return std::holds_alternative<OhmicDensity>(low_); }
    const OhmicDensity& ohmic() const;  // throws InputError for tabulated models

    // Non-fatal validation notes (e.g. omega_l >= omega_h).
    const std::vector<std::string>& warnings() const noexcept { return warnings_; }

private:
    HighFreqMode high_;
    LowFreqDensity low_;
    std::vector<std::string> warnings_;
};

class Bath {
public:
    Bath(SpectralModel model, double kT);

    const SpectralModel& model() const noexcept { return model_; }
    double kT() const noexcept { return kT_; }

private:
    SpectralModel model_;
    double kT_;
};

struct ReorgSet {
    double lambda_h = 0.0;
    double lambda_l = 0.0;
    double lambda_total = 0.0;
    double lambda_qc = 0.0;  // coth-weighted
    double lambda_qs = 0.0;  // 1/sinh-weighted
    double lambda_qt = 0.0;  // tanh-weighted
};

double lambda_h(const SpectralModel& model);
double lambda_l(const SpectralModel& model);
double lambda_total(const SpectralModel& model);
ReorgSet reorg_set(const Bath& bath);

// lambda_h / (lambda_h + lambda_l); equals 2 lambda_h / E_st.
double gamma_ratio(const SpectralModel& model);
double stokes_shift(const SpectralModel& model);

double j_low_at(const SpectralModel& model, double omega);

// log J_l(omega); -inf where the density vanishes.
double log_j_low(const SpectralModel& model, double omega);

// Frequency that characterizes the low part: omega_l for Ohmic, the ratio
// (int J_l) / (int J_l / w) for tabulated data.
double low_frequency_scale(const SpectralModel& model);

// Upper edge of the imaginary-time strip where low-frequency integrals with
// exp(w tau) weights converge: 1/omega_l (Ohmic) or +inf (tabulated support).
double tau_upper_limit(const SpectralModel& model);

// Frequency panels covering the support of J_l for integrands that decay at
// least as exp(-decay * w). Upper edge is 40/decay for Ohmic densities.
struct PanelSpec {
    double decay;      // exponential decay rate of the integrand, (cm^-1)^-1
    double max_width;  // panel width cap, cm^-1
};

std::vector<quad::Panel> low_panels(const SpectralModel& model, double kT, const PanelSpec& spec);

}  // namespace gaplaw
