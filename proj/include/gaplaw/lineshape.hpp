// lineshape.hpp — Exact Fermi golden rule rate from the harmonic-bath correlation function
//
//   k(dE) = J^2 int_{-inf}^{inf} dt exp(i dE t - g(t))
//   g(t)  = (1/pi) int dw J(w)/w^2 { coth(w/2kT)(1 - cos wt) + i sin wt }
//
// The low-frequency part of g is evaluated on a fixed set of frequency
// quadrature nodes built once per bath and grid, then the t-integral is a
// trapezoid sum on a uniform grid.

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "gaplaw/kernels.hpp"
#include "gaplaw/rate_query.hpp"
#include "gaplaw/spectral.hpp"

namespace gaplaw {

struct LineshapeGrid {
    double t_max = 0.0;               // (cm^-1)^-1
    std::size_t n_points = 1u << 16;  // points on [-t_max, t_max), power of two
    double tail_tol = 1e-8;           // |integrand| allowed near t_max
    double broadening = 0.0;          // optional Lorentzian HWHM (cm^-1), multiplies by exp(-G|t|)

    // t_max = max(50/omega_l, 200/omega_h), n = 2^16, tail_tol = 1e-8.
    static LineshapeGrid defaults_for(const SpectralModel& model);

    double dt() const noexcept { return 2.0 * t_max / static_cast<double>(n_points); }
    void validate() const;
};

std::complex<double> g_function(const Bath& bath, double t);

// Folds the low-frequency density into quadrature modes resolving cos(w t)
// for |t| <= t_max.
LowModes build_low_modes(const Bath& bath, double t_max);

// c(t_j) = exp(-g(t_j) - broadening |t_j|) for t_j = j dt, j = 0..n/2.
class CorrelationTable {
public:
    // Grows t_max (keeping dt) by up to 4x until the tail criterion holds.
    static CorrelationTable build(const Bath& bath, const LineshapeGrid& grid, Exec exec = Exec::parallel);

    const LineshapeGrid& grid() const noexcept { return grid_; }
    double dt() const noexcept { return grid_.dt(); }
    std::span<const std::complex<double>> values() const noexcept { return values_; }
    double tail_magnitude() const noexcept { return tail_; }

    // Trapezoid integral of exp(i dE t) c(t) over [-t_max, t_max], times J^2.
    std::vector<double> rates(std::span<const double> gaps, double j_coupling, Exec exec = Exec::parallel) const;

private:
    LineshapeGrid grid_;
    std::vector<std::complex<double>> values_;
    double tail_ = 0.0;
};

double fgr_rate_exact(const RateQuery& query, const LineshapeGrid& grid);

std::vector<double> fgr_sweep(std::span<const double> gaps, double j_coupling, const Bath& bath,
                              const LineshapeGrid& grid, Exec exec = Exec::parallel);

// Rate on the full FFT energy window, ascending in dE.
struct Spectrum {
    std::vector<double> delta_e;
    std::vector<double> rate;
    double de_step = 0.0;
};

Spectrum fgr_spectrum(double j_coupling, const Bath& bath, const LineshapeGrid& grid);

// kappa = k sqrt(kT lambda) / (sqrt(pi) J^2)
double kappa_dimensionless(double k, double j_coupling, const Bath& bath);
double kappa_dimensionless(double k, double j_coupling, double kT, double lambda_total);

}  // namespace gaplaw
