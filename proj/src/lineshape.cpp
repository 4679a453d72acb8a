// lineshape.cpp — Correlation-function grid, trapezoid transform and FFT spectrum

#include "gaplaw/lineshape.hpp"

#include <fftw3.h>

#include <algorithm>
#include <array>
#include <bit>
#include <limits>
#include <cmath>
#include <cstdio>
#include <string>
#include <mutex>
#include <numbers>

#include "gaplaw/errors.hpp"

namespace gaplaw {

namespace {

constexpr double pi = std::numbers::pi;

std::complex<double> g_high(const HighFreqMode& high, double kT, double t) {
    if (high.g2_h == 0.0) return {0.0, 0.0};
    const double x = high.omega_h * t;
    const double half = std::sin(0.5 * x);
    const double coth = 1.0 / std::tanh(0.5 * high.omega_h / kT);
    return {high.g2_h * coth * 2.0 * half * half, high.g2_h * std::sin(x)};
}

std::mutex& fftw_planner_mutex() {
    static std::mutex m;
    return m;
}

bool has_low_damping(const SpectralModel& model) {
    if (const auto* o = std::get_if<OhmicDensity>(&model.low())) return o->eta_l > 0.0;
    return true;
}

}  // namespace

LineshapeGrid LineshapeGrid::defaults_for(const SpectralModel& model) {
    LineshapeGrid grid;
    grid.t_max = std::max(50.0 / low_frequency_scale(model), 200.0 / model.high().omega_h);
    return grid;
}

void LineshapeGrid::validate() const {
    if (!(t_max > 0.0) || !std::isfinite(t_max)) throw InputError("lineshape grid: t_max must be > 0");
    if (n_points < (1u << 10) || !std::has_single_bit(n_points))
        throw InputError("lineshape grid: n_points must be a power of two >= 1024");
    if (!(tail_tol > 0.0 && tail_tol < 1.0)) throw InputError("lineshape grid: tail_tol must lie in (0, 1)");
    if (!(broadening >= 0.0) || !std::isfinite(broadening))
        throw InputError("lineshape grid: broadening must be >= 0");
}

LowModes build_low_modes(const Bath& bath, double t_max) {
    const auto& model = bath.model();
    const double kT = bath.kT();
    const double cap = t_max > 0.0 ? 4.0 * pi / t_max : std::numeric_limits<double>::infinity();
    const auto panels = low_panels(model, kT, {0.0, cap});
    const auto rule = quad::composite_rule(panels);

    LowModes modes;
    modes.omega.reserve(rule.nodes.size());
    modes.re_weight.reserve(rule.nodes.size());
    modes.im_weight.reserve(rule.nodes.size());
    for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
        const double w = rule.nodes[k];
        const double j = j_low_at(model, w);
        if (j == 0.0) continue;
        const double base = rule.weights[k] * j / (pi * w * w);
        modes.omega.push_back(w);
        modes.re_weight.push_back(base / std::tanh(0.5 * w / kT));
        modes.im_weight.push_back(base);
    }
    return modes;
}

std::complex<double> g_function(const Bath& bath, double t) {
    if (!std::isfinite(t)) throw InputError("g_function: t must be finite");
    if (t == 0.0) return {0.0, 0.0};
    const auto modes = build_low_modes(bath, std::abs(t));
    // samples at j * dt for j = 0, 1; the second one is g_low(t)
    std::array<std::complex<double>, 2> samples{};
    kernels::fill_g_low(modes, t, samples, Exec::serial);
    return samples[1] + g_high(bath.model().high(), bath.kT(), t);
}

CorrelationTable CorrelationTable::build(const Bath& bath, const LineshapeGrid& grid, Exec exec) {
    grid.validate();
    if (grid.broadening == 0.0 && !has_low_damping(bath.model()))
        throw InputError(
            "correlation function does not decay without a low-frequency density; "
            "supply an artificial broadening");

    LineshapeGrid trial = grid;
    double tail = 0.0;
    for (int attempt = 0; attempt < 3; ++attempt) {
        const std::size_t m = trial.n_points / 2;
        const double dt = trial.dt();
        std::vector<std::complex<double>> g(m + 1);
        kernels::fill_g_low(build_low_modes(bath, trial.t_max), dt, g, exec);

        CorrelationTable table;
        table.values_.resize(m + 1);
        for (std::size_t j = 0; j <= m; ++j) {
            const double t = static_cast<double>(j) * dt;
            const std::complex<double> total = g[j] + g_high(bath.model().high(), bath.kT(), t) +
                                               std::complex<double>(trial.broadening * t, 0.0);
            if (!std::isfinite(total.real()) || !std::isfinite(total.imag()))
                throw InputError("NaN or infinity in the correlation exponent; check bath parameters");
            table.values_[j] = std::exp(-total);
        }
        tail = 0.0;
        for (std::size_t j = m - m / 20; j <= m; ++j) tail = std::max(tail, std::abs(table.values_[j]));
        if (tail <= trial.tail_tol) {
            table.grid_ = trial;
            table.tail_ = tail;
            return table;
        }
        trial.t_max *= 2.0;
        trial.n_points *= 2;
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", tail);
    throw NumericalError(std::string("correlation function has not decayed at t_max (|c| = ") + buf +
                         "); increase t_max or add Ohmic damping");
}

std::vector<double> CorrelationTable::rates(std::span<const double> gaps, double j_coupling, Exec exec) const {
    std::vector<double> out(gaps.size());
    kernels::trapezoid_transform(values_, dt(), gaps, out, exec);
    const double j2 = j_coupling * j_coupling;
    for (auto& k : out) k *= j2;
    return out;
}

double fgr_rate_exact(const RateQuery& query, const LineshapeGrid& grid) {
    if (!std::isfinite(query.delta_e) || !std::isfinite(query.j_coupling))
        throw InputError("rate query: non-finite energy gap or coupling");
    if (query.j_coupling == 0.0) return 0.0;
    const auto table = CorrelationTable::build(query.bath, grid);
    const double gap = query.delta_e;
    return table.rates(std::span<const double>(&gap, 1), query.j_coupling)[0];
}

std::vector<double> fgr_sweep(std::span<const double> gaps, double j_coupling, const Bath& bath,
                              const LineshapeGrid& grid, Exec exec) {
    if (gaps.empty()) return {};
    const auto table = CorrelationTable::build(bath, grid, exec);
    return table.rates(gaps, j_coupling, exec);
}

Spectrum fgr_spectrum(double j_coupling, const Bath& bath, const LineshapeGrid& grid) {
    const auto table = CorrelationTable::build(bath, grid);
    const auto c = table.values();
    const std::size_t n = table.grid().n_points;
    const std::size_t m = n / 2;
    const double dt = table.dt();

    auto* buf = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * n));
    fftw_plan plan;
    {
        // the FFTW planner is not re-entrant
        std::lock_guard<std::mutex> lock(fftw_planner_mutex());
        plan = fftw_plan_dft_1d(static_cast<int>(n), buf, buf, FFTW_BACKWARD, FFTW_ESTIMATE);
    }
    for (std::size_t j = 0; j < n; ++j) {
        const std::complex<double> v = j < m ? c[j] : std::conj(c[n - j]);
        buf[j][0] = v.real();
        buf[j][1] = v.imag();
    }
    fftw_execute(plan);

    Spectrum s;
    s.de_step = 2.0 * pi / (static_cast<double>(n) * dt);
    s.delta_e.resize(n);
    s.rate.resize(n);
    const double scale = j_coupling * j_coupling * dt;
    for (std::size_t i = 0; i < n; ++i) {
        // ascending order: index m <-> dE = 0
        const std::size_t src = (i + m) % n;
        const double idx = static_cast<double>(static_cast<std::ptrdiff_t>(i) - static_cast<std::ptrdiff_t>(m));
        s.delta_e[i] = idx * s.de_step;
        s.rate[i] = scale * buf[src][0];
    }
    {
        std::lock_guard<std::mutex> lock(fftw_planner_mutex());
        fftw_destroy_plan(plan);
    }
    fftw_free(buf);
    return s;
}

double kappa_dimensionless(double k, double j_coupling, double kT, double lambda_total) {
    if (!(lambda_total > 0.0)) throw InputError("kappa undefined: total reorganization energy is zero");
    if (j_coupling == 0.0) throw InputError("kappa undefined: electronic coupling is zero");
    return k * std::sqrt(kT * lambda_total) / (std::sqrt(pi) * j_coupling * j_coupling);
}

double kappa_dimensionless(double k, double j_coupling, const Bath& bath) {
    return kappa_dimensionless(k, j_coupling, bath.kT(), lambda_total(bath.model()));
}

}  // namespace gaplaw
