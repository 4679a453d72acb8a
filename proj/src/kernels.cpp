// kernels.cpp — Serial reference and OpenMP versions of the time-grid loops

#include "gaplaw/kernels.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace gaplaw::kernels {

namespace {

inline double one_minus_cos(double c, double s) { return c > 0.0 ? s * s / (1.0 + c) : 1.0 - c; }

void fill_g_low_serial(const LowModes& modes, double dt, std::span<std::complex<double>> out) {
    const std::size_t n_modes = modes.omega.size();
    for (std::size_t j = 0; j < out.size(); ++j) {
        const double t = static_cast<double>(j) * dt;
        double re = 0.0;
        double im = 0.0;
        for (std::size_t k = 0; k < n_modes; ++k) {
            const double x = modes.omega[k] * t;
            const double c = std::cos(x);
            const double s = std::sin(x);
            re += modes.re_weight[k] * one_minus_cos(c, s);
            im += modes.im_weight[k] * s;
        }
        out[j] = {re, im};
    }
}

void fill_g_low_blocked(const LowModes& modes, double dt, std::span<std::complex<double>> out) {
    const std::size_t n = out.size();
    const std::size_t n_modes = modes.omega.size();
    const std::size_t n_blocks = (n + block - 1) / block;

    std::vector<double> step_c(n_modes), step_s(n_modes);
    for (std::size_t k = 0; k < n_modes; ++k) {
        step_c[k] = std::cos(modes.omega[k] * dt);
        step_s[k] = std::sin(modes.omega[k] * dt);
    }

#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t b = 0; b < static_cast<std::ptrdiff_t>(n_blocks); ++b) {
        const std::size_t j0 = static_cast<std::size_t>(b) * block;
        const std::size_t len = std::min(block, n - j0);
        std::array<double, block> re{};
        std::array<double, block> im{};
        const double t0 = static_cast<double>(j0) * dt;
        for (std::size_t k = 0; k < n_modes; ++k) {
            double c = std::cos(modes.omega[k] * t0);
            double s = std::sin(modes.omega[k] * t0);
            const double rc = step_c[k];
            const double rs = step_s[k];
            const double wr = modes.re_weight[k];
            const double wi = modes.im_weight[k];
            for (std::size_t i = 0; i < len; ++i) {
                re[i] += wr * one_minus_cos(c, s);
                im[i] += wi * s;
                const double cn = c * rc - s * rs;
                s = s * rc + c * rs;
                c = cn;
            }
        }
        for (std::size_t i = 0; i < len; ++i) out[j0 + i] = {re[i], im[i]};
    }
}

double trapezoid_one_serial(std::span<const std::complex<double>> c, double dt, double e) {
    const std::size_t last = c.size() - 1;
    long double sum = c[0].real();
    for (std::size_t j = 1; j <= last; ++j) {
        const double x = e * static_cast<double>(j) * dt;
        const double term = std::cos(x) * c[j].real() - std::sin(x) * c[j].imag();
        sum += (j == last ? 1.0L : 2.0L) * term;
    }
    return static_cast<double>(sum) * dt;
}

double trapezoid_one_blocked(std::span<const std::complex<double>> c, double dt, double e) {
    const std::size_t n = c.size();
    const std::size_t last = n - 1;
    const double rc = std::cos(e * dt);
    const double rs = std::sin(e * dt);
    long double sum = 0.0L;
    for (std::size_t j0 = 0; j0 < n; j0 += block) {
        const std::size_t len = std::min(block, n - j0);
        const double x0 = e * static_cast<double>(j0) * dt;
        double pc = std::cos(x0);
        double ps = std::sin(x0);
        long double part = 0.0L;
        for (std::size_t i = 0; i < len; ++i) {
            const std::size_t j = j0 + i;
            const double term = pc * c[j].real() - ps * c[j].imag();
            part += (j == 0 || j == last ? 1.0L : 2.0L) * term;
            const double pn = pc * rc - ps * rs;
            ps = ps * rc + pc * rs;
            pc = pn;
        }
        sum += part;
    }
    return static_cast<double>(sum) * dt;
}

}  // namespace

void fill_g_low(const LowModes& modes, double dt, std::span<std::complex<double>> out, Exec exec) {
    if (exec == Exec::serial)
        fill_g_low_serial(modes, dt, out);
    else
        fill_g_low_blocked(modes, dt, out);
}

void trapezoid_transform(std::span<const std::complex<double>> c, double dt, std::span<const double> gaps,
                         std::span<double> out, Exec exec) {
    if (c.empty()) return;
    if (exec == Exec::serial) {
        for (std::size_t g = 0; g < gaps.size(); ++g) out[g] = trapezoid_one_serial(c, dt, gaps[g]);
        return;
    }
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t g = 0; g < static_cast<std::ptrdiff_t>(gaps.size()); ++g)
        out[static_cast<std::size_t>(g)] = trapezoid_one_blocked(c, dt, gaps[static_cast<std::size_t>(g)]);
}

}  // namespace gaplaw::kernels
