// kernels.hpp — Data-parallel inner loops of the exact rate
//
// Every kernel has a serial reference version (direct sin/cos per element) and
// a fast version (blocked phase recurrence, OpenMP over independent blocks).
// The fast version's output does not depend on the thread count.

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace gaplaw {

enum class Exec { serial, parallel };

// Discrete representation of the low-frequency bath: quadrature nodes with
// weights already folded in, so that
//   g_low(t) = sum_k re_weight[k] (1 - cos w_k t) + i im_weight[k] sin w_k t.
struct LowModes {
    std::vector<double> omega;
    std::vector<double> re_weight;
    std::vector<double> im_weight;
};

namespace kernels {

// out[j] = g_low(j * dt)
void fill_g_low(const LowModes& modes, double dt, std::span<std::complex<double>> out, Exec exec);

// Trapezoid over [-t_max, t_max] of exp(i E t) c(t), using c(-t) = conj c(t).
// c[j] = c(j * dt), j = 0..M with c[M] at t_max. Writes the real integral per gap.
void trapezoid_transform(std::span<const std::complex<double>> c, double dt, std::span<const double> gaps,
                         std::span<double> out, Exec exec);

// Number of steps between exact re-seeding of the phase recurrence.
inline constexpr std::size_t block = 64;

}  // namespace kernels
}  // namespace gaplaw
