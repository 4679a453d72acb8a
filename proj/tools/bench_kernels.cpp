// bench_kernels.cpp — Serial reference versus OpenMP kernels for the exact rate

#include <omp.h>

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <vector>

#include "gaplaw/harness.hpp"
#include "gaplaw/kernels.hpp"
#include "gaplaw/lineshape.hpp"

namespace {

using clock_type = std::chrono::steady_clock;

template <class F>
double best_of(int reps, F&& f) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto t0 = clock_type::now();
        f();
        best = std::min(best, std::chrono::duration<double>(clock_type::now() - t0).count());
    }
    return best;
}

}  // namespace

int main(int argc, char** argv) {
    using namespace gaplaw;
    const char* case_name = argc > 1 ? argv[1] : "I/high";
    const Bath bath = to_bath(load_builtin_case(case_name));
    const auto grid = LineshapeGrid::defaults_for(bath.model());
    const auto modes = build_low_modes(bath, grid.t_max);
    const std::size_t n = grid.n_points / 2 + 1;

    std::printf("case %s, %zu time points, %zu frequency nodes, %d threads\n", case_name, n, modes.omega.size(),
                omp_get_max_threads());

    std::vector<std::complex<double>> a(n), b(n);
    const double ts = best_of(3, [&] { kernels::fill_g_low(modes, grid.dt(), a, Exec::serial); });
    const double tp = best_of(3, [&] { kernels::fill_g_low(modes, grid.dt(), b, Exec::parallel); });
    double diff = 0.0;
    for (std::size_t j = 0; j < n; ++j) diff = std::max(diff, std::abs(a[j] - b[j]) / (1.0 + std::abs(a[j])));
    std::printf("fill_g_low          serial %8.4f s   parallel %8.4f s   speedup %5.2fx   max rel diff %.2e\n", ts, tp,
                ts / tp, diff);

    const auto table = CorrelationTable::build(bath, grid, Exec::serial);
    const double lam = lambda_total(bath.model());
    std::vector<double> gaps(401);
    for (std::size_t i = 0; i < gaps.size(); ++i) gaps[i] = lam * (1.0 + 5.0 * static_cast<double>(i) / 400.0);
    std::vector<double> rs, rp;
    const double us = best_of(3, [&] { rs = table.rates(gaps, 1.0, Exec::serial); });
    const double up = best_of(3, [&] { rp = table.rates(gaps, 1.0, Exec::parallel); });
    double rdiff = 0.0;
    for (std::size_t i = 0; i < gaps.size(); ++i) rdiff = std::max(rdiff, std::abs(rs[i] - rp[i]) / rs[i]);
    std::printf("trapezoid_transform serial %8.4f s   parallel %8.4f s   speedup %5.2fx   max rel diff %.2e\n", us, up,
                us / up, rdiff);
    return 0;
}
