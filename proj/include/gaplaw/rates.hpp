// rates.hpp — Closed-form and saddle-point rate laws
//
// All rates are in cm^-1 (hbar = 1); multiply by 2 pi c = 1.88365e11 cm/s for s^-1.

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gaplaw/lineshape.hpp"
#include "gaplaw/rate_query.hpp"
#include "gaplaw/stationary.hpp"

namespace gaplaw {

enum class Method { exact, eg, geg, sc, spi, gi, sp_exact };

std::string_view to_string(Method m);
std::optional<Method> parse_method(std::string_view name);

struct Diagnostics {
    std::optional<double> tau_s;
    std::optional<double> d;
    std::optional<double> g;
    std::optional<double> residual;
    std::optional<GegBranch> branch;
    std::vector<std::string> flags;
};

struct RateResult {
    double k = 0.0;
    double kappa = 0.0;
    Method method = Method::exact;
    Diagnostics diagnostics;
};

// k = J^2 (2 pi / D)^{1/2} exp(-dE tau_s + G)
RateResult k_sp(const RateQuery& query, const StationaryPoint& sp, const DGValues& dg);

// Englman-Jortner energy-gap law; independent of kT and of the low-frequency density.
RateResult k_eg(const RateQuery& query);

// Min-rule saddle with closed-form D and G (Ohmic low part). Tabulated low
// parts fall back to the exact saddle and numeric D, G (method sp_exact).
RateResult k_geg(const RateQuery& query);

// Exact saddle from tau_s_exact with numeric D and G.
RateResult k_sp_exact(const RateQuery& query);

RateResult k_sc(const RateQuery& query);

// Stationary-phase interpolation. Falls back to k_sc (flag "spi-fallback-sc")
// when alpha <= 0 or a logarithm argument is not positive.
RateResult k_spi(const RateQuery& query);

// k_SPI / (1 + e^{x-2}) + k_GEG / (1 + e^{2-x}), x = dE / lambda
RateResult k_gi(const RateQuery& query);

RateResult k_exact(const RateQuery& query, const LineshapeGrid& grid);

// Dispatch by tag (exact uses the default grid for the bath).
RateResult compute_rate(Method method, const RateQuery& query);

}  // namespace gaplaw
