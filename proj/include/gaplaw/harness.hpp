// harness.hpp — Built-in benchmark cases, gap sweeps and CSV / gnuplot output

#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "gaplaw/lineshape.hpp"
#include "gaplaw/rates.hpp"
#include "gaplaw/spectral.hpp"

namespace gaplaw {

// Boltzmann constant in cm^-1 per kelvin; used only when reading temperatures.
inline constexpr double k_boltzmann_cm = 0.695034800;

// One row of the benchmark table. The absolute scale is carried by kT
// (cm^-1); omega_l = kT / kT_over_omega_l and omega_h = omega_ratio * omega_l.
struct CaseConfig {
    std::string name;
    double eta_l = 1.0;
    double omega_ratio = 5.0;
    double g2_h = 0.1;
    double kT_over_omega_l = 1.0;
    double kT = 200.0;

    double omega_l() const noexcept { return kT / kT_over_omega_l; }
    double omega_h() const noexcept { return omega_ratio * omega_l(); }
    void validate() const;

    friend bool operator==(const CaseConfig&, const CaseConfig&) = default;
};

// "I/high", "I/low", ..., "IV/low"
std::vector<std::string> builtin_case_names();
CaseConfig load_builtin_case(std::string_view name);

SpectralModel to_model(const CaseConfig& config);
Bath to_bath(const CaseConfig& config);

struct SweepSpec {
    double gap_min = 1.0;  // in units of lambda
    double gap_max = 6.0;
    std::size_t n_steps = 101;  // number of points, endpoints included
    std::vector<Method> methods;
    double j_coupling = 1.0;  // cm^-1; kappa does not depend on it
    bool with_tau_s = false;  // solve the exact stationary equation per row

    void validate() const;
    std::vector<double> grid() const;
};

// A cell is empty (nullopt) when the method is not evaluated at that gap and
// NaN when the evaluation failed.
struct OutputRow {
    double de_over_lambda = 0.0;
    std::vector<std::optional<double>> ln_kappa;  // aligned with SweepResult::methods
    std::optional<double> tau_s;
    std::vector<std::string> errors;
};

struct SweepResult {
    std::string case_name;
    std::vector<Method> methods;
    std::vector<OutputRow> rows;
    std::vector<std::string> warnings;
    bool has_tau_s = false;
};

SweepResult run_sweep(const CaseConfig& config, const SweepSpec& spec,
                      const std::optional<LineshapeGrid>& grid = std::nullopt);

void emit_csv(const SweepResult& result, std::ostream& out);
void emit_csv(const SweepResult& result, const std::string& path);
SweepResult parse_csv(std::istream& in);

struct PlotPanel {
    std::string label;     // e.g. "High Temp."
    std::string csv_path;  // file the script reads
    const SweepResult* result = nullptr;
};

// Self-contained gnuplot script, one panel per entry, stacked vertically.
void emit_plot_script(std::span<const PlotPanel> panels, const std::string& title, std::ostream& out);
void emit_plot_script(std::span<const PlotPanel> panels, const std::string& title, const std::string& path);

nlohmann::json to_json(const CaseConfig& config);
CaseConfig case_from_json(const nlohmann::json& j, CaseConfig base = {});
nlohmann::json to_json(const SweepSpec& spec);
SweepSpec sweep_from_json(const nlohmann::json& j, SweepSpec base = {});

// "a:b:n" -> gap_min, gap_max, n_steps
void parse_gap_range(std::string_view text, SweepSpec& spec);
std::vector<Method> parse_method_list(std::string_view text);

}  // namespace gaplaw
