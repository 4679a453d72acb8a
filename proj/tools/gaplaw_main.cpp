// gaplaw_main.cpp — Command-line front end: rate, sweep, cases
//
// Exit codes: 0 success, 2 input error, 3 numerical failure.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gaplaw/errors.hpp"
#include "gaplaw/harness.hpp"
#include "gaplaw/rates.hpp"
#include "gaplaw/stationary.hpp"

namespace {

using namespace gaplaw;
using nlohmann::json;

constexpr int exit_input = 2;
constexpr int exit_numerical = 3;

struct CaseFlags {
    std::string name;
    double eta_l = 0, omega_ratio = 0, g2_h = 0, kT_over_omega_l = 0, kT = 0, temperature_k = 0;
    CLI::Option *o_name{}, *o_eta{}, *o_ratio{}, *o_g2{}, *o_ktr{}, *o_kT{}, *o_temp{};

    void add(CLI::App& app) {
        o_name = app.add_option("--case", name, "built-in case, e.g. I/high (sweep also accepts I for both temperatures)");
        o_eta = app.add_option("--eta-l", eta_l, "Ohmic coupling eta_l");
        o_ratio = app.add_option("--omega-ratio", omega_ratio, "omega_h / omega_l");
        o_g2 = app.add_option("--g2-h", g2_h, "squared displacement of the high-frequency mode");
        o_ktr = app.add_option("--kT-over-omega-l", kT_over_omega_l, "kT / omega_l");
        o_kT = app.add_option("--kT", kT, "thermal energy in cm^-1");
        o_temp = app.add_option("--temperature-k", temperature_k, "temperature in kelvin");
        o_kT->excludes(o_temp);
    }

    CaseConfig apply(CaseConfig c, const std::string& case_name) const {
        if (!case_name.empty()) c = load_builtin_case(case_name);
        if (o_eta->count()) c.eta_l = eta_l;
        if (o_ratio->count()) c.omega_ratio = omega_ratio;
        if (o_g2->count()) c.g2_h = g2_h;
        if (o_ktr->count()) c.kT_over_omega_l = kT_over_omega_l;
        if (o_kT->count()) c.kT = kT;
        if (o_temp->count()) c.kT = k_boltzmann_cm * temperature_k;
        c.validate();
        return c;
    }
};

json load_config(const std::string& flag_path) {
    std::string path = flag_path;
    if (path.empty()) {
        if (const char* env = std::getenv("GAPLAW_CONFIG"); env && *env) path = env;
    }
    if (path.empty()) return json::object();
    std::ifstream f(path);
    if (!f) throw InputError("cannot open config '" + path + "'");
    try {
        json j = json::parse(f);
        if (!j.is_object()) throw InputError("config '" + path + "' must hold a JSON object");
        return j;
    } catch (const json::parse_error& e) {
        throw InputError("config '" + path + "': " + e.what());
    }
}

std::string config_string(const json& cfg, const char* key) {
    if (!cfg.contains(key)) return {};
    if (!cfg.at(key).is_string()) throw InputError(std::string("config: '") + key + "' must be a string");
    return cfg.at(key).get<std::string>();
}

void print_cases() {
    std::printf("%-9s %6s %8s %6s %8s %10s %10s %10s %10s %10s %6s\n", "case", "eta_l", "wh/wl", "g2_h", "kT/wl",
                "omega_l", "omega_h", "lambda_l", "lambda_h", "lambda", "gamma");
    for (const auto& name : builtin_case_names()) {
        const auto c = load_builtin_case(name);
        const auto m = to_model(c);
        std::printf("%-9s %6g %8g %6g %8g %10g %10g %10g %10g %10g %6.4g\n", name.c_str(), c.eta_l, c.omega_ratio,
                    c.g2_h, c.kT_over_omega_l, c.omega_l(), c.omega_h(), lambda_l(m), lambda_h(m), lambda_total(m),
                    gamma_ratio(m));
    }
    std::printf("energies in cm^-1 (kT = 200 cm^-1)\n");
}

void print_rate(const RateResult& r, const RateQuery& q) {
    std::printf("method      %s\n", std::string(to_string(r.method)).c_str());
    std::printf("delta_e     %.10g cm^-1\n", q.delta_e);
    std::printf("k           %.10g cm^-1\n", r.k);
    std::printf("k_per_s     %.10g s^-1\n", r.k * 2.0 * 3.14159265358979323846 * 2.99792458e10);
    std::printf("kappa       %.10g\n", r.kappa);
    std::printf("ln_kappa    %.10g\n", std::log(r.kappa));
    const auto& d = r.diagnostics;
    if (d.tau_s) std::printf("tau_s       %.10g (cm^-1)^-1\n", *d.tau_s);
    if (d.d) std::printf("D           %.10g cm^-2\n", *d.d);
    if (d.g) std::printf("G           %.10g\n", *d.g);
    if (d.residual) std::printf("residual    %.3g\n", *d.residual);
    if (d.branch) std::printf("branch      %s\n", std::string(to_string(*d.branch)).c_str());
    for (const auto& f : d.flags) std::printf("flag        %s\n", f.c_str());
    for (const auto& w : q.bath.model().warnings()) std::fprintf(stderr, "warning: %s\n", w.c_str());
}

std::string suffixed(const std::string& path, const std::string& tag) {
    const auto slash = path.find_last_of('/');
    const auto dot = path.find_last_of('.');
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) return path + "_" + tag + ".csv";
    return path.substr(0, dot) + "_" + tag + path.substr(dot);
}

int run(int argc, char** argv) {
    CLI::App app{"Nonradiative transition rates: exact FGR and energy-gap-law approximations"};
    app.require_subcommand(1);
    std::string config_path;
    app.add_option("--config", config_path, "JSON config file (fallback: $GAPLAW_CONFIG)");
    app.fallthrough();

    auto* cases = app.add_subcommand("cases", "list built-in cases");

    auto* rate = app.add_subcommand("rate", "rate at a single energy gap");
    CaseFlags rate_case;
    rate_case.add(*rate);
    double de = 0, de_over_lambda = 0, j_rate = 1.0, omega_h = 0, omega_l = 0, broadening = 0;
    std::string method_name = "gi";
    auto* o_de = rate->add_option("--de", de, "energy gap in cm^-1");
    auto* o_dl = rate->add_option("--de-over-lambda", de_over_lambda, "energy gap in units of lambda");
    o_de->excludes(o_dl);
    auto* o_method = rate->add_option("--method", method_name, "exact, eg, geg, sc, spi, gi or sp-exact");
    auto* o_j_rate = rate->add_option("--j", j_rate, "electronic coupling J in cm^-1 (default 1)");
    auto* o_wh = rate->add_option("--omega-h", omega_h, "high mode frequency in cm^-1 (overrides --omega-ratio)");
    auto* o_wl = rate->add_option("--omega-l", omega_l, "Ohmic cutoff in cm^-1 (overrides --kT-over-omega-l)");
    auto* o_broad = rate->add_option("--broadening", broadening, "Lorentzian HWHM in cm^-1 for the exact rate (needed when eta_l = 0)");

    auto* sweep = app.add_subcommand("sweep", "ln kappa over a range of dE/lambda");
    CaseFlags sweep_case;
    sweep_case.add(*sweep);
    std::string range, methods_text, out_path, plot_path, title;
    double j_sweep = 1.0;
    auto* o_range = sweep->add_option("--de-over-lambda", range, "min:max:steps (steps = number of points)");
    auto* o_methods = sweep->add_option("--methods", methods_text, "comma list, e.g. exact,eg,geg,sc,spi,gi");
    auto* o_out = sweep->add_option("--out", out_path, "CSV output path (default stdout)");
    auto* o_plot = sweep->add_option("--plot", plot_path, "gnuplot script path (needs --out)");
    auto* o_title = sweep->add_option("--title", title, "plot title");
    auto* o_j_sweep = sweep->add_option("--j", j_sweep, "electronic coupling J in cm^-1 (default 1)");
    auto* o_tau = sweep->add_flag("--tau-s", "append the exact stationary point per row");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_input;
    }

    const json cfg = load_config(config_path);

    if (cases->parsed()) {
        print_cases();
        return 0;
    }

    if (rate->parsed()) {
        std::string case_name = rate_case.o_name->count() ? rate_case.name : config_string(cfg, "case");
        CaseConfig base = case_from_json(cfg);
        const CaseConfig c = rate_case.apply(base, rate_case.o_name->count() ? case_name : std::string());
        double wl = c.omega_l(), wh = c.omega_h();
        if (cfg.contains("omega_l")) wl = cfg.at("omega_l").get<double>();
        if (cfg.contains("omega_h")) wh = cfg.at("omega_h").get<double>();
        if (o_wl->count()) wl = omega_l;
        if (o_wh->count()) wh = omega_h;
        const Bath bath(SpectralModel(HighFreqMode{wh, c.g2_h}, OhmicDensity{c.eta_l, wl}), c.kT);

        if (!o_method->count() && cfg.contains("method")) method_name = config_string(cfg, "method");
        const auto m = parse_method(method_name);
        if (!m) throw InputError("unknown method '" + method_name + "'; valid: exact, eg, geg, sc, spi, gi, sp-exact");
        if (!o_j_rate->count() && cfg.contains("j_coupling")) j_rate = cfg.at("j_coupling").get<double>();

        double gap = 0;
        if (o_de->count()) gap = de;
        else if (o_dl->count()) gap = de_over_lambda * lambda_total(bath.model());
        else if (cfg.contains("de")) gap = cfg.at("de").get<double>();
        else if (cfg.contains("de_over_lambda")) gap = cfg.at("de_over_lambda").get<double>() * lambda_total(bath.model());
        else throw InputError("rate: give --de or --de-over-lambda");

        if (!o_broad->count() && cfg.contains("broadening")) broadening = cfg.at("broadening").get<double>();

        const RateQuery q{gap, j_rate, bath};
        if (*m == Method::exact) {
            auto grid = LineshapeGrid::defaults_for(bath.model());
            grid.broadening = broadening;
            print_rate(k_exact(q, grid), q);
        } else {
            print_rate(compute_rate(*m, q), q);
        }
        return 0;
    }

    // sweep
    SweepSpec defaults;
    defaults.methods = {Method::exact, Method::eg, Method::geg, Method::sc, Method::spi, Method::gi};
    SweepSpec spec = sweep_from_json(cfg, defaults);
    if (o_range->count()) parse_gap_range(range, spec);
    if (o_methods->count()) spec.methods = parse_method_list(methods_text);
    if (o_j_sweep->count()) spec.j_coupling = j_sweep;
    if (o_tau->count()) spec.with_tau_s = true;
    spec.validate();
    if (!o_out->count()) out_path = config_string(cfg, "out");
    if (!o_plot->count()) plot_path = config_string(cfg, "plot");
    if (!o_title->count()) title = config_string(cfg, "title");

    std::string case_name = sweep_case.o_name->count() ? sweep_case.name : config_string(cfg, "case");
    std::vector<std::string> names;
    if (!case_name.empty() && case_name.find('/') == std::string::npos) {
        names = {case_name + "/high", case_name + "/low"};
    } else {
        names = {case_name};
    }
    if (names.size() > 1 && out_path.empty()) throw InputError("sweep: both temperatures need --out");
    if (!plot_path.empty() && out_path.empty()) throw InputError("sweep: --plot needs --out");

    std::vector<SweepResult> results;
    std::vector<std::string> csv_paths;
    for (const auto& name : names) {
        json case_cfg = cfg;
        case_cfg.erase("case");
        CaseConfig base = name.empty() ? case_from_json(case_cfg) : load_builtin_case(name);
        if (!name.empty()) base = case_from_json(case_cfg, base);
        const CaseConfig c = sweep_case.apply(base, std::string());
        auto result = run_sweep(c, spec);
        for (const auto& w : result.warnings) std::fprintf(stderr, "warning [%s]: %s\n", c.name.c_str(), w.c_str());
        for (const auto& row : result.rows) {
            for (const auto& e : row.errors)
                std::fprintf(stderr, "error [%s] dE/lambda=%g: %s\n", c.name.c_str(), row.de_over_lambda, e.c_str());
        }
        std::string path = out_path;
        if (names.size() > 1) path = suffixed(out_path, name.substr(name.find('/') + 1));
        if (path.empty()) emit_csv(result, std::cout);
        else emit_csv(result, path);
        csv_paths.push_back(path);
        results.push_back(std::move(result));
    }

    if (!plot_path.empty()) {
        std::vector<PlotPanel> panels;
        for (std::size_t i = 0; i < results.size(); ++i) {
            const auto& n = names[i];
            std::string label = n;
            if (n.ends_with("/high")) label = "High Temp.";
            if (n.ends_with("/low")) label = "Low Temp.";
            panels.push_back({label, csv_paths[i], &results[i]});
        }
        if (title.empty()) title = case_name.empty() ? "custom case" : "Case " + case_name;
        emit_plot_script(panels, title, plot_path);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const gaplaw::InputError& e) {
        std::fprintf(stderr, "input error: %s\n", e.what());
        return exit_input;
    } catch (const nlohmann::json::exception& e) {
        std::fprintf(stderr, "input error: config: %s\n", e.what());
        return exit_input;
    } catch (const gaplaw::NumericalError& e) {
        std::fprintf(stderr, "numerical failure: %s\n", e.what());
        return exit_numerical;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return exit_numerical;
    }
}
