// harness.cpp — Benchmark cases, sweeps and output writers

#include "gaplaw/harness.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "gaplaw/errors.hpp"
#include "gaplaw/stationary.hpp"

namespace gaplaw {

namespace {

constexpr double nan = std::numeric_limits<double>::quiet_NaN();

struct CaseRow {
    const char* id;
    double eta_l;
    double omega_ratio;
};

constexpr std::array<CaseRow, 4> case_rows{{{"I", 1.0, 5.0}, {"II", 2.0, 5.0}, {"III", 1.0, 10.0}, {"IV", 2.0, 10.0}}};

std::string format_double(double v) {
    if (std::isnan(v)) return "NaN";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + '"';
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                cur += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                cur += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

double parse_number(const std::string& s) {
    if (s == "NaN" || s == "nan") return nan;
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        throw InputError("csv: not a number: '" + s + "'");
    }
    if (used != s.size()) throw InputError("csv: not a number: '" + s + "'");
    return v;
}

std::ofstream open_for_write(const std::string& path) {
    std::ofstream f(path);
    if (!f) throw InputError("cannot open '" + path + "' for writing");
    return f;
}

bool evaluated_at(Method m, double delta_e, double omega_l) {
    if (m == Method::eg || m == Method::geg) return delta_e >= omega_l;
    return true;
}

}  // namespace

void CaseConfig::validate() const {
    if (!(eta_l >= 0.0) || !std::isfinite(eta_l)) throw InputError("case: eta_l must be finite and >= 0");
    if (!(omega_ratio > 0.0) || !std::isfinite(omega_ratio)) throw InputError("case: omega_ratio must be > 0");
    if (!(g2_h >= 0.0) || !std::isfinite(g2_h)) throw InputError("case: g2_h must be finite and >= 0");
    if (!(kT_over_omega_l > 0.0) || !std::isfinite(kT_over_omega_l))
        throw InputError("case: kT_over_omega_l must be > 0");
    if (!(kT > 0.0) || !std::isfinite(kT)) throw InputError("case: kT must be > 0");
}

std::vector<std::string> builtin_case_names() {
    std::vector<std::string> names;
    for (const auto& r : case_rows)
        for (const char* t : {"high", "low"}) names.push_back(std::string(r.id) + "/" + t);
    return names;
}

CaseConfig load_builtin_case(std::string_view name) {
    for (const auto& r : case_rows) {
        for (const auto& [tag, ratio] : {std::pair{"high", 1.0}, std::pair{"low", 0.5}}) {
            if (name != std::string(r.id) + "/" + tag) continue;
            CaseConfig c;
            c.name = std::string(name);
            c.eta_l = r.eta_l;
            c.omega_ratio = r.omega_ratio;
            c.g2_h = 0.1;
            c.kT_over_omega_l = ratio;
            c.kT = 200.0;
            return c;
        }
    }
    std::string valid;
    for (const auto& n : builtin_case_names()) valid += (valid.empty() ? "" : ", ") + n;
    throw InputError("unknown case '" + std::string(name) + "'; valid cases: " + valid);
}

SpectralModel to_model(const CaseConfig& config) {
    config.validate();
    return SpectralModel(HighFreqMode{config.omega_h(), config.g2_h}, OhmicDensity{config.eta_l, config.omega_l()});
}

Bath to_bath(const CaseConfig& config) { return Bath(to_model(config), config.kT); }

void SweepSpec::validate() const {
    if (!std::isfinite(gap_min) || !std::isfinite(gap_max) || gap_max < gap_min)
        throw InputError("sweep: need finite gap_min <= gap_max");
    if (n_steps == 0) throw InputError("sweep: n_steps must be >= 1");
    if (n_steps == 1 && gap_max != gap_min) throw InputError("sweep: a single step needs gap_min == gap_max");
    if (!std::isfinite(j_coupling)) throw InputError("sweep: j_coupling must be finite");
    if (j_coupling == 0.0 && !methods.empty()) throw InputError("sweep: j_coupling must be nonzero");
}

std::vector<double> SweepSpec::grid() const {
    std::vector<double> x(n_steps);
    for (std::size_t i = 0; i < n_steps; ++i)
        x[i] = n_steps == 1 ? gap_min
                            : gap_min + (gap_max - gap_min) * static_cast<double>(i) / static_cast<double>(n_steps - 1);
    return x;
}

SweepResult run_sweep(const CaseConfig& config, const SweepSpec& spec, const std::optional<LineshapeGrid>& grid) {
    spec.validate();
    const Bath bath = to_bath(config);
    const double lam = lambda_total(bath.model());
    const double omega_l = config.omega_l();
    const auto xs = spec.grid();
    const std::size_t n = xs.size();
    const std::size_t nm = spec.methods.size();

    SweepResult result;
    result.case_name = config.name;
    result.methods = spec.methods;
    result.has_tau_s = spec.with_tau_s;
    result.warnings = bath.model().warnings();
    result.rows.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        result.rows[i].de_over_lambda = xs[i];
        result.rows[i].ln_kappa.assign(nm, std::nullopt);
    }
    for (Method m : spec.methods) {
        if ((m == Method::eg || m == Method::geg) && spec.gap_min * lam < omega_l) {
            result.warnings.push_back(std::string(to_string(m)) +
                                      ": cells below dE = omega_l are left empty (not evaluated there)");
        }
    }

    std::vector<double> gaps(n);
    for (std::size_t i = 0; i < n; ++i) gaps[i] = xs[i] * lam;

    for (std::size_t mi = 0; mi < nm; ++mi) {
        if (spec.methods[mi] != Method::exact) continue;
        try {
            const auto g = grid ? *grid : LineshapeGrid::defaults_for(bath.model());
            const auto table = CorrelationTable::build(bath, g);
            const auto ks = table.rates(gaps, spec.j_coupling);
            for (std::size_t i = 0; i < n; ++i)
                result.rows[i].ln_kappa[mi] = std::log(kappa_dimensionless(ks[i], spec.j_coupling, bath));
        } catch (const Error& e) {
            result.warnings.push_back(std::string("exact: ") + e.what());
            for (auto& row : result.rows) {
                row.ln_kappa[mi] = nan;
                row.errors.push_back(std::string("exact: ") + e.what());
            }
        }
    }

#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < n; ++i) {
        auto& row = result.rows[i];
        const RateQuery q{gaps[i], spec.j_coupling, bath};
        for (std::size_t mi = 0; mi < nm; ++mi) {
            const Method m = spec.methods[mi];
            if (m == Method::exact || !evaluated_at(m, gaps[i], omega_l)) continue;
            try {
                row.ln_kappa[mi] = std::log(compute_rate(m, q).kappa);
            } catch (const Error& e) {
                row.ln_kappa[mi] = nan;
                row.errors.push_back(std::string(to_string(m)) + ": " + e.what());
            }
        }
        if (spec.with_tau_s) {
            try {
                row.tau_s = tau_s_exact(gaps[i], bath).tau_s;
            } catch (const Error& e) {
                row.tau_s = nan;
                row.errors.push_back(std::string("tau_s: ") + e.what());
            }
        }
    }
    return result;
}

void emit_csv(const SweepResult& result, std::ostream& out) {
    std::string header = "de_over_lambda";
    for (Method m : result.methods) header += "," + csv_field("ln_kappa_" + std::string(to_string(m)));
    if (result.has_tau_s) header += ",tau_s";
    out << header << '\n';
    for (const auto& row : result.rows) {
        std::string line = format_double(row.de_over_lambda);
        for (const auto& cell : row.ln_kappa) line += "," + (cell ? format_double(*cell) : std::string());
        if (result.has_tau_s) line += "," + (row.tau_s ? format_double(*row.tau_s) : std::string());
        out << line << '\n';
    }
    if (!out) throw InputError("csv: write failed");
}

void emit_csv(const SweepResult& result, const std::string& path) {
    auto f = open_for_write(path);
    emit_csv(result, f);
}

SweepResult parse_csv(std::istream& in) {
    SweepResult result;
    std::string line;
    if (!std::getline(in, line)) throw InputError("csv: missing header");
    const auto header = split_csv_line(line);
    if (header.empty() || header[0] != "de_over_lambda") throw InputError("csv: first column must be de_over_lambda");
    for (std::size_t c = 1; c < header.size(); ++c) {
        if (header[c] == "tau_s" && c + 1 == header.size()) {
            result.has_tau_s = true;
            break;
        }
        const std::string prefix = "ln_kappa_";
        if (header[c].rfind(prefix, 0) != 0) throw InputError("csv: unexpected column '" + header[c] + "'");
        const auto m = parse_method(header[c].substr(prefix.size()));
        if (!m) throw InputError("csv: unknown method column '" + header[c] + "'");
        result.methods.push_back(*m);
    }
    const std::size_t width = header.size();
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto cells = split_csv_line(line);
        if (cells.size() != width) throw InputError("csv: row has wrong number of cells");
        OutputRow row;
        row.de_over_lambda = parse_number(cells[0]);
        for (std::size_t k = 0; k < result.methods.size(); ++k) {
            const auto& c = cells[k + 1];
            row.ln_kappa.push_back(c.empty() ? std::nullopt : std::optional<double>(parse_number(c)));
        }
        if (result.has_tau_s && !cells.back().empty()) row.tau_s = parse_number(cells.back());
        result.rows.push_back(std::move(row));
    }
    return result;
}

void emit_plot_script(std::span<const PlotPanel> panels, const std::string& title, std::ostream& out) {
    out << "# gnuplot script: ln(kappa) versus dE/lambda\n";
    out << "set datafile separator ','\n";
    out << "set datafile missing ''\n";
    out << "set key autotitle columnhead\n";
    out << "set xlabel 'dE / lambda'\n";
    out << "set ylabel 'ln kappa'\n";

    bool any_rows = false;
    for (const auto& p : panels)
        if (p.result && !p.result->rows.empty()) any_rows = true;
    if (!any_rows) {
        out << "# warning: no data rows; the plot is empty\n";
        out << "set title " << std::quoted(title) << "\n";
        out << "plot [0:1] NaN notitle\n";
        return;
    }

    out << "set multiplot layout " << panels.size() << ",1 title " << std::quoted(title) << "\n";
    for (const auto& p : panels) {
        const SweepResult& r = *p.result;
        double xlo = std::numeric_limits<double>::infinity(), xhi = -xlo;
        double ylo = xlo, yhi = -xlo;
        for (const auto& row : r.rows) {
            xlo = std::min(xlo, row.de_over_lambda);
            xhi = std::max(xhi, row.de_over_lambda);
            for (const auto& c : row.ln_kappa) {
                if (!c || !std::isfinite(*c)) continue;
                ylo = std::min(ylo, *c);
                yhi = std::max(yhi, *c);
            }
        }
        out << "set title " << std::quoted(p.label) << "\n";
        if (xhi > xlo) out << "set xrange [" << format_double(xlo) << ":" << format_double(xhi) << "]\n";
        if (yhi >= ylo) out << "set yrange [" << std::floor(ylo) << ":" << std::ceil(yhi) << "]\n";
        if (r.methods.empty()) {
            out << "# warning: no methods in " << p.csv_path << "\n";
            out << "plot NaN notitle\n";
            continue;
        }
        out << "plot ";
        for (std::size_t k = 0; k < r.methods.size(); ++k) {
            if (k) out << ", \\\n     ";
            out << std::quoted(p.csv_path) << " using 1:" << (k + 2) << " with "
                << (r.methods[k] == Method::exact ? "lines" : "linespoints") << " title '"
                << to_string(r.methods[k]) << "'";
        }
        out << "\n";
    }
    out << "unset multiplot\n";
}

void emit_plot_script(std::span<const PlotPanel> panels, const std::string& title, const std::string& path) {
    auto f = open_for_write(path);
    emit_plot_script(panels, title, f);
}

nlohmann::json to_json(const CaseConfig& c) {
    return {{"name", c.name},
            {"eta_l", c.eta_l},
            {"omega_ratio", c.omega_ratio},
            {"g2_h", c.g2_h},
            {"kT_over_omega_l", c.kT_over_omega_l},
            {"kT", c.kT}};
}

CaseConfig case_from_json(const nlohmann::json& j, CaseConfig base) {
    if (!j.is_object()) throw InputError("config: expected an object");
    try {
        if (j.contains("case")) base = load_builtin_case(j.at("case").get<std::string>());
        if (j.contains("name")) base.name = j.at("name").get<std::string>();
        if (j.contains("eta_l")) base.eta_l = j.at("eta_l").get<double>();
        if (j.contains("omega_ratio")) base.omega_ratio = j.at("omega_ratio").get<double>();
        if (j.contains("g2_h")) base.g2_h = j.at("g2_h").get<double>();
        if (j.contains("kT_over_omega_l")) base.kT_over_omega_l = j.at("kT_over_omega_l").get<double>();
        if (j.contains("kT")) base.kT = j.at("kT").get<double>();
        if (j.contains("temperature_k")) base.kT = k_boltzmann_cm * j.at("temperature_k").get<double>();
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("config: ") + e.what());
    }
    base.validate();
    return base;
}

nlohmann::json to_json(const SweepSpec& s) {
    std::vector<std::string> methods;
    for (Method m : s.methods) methods.emplace_back(to_string(m));
    return {{"gap_min", s.gap_min}, {"gap_max", s.gap_max}, {"n_steps", s.n_steps},
            {"methods", methods},   {"j_coupling", s.j_coupling}, {"with_tau_s", s.with_tau_s}};
}

SweepSpec sweep_from_json(const nlohmann::json& j, SweepSpec base) {
    if (!j.is_object()) throw InputError("config: expected an object");
    try {
        if (j.contains("gap_min")) base.gap_min = j.at("gap_min").get<double>();
        if (j.contains("gap_max")) base.gap_max = j.at("gap_max").get<double>();
        if (j.contains("n_steps")) base.n_steps = j.at("n_steps").get<std::size_t>();
        if (j.contains("j_coupling")) base.j_coupling = j.at("j_coupling").get<double>();
        if (j.contains("with_tau_s")) base.with_tau_s = j.at("with_tau_s").get<bool>();
        if (j.contains("methods")) {
            base.methods.clear();
            for (const auto& name : j.at("methods")) {
                const auto m = parse_method(name.get<std::string>());
                if (!m) throw InputError("config: unknown method '" + name.get<std::string>() + "'");
                base.methods.push_back(*m);
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("config: ") + e.what());
    }
    base.validate();
    return base;
}

void parse_gap_range(std::string_view text, SweepSpec& spec) {
    const std::string s(text);
    const auto a = s.find(':');
    const auto b = a == std::string::npos ? a : s.find(':', a + 1);
    if (b == std::string::npos) throw InputError("gap range must look like min:max:steps, got '" + s + "'");
    try {
        std::size_t used = 0;
        const auto field = [&](const std::string& f) {
            const double v = std::stod(f, &used);
            if (used != f.size()) throw InputError("bad number '" + f + "'");
            return v;
        };
        const double lo = field(s.substr(0, a));
        const double hi = field(s.substr(a + 1, b - a - 1));
        const std::string steps = s.substr(b + 1);
        const long long n = std::stoll(steps, &used);
        if (used != steps.size() || n < 1) throw InputError("bad step count '" + steps + "'");
        spec.gap_min = lo;
        spec.gap_max = hi;
        spec.n_steps = static_cast<std::size_t>(n);
    } catch (const std::logic_error&) {
        throw InputError("gap range must look like min:max:steps, got '" + s + "'");
    }
}

std::vector<Method> parse_method_list(std::string_view text) {
    std::vector<Method> out;
    std::string s(text);
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        const auto m = parse_method(item);
        if (!m) throw InputError("unknown method '" + item + "'; valid: exact, eg, geg, sc, spi, gi, sp-exact");
        if (std::find(out.begin(), out.end(), *m) == out.end()) out.push_back(*m);
    }
    return out;
}

}  // namespace gaplaw
