// rates.cpp — EG, GEG, SC, SPI and global-interpolation rate laws

#include "gaplaw/rates.hpp"

#include <cmath>
#include <numbers>

#include "gaplaw/errors.hpp"

namespace gaplaw {

namespace {

constexpr double pi = std::numbers::pi;

RateResult finish(const RateQuery& q, double k, Method m) {
    RateResult r;
    r.k = k;
    r.method = m;
    r.kappa = kappa_dimensionless(k, q.j_coupling, q.bath);
    return r;
}

void require_finite(const RateQuery& q) {
    if (!std::isfinite(q.delta_e) || !std::isfinite(q.j_coupling))
        throw InputError("rate query: non-finite energy gap or coupling");
}

}  // namespace

std::string_view to_string(Method m) {
    switch (m) {
        case Method::exact: return "exact";
        case Method::eg: return "eg";
        case Method::geg: return "geg";
        case Method::sc: return "sc";
        case Method::spi: return "spi";
        case Method::gi: return "gi";
        case Method::sp_exact: return "sp-exact";
    }
    return "unknown";
}

std::optional<Method> parse_method(std::string_view name) {
    for (Method m : {Method::exact, Method::eg, Method::geg, Method::sc, Method::spi, Method::gi, Method::sp_exact})
        if (to_string(m) == name) return m;
    return std::nullopt;
}

RateResult k_sp(const RateQuery& query, const StationaryPoint& sp, const DGValues& dg) {
    require_finite(query);
    if (!(dg.d > 0.0)) throw NumericalError("saddle-point rate: nonpositive curvature D");
    const double j2 = query.j_coupling * query.j_coupling;
    const double k = j2 * std::sqrt(2.0 * pi / dg.d) * std::exp(-query.delta_e * sp.tau_s + dg.g);
    auto r = finish(query, k, Method::sp_exact);
    r.diagnostics.tau_s = sp.tau_s;
    r.diagnostics.d = dg.d;
    r.diagnostics.g = dg.g;
    r.diagnostics.residual = sp.residual;
    if (sp.candidates) r.diagnostics.branch = sp.candidates->chosen;
    r.diagnostics.flags = sp.warnings;
    return r;
}

RateResult k_eg(const RateQuery& query) {
    require_finite(query);
    const auto& model = query.bath.model();
    const double de = query.delta_e;
    const double lh = lambda_h(model);
    const double wh = model.high().omega_h;
    if (!(de > 0.0)) throw InputError("EG rate: delta_e must be > 0");
    if (!(lh > 0.0)) throw InputError("EG rate: lambda_h must be > 0");
    const double j2 = query.j_coupling * query.j_coupling;
    const double k = j2 * std::sqrt(2.0 * pi / (wh * de)) * std::exp(-lh / wh - (de / wh) * (std::log(de / lh) - 1.0));
    return finish(query, k, Method::eg);
}

RateResult k_sp_exact(const RateQuery& query) {
    require_finite(query);
    const auto sp = tau_s_exact(query.delta_e, query.bath);
    const auto dg = dg_numeric(query.bath, sp.tau_s);
    return k_sp(query, sp, dg);
}

RateResult k_geg(const RateQuery& query) {
    require_finite(query);
    if (!(query.delta_e > 0.0)) throw InputError("GEG rate: delta_e must be > 0");
    const auto& model = query.bath.model();
    if (!model.is_ohmic()) {
        auto r = k_sp_exact(query);
        r.diagnostics.flags.push_back("tabulated low-frequency density: exact saddle used instead of GEG");
        return r;
    }
    const auto sp = tau_s_geg(query.delta_e, query.bath);
    const auto dg = dg_closed_geg(model, query.bath.kT(), sp.tau_s);
    auto r = k_sp(query, sp, dg);
    r.method = Method::geg;
    if (sp.tau_s < 0.0) r.diagnostics.flags.push_back("negative tau_s: GEG outside its derivation regime");
    return r;
}

RateResult k_sc(const RateQuery& query) {
    require_finite(query);
    const auto re = reorg_set(query.bath);
    if (!(re.lambda_qc > 0.0)) throw InputError("SC rate: lambda_qc must be > 0");
    const double kT = query.bath.kT();
    const double j2 = query.j_coupling * query.j_coupling;
    const double x = query.delta_e - re.lambda_total;
    const double k = j2 * std::sqrt(pi / (kT * re.lambda_qc)) * std::exp(-x * x / (4.0 * kT * re.lambda_qc));
    return finish(query, k, Method::sc);
}

RateResult k_spi(const RateQuery& query) {
    require_finite(query);
    const auto re = reorg_set(query.bath);
    if (!(re.lambda_qc > 0.0 && re.lambda_qs > 0.0 && re.lambda_qt > 0.0))
        throw InputError("SPI rate: quantum reorganization energies must be > 0");
    const double kT = query.bath.kT();
    const double lam = re.lambda_total;
    const double qc = re.lambda_qc;

    const double alpha = std::expm1((qc * re.lambda_qt - lam * lam) / (2.0 * kT * qc));
    const double numer = std::expm1(2.0 * lam * (qc - lam) / (kT * qc));
    if (!(alpha > 0.0) || !(numer / alpha > 0.0) || !std::isfinite(numer / alpha)) {
        auto r = k_sc(query);
        r.method = Method::spi;
        r.diagnostics.flags.push_back("spi-fallback-sc");
        return r;
    }
    const double gamma = std::log(numer / alpha);
    const double x = query.delta_e / lam;
    const double q_in = (qc - re.lambda_qs) * x * x + re.lambda_qs;
    const double w = 1.0 / (1.0 + alpha * std::exp(-gamma * x));
    const double j2 = query.j_coupling * query.j_coupling;
    const double dx = query.delta_e - lam;
    const double k = j2 * std::sqrt(pi * w / (kT * q_in)) * std::exp(-dx * dx / (4.0 * kT * qc));
    auto r = finish(query, k, Method::spi);
    if (query.delta_e < 0.0) r.diagnostics.flags.push_back("regime-unvalidated: delta_e < 0");
    return r;
}

RateResult k_gi(const RateQuery& query) {
    require_finite(query);
    const double lam = lambda_total(query.bath.model());
    if (!(lam > 0.0)) throw InputError("GI rate: total reorganization energy must be > 0");
    const auto spi = k_spi(query);
    const auto geg = k_geg(query);
    const double x = query.delta_e / lam;
    const double w_spi = 1.0 / (1.0 + std::exp(x - 2.0));
    const double w_geg = 1.0 / (1.0 + std::exp(2.0 - x));
    auto r = finish(query, w_spi * spi.k + w_geg * geg.k, Method::gi);
    r.diagnostics = geg.diagnostics;
    for (const auto& f : spi.diagnostics.flags) r.diagnostics.flags.push_back(f);
    return r;
}

RateResult k_exact(const RateQuery& query, const LineshapeGrid& grid) {
    return finish(query, fgr_rate_exact(query, grid), Method::exact);
}

RateResult compute_rate(Method method, const RateQuery& query) {
    switch (method) {
        case Method::exact: return k_exact(query, LineshapeGrid::defaults_for(query.bath.model()));
        case Method::eg: return k_eg(query);
        case Method::geg: return k_geg(query);
        case Method::sc: return k_sc(query);
        case Method::spi: return k_spi(query);
        case Method::gi: return k_gi(query);
        case Method::sp_exact: return k_sp_exact(query);
    }
    throw InputError("unknown method");
}

}  // namespace gaplaw
