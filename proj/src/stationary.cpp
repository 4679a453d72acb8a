// stationary.cpp — Stationary-point solvers and D/G evaluators

#include "gaplaw/stationary.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "gaplaw/errors.hpp"
#include "gaplaw/quadrature.hpp"

namespace gaplaw {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double inf = std::numeric_limits<double>::infinity();
constexpr double nan = std::numeric_limits<double>::quiet_NaN();

// log|sinh x| - |x| and log cosh x - |x|; the linear part is kept apart so
// that the large exponents of the kernels cancel before meeting w.
double sinh_rem(double x) {
    const double ax = std::abs(x);
    if (ax < 1.0) return std::log(std::sinh(ax)) - ax;
    return -std::numbers::ln2 + std::log1p(-std::exp(-2.0 * ax));
}

double cosh_rem(double x) { return -std::numbers::ln2 + std::log1p(std::exp(-2.0 * std::abs(x))); }

double sign_of(double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }

// Spectral weight written as exp(log_amp - rate w).
struct LogWeight {
    double log_amp;
    double rate;
};

// J(w) sinh(w (hb + tau)) / sinh(w hb)
double rhs_kernel(LogWeight lw, double w, double hb, double tau) {
    const double x = w * (hb + tau);
    const double sign = sign_of(hb + tau);
    if (sign == 0.0) return 0.0;
    const double lin = w * (std::abs(hb + tau) - hb - lw.rate);
    return sign * std::exp(lw.log_amp + lin + sinh_rem(x) - sinh_rem(w * hb));
}

// J(w) cosh(w (hb + tau)) / sinh(w hb) = J(w) [coth(w hb) cosh(w tau) + sinh(w tau)]
double d_kernel(LogWeight lw, double w, double hb, double tau) {
    const double lin = w * (std::abs(hb + tau) - hb - lw.rate);
    return std::exp(lw.log_amp + lin + cosh_rem(w * (hb + tau)) - sinh_rem(w * hb));
}

// J(w) [coth(w hb)(cosh(w tau) - 1) + sinh(w tau)] = J(w) 2 sinh(w (hb + tau/2)) sinh(w tau/2) / sinh(w hb)
double g_kernel(LogWeight lw, double w, double hb, double tau) {
    const double sign = sign_of(hb + 0.5 * tau) * sign_of(tau);
    if (sign == 0.0) return 0.0;
    const double lin = w * (std::abs(hb + 0.5 * tau) + 0.5 * std::abs(tau) - hb - lw.rate);
    return sign * std::exp(std::numbers::ln2 + lw.log_amp + lin + sinh_rem(w * (hb + 0.5 * tau)) +
                           sinh_rem(0.5 * w * tau) - sinh_rem(w * hb));
}

// Low-frequency density split as amplitude and exponential cutoff.
LogWeight low_weight(const SpectralModel& model, double w) {
    if (const auto* o = std::get_if<OhmicDensity>(&model.low()))
        return {std::log(pi * o->eta_l * w), 1.0 / o->omega_l};
    return {log_j_low(model, w), 0.0};
}

bool has_low(const SpectralModel& model) {
    if (const auto* o = std::get_if<OhmicDensity>(&model.low())) return o->eta_l > 0.0;
    return true;
}

// Exponential decay rate in w of the tau-dependent integrands.
double integrand_decay(const SpectralModel& model, double hb, double tau) {
    const auto* o = std::get_if<OhmicDensity>(&model.low());
    if (!o) return 0.0;
    const double base = 1.0 / o->omega_l;
    return tau >= -hb ? base - tau : base + 2.0 * hb + tau;
}

template <class Kernel>
double low_integral(const Bath& bath, double tau, double log_w_power, Kernel kernel) {
    const auto& model = bath.model();
    if (!has_low(model)) return 0.0;
    const double hb = 0.5 / bath.kT();
    const auto panels = low_panels(model, bath.kT(), {integrand_decay(model, hb, tau), inf});
    return quad::integrate(
               [&](double w) {
                   auto lw = low_weight(model, w);
                   if (lw.log_amp == -inf) return 0.0;
                   lw.log_amp += log_w_power * std::log(w);
                   return kernel(lw, w, hb, tau);
               },
               panels) /
           pi;
}

void require_in_strip(const Bath& bath, double tau, const char* what) {
    if (!std::isfinite(tau)) throw DomainError(std::string(what) + ": tau must be finite");
    const auto strip = convergence_strip(bath);
    if (!strip.contains(tau)) {
        std::ostringstream os;
        os << what << ": tau = " << tau << " outside the convergence strip (" << strip.lower << ", "
           << strip.upper << ")";
        throw DomainError(os.str());
    }
}

double log_or_neg_inf(double x) { return x > 0.0 ? std::log(x) : -inf; }

double d_value(const Bath& bath, double tau) {
    const auto& h = bath.model().high();
    const double hb = 0.5 / bath.kT();
    const double high = d_kernel(LogWeight{log_or_neg_inf(h.g2_h * h.omega_h * h.omega_h), 0.0}, h.omega_h, hb, tau);
    return high + low_integral(bath, tau, 0.0, d_kernel);
}

}  // namespace

std::string_view to_string(StationaryMethod m) {
    switch (m) {
        case StationaryMethod::exact_root: return "exact-root";
        case StationaryMethod::tau0: return "tau0";
        case StationaryMethod::geg_min: return "geg-min";
        case StationaryMethod::tau0_corrected: return "tau0-corrected";
    }
    return "unknown";
}

std::string_view to_string(GegBranch b) {
    switch (b) {
        case GegBranch::high_mode: return "high-mode";
        case GegBranch::low_mode: return "low-mode";
        case GegBranch::tie: return "tie";
    }
    return "unknown";
}

Strip convergence_strip(const Bath& bath) {
    const double upper = tau_upper_limit(bath.model());
    if (!std::isfinite(upper)) return {-inf, inf};
    return {-upper - 1.0 / bath.kT(), upper};
}

double rhs_stationary(const Bath& bath, double tau) {
    require_in_strip(bath, tau, "rhs_stationary");
    const auto& h = bath.model().high();
    const double hb = 0.5 / bath.kT();
    const double high = rhs_kernel(LogWeight{log_or_neg_inf(lambda_h(bath.model())), 0.0}, h.omega_h, hb, tau);
    return high + low_integral(bath, tau, -1.0, rhs_kernel);
}

double stationary_residual(const Bath& bath, double delta_e, double tau) {
    if (!convergence_strip(bath).contains(tau)) return inf;
    return std::abs(rhs_stationary(bath, tau) - delta_e) / std::abs(delta_e);
}

StationaryPoint tau_s_exact(double delta_e, const Bath& bath) {
    if (!(delta_e > 0.0) || !std::isfinite(delta_e)) throw InputError("tau_s_exact: delta_e must be > 0");
    const auto strip = convergence_strip(bath);
    const double hb = 0.5 / bath.kT();

    StationaryPoint sp;
    sp.method = StationaryMethod::exact_root;

    double lo = -hb;  // rhs(-beta/2) = 0 exactly
    double hi;
    bool near_singularity = false;
    if (std::isfinite(strip.upper)) {
        hi = strip.upper * (1.0 - 1e-9);
        if (rhs_stationary(bath, hi) < delta_e) {
            hi = strip.upper * (1.0 - 1e-13);
            near_singularity = true;
            if (rhs_stationary(bath, hi) < delta_e)
                throw NumericalError("tau_s_exact: energy gap too large, root is within 1e-13 of the singularity");
        }
    } else {
        hi = std::max(1.0 / bath.model().high().omega_h, 1e-300);
        int guard = 0;
        while (rhs_stationary(bath, hi) < delta_e) {
            lo = hi;
            hi *= 2.0;
            if (++guard > 2000) throw NumericalError("tau_s_exact: could not bracket the stationary point");
        }
    }

    // Newton steps with D as the derivative, safeguarded by the bracket.
    double tau = (0.0 > lo && 0.0 < hi) ? 0.0 : 0.5 * (lo + hi);
    for (int iter = 0; iter < 200; ++iter) {
        const double f = rhs_stationary(bath, tau) - delta_e;
        if (std::abs(f) <= 1e-13 * delta_e) break;
        if (f < 0.0)
            lo = tau;
        else
            hi = tau;
        const double d = d_value(bath, tau);
        double next = tau - f / d;
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (std::abs(next - tau) <= 1e-16 * std::max(std::abs(tau), hb)) {
            tau = next;
            break;
        }
        tau = next;
    }
    sp.tau_s = tau;
    sp.residual = stationary_residual(bath, delta_e, tau);
    if (near_singularity || (std::isfinite(strip.upper) && strip.upper - tau < 1e-12 * strip.upper))
        sp.warnings.push_back("stationary point lies within 1e-9 of the 1/omega_l singularity; precision reduced");
    return sp;
}

StationaryPoint tau_s_zero(double delta_e, const SpectralModel& model) {
    if (!(delta_e > 0.0)) throw InputError("tau_s_zero: delta_e must be > 0");
    const double lh = lambda_h(model);
    if (!(lh > 0.0)) throw InputError("tau_s_zero: undefined for lambda_h = 0");
    StationaryPoint sp;
    sp.method = StationaryMethod::tau0;
    sp.tau_s = std::log(delta_e / lh) / model.high().omega_h;
    sp.residual = nan;
    return sp;
}

StationaryPoint tau_s_zero(double delta_e, const Bath& bath) {
    auto sp = tau_s_zero(delta_e, bath.model());
    sp.residual = stationary_residual(bath, delta_e, sp.tau_s);
    return sp;
}

StationaryPoint tau_s_geg(double delta_e, const SpectralModel& model) {
    if (!(delta_e > 0.0) || !std::isfinite(delta_e)) throw InputError("tau_s_geg: delta_e must be > 0");
    const auto& ohm = model.ohmic();
    const double lh = lambda_h(model);
    const double ll = lambda_l(model);
    GegCandidates c;
    c.high_mode = lh > 0.0 ? std::log(delta_e / lh) / model.high().omega_h : inf;
    c.low_mode = (1.0 - ll / delta_e) / ohm.omega_l;
    if (c.high_mode < c.low_mode)
        c.chosen = GegBranch::high_mode;
    else if (c.low_mode < c.high_mode)
        c.chosen = GegBranch::low_mode;
    else
        c.chosen = GegBranch::tie;

    StationaryPoint sp;
    sp.method = StationaryMethod::geg_min;
    sp.tau_s = std::min(c.high_mode, c.low_mode);
    sp.residual = nan;
    sp.candidates = c;
    return sp;
}

StationaryPoint tau_s_geg(double delta_e, const Bath& bath) {
    auto sp = tau_s_geg(delta_e, bath.model());
    sp.residual = stationary_residual(bath, delta_e, sp.tau_s);
    return sp;
}

StationaryPoint tau_s_corrected(double delta_e, const Bath& bath) {
    const auto& model = bath.model();
    const double lh = lambda_h(model);
    if (!(lh > 0.0)) throw InputError("tau_s_corrected: undefined for lambda_h = 0");
    if (!(delta_e > lh)) throw InputError("tau_s_corrected: requires delta_e > lambda_h");

    const double wh = model.high().omega_h;
    const double tau0 = std::log(delta_e / lh) / wh;
    require_in_strip(bath, tau0, "tau_s_corrected");

    const double hb = 0.5 / bath.kT();
    const double coth_h = 1.0 / std::tanh(wh * hb);
    const double d_low = low_integral(bath, tau0, 0.0, d_kernel);
    const double rhs_low = low_integral(bath, tau0, -1.0, rhs_kernel);

    // Linearize exp and sinh around tau0 and collect the delta_tau terms.
    const double bracket = delta_e + lh * (coth_h - 1.0) * std::cosh(wh * tau0) + d_low / wh;
    const double source = -(lh / wh) * (coth_h - 1.0) * std::sinh(wh * tau0) - rhs_low / wh;
    const double delta_tau = source / bracket;

    if (std::abs(delta_tau) >= tau0) throw LinearResponseError(tau0, delta_tau);

    StationaryPoint sp;
    sp.method = StationaryMethod::tau0_corrected;
    sp.tau_s = tau0 + delta_tau;
    if (std::abs(delta_tau) >= 0.5 * tau0) {
        std::ostringstream os;
        os << "first-order correction is large: |delta_tau| = " << std::abs(delta_tau) << " >= tau0/2 = "
           << 0.5 * tau0;
        sp.warnings.push_back(os.str());
    }
    sp.residual = stationary_residual(bath, delta_e, sp.tau_s);
    if (!std::isfinite(sp.residual)) sp.warnings.push_back("corrected tau lies outside the convergence strip");
    return sp;
}

double coth_approx(double x) {
    if (!(x > 0.0)) throw DomainError("coth_approx: x must be > 0");
    return 1.0 + 2.0 * std::exp(-x) + 2.0 * std::exp(-2.0 * x) + (2.0 / x) * std::exp(-2.5 * x);
}

DGValues dg_numeric(const Bath& bath, double tau) {
    require_in_strip(bath, tau, "dg_numeric");
    const auto& h = bath.model().high();
    const double hb = 0.5 / bath.kT();
    DGValues v;
    v.d = d_value(bath, tau);
    v.g = g_kernel(LogWeight{log_or_neg_inf(h.g2_h), 0.0}, h.omega_h, hb, tau) + low_integral(bath, tau, -2.0, g_kernel);
    return v;
}

DGValues dg_closed_geg(const SpectralModel& model, double kT, double tau) {
    const auto& ohm = model.ohmic();
    if (!(kT > 0.0)) throw InputError("dg_closed_geg: kT must be > 0");
    if (!std::isfinite(tau)) throw DomainError("dg_closed_geg: tau must be finite");
    const double wl = ohm.omega_l;
    const double ll = lambda_l(model);
    if (ll > 0.0 && !(tau < 1.0 / wl)) throw DomainError("dg_closed_geg: tau must be < 1/omega_l");
    if (ll > 0.0 && !(tau > -(1.0 / wl + 1.0 / kT)))
        throw DomainError("dg_closed_geg: tau must be > -(1/omega_l + 1/kT)");

    const double lh = lambda_h(model);
    const double wh = model.high().omega_h;
    const double coth_h = 1.0 / std::tanh(0.5 * wh / kT);
    const double eh = std::exp(wh * tau);
    const double ch = std::cosh(wh * tau);

    DGValues v;
    v.d = lh * wh * (eh + (coth_h - 1.0) * ch);
    v.g = (lh / wh) * (std::expm1(wh * tau) + (coth_h - 1.0) * (ch - 1.0));
    if (ll == 0.0) return v;

    const double b = wl / kT;  // hbar w_l / kT
    const double u = wl * tau;
    const double t = 1.0 / b;  // kT / hbar w_l
    const auto sq = [](double x) { return x * x; };
    v.d += ll * wl *
           (1.0 / sq(1.0 - u) + 1.0 / sq(1.0 + b - u) + 1.0 / sq(1.0 + 2.0 * b - u) + 1.0 / sq(1.0 + b + u) +
            1.0 / sq(1.0 + 2.0 * b + u) + t / (1.0 + 2.5 * b - u) + t / (1.0 + 2.5 * b + u));

    const double r5 = u / (1.0 + 2.5 * b);
    v.g += (ll / wl) * (-std::log1p(-u) - std::log1p(-sq(u / (1.0 + b))) - std::log1p(-sq(u / (1.0 + 2.0 * b))) +
                        (t + 2.5 + kT * tau) * std::log1p(r5) + (t + 2.5 - kT * tau) * std::log1p(-r5));
    return v;
}

}  // namespace gaplaw
