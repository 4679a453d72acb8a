// spectral.cpp — Spectral-density models and reorganization-energy functionals

#include "gaplaw/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "gaplaw/errors.hpp"

namespace gaplaw {

namespace {

constexpr double pi = std::numbers::pi;

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

TabulatedDensity::TabulatedDensity(std::vector<std::pair<double, double>> points) {
    if (points.size() < 2) throw InputError("tabulated density needs at least 2 points");
    omega_.reserve(points.size());
    value_.reserve(points.size());
    for (const auto& [w, j] : points) {
        if (!std::isfinite(w) || !std::isfinite(j)) throw InputError("tabulated density: non-finite entry");
        if (!(w > 0.0)) throw InputError("tabulated density: frequencies must be > 0");
        if (j < 0.0) throw InputError("tabulated density: values must be >= 0");
        if (!omega_.empty() && !(w > omega_.back()))
            throw InputError("tabulated density: frequencies must be strictly ascending");
        omega_.push_back(w);
        value_.push_back(j);
    }
}

double TabulatedDensity::operator()(double omega) const noexcept {
    if (!(omega >= omega_.front()) || omega > omega_.back()) return 0.0;
    const auto it = std::upper_bound(omega_.begin(), omega_.end(), omega);
    if (it == omega_.end()) return value_.back();
    const std::size_t i = static_cast<std::size_t>(it - omega_.begin());
    const double t = (omega - omega_[i - 1]) / (omega_[i] - omega_[i - 1]);
    return value_[i - 1] + t * (value_[i] - value_[i - 1]);
}

SpectralModel::SpectralModel(HighFreqMode high, LowFreqDensity low) : high_(high), low_(std::move(low)) {
    if (!(high_.omega_h > 0.0) || !std::isfinite(high_.omega_h)) throw InputError("omega_h must be > 0");
    if (!(high_.g2_h >= 0.0) || !std::isfinite(high_.g2_h)) throw InputError("g2_h must be >= 0");
    if (const auto* ohm = std::get_if<OhmicDensity>(&low_)) {
        if (!(ohm->eta_l >= 0.0) || !std::isfinite(ohm->eta_l)) throw InputError("eta_l must be >= 0");
        if (!(ohm->omega_l > 0.0) || !std::isfinite(ohm->omega_l)) throw InputError("omega_l must be > 0");
        if (!(ohm->omega_l < high_.omega_h)) {
            std::ostringstream os;
            os << "omega_l (" << ohm->omega_l << ") is not below omega_h (" << high_.omega_h
               << "); the two-component picture assumes omega_l < omega_h";
            warnings_.push_back(os.str());
        }
    }
}

const OhmicDensity& SpectralModel::ohmic() const {
    if (const auto* ohm = std::get_if<OhmicDensity>(&low_)) return *ohm;
    throw InputError("operation requires an Ohmic low-frequency density");
}

Bath::Bath(SpectralModel model, double kT) : model_(std::move(model)), kT_(kT) {
    if (!(kT_ > 0.0) || !std::isfinite(kT_)) throw InputError("kT must be > 0");
}

double j_low_at(const SpectralModel& model, double omega) {
    return std::visit(overloaded{[&](const OhmicDensity& o) {
                                     if (!(omega > 0.0)) return 0.0;
                                     return pi * o.eta_l * omega * std::exp(-omega / o.omega_l);
                                 },
                                 [&](const TabulatedDensity& t) { return t(omega); }},
                      model.low());
}

double log_j_low(const SpectralModel& model, double omega) {
    constexpr double neg_inf = -std::numeric_limits<double>::infinity();
    return std::visit(overloaded{[&](const OhmicDensity& o) {
                                     if (!(omega > 0.0) || o.eta_l == 0.0) return neg_inf;
                                     return std::log(pi * o.eta_l * omega) - omega / o.omega_l;
                                 },
                                 [&](const TabulatedDensity& t) {
                                     const double j = t(omega);
                                     return j > 0.0 ? std::log(j) : neg_inf;
                                 }},
                      model.low());
}

std::vector<quad::Panel> low_panels(const SpectralModel& model, double kT, const PanelSpec& spec) {
    return std::visit(
        overloaded{[&](const OhmicDensity& o) {
                       const double decay = spec.decay > 0.0 ? spec.decay : 1.0 / o.omega_l;
                       const double upper = 40.0 / decay;
                       const double cap = std::min(spec.max_width, 4.0 / decay);
                       const double first = 1e-3 * std::min(kT, 1.0 / decay);
                       return quad::graded_panels(0.0, upper, cap, first);
                   },
                   [&](const TabulatedDensity& t) {
                       std::vector<quad::Panel> panels;
                       const auto w = t.omegas();
                       for (std::size_t i = 0; i + 1 < w.size(); ++i) {
                           auto part = quad::graded_panels(w[i], w[i + 1], spec.max_width, w[i]);
                           panels.insert(panels.end(), part.begin(), part.end());
                       }
                       return panels;
                   }},
        model.low());
}

double lambda_h(const SpectralModel& model) { return model.high().omega_h * model.high().g2_h; }

double lambda_l(const SpectralModel& model) {
    if (const auto* o = std::get_if<OhmicDensity>(&model.low())) return o->eta_l * o->omega_l;
    const auto panels = low_panels(model, 1.0, {0.0, std::numeric_limits<double>::infinity()});
    return quad::integrate([&](double w) { return j_low_at(model, w) / w; }, panels) / pi;
}

double lambda_total(const SpectralModel& model) { return lambda_h(model) + lambda_l(model); }

ReorgSet reorg_set(const Bath& bath) {
    const auto& model = bath.model();
    const double kT = bath.kT();
    ReorgSet r;
    r.lambda_h = lambda_h(model);
    r.lambda_l = lambda_l(model);
    r.lambda_total = r.lambda_h + r.lambda_l;

    const double x = model.high().omega_h / (2.0 * kT);
    r.lambda_qc = r.lambda_h * x / std::tanh(x);
    r.lambda_qs = r.lambda_h * x / std::sinh(x);
    r.lambda_qt = r.lambda_h * (4.0 * kT / model.high().omega_h) * std::tanh(model.high().omega_h / (4.0 * kT));

    const auto panels = low_panels(model, kT, {0.0, std::numeric_limits<double>::infinity()});
    const double beta_half = 0.5 / kT;
    r.lambda_qc += quad::integrate(
                       [&](double w) { return j_low_at(model, w) / std::tanh(beta_half * w); }, panels) /
                   (2.0 * pi * kT);
    r.lambda_qs += quad::integrate(
                       [&](double w) {
                           const double y = beta_half * w;
                           if (y > 700.0) return 0.0;
                           return j_low_at(model, w) / std::sinh(y);
                       },
                       panels) /
                   (2.0 * pi * kT);
    r.lambda_qt += 4.0 * kT / pi *
                   quad::integrate(
                       [&](double w) { return j_low_at(model, w) / (w * w) * std::tanh(0.5 * beta_half * w); },
                       panels);
    return r;
}

double gamma_ratio(const SpectralModel& model) {
    const double lh = lambda_h(model);
    const double total = lh + lambda_l(model);
    if (!(total > 0.0)) throw InputError("gamma ratio undefined: total reorganization energy is zero");
    return lh / total;
}

double stokes_shift(const SpectralModel& model) { return 2.0 * lambda_total(model); }

double low_frequency_scale(const SpectralModel& model) {
    if (const auto* o = std::get_if<OhmicDensity>(&model.low())) return o->omega_l;
    const auto panels = low_panels(model, 1.0, {0.0, std::numeric_limits<double>::infinity()});
    const double m0 = quad::integrate([&](double w) { return j_low_at(model, w); }, panels);
    const double m1 = quad::integrate([&](double w) { return j_low_at(model, w) / w; }, panels);
    if (!(m1 > 0.0)) return std::get<TabulatedDensity>(model.low()).omega_max();
    return m0 / m1;
}

double tau_upper_limit(const SpectralModel& model) {
    const auto* o = std::get_if<OhmicDensity>(&model.low());
    if (o && o->eta_l > 0.0) return 1.0 / o->omega_l;
    return std::numeric_limits<double>::infinity();
}

}  // namespace gaplaw
