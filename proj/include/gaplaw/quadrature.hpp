// quadrature.hpp — Gauss-Legendre panels and adaptive refinement over frequency

#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "gaplaw/errors.hpp"

namespace gaplaw::quad {

struct GaussLegendre {
    std::vector<double> x;  // nodes on [-1, 1], ascending
    std::vector<double> w;
};

GaussLegendre make_gauss_legendre(std::size_t n);

// The 16-point rule used by every panel in the library.
const GaussLegendre& gl16();

struct Panel {
    double a;
    double b;
};

// Splits [lo, hi] into panels whose width never exceeds the distance to the
// origin (geometric grading toward 0) nor max_width. When lo == 0 the first
// panel is [0, first_width].
std::vector<Panel> graded_panels(double lo, double hi, double max_width, double first_width);

// Flattened composite rule: GL16 applied on each panel.
struct Rule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

Rule composite_rule(std::span<const Panel> panels);

struct Options {
    double rel_tol = 1e-12;
    int max_depth = 40;
};

namespace detail {

template <class F>
double gl_panel(F& f, double a, double b) {
    const auto& rule = gl16();
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.x.size(); ++i) sum += rule.w[i] * f(mid + half * rule.x[i]);
    return half * sum;
}

template <class F>
double gl_panel_abs(F& f, double a, double b) {
    const auto& rule = gl16();
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.x.size(); ++i) sum += rule.w[i] * std::abs(f(mid + half * rule.x[i]));
    return half * sum;
}

template <class F>
double refine(F& f, double a, double b, double coarse, double tol, double floor, int depth, const Options& opt) {
    const double m = 0.5 * (a + b);
    const double left = gl_panel(f, a, m);
    const double right = gl_panel(f, m, b);
    const double fine = left + right;
    if (!std::isfinite(fine)) throw NumericalError("quadrature: non-finite integrand");
    // The roundoff floors keep narrow panels near a graded or singular
    // endpoint from chasing a tolerance below machine precision.
    const double diff = std::abs(fine - coarse);
    if (diff <= tol || diff <= floor || diff <= 64.0 * std::numeric_limits<double>::epsilon() * std::abs(fine))
        return fine;
    if (depth >= opt.max_depth) throw NumericalError("quadrature: adaptive refinement did not converge");
    return refine(f, a, m, left, 0.5 * tol, floor, depth + 1, opt) +
           refine(f, m, b, right, 0.5 * tol, floor, depth + 1, opt);
}

}  // namespace detail

// Adaptive Gauss-Legendre over a starting partition. Each panel is bisected
// until GL16 on the halves agrees with GL16 on the whole to within its share
// of rel_tol * (integral of |f|).
template <class F>
double integrate(F&& f, std::span<const Panel> panels, const Options& opt = {}) {
    if (panels.empty()) return 0.0;
    const double total_width = panels.back().b - panels.front().a;
    double l1 = 0.0;
    for (const auto& p : panels) l1 += detail::gl_panel_abs(f, p.a, p.b);
    if (!std::isfinite(l1)) throw NumericalError("quadrature: non-finite integrand");
    if (l1 == 0.0) return 0.0;
    const double floor = 64.0 * std::numeric_limits<double>::epsilon() * l1;
    double sum = 0.0;
    for (const auto& p : panels) {
        const double coarse = detail::gl_panel(f, p.a, p.b);
        const double tol = opt.rel_tol * l1 * (p.b - p.a) / total_width;
        sum += detail::refine(f, p.a, p.b, coarse, tol, floor, 0, opt);
    }
    return sum;
}

}  // namespace gaplaw::quad
