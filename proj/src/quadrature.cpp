// quadrature.cpp — Gauss-Legendre nodes and panel construction

#include "gaplaw/quadrature.hpp"

#include <algorithm>
#include <numbers>

namespace gaplaw::quad {

GaussLegendre make_gauss_legendre(std::size_t n) {
    GaussLegendre rule;
    rule.x.assign(n, 0.0);
    rule.w.assign(n, 0.0);
    const std::size_t m = (n + 1) / 2;
    for (std::size_t i = 1; i <= m; ++i) {
        double z = std::cos(std::numbers::pi * (static_cast<double>(i) - 0.25) /
                            (static_cast<double>(n) + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p1 = 1.0;
            double p2 = 0.0;
            for (std::size_t j = 1; j <= n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / static_cast<double>(j);
            }
            pp = static_cast<double>(n) * (z * p1 - p2) / (z * z - 1.0);
            const double z1 = z;
            z = z1 - p1 / pp;
            if (std::abs(z - z1) < 1e-15) break;
        }
        rule.x[i - 1] = -z;
        rule.x[n - i] = z;
        rule.w[i - 1] = 2.0 / ((1.0 - z * z) * pp * pp);
        rule.w[n - i] = rule.w[i - 1];
    }
    return rule;
}

const GaussLegendre& gl16() {
    static const GaussLegendre rule = make_gauss_legendre(16);
    return rule;
}

std::vector<Panel> graded_panels(double lo, double hi, double max_width, double first_width) {
    std::vector<Panel> panels;
    if (!(hi > lo)) return panels;
    double a = lo;
    if (a <= 0.0) {
        const double b = std::min(hi, std::min(first_width, max_width));
        panels.push_back({a, b});
        a = b;
    }
    while (a < hi) {
        double width = std::min(a, max_width);
        // avoid a sliver at the end
        if (hi - a < 1.5 * width) width = hi - a;
        const double b = std::min(hi, a + width);
        panels.push_back({a, b});
        a = b;
    }
    return panels;
}

Rule composite_rule(std::span<const Panel> panels) {
    const auto& gl = gl16();
    Rule rule;
    rule.nodes.reserve(panels.size() * gl.x.size());
    rule.weights.reserve(panels.size() * gl.x.size());
    for (const auto& p : panels) {
        const double mid = 0.5 * (p.a + p.b);
        const double half = 0.5 * (p.b - p.a);
        for (std::size_t i = 0; i < gl.x.size(); ++i) {
            rule.nodes.push_back(mid + half * gl.x[i]);
            rule.weights.push_back(half * gl.w[i]);
        }
    }
    return rule;
}

}  // namespace gaplaw::quad
