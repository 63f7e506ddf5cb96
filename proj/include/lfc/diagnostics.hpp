#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <vector>

#include "lfc/alpha_context.hpp"
#include "lfc/errors.hpp"
#include "lfc/formal.hpp"
#include "lfc/grid.hpp"
#include "lfc/quadrature.hpp"
#include "lfc/special.hpp"

namespace lfc {

struct NumericDerivative {
    complex value;            // Gamma(1+a) * (f(x0+h) - f(x0)) / h^alpha at the given h
    double scaling_exponent;  // estimated p with quotient ~ h^p from a two-step probe
};

// Literal order-alpha difference quotient at finite step h. For classically
// smooth f and alpha < 1 the quotient vanishes like h^{1-alpha} as h -> 0;
// the returned exponent estimate makes that measurable.
template <class F>
inline NumericDerivative lf_derivative_numeric(F&& f, double x0, const AlphaContext& ctx,
                                               double h) {
    if (!(h > 0.0)) throw domain_error("lf_derivative_numeric: step must be positive");
    const double g = std::tgamma(1.0 + ctx.alpha);
    const auto quotient = [&](double step) {
        return g * (complex(f(x0 + step)) - complex(f(x0))) / std::pow(step, ctx.alpha);
    };
    const complex q1 = quotient(h);
    const complex q2 = quotient(h / 16.0);
    NumericDerivative out;
    out.value = q1;
    const double m1 = std::abs(q1), m2 = std::abs(q2);
    if (m1 == 0.0 || m2 == 0.0)
        out.scaling_exponent = 0.0;
    else
        out.scaling_exponent = std::log(m1 / m2) / std::log(16.0);
    return out;
}

struct HolderEstimate {
    double alpha_hat;
    double confidence; // R^2 of the log-log oscillation regression
};

// Log-log regression of the maximal oscillation max_{|i-j|=s} |f_i - f_j|
// against the scale s over dyadic scales; the slope is the Hoelder exponent.
inline HolderEstimate estimate_holder_exponent(const SampledSignal& f) {
    const std::size_t n = f.grid.size();
    if (n < 64) throw domain_error("estimate_holder_exponent: need at least 64 samples");
    if (!f.grid.uniform) throw domain_error("estimate_holder_exponent: grid must be uniform");
    const double dx = f.grid.points[1] - f.grid.points[0];

    std::vector<double> lx, ly;
    for (std::size_t s = 1; s <= n / 4; s *= 2) {
        double osc = 0.0;
        for (std::size_t i = 0; i + s < n; ++i)
            osc = std::max(osc, std::abs(f.values[i + s] - f.values[i]));
        if (osc == 0.0) continue;
        lx.push_back(std::log(static_cast<double>(s) * dx));
        ly.push_back(std::log(osc));
    }
    if (lx.size() < 3)
        throw domain_error("estimate_holder_exponent: signal is (near-)constant, exponent undefined");

    const std::size_t m = lx.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < m; ++i) {
        sx += lx[i];
        sy += ly[i];
        sxx += lx[i] * lx[i];
        sxy += lx[i] * ly[i];
        syy += ly[i] * ly[i];
    }
    const double denom = m * sxx - sx * sx;
    const double slope = (m * sxy - sx * sy) / denom;
    const double ss_tot = syy - sy * sy / m;
    const double intercept = (sy - slope * sx) / m;
    double ss_res = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        const double r = ly[i] - (slope * lx[i] + intercept);
        ss_res += r * r;
    }
    HolderEstimate out;
    out.alpha_hat = std::min(1.0, std::max(std::numeric_limits<double>::min(), slope));
    out.confidence = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 0.0;
    return out;
}

struct DiscrepancyReport {
    double exponential_law_gap;  // max |E(a x^a) E(b x^a) - E((a+b) x^a)| over the grid
    double quadrature_gap;       // |matched quadrature - Theorem-2 value| for the expression
    double exp_law_at_x1 = 0.0;  // the same probe at x = 1 (the canonical reporting point)
};

struct ReconcileOptions {
    double x_min = 0.0;
    double x_max = 1.0;
    std::size_t samples = 64;
    std::size_t rule_nodes = 32;
};

// Quantifies where the formal layer and the pointwise layer part ways: the
// formal exponential law E(a u)E(b u) = E((a+b)u) evaluated as genuine
// functions (0 at alpha = 1, strictly positive for alpha < 1), and the
// matched-quadrature vs Theorem-2 gap for the given expression.
inline DiscrepancyReport reconciliation_report(const FormalExpr& e, const AlphaContext& ctx,
                                               const ReconcileOptions& opts = {}) {
    DiscrepancyReport rep{0.0, 0.0, 0.0};

    std::vector<complex> lambdas;
    for (const auto& t : e.terms()) lambdas.push_back(t.lambda);
    if (lambdas.empty()) lambdas.push_back(complex(1.0, 0.0));

    const auto probe = [&](complex la, complex lb, double x) {
        const double ua = pow_alpha(ctx, x - e.anchor());
        const complex lhs = mittag_leffler(ctx, la * ua) * mittag_leffler(ctx, lb * ua);
        const complex rhs = mittag_leffler(ctx, (la + lb) * ua);
        return std::abs(lhs - rhs);
    };

    for (std::size_t i = 0; i < lambdas.size(); ++i) {
        for (std::size_t j = i; j < lambdas.size(); ++j) {
            for (std::size_t s = 0; s <= opts.samples; ++s) {
                const double x = opts.x_min + (opts.x_max - opts.x_min) * static_cast<double>(s) /
                                                  static_cast<double>(opts.samples);
                rep.exponential_law_gap = std::max(rep.exponential_law_gap,
                                                   probe(lambdas[i], lambdas[j], x));
            }
            rep.exp_law_at_x1 =
                std::max(rep.exp_law_at_x1, probe(lambdas[i], lambdas[j], e.anchor() + 1.0));
        }
    }

    if (!e.empty()) {
        const double a = e.anchor() + opts.x_min;
        const double b = e.anchor() + opts.x_max;
        const auto rule = build_measure_matched_rule(ctx, a, b, opts.rule_nodes);
        const complex numeric =
            lf_integral_matched([&](double x) { return evaluate(e, ctx, x); }, rule);
        const complex exact = definite_integral(e, ctx, a, b);
        rep.quadrature_gap = std::abs(numeric - exact);
    }
    return rep;
}

} // namespace lfc
