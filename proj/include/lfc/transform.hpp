#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "lfc/alpha_context.hpp"
#include "lfc/errors.hpp"
#include "lfc/grid.hpp"
#include "lfc/parallel.hpp"
#include "lfc/quadrature.hpp"
#include "lfc/special.hpp"

namespace lfc {

// Sampled transform image. Records the truncation and convention used so the
// inverse is reproducible from the object alone.
struct Spectrum {
    Grid omega;
    std::vector<complex> values;
    KernelConvention convention = KernelConvention::case3;
    double alpha = 1.0;
    double truncation_X = 0.0;
    bool integrability_warning = false;

    complex value_at(double w) const {
        SampledSignal s{omega, values, SupportHint::symmetric_line};
        return s.value_at(w);
    }
};

struct TransformOptions {
    std::size_t nodes = 4096;          // quadrature nodes per half line
    double integrability_bound = 1e3;  // warning threshold for the Eq-3.16 estimate
    MlOptions ml{};
};

// Gamma-normalized estimate of the absolute integral over [-X, X]; the
// convergence condition is sufficient, not necessary, so exceeding the bound
// only raises a flag.
template <class F>
inline double integrability_estimate(F&& f, const QuadratureRule& half_rule) {
    double sum = 0.0;
    for (std::size_t i = 0; i < half_rule.nodes.size(); ++i) {
        const double x = half_rule.nodes[i];
        sum += half_rule.weights[i] * (std::abs(complex(f(x))) + std::abs(complex(f(-x))));
    }
    return sum;
}

// Forward generalized transform of a callable signal: for each omega,
//   S(omega) = (1/Gamma(1+alpha)) int_{-X}^{X} f(x) E_a(-i^a scale x^a w^a) (dx)^a,
// the normalization living inside the matched rule. Per-omega evaluations are
// independent and run in parallel deterministically.
template <class F>
inline Spectrum forward(F&& f, const AlphaContext& ctx, KernelConvention conv, Grid omega_grid,
                        double X, const TransformOptions& opts = {}) {
    if (!(X > 0.0)) throw domain_error("forward: truncation must be positive");
    if (omega_grid.size() == 0) throw domain_error("forward: empty omega grid");
    const QuadratureRule rule = build_measure_matched_rule(ctx, 0.0, X, opts.nodes);

    Spectrum S;
    S.convention = conv;
    S.alpha = ctx.alpha;
    S.truncation_X = X;
    S.integrability_warning = integrability_estimate(f, rule) > opts.integrability_bound;

    const std::size_t nn = rule.nodes.size();
    std::vector<complex> fpos(nn), fneg(nn), xa(nn);
    for (std::size_t i = 0; i < nn; ++i) {
        fpos[i] = complex(f(rule.nodes[i]));
        fneg[i] = complex(f(-rule.nodes[i]));
        xa[i] = pow_alpha(ctx, rule.nodes[i]);
    }
    const double scale = kernel_scale(ctx, conv);

    S.values.resize(omega_grid.size());
    detail::parallel_for(omega_grid.size(), [&](std::size_t j) {
        const double w = omega_grid.points[j];
        const complex ph = -ctx.i_pow_alpha * scale * pow_alpha(ctx, w);
        complex acc(0.0, 0.0);
        if (ctx.classical()) {
            for (std::size_t i = 0; i < nn; ++i) {
                const complex k = std::exp(ph * xa[i]);
                acc += rule.weights[i] * (fpos[i] * k + fneg[i] / k);
            }
        } else {
            for (std::size_t i = 0; i < nn; ++i) {
                const complex kp = mittag_leffler_full(ctx.alpha, ph * xa[i], opts.ml).value;
                const complex km = mittag_leffler_full(ctx.alpha, -ph * xa[i], opts.ml).value;
                acc += rule.weights[i] * (fpos[i] * kp + fneg[i] * km);
            }
        }
        S.values[j] = acc;
    });
    S.omega = std::move(omega_grid);
    return S;
}

inline Spectrum forward(const SampledSignal& f, const AlphaContext& ctx, KernelConvention conv,
                        Grid omega_grid, double X, const TransformOptions& opts = {}) {
    return forward([&](double x) { return f.value_at(x); }, ctx, conv, std::move(omega_grid), X,
                   opts);
}

struct InverseResult {
    SampledSignal signal;
    bool integrability_warning = false;
};

// Inverse of a callable spectrum over [-W, W]:
//   f(x) = factor(conv) * (1/Gamma(1+alpha)) int S(w) E_a(+i^a scale x^a w^a) (dw)^a.
template <class F>
inline InverseResult inverse(F&& spectrum_fn, const AlphaContext& ctx, KernelConvention conv,
                             double W, Grid x_grid, const TransformOptions& opts = {}) {
    if (!(W > 0.0)) throw domain_error("inverse: spectral truncation must be positive");
    const QuadratureRule rule = build_measure_matched_rule(ctx, 0.0, W, opts.nodes);
    const double factor = inverse_prefactor(ctx, conv);
    const double scale = kernel_scale(ctx, conv);

    const std::size_t nn = rule.nodes.size();
    std::vector<complex> Spos(nn), Sneg(nn), wa(nn);
    double abs_est = 0.0;
    for (std::size_t i = 0; i < nn; ++i) {
        Spos[i] = complex(spectrum_fn(rule.nodes[i]));
        Sneg[i] = complex(spectrum_fn(-rule.nodes[i]));
        wa[i] = pow_alpha(ctx, rule.nodes[i]);
        abs_est += rule.weights[i] * (std::abs(Spos[i]) + std::abs(Sneg[i]));
    }

    std::vector<complex> out(x_grid.size());
    detail::parallel_for(x_grid.size(), [&](std::size_t j) {
        const double x = x_grid.points[j];
        const complex ph = ctx.i_pow_alpha * scale * pow_alpha(ctx, x);
        complex acc(0.0, 0.0);
        if (ctx.classical()) {
            for (std::size_t i = 0; i < nn; ++i) {
                const complex k = std::exp(ph * wa[i]);
                acc += rule.weights[i] * (Spos[i] * k + Sneg[i] / k);
            }
        } else {
            for (std::size_t i = 0; i < nn; ++i) {
                const complex kp = mittag_leffler_full(ctx.alpha, ph * wa[i], opts.ml).value;
                const complex km = mittag_leffler_full(ctx.alpha, -ph * wa[i], opts.ml).value;
                acc += rule.weights[i] * (Spos[i] * kp + Sneg[i] * km);
            }
        }
        out[j] = factor * acc;
    });
    InverseResult res;
    res.integrability_warning = abs_est > opts.integrability_bound;
    res.signal = SampledSignal(std::move(x_grid), std::move(out), SupportHint::symmetric_line);
    return res;
}

// Inverse of a sampled Spectrum: integrates the recorded truncated omega range
// against a linear interpolant of the samples.
inline InverseResult inverse(const Spectrum& S, const AlphaContext& ctx, Grid x_grid,
                             const TransformOptions& opts = {}) {
    if (S.alpha != ctx.alpha)
        throw domain_error("inverse: spectrum was recorded at a different alpha");
    const double W = std::max(std::fabs(S.omega.front()), std::fabs(S.omega.back()));
    return inverse([&](double w) { return S.value_at(w); }, ctx, S.convention, W,
                   std::move(x_grid), opts);
}

} // namespace lfc
