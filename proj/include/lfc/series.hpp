#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "lfc/alpha_context.hpp"
#include "lfc/errors.hpp"
#include "lfc/quadrature.hpp"
#include "lfc/special.hpp"

namespace lfc {

// Coefficients C_n, n = -N..N, of the fractal Fourier series on [-l, l],
// normalized by 1/(2l)^alpha. Also exposes the substituted form
// C_n^t = (2l)^alpha C_n / Gamma(1+alpha).
struct SeriesCoefficients {
    double l = 1.0;
    int N = 0;
    double alpha = 1.0;
    std::vector<complex> c; // 2N+1 entries, index n+N

    complex at(int n) const { return c[static_cast<std::size_t>(n + N)]; }
    complex ct(int n) const {
        return at(n) * std::pow(2.0 * l, alpha) / std::tgamma(1.0 + alpha);
    }
};

struct SeriesOptions {
    std::size_t nodes_per_half = 1024;
    MlOptions ml{};
};

// C_n = (1/(2l)^a) int_{-l}^{l} f(x) E_a(-pi^a i^a (nx)^a / l^a) (dx)^a.
// The interval measure is translation covariant -- [-l, l] carries measure
// (2l)^a, anchored at the left end with weight (l-x)^{a-1} -- so C_0 = 1 for
// f = 1 at every alpha. The quadrature splits at 0 because the odd phase
// extension has a kink there: the left half is smooth-weighted Gauss panels,
// the right half the measure-matched rule (which also absorbs the weight
// singularity at +l).
template <class F>
inline SeriesCoefficients series_coefficients(F&& f, double l, int N, const AlphaContext& ctx,
                                              const SeriesOptions& opts = {}) {
    if (!(l > 0.0)) throw domain_error("series_coefficients: half-period must be positive");
    if (N < 0) throw domain_error("series_coefficients: need N >= 0");

    const QuadratureRule left = build_smooth_weighted_rule(ctx, -l, 0.0, l, opts.nodes_per_half);
    const QuadratureRule right = build_measure_matched_rule(ctx, 0.0, l, opts.nodes_per_half);

    const std::size_t nt = left.nodes.size() + right.nodes.size();
    std::vector<double> xs(nt);
    std::vector<double> ws(nt);
    std::vector<complex> fv(nt);
    for (std::size_t i = 0; i < left.nodes.size(); ++i) {
        xs[i] = left.nodes[i];
        ws[i] = left.weights[i];
    }
    for (std::size_t i = 0; i < right.nodes.size(); ++i) {
        xs[left.nodes.size() + i] = right.nodes[i];
        ws[left.nodes.size() + i] = right.weights[i];
    }
    for (std::size_t i = 0; i < nt; ++i) fv[i] = complex(f(xs[i]));

    const double g1a = std::tgamma(1.0 + ctx.alpha);
    const double norm = g1a / std::pow(2.0 * l, ctx.alpha);
    const double pia = std::pow(std::numbers::pi, ctx.alpha);
    const double la = std::pow(l, ctx.alpha);

    SeriesCoefficients out;
    out.l = l;
    out.N = N;
    out.alpha = ctx.alpha;
    out.c.resize(static_cast<std::size_t>(2 * N + 1));
    for (int n = -N; n <= N; ++n) {
        complex acc(0.0, 0.0);
        for (std::size_t i = 0; i < nt; ++i) {
            const complex phase =
                -pia * ctx.i_pow_alpha * pow_alpha(ctx, static_cast<double>(n) * xs[i]) / la;
            acc += ws[i] * fv[i] * mittag_leffler_full(ctx.alpha, phase, opts.ml).value;
        }
        out.c[static_cast<std::size_t>(n + N)] = norm * acc;
    }
    return out;
}

// Partial sum sum_{n=-N}^{N} C_n E_a(+pi^a i^a (nx)^a / l^a), same odd phase
// extension as the analysis side. At alpha = 1 this is the classical sum.
inline complex series_partial_sum(const SeriesCoefficients& sc, double x, const AlphaContext& ctx,
                                  const MlOptions& ml = {}) {
    if (sc.alpha != ctx.alpha)
        throw domain_error("series_partial_sum: coefficients recorded at a different alpha");
    const double pia = std::pow(std::numbers::pi, ctx.alpha);
    const double la = std::pow(sc.l, ctx.alpha);
    complex acc(0.0, 0.0);
    for (int n = -sc.N; n <= sc.N; ++n) {
        const complex phase =
            pia * ctx.i_pow_alpha * pow_alpha(ctx, static_cast<double>(n) * x) / la;
        acc += sc.at(n) * mittag_leffler_full(ctx.alpha, phase, ml).value;
    }
    return acc;
}

} // namespace lfc
