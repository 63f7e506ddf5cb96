#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "lfc/alpha_context.hpp"
#include "lfc/errors.hpp"
#include "lfc/grid.hpp"
#include "lfc/parallel.hpp"
#include "lfc/quadrature.hpp"

namespace lfc {

struct ConvolveOptions {
    std::size_t rule_nodes = 32; // per-point Gauss rule (scaled from one normalized rule)
};

// Causal convolution (1/Gamma(1+a)) int_0^x f1(t) f2(x-t) (dt)^a on a common
// uniform grid, one matched-quadrature evaluation per output point. The rule
// for [0, x] is the normalized [0, 1] rule with nodes scaled by x and weights
// by x^alpha, so construction happens once.
inline SampledSignal convolve_numeric(const SampledSignal& f1, const SampledSignal& f2,
                                      const AlphaContext& ctx, const ConvolveOptions& opts = {}) {
    if (f1.grid.size() != f2.grid.size())
        throw domain_error("convolve_numeric: grids differ in size");
    for (std::size_t i = 0; i < f1.grid.size(); ++i)
        if (std::fabs(f1.grid.points[i] - f2.grid.points[i]) >
            1e-12 * std::max(1.0, std::fabs(f1.grid.points[i])))
            throw domain_error("convolve_numeric: grids differ");
    if (!f1.grid.uniform) throw domain_error("convolve_numeric: grid must be uniform");
    if (f1.grid.front() < 0.0)
        throw domain_error("convolve_numeric: supports must be causal (grid starts at >= 0)");

    const QuadratureRule unit = build_measure_matched_rule(ctx, 0.0, 1.0, opts.rule_nodes);

    std::vector<complex> out(f1.grid.size());
    detail::parallel_for(f1.grid.size(), [&](std::size_t m) {
        const double x = f1.grid.points[m];
        if (x <= 0.0) {
            out[m] = complex(0.0, 0.0);
            return;
        }
        const double xa = std::pow(x, ctx.alpha);
        complex acc(0.0, 0.0);
        for (std::size_t i = 0; i < unit.nodes.size(); ++i) {
            const double t = x * unit.nodes[i];
            acc += unit.weights[i] * xa * (f1.value_at(t) * f2.value_at(x - t));
        }
        out[m] = acc;
    });
    return SampledSignal(f1.grid, std::move(out), SupportHint::half_line);
}

} // namespace lfc
