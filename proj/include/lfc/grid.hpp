#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "lfc/alpha_context.hpp"
#include "lfc/errors.hpp"

namespace lfc {

// Strictly increasing real sample grid.
struct Grid {
    std::vector<double> points;
    bool uniform = false;

    static Grid uniform_grid(double a, double b, std::size_t n) {
        if (n < 2) throw domain_error("Grid: need at least 2 points");
        if (!(a < b)) throw domain_error("Grid: need a < b");
        Grid g;
        g.points.resize(n);
        const double h = (b - a) / static_cast<double>(n - 1);
        for (std::size_t i = 0; i < n; ++i) g.points[i] = a + h * static_cast<double>(i);
        g.points.back() = b;
        g.uniform = true;
        return g;
    }

    static Grid from_points(std::vector<double> pts) {
        if (pts.size() < 2) throw domain_error("Grid: need at least 2 points");
        for (std::size_t i = 1; i < pts.size(); ++i)
            if (!(pts[i] > pts[i - 1]))
                throw domain_error("Grid: points must be strictly increasing");
        Grid g;
        g.points = std::move(pts);
        double h0 = g.points[1] - g.points[0];
        g.uniform = true;
        for (std::size_t i = 1; i + 1 < g.points.size(); ++i)
            if (std::fabs((g.points[i + 1] - g.points[i]) - h0) > 1e-12 * std::fabs(h0))
                g.uniform = false;
        return g;
    }

    std::size_t size() const { return points.size(); }
    double front() const { return points.front(); }
    double back() const { return points.back(); }
};

enum class SupportHint { half_line, symmetric_line, interval };

// Complex samples over a grid, plus a hint for how to extend beyond it.
struct SampledSignal {
    Grid grid;
    std::vector<complex> values;
    SupportHint support = SupportHint::interval;

    SampledSignal() = default;
    SampledSignal(Grid g, std::vector<complex> v, SupportHint s = SupportHint::interval)
        : grid(std::move(g)), values(std::move(v)), support(s) {
        if (grid.size() != values.size())
            throw domain_error("SampledSignal: grid/value lengths differ");
        for (const auto& c : values)
            if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
                throw domain_error("SampledSignal: values must be finite");
    }

    // Linear interpolation inside the grid; outside, half-line signals are 0
    // left of the grid and all signals are 0 beyond it.
    complex value_at(double x) const {
        const auto& p = grid.points;
        if (x < p.front() || x > p.back()) return complex(0.0, 0.0);
        auto hi = std::lower_bound(p.begin(), p.end(), x);
        if (hi == p.begin()) return values.front();
        const std::size_t i = static_cast<std::size_t>(hi - p.begin());
        if (i >= p.size()) return values.back();
        const double x0 = p[i - 1], x1 = p[i];
        const double w = (x - x0) / (x1 - x0);
        return values[i - 1] * (1.0 - w) + values[i] * w;
    }

    template <class F>
    static SampledSignal from_function(const Grid& g, F&& f, SupportHint s = SupportHint::interval) {
        std::vector<complex> v(g.size());
        for (std::size_t i = 0; i < g.size(); ++i) v[i] = complex(f(g.points[i]));
        return SampledSignal(g, std::move(v), s);
    }
};

} // namespace lfc
