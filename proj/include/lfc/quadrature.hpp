#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include <boost/math/special_functions/gamma.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "lfc/alpha_context.hpp"
#include "lfc/errors.hpp"
#include "lfc/grid.hpp"

namespace lfc {

enum class QuadMode { literal_riemann, measure_matched };

// Nodes/weights realizing the Gamma-normalized order-alpha integral over
// [a, b]: applying the rule to f returns (1/Gamma(1+alpha)) int f (dx)^alpha
// in the Theorem-2-consistent (measure-matched) sense, equivalently
// (1/Gamma(alpha)) int_a^b f(x) (b-x)^{alpha-1} dx.
struct QuadratureRule {
    QuadMode mode = QuadMode::measure_matched;
    double a = 0.0;
    double b = 1.0;
    double alpha = 1.0;
    std::vector<double> nodes;
    std::vector<double> weights;

    template <class F>
    auto apply(F&& f) const {
        using R = decltype(f(0.0) * 1.0);
        R sum{};
        for (std::size_t i = 0; i < nodes.size(); ++i) sum += weights[i] * f(nodes[i]);
        return sum;
    }
};

namespace detail {

using bigfloat = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<100>>;

// Chebyshev algorithm: raw moments -> three-term recurrence coefficients of
// the monic orthogonal polynomials. Run in 100-digit floats: the map is
// exponentially ill-conditioned and burns ~1.5 decimal digits per degree.
inline void moments_to_recurrence(const std::vector<bigfloat>& m, std::size_t n,
                                  std::vector<bigfloat>& ak, std::vector<bigfloat>& bk) {
    ak.assign(n, bigfloat(0));
    bk.assign(n, bigfloat(0));
    std::vector<bigfloat> sig_prev(2 * n, bigfloat(0));
    std::vector<bigfloat> sig_cur(m.begin(), m.end());
    ak[0] = m[1] / m[0];
    bk[0] = m[0];
    for (std::size_t k = 1; k < n; ++k) {
        std::vector<bigfloat> sig_new(2 * n, bigfloat(0));
        for (std::size_t l = k; l + k < 2 * n; ++l)
            sig_new[l] = sig_cur[l + 1] - ak[k - 1] * sig_cur[l] - bk[k - 1] * sig_prev[l];
        if (!(sig_new[k] > 0))
            throw conditioning_error("quadrature: moment matrix lost positivity (precision exhausted)");
        ak[k] = sig_new[k + 1] / sig_new[k] - sig_cur[k] / sig_cur[k - 1];
        bk[k] = sig_new[k] / sig_cur[k - 1];
        sig_prev.swap(sig_cur);
        sig_cur.swap(sig_new);
    }
}

// Golub-Welsch via symmetric tridiagonal QL with implicit shifts, rotating the
// first-row unit vector alongside to obtain the weights. Classic imtqlx shape.
template <class Real>
inline void tridiag_eigen(std::vector<Real>& d, std::vector<Real>& e, std::vector<Real>& z) {
    using std::fabs;
    using std::sqrt;
    const std::size_t n = d.size();
    if (n == 1) return;
    const Real eps = std::numeric_limits<Real>::epsilon();
    e.resize(n, Real(0));
    for (std::size_t l = 0; l < n; ++l) {
        for (int iter = 0; iter < 60; ++iter) {
            std::size_t mm = l;
            for (; mm + 1 < n; ++mm) {
                const Real dd = fabs(d[mm]) + fabs(d[mm + 1]);
                if (fabs(e[mm]) <= eps * dd) break;
            }
            if (mm == l) break;
            if (iter == 59)
                throw conditioning_error("quadrature: tridiagonal eigensolver failed to converge");
            Real g = (d[l + 1] - d[l]) / (2 * e[l]);
            Real r = sqrt(g * g + 1);
            g = d[mm] - d[l] + e[l] / (g + (g >= 0 ? fabs(r) : -fabs(r)));
            Real s(1), c(1), p(0);
            for (std::size_t i = mm; i-- > l;) {
                Real f = s * e[i];
                const Real bq = c * e[i];
                if (fabs(f) >= fabs(g)) {
                    c = g / f;
                    r = sqrt(c * c + 1);
                    e[i + 1] = f * r;
                    s = 1 / r;
                    c *= s;
                } else {
                    s = f / g;
                    r = sqrt(s * s + 1);
                    e[i + 1] = g * r;
                    c = 1 / r;
                    s *= c;
                }
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2 * c * bq;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - bq;
                f = z[i + 1];
                z[i + 1] = s * z[i] + c * f;
                z[i] = c * z[i] - s * f;
            }
            d[l] -= p;
            e[l] = g;
            e[mm] = Real(0);
        }
    }
    // sort ascending, carrying the weight vector along
    for (std::size_t i = 0; i + 1 < n; ++i) {
        std::size_t kmin = i;
        for (std::size_t j = i + 1; j < n; ++j)
            if (d[j] < d[kmin]) kmin = j;
        if (kmin != i) {
            std::swap(d[i], d[kmin]);
            std::swap(z[i], z[kmin]);
        }
    }
}

// Gauss rule on [0,1] in the transformed variable u = ((x-a)/(b-a))^alpha,
// where the measure-matched moments are exactly the polynomial moments
//   M_j = Gamma(1+j a) / Gamma(1+(j+1) a).
// Returns u-nodes and u-weights for the normalized interval (measure M_0).
inline void muentz_gauss_unit(double alpha, std::size_t n, std::vector<double>& unodes,
                              std::vector<double>& uweights) {
    const bigfloat a(alpha);
    std::vector<bigfloat> m(2 * n);
    for (std::size_t j = 0; j < 2 * n; ++j)
        m[j] = boost::math::tgamma(bigfloat(1) + bigfloat(static_cast<int>(j)) * a) /
               boost::math::tgamma(bigfloat(1) + bigfloat(static_cast<int>(j + 1)) * a);
    std::vector<bigfloat> ak, bk;
    moments_to_recurrence(m, n, ak, bk);
    std::vector<bigfloat> d = ak;
    std::vector<bigfloat> e(n, bigfloat(0));
    std::vector<bigfloat> z(n, bigfloat(0));
    for (std::size_t i = 1; i < n; ++i) {
        if (!(bk[i] > 0))
            throw conditioning_error("quadrature: negative recurrence coefficient");
        e[i - 1] = sqrt(bk[i]);
    }
    z[0] = 1;
    tridiag_eigen<bigfloat>(d, e, z);
    unodes.resize(n);
    uweights.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        unodes[i] = static_cast<double>(d[i]);
        uweights[i] = static_cast<double>(bk[0] * z[i] * z[i]);
    }
}

// Gauss-Legendre nodes/weights on [-1, 1] by Newton iteration on the Legendre
// polynomial (standard closed-form construction, any n).
inline void gauss_legendre(std::size_t n, std::vector<double>& x, std::vector<double>& w) {
    x.resize(n);
    w.resize(n);
    const double pi = 3.14159265358979323846;
    for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
        double t = std::cos(pi * (static_cast<double>(i) + 0.75) / (static_cast<double>(n) + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * static_cast<double>(j) + 1.0) * t * p1 - static_cast<double>(j) * p2) /
                     (static_cast<double>(j) + 1.0);
            }
            pp = static_cast<double>(n) * (t * p0 - p1) / (t * t - 1.0);
            const double dt = p0 / pp;
            t -= dt;
            if (std::fabs(dt) < 1e-15) break;
        }
        x[i] = -t;
        x[n - 1 - i] = t;
        w[i] = 2.0 / ((1.0 - t * t) * pp * pp);
        w[n - 1 - i] = w[i];
    }
}

// Gauss-Jacobi rule for weight (1-t)^A (1+t)^0 on [-1,1] from the closed-form
// Jacobi recurrence (A > -1), via long-double Golub-Welsch.
inline void gauss_jacobi_right(double A, std::size_t n, std::vector<double>& x,
                               std::vector<double>& w) {
    using ld = long double;
    const ld Al = static_cast<ld>(A);
    std::vector<ld> d(n), e(n, 0.0L), z(n, 0.0L);
    // monic Jacobi(A, 0) recurrence on [-1, 1]
    const ld ab = Al; // A + B with B = 0
    for (std::size_t k = 0; k < n; ++k) {
        const ld kk = static_cast<ld>(k);
        if (k == 0)
            d[0] = -Al / (ab + 2);
        else
            d[k] = -(Al * Al) / ((2 * kk + ab) * (2 * kk + ab + 2));
        if (k >= 1) {
            ld num = 4 * kk * (kk + Al) * kk * (kk + ab);
            ld den = (2 * kk + ab) * (2 * kk + ab) * (2 * kk + ab + 1) * (2 * kk + ab - 1);
            e[k - 1] = sqrtl(num / den);
        }
    }
    // mu0 = int_{-1}^{1} (1-t)^A dt = 2^{A+1} / (A+1)
    const ld mu0 = powl(2.0L, Al + 1) / (Al + 1);
    z[0] = 1.0L;
    std::vector<ld> dd = d;
    tridiag_eigen<ld>(dd, e, z);
    x.resize(n);
    w.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = static_cast<double>(dd[i]);
        w[i] = static_cast<double>(mu0 * z[i] * z[i]);
    }
}

} // namespace detail

// Worst relative error of the rule on the shifted-monomial family
// (x-a)^{k*alpha}, k = 0..2n-1, against the Theorem-2 closed forms.
inline double moment_check(const QuadratureRule& rule, const AlphaContext& ctx, std::size_t kmax) {
    double worst = 0.0;
    const double len = rule.b - rule.a;
    for (std::size_t k = 0; k <= kmax; ++k) {
        double sum = 0.0;
        const double ka = static_cast<double>(k) * ctx.alpha;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i)
            sum += rule.weights[i] * std::pow(rule.nodes[i] - rule.a, ka);
        const double exact = std::exp(std::lgamma(1.0 + ka) - std::lgamma(1.0 + ka + ctx.alpha)) *
                             std::pow(len, ka + ctx.alpha);
        worst = std::max(worst, std::fabs(sum - exact) / std::fabs(exact));
    }
    return worst;
}

// Measure-matched rule on [a, b]: reproduces the Theorem-2 values
// Gamma(1+ka)/Gamma(1+(k+1)a) (b-a)^{(k+1)a} on (x-a)^{k*alpha}.
//   n <= 64: a single Gauss rule, exact on k <= 2n-1 (validated; throws
//            conditioning_error if the check exceeds 1e-10).
//   n > 64:  a composite realization of the same weighted integral
//            (1/Gamma(alpha)) int f (b-x)^{alpha-1} dx: the first panel is
//            Gauss in u = ((x-a)/len)^alpha to absorb the x^alpha branch at a,
//            middle panels are Gauss-Legendre with the weight evaluated, and
//            the last panel is Gauss-Jacobi absorbing the right-end singularity.
inline QuadratureRule build_measure_matched_rule(const AlphaContext& ctx, double a, double b,
                                                 std::size_t n) {
    if (!(b > a)) throw domain_error("build_measure_matched_rule: need b > a");
    if (n < 1) throw domain_error("build_measure_matched_rule: need n >= 1");
    QuadratureRule rule;
    rule.mode = QuadMode::measure_matched;
    rule.a = a;
    rule.b = b;
    rule.alpha = ctx.alpha;
    const double len = b - a;
    const double inv_alpha = 1.0 / ctx.alpha;

    if (n <= 64) {
        std::vector<double> un, uw;
        detail::muentz_gauss_unit(ctx.alpha, n, un, uw);
        const double scale = std::pow(len, ctx.alpha);
        rule.nodes.resize(n);
        rule.weights.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            rule.nodes[i] = a + len * std::pow(un[i], inv_alpha);
            rule.weights[i] = uw[i] * scale;
        }
        const double worst = moment_check(rule, ctx, 2 * n - 1);
        if (worst > 1e-10)
            throw conditioning_error("build_measure_matched_rule: moment reproduction error " +
                                     std::to_string(worst) + " exceeds 1e-10");
        return rule;
    }

    const std::size_t per = 32;
    const std::size_t panels = (n + per - 1) / per;
    const double g_alpha = std::tgamma(ctx.alpha);
    std::vector<double> gx, gw;
    detail::gauss_legendre(per, gx, gw);
    std::vector<double> jx, jw;
    detail::gauss_jacobi_right(ctx.alpha - 1.0, per, jx, jw);

    for (std::size_t p = 0; p < panels; ++p) {
        const double pa = a + len * static_cast<double>(p) / static_cast<double>(panels);
        const double pb = a + len * static_cast<double>(p + 1) / static_cast<double>(panels);
        const double plen = pb - pa;
        if (p + 1 == panels) {
            // (1/G(a)) int_pa^b f (b-x)^{a-1} dx with x = b - plen*(1-t)/2:
            // (b-x)^{a-1} = (plen/2)^{a-1} (1-t)^{a-1}
            const double jac = std::pow(plen / 2.0, ctx.alpha - 1.0) * (plen / 2.0) / g_alpha;
            for (std::size_t i = 0; i < per; ++i) {
                rule.nodes.push_back(pb - plen * (1.0 - jx[i]) / 2.0);
                rule.weights.push_back(jw[i] * jac);
            }
        } else if (p == 0 && ctx.alpha < 1.0) {
            // u-substitution x = a + plen * u^{1/alpha}: absorbs the x^alpha
            // branch point of the integrand family at the left endpoint.
            for (std::size_t i = 0; i < per; ++i) {
                const double u = 0.5 * (gx[i] + 1.0);
                const double x = pa + plen * std::pow(u, inv_alpha);
                const double du = 0.5 * gw[i];
                const double jac = plen * inv_alpha * std::pow(u, inv_alpha - 1.0);
                rule.nodes.push_back(x);
                rule.weights.push_back(du * jac * std::pow(b - x, ctx.alpha - 1.0) / g_alpha);
            }
        } else {
            for (std::size_t i = 0; i < per; ++i) {
                const double x = pa + plen * 0.5 * (gx[i] + 1.0);
                rule.nodes.push_back(x);
                rule.weights.push_back(0.5 * plen * gw[i] * std::pow(b - x, ctx.alpha - 1.0) /
                                       g_alpha);
            }
        }
    }
    return rule;
}

// Panels of Gauss-Legendre with the weight (X-x)^{alpha-1}/Gamma(alpha)
// evaluated at the nodes; valid when [a, b] stays strictly left of X so the
// weight is analytic on the whole range. Used for the left half of two-sided
// integrals whose measure is anchored at the far right end X.
inline QuadratureRule build_smooth_weighted_rule(const AlphaContext& ctx, double a, double b,
                                                 double X, std::size_t n) {
    if (!(b > a)) throw domain_error("build_smooth_weighted_rule: need b > a");
    if (!(X >= b)) throw domain_error("build_smooth_weighted_rule: weight anchor left of interval");
    QuadratureRule rule;
    rule.mode = QuadMode::measure_matched;
    rule.a = a;
    rule.b = b;
    rule.alpha = ctx.alpha;
    const std::size_t per = 32;
    const std::size_t panels = (n + per - 1) / per;
    const double g_alpha = std::tgamma(ctx.alpha);
    std::vector<double> gx, gw;
    detail::gauss_legendre(per, gx, gw);
    for (std::size_t p = 0; p < panels; ++p) {
        const double pa = a + (b - a) * static_cast<double>(p) / static_cast<double>(panels);
        const double pb = a + (b - a) * static_cast<double>(p + 1) / static_cast<double>(panels);
        for (std::size_t i = 0; i < per; ++i) {
            const double x = pa + (pb - pa) * 0.5 * (gx[i] + 1.0);
            rule.nodes.push_back(x);
            rule.weights.push_back(0.5 * (pb - pa) * gw[i] * std::pow(X - x, ctx.alpha - 1.0) /
                                   g_alpha);
        }
    }
    return rule;
}

// Literal Eq-2.8 sum over the partition carried by the signal's grid:
// (1/Gamma(1+alpha)) sum f(t_j) (t_{j+1}-t_j)^alpha, left endpoints, no limit
// claim. For f = 1 on [0,1] with N uniform cells this equals
// N^{1-alpha}/Gamma(1+alpha), which diverges as N grows when alpha < 1; that
// growth is documented, tested behavior.
inline complex lf_integral_riemann(const SampledSignal& f, const AlphaContext& ctx) {
    if (f.grid.size() < 2) throw domain_error("lf_integral_riemann: empty grid");
    complex sum(0.0, 0.0);
    for (std::size_t j = 0; j + 1 < f.grid.size(); ++j)
        sum += f.values[j] * std::pow(f.grid.points[j + 1] - f.grid.points[j], ctx.alpha);
    return sum / std::tgamma(1.0 + ctx.alpha);
}

template <class F>
inline complex lf_integral_riemann(F&& f, const AlphaContext& ctx, double a, double b,
                                   std::size_t cells) {
    if (a == b) return complex(0.0, 0.0);
    if (b < a) return -lf_integral_riemann(f, ctx, b, a, cells);
    if (cells < 1) throw domain_error("lf_integral_riemann: need at least one cell");
    const double h = (b - a) / static_cast<double>(cells);
    const double ha = std::pow(h, ctx.alpha);
    complex sum(0.0, 0.0);
    for (std::size_t j = 0; j < cells; ++j)
        sum += complex(f(a + h * static_cast<double>(j))) * ha;
    return sum / std::tgamma(1.0 + ctx.alpha);
}

template <class F>
inline complex lf_integral_matched(F&& f, const QuadratureRule& rule) {
    complex sum(0.0, 0.0);
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        sum += rule.weights[i] * complex(f(rule.nodes[i]));
    return sum;
}

inline complex lf_integral_matched(const SampledSignal& f, const QuadratureRule& rule) {
    return lf_integral_matched([&](double x) { return f.value_at(x); }, rule);
}

struct LineIntegralOptions {
    std::size_t nodes = 4096;
};

// Two-sided integral over [-X, X], Gamma-normalized, realized as two
// half-line integrals anchored at 0 over the same rule (the negative axis is
// reached by evaluating f(-x); phases inside f use the odd extension).
template <class F>
inline complex lf_integral_line(F&& f, const AlphaContext& ctx, double X,
                                const LineIntegralOptions& opts = {}) {
    if (!(X > 0.0)) throw domain_error("lf_integral_line: truncation must be positive");
    const QuadratureRule rule = build_measure_matched_rule(ctx, 0.0, X, opts.nodes);
    complex sum(0.0, 0.0);
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double x = rule.nodes[i];
        sum += rule.weights[i] * (complex(f(x)) + complex(f(-x)));
    }
    return sum;
}

// Same as lf_integral_line but reusing a prebuilt [0, X] rule.
template <class F>
inline complex lf_integral_line(F&& f, const QuadratureRule& half_rule) {
    complex sum(0.0, 0.0);
    for (std::size_t i = 0; i < half_rule.nodes.size(); ++i) {
        const double x = half_rule.nodes[i];
        sum += half_rule.weights[i] * (complex(f(x)) + complex(f(-x)));
    }
    return sum;
}

} // namespace lfc
