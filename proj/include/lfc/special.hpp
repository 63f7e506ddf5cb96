#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <numbers>

#include "lfc/alpha_context.hpp"
#include "lfc/errors.hpp"

namespace lfc {

// Gamma for positive real arguments only; negative/zero arguments are out of
// scope for this library.
inline double gamma_fn(double x) {
    if (!(x > 0.0))
        throw domain_error("gamma_fn: argument must be positive");
    return std::tgamma(x);
}

// x^alpha extended to negative x as sign(x)*|x|^alpha, so the alpha = 1 limit
// reproduces the classical phase x*omega on the whole line.
inline double pow_alpha(const AlphaContext& ctx, double x) {
    if (ctx.alpha == 1.0) return x;
    if (x == 0.0) return 0.0;
    return std::copysign(std::pow(std::fabs(x), ctx.alpha), x);
}

struct MlOptions {
    double z_max = 50.0;    // |z| beyond this is flagged as reduced confidence
    int max_terms = 10000;  // hard cap for the power series
};

enum class MlMethod { exponential, taylor, asymptotic };

struct MlResult {
    complex value;
    int terms_used = 0;
    bool reduced_confidence = false;
    MlMethod method = MlMethod::taylor;
};

namespace detail {

// Power series sum_{k>=0} z^k / Gamma(1+k*alpha), adaptively truncated: stop
// once the term magnitude falls below 1e-16 times the running maximum of the
// partial-sum magnitudes (two consecutive hits, so the pre-hump region cannot
// trigger an early stop).
inline MlResult ml_taylor(double alpha, complex z, const MlOptions& opts) {
    MlResult r;
    r.method = MlMethod::taylor;
    complex sum(1.0, 0.0); // k = 0 term
    complex term(1.0, 0.0);
    double running_max = 1.0;
    int below = 0;
    double lg_prev = 0.0; // lgamma(1 + 0*alpha)
    for (int k = 0; k < opts.max_terms; ++k) {
        const double lg_next = std::lgamma(1.0 + (k + 1) * alpha);
        term *= z * std::exp(lg_prev - lg_next);
        lg_prev = lg_next;
        sum += term;
        r.terms_used = k + 2;
        const double am = std::abs(sum);
        if (am > running_max) running_max = am;
        if (!std::isfinite(am))
            throw convergence_error("mittag_leffler: series overflowed (|z| too large for the Taylor regime)");
        if (std::abs(term) <= 1e-16 * running_max) {
            if (++below >= 2) {
                r.value = sum;
                return r;
            }
        } else {
            below = 0;
        }
    }
    throw convergence_error("mittag_leffler: series did not converge within the term cap");
}

// Large-|z| expansion for 0 < alpha < 1:
//   E_alpha(z) = [|arg z| <= alpha*pi] (1/alpha) exp(z^{1/alpha})
//                - sum_{k>=1} z^{-k} / Gamma(1 - alpha k),
// with 1/Gamma(1-alpha k) = Gamma(alpha k) sin(pi alpha k) / pi and the
// algebraic series truncated at its smallest term.
inline MlResult ml_asymptotic(double alpha, complex z, const MlOptions&) {
    MlResult r;
    r.method = MlMethod::asymptotic;
    complex acc(0.0, 0.0);
    complex zinv_k(1.0, 0.0);
    double prev_mag = std::numeric_limits<double>::infinity();
    int used = 0;
    for (int k = 1; k <= 400; ++k) {
        zinv_k /= z;
        const double ak = alpha * k;
        if (ak >= 170.0) break; // Gamma(ak) would overflow; terms are long converged here
        const double c = std::tgamma(ak) * std::sin(std::numbers::pi * ak) / std::numbers::pi;
        const complex term = -zinv_k * c;
        const double mag = std::abs(term);
        if (mag != 0.0) {
            if (mag > prev_mag) break; // optimal truncation: terms started growing
            prev_mag = mag;
        }
        acc += term;
        used = k;
        if (mag != 0.0 && mag < 1e-18 * std::max(1e-300, std::abs(acc))) break;
    }
    r.terms_used = used;
    if (std::abs(std::arg(z)) <= alpha * std::numbers::pi + 1e-15) {
        const complex w = std::exp(std::log(z) / alpha);
        acc += std::exp(w) / alpha;
    }
    if (!std::isfinite(std::abs(acc)))
        throw convergence_error("mittag_leffler: asymptotic evaluation overflowed (argument in the growth sector)");
    r.value = acc;
    return r;
}

// |z| below which the Taylor sum keeps full accuracy in doubles: the largest
// term grows like exp(|z|^{1/alpha}), so cap |z|^{1/alpha} at 18.
inline double ml_taylor_radius(double alpha) { return std::pow(18.0, alpha); }

} // namespace detail

// One-parameter Mittag-Leffler function E_alpha(z) = sum z^k / Gamma(1+k*alpha).
// alpha = 1 is exp(z) exactly. For alpha < 1 the power series is used while it
// is numerically meaningful; beyond that radius the standard large-argument
// expansion takes over (the plain series loses all digits to cancellation
// there, and overflows long before the |z| <= z_max guard).
inline MlResult mittag_leffler_full(double alpha, complex z, const MlOptions& opts = {}) {
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw domain_error("mittag_leffler: alpha must lie in (0, 1]");
    MlResult r;
    r.reduced_confidence = std::abs(z) > opts.z_max;
    if (alpha == 1.0) {
        r.method = MlMethod::exponential;
        r.value = std::exp(z);
        r.terms_used = 0;
        return r;
    }
    const double az = std::abs(z);
    if (az == 0.0) {
        r.value = complex(1.0, 0.0);
        return r;
    }
    MlResult core = az <= detail::ml_taylor_radius(alpha) ? detail::ml_taylor(alpha, z, opts)
                                                          : detail::ml_asymptotic(alpha, z, opts);
    core.reduced_confidence = r.reduced_confidence;
    return core;
}

inline complex mittag_leffler(const AlphaContext& ctx, complex z, const MlOptions& opts = {}) {
    return mittag_leffler_full(ctx.alpha, z, opts).value;
}

// Transform kernel E_alpha(sign * i^alpha * scale * x^alpha * omega^alpha)
// with the odd extension of ^alpha on both factors. sign = -1 is the forward
// (analysis) kernel, +1 the inverse one. Under case 3 at alpha = 1 this is
// exp(sign * 2*pi*i * x * omega).
inline complex kernel(const AlphaContext& ctx, double x, double omega, int sign,
                      KernelConvention conv, const MlOptions& opts = {}) {
    const double magnitude = kernel_scale(ctx, conv) * pow_alpha(ctx, x) * pow_alpha(ctx, omega);
    const complex arg = static_cast<double>(sign) * ctx.i_pow_alpha * magnitude;
    if (ctx.classical()) return std::exp(arg);
    return mittag_leffler_full(ctx.alpha, arg, opts).value;
}

} // namespace lfc
