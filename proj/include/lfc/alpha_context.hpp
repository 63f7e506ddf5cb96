#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "lfc/errors.hpp"

namespace lfc {

using complex = std::complex<double>;

// Order alpha in (0,1] together with the two derived constants that appear in
// every kernel: h0 = (2*pi)^alpha / Gamma(1+alpha) and i^alpha = exp(i*pi*alpha/2).
// At alpha = 1 these reduce to 2*pi and i exactly.
struct AlphaContext {
    double alpha;
    double h0;
    complex i_pow_alpha;

    explicit AlphaContext(double a) : alpha(a) {
        if (!(a > 0.0) || !(a <= 1.0))
            throw domain_error("AlphaContext: alpha must lie in (0, 1], got " + std::to_string(a));
        if (a == 1.0) {
            h0 = 2.0 * std::numbers::pi;
            i_pow_alpha = complex(0.0, 1.0);
        } else {
            h0 = std::pow(2.0 * std::numbers::pi, a) / std::tgamma(1.0 + a);
            i_pow_alpha = std::polar(1.0, std::numbers::pi * a / 2.0);
        }
    }

    bool classical() const { return alpha == 1.0; }
};

// The three omega-parametrizations of the transform. They differ by the scale
// factor inside the kernel argument and by the inverse prefactor; the forward
// integral is Gamma-normalized the same way in all three.
enum class KernelConvention { case1, case2, case3 };

inline double kernel_scale(const AlphaContext& ctx, KernelConvention conv) {
    switch (conv) {
        case KernelConvention::case1: return 1.0;
        case KernelConvention::case2: return std::pow(2.0 * std::numbers::pi, ctx.alpha);
        default:                      return ctx.h0;
    }
}

// Inverse prefactor relative to the Gamma-normalized line integral:
// the inverse is  factor * I[S * kernel(+)], where I already carries 1/Gamma(1+alpha).
// Case 1 uses a bare 1/(2*pi)^alpha prefactor, case 2 a bare 1, case 3 the
// symmetric 1/Gamma(1+alpha); dividing each by the 1/Gamma(1+alpha) inside I gives:
inline double inverse_prefactor(const AlphaContext& ctx, KernelConvention conv) {
    const double g = std::tgamma(1.0 + ctx.alpha);
    switch (conv) {
        case KernelConvention::case1: return g / std::pow(2.0 * std::numbers::pi, ctx.alpha); // = 1/h0
        case KernelConvention::case2: return g;
        default:                      return 1.0;
    }
}

inline std::string to_string(KernelConvention conv) {
    switch (conv) {
        case KernelConvention::case1: return "case1";
        case KernelConvention::case2: return "case2";
        default:                      return "case3";
    }
}

inline KernelConvention parse_convention(const std::string& s) {
    if (s == "case1") return KernelConvention::case1;
    if (s == "case2") return KernelConvention::case2;
    if (s == "case3") return KernelConvention::case3;
    throw domain_error("unknown kernel convention '" + s + "' (expected case1|case2|case3)");
}

} // namespace lfc
