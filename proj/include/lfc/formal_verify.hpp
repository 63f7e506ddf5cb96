#pragma once

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "lfc/alpha_context.hpp"
#include "lfc/formal.hpp"
#include "lfc/rational_spectrum.hpp"
#include "lfc/verification.hpp"

namespace lfc {

// Identity checks carried out at the RationalSpectrum coefficient level,
// where the transform theorems hold exactly on the closed-form family.
// Discrepancies here are pure floating dust; the default tolerance is 1e-12.

namespace detail {

inline double spectrum_norm(const RationalSpectrum& s) {
    double m = 0.0;
    for (const auto& t : s.terms()) m = std::max(m, std::abs(t.coeff));
    return m;
}

inline VerificationReport spectra_report(Identity id, const RationalSpectrum& lhs,
                                         const RationalSpectrum& rhs, double tol,
                                         std::string variant) {
    VerificationReport rep;
    rep.id = id;
    rep.lhs_norm = spectrum_norm(lhs);
    rep.rhs_norm = spectrum_norm(rhs);
    rep.max_abs_discrepancy = max_coeff_discrepancy(lhs, rhs);
    rep.tolerance = tol;
    rep.variant = std::move(variant);
    rep.finish();
    return rep;
}

} // namespace detail

// F{a f + b g} = a F{f} + b F{g}.
inline VerificationReport verify_linearity(const AlphaContext& ctx, const FormalExpr& f,
                                           const FormalExpr& g, complex a, complex b,
                                           double tol = 1e-12) {
    const auto lhs = transform_closed_form(add(scale(f, a), scale(g, b)), ctx);
    const auto rhs = add(scale(transform_closed_form(f, ctx), a),
                         scale(transform_closed_form(g, ctx), b));
    return detail::spectra_report(Identity::linearity, lhs, rhs, tol, "");
}

// F{f(ax)} = a^{-alpha} S(omega/a) for a > 0.
inline VerificationReport verify_scaling(const AlphaContext& ctx, const FormalExpr& f, double a,
                                         double tol = 1e-12) {
    const auto lhs = transform_closed_form(scale_argument(f, ctx, a), ctx);
    const auto rhs = scale(scaled_argument(transform_closed_form(f, ctx), ctx, a),
                           complex(std::pow(a, -ctx.alpha), 0.0));
    return detail::spectra_report(Identity::scaling, lhs, rhs, tol, "");
}

// Modulation with the h0 factor restored: multiplying the signal by
// E_alpha(-i^a h0 c^a x^a) shifts the spectral variable, s -> s + i^a h0 c^a,
// which is what "omega + c" means in the fractal algebra. The printed form
// without h0 shifts by i^a c^a instead and does not match the transform of
// the modulated signal (checked and named in the variant notes).
inline VerificationReport verify_modulation(const AlphaContext& ctx, const FormalExpr& f, double c,
                                            double tol = 1e-12) {
    const complex ca = std::pow(c, ctx.alpha);
    const complex mu_h0 = -ctx.i_pow_alpha * ctx.h0 * ca;
    const auto lhs = transform_closed_form(mul_exponential(f, mu_h0), ctx);
    const auto rhs = shift_s(transform_closed_form(f, ctx), ctx.i_pow_alpha * ctx.h0 * ca);
    auto rep = detail::spectra_report(Identity::modulation, lhs, rhs, tol,
                                      "with h0: E_a(-i^a h0 c^a x^a) <-> S(omega+c)");
    // printed variant (no h0): only coincides when h0 = 1, i.e. never on (0,1]
    const auto rhs_printed = shift_s(transform_closed_form(f, ctx), ctx.i_pow_alpha * ca);
    const double printed = max_coeff_discrepancy(lhs, rhs_printed);
    if (printed > tol)
        rep.variant += "; printed variant without h0 fails (discrepancy " +
                       std::to_string(printed) + ")";
    return rep;
}

// Derivative rule. The sign consistent with the classical alpha = 1 rule is
//   F{f^(a)} = + i^a h0 omega^a F{f} - f(0+),
// the boundary term coming from the Theorem-4 integration by parts on the
// half line. The paper's printed sign (-i^a h0 omega^a, Eq with no boundary
// term) fails already at alpha = 1; both variants are evaluated and named.
inline VerificationReport verify_derivative_rule(const AlphaContext& ctx, const FormalExpr& f,
                                                 double tol = 1e-12) {
    const auto lhs = transform_closed_form(lf_derivative(f, ctx), ctx);
    const auto Sf = transform_closed_form(f, ctx);
    const auto boundary = RationalSpectrum::constant(value_at_anchor(f));
    const auto rhs_plus = subtract(mul_s(Sf), boundary);
    const auto rhs_printed = scale(mul_s(Sf), complex(-1.0, 0.0));

    auto rep = detail::spectra_report(Identity::derivative_rule, lhs, rhs_plus, tol,
                                      "classical-consistent: +i^a h0 w^a S - f(0+)");
    const double printed = max_coeff_discrepancy(lhs, rhs_printed);
    rep.variant += rep.pass ? "; holds" : "; FAILS";
    rep.variant += "; printed variant (-i^a h0 w^a S) discrepancy " + std::to_string(printed) +
                   (printed > tol ? " -> fails" : " -> holds");
    return rep;
}

// Theorem 6 on the closed-form family: the transform of the formal causal
// convolution equals the partial-fraction product of the transforms, exactly.
inline VerificationReport verify_convolution(const AlphaContext& ctx, const FormalExpr& f1,
                                             const FormalExpr& f2, double tol = 1e-12) {
    const auto lhs = transform_closed_form(convolve_formal(f1, f2, ctx), ctx);
    const auto rhs = multiply(transform_closed_form(f1, ctx), transform_closed_form(f2, ctx));
    return detail::spectra_report(Identity::convolution, lhs, rhs, tol, "");
}

struct FormalVerifyParams {
    complex a{1.0, 0.0};  // linearity weights
    complex b{1.0, 0.0};
    double scale_factor = 2.0;  // scaling dilation
    double modulation_c = 1.0;  // modulation frequency offset
};

// Dispatcher matching the one-op surface: inputs drawn from the transformable
// family; identities outside the formal layer's scope are rejected.
inline VerificationReport verify_formal_identity(const AlphaContext& ctx, Identity id,
                                                 const std::vector<FormalExpr>& inputs,
                                                 const FormalVerifyParams& p = {},
                                                 double tol = 1e-12) {
    switch (id) {
        case Identity::linearity:
            if (inputs.size() < 2) throw domain_error("linearity needs two inputs");
            return verify_linearity(ctx, inputs[0], inputs[1], p.a, p.b, tol);
        case Identity::scaling:
            if (inputs.empty()) throw domain_error("scaling needs one input");
            return verify_scaling(ctx, inputs[0], p.scale_factor, tol);
        case Identity::modulation:
            if (inputs.empty()) throw domain_error("modulation needs one input");
            return verify_modulation(ctx, inputs[0], p.modulation_c, tol);
        case Identity::derivative_rule:
            if (inputs.empty()) throw domain_error("derivative rule needs one input");
            return verify_derivative_rule(ctx, inputs[0], tol);
        case Identity::convolution:
            if (inputs.size() < 2) throw domain_error("convolution needs two inputs");
            return verify_convolution(ctx, inputs[0], inputs[1], tol);
        default:
            throw domain_error("identity '" + to_string(id) +
                               "' is not checkable at the formal level (see verify_numeric)");
    }
}

} // namespace lfc
