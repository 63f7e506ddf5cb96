#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "lfc/alpha_context.hpp"
#include "lfc/errors.hpp"
#include "lfc/formal.hpp"
#include "lfc/special.hpp"

namespace lfc {

// One term coeff / (pole + s)^power in the spectral variable s = i^alpha h0 omega^alpha.
// power = 0 denotes a plain constant (needed by the derivative-rule checker,
// where multiplication by s produces one); transform images always have power >= 1.
struct RationalTerm {
    complex coeff;
    complex pole{0.0, 0.0};
    int power = 1;
};

namespace detail {

inline bool rational_order(const RationalTerm& a, const RationalTerm& b) {
    if (a.pole.real() != b.pole.real()) return a.pole.real() < b.pole.real();
    if (a.pole.imag() != b.pole.imag()) return a.pole.imag() < b.pole.imag();
    return a.power < b.power;
}

} // namespace detail

// Finite sum of rational terms in s, canonical: sorted, merged, zeros dropped,
// constants normalized to pole 0.
class RationalSpectrum {
public:
    RationalSpectrum() = default;
    explicit RationalSpectrum(std::vector<RationalTerm> terms) : terms_(std::move(terms)) {
        canonicalize();
    }

    static RationalSpectrum constant(complex c) {
        return RationalSpectrum({RationalTerm{c, complex(0.0, 0.0), 0}});
    }

    const std::vector<RationalTerm>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    complex evaluate_s(complex s) const {
        complex sum(0.0, 0.0);
        for (const auto& t : terms_) {
            if (t.power == 0) {
                sum += t.coeff;
                continue;
            }
            complex den(1.0, 0.0);
            for (int j = 0; j < t.power; ++j) den *= (t.pole + s);
            sum += t.coeff / den;
        }
        return sum;
    }

    // Value at a real frequency under the generalized-kernel parametrization.
    complex evaluate(const AlphaContext& ctx, double omega) const {
        const complex s = ctx.i_pow_alpha * ctx.h0 * pow_alpha(ctx, omega);
        return evaluate_s(s);
    }

private:
    void canonicalize() {
        for (auto& t : terms_)
            if (t.power == 0) t.pole = complex(0.0, 0.0);
        std::sort(terms_.begin(), terms_.end(), detail::rational_order);
        std::vector<RationalTerm> merged;
        for (const auto& t : terms_) {
            if (!merged.empty() && merged.back().pole == t.pole && merged.back().power == t.power)
                merged.back().coeff += t.coeff;
            else
                merged.push_back(t);
        }
        std::erase_if(merged, [](const RationalTerm& t) { return t.coeff == complex(0.0, 0.0); });
        terms_ = std::move(merged);
    }

    std::vector<RationalTerm> terms_;
};

inline RationalSpectrum add(const RationalSpectrum& a, const RationalSpectrum& b) {
    auto ts = a.terms();
    ts.insert(ts.end(), b.terms().begin(), b.terms().end());
    return RationalSpectrum(std::move(ts));
}

inline RationalSpectrum scale(const RationalSpectrum& a, complex c) {
    auto ts = a.terms();
    for (auto& t : ts) t.coeff *= c;
    return RationalSpectrum(std::move(ts));
}

inline RationalSpectrum subtract(const RationalSpectrum& a, const RationalSpectrum& b) {
    return add(a, scale(b, complex(-1.0, 0.0)));
}

// Substitute s -> s + delta (each pole shifts by delta).
inline RationalSpectrum shift_s(const RationalSpectrum& a, complex delta) {
    auto ts = a.terms();
    for (auto& t : ts)
        if (t.power > 0) t.pole += delta;
    return RationalSpectrum(std::move(ts));
}

// Spectrum of omega -> S(omega / a) for a > 0, i.e. s -> s / a^alpha:
//   c/(p + s/a^a)^m = c a^{a m} / (p a^a + s)^m.
inline RationalSpectrum scaled_argument(const RationalSpectrum& S, const AlphaContext& ctx, double a) {
    if (!(a > 0.0)) throw domain_error("scaled_argument: scale must be positive");
    const double aa = std::pow(a, ctx.alpha);
    auto ts = S.terms();
    for (auto& t : ts) {
        for (int j = 0; j < t.power; ++j) t.coeff *= aa;
        t.pole *= aa;
    }
    return RationalSpectrum(std::move(ts));
}

// Multiply by s:  s * c/(p+s)^m = c/(p+s)^{m-1} - c p/(p+s)^m.
inline RationalSpectrum mul_s(const RationalSpectrum& a) {
    std::vector<RationalTerm> out;
    for (const auto& t : a.terms()) {
        if (t.power == 0)
            throw domain_error("mul_s: would leave the rational family (constant * s)");
        out.push_back({t.coeff, t.pole, t.power - 1});
        out.push_back({-t.coeff * t.pole, t.pole, t.power});
    }
    return RationalSpectrum(std::move(out));
}

namespace detail {

inline double binomial(int n, int k) {
    double r = 1.0;
    for (int j = 1; j <= k; ++j) r *= static_cast<double>(n - k + j) / j;
    return r;
}

// Partial fractions of 1/((s+p)^m (s+q)^n) for p != q: expanding around each
// pole, the residue at order (m - t) of pole p is (-1)^t C(n+t-1, t) / d^{n+t}
// with d = q - p, and symmetrically for q.
inline void pf_cross(std::vector<RationalTerm>& out, complex c, complex p, int m, complex q, int n) {
    const complex d = q - p;
    complex dpow = complex(1.0, 0.0);
    for (int j = 0; j < n; ++j) dpow *= d;
    for (int t = 0; t < m; ++t) {
        const double sgn = (t % 2 == 0) ? 1.0 : -1.0;
        out.push_back({c * sgn * binomial(n + t - 1, t) / dpow, p, m - t});
        dpow *= d;
    }
    complex d2 = -d;
    complex d2pow = complex(1.0, 0.0);
    for (int j = 0; j < m; ++j) d2pow *= d2;
    for (int t = 0; t < n; ++t) {
        const double sgn = (t % 2 == 0) ? 1.0 : -1.0;
        out.push_back({c * sgn * binomial(m + t - 1, t) / d2pow, q, n - t});
        d2pow *= d2;
    }
}

} // namespace detail

// Product of two spectra, expanded back into partial-fraction canonical form.
inline RationalSpectrum multiply(const RationalSpectrum& a, const RationalSpectrum& b) {
    std::vector<RationalTerm> out;
    for (const auto& ta : a.terms()) {
        for (const auto& tb : b.terms()) {
            const complex c = ta.coeff * tb.coeff;
            if (ta.power == 0) {
                out.push_back({c, tb.pole, tb.power});
            } else if (tb.power == 0) {
                out.push_back({c, ta.pole, ta.power});
            } else if (ta.pole == tb.pole) {
                out.push_back({c, ta.pole, ta.power + tb.power});
            } else {
                detail::pf_cross(out, c, ta.pole, ta.power, tb.pole, tb.power);
            }
        }
    }
    return RationalSpectrum(std::move(out));
}

// Closed-form generalized transform of a decaying half-line expression
// anchored at 0: the term c x^{ka} E_a(l x^a) 1_{x>=0} maps to
// c Gamma(1+ka) / (-l + s)^{k+1}.
inline RationalSpectrum transform_closed_form(const FormalExpr& e, const AlphaContext& ctx) {
    if (e.empty()) return RationalSpectrum();
    if (e.anchor() != 0.0)
        throw domain_error("transform_closed_form: anchor must be 0 (normalize shifts first)");
    if (e.support().kind != SupportSpec::half_line)
        throw domain_error("transform_closed_form: support must be the half line");
    std::vector<RationalTerm> out;
    out.reserve(e.terms().size());
    for (const auto& t : e.terms()) {
        if (!(t.lambda.real() < 0.0))
            throw domain_error("transform_closed_form: term does not decay (Re lambda >= 0)");
        out.push_back({t.coeff * gamma_fn(1.0 + t.k * ctx.alpha), -t.lambda, t.k + 1});
    }
    return RationalSpectrum(std::move(out));
}

// Exact inverse of transform_closed_form on its image family (Theorem-5
// uniqueness made computational).
inline FormalExpr inverse_closed_form(const RationalSpectrum& S, const AlphaContext& ctx) {
    std::vector<FormalTerm> out;
    for (const auto& t : S.terms()) {
        if (t.power < 1)
            throw domain_error("inverse_closed_form: constant term has no half-line preimage");
        const int k = t.power - 1;
        out.push_back({t.coeff / gamma_fn(1.0 + k * ctx.alpha), k, -t.pole});
    }
    return FormalExpr(0.0, SupportSpec::halfline(), std::move(out));
}

// Largest coefficient mismatch between two spectra, aligning terms by
// (pole, power) with a relative tolerance on the pole location (poles reached
// through different algebraic routes differ by rounding).
inline double max_coeff_discrepancy(const RationalSpectrum& a, const RationalSpectrum& b,
                                    double pole_tol = 1e-9) {
    std::vector<RationalTerm> rest = b.terms();
    double worst = 0.0;
    const auto scale_of = [](complex c) { return std::max(1.0, std::abs(c)); };
    for (const auto& ta : a.terms()) {
        bool matched = false;
        for (auto it = rest.begin(); it != rest.end(); ++it) {
            if (it->power != ta.power) continue;
            const double ps = std::max(1.0, std::abs(ta.pole));
            if (std::abs(it->pole - ta.pole) > pole_tol * ps) continue;
            worst = std::max(worst, std::abs(ta.coeff - it->coeff) / scale_of(ta.coeff));
            rest.erase(it);
            matched = true;
            break;
        }
        if (!matched) worst = std::max(worst, std::abs(ta.coeff) / scale_of(ta.coeff));
    }
    for (const auto& tb : rest) worst = std::max(worst, std::abs(tb.coeff) / scale_of(tb.coeff));
    return worst;
}

} // namespace lfc
