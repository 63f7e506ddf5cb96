#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <string>
#include <vector>

#include "lfc/alpha_context.hpp"
#include "lfc/errors.hpp"
#include "lfc/special.hpp"

namespace lfc {

// Support of a formal expression: either the half line [anchor, inf) or a
// finite interval [a, b].
struct SupportSpec {
    enum Kind { half_line, interval } kind = half_line;
    double a = 0.0;
    double b = 0.0;

    static SupportSpec halfline() { return SupportSpec{half_line, 0.0, 0.0}; }
    static SupportSpec on(double a_, double b_) { return SupportSpec{interval, a_, b_}; }

    friend bool operator==(const SupportSpec& l, const SupportSpec& r) {
        if (l.kind != r.kind) return false;
        return l.kind == half_line || (l.a == r.a && l.b == r.b);
    }
};

// One atomic term c * (x-x0)^{k*alpha} * E_alpha(lambda (x-x0)^alpha).
// The atoms are never expanded into their power series: the calculus rules
// below are defined directly on them.
struct FormalTerm {
    complex coeff;
    int k = 0;
    complex lambda{0.0, 0.0};
};

namespace detail {

inline bool lambda_less(complex a, complex b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
}

inline bool term_order(const FormalTerm& t, const FormalTerm& u) {
    if (t.k != u.k) return t.k < u.k;
    return lambda_less(t.lambda, u.lambda);
}

} // namespace detail

// Finite sum of formal terms sharing one anchor and one support, kept in
// canonical order (sorted by (k, lambda), like terms merged, zeros dropped).
class FormalExpr {
public:
    FormalExpr() = default;
    FormalExpr(double anchor, SupportSpec support, std::vector<FormalTerm> terms)
        : anchor_(anchor), support_(support), terms_(std::move(terms)) {
        canonicalize();
    }

    static FormalExpr zero(double anchor = 0.0, SupportSpec s = SupportSpec::halfline()) {
        return FormalExpr(anchor, s, {});
    }
    // Single term c*(x-x0)^{k a} E_a(lambda (x-x0)^a) on [x0, inf).
    static FormalExpr term(complex coeff, int k, complex lambda, double anchor = 0.0,
                           SupportSpec s = SupportSpec::halfline()) {
        return FormalExpr(anchor, s, {FormalTerm{coeff, k, lambda}});
    }
    static FormalExpr constant(complex c, double anchor = 0.0,
                               SupportSpec s = SupportSpec::halfline()) {
        return term(c, 0, complex(0.0, 0.0), anchor, s);
    }

    double anchor() const { return anchor_; }
    const SupportSpec& support() const { return support_; }
    const std::vector<FormalTerm>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    int max_k() const {
        int m = 0;
        for (const auto& t : terms_) m = std::max(m, t.k);
        return m;
    }

private:
    void canonicalize() {
        std::sort(terms_.begin(), terms_.end(), detail::term_order);
        std::vector<FormalTerm> merged;
        for (const auto& t : terms_) {
            if (!merged.empty() && merged.back().k == t.k && merged.back().lambda == t.lambda)
                merged.back().coeff += t.coeff;
            else
                merged.push_back(t);
        }
        std::erase_if(merged, [](const FormalTerm& t) { return t.coeff == complex(0.0, 0.0); });
        terms_ = std::move(merged);
    }

    double anchor_ = 0.0;
    SupportSpec support_ = SupportSpec::halfline();
    std::vector<FormalTerm> terms_;
};

namespace detail {

inline void require_compatible(const FormalExpr& e1, const FormalExpr& e2) {
    if (e1.empty() || e2.empty()) return;
    if (e1.anchor() != e2.anchor())
        throw domain_error("formal: anchors differ");
    if (!(e1.support() == e2.support()))
        throw domain_error("formal: supports differ");
}

// Gamma(1+k*alpha) / Gamma(1+(k-1)*alpha): the factor the derivative pulls out
// of the monomial (x-x0)^{k*alpha}.
inline double monomial_step(double alpha, int k) {
    return std::exp(std::lgamma(1.0 + k * alpha) - std::lgamma(1.0 + (k - 1) * alpha));
}

} // namespace detail

inline FormalExpr negate(const FormalExpr& e) {
    auto ts = e.terms();
    for (auto& t : ts) t.coeff = -t.coeff;
    return FormalExpr(e.anchor(), e.support(), std::move(ts));
}

inline FormalExpr scale(const FormalExpr& e, complex c) {
    auto ts = e.terms();
    for (auto& t : ts) t.coeff *= c;
    return FormalExpr(e.anchor(), e.support(), std::move(ts));
}

inline FormalExpr add(const FormalExpr& e1, const FormalExpr& e2) {
    detail::require_compatible(e1, e2);
    if (e1.empty()) return e2;
    if (e2.empty()) return e1;
    auto ts = e1.terms();
    ts.insert(ts.end(), e2.terms().begin(), e2.terms().end());
    return FormalExpr(e1.anchor(), e1.support(), std::move(ts));
}

inline FormalExpr subtract(const FormalExpr& e1, const FormalExpr& e2) {
    return add(e1, negate(e2));
}

// Multiply by E_alpha(mu (x-x0)^alpha): shifts every rate lambda by mu.
// This is the formal exponential law; for alpha < 1 it is not pointwise true
// (reconciliation_report quantifies the gap).
inline FormalExpr mul_exponential(const FormalExpr& e, complex mu) {
    auto ts = e.terms();
    for (auto& t : ts) t.lambda += mu;
    return FormalExpr(e.anchor(), e.support(), std::move(ts));
}

// Term-wise local fractional derivative:
//   d^a [u^{ka} E_a(l u^a)] = [G(1+ka)/G(1+(k-1)a)] u^{(k-1)a} E_a(l u^a)
//                             + l u^{ka} E_a(l u^a),
// with the first summand absent for k = 0. Constants are annihilated.
inline FormalExpr lf_derivative(const FormalExpr& e, const AlphaContext& ctx) {
    std::vector<FormalTerm> out;
    out.reserve(2 * e.terms().size());
    for (const auto& t : e.terms()) {
        if (t.k > 0)
            out.push_back({t.coeff * detail::monomial_step(ctx.alpha, t.k), t.k - 1, t.lambda});
        if (t.lambda != complex(0.0, 0.0))
            out.push_back({t.coeff * t.lambda, t.k, t.lambda});
    }
    return FormalExpr(e.anchor(), e.support(), std::move(out));
}

// Exact antiderivative g with lf_derivative(g) = e at the coefficient level.
// Pure monomials raise k; for lambda != 0 the triangular recurrence
//   G_k = (1/lambda) [u^{ka} E_a(l u^a) - c_k G_{k-1}],  G_0 = E_a(l u^a)/lambda
// expresses the antiderivative inside the same term family.
inline FormalExpr lf_antiderivative(const FormalExpr& e, const AlphaContext& ctx) {
    std::vector<FormalTerm> out;
    for (const auto& t : e.terms()) {
        if (t.lambda == complex(0.0, 0.0)) {
            const double f = std::exp(std::lgamma(1.0 + t.k * ctx.alpha) -
                                      std::lgamma(1.0 + (t.k + 1) * ctx.alpha));
            out.push_back({t.coeff * f, t.k + 1, t.lambda});
            continue;
        }
        // coefficients of G_k over the basis u^{ja} E_a(l u^a), j = 0..k
        std::vector<complex> g(static_cast<size_t>(t.k) + 1, complex(0.0, 0.0));
        g[0] = 1.0 / t.lambda;
        for (int j = 1; j <= t.k; ++j) {
            const double cj = detail::monomial_step(ctx.alpha, j);
            for (auto& c : g) c *= -cj / t.lambda;
            g[static_cast<size_t>(j)] += 1.0 / t.lambda;
        }
        for (int j = 0; j <= t.k; ++j)
            out.push_back({t.coeff * g[static_cast<size_t>(j)], j, t.lambda});
    }
    return FormalExpr(e.anchor(), e.support(), std::move(out));
}

// Pointwise value of the expression at x, using the odd extension of ^alpha
// left of the anchor.
inline complex evaluate(const FormalExpr& e, const AlphaContext& ctx, double x,
                        const MlOptions& opts = {}) {
    const double u = x - e.anchor();
    const double ua = pow_alpha(ctx, u);
    complex sum(0.0, 0.0);
    for (const auto& t : e.terms()) {
        complex v = t.coeff;
        for (int j = 0; j < t.k; ++j) v *= ua;
        if (t.lambda != complex(0.0, 0.0))
            v *= mittag_leffler_full(ctx.alpha, t.lambda * ua, opts).value;
        sum += v;
    }
    return sum;
}

namespace detail {

// Value of one antiderivative term as x -> +inf. Decaying rates vanish,
// constants survive, anything else has no limit.
inline complex term_limit_at_infinity(const FormalTerm& t) {
    if (t.lambda.real() < 0.0) return complex(0.0, 0.0);
    if (t.lambda == complex(0.0, 0.0) && t.k == 0) return t.coeff;
    throw domain_error("definite_integral: integrand does not decay toward +inf");
}

} // namespace detail

// Theorem-2 evaluation g(b) - g(a) of the order-alpha integral. b may be
// +inf when every term of g either decays or is constant. Orientation: the
// value over [b, a] is the negative of the value over [a, b], and [c, c] is 0.
inline complex definite_integral(const FormalExpr& e, const AlphaContext& ctx, double a, double b,
                                 const MlOptions& opts = {}) {
    if (a == b) return complex(0.0, 0.0);
    if (b < a) return -definite_integral(e, ctx, b, a, opts);
    if (e.support().kind == SupportSpec::half_line) {
        if (a < e.anchor())
            throw domain_error("definite_integral: bounds fall outside the half-line support");
    } else {
        if (a < e.support().a || (std::isfinite(b) && b > e.support().b))
            throw domain_error("definite_integral: bounds fall outside the interval support");
    }
    const FormalExpr g = lf_antiderivative(e, ctx);
    complex gb(0.0, 0.0);
    if (std::isinf(b)) {
        for (const auto& t : g.terms()) gb += detail::term_limit_at_infinity(t);
    } else {
        gb = evaluate(g, ctx, b, opts);
    }
    return gb - evaluate(g, ctx, a, opts);
}

// Expression x -> f(a*x) for a > 0: term (c, k, lambda) becomes
// (c * a^{k*alpha}, k, lambda * a^{alpha}). Anchor must be 0.
inline FormalExpr scale_argument(const FormalExpr& e, const AlphaContext& ctx, double a) {
    if (!(a > 0.0)) throw domain_error("scale_argument: scale must be positive");
    if (e.anchor() != 0.0) throw domain_error("scale_argument: anchor must be 0");
    const double aa = std::pow(a, ctx.alpha);
    auto ts = e.terms();
    for (auto& t : ts) {
        for (int j = 0; j < t.k; ++j) t.coeff *= aa;
        t.lambda *= aa;
    }
    return FormalExpr(0.0, e.support(), std::move(ts));
}

// Value at the anchor (only k = 0 terms contribute, E_alpha(0) = 1).
inline complex value_at_anchor(const FormalExpr& e) {
    complex v(0.0, 0.0);
    for (const auto& t : e.terms())
        if (t.k == 0) v += t.coeff;
    return v;
}

// Causal convolution on the half line, closed under the formal law
//   E_a(p x^a) * E_a(q x^a) = (E_a(p x^a) - E_a(q x^a)) / (p - q),  p != q,
// with the confluent limit x^a E_a(p x^a)/Gamma(1+a). Inputs must be pure
// Mittag-Leffler mixtures (k = 0 terms) anchored at 0.
inline FormalExpr convolve_formal(const FormalExpr& f1, const FormalExpr& f2,
                                  const AlphaContext& ctx) {
    detail::require_compatible(f1, f2);
    for (const auto* e : {&f1, &f2}) {
        if (e->anchor() != 0.0)
            throw domain_error("convolve_formal: anchor must be 0");
        if (e->support().kind != SupportSpec::half_line)
            throw domain_error("convolve_formal: supports must be half-line");
        for (const auto& t : e->terms())
            if (t.k != 0)
                throw domain_error("convolve_formal: k > 0 terms are outside the closed-form family");
    }
    std::vector<FormalTerm> out;
    const double inv_g = 1.0 / gamma_fn(1.0 + ctx.alpha);
    for (const auto& t1 : f1.terms()) {
        for (const auto& t2 : f2.terms()) {
            const complex c = t1.coeff * t2.coeff;
            if (t1.lambda == t2.lambda) {
                out.push_back({c * inv_g, 1, t1.lambda});
            } else {
                const complex d = t1.lambda - t2.lambda;
                out.push_back({c / d, 0, t1.lambda});
                out.push_back({-c / d, 0, t2.lambda});
            }
        }
    }
    return FormalExpr(0.0, SupportSpec::halfline(), std::move(out));
}

// Largest relative coefficient mismatch between two expressions, aligning
// terms by (k, lambda). Unmatched terms count with their full magnitude.
inline double max_coeff_discrepancy(const FormalExpr& e1, const FormalExpr& e2) {
    double worst = 0.0;
    auto it1 = e1.terms().begin();
    auto it2 = e2.terms().begin();
    const auto scale_of = [&](complex c) { return std::max(1.0, std::abs(c)); };
    while (it1 != e1.terms().end() || it2 != e2.terms().end()) {
        if (it2 == e2.terms().end() ||
            (it1 != e1.terms().end() && detail::term_order(*it1, *it2))) {
            worst = std::max(worst, std::abs(it1->coeff) / scale_of(it1->coeff));
            ++it1;
        } else if (it1 == e1.terms().end() || detail::term_order(*it2, *it1)) {
            worst = std::max(worst, std::abs(it2->coeff) / scale_of(it2->coeff));
            ++it2;
        } else {
            worst = std::max(worst, std::abs(it1->coeff - it2->coeff) / scale_of(it1->coeff));
            ++it1;
            ++it2;
        }
    }
    return worst;
}

} // namespace lfc
