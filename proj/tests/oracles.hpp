#pragma once

// Test-only oracles, independent of the library's evaluation paths.

#include <cmath>
#include <complex>
#include <functional>

namespace oracles {

using cplx = std::complex<double>;
using cplxl = std::complex<long double>;

// Mittag-Leffler by brute-force long-double series (500+ terms). Only valid
// where the series is well-conditioned (moderate |z|); that is exactly the
// regime the frozen test points use.
inline cplx ml_series(double alpha, cplx z, int terms = 600) {
    cplxl sum(0.0L, 0.0L);
    cplxl zl(static_cast<long double>(z.real()), static_cast<long double>(z.imag()));
    cplxl p(1.0L, 0.0L);
    for (int k = 0; k < terms; ++k) {
        const long double g = lgammal(1.0L + static_cast<long double>(k) * alpha);
        sum += p * expl(-g);
        p *= zl;
        if (std::abs(static_cast<cplx>(p)) > 1e280) break;
    }
    return static_cast<cplx>(sum);
}

// E_{1/2}(z) = exp(z^2) erfc(-z) for real z.
inline double ml_half_erfc(double z) { return std::exp(z * z) * std::erfc(-z); }

// Classical Fourier transform with kernel exp(-2*pi*i*x*w) of a real-line
// callable, by composite Simpson on [a, b]. Independent of the library's
// quadrature machinery.
inline cplx classical_fourier(const std::function<cplx(double)>& f, double w, double a, double b,
                              int n = 200001) {
    if (n % 2 == 0) ++n;
    const double h = (b - a) / (n - 1);
    const auto g = [&](double x) {
        return f(x) * std::exp(cplx(0.0, -2.0 * M_PI * x * w));
    };
    cplx sum = g(a) + g(b);
    for (int i = 1; i < n - 1; ++i) sum += g(a + i * h) * (i % 2 ? 4.0 : 2.0);
    return sum * (h / 3.0);
}

// Classical causal convolution (e^{-x} family closed forms are asserted
// directly in the tests; this Simpson version covers arbitrary callables).
inline cplx classical_convolution(const std::function<cplx(double)>& f1,
                                  const std::function<cplx(double)>& f2, double x, int n = 20001) {
    if (x <= 0.0) return cplx(0.0, 0.0);
    if (n % 2 == 0) ++n;
    const double h = x / (n - 1);
    const auto g = [&](double t) { return f1(t) * f2(x - t); };
    cplx sum = g(0.0) + g(x);
    for (int i = 1; i < n - 1; ++i) sum += g(i * h) * (i % 2 ? 4.0 : 2.0);
    return sum * (h / 3.0);
}

} // namespace oracles
