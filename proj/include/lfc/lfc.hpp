#pragma once

// Local fractional calculus and the generalized Yang-Fourier transform:
// a formal differential algebra over x^{k*alpha} E_alpha(lambda x^alpha)
// atoms in which the transform theorems hold exactly, plus pointwise
// numerics (Mittag-Leffler evaluation, measure-matched (dx)^alpha
// quadrature, sampled transforms) that reduce to classical Fourier
// analysis at alpha = 1 and measure the formal-vs-pointwise gap below it.

#include "lfc/alpha_context.hpp"
#include "lfc/convolve.hpp"
#include "lfc/csv.hpp"
#include "lfc/diagnostics.hpp"
#include "lfc/errors.hpp"
#include "lfc/formal.hpp"
#include "lfc/formal_verify.hpp"
#include "lfc/grid.hpp"
#include "lfc/quadrature.hpp"
#include "lfc/rational_spectrum.hpp"
#include "lfc/series.hpp"
#include "lfc/signal_spec.hpp"
#include "lfc/special.hpp"
#include "lfc/svg.hpp"
#include "lfc/transform.hpp"
#include "lfc/transform_verify.hpp"
#include "lfc/verification.hpp"
