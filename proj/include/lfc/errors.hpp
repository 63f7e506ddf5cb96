#pragma once

#include <stdexcept>
#include <string>

namespace lfc {

// Precondition violations (bad alpha, mismatched anchors, argument out of domain).
struct domain_error : std::domain_error {
    using std::domain_error::domain_error;
};

// A series or iteration hit its hard cap without meeting its stopping rule.
struct convergence_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Quadrature construction failed its moment-reproduction check.
struct conditioning_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input files / unparsable specs.
struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace lfc
