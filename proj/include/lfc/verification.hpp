#pragma once

#include <string>

#include "lfc/errors.hpp"

namespace lfc {

enum class Identity {
    linearity,
    shift,
    scaling,
    modulation,
    derivative_rule,
    convolution,
    parseval,
};

inline std::string to_string(Identity id) {
    switch (id) {
        case Identity::linearity:       return "linearity";
        case Identity::shift:           return "shift";
        case Identity::scaling:         return "scaling";
        case Identity::modulation:      return "modulation";
        case Identity::derivative_rule: return "derivative";
        case Identity::convolution:     return "convolution";
        default:                        return "parseval";
    }
}

inline Identity parse_identity(const std::string& s) {
    if (s == "linearity")   return Identity::linearity;
    if (s == "shift")       return Identity::shift;
    if (s == "scaling")     return Identity::scaling;
    if (s == "modulation")  return Identity::modulation;
    if (s == "derivative")  return Identity::derivative_rule;
    if (s == "convolution") return Identity::convolution;
    if (s == "parseval")    return Identity::parseval;
    throw domain_error("unknown identity tag '" + s + "'");
}

// Outcome of one identity check. pass is meaningful only when asserted; a
// reported-only check records its discrepancy without gating anything.
struct VerificationReport {
    Identity id = Identity::linearity;
    double lhs_norm = 0.0;
    double rhs_norm = 0.0;
    double max_abs_discrepancy = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    bool asserted = true;
    std::string variant; // which sign/normalization variant the check used or found

    void finish() { pass = max_abs_discrepancy <= tolerance; }
};

} // namespace lfc
