#pragma once

#include <fstream>
#include <optional>
#include <string>

#include <json.hpp>

#include "lfc/csv.hpp"
#include "lfc/errors.hpp"
#include "lfc/formal.hpp"
#include "lfc/grid.hpp"

namespace lfc {

// A signal description file: exactly one of
//   { "signal": { "kind": "symbolic", "support": "half_line",
//                 "anchor": 0.0,
//                 "terms": [ { "coeff": [re, im], "k": 0, "lambda": [re, im] } ] } }
//   { "signal": { "kind": "samples", "path": "sig.csv", "support": "half_line" } }
// with an optional top-level "alpha".
struct SignalSpec {
    std::optional<double> alpha;
    std::optional<FormalExpr> symbolic;
    std::optional<SampledSignal> samples;

    bool is_symbolic() const { return symbolic.has_value(); }
};

namespace detail {

inline complex parse_complex(const nlohmann::json& j, const char* what) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw io_error(std::string("signal spec: ") + what + " must be [re, im]");
    return complex(j[0].get<double>(), j[1].get<double>());
}

inline SupportHint parse_support_hint(const std::string& s) {
    if (s == "half_line") return SupportHint::half_line;
    if (s == "symmetric_line") return SupportHint::symmetric_line;
    if (s == "interval") return SupportHint::interval;
    throw io_error("signal spec: unknown support '" + s + "'");
}

} // namespace detail

inline SignalSpec parse_signal_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open signal spec '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw io_error("signal spec '" + path + "': " + e.what());
    }

    SignalSpec spec;
    if (j.contains("alpha")) {
        if (!j["alpha"].is_number()) throw io_error("signal spec: alpha must be a number");
        spec.alpha = j["alpha"].get<double>();
    }
    if (!j.contains("signal") || !j["signal"].is_object())
        throw io_error("signal spec: missing 'signal' object");
    const auto& sig = j["signal"];
    const std::string kind = sig.value("kind", "");

    if (kind == "symbolic") {
        const std::string support = sig.value("support", "half_line");
        if (support != "half_line")
            throw io_error("signal spec: symbolic signals currently support only 'half_line'");
        const double anchor = sig.value("anchor", 0.0);
        if (!sig.contains("terms") || !sig["terms"].is_array() || sig["terms"].empty())
            throw io_error("signal spec: symbolic signal needs a non-empty 'terms' array");
        std::vector<FormalTerm> terms;
        for (const auto& tj : sig["terms"]) {
            FormalTerm t;
            t.coeff = detail::parse_complex(tj.at("coeff"), "coeff");
            if (!tj.contains("k") || !tj["k"].is_number_integer() || tj["k"].get<int>() < 0)
                throw io_error("signal spec: term 'k' must be a nonnegative integer");
            t.k = tj["k"].get<int>();
            t.lambda = detail::parse_complex(tj.at("lambda"), "lambda");
            terms.push_back(t);
        }
        spec.symbolic = FormalExpr(anchor, SupportSpec::halfline(), std::move(terms));
    } else if (kind == "samples") {
        if (!sig.contains("path") || !sig["path"].is_string())
            throw io_error("signal spec: sampled signal needs a 'path'");
        const auto hint = detail::parse_support_hint(sig.value("support", "interval"));
        spec.samples = read_signal_csv(sig["path"].get<std::string>(), hint);
    } else {
        throw io_error("signal spec: 'kind' must be 'symbolic' or 'samples'");
    }
    return spec;
}

inline std::string describe_terms(const FormalExpr& e) {
    std::string out;
    char buf[160];
    for (const auto& t : e.terms()) {
        std::snprintf(buf, sizeof buf, "(%.17g%+.17gi) k=%d lambda=(%.17g%+.17gi); ",
                      t.coeff.real(), t.coeff.imag(), t.k, t.lambda.real(), t.lambda.imag());
        out += buf;
    }
    return out;
}

} // namespace lfc
