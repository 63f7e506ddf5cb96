// lfc -- local fractional calculus / generalized Yang-Fourier transform CLI.
//
// Subcommands: transform, inverse, convolve, series, verify, table, ml-eval.
// Exit codes: 0 success (warnings included), 2 input error, 3 numeric failure.

#include <cstdio>
#include <exception>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lfc/lfc.hpp"

namespace {

using namespace lfc;

struct RunConfig {
    double alpha = 1.0;
    bool alpha_set = false;
    std::string convention = "case3";
    double truncation = 40.0;
    std::size_t nodes = 4096;
    double omega_range = 8.0;
    std::size_t omega_count = 1025;
    std::uint64_t seed = 12345;
    double tolerance = 1e-3;
    std::string out;
    std::string plot;

    void add_common(CLI::App* cmd) {
        cmd->add_option("--alpha", alpha, "order alpha in (0,1]")->check(CLI::Range(1e-9, 1.0))
            ->each([this](const std::string&) { alpha_set = true; });
        cmd->add_option("--convention", convention, "kernel convention: case1|case2|case3")
            ->check(CLI::IsMember({"case1", "case2", "case3"}));
        cmd->add_option("--truncation", truncation, "domain truncation X ( integrate [-X, X] )")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--nodes", nodes, "quadrature nodes per half line");
        cmd->add_option("--omega-range", omega_range, "omega grid covers [-range, range]")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--omega-count", omega_count, "number of omega grid points (>= 2)");
        cmd->add_option("--seed", seed, "seed for randomized suites");
        cmd->add_option("--tolerance", tolerance, "tolerance for asserted checks");
        cmd->add_option("--out", out, "output file path");
        cmd->add_option("--plot", plot, "write a static SVG plot to this path");
    }

    AlphaContext ctx() const { return AlphaContext(alpha); }
    KernelConvention conv() const { return parse_convention(convention); }

    std::vector<std::pair<std::string, std::string>> echo(const std::string& cmd) const {
        const auto num = [](double v) {
            char b[40];
            std::snprintf(b, sizeof b, "%.17g", v);
            return std::string(b);
        };
        return {
            {"command", cmd},
            {"alpha", num(alpha)},
            {"convention", convention},
            {"truncation", num(truncation)},
            {"nodes", std::to_string(nodes)},
            {"omega_range", num(omega_range)},
            {"omega_count", std::to_string(omega_count)},
            {"seed", std::to_string(seed)},
            {"tolerance", num(tolerance)},
        };
    }
};

// Signal spec + --alpha flag resolution: an explicit flag wins, then the
// spec file's alpha, then the default.
double resolve_alpha(const RunConfig& cfg, const SignalSpec& spec) {
    if (cfg.alpha_set || !spec.alpha.has_value()) return cfg.alpha;
    return *spec.alpha;
}

std::function<complex(double)> spec_callable(const SignalSpec& spec, const AlphaContext& ctx) {
    if (spec.is_symbolic()) {
        const FormalExpr e = *spec.symbolic;
        return [e, ctx](double x) {
            if (x < e.anchor()) return complex(0.0, 0.0);
            return evaluate(e, ctx, x);
        };
    }
    const SampledSignal s = *spec.samples;
    return [s](double x) { return s.value_at(x); };
}

int cmd_transform(const RunConfig& cfg, const std::string& spec_path) {
    const SignalSpec spec = parse_signal_spec(spec_path);
    const AlphaContext ctx{resolve_alpha(cfg, spec)};
    const auto f = spec_callable(spec, ctx);

    TransformOptions topts;
    topts.nodes = cfg.nodes;
    Grid omega = Grid::uniform_grid(-cfg.omega_range, cfg.omega_range, cfg.omega_count);
    const Spectrum S = forward(f, ctx, cfg.conv(), std::move(omega), cfg.truncation, topts);

    std::optional<RationalSpectrum> closed;
    if (spec.is_symbolic() && spec.symbolic->anchor() == 0.0) {
        bool decaying = true;
        for (const auto& t : spec.symbolic->terms())
            if (!(t.lambda.real() < 0.0)) decaying = false;
        if (decaying && cfg.conv() == KernelConvention::case3)
            closed = transform_closed_form(*spec.symbolic, ctx);
    }

    CsvWriter w(cfg.out.empty() ? "spectrum.csv" : cfg.out);
    for (const auto& [k, v] : cfg.echo("transform")) w.comment(k, v);
    w.comment("alpha_effective", std::to_string(ctx.alpha));
    w.comment("signal", spec.is_symbolic() ? "symbolic: " + describe_terms(*spec.symbolic)
                                           : "samples");
    if (S.integrability_warning) {
        w.comment("warning", "integrability estimate exceeded the configured bound (advisory)");
        std::fprintf(stderr, "warning: integrability estimate exceeded the configured bound\n");
    }
    if (closed)
        w.columns({"omega", "re", "im", "cf_re", "cf_im", "gap"});
    else
        w.columns({"omega", "re", "im"});
    for (std::size_t i = 0; i < S.omega.size(); ++i) {
        const double wv = S.omega.points[i];
        if (closed) {
            const complex cf = closed->evaluate(ctx, wv);
            w.row({wv, S.values[i].real(), S.values[i].imag(), cf.real(), cf.imag(),
                   std::abs(S.values[i] - cf)});
        } else {
            w.row({wv, S.values[i].real(), S.values[i].imag()});
        }
    }
    w.write();

    if (!cfg.plot.empty()) {
        SvgSeries mag;
        mag.label = "|spectrum|";
        for (std::size_t i = 0; i < S.omega.size(); ++i) {
            mag.x.push_back(S.omega.points[i]);
            mag.y.push_back(std::abs(S.values[i]));
        }
        std::vector<SvgSeries> series{mag};
        if (closed) {
            SvgSeries cf;
            cf.label = "|closed form|";
            cf.color = "#cc3322";
            for (std::size_t i = 0; i < S.omega.size(); ++i) {
                cf.x.push_back(S.omega.points[i]);
                cf.y.push_back(std::abs(closed->evaluate(ctx, S.omega.points[i])));
            }
            series.push_back(cf);
        }
        write_svg_plot(cfg.plot, "generalized transform, alpha=" + std::to_string(ctx.alpha),
                       "omega", "|S|", series);
    }
    return 0;
}

int cmd_inverse(const RunConfig& cfg, const std::string& spectrum_path, double x_min, double x_max,
                std::size_t x_count) {
    const CsvTable t = read_csv(spectrum_path);
    const std::size_t oi = t.column_index("omega");
    const std::size_t ri = t.column_index("re");
    const std::size_t ii = t.column_index("im");
    if (t.rows.size() < 2) throw io_error("spectrum CSV needs at least 2 rows");
    Spectrum S;
    std::vector<double> om;
    for (const auto& r : t.rows) {
        om.push_back(r[oi]);
        S.values.emplace_back(r[ri], r[ii]);
    }
    S.omega = Grid::from_points(std::move(om));
    S.alpha = cfg.alpha;
    S.convention = cfg.conv();
    S.truncation_X = cfg.truncation;

    const AlphaContext ctx = cfg.ctx();
    TransformOptions topts;
    topts.nodes = cfg.nodes;
    const auto res = inverse(S, ctx, Grid::uniform_grid(x_min, x_max, x_count), topts);

    auto meta = cfg.echo("inverse");
    if (res.integrability_warning)
        meta.emplace_back("warning", "spectral integrability estimate exceeded the bound");
    write_signal_csv(cfg.out.empty() ? "signal.csv" : cfg.out, res.signal, meta);
    return 0;
}

int cmd_convolve(const RunConfig& cfg, const std::string& spec_path1,
                 const std::string& spec_path2, double x_max, std::size_t points) {
    const SignalSpec s1 = parse_signal_spec(spec_path1);
    const SignalSpec s2 = parse_signal_spec(spec_path2);
    const AlphaContext ctx{resolve_alpha(cfg, s1)};
    const Grid g = Grid::uniform_grid(0.0, x_max, points);
    const auto f1 = SampledSignal::from_function(g, spec_callable(s1, ctx), SupportHint::half_line);
    const auto f2 = SampledSignal::from_function(g, spec_callable(s2, ctx), SupportHint::half_line);
    const SampledSignal conv = convolve_numeric(f1, f2, ctx);

    std::optional<FormalExpr> formal;
    if (s1.is_symbolic() && s2.is_symbolic()) {
        try {
            formal = convolve_formal(*s1.symbolic, *s2.symbolic, ctx);
        } catch (const domain_error&) {
            // outside the closed-form family (k > 0 terms); numeric only
        }
    }

    CsvWriter w(cfg.out.empty() ? "convolution.csv" : cfg.out);
    for (const auto& [k, v] : cfg.echo("convolve")) w.comment(k, v);
    if (formal)
        w.columns({"x", "re", "im", "formal_re", "formal_im", "gap"});
    else
        w.columns({"x", "re", "im"});
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (formal) {
            const complex fv = evaluate(*formal, ctx, g.points[i]);
            w.row({g.points[i], conv.values[i].real(), conv.values[i].imag(), fv.real(), fv.imag(),
                   std::abs(conv.values[i] - fv)});
        } else {
            w.row({g.points[i], conv.values[i].real(), conv.values[i].imag()});
        }
    }
    w.write();

    if (!cfg.plot.empty()) {
        SvgSeries re;
        re.label = "Re(f1*f2)";
        for (std::size_t i = 0; i < g.size(); ++i) {
            re.x.push_back(g.points[i]);
            re.y.push_back(conv.values[i].real());
        }
        write_svg_plot(cfg.plot, "causal convolution, alpha=" + std::to_string(ctx.alpha), "x",
                       "value", {re});
    }
    return 0;
}

int cmd_series(const RunConfig& cfg, const std::string& spec_path, double l, int N,
               std::size_t nodes, const std::string& reconstruct, std::size_t x_count) {
    const SignalSpec spec = parse_signal_spec(spec_path);
    const AlphaContext ctx{resolve_alpha(cfg, spec)};
    const auto f = spec_callable(spec, ctx);
    SeriesOptions sopts;
    sopts.nodes_per_half = nodes;
    const SeriesCoefficients sc = series_coefficients(f, l, N, ctx, sopts);

    CsvWriter w(cfg.out.empty() ? "series.csv" : cfg.out);
    for (const auto& [k, v] : cfg.echo("series")) w.comment(k, v);
    w.comment("half_period", std::to_string(l));
    w.columns({"n", "re", "im", "ct_re", "ct_im"});
    for (int n = -N; n <= N; ++n)
        w.row({static_cast<double>(n), sc.at(n).real(), sc.at(n).imag(), sc.ct(n).real(),
               sc.ct(n).imag()});
    w.write();

    if (!reconstruct.empty()) {
        const Grid xg = Grid::uniform_grid(-l, l, x_count);
        CsvWriter rw(reconstruct);
        for (const auto& [k, v] : cfg.echo("series-reconstruct")) rw.comment(k, v);
        rw.columns({"x", "re", "im"});
        for (double x : xg.points) {
            const complex v = series_partial_sum(sc, x, ctx);
            rw.row({x, v.real(), v.imag()});
        }
        rw.write();
    }
    return 0;
}

FormalExpr random_decaying_expr(std::mt19937_64& rng, int max_terms, int max_k) {
    std::uniform_int_distribution<int> nterms(1, max_terms);
    std::uniform_int_distribution<int> kd(0, max_k);
    std::uniform_real_distribution<double> cd(-2.0, 2.0);
    std::uniform_real_distribution<double> rate(0.25, 3.0);
    std::uniform_real_distribution<double> im(-1.5, 1.5);
    std::vector<FormalTerm> ts;
    const int n = nterms(rng);
    for (int i = 0; i < n; ++i)
        ts.push_back({complex(cd(rng), cd(rng)), kd(rng), complex(-rate(rng), im(rng))});
    return FormalExpr(0.0, SupportSpec::halfline(), std::move(ts));
}

nlohmann::json report_json(const std::string& suite, const VerificationReport& r) {
    return {
        {"suite", suite},
        {"identity", to_string(r.id)},
        {"lhs_norm", r.lhs_norm},
        {"rhs_norm", r.rhs_norm},
        {"max_abs_discrepancy", r.max_abs_discrepancy},
        {"tolerance", r.tolerance},
        {"pass", r.pass},
        {"asserted", r.asserted},
        {"variant", r.variant},
    };
}

int cmd_verify(const RunConfig& cfg, const std::string& suite) {
    const AlphaContext ctx = cfg.ctx();
    std::mt19937_64 rng(cfg.seed);
    nlohmann::json rows = nlohmann::json::array();
    bool all_asserted_pass = true;

    const auto record = [&](const std::string& s, const VerificationReport& r) {
        rows.push_back(report_json(s, r));
        if (r.asserted && !r.pass) all_asserted_pass = false;
        std::printf("[%s] %-12s %s  discrepancy %.3e (tol %.1e)%s\n", s.c_str(),
                    to_string(r.id).c_str(),
                    r.asserted ? (r.pass ? "PASS" : "FAIL") : "reported", r.max_abs_discrepancy,
                    r.tolerance, r.variant.empty() ? "" : ("  [" + r.variant + "]").c_str());
    };

    if (suite == "formal" || suite == "all") {
        FormalVerifyParams p;
        for (int rep = 0; rep < 8; ++rep) {
            const auto e1 = random_decaying_expr(rng, 4, 3);
            const auto e2 = random_decaying_expr(rng, 4, 3);
            p.a = complex(1.25, -0.5);
            p.b = complex(-0.75, 0.25);
            record("formal", verify_formal_identity(ctx, Identity::linearity, {e1, e2}, p));
            record("formal", verify_formal_identity(ctx, Identity::scaling, {e1}, p));
            record("formal", verify_formal_identity(ctx, Identity::modulation, {e1}, p));
            record("formal", verify_formal_identity(ctx, Identity::derivative_rule, {e1}, p));
            const auto m1 = random_decaying_expr(rng, 3, 0);
            const auto m2 = random_decaying_expr(rng, 3, 0);
            record("formal", verify_formal_identity(ctx, Identity::convolution, {m1, m2}, p));
        }
    }
    if (suite == "numeric" || suite == "all") {
        NumericVerifyOptions o;
        o.conv = cfg.conv();
        o.X = cfg.truncation;
        o.nodes = cfg.nodes;
        o.tolerance = cfg.tolerance;
        const auto e1 = FormalExpr::term({1.0, 0.0}, 0, {-1.0, 0.0});
        const auto e2 = FormalExpr::term({1.0, 0.0}, 0, {-2.0, 0.0});
        const auto ek1 = FormalExpr::term({1.0, 0.0}, 1, {-1.0, 0.0});
        record("numeric", verify_numeric(ctx, Identity::linearity, {e1, e2}, o));
        record("numeric", verify_numeric(ctx, Identity::shift, {e1}, o));
        record("numeric", verify_numeric(ctx, Identity::scaling, {e1}, o));
        record("numeric", verify_numeric(ctx, Identity::modulation, {e1}, o));
        record("numeric", verify_numeric(ctx, Identity::derivative_rule, {ek1}, o));
        record("numeric", verify_numeric(ctx, Identity::convolution, {e1, e2}, o));
        record("numeric", verify_numeric(ctx, Identity::parseval, {e1}, o));
    }
    if (rows.empty()) throw io_error("verify: unknown suite '" + suite + "'");

    if (!cfg.out.empty()) {
        std::ofstream out(cfg.out);
        if (!out) throw io_error("cannot open '" + cfg.out + "'");
        nlohmann::json doc;
        doc["alpha"] = ctx.alpha;
        doc["convention"] = cfg.convention;
        doc["seed"] = cfg.seed;
        doc["checks"] = rows;
        doc["all_asserted_pass"] = all_asserted_pass;
        out << doc.dump(2) << "\n";
    }
    return all_asserted_pass ? 0 : 1;
}

int cmd_table(const RunConfig& cfg, const std::string& what, std::size_t n) {
    const AlphaContext ctx = cfg.ctx();
    CsvWriter w(cfg.out.empty() ? (what + ".csv") : cfg.out);
    for (const auto& [k, v] : cfg.echo("table")) w.comment(k, v);
    w.comment("what", what);

    if (what == "moments") {
        const auto rule = build_measure_matched_rule(ctx, 0.0, 1.0, n);
        w.columns({"k", "quadrature", "exact", "rel_err"});
        for (std::size_t k = 0; k <= 2 * n - 1; ++k) {
            const double ka = static_cast<double>(k) * ctx.alpha;
            double sum = 0.0;
            for (std::size_t i = 0; i < rule.nodes.size(); ++i)
                sum += rule.weights[i] * std::pow(rule.nodes[i], ka);
            const double exact =
                std::exp(std::lgamma(1.0 + ka) - std::lgamma(1.0 + ka + ctx.alpha));
            w.row({static_cast<double>(k), sum, exact, std::fabs(sum - exact) / exact});
        }
    } else if (what == "riemann-divergence") {
        w.columns({"N", "literal_sum", "closed_form"});
        for (std::size_t N : {10u, 100u, 1000u, 10000u}) {
            const complex s =
                lf_integral_riemann([](double) { return 1.0; }, ctx, 0.0, 1.0, N);
            const double cf = std::pow(static_cast<double>(N), 1.0 - ctx.alpha) /
                              std::tgamma(1.0 + ctx.alpha);
            w.row({static_cast<double>(N), s.real(), cf});
        }
    } else if (what == "ml-values") {
        w.columns({"z_re", "z_im", "ml_re", "ml_im", "oracle_re", "oracle_im", "abs_err"});
        for (int i = 0; i <= 60; ++i) {
            const double zr = -3.0 + 6.0 * i / 60.0;
            const complex z(zr, 0.0);
            const complex v = mittag_leffler(ctx, z);
            complex oracle = v;
            if (ctx.alpha == 1.0)
                oracle = std::exp(z);
            else if (ctx.alpha == 0.5)
                oracle = std::exp(zr * zr) * std::erfc(-zr);
            w.row({zr, 0.0, v.real(), v.imag(), oracle.real(), oracle.imag(),
                   std::abs(v - oracle)});
        }
        w.comment("oracle", "exp at alpha=1, exp(z^2)erfc(-z) at alpha=1/2, else self");
    } else {
        throw io_error("table: unknown kind '" + what + "'");
    }
    w.write();
    return 0;
}

int cmd_ml_eval(const RunConfig& cfg, double z_re, double z_im) {
    const AlphaContext ctx = cfg.ctx();
    const auto r = mittag_leffler_full(ctx.alpha, complex(z_re, z_im));
    const char* method = r.method == MlMethod::exponential ? "exp"
                         : r.method == MlMethod::taylor    ? "taylor"
                                                           : "asymptotic";
    std::printf("E_%.17g(%.17g%+.17gi) = %.17g %+.17gi\n", ctx.alpha, z_re, z_im, r.value.real(),
                r.value.imag());
    std::printf("method = %s, terms = %d, reduced_confidence = %s\n", method, r.terms_used,
                r.reduced_confidence ? "true" : "false");
    if (!cfg.out.empty()) {
        CsvWriter w(cfg.out);
        for (const auto& [k, v] : cfg.echo("ml-eval")) w.comment(k, v);
        w.columns({"z_re", "z_im", "re", "im"});
        w.row({z_re, z_im, r.value.real(), r.value.imag()});
        w.write();
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"local fractional calculus / generalized Yang-Fourier transform toolkit"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string spec_path, spec_path2, spectrum_path, suite = "all", what = "moments";
    std::string reconstruct_path;
    double x_min = 0.1, x_max = 5.0, z_re = 0.0, z_im = 0.0, half_period = 1.0, conv_x_max = 8.0;
    std::size_t x_count = 256, conv_points = 2048, series_nodes = 1024, table_n = 16;
    int n_terms = 16;

    auto* t = app.add_subcommand("transform", "forward generalized transform of a signal spec");
    cfg.add_common(t);
    t->add_option("--spec", spec_path, "signal spec file (JSON)")->required();

    auto* iv = app.add_subcommand("inverse", "inverse transform of a spectrum CSV");
    cfg.add_common(iv);
    iv->add_option("--spectrum", spectrum_path, "spectrum CSV (omega, re, im)")->required();
    iv->add_option("--x-min", x_min, "output grid start");
    iv->add_option("--x-max", x_max, "output grid end");
    iv->add_option("--x-count", x_count, "output grid points");

    auto* cv = app.add_subcommand("convolve", "causal convolution of two signal specs");
    cfg.add_common(cv);
    cv->add_option("--spec", spec_path, "first signal spec")->required();
    cv->add_option("--spec2", spec_path2, "second signal spec")->required();
    cv->add_option("--x-max", conv_x_max, "grid end (grid starts at 0)");
    cv->add_option("--points", conv_points, "grid points");

    auto* se = app.add_subcommand("series", "fractal Fourier series coefficients on [-l, l]");
    cfg.add_common(se);
    se->add_option("--spec", spec_path, "signal spec file")->required();
    se->add_option("--half-period", half_period, "half period l");
    se->add_option("--n-terms", n_terms, "coefficients n = -N..N");
    se->add_option("--series-nodes", series_nodes, "quadrature nodes per half interval");
    se->add_option("--reconstruct", reconstruct_path, "also write the partial sum to this CSV");
    se->add_option("--x-count", x_count, "reconstruction grid points");

    auto* vf = app.add_subcommand("verify", "run the identity verification suites");
    cfg.add_common(vf);
    vf->add_option("--suite", suite, "formal|numeric|all")
        ->check(CLI::IsMember({"formal", "numeric", "all"}));

    auto* tb = app.add_subcommand("table", "diagnostic tables");
    cfg.add_common(tb);
    tb->add_option("--what", what, "moments|riemann-divergence|ml-values")
        ->check(CLI::IsMember({"moments", "riemann-divergence", "ml-values"}));
    tb->add_option("--n", table_n, "rule size for the moments table");

    auto* ml = app.add_subcommand("ml-eval", "evaluate E_alpha(z)");
    cfg.add_common(ml);
    ml->add_option("--z-re", z_re, "Re z");
    ml->add_option("--z-im", z_im, "Im z");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        if (t->parsed()) return cmd_transform(cfg, spec_path);
        if (iv->parsed()) return cmd_inverse(cfg, spectrum_path, x_min, x_max, x_count);
        if (cv->parsed()) return cmd_convolve(cfg, spec_path, spec_path2, conv_x_max, conv_points);
        if (se->parsed())
            return cmd_series(cfg, spec_path, half_period, n_terms, series_nodes,
                              reconstruct_path, x_count);
        if (vf->parsed()) return cmd_verify(cfg, suite);
        if (tb->parsed()) return cmd_table(cfg, what, table_n);
        if (ml->parsed()) return cmd_ml_eval(cfg, z_re, z_im);
    } catch (const io_error& e) {
        std::fprintf(stderr, "input error: %s\n", e.what());
        return 2;
    } catch (const domain_error& e) {
        std::fprintf(stderr, "input error: %s\n", e.what());
        return 2;
    } catch (const convergence_error& e) {
        std::fprintf(stderr, "numeric failure: %s\n", e.what());
        return 3;
    } catch (const conditioning_error& e) {
        std::fprintf(stderr, "numeric failure: %s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "numeric failure: %s\n", e.what());
        return 3;
    }
    return 0;
}
