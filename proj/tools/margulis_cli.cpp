// margulis-cli: batch interface over the margulis library.  Loads a JSON job
// configuration (group + cocycle), runs classification, sign scans,
// derivative checks, deformed-trace tables, and boundary-target solves, and
// emits deterministic CSV or JSON.
//
// Exit codes: 0 ok, 2 configuration/usage error, 3 domain error (elliptic
// word, degenerate boundary system).

#include <unistd.h>

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "margulis/margulis.hpp"

namespace {

using namespace margulis;
using nlohmann::json;

// Round-trip-exact decimal rendering; keeps CSV byte-identical across runs.
std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// Whole-buffer output, atomically replaced when writing to a file so a
// failed run never leaves a partial document behind.
void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    namespace fs = std::filesystem;
    const fs::path target(out_path);
    fs::path dir = target.parent_path();
    if (dir.empty()) dir = ".";
    const fs::path tmp =
        dir / (target.filename().string() + ".tmp." + std::to_string(::getpid()));
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) {
            throw std::invalid_argument("cannot open output file '" + tmp.string() + "'");
        }
        f << content;
        f.flush();
        if (!f) {
            std::error_code ec;
            fs::remove(tmp, ec);
            throw std::invalid_argument("failed writing output file '" + tmp.string() + "'");
        }
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        std::error_code ec2;
        fs::remove(tmp, ec2);
        throw std::invalid_argument("cannot replace output file '" + out_path +
                                    "': " + ec.message());
    }
}

json vec_json(const Vec21& v) { return json::array({v.x1, v.x2, v.x3}); }

json sl2_json(const Sl2Vector& v) { return json::array({v.a, v.b, v.c}); }

std::string triple(const Vec21& v) {
    return fmt(v.x1) + " " + fmt(v.x2) + " " + fmt(v.x3);
}

std::string triple(const Sl2Vector& v) {
    return fmt(v.a) + " " + fmt(v.b) + " " + fmt(v.c);
}

constexpr const char* kKappaNote =
    "kappa = 2 under the pairing <V,W> = Tr(VW)/2 with unit-spacelike X0: the "
    "diagonal model gives length_t = 2(s + t*alpha) exactly. Conventions that "
    "rescale the pairing or the neutral vector quote the same derivative as "
    "alpha or alpha/2; only the positive constant moves, never its sign.";

// ---------------------------------------------------------------- classify

struct ClassifyOpts {
    std::string config_path;
    std::string word;
    bool require_invariants = false;
    std::string out_path;
    std::string format = "text";
};

void run_classify(const ClassifyOpts& o) {
    const JobConfig cfg = load_config(o.config_path);
    const HolonomyRep rep = cfg.build_rep();
    const Word w = Word::reduce(o.word);
    const IsometryLift g = evaluate(rep, w);
    const IsometryClass cls = classify(g);
    const bool has_invariants =
        cls == IsometryClass::Hyperbolic || cls == IsometryClass::Parabolic;
    if (o.require_invariants && !has_invariants) {
        throw std::domain_error("classify: word '" + w.letters() + "' is " +
                                to_string(cls) +
                                "; invariant vectors and length are undefined");
    }
    std::string out;
    if (o.format == "json") {
        json j;
        j["word"] = w.letters();
        j["trace"] = g.trace();
        j["class"] = to_string(cls);
        if (has_invariants) {
            const Sl2Vector f = invariant_vector_F(g);
            const Sl2Vector x0 = neutral_vector_X0(g);
            j["length"] = geodesic_length(g);
            j["F"] = {{"sl2", sl2_json(f)}, {"vec21", vec_json(sl2_to_vec(f))}};
            j["X0"] = {{"sl2", sl2_json(x0)}, {"vec21", vec_json(sl2_to_vec(x0))}};
        }
        out = j.dump(2) + "\n";
    } else {
        std::ostringstream s;
        s << "word: " << (w.empty() ? "(empty)" : w.letters()) << "\n";
        s << "trace: " << fmt(g.trace()) << "\n";
        s << "class: " << to_string(cls) << "\n";
        if (has_invariants) {
            const Sl2Vector f = invariant_vector_F(g);
            const Sl2Vector x0 = neutral_vector_X0(g);
            s << "length: " << fmt(geodesic_length(g)) << "\n";
            s << "F_sl2: " << triple(f) << "\n";
            s << "F_vec21: " << triple(sl2_to_vec(f)) << "\n";
            s << "X0_sl2: " << triple(x0) << "\n";
            s << "X0_vec21: " << triple(sl2_to_vec(x0)) << "\n";
        }
        out = s.str();
    }
    emit(o.out_path, out);
}

// -------------------------------------------------------------------- scan

struct ScanOpts {
    std::string config_path;
    int max_len = 0;       // 0: take from config
    double tau_zero = -1.0;  // <0: take from config
    std::string out_path;
    std::string format = "csv";
};

json scan_summary(const SignReport& r) {
    json zero = json::array();
    for (const Word& w : r.zero_words) zero.push_back(w.letters());
    json unexpected = json::array();
    for (const Word& w : r.unexpected_zero_words) unexpected.push_back(w.letters());
    return json{{"verdict", to_string(r.verdict)},
                {"words", r.records.size()},
                {"zero_words", zero},
                {"unexpected_zero_words", unexpected},
                {"boundary_alpha", r.boundary_invariants},
                {"max_len", r.max_len},
                {"tau_zero", r.tau_zero}};
}

void run_scan(const ScanOpts& o) {
    const JobConfig cfg = load_config(o.config_path);
    const HolonomyRep rep = cfg.build_rep();
    const Cocycle u = cfg.build_cocycle(rep);
    const int max_len = o.max_len > 0 ? o.max_len : cfg.max_len;
    const double tau = o.tau_zero >= 0.0 ? o.tau_zero : cfg.tau_zero;
    const SignReport report = sign_scan(rep, u, max_len, tau);

    std::string out;
    if (o.format == "json") {
        json rows = json::array();
        for (const ScanRecord& r : report.records) {
            rows.push_back({{"word", r.word.letters()},
                            {"length_letters", r.word.length()},
                            {"trace", r.trace},
                            {"class", to_string(r.cls)},
                            {"alpha_tilde", r.alpha_tilde},
                            {"alpha", r.alpha},
                            {"sign", r.sign}});
        }
        out = json{{"records", rows}, {"summary", scan_summary(report)}}.dump(2) + "\n";
    } else {
        std::ostringstream s;
        s << "word,length_letters,trace,class,alpha_tilde,alpha,sign\n";
        for (const ScanRecord& r : report.records) {
            s << r.word.letters() << ',' << r.word.length() << ',' << fmt(r.trace) << ','
              << to_string(r.cls) << ',' << fmt(r.alpha_tilde) << ',' << fmt(r.alpha)
              << ',' << r.sign << '\n';
        }
        s << scan_summary(report).dump() << '\n';
        out = s.str();
    }
    emit(o.out_path, out);
}

// ------------------------------------------------------------- deriv-check

struct DerivOpts {
    std::string config_path;
    std::string word;  // empty: all conjugacy representatives to max_len
    int max_len = 0;   // 0: default 6 for this command
    double h = 0.0;    // 0: take from config
    std::string out_path;
    std::string format = "csv";
};

void run_deriv_check(const DerivOpts& o) {
    const JobConfig cfg = load_config(o.config_path);
    const HolonomyRep rep = cfg.build_rep();
    const Cocycle u = cfg.build_cocycle(rep);
    const double h = o.h > 0.0 ? o.h : cfg.h;

    std::vector<Word> words;
    if (!o.word.empty()) {
        words.push_back(Word::reduce(o.word));
    } else {
        words = enumerate_conjugacy_reps(o.max_len > 0 ? o.max_len : 6);
    }

    struct Row {
        std::string word;
        double alpha;
        double fd;
        std::string ratio;
    };
    std::vector<Row> rows;
    rows.reserve(words.size());
    double max_rel_dev = 0.0;
    for (const Word& w : words) {
        const DerivativeCheck c = length_derivative_check(rep, u, w, h);
        const double a = c.predicted / kLengthDerivativeKappa;
        // fd / (kappa * alpha); reads 1.0 when the identity holds, n/a when
        // both sides vanish and the quotient would be noise over noise.
        std::string ratio = "n/a";
        if (!(std::abs(c.fd) < 1e-6 && std::abs(c.predicted) < 1e-6) &&
            c.predicted != 0.0) {
            ratio = fmt(c.fd / c.predicted);
        }
        max_rel_dev = std::max(max_rel_dev,
                               std::abs(c.fd - c.predicted) / std::max(1.0, std::abs(c.fd)));
        rows.push_back({w.letters(), a, c.fd, ratio});
    }

    const json summary{{"kappa", kLengthDerivativeKappa},
                       {"rows", rows.size()},
                       {"h", h},
                       {"max_rel_dev", max_rel_dev},
                       {"kappa_note", kKappaNote}};
    std::string out;
    if (o.format == "json") {
        json jrows = json::array();
        for (const Row& r : rows) {
            jrows.push_back({{"word", r.word},
                             {"alpha", r.alpha},
                             {"fd", r.fd},
                             {"ratio", r.ratio}});
        }
        out = json{{"records", jrows}, {"summary", summary}}.dump(2) + "\n";
    } else {
        std::ostringstream s;
        s << "word,alpha,fd,ratio\n";
        for (const Row& r : rows) {
            s << r.word << ',' << fmt(r.alpha) << ',' << fmt(r.fd) << ',' << r.ratio
              << '\n';
        }
        s << summary.dump() << '\n';
        out = s.str();
    }
    emit(o.out_path, out);
}

// ------------------------------------------------------------- parab-check

struct ParabOpts {
    std::string config_path;
    std::string word;  // empty: all parabolic boundary words
    double h = 0.0;
    std::string out_path;
    std::string format = "csv";
};

void run_parab_check(const ParabOpts& o) {
    const JobConfig cfg = load_config(o.config_path);
    const HolonomyRep rep = cfg.build_rep();
    const Cocycle u = cfg.build_cocycle(rep);
    const double h = o.h > 0.0 ? o.h : cfg.h;

    std::vector<Word> words;
    if (!o.word.empty()) {
        words.push_back(Word::reduce(o.word));
    } else {
        const BoundaryWords bw = boundary_words();
        for (const Word& w : {bw.d1, bw.d2, bw.d3}) {
            if (classify(evaluate(rep, w)) == IsometryClass::Parabolic) {
                words.push_back(w);
            }
        }
    }

    std::ostringstream s;
    s << "word,alpha_tilde,fd,abs_err\n";
    json jrows = json::array();
    double max_rel_err = 0.0;
    for (const Word& w : words) {
        const DerivativeCheck c = parabolic_trace_derivative_check(rep, u, w, h);
        const double err = std::abs(c.fd - c.predicted);
        max_rel_err =
            std::max(max_rel_err, err / std::max(1.0, std::abs(c.predicted)));
        s << w.letters() << ',' << fmt(c.predicted) << ',' << fmt(c.fd) << ','
          << fmt(err) << '\n';
        jrows.push_back({{"word", w.letters()},
                         {"alpha_tilde", c.predicted},
                         {"fd", c.fd},
                         {"abs_err", err}});
    }
    const json summary{{"rows", words.size()}, {"h", h}, {"max_rel_err", max_rel_err}};
    std::string out;
    if (o.format == "json") {
        out = json{{"records", jrows}, {"summary", summary}}.dump(2) + "\n";
    } else {
        s << summary.dump() << '\n';
        out = s.str();
    }
    emit(o.out_path, out);
}

// ------------------------------------------------------------- trace-table

struct TraceTableOpts {
    std::string kind;
    std::string action = "left";
    std::vector<double> shifts;
    std::vector<double> as{0.0};
    std::vector<double> bs{0.0};
    std::vector<double> cs{0.0};
    int random_count = -1;  // <0: not requested
    std::string config_path;
    bool seed_set = false;
    std::uint64_t seed = 0;
    std::string out_path;
    std::string format = "csv";
};

void run_trace_table(const TraceTableOpts& o) {
    const DeformKind kind =
        o.kind == "hyperbolic" ? DeformKind::Hyperbolic : DeformKind::Parabolic;
    const DeformAction action =
        o.action == "left" ? DeformAction::Left : DeformAction::Right;

    std::uint64_t seed = o.seed;
    int random_count = o.random_count;
    int config_samples = 0;
    if (!o.config_path.empty()) {
        const JobConfig cfg = load_config(o.config_path);
        if (!o.seed_set) seed = cfg.seed;
        config_samples = cfg.samples;
    }
    // With a config and no explicit grid, fall back to the configured number
    // of random samples.
    if (o.shifts.empty() && random_count < 0 && config_samples > 0) {
        random_count = config_samples;
    }

    struct Point {
        double shift, a, b, c;
    };
    std::vector<Point> grid;
    for (double s : o.shifts) {
        for (double a : o.as) {
            for (double b : o.bs) {
                for (double c : o.cs) {
                    grid.push_back({s, a, b, c});
                }
            }
        }
    }
    if (random_count > 0) {
        Rng rng(seed);
        for (int i = 0; i < random_count; ++i) {
            grid.push_back({rng.uniform(0.2, 2.0), rng.uniform(-2.0, 2.0),
                            rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)});
        }
    }
    if (grid.empty()) {
        throw std::invalid_argument(
            "trace-table: empty grid; provide --shift values or --random N");
    }

    std::ostringstream s;
    s << "kind,action,shift,a,b,c,closed,oracle,abs_diff\n";
    json jrows = json::array();
    double max_abs_diff = 0.0;
    for (const Point& p : grid) {
        if (!(p.shift > 0.0)) {
            throw std::invalid_argument("trace-table: shift values must be positive");
        }
        // The right action g exp(-V) has the trace of the left action at -V.
        const double sgn = action == DeformAction::Left ? 1.0 : -1.0;
        const double closed =
            kind == DeformKind::Hyperbolic
                ? trace_deformed_hyperbolic(
                      hyperbolic_params(p.shift, sgn * p.a, sgn * p.b, sgn * p.c))
                : trace_deformed_parabolic(
                      parabolic_params(p.shift, sgn * p.a, sgn * p.b, sgn * p.c));
        const Sl2Vector v{p.a, p.b, p.c};
        const IsometryLift model = kind == DeformKind::Hyperbolic
                                       ? hyperbolic_model(p.shift)
                                       : parabolic_model(p.shift);
        const double oracle = (action == DeformAction::Left ? pi_left(v, model)
                                                            : pi_right(v, model))
                                  .trace();
        const double diff = std::abs(closed - oracle);
        max_abs_diff = std::max(max_abs_diff, diff);
        s << to_string(kind) << ',' << to_string(action) << ',' << fmt(p.shift) << ','
          << fmt(p.a) << ',' << fmt(p.b) << ',' << fmt(p.c) << ',' << fmt(closed)
          << ',' << fmt(oracle) << ',' << fmt(diff) << '\n';
        jrows.push_back({{"kind", to_string(kind)},
                         {"action", to_string(action)},
                         {"shift", p.shift},
                         {"a", p.a},
                         {"b", p.b},
                         {"c", p.c},
                         {"closed", closed},
                         {"oracle", oracle},
                         {"abs_diff", diff}});
    }
    const json summary{{"rows", grid.size()}, {"max_abs_diff", max_abs_diff}};
    std::string out;
    if (o.format == "json") {
        out = json{{"records", jrows}, {"summary", summary}}.dump(2) + "\n";
    } else {
        s << summary.dump() << '\n';
        out = s.str();
    }
    emit(o.out_path, out);
}

// ---------------------------------------------------------- boundary-solve

struct SolveOpts {
    std::string config_path;
    std::string out_path;
    std::string format = "json";
};

void run_boundary_solve(const SolveOpts& o) {
    const JobConfig cfg = load_config(o.config_path);
    const HolonomyRep rep = cfg.build_rep();
    const Cocycle u = cfg.build_cocycle(rep);
    const BoundaryWords bw = boundary_words();
    const Word words[3] = {bw.d1, bw.d2, bw.d3};
    std::array<double, 3> achieved{};
    for (int i = 0; i < 3; ++i) achieved[i] = alpha(rep, u, words[i]);

    json j;
    j["boundary_words"] = {bw.d1.letters(), bw.d2.letters(), bw.d3.letters()};
    j["u_a"] = vec_json(u.u_a);
    j["u_b"] = vec_json(u.u_b);
    j["achieved"] = achieved;
    if (cfg.boundary_targets) {
        j["targets"] = *cfg.boundary_targets;
        double residual = 0.0;
        for (int i = 0; i < 3; ++i) {
            residual = std::max(residual, std::abs(achieved[i] - (*cfg.boundary_targets)[i]));
        }
        j["residual"] = residual;
    }
    std::string out;
    if (o.format == "csv") {
        std::ostringstream s;
        s << "quantity,x1,x2,x3\n";
        s << "u_a," << fmt(u.u_a.x1) << ',' << fmt(u.u_a.x2) << ',' << fmt(u.u_a.x3)
          << '\n';
        s << "u_b," << fmt(u.u_b.x1) << ',' << fmt(u.u_b.x2) << ',' << fmt(u.u_b.x3)
          << '\n';
        s << "achieved," << fmt(achieved[0]) << ',' << fmt(achieved[1]) << ','
          << fmt(achieved[2]) << '\n';
        if (cfg.boundary_targets) {
            const auto& t = *cfg.boundary_targets;
            s << "targets," << fmt(t[0]) << ',' << fmt(t[1]) << ',' << fmt(t[2]) << '\n';
        }
        out = s.str();
    } else {
        out = j.dump(2) + "\n";
    }
    emit(o.out_path, out);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Margulis invariants of affine deformations of three-holed-sphere "
        "groups.\nBoundary convention: d1 = a, d2 = b, d3 = (ab)^-1, so "
        "d1 d2 d3 = 1; parabolic\nboundary targets are interpreted against "
        "alpha_tilde (only the sign is canonical)."};
    app.require_subcommand(1);
    // Keep -h free: the finite-difference step option is spelled --h, so help
    // is long-form only, on the app and on every subcommand.
    const auto long_help_only = [](CLI::App* cmd) {
        cmd->set_help_flag("--help", "print help and exit");
    };
    long_help_only(&app);

    ClassifyOpts classify_opts;
    auto* cmd_classify =
        app.add_subcommand("classify", "Classify a word; report trace, length, F and X0");
    long_help_only(cmd_classify);
    cmd_classify->add_option("--config", classify_opts.config_path, "JSON job configuration")
        ->required();
    cmd_classify->add_option("word", classify_opts.word,
                             "word over a, A, b, B (default: empty word)");
    cmd_classify->add_flag("--invariants", classify_opts.require_invariants,
                           "fail (exit 3) when the word has no invariant data "
                           "(identity or elliptic)");
    cmd_classify->add_option("--out", classify_opts.out_path, "output path (default stdout)");
    cmd_classify->add_option("--format", classify_opts.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd_classify->callback([&] { run_classify(classify_opts); });

    ScanOpts scan_opts;
    auto* cmd_scan = app.add_subcommand(
        "scan", "Margulis-invariant sign scan over conjugacy representatives");
    long_help_only(cmd_scan);
    cmd_scan->add_option("--config", scan_opts.config_path, "JSON job configuration")
        ->required();
    cmd_scan->add_option("--max-len", scan_opts.max_len,
                         "override scan.max_len from the config")
        ->check(CLI::PositiveNumber);
    cmd_scan->add_option("--tau-zero", scan_opts.tau_zero,
                         "override scan.tau_zero from the config")
        ->check(CLI::NonNegativeNumber);
    cmd_scan->add_option("--out", scan_opts.out_path, "output path (default stdout)");
    cmd_scan->add_option("--format", scan_opts.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd_scan->callback([&] { run_scan(scan_opts); });

    DerivOpts deriv_opts;
    auto* cmd_deriv = app.add_subcommand(
        "deriv-check", "Compare d(length)/dt against kappa * alpha by central differences");
    long_help_only(cmd_deriv);
    cmd_deriv->add_option("--config", deriv_opts.config_path, "JSON job configuration")
        ->required();
    cmd_deriv->add_option("word", deriv_opts.word,
                          "single word to check (default: all representatives)");
    cmd_deriv->add_option("--max-len", deriv_opts.max_len,
                          "representative length bound for the default sample (default 6)")
        ->check(CLI::PositiveNumber);
    cmd_deriv->add_option("--h", deriv_opts.h, "finite-difference step (default from config)")
        ->check(CLI::PositiveNumber);
    cmd_deriv->add_option("--out", deriv_opts.out_path, "output path (default stdout)");
    cmd_deriv->add_option("--format", deriv_opts.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd_deriv->callback([&] { run_deriv_check(deriv_opts); });

    ParabOpts parab_opts;
    auto* cmd_parab = app.add_subcommand(
        "parab-check",
        "Compare d((sigma/2)Tr)/dt against alpha_tilde at parabolic words");
    long_help_only(cmd_parab);
    cmd_parab->add_option("--config", parab_opts.config_path, "JSON job configuration")
        ->required();
    cmd_parab->add_option("word", parab_opts.word,
                          "single word to check (default: parabolic boundary words)");
    cmd_parab->add_option("--h", parab_opts.h, "finite-difference step (default from config)")
        ->check(CLI::PositiveNumber);
    cmd_parab->add_option("--out", parab_opts.out_path, "output path (default stdout)");
    cmd_parab->add_option("--format", parab_opts.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd_parab->callback([&] { run_parab_check(parab_opts); });

    TraceTableOpts table_opts;
    auto* cmd_table = app.add_subcommand(
        "trace-table", "Closed-form deformed traces against the matrix-product oracle");
    long_help_only(cmd_table);
    cmd_table->add_option("--kind", table_opts.kind, "hyperbolic or parabolic")
        ->required()
        ->check(CLI::IsMember({"hyperbolic", "parabolic"}));
    cmd_table->add_option("--action", table_opts.action, "left (exp(V) g) or right (g exp(-V))")
        ->check(CLI::IsMember({"left", "right"}));
    cmd_table->add_option("--shift", table_opts.shifts,
                          "comma-separated s (hyperbolic) or r (parabolic) values")
        ->delimiter(',');
    cmd_table->add_option("--a", table_opts.as, "comma-separated a values (default 0)")
        ->delimiter(',');
    cmd_table->add_option("--b", table_opts.bs, "comma-separated b values (default 0)")
        ->delimiter(',');
    cmd_table->add_option("--c", table_opts.cs, "comma-separated c values (default 0)")
        ->delimiter(',');
    cmd_table->add_option("--random", table_opts.random_count,
                          "append N random (shift, a, b, c) tuples");
    cmd_table->add_option("--config", table_opts.config_path,
                          "optional config supplying seed and sample count");
    auto* seed_opt = cmd_table->add_option("--seed", table_opts.seed,
                                           "seed for --random (default 0 or config seed)");
    cmd_table->add_option("--out", table_opts.out_path, "output path (default stdout)");
    cmd_table->add_option("--format", table_opts.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd_table->callback([&] {
        table_opts.seed_set = seed_opt->count() > 0;
        run_trace_table(table_opts);
    });

    SolveOpts solve_opts;
    auto* cmd_solve = app.add_subcommand(
        "boundary-solve", "Minimum-norm cocycle hitting boundary invariant targets");
    long_help_only(cmd_solve);
    cmd_solve->add_option("--config", solve_opts.config_path, "JSON job configuration")
        ->required();
    cmd_solve->add_option("--out", solve_opts.out_path, "output path (default stdout)");
    cmd_solve->add_option("--format", solve_opts.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd_solve->callback([&] { run_boundary_solve(solve_opts); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
