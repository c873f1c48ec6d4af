#include "ballot/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <iomanip>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

#include "CLI11.hpp"

#include "ballot/asymptotics.hpp"
#include "ballot/closedform.hpp"
#include "ballot/enumerator.hpp"
#include "ballot/guesser.hpp"
#include "ballot/reference.hpp"
#include "ballot/report.hpp"
#include "ballot/seqio.hpp"
#include "ballot/walkmodel.hpp"

namespace ballot::cli {

namespace asy = asymptotics;
namespace fs = std::filesystem;

int exit_code(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::NonPositiveWeight:
        case ErrorCode::NotSorted:
        case ErrorCode::NotCoprime:
        case ErrorCode::DimensionMismatch:
        case ErrorCode::InvalidKey:
        case ErrorCode::InvalidArgument:
            return kUsage;
        case ErrorCode::ResourceLimit:
            return kResourceLimit;
        default:
            return kComputation;
    }
}

namespace {

// Decimal digits shown for theta in text tables.
constexpr std::size_t kTextDigits = 20;

struct SourceFlags {
    std::string seq_file;
    std::string weights;
    std::string mode = "fixed";
    std::size_t terms = 100;
    bool no_cache = false;
};

struct FitFlags {
    std::optional<std::size_t> order;
    std::optional<std::size_t> window;
    std::size_t precision = 400;
};

struct Loaded {
    Sequence seq;
    std::optional<WalkProblem> problem;
};

WalkProblem make_problem(const std::string& weights, const std::string& mode) {
    return WalkProblem{validate(parse_weight_list(weights)), mode == "free" ? EndpointMode::Free : EndpointMode::Fixed};
}

Sequence terms_for(const WalkProblem& problem, std::size_t n_max, bool no_cache, std::ostream& err) {
    if (no_cache) return enumerate(problem, n_max);
    try {
        seqio::SequenceCache cache(seqio::default_cache_root());
        return cache.get(problem, n_max).sequence;
    } catch (const Error& e) {
        if (e.code() != ErrorCode::IoError) throw;
        err << "warning: cache unavailable (" << e.what() << "), computing directly\n";
        return enumerate(problem, n_max);
    }
}

Loaded load(const SourceFlags& flags, std::ostream& err) {
    if (!flags.seq_file.empty()) return {seqio::read_bfile(fs::path(flags.seq_file)), std::nullopt};
    if (flags.weights.empty()) throw Error(ErrorCode::InvalidArgument, "one of --seq or --weights is required");
    auto problem = make_problem(flags.weights, flags.mode);
    return {terms_for(problem, flags.terms, flags.no_cache, err), problem};
}

seqio::RunReport base_report(const Sequence& seq, const std::optional<WalkProblem>& problem) {
    seqio::RunReport r;
    if (problem) {
        r.problem_key = canonical_key(*problem);
        r.mode = problem->mode == EndpointMode::Fixed ? "fixed" : "free";
        r.weights.assign(problem->weights.entries().begin(), problem->weights.entries().end());
    } else {
        r.problem_key = seq.provenance.empty() ? "b-file" : seq.provenance;
    }
    r.terms_count = seq.size();
    r.terms_digest = seqio::terms_digest(seq);
    return r;
}

mpq_class parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    const auto digits = [](std::string_view s) {
        return !s.empty() && s.find_first_not_of("0123456789") == std::string_view::npos;
    };
    const std::string_view num = std::string_view(text).substr(0, slash);
    const std::string_view den = slash == std::string::npos ? "1" : std::string_view(text).substr(slash + 1);
    if (!digits(num) || !digits(den)) {
        throw Error(ErrorCode::InvalidArgument, "--mu expects auto, joint, from-weights or p/q; got '" + text + "'");
    }
    const mpz_class p{std::string(num)};
    const mpz_class d{std::string(den)};
    if (p == 0 || d == 0) throw Error(ErrorCode::InvalidArgument, "--mu must be a positive rational");
    mpq_class q{p, d};
    q.canonicalize();
    return q;
}

asy::MuSource resolve_mu(const std::string& spec, const Loaded& source, std::size_t stride, std::size_t precision) {
    if (spec == "joint") return asy::JointFit{};
    if (spec == "auto") return asy::estimate_mu(source.seq, stride, precision);
    if (spec == "from-weights") {
        if (!source.problem || source.problem->mode != EndpointMode::Fixed) {
            throw Error(ErrorCode::InvalidArgument, "--mu from-weights needs fixed-endpoint --weights");
        }
        return closedform::connective_constant(source.problem->weights);
    }
    return parse_rational(spec);
}

asy::FitConfig make_config(const FitFlags& flags, asy::MuSource mu) {
    asy::FitConfig cfg;
    cfg.correction_order = flags.order;
    cfg.window_end = flags.window;
    cfg.precision = flags.precision;
    cfg.mu = std::move(mu);
    return cfg;
}

void print_fit(std::ostream& out, const asy::AsymptoticFit& f) {
    if (f.stratum) out << "stratum        " << f.stratum->residue << " mod " << f.stratum->modulus << "\n";
    out << "mu             " << asy::format_mu(f.mu_used) << "\n";
    out << "theta          " << f.theta.to_scientific(kTextDigits) << "\n";
    out << "log_C          " << f.log_C.to_scientific(kTextDigits) << "\n";
    out << "stable_digits  " << f.stable_digits << "\n";
    out << "window_end     " << f.window_end << "\n";
    out << "order          " << f.correction_order << "\n";
    out << "precision      " << f.precision << "\n";
    for (const auto& note : f.notes) out << "note           " << note << "\n";
}

seqio::RunReport fit_report(seqio::RunReport base, const asy::AsymptoticFit& f) {
    base.mu = asy::format_mu(f.mu_used);
    base.fit = seqio::summarize(f);
    return base;
}

std::string pad(std::string s, std::size_t width, bool right = false) {
    if (s.size() >= width) return s;
    return right ? std::string(width - s.size(), ' ') + s : s + std::string(width - s.size(), ' ');
}

std::string signed_fixed(const Real& x, std::size_t decimals) {
    auto s = x.to_fixed(decimals);
    return s.front() == '-' ? s : "+" + s;
}

// ---- enumerate --------------------------------------------------------------

int cmd_enumerate(const SourceFlags& flags, const std::string& out_file, std::ostream& out, std::ostream& err) {
    if (flags.weights.empty()) throw Error(ErrorCode::InvalidArgument, "--weights is required");
    const auto problem = make_problem(flags.weights, flags.mode);
    const auto seq = terms_for(problem, flags.terms, flags.no_cache, err);
    if (out_file.empty()) {
        seqio::write_bfile(seq, out);
    } else {
        seqio::write_bfile(seq, fs::path(out_file), {canonical_key(problem)});
    }
    return kOk;
}

// ---- closed-form ------------------------------------------------------------

int cmd_closed_form(const std::string& which, const std::string& args_text, std::ostream& out) {
    const auto args = parse_weight_list(args_text);
    const auto non_negative = [&] {
        for (auto v : args) {
            if (v < 0) throw Error(ErrorCode::InvalidArgument, which + " arguments must be >= 0");
        }
    };
    if (which == "catalan") {
        non_negative();
        for (auto n : args) out << closedform::catalan(static_cast<std::uint64_t>(n)).get_str() << "\n";
    } else if (which == "super-catalan") {
        non_negative();
        if (args.size() != 2 || args[0] < 1) {
            throw Error(ErrorCode::InvalidArgument, "super-catalan expects --args k,n with k >= 1");
        }
        out << closedform::super_catalan(static_cast<std::uint64_t>(args[0]), static_cast<std::uint64_t>(args[1])).get_str()
            << "\n";
    } else if (which == "walk-count") {
        out << closedform::walk_count(args).get_str() << "\n";
    } else if (which == "multinomial") {
        non_negative();
        out << closedform::multinomial(args).get_str() << "\n";
    } else if (which == "discriminant") {
        out << closedform::discriminant(args).get_str() << "\n";
    } else {
        out << closedform::connective_constant(validate(args)).get_str() << "\n";
    }
    return kOk;
}

// ---- estimate ---------------------------------------------------------------

int cmd_estimate(const SourceFlags& source_flags, const FitFlags& fit_flags, const std::string& mu_spec,
                 std::optional<std::size_t> stratify, bool json, std::ostream& out, std::ostream& err) {
    const auto source = load(source_flags, err);
    if (stratify && *stratify == 0) throw Error(ErrorCode::InvalidArgument, "--stratify must be >= 1");
    const auto mu = resolve_mu(mu_spec, source, stratify.value_or(1), fit_flags.precision);
    const auto base = base_report(source.seq, source.problem);

    std::vector<asy::AsymptoticFit> fits;
    if (stratify) {
        for (auto& [residue, f] : asy::stratified_exponents(source.seq, *stratify, make_config(fit_flags, mu))) {
            fits.push_back(std::move(f));
        }
    } else {
        fits.push_back(asy::fit(source.seq, make_config(fit_flags, mu)));
    }

    if (json) {
        std::vector<seqio::RunReport> reports;
        for (const auto& f : fits) reports.push_back(fit_report(base, f));
        out << (stratify ? seqio::to_json(reports) : seqio::to_json(reports.front()));
        return kOk;
    }
    out << "problem        " << base.problem_key << "\n";
    out << "terms          " << base.terms_count << "\n";
    for (std::size_t i = 0; i < fits.size(); ++i) {
        if (i) out << "\n";
        print_fit(out, fits[i]);
    }
    return kOk;
}

// ---- guess-recurrence -------------------------------------------------------

int cmd_guess(const SourceFlags& source_flags, std::size_t max_order, std::size_t max_degree, bool json,
              std::ostream& out, std::ostream& err) {
    const auto source = load(source_flags, err);
    const auto rec = guess(source.seq, max_order, max_degree);
    if (json) {
        auto report = base_report(source.seq, source.problem);
        report.recurrence = rec ? seqio::serialize_recurrence(*rec)
                                : seqio::RecurrenceField{seqio::not_found_certificate(max_order, max_degree)};
        out << seqio::to_json(report);
        return kOk;
    }
    out << (rec ? to_display_string(*rec) : seqio::not_found_certificate(max_order, max_degree)) << "\n";
    return kOk;
}

// ---- reproduce --------------------------------------------------------------

struct ReproduceFlags {
    std::string target;
    std::optional<std::size_t> terms;
    std::optional<std::size_t> order;
    std::size_t precision = 400;
    std::string only;
    bool json = false;
    bool no_cache = false;
};

asy::AsymptoticFit fixed_fit(const WalkProblem& problem, const Sequence& seq, const ReproduceFlags& flags) {
    asy::FitConfig cfg;
    cfg.correction_order = flags.order;
    cfg.precision = flags.precision;
    cfg.mu = closedform::connective_constant(problem.weights);
    return asy::fit(seq, cfg);
}

int reproduce_2d(const ReproduceFlags& flags, std::ostream& out, std::ostream& err) {
    const auto n_max = flags.terms.value_or(100);
    const Real target(mpq_class(-3, 2), digits_to_bits(flags.precision));
    std::vector<seqio::RunReport> reports;
    std::ostringstream table;
    table << pad("a", 3, true) << pad("b", 4, true) << "  " << pad("weights", 9) << pad("theta", 28)
          << pad("|theta+3/2|", 13) << pad("stable", 8) << "mu\n";
    Real worst(0L, 64);
    for (std::int64_t b = 2; b <= 10; ++b) {
        for (std::int64_t a = 1; a < b; ++a) {
            if (std::gcd(a, b) != 1) continue;
            const std::vector<std::int64_t> w{b, a};
            const WalkProblem problem{validate(w), EndpointMode::Fixed};
            const auto seq = terms_for(problem, n_max, flags.no_cache, err);
            const auto f = fixed_fit(problem, seq, flags);
            const auto delta = abs(f.theta - target);
            if (delta > worst) worst = delta;
            reports.push_back(fit_report(base_report(seq, problem), f));
            table << pad(std::to_string(a), 3, true) << pad(std::to_string(b), 4, true) << "  "
                  << pad(format_weight_list(w), 9) << pad(f.theta.to_scientific(kTextDigits), 28)
                  << pad(delta.to_scientific(3), 13) << pad(std::to_string(f.stable_digits), 8)
                  << asy::format_mu(f.mu_used) << "\n";
        }
    }
    if (flags.json) {
        out << seqio::to_json(reports);
        return kOk;
    }
    out << "2D fixed endpoint, region b x1 >= a x2, walks to (b n, a n), n <= " << n_max << "\n";
    out << table.str();
    out << "max |theta+3/2| = " << worst.to_scientific(3) << "\n";
    return kOk;
}

std::vector<std::int64_t> only_filter(const std::string& text) {
    if (text.empty()) return {};
    auto w = parse_weight_list(text);
    validate(w);
    return w;
}

int reproduce_3d(const ReproduceFlags& flags, std::ostream& out, std::ostream& err) {
    const auto n_max = flags.terms.value_or(100);
    const auto only = only_filter(flags.only);
    const auto bits = digits_to_bits(flags.precision);
    std::vector<seqio::RunReport> reports;
    std::ostringstream table;
    table << pad("weights", 9) << pad("reference", 11) << pad("theta", 14) << pad("delta", 11) << pad("stable", 8)
          << "| " << pad("reciprocal", 11) << pad("theta", 14) << pad("delta", 11) << "stable\n";
    bool any = false;
    for (const auto& ref : reference::kExponents3d) {
        const std::vector<std::int64_t> w(ref.weights.begin(), ref.weights.end());
        if (!only.empty() && only != w) continue;
        any = true;
        const WalkProblem literal{validate(w), EndpointMode::Fixed};
        const WalkProblem reciprocal{reciprocal_weights(literal.weights), EndpointMode::Fixed};
        const Real printed(std::string(ref.theta), bits);

        const auto seq_l = terms_for(literal, n_max, flags.no_cache, err);
        const auto fit_l = fixed_fit(literal, seq_l, flags);
        const auto seq_r = terms_for(reciprocal, n_max, flags.no_cache, err);
        const auto fit_r = fixed_fit(reciprocal, seq_r, flags);
        reports.push_back(fit_report(base_report(seq_l, literal), fit_l));
        reports.push_back(fit_report(base_report(seq_r, reciprocal), fit_r));

        table << pad(format_weight_list(w), 9) << pad(std::string(ref.theta), 11)
              << pad(fit_l.theta.to_fixed(8), 14) << pad(signed_fixed(fit_l.theta - printed, 5), 11)
              << pad(std::to_string(fit_l.stable_digits), 8) << "| "
              << pad(format_weight_list(reciprocal.weights.entries()), 11) << pad(fit_r.theta.to_fixed(8), 14)
              << pad(signed_fixed(fit_r.theta - printed, 5), 11) << fit_r.stable_digits << "\n";
        if (w == std::vector<std::int64_t>{2, 1, 1} && n_max >= 400) {
            const Real refined(std::string(reference::kRefined211), bits);
            table << pad("", 9) << pad(std::string(reference::kRefined211), 25)
                  << pad(signed_fixed(fit_l.theta - refined, 7), 19) << "| " << pad("", 25)
                  << signed_fixed(fit_r.theta - refined, 7) << "\n";
        }
    }
    if (!any) throw Error(ErrorCode::InvalidArgument, "--only " + flags.only + " is not one of the table's triples");
    if (flags.json) {
        out << seqio::to_json(reports);
        return kOk;
    }
    out << "3D fixed endpoint, n <= " << n_max << ", mu from weights\n";
    out << "left: chain region of the weights; right: chain region of the reciprocal weights (M/c, M/b, M/a)\n";
    out << table.str();
    return kOk;
}

int reproduce_k13(const ReproduceFlags& flags, std::ostream& out, std::ostream& err) {
    const auto n_max = std::max<std::size_t>(flags.terms.value_or(reference::kK13.size()), 1);
    const WalkProblem problem{validate(std::vector<std::int64_t>(13, 1)), EndpointMode::Free};
    const auto seq = terms_for(problem, n_max, flags.no_cache, err);
    if (flags.json) {
        out << seqio::to_json(base_report(seq, problem));
    }
    bool ok = true;
    for (std::size_t n = 1; n <= n_max; ++n) {
        const auto value = seq.at(n).get_str();
        std::string status = "-";
        if (n <= reference::kK13.size()) {
            const bool match = value == reference::kK13[n - 1];
            ok = ok && match;
            status = match ? "ok" : "MISMATCH(" + std::string(reference::kK13[n - 1]) + ")";
        }
        if (!flags.json) out << pad(std::to_string(n), 3, true) << " " << pad(value, 12, true) << "  " << status << "\n";
    }
    if (!ok) {
        err << "error: ReferenceMismatch\nk=13 terms differ from the published list\n";
        return kComputation;
    }
    return kOk;
}

int reproduce_free_3d(const ReproduceFlags& flags, std::ostream& out, std::ostream& err) {
    const auto n_max = flags.terms.value_or(200);
    const auto only = only_filter(flags.only);
    ReproduceFlags fit_flags = flags;
    // Free-endpoint corrections are not integer powers of 1/n; low orders are the stable choice.
    if (!fit_flags.order) fit_flags.order = 2;
    const auto bits = digits_to_bits(flags.precision);
    std::vector<Real> nice;
    for (auto v : reference::kFreeExponents) nice.emplace_back(std::string(v), bits);
    const auto nearest = [&](const Real& theta) {
        Real best = abs(theta - nice[0]);
        for (const auto& v : nice) {
            if (abs(theta - v) < best) best = abs(theta - v);
        }
        return best;
    };

    std::vector<seqio::RunReport> reports;
    std::ostringstream table;
    table << pad("weights", 9) << pad("class", 9) << pad("theta", 14) << pad("off", 10) << "| " << pad("theta", 14)
          << pad("off", 10) << "mu (coefficient form)\n";
    bool any = false;
    for (std::int64_t a = 1; a <= 4; ++a) {
        for (std::int64_t b = 1; b <= a; ++b) {
            for (std::int64_t c = 1; c <= b; ++c) {
                if (a + b + c > 6 || std::gcd(std::gcd(a, b), c) != 1) continue;
                const std::vector<std::int64_t> w{a, b, c};
                if (!only.empty() && only != w) continue;
                any = true;
                const auto m = static_cast<std::size_t>(a + b + c);
                const WalkProblem literal{validate(w), EndpointMode::Free};
                const auto seq_l = terms_for(literal, n_max, flags.no_cache, err);
                const auto seq_c = enumerate_free_coefficients(w, n_max);

                asy::FitConfig cfg;
                cfg.correction_order = fit_flags.order;
                cfg.precision = flags.precision;
                const auto fits_l = asy::stratified_exponents(seq_l, m, cfg);
                const auto fits_c = asy::stratified_exponents(seq_c, m, cfg);

                auto base_c = base_report(seq_c, std::nullopt);
                base_c.mode = "free";
                base_c.weights = w;
                for (std::size_t r = 0; r < m; ++r) {
                    const auto& fl = fits_l[r].second;
                    const auto& fc = fits_c[r].second;
                    reports.push_back(fit_report(base_report(seq_l, literal), fl));
                    reports.push_back(fit_report(base_c, fc));
                    table << pad(r == 0 ? format_weight_list(w) : "", 9)
                          << pad(std::to_string(r) + " mod " + std::to_string(m), 9) << pad(fl.theta.to_fixed(6), 14)
                          << pad(nearest(fl.theta).to_fixed(4), 10) << "| " << pad(fc.theta.to_fixed(6), 14)
                          << pad(nearest(fc.theta).to_fixed(4), 10) << asy::format_mu(fc.mu_used, 12) << "\n";
                }
            }
        }
    }
    if (!any) throw Error(ErrorCode::InvalidArgument, "--only " + flags.only + " has a+b+c > 6 or is invalid");
    if (flags.json) {
        out << seqio::to_json(reports);
        return kOk;
    }
    out << "3D free endpoint, n <= " << n_max << ", joint mu, order " << *fit_flags.order
        << ", strata n mod a+b+c; 'off' = distance to the nearer of -1/2, -1\n";
    out << "left: chain region (M/a)x >= (M/b)y >= (M/c)z >= 0; right: coefficient form a x >= b y >= c z >= 0\n";
    out << table.str();
    return kOk;
}

int cmd_reproduce(const ReproduceFlags& flags, std::ostream& out, std::ostream& err) {
    if (flags.target == "2d-table") return reproduce_2d(flags, out, err);
    if (flags.target == "3d-table") return reproduce_3d(flags, out, err);
    if (flags.target == "k13") return reproduce_k13(flags, out, err);
    return reproduce_free_3d(flags, out, err);
}

void add_source_flags(CLI::App* cmd, SourceFlags& flags, bool with_seq = true) {
    if (with_seq) cmd->add_option("--seq", flags.seq_file, "read terms from a b-file")->check(CLI::ExistingFile);
    cmd->add_option("--weights", flags.weights, "comma-separated weights, non-increasing, gcd 1");
    cmd->add_option("--mode", flags.mode, "endpoint mode")->check(CLI::IsMember({"fixed", "free"}));
    cmd->add_option("--terms", flags.terms, "largest index n to enumerate");
    cmd->add_flag("--no-cache", flags.no_cache, "bypass the term cache");
}

void add_fit_flags(CLI::App* cmd, FitFlags& flags) {
    cmd->add_option("--order", flags.order, "number of 1/n^i correction terms");
    cmd->add_option("--window", flags.window, "largest index used by the fit");
    cmd->add_option("--precision", flags.precision, "working precision in decimal digits")
        ->check(CLI::Range(std::size_t{20}, std::size_t{100000}));
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact enumeration and asymptotics of weighted ballot walks", "ballot"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(seqio::kToolVersion));

    SourceFlags enum_flags;
    std::string out_file;
    auto* enumerate_cmd = app.add_subcommand("enumerate", "write x(0..N) as a b-file");
    add_source_flags(enumerate_cmd, enum_flags, false);
    enumerate_cmd->get_option("--weights")->required();
    enumerate_cmd->get_option("--terms")->required();
    enumerate_cmd->add_option("--out", out_file, "write to FILE instead of standard output");

    std::string cf_which;
    std::string cf_args;
    auto* closed_cmd = app.add_subcommand("closed-form", "evaluate a closed formula exactly");
    closed_cmd
        ->add_option("function", cf_which, "catalan | super-catalan | walk-count | multinomial | discriminant | mu")
        ->required()
        ->check(CLI::IsMember({"catalan", "super-catalan", "walk-count", "multinomial", "discriminant", "mu"}));
    closed_cmd->add_option("--args", cf_args, "comma-separated integer arguments")->required();

    SourceFlags est_source;
    FitFlags est_fit;
    std::string mu_spec = "auto";
    std::optional<std::size_t> stratify;
    bool est_json = false;
    auto* estimate_cmd = app.add_subcommand("estimate", "fit log x(n) = log C + n log mu + theta log n + sum d_i/n^i");
    add_source_flags(estimate_cmd, est_source);
    add_fit_flags(estimate_cmd, est_fit);
    estimate_cmd->add_option("--mu", mu_spec, "auto | joint | from-weights | p/q");
    estimate_cmd->add_option("--stratify", stratify, "fit each residue class n mod m separately");
    estimate_cmd->add_flag("--json", est_json, "emit run reports");

    SourceFlags guess_source;
    std::size_t max_order = 4;
    std::size_t max_degree = 4;
    bool guess_json = false;
    auto* guess_cmd = app.add_subcommand("guess-recurrence", "search for a polynomial-coefficient recurrence");
    add_source_flags(guess_cmd, guess_source);
    guess_cmd->add_option("--max-order", max_order, "largest order L")->check(CLI::PositiveNumber);
    guess_cmd->add_option("--max-degree", max_degree, "largest coefficient degree D");
    guess_cmd->add_flag("--json", guess_json, "emit a run report");

    ReproduceFlags rep;
    auto* reproduce_cmd = app.add_subcommand("reproduce", "recompute a reference table");
    reproduce_cmd->add_option("target", rep.target, "2d-table | 3d-table | k13 | free-3d")
        ->required()
        ->check(CLI::IsMember({"2d-table", "3d-table", "k13", "free-3d"}));
    reproduce_cmd->add_option("--terms", rep.terms, "largest index n");
    reproduce_cmd->add_option("--order", rep.order, "number of 1/n^i correction terms");
    reproduce_cmd->add_option("--precision", rep.precision, "working precision in decimal digits")
        ->check(CLI::Range(std::size_t{20}, std::size_t{100000}));
    reproduce_cmd->add_option("--only", rep.only, "restrict a 3D table to one weight triple");
    reproduce_cmd->add_flag("--json", rep.json, "emit run reports");
    reproduce_cmd->add_flag("--no-cache", rep.no_cache, "bypass the term cache");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return kOk;
        }
        err << "error: UsageError\n" << e.what() << "\n";
        return kUsage;
    }

    try {
        if (*enumerate_cmd) return cmd_enumerate(enum_flags, out_file, out, err);
        if (*closed_cmd) return cmd_closed_form(cf_which, cf_args, out);
        if (*estimate_cmd) return cmd_estimate(est_source, est_fit, mu_spec, stratify, est_json, out, err);
        if (*guess_cmd) return cmd_guess(guess_source, max_order, max_degree, guess_json, out, err);
        return cmd_reproduce(rep, out, err);
    } catch (const Error& e) {
        err << "error: " << to_string(e.code()) << "\n" << e.what() << "\n";
        return exit_code(e.code());
    } catch (const std::bad_alloc&) {
        err << "error: " << to_string(ErrorCode::ResourceLimit) << "\nout of memory\n";
        return kResourceLimit;
    }
}

}  // namespace ballot::cli
