#include "toricdeg/cli.hpp"

#include "toricdeg/error.hpp"
#include "toricdeg/json_io.hpp"
#include "toricdeg/poly_text.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace toricdeg::cli {

namespace {

class UsageError : public Error {
public:
    using Error::Error;
};

void require(bool cond, const std::string& what) {
    if (!cond) throw UsageError(what);
}

std::string scalar_text(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

// Scalars as "key: value" lines, then a "rows" array (if any) as an aligned
// table.
std::string render_table(const Json& j) {
    std::ostringstream os;
    std::size_t width = 0;
    for (const auto& [k, v] : j.items())
        if (k != "rows") width = std::max(width, k.size());
    for (const auto& [k, v] : j.items()) {
        if (k == "rows") continue;
        os << std::left << std::setw(static_cast<int>(width)) << k << "  " << scalar_text(v) << '\n';
    }
    if (j.contains("rows") && !j["rows"].empty()) {
        const Json& rows = j["rows"];
        std::vector<std::string> keys;
        for (const auto& [k, v] : rows.front().items()) keys.push_back(k);
        std::vector<std::size_t> w(keys.size());
        for (std::size_t c = 0; c < keys.size(); ++c) {
            w[c] = keys[c].size();
            for (const auto& r : rows) w[c] = std::max(w[c], scalar_text(r[keys[c]]).size());
        }
        os << '\n';
        for (std::size_t c = 0; c < keys.size(); ++c)
            os << (c ? "  " : "") << std::right << std::setw(static_cast<int>(w[c])) << keys[c];
        os << '\n';
        for (const auto& r : rows) {
            for (std::size_t c = 0; c < keys.size(); ++c)
                os << (c ? "  " : "") << std::right << std::setw(static_cast<int>(w[c])) << scalar_text(r[keys[c]]);
            os << '\n';
        }
    }
    return os.str();
}

std::string render(const Json& j, OutputFormat fmt) {
    if (fmt == OutputFormat::table) return render_table(j);
    return j.dump(2) + "\n";
}

void require_shape(int n, int d) {
    require(n >= 2, "--n must be at least 2");
    require(d >= 2, "--d must be at least 2");
}

Json config_json(const RunConfig& cfg) {
    return Json{{"seed", cfg.seed}, {"samples", cfg.samples}, {"bound", cfg.bound}};
}

int cmd_verify_lemma(int n, int d, const RunConfig& cfg, Json& out) {
    require_shape(n, d);
    Rng rng(cfg.seed);
    const std::size_t want_key = expected_key_rank(n, d);
    const std::size_t want_codim = expected_codim(n, d);
    const bool want_surjective = d <= 2 * n - 1;

    int resamples = 0;
    bool all_match = true;
    Json first;
    for (int s = 0; s < cfg.samples; ++s) {
        std::optional<WPoint> c;
        std::size_t key_rank = 0;
        for (int attempt = 0;; ++attempt) {
            c.emplace(sample_W(n, d, rng, cfg.bound));
            key_rank = rank(key_matrix(*c));
            if (key_rank == want_key) break;
            if (attempt >= kResampleBudget)
                throw GenericityFailure("key matrix rank stayed below min(d-1, 2n-2)");
            ++resamples;
        }
        const RankReport r = differential_rank(*c);
        const bool match = r.codim == want_codim && r.surjective == want_surjective;
        all_match = all_match && match;
        if (s == 0)
            first = Json{{"key_matrix_rank", key_rank},
                         {"expected_min", want_key},
                         {"differential_rank", r.rank},
                         {"ambient", r.ambient},
                         {"codim", r.codim},
                         {"expected_codim", want_codim},
                         {"surjective", r.surjective}};
    }
    out = Json{{"command", "verify-lemma"}, {"n", n}, {"d", d}};
    out.update(config_json(cfg));
    out.update(first);
    out["expected_surjective"] = want_surjective;
    out["samples_checked"] = cfg.samples;
    out["resamples"] = resamples;
    out["all_match"] = all_match;
    return all_match ? exit_code::ok : exit_code::mismatch;
}

int cmd_witness(int n, int d, const RunConfig& cfg, Json& out) {
    require_shape(n, d);
    Rng rng(cfg.seed);
    const WitnessBundle b = existence_witness(n, d, rng, cfg.bound);
    out = Json{{"command", "witness"}};
    out.update(config_json(cfg));
    out.update(to_json(b));
    out["expected_surjective"] = d <= 2 * n - 1;
    const bool ok = b.verdict.is_prime() && b.initial.size() == 2 && b.dominance.surjective == (d <= 2 * n - 1);
    return ok ? exit_code::ok : exit_code::mismatch;
}

int cmd_sweep(int n_max, int d_max, const std::string& mode, const RunConfig& cfg, Json& out) {
    require(n_max >= 2, "--n-max must be at least 2");
    require(d_max >= 2, "--d-max must be at least 2");
    require(cfg.samples >= 1, "--samples must be positive");
    Rng rng(cfg.seed);
    const auto rows = threshold_sweep(n_max, d_max, cfg.samples, rng, cfg.bound,
                                      mode == "exact" ? RankMode::exact : RankMode::probabilistic);
    Json arr = Json::array();
    bool all = true;
    for (const auto& r : rows) {
        arr.push_back(to_json(r));
        all = all && r.matches();
    }
    out = Json{{"command", "sweep"}, {"n_max", n_max}, {"d_max", d_max}};
    out.update(config_json(cfg));
    out["rank_mode"] = mode;
    out["row_count"] = rows.size();
    out["all_match"] = all;
    out["rows"] = std::move(arr);
    return all ? exit_code::ok : exit_code::mismatch;
}

std::vector<Exponent::value_type> checked_exponent(const std::vector<int>& raw, const char* flag) {
    std::vector<Exponent::value_type> e;
    for (int x : raw) {
        require(x >= 0, std::string(flag) + " entries must be non-negative");
        e.push_back(static_cast<Exponent::value_type>(x));
    }
    return e;
}

int cmd_classify(const std::string& poly, const std::vector<int>& u, const std::vector<int>& v, int n, int d,
                 Json& out) {
    out = Json{{"command", "classify"}};
    if (!poly.empty()) {
        require(u.empty() && v.empty(), "give either --poly or --u/--v, not both");
        const HomogPoly f = (n >= 0 && d >= 0) ? parse_poly(poly, n, d) : parse_poly(poly);
        out["input"] = format_poly(f);
        out.update(to_json(classify(f)));
        return exit_code::ok;
    }
    require(!u.empty() && !v.empty(), "classify needs --poly or both --u and --v");
    require(u.size() == v.size(), "--u and --v must have the same length");
    const BinomialPattern g(Exponent(checked_exponent(u, "--u")), Exponent(checked_exponent(v, "--v")));
    out["input"] = format_poly(g.to_poly());
    out.update(to_json(classify(g)));
    return exit_code::ok;
}

int cmd_stratum(const std::string& ftext, const std::string& gtext, int n, int d, Json& out) {
    require(!ftext.empty() && !gtext.empty(), "stratum needs --f and --g");
    const HomogPoly f = (n >= 0 && d >= 0) ? parse_poly(ftext, n, d) : parse_poly(ftext);
    const HomogPoly gpoly = parse_poly(gtext, f.n(), f.d());
    const BinomialPattern g = BinomialPattern::from_poly(gpoly);
    const LinearSystem sys = stratum_system(f, g);
    const FeasibilityResult res = solve(sys);
    out = Json{{"command", "stratum"}, {"f", format_poly(f)}, {"g", format_poly(gpoly)}};
    out["system"] = to_json(sys);
    out.update(to_json(res));
    if (res.feasible()) {
        const bool match = initial_form(f, res.witness()) == gpoly;
        out["initial_form_matches"] = match;
        if (!match) return exit_code::failure;
    }
    return exit_code::ok;
}

int cmd_enumerate(int n, int d, Json& out) {
    require(n >= 1, "--n must be at least 1");
    require(d >= 1, "--d must be at least 1");
    const auto patterns = enumerate_patterns(n, d);
    Json arr = Json::array();
    for (const auto& g : patterns)
        arr.push_back(Json{{"u", to_json(g.u)}, {"v", to_json(g.v)}, {"binomial", format_poly(g.to_poly())}});
    out = Json{{"command", "enumerate-binomials"}, {"n", n}, {"d", d}, {"count", patterns.size()}};
    out["patterns"] = std::move(arr);
    return exit_code::ok;
}

int cmd_nonexist(int n, int d, const RunConfig& cfg, Json& out) {
    require_shape(n, d);
    require(d > 2 * n - 1, "nonexist needs d > 2n-1");
    require(cfg.samples >= 1, "--samples must be positive");
    Rng rng(cfg.seed);
    const NonexistenceReport r = nonexistence_certificate(n, d, cfg.samples, rng, cfg.bound);
    out = Json{{"command", "nonexist"}};
    out.update(config_json(cfg));
    out.update(to_json(r));
    return r.strata_reduced && r.redundancy_ok ? exit_code::ok : exit_code::mismatch;
}

} // namespace

Result run(const std::vector<std::string>& args) {
    CLI::App app{"Toric Groebner degenerations of hypersurfaces: initial forms, prime binomials, rank certificates",
                 "toricdeg"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string format = "json";
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--seed", cfg.seed, "Seed of the single random source")->capture_default_str();
        sub->add_option("--samples", cfg.samples, "Points of W sampled per check")->capture_default_str();
        sub->add_option("--bound", cfg.bound, "Sampled coefficients lie in [-bound, bound]")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
        sub->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"json", "table"}))
            ->capture_default_str();
    };

    int n = -1, d = -1, n_max = 0, d_max = 0;
    std::string poly, ftext, gtext, mode = "modular";
    std::vector<int> u, v;

    auto* lemma = app.add_subcommand("verify-lemma", "Key-matrix rank and differential rank at sampled c in W");
    lemma->add_option("--n", n)->required();
    lemma->add_option("--d", d)->required();
    add_common(lemma);

    auto* witness = app.add_subcommand("witness", "Existence witness: weight, initial binomial, dominance rank");
    witness->add_option("--n", n)->required();
    witness->add_option("--d", d)->required();
    add_common(witness);

    auto* sweep = app.add_subcommand("sweep", "Degenerability over 2 <= n <= n-max, 2 <= d <= d-max");
    sweep->add_option("--n-max", n_max)->required();
    sweep->add_option("--d-max", d_max)->required();
    sweep->add_option("--rank-mode", mode, "Differential rank method")
        ->check(CLI::IsMember({"modular", "exact"}))
        ->capture_default_str();
    add_common(sweep);

    auto* cls = app.add_subcommand("classify", "Prime-binomial classification");
    cls->add_option("--poly", poly, "Two-term polynomial text");
    cls->add_option("--u", u, "First exponent, comma separated")->delimiter(',');
    cls->add_option("--v", v, "Second exponent, comma separated")->delimiter(',');
    cls->add_option("--n", n);
    cls->add_option("--d", d);
    add_common(cls);

    auto* strat = app.add_subcommand("stratum", "Feasibility of In_w(f) = g");
    strat->add_option("--f", ftext, "Form f")->required();
    strat->add_option("--g", gtext, "Binomial g (two terms of f, same coefficients)")->required();
    strat->add_option("--n", n);
    strat->add_option("--d", d);
    add_common(strat);

    auto* en = app.add_subcommand("enumerate-binomials", "All prime binomial support patterns");
    en->add_option("--n", n)->required();
    en->add_option("--d", d)->required();
    add_common(en);

    auto* nonex = app.add_subcommand("nonexist", "Non-existence certificate for d > 2n-1");
    nonex->add_option("--n", n)->required();
    nonex->add_option("--d", d)->required();
    add_common(nonex);

    Result res;
    std::ostringstream out, err;
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        res.exit_code = code == 0 ? exit_code::ok : exit_code::usage;
        res.out = out.str();
        res.err = err.str();
        return res;
    }
    cfg.output = format == "table" ? OutputFormat::table : OutputFormat::json;

    Json j;
    try {
        if (*lemma)
            res.exit_code = cmd_verify_lemma(n, d, cfg, j);
        else if (*witness)
            res.exit_code = cmd_witness(n, d, cfg, j);
        else if (*sweep)
            res.exit_code = cmd_sweep(n_max, d_max, mode, cfg, j);
        else if (*cls)
            res.exit_code = cmd_classify(poly, u, v, n, d, j);
        else if (*strat)
            res.exit_code = cmd_stratum(ftext, gtext, n, d, j);
        else if (*en)
            res.exit_code = cmd_enumerate(n, d, j);
        else if (*nonex)
            res.exit_code = cmd_nonexist(n, d, cfg, j);
    } catch (const GenericityFailure& e) {
        res.exit_code = exit_code::failure;
        res.err = std::string("genericity failure: ") + e.what() + "\n";
        return res;
    } catch (const CertificateFailure& e) {
        res.exit_code = exit_code::failure;
        res.err = std::string("certificate failure: ") + e.what() + "\n";
        return res;
    } catch (const NormalizationFailure& e) {
        res.exit_code = exit_code::failure;
        res.err = std::string("normalization failure: ") + e.what() + "\n";
        return res;
    } catch (const Error& e) {
        // Everything else traces back to the arguments: bad shapes, malformed
        // polynomials, a binomial that is not part of f.
        res.exit_code = exit_code::usage;
        res.err = std::string("error: ") + e.what() + "\n";
        return res;
    }
    res.out = render(j, cfg.output);
    return res;
}

} // namespace toricdeg::cli
