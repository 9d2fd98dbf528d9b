#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <regex>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "kroncalc/bounds.hpp"
#include "kroncalc/certify.hpp"
#include "kroncalc/chartab.hpp"
#include "kroncalc/identities.hpp"
#include "kroncalc/kronecker.hpp"
#include "kroncalc/symfunc.hpp"

using nlohmann::json;
namespace fs = std::filesystem;
using namespace kroncalc;

namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitGuard = 3;
constexpr int kExitInternal = 4;

struct Globals {
    std::string format = "text";
    std::string cache_dir;
    unsigned threads = 0;
    std::optional<int> max_n;
};

/// What a leaf command hands back: the JSON result and whether a check failed.
struct Outcome {
    json result;
    bool failed = false;
};

struct Context {
    CharacterStore& chars;
    KroneckerEngine& eng;
    const Globals& globals;
    IdentityLimits identity_limits;
    fs::path cache_dir;
};

using Handler = std::function<Outcome(Context&)>;

Partition part(const std::string& s) { return Partition::parse(s); }

std::vector<int> composition(const std::string& text) {
    std::vector<int> out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        require(!tok.empty() && tok.find_first_not_of("0123456789 ") == std::string::npos,
                "malformed content '" + text + "': expected comma-separated non-negative integers");
        out.push_back(std::stoi(tok));
    }
    return out;
}

json triple_json(const Triple& t) { return {t.a.str(), t.b.str(), t.c.str()}; }

void print_text(const json& j, std::ostream& out, const std::string& indent = "") {
    auto scalar = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            if (v.is_structured() && !v.empty()) {
                bool flat = v.is_array() && std::all_of(v.begin(), v.end(), [](const json& e) { return !e.is_structured(); });
                if (flat) {
                    std::string line;
                    for (const auto& e : v) line += (line.empty() ? "" : " | ") + scalar(e);
                    out << indent << k << ": " << line << '\n';
                } else {
                    out << indent << k << ":\n";
                    print_text(v, out, indent + "  ");
                }
            } else {
                out << indent << k << ": " << (v.is_null() ? "-" : scalar(v)) << '\n';
            }
        }
    } else if (j.is_array()) {
        for (const auto& e : j) {
            if (e.is_array() && std::none_of(e.begin(), e.end(), [](const json& x) { return x.is_structured(); })) {
                std::string line;
                for (const auto& x : e) line += (line.empty() ? "" : " ") + scalar(x);
                out << indent << line << '\n';
            } else if (e.is_structured()) {
                print_text(e, out, indent);
                out << indent << "--\n";
            } else {
                out << indent << scalar(e) << '\n';
            }
        }
    } else {
        out << indent << scalar(j) << '\n';
    }
}

Outcome certificate_outcome(Context& ctx, const LowerBoundCertificate& c, bool confirm, const std::string& output) {
    json r;
    r["certificate"] = to_json(c);
    auto problems = c.validate();
    r["valid"] = problems.empty();
    r["problems"] = problems;
    bool failed = !problems.empty();
    if (confirm) {
        Confirmation conf = c.confirm(ctx.eng, ctx.chars.limits().confirm_max_n);
        r["confirmation"] = to_json(conf);
        if (conf.attempted && !conf.holds) failed = true;
    }
    if (!output.empty()) {
        std::ofstream out(output);
        require(static_cast<bool>(out), "cannot write certificate to '" + output + "'");
        out << to_json(c).dump(2) << '\n';
    }
    return {r, failed};
}

std::vector<fs::path> cache_files(const fs::path& dir) {
    std::vector<fs::path> files;
    std::error_code ec;
    if (!fs::is_directory(dir, ec)) return files;
    static const std::regex pattern(R"(chartab_\d+\.json)");
    for (const auto& e : fs::directory_iterator(dir, ec))
        if (e.is_regular_file() && std::regex_match(e.path().filename().string(), pattern)) files.push_back(e.path());
    std::sort(files.begin(), files.end());
    return files;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Kronecker, Kostka and Littlewood-Richardson coefficients"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--cache-dir", g.cache_dir, "Character table cache (default ./.kroncache, or $KRONCALC_CACHE_DIR)");
    app.add_option("--threads", g.threads, "Worker threads, 0 = all cores");
    app.add_option("--max-n", g.max_n, "Raise every feasibility guard to this size");

    std::map<CLI::App*, Handler> handlers;
    std::map<CLI::App*, std::string> names;
    auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& desc, const std::string& full) {
        CLI::App* s = parent->add_subcommand(name, desc);
        s->fallthrough();
        names[s] = full;
        return s;
    };
    auto group = [&](const std::string& name, const std::string& desc) {
        CLI::App* s = app.add_subcommand(name, desc);
        s->require_subcommand(1);
        s->fallthrough();
        return s;
    };

    // kron
    std::string o_lambda, o_mu, o_nu, o_alpha, o_beta, o_gamma, o_rho, o_content, o_inner;
    CLI::App* kron = group("kron", "Kronecker coefficients");
    {
        auto* c = leaf(kron, "compute", "g(lambda, mu, nu)", "kron compute");
        c->add_option("--lambda", o_lambda)->required();
        c->add_option("--mu", o_mu)->required();
        c->add_option("--nu", o_nu)->required();
        handlers[c] = [&](Context& ctx) { return Outcome{ctx.eng.kron(part(o_lambda), part(o_mu), part(o_nu)).str()}; };

        auto* t = leaf(kron, "table", "all nonzero g(lambda, mu, nu) for fixed mu, nu", "kron table");
        t->add_option("--mu", o_mu)->required();
        t->add_option("--nu", o_nu)->required();
        handlers[t] = [&](Context& ctx) {
            Partition mu = part(o_mu), nu = part(o_nu);
            if (ctx.chars.cache_dir()) ctx.chars.table(mu.size());
            KroneckerExpansion e = ctx.eng.expansion(mu, nu);
            json terms = json::array();
            for (const auto& [lam, v] : e.coefficients) terms.push_back({{"lambda", lam.str()}, {"value", v.str()}});
            return Outcome{json{{"mu", mu.str()}, {"nu", nu.str()}, {"terms", terms}}};
        };
    }

    // kostka, lr, char, dim
    {
        auto* k = leaf(&app, "kostka", "Kostka number K_{lambda/inner, content}", "kostka");
        k->add_option("--lambda", o_lambda)->required();
        k->add_option("--content", o_content, "Composition, e.g. 2,0,1")->required();
        k->add_option("--inner", o_inner, "Inner shape for a skew Kostka number");
        handlers[k] = [&](Context&) {
            return Outcome{skew_kostka(SkewShape(part(o_lambda), part(o_inner)), composition(o_content)).str()};
        };

        static bool list_tableaux = false;
        auto* l = leaf(&app, "lr", "Littlewood-Richardson coefficient c^lambda_{mu nu}", "lr");
        l->add_option("--lambda", o_lambda)->required();
        l->add_option("--mu", o_mu)->required();
        l->add_option("--nu", o_nu)->required();
        l->add_flag("--tableaux", list_tableaux, "Also list the tableaux");
        handlers[l] = [&](Context&) {
            Partition lam = part(o_lambda), mu = part(o_mu), nu = part(o_nu);
            BigInt v = lr(lam, mu, nu);
            if (!list_tableaux) return Outcome{v.str()};
            json tabs = json::array();
            for (const auto& t : lr_tableaux(lam, mu, nu)) tabs.push_back(t);
            return Outcome{json{{"value", v.str()}, {"tableaux", tabs}}};
        };

        static std::optional<int> table_n;
        auto* ch = leaf(&app, "char", "Character value chi^lambda(rho), or a full table with --n", "char");
        ch->add_option("--lambda", o_lambda);
        ch->add_option("--rho", o_rho);
        ch->add_option("--n", table_n, "Print the whole table of S_n");
        handlers[ch] = [&](Context& ctx) {
            if (table_n) return Outcome{ctx.chars.table(*table_n)->to_json()};
            require(!o_lambda.empty() || !o_rho.empty(), "char: give --lambda and --rho, or --n");
            return Outcome{ctx.chars.character(part(o_lambda), part(o_rho)).str()};
        };

        auto* d = leaf(&app, "dim", "Dimension f^lambda", "dim");
        d->add_option("--lambda", o_lambda)->required();
        handlers[d] = [&](Context& ctx) { return Outcome{ctx.chars.dimension(part(o_lambda)).str()}; };
    }

    // bounds
    static bool exact = false;
    static std::string sweep_name;
    CLI::App* bounds = group("bounds", "Upper bounds and their exhaustive checks");
    {
        auto* c = leaf(bounds, "check", "Every bound instantiated for one triple", "bounds check");
        c->add_option("--lambda", o_lambda)->required();
        c->add_option("--mu", o_mu)->required();
        c->add_option("--nu", o_nu)->required();
        c->add_flag("--exact", exact, "Compute g and give verdicts");
        handlers[c] = [&](Context& ctx) {
            BoundReport rep = check_triple(ctx.eng, part(o_lambda), part(o_mu), part(o_nu), exact);
            bool failed = std::any_of(rep.entries.begin(), rep.entries.end(),
                                      [](const BoundEntry& e) { return e.verdict == Verdict::Fail; });
            return Outcome{to_json(rep), failed};
        };

        auto* s = leaf(bounds, "sweep", "Exhaustive dominance sweeps at their default ranges", "bounds sweep");
        s->add_option("--name", sweep_name, "Run only this sweep");
        handlers[s] = [&](Context& ctx) {
            json arr = json::array();
            bool failed = false;
            std::vector<SweepResult> results;
            if (sweep_name.empty()) {
                results = run_all_sweeps(ctx.eng);
                results.push_back(sweep_two_durfee(ctx.eng, 9, 2, TwoDurfeeExponent::Stated));
            } else {
                static const std::map<std::string, std::function<SweepResult(KroneckerEngine&)>> table{
                    {"rows_product", [](KroneckerEngine& e) { return sweep_rows_product(e); }},
                    {"rows_power", [](KroneckerEngine& e) { return sweep_rows_power(e); }},
                    {"durfee_main", [](KroneckerEngine& e) { return sweep_durfee_main(e); }},
                    {"dimension", [](KroneckerEngine& e) { return sweep_dimension(e); }},
                    {"kostka", [](KroneckerEngine&) { return sweep_kostka(); }},
                    {"lr_rows", [](KroneckerEngine&) { return sweep_lr_rows(); }},
                    {"lr_durfee", [](KroneckerEngine&) { return sweep_lr_durfee(); }},
                    {"transpose_binary", [](KroneckerEngine& e) { return sweep_transpose(e); }},
                    {"one_durfee", [](KroneckerEngine& e) { return sweep_one_durfee(e); }},
                    {"two_durfee", [](KroneckerEngine& e) { return sweep_two_durfee(e); }},
                    {"two_durfee_stated",
                     [](KroneckerEngine& e) { return sweep_two_durfee(e, 9, 2, TwoDurfeeExponent::Stated); }},
                    {"rows_helper", [](KroneckerEngine&) { return sweep_rows_helper(); }},
                };
                auto it = table.find(sweep_name);
                require(it != table.end(), "unknown sweep '" + sweep_name + "'");
                results.push_back(it->second(ctx.eng));
            }
            for (const auto& r : results) {
                arr.push_back(to_json(r));
                failed = failed || !r.passed();
            }
            return Outcome{arr, failed};
        };
    }

    // scan
    static std::string stat_name;
    static int scan_n = 0;
    static std::optional<int> scan_k;
    {
        auto* s = leaf(&app, "scan", "Maximal Kronecker coefficient statistics", "scan");
        s->add_option("--stat", stat_name)->required()->check(CLI::IsMember({"K", "Ks", "Kfs", "A", "As", "B", "Bfs"}));
        s->add_option("--n", scan_n)->required();
        s->add_option("--k", scan_k);
        handlers[s] = [&](Context& ctx) {
            MaxStatistic m = ctx.eng.scan_max(parse_statistic(stat_name), scan_n, scan_k, ctx.globals.threads);
            json r{{"statistic", to_string(m.name)}, {"n", m.n}, {"value", m.value.str()}};
            r["k"] = m.k ? json(*m.k) : json(nullptr);
            r["witness"] = m.witness ? triple_json(*m.witness) : json(nullptr);
            return Outcome{r};
        };
    }

    // verify
    static std::string identity;
    static std::optional<int> v_n, v_k, v_a, v_m;
    static int v_random = 0, v_max_size = 6;
    static uint64_t v_seed = 1;
    static bool v_exhaustive = false;
    {
        auto* v = leaf(&app, "verify", "Check an identity or property exhaustively", "verify");
        v->add_option("--identity", identity)
            ->required()
            ->check(CLI::IsMember({"littlewood", "cauchy", "h-cauchy", "monotonicity", "saxl"}));
        v->add_option("--lambda", o_lambda);
        v->add_option("--mu", o_mu);
        v->add_option("--nu", o_nu);
        v->add_option("--alpha", o_alpha);
        v->add_option("--beta", o_beta);
        v->add_option("--gamma", o_gamma);
        v->add_option("--n", v_n);
        v->add_option("--k", v_k);
        v->add_option("--a", v_a);
        v->add_option("--m", v_m, "Littlewood split size; all splits when omitted");
        v->add_option("--random", v_random, "Number of random monotonicity instances");
        v->add_option("--seed", v_seed);
        v->add_option("--max-size", v_max_size);
        v->add_flag("--exhaustive", v_exhaustive, "Unit increments over every triple up to --max-size");
        handlers[v] = [&](Context& ctx) -> Outcome {
            const unsigned threads = ctx.globals.threads;
            if (identity == "littlewood") {
                std::vector<Partition> lambdas;
                if (!o_lambda.empty()) lambdas.push_back(part(o_lambda));
                else {
                    require(v_n.has_value(), "littlewood: give --lambda or --n");
                    lambdas = enumerate(*v_n);
                }
                json runs = json::array();
                bool ok = true;
                for (const auto& lam : lambdas) {
                    std::vector<IdentityResult> rs;
                    if (v_m) rs.push_back(verify_littlewood(ctx.eng, lam, *v_m, threads, ctx.identity_limits));
                    else rs = verify_littlewood_all_splits(ctx.eng, lam, threads, ctx.identity_limits);
                    for (const auto& r : rs) {
                        runs.push_back(to_json(r));
                        ok = ok && r.equal;
                    }
                }
                return {json{{"identity", "littlewood"}, {"runs", runs}, {"equal", ok}}, !ok};
            }
            if (identity == "cauchy") {
                require(v_n && v_k, "cauchy: give --n and --k");
                IdentityResult r = verify_cauchy(ctx.eng, *v_n, *v_k, ctx.identity_limits);
                return {to_json(r), !r.equal};
            }
            if (identity == "h-cauchy") {
                require(v_k && v_a, "h-cauchy: give --k and --a");
                IdentityResult r = verify_h_identity(ctx.eng, {*v_k, *v_a}, ctx.identity_limits);
                return {to_json(r), !r.equal};
            }
            if (identity == "monotonicity") {
                if (!o_alpha.empty()) {
                    Triple base{part(o_lambda), part(o_mu), part(o_nu)};
                    Triple inc{part(o_alpha), part(o_beta), part(o_gamma)};
                    MonotoneCheck m = monotone_check(ctx.eng, base, inc);
                    return {to_json(m), m.applicable && !m.holds};
                }
                PropertySummary s = v_exhaustive ? verify_monotonicity_unit(ctx.eng, v_max_size)
                                                 : verify_monotonicity_random(ctx.eng, v_random ? v_random : 200,
                                                                              v_max_size, v_seed);
                return {to_json(s), !s.passed()};
            }
            // saxl
            PropertySummary s = verify_self_conjugate_positivity(ctx.eng, v_n.value_or(12), threads);
            return {to_json(s), !s.passed()};
        };
    }

    // construct
    static std::string shape_kind;
    static int shape_k = 0;
    static std::optional<int> shape_t;
    {
        auto* c = leaf(&app, "construct", "Special shapes", "construct");
        c->add_option("--shape", shape_kind)->required();
        c->add_option("--k", shape_k)->required();
        c->add_option("--t", shape_t, "Corner size for chopped_square");
        handlers[c] = [&](Context&) { return Outcome{shape(parse_shape_kind(shape_kind), shape_k, shape_t).str()}; };
    }

    // certify
    static bool confirm = false;
    static std::string cert_out, cert_file, caret_from = "staircase";
    static int cert_k = 0, cert_r = 0, d_max = 0;
    CLI::App* certify = group("certify", "Lower-bound certificates");
    {
        auto add_common = [&](CLI::App* s) {
            s->add_flag("--confirm", confirm, "Check the inequality with the character oracle when in range");
            s->add_option("--output", cert_out, "Also write the certificate to this file");
        };
        auto* e = leaf(certify, "embed", "Self-conjugate embedding into a k-square", "certify embed");
        e->add_option("--alpha", o_alpha)->required();
        e->add_option("--beta", o_beta);
        e->add_option("--gamma", o_gamma);
        e->add_option("--k", cert_k)->required();
        add_common(e);
        handlers[e] = [&](Context& ctx) {
            Partition a = part(o_alpha);
            Partition b = o_beta.empty() ? a : part(o_beta);
            Partition c = o_gamma.empty() ? a : part(o_gamma);
            return certificate_outcome(ctx, fullsym_embed(ctx.eng, a, b, c, cert_k), confirm, cert_out);
        };

        auto* s = leaf(certify, "symmetrize", "g((a+b+c)^3) >= g(a, b, c)", "certify symmetrize");
        s->add_option("--alpha", o_alpha)->required();
        s->add_option("--beta", o_beta)->required();
        s->add_option("--gamma", o_gamma)->required();
        add_common(s);
        handlers[s] = [&](Context& ctx) {
            return certificate_outcome(ctx, symmetrize(ctx.eng, part(o_alpha), part(o_beta), part(o_gamma)), confirm,
                                       cert_out);
        };

        auto* q = leaf(certify, "square-chain", "Iterated conjugation chain to the square (k^k)^3", "certify square-chain");
        q->add_option("--r", cert_r)->required();
        add_common(q);
        handlers[q] = [&](Context& ctx) { return certificate_outcome(ctx, square_chain(cert_r), confirm, cert_out); };

        auto* c = leaf(certify, "caret", "Caret shape certificate", "certify caret");
        c->add_option("--k", cert_k)->required();
        c->add_option("--from", caret_from, "staircase or square")->check(CLI::IsMember({"staircase", "square"}));
        add_common(c);
        handlers[c] = [&](Context& ctx) {
            auto cert = caret_from == "square" ? caret_certificate_from_square(ctx.eng, cert_k)
                                               : caret_certificate(ctx.eng, cert_k);
            return certificate_outcome(ctx, cert, confirm, cert_out);
        };

        auto* r = leaf(certify, "replay", "Validate a saved certificate", "certify replay");
        r->add_option("--file", cert_file)->required();
        r->add_flag("--confirm", confirm, "Check the inequality with the character oracle when in range");
        handlers[r] = [&](Context& ctx) {
            std::ifstream in(cert_file);
            require(static_cast<bool>(in), "cannot read certificate '" + cert_file + "'");
            json doc;
            try {
                doc = json::parse(in);
            } catch (const json::exception& ex) {
                throw InvalidInput("certificate '" + cert_file + "' is not valid JSON: " + ex.what());
            }
            return certificate_outcome(ctx, certificate_from_json(doc), confirm, "");
        };

        auto* st = leaf(certify, "stability", "a_d = g(lambda+d alpha, mu+d beta, nu+d gamma)", "certify stability");
        st->add_option("--lambda", o_lambda)->required();
        st->add_option("--mu", o_mu)->required();
        st->add_option("--nu", o_nu)->required();
        st->add_option("--alpha", o_alpha)->required();
        st->add_option("--beta", o_beta)->required();
        st->add_option("--gamma", o_gamma)->required();
        st->add_option("--d-max", d_max)->required();
        handlers[st] = [&](Context& ctx) {
            StabilitySequence s = stability_sequence(ctx.eng, {part(o_lambda), part(o_mu), part(o_nu)},
                                                     {part(o_alpha), part(o_beta), part(o_gamma)}, d_max);
            bool failed = !s.non_decreasing || (s.linear_lower_bound && !*s.linear_lower_bound);
            return Outcome{to_json(s), failed};
        };
    }

    // cache
    CLI::App* cache = group("cache", "Character table cache");
    {
        auto* i = leaf(cache, "info", "List cached tables", "cache info");
        handlers[i] = [&](Context& ctx) {
            json files = json::array();
            for (const auto& p : cache_files(ctx.cache_dir)) {
                std::error_code ec;
                files.push_back({{"file", p.filename().string()}, {"bytes", fs::file_size(p, ec)}});
            }
            return Outcome{json{{"dir", ctx.cache_dir.string()}, {"tables", files}}};
        };
        auto* c = leaf(cache, "clear", "Delete cached tables", "cache clear");
        handlers[c] = [&](Context& ctx) {
            int removed = 0;
            for (const auto& p : cache_files(ctx.cache_dir)) {
                std::error_code ec;
                if (fs::remove(p, ec)) ++removed;
            }
            return Outcome{json{{"dir", ctx.cache_dir.string()}, {"removed", removed}}};
        };
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    }

    CLI::App* selected = nullptr;
    for (CLI::App* cur = &app; cur;) {
        auto subs = cur->get_subcommands();
        if (subs.empty()) break;
        cur = subs.front();
        if (handlers.count(cur)) selected = cur;
    }
    if (!selected) {
        std::cerr << "error: no command selected\n";
        return kExitInvalid;
    }

    fs::path cache_dir = ".kroncache";
    if (const char* env = std::getenv("KRONCALC_CACHE_DIR"); env && *env) cache_dir = env;
    if (!g.cache_dir.empty()) cache_dir = g.cache_dir;

    Limits limits = g.max_n ? Limits::uniform(*g.max_n) : Limits{};
    CharacterStore chars(limits, cache_dir);
    KroneckerEngine eng(chars);
    Context ctx{chars, eng, g, g.max_n ? IdentityLimits::relaxed(*g.max_n) : IdentityLimits{}, cache_dir};

    json params = json::object();
    for (const CLI::Option* opt : selected->get_options()) {
        if (opt->count() == 0 || opt->get_name() == "--help") continue;
        std::string key = opt->get_name();
        key.erase(0, key.find_first_not_of('-'));
        const auto& res = opt->results();
        params[key] = opt->get_type_size() == 0 ? json(true) : json(res.size() == 1 ? res.front() : CLI::detail::join(res));
    }

    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = handlers[selected](ctx);
    } catch (const InvalidInput& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const InfeasibleError& e) {
        std::cerr << "refused: " << e.what() << '\n';
        return kExitGuard;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInternal;
    }
    const auto elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();

    if (g.format == "json") {
        json env{{"command", names[selected]},
                 {"parameters", params},
                 {"result", out.result},
                 {"elapsed_ms", elapsed},
                 {"cache_hits", chars.cache_hits() + eng.cache_hits()}};
        std::cout << env.dump() << '\n';
    } else {
        print_text(out.result, std::cout);
    }
    return out.failed ? kExitVerifyFailed : 0;
}
