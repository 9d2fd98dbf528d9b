// One PASS/FAIL line per acceptance criterion. Usage: acceptance <path-to-kroncalc>

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "kroncalc/bounds.hpp"
#include "kroncalc/certify.hpp"
#include "kroncalc/identities.hpp"
#include "kroncalc/kronecker.hpp"

using namespace kroncalc;
using Clock = std::chrono::steady_clock;

namespace {

// Runtime ceilings, in seconds.
constexpr double kOracleIntegrityLimit = 120.0;
constexpr double kSweepLimit = 600.0;

// Certificates whose target is at most this size are confirmed numerically.
constexpr int kConfirmUpTo = 14;

struct Report {
    bool ok = true;
    std::vector<std::string> notes;

    void fail(const std::string& why) {
        ok = false;
        if (notes.size() < 12) notes.push_back(why);
    }
    void check(bool cond, const std::string& why) {
        if (!cond) fail(why);
    }
};

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

Partition hook(int m) {
    std::vector<int> p{m + 1};
    for (int i = 0; i < m; ++i) p.push_back(1);
    return Partition(p);
}

Report oracle_integrity() {
    Report r;
    auto start = Clock::now();
    CharacterStore cs;
    KroneckerEngine eng(cs);
    long long violations = 0;
    for (int n = 1; n <= 7; ++n) {
        const auto ps = enumerate(n);
        const size_t p = ps.size();
        // g over ordered triples, straight from the class sum
        std::vector<BigInt> g(p * p * p);
        auto at = [&](size_t i, size_t j, size_t l) -> BigInt& { return g[(i * p + j) * p + l]; };
        for (size_t i = 0; i < p; ++i)
            for (size_t j = 0; j < p; ++j)
                for (size_t l = 0; l < p; ++l) at(i, j, l) = eng.class_sum(ps[i], ps[j], ps[l]);
        std::vector<size_t> conj(p);
        for (size_t i = 0; i < p; ++i)
            conj[i] = static_cast<size_t>(std::find(ps.begin(), ps.end(), conjugate(ps[i])) - ps.begin());
        for (size_t i = 0; i < p; ++i)
            for (size_t j = 0; j < p; ++j)
                for (size_t l = 0; l < p; ++l) {
                    const BigInt& v = at(i, j, l);
                    std::string t = "(" + ps[i].str() + "|" + ps[j].str() + "|" + ps[l].str() + ")";
                    auto bad = [&](const std::string& what) {
                        ++violations;
                        r.fail("n=" + std::to_string(n) + " " + t + ": " + what);
                    };
                    if (v < 0) bad("negative");
                    if (v != at(j, i, l) || v != at(i, l, j) || v != at(l, j, i) || v != at(j, l, i) || v != at(l, i, j))
                        bad("not symmetric");
                    if (v != at(conj[i], conj[j], l)) bad("not invariant under conjugating two entries");
                }
        for (size_t j = 0; j < p; ++j)
            for (size_t l = 0; l < p; ++l) {
                BigInt s = 0;
                for (size_t i = 0; i < p; ++i) s += at(i, j, l) * cs.dimension(ps[i]);
                if (s != cs.dimension(ps[j]) * cs.dimension(ps[l])) {
                    ++violations;
                    r.fail("dimension identity fails at " + ps[j].str() + " * " + ps[l].str());
                }
            }
    }
    double t = seconds_since(start);
    r.check(t < kOracleIntegrityLimit, "took " + std::to_string(t) + " s");
    r.notes.insert(r.notes.begin(), std::to_string(violations) + " violations, " + std::to_string(t) + " s");
    return r;
}

Report known_values() {
    Report r;
    CharacterStore cs;
    KroneckerEngine eng(cs);
    for (int m = 0; m <= 4; ++m) {
        Partition h = hook(m);
        r.check(eng.kron(h, h, h) == 1, "g(" + h.str() + ")^3 != 1");
    }
    for (int n = 1; n <= 8; ++n)
        for (const auto& l : enumerate(n))
            for (const auto& v : enumerate(n))
                r.check(eng.class_sum(l, {n}, v) == (l == v ? 1 : 0), "g(" + l.str() + ",(n)," + v.str() + ")");
    return r;
}

Report bound_dominance() {
    Report r;
    auto start = Clock::now();
    CharacterStore cs;
    KroneckerEngine eng(cs);
    long long checked = 0;
    for (const auto& s : run_all_sweeps(eng)) {
        checked += s.checked;
        if (!s.passed()) {
            r.fail(s.name + " [" + s.range + "]: " + std::to_string(s.violations) + " of " + std::to_string(s.checked) +
                   " violate");
            for (const auto& c : s.counterexamples) r.notes.push_back("  " + c);
        }
    }
    double t = seconds_since(start);
    r.check(t < kSweepLimit, "took " + std::to_string(t) + " s");
    r.notes.insert(r.notes.begin(), std::to_string(checked) + " instances, " + std::to_string(t) + " s");
    return r;
}

Report identity_suite() {
    Report r;
    CharacterStore cs;
    KroneckerEngine eng(cs);
    for (int n = 1; n <= 6; ++n)
        for (const auto& l : enumerate(n))
            for (const auto& res : verify_littlewood_all_splits(eng, l))
                r.check(res.equal, "littlewood " + l.str() + " split " + res.parameters.dump());
    for (int n = 1; n <= 3; ++n) r.check(verify_cauchy(eng, n, 2).equal, "cauchy n=" + std::to_string(n));
    const std::vector<std::pair<int, int>> ka{{1, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 1}, {2, 2}, {2, 3}, {3, 1}};
    for (auto [k, a] : ka) {
        IdentityResult res = verify_h_identity(eng, {k, a});
        r.check(res.equal, "h-identity k=" + std::to_string(k) + " a=" + std::to_string(a));
    }
    IdentityResult small = verify_h_identity(eng, {2, 1});
    r.check(small.lhs == 4 && small.rhs == 4, "(k=2,a=1) is " + small.lhs.str() + " vs " + small.rhs.str());
    return r;
}

Report monotonicity() {
    Report r;
    CharacterStore cs;
    KroneckerEngine eng(cs);
    PropertySummary random = verify_monotonicity_random(eng, 200, 6, 20240601);
    r.check(random.checked == 200 && random.passed(), random.property + ": " + std::to_string(random.violations) +
                                                          " violations over " + std::to_string(random.checked));
    PropertySummary unit = verify_monotonicity_unit(eng, 6);
    r.check(unit.passed(), unit.property + ": " + std::to_string(unit.violations) + " violations");
    for (const auto& c : random.counterexamples) r.notes.push_back("  " + c);
    for (const auto& c : unit.counterexamples) r.notes.push_back("  " + c);
    return r;
}

Report positivity() {
    Report r;
    CharacterStore cs;
    KroneckerEngine eng(cs);
    PropertySummary s = verify_self_conjugate_positivity(eng, 12);
    r.check(s.passed() && s.checked > 0, std::to_string(s.violations) + " violations");
    r.notes.insert(r.notes.begin(), std::to_string(s.checked) + " shapes");
    return r;
}

Report certificates() {
    Report r;
    CharacterStore cs;
    KroneckerEngine eng(cs);
    std::vector<LowerBoundCertificate> all;
    long long embeds = 0;
    for (int n = 1; n <= 4; ++n)
        for (int k = 1; k <= 3; ++k)
            for (const auto& a : enumerate(n)) {
                if (a.length() > k) continue;
                auto c = fullsym_embed(eng, a, k);
                ++embeds;
                const Partition& mu = c.target.a;
                r.check(c.target.b == mu && c.target.c == mu && is_self_conjugate(mu) && durfee(mu) <= k,
                        "embed " + a.str() + " k=" + std::to_string(k) + " gives " + c.target.str());
                all.push_back(std::move(c));
            }
    for (int n = 1; n <= 3; ++n) {
        auto ps = enumerate(n);
        for (const auto& a : ps)
            for (const auto& b : ps)
                for (const auto& c : ps) all.push_back(symmetrize(eng, a, b, c));
    }
    for (int k : {2, 3, 5}) {
        all.push_back(caret_certificate(eng, k));
        all.push_back(caret_certificate_from_square(eng, k));
    }
    for (int s = 0; s <= 3; ++s) all.push_back(square_chain(s));
    all.push_back(square_doubling(eng, 1));

    long long confirmed = 0;
    for (const auto& c : all) {
        LowerBoundCertificate back = certificate_from_json(to_json(c));
        auto problems = back.validate();
        r.check(problems.empty(), c.description + ": " + (problems.empty() ? "" : problems.front()));
        r.check(back.replay() == c.target, c.description + ": replay differs from target");
        if (c.target.size() <= kConfirmUpTo) {
            Confirmation conf = back.confirm(eng, kConfirmUpTo);
            ++confirmed;
            r.check(conf.attempted && conf.holds && conf.witnesses_match, c.description + ": not confirmed (" + conf.note + ")");
        }
    }
    r.notes.insert(r.notes.begin(), std::to_string(all.size()) + " certificates, " + std::to_string(confirmed) +
                                        " confirmed, " + std::to_string(embeds) + " embeddings");
    return r;
}

Report constructions() {
    Report r;
    for (int k : {2, 3, 5}) {
        Partition t = caret(k);
        r.check(t == caret_list(k), "caret(" + std::to_string(k) + ") differs from the part list");
        r.check(is_self_conjugate(t), "caret(" + std::to_string(k) + ") not self-conjugate");
        r.check(t.size() == 3 * k * k + 1, "caret(" + std::to_string(k) + ") has size " + std::to_string(t.size()));
    }
    r.check(caret(3) == Partition({8, 6, 4, 4, 2, 2, 1, 1}), "caret(3) is " + caret(3).str());
    LowerBoundCertificate chain = square_chain(1);
    Triple target{square(8), square(8), square(8)};
    r.check(chain.replay() == target && chain.target == target, "square_chain(1) replays to " + chain.replay().str());
    r.check(chain.valid(), "square_chain(1) fails validation");
    return r;
}

std::string run(const std::string& cmd) {
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return "<popen failed>";
    std::array<char, 4096> buf{};
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    int status = pclose(pipe);
    return out + "<exit " + std::to_string(status) + ">";
}

// Wall-clock time and cache statistics are the only run-dependent envelope fields.
std::string strip_run_stats(const std::string& s) {
    static const std::regex stats(R"re("(elapsed_ms|cache_hits)":\d+,?)re");
    return std::regex_replace(s, stats, "");
}

Report determinism(const std::string& cli) {
    Report r;
    if (cli.empty() || !std::filesystem::exists(cli)) {
        r.fail("kroncalc binary not given or missing: '" + cli + "'");
        return r;
    }
    auto cache = std::filesystem::temp_directory_path() / "kroncalc_acceptance_cache";
    std::filesystem::remove_all(cache);
    const std::string prefix = "'" + cli + "' --format json --cache-dir '" + cache.string() + "' ";
    const std::vector<std::string> commands{
        "scan --stat K --n 8",
        "scan --stat A --n 9 --k 2",
        "scan --stat Kfs --n 12",
        "verify --identity littlewood --n 5",
        "verify --identity h-cauchy --k 3 --a 1",
        "verify --identity cauchy --n 3 --k 2",
        "verify --identity monotonicity --random 60 --seed 5 --max-size 6",
        "verify --identity saxl --n 10",
    };
    for (const auto& c : commands) {
        std::string first = run(prefix + c + " 2>&1");
        std::string second = run(prefix + c + " 2>&1");
        std::string single = run(prefix + "--threads 1 " + c + " 2>&1");
        r.check(first.find("\"result\"") != std::string::npos, c + ": no JSON envelope: " + first.substr(0, 200));
        r.check(strip_run_stats(first) == strip_run_stats(second), c + ": repeated runs differ");
        r.check(strip_run_stats(first) == strip_run_stats(single), c + ": --threads 1 differs");
    }
    std::filesystem::remove_all(cache);
    r.notes.insert(r.notes.begin(), std::to_string(commands.size()) + " commands x 3 runs");
    return r;
}

}  // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "";
    const std::vector<std::pair<std::string, std::function<Report()>>> criteria{
        {"oracle integrity (n <= 7)", oracle_integrity},
        {"known values", known_values},
        {"bound dominance sweeps", bound_dominance},
        {"identity suite", identity_suite},
        {"monotonicity", monotonicity},
        {"self-conjugate positivity (n <= 12)", positivity},
        {"certificates", certificates},
        {"constructions", constructions},
        {"determinism", [&] { return determinism(cli); }},
    };
    int failed = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        Report rep;
        try {
            rep = criteria[i].second();
        } catch (const std::exception& e) {
            rep.fail(std::string("exception: ") + e.what());
        }
        std::cout << (rep.ok ? "PASS" : "FAIL") << "  criterion " << (i + 1) << ": " << criteria[i].first << '\n';
        for (const auto& n : rep.notes) std::cout << "        " << n << '\n';
        std::cout.flush();
        failed += !rep.ok;
    }
    std::cout << (criteria.size() - static_cast<size_t>(failed)) << "/" << criteria.size() << " criteria pass\n";
    return failed == 0 ? 0 : 1;
}
