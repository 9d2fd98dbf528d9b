#pragma once

#include <array>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "bigint.hpp"
#include "errors.hpp"
#include "json.hpp"
#include "kronecker.hpp"
#include "partition.hpp"

namespace kroncalc {

// ---------------------------------------------------------------------------
// Special shapes.
// ---------------------------------------------------------------------------

/// ρ_k = (k−1, …, 2, 1).
inline Partition staircase(int k) {
    require(k >= 1, "staircase: k must be >= 1");
    std::vector<int> p;
    for (int i = k - 1; i >= 1; --i) p.push_back(i);
    return Partition(std::move(p));
}

/// δ_k = (k^k).
inline Partition square(int k) {
    require(k >= 1, "square: k must be >= 1");
    return rectangle(k, k);
}

/// (3k−1, 3k−3, …, k+3, (k+1)², (k−1)², …, 2², 1²).
inline Partition caret_list(int k) {
    require(k >= 2, "caret: k must be >= 2");
    std::vector<int> p;
    for (int v = 3 * k - 1; v >= k + 3; v -= 2) p.push_back(v);
    p.push_back(k + 1);
    p.push_back(k + 1);
    for (int j = k - 1; j >= 1; --j) {
        p.push_back(j);
        p.push_back(j);
    }
    return Partition(std::move(p));
}

/// (δ_{k+1} + 2ρ_k) ∪ (2ρ_k)′.
inline Partition caret_formula(int k) {
    require(k >= 2, "caret: k must be >= 2");
    Partition two_rho = scale(staircase(k), 2);
    return union_of(add(square(k + 1), two_rho), conjugate(two_rho));
}

/// τ_k from the explicit list, checked against the union formula, size and symmetry.
inline Partition caret(int k) {
    Partition t = caret_list(k);
    if (t != caret_formula(k)) throw InternalError("caret(" + std::to_string(k) + "): part list and union formula differ");
    if (t.size() != 3 * k * k + 1 || !is_self_conjugate(t))
        throw InternalError("caret(" + std::to_string(k) + "): expected a self-conjugate partition of 3k^2+1");
    return t;
}

inline bool chopped_square_size_allowed(int t) {
    static constexpr std::array<int, 12> allowed{0, 1, 3, 4, 5, 6, 7, 8, 9, 10, 11, 14};
    return std::find(allowed.begin(), allowed.end(), t) != allowed.end();
}

/// The self-conjugate partition of t cut from the corner: among those fitting
/// in a k×k box, the one with the smallest first part.
inline Partition chopped_corner(int k, int t) {
    EnumerationConstraints c;
    c.self_conjugate = true;
    std::optional<Partition> pick;
    for (const auto& p : enumerate(t, c))
        if (p.first() <= k && p.length() <= k) pick = p;  // enumeration is reverse-lex, so the last fit wins
    if (!pick) throw InvalidInput("chopped_square: no self-conjugate partition of " + std::to_string(t) +
                                  " fits in a " + std::to_string(k) + "x" + std::to_string(k) + " square");
    return *pick;
}

/// δ_k with a symmetric partition of size t removed from its bottom-right corner.
inline Partition chopped_square(int k, int t) {
    require(k >= 1, "chopped_square: k must be >= 1");
    require(chopped_square_size_allowed(t), "chopped_square: t must be one of 0,1,3,4,...,10,11,14");
    Partition corner = chopped_corner(k, t);
    std::vector<int> rows(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) rows[static_cast<size_t>(i)] = k - corner[static_cast<size_t>(k - 1 - i)];
    Partition out(std::move(rows));
    if (!is_self_conjugate(out) || out.size() != k * k - t)
        throw InternalError("chopped_square: result is not a self-conjugate partition of k^2 - t");
    return out;
}

enum class ShapeKind { Staircase, Square, Caret, ChoppedSquare };

inline ShapeKind parse_shape_kind(const std::string& s) {
    if (s == "staircase") return ShapeKind::Staircase;
    if (s == "square") return ShapeKind::Square;
    if (s == "caret") return ShapeKind::Caret;
    if (s == "chopped_square" || s == "chopped-square") return ShapeKind::ChoppedSquare;
    throw InvalidInput("unknown shape '" + s + "' (expected staircase, square, caret or chopped_square)");
}

inline Partition shape(ShapeKind kind, int k, std::optional<int> t = std::nullopt) {
    switch (kind) {
        case ShapeKind::Staircase: return staircase(k);
        case ShapeKind::Square: return square(k);
        case ShapeKind::Caret: return caret(k);
        case ShapeKind::ChoppedSquare:
            require(t.has_value(), "chopped_square needs --t");
            return chopped_square(k, *t);
    }
    throw InternalError("unreachable shape kind");
}

// ---------------------------------------------------------------------------
// Certificates.
// ---------------------------------------------------------------------------

enum class WitnessKind {
    Computed,               // value obtained from the character oracle
    SelfConjugatePositive,  // g(λ,λ,λ) >= 1 for λ = λ′, cited
    SquareBase,             // the square base case of the iterated conjugation chain, cited
};

inline std::string to_string(WitnessKind k) {
    switch (k) {
        case WitnessKind::Computed: return "computed";
        case WitnessKind::SelfConjugatePositive: return "SELF_CONJUGATE_POSITIVE";
        case WitnessKind::SquareBase: return "SQUARE_BASE";
    }
    return "?";
}

inline WitnessKind parse_witness_kind(const std::string& s) {
    for (auto k : {WitnessKind::Computed, WitnessKind::SelfConjugatePositive, WitnessKind::SquareBase})
        if (to_string(k) == s) return k;
    throw InvalidInput("unknown witness kind '" + s + "'");
}

/// Positivity evidence. Axiom witnesses stand for a value >= 1.
struct Witness {
    WitnessKind kind = WitnessKind::Computed;
    std::optional<BigInt> value;

    static Witness computed(BigInt v) { return {WitnessKind::Computed, std::move(v)}; }
    static Witness axiom(WitnessKind k) { return {k, std::nullopt}; }

    bool is_axiom() const { return kind != WitnessKind::Computed; }
    BigInt lower_bound() const { return is_axiom() ? BigInt(1) : *value; }
};

struct MonotoneAdd {
    Triple summand;
    Witness witness;
};

/// Conjugates entries i and j (0-based).
struct ConjugatePair {
    int i, j;
};

/// new[t] = old[order[t]] (0-based).
struct Permute {
    std::array<int, 3> order;
};

using Step = std::variant<MonotoneAdd, ConjugatePair, Permute>;

inline Triple apply_step(const Triple& t, const Step& s) {
    if (const auto* m = std::get_if<MonotoneAdd>(&s)) {
        if (!m->summand.same_size()) throw InvalidInput("monotone step: summand sizes differ " + m->summand.str());
        return {add(t.a, m->summand.a), add(t.b, m->summand.b), add(t.c, m->summand.c)};
    }
    if (const auto* c = std::get_if<ConjugatePair>(&s)) {
        require(c->i >= 0 && c->i < 3 && c->j >= 0 && c->j < 3 && c->i != c->j,
                "conjugation step: entries must be two distinct indices in 1..3");
        Triple out = t;
        out[static_cast<size_t>(c->i)] = conjugate(t[static_cast<size_t>(c->i)]);
        out[static_cast<size_t>(c->j)] = conjugate(t[static_cast<size_t>(c->j)]);
        return out;
    }
    const auto& p = std::get<Permute>(s);
    std::array<int, 3> sorted = p.order;
    std::sort(sorted.begin(), sorted.end());
    require(sorted == std::array<int, 3>{0, 1, 2}, "permutation step: order must be a permutation of 1,2,3");
    return {t[static_cast<size_t>(p.order[0])], t[static_cast<size_t>(p.order[1])], t[static_cast<size_t>(p.order[2])]};
}

struct Confirmation {
    bool attempted = false;
    bool holds = false;
    std::optional<BigInt> source_value;
    std::optional<BigInt> target_value;
    bool witnesses_match = true;  // every computed witness recomputed to the same value
    std::string note;
};

/// Claims g(target) >= g(source) (>= source.lower_bound()).
struct LowerBoundCertificate {
    std::string description;
    Triple source;
    Witness source_value;
    std::vector<Step> steps;
    Triple target;

    Triple replay() const {
        require(source.same_size(), "certificate source sizes differ " + source.str());
        Triple t = source;
        for (const auto& s : steps) t = apply_step(t, s);
        return t;
    }

    /// The claim is vacuous when the source value is computed and zero.
    bool trivial() const { return !source_value.is_axiom() && *source_value.value == 0; }

    BigInt certified_value() const { return source_value.lower_bound(); }

    bool rests_on_axioms() const {
        if (source_value.is_axiom()) return true;
        for (const auto& s : steps)
            if (const auto* m = std::get_if<MonotoneAdd>(&s); m && m->witness.is_axiom()) return true;
        return false;
    }

    /// Structural check: replay reproduces target and every monotone step
    /// carries a positive witness (zero allowed only for a trivial claim).
    std::vector<std::string> validate() const {
        std::vector<std::string> problems;
        try {
            if (!(replay() == target)) problems.push_back("replay gives " + replay().str() + ", expected " + target.str());
        } catch (const std::exception& e) {
            problems.push_back(e.what());
        }
        if (!source_value.is_axiom() && !source_value.value) problems.push_back("source witness has no value");
        for (size_t i = 0; i < steps.size(); ++i) {
            const auto* m = std::get_if<MonotoneAdd>(&steps[i]);
            if (!m) continue;
            if (!m->witness.is_axiom()) {
                if (!m->witness.value) problems.push_back("step " + std::to_string(i + 1) + ": computed witness has no value");
                else if (*m->witness.value <= 0 && !trivial())
                    problems.push_back("step " + std::to_string(i + 1) + ": witness g" + m->summand.str() + " is not positive");
            }
        }
        return problems;
    }

    bool valid() const { return validate().empty(); }

    /// Numeric check with the oracle when the target is at most max_n.
    Confirmation confirm(KroneckerEngine& eng, int max_n) const {
        Confirmation c;
        if (target.size() > max_n) {
            c.note = "target size " + std::to_string(target.size()) + " exceeds " + std::to_string(max_n) +
                     "; structural check only";
            return c;
        }
        c.attempted = true;
        BigInt src = eng.kron(source);
        if (!source_value.is_axiom() && *source_value.value != src) c.witnesses_match = false;
        for (const auto& s : steps)
            if (const auto* m = std::get_if<MonotoneAdd>(&s)) {
                BigInt w = m->summand.size() == 0 ? BigInt(1) : eng.kron(m->summand);
                if (m->witness.is_axiom() ? w < 1 : w != *m->witness.value) c.witnesses_match = false;
            }
        BigInt tgt = eng.kron(target);
        c.holds = tgt >= src && tgt >= certified_value() && c.witnesses_match;
        c.source_value = std::move(src);
        c.target_value = std::move(tgt);
        return c;
    }
};

// JSON form. Entry indices are 1-based.

inline nlohmann::json to_json(const Triple& t) { return {t.a.str(), t.b.str(), t.c.str()}; }

inline Triple triple_from_json(const nlohmann::json& j) {
    require(j.is_array() && j.size() == 3, "certificate: a triple must be an array of three partition strings");
    return {Partition::parse(j[0].get<std::string>()), Partition::parse(j[1].get<std::string>()),
            Partition::parse(j[2].get<std::string>())};
}

inline nlohmann::json to_json(const Witness& w) {
    nlohmann::json j{{"kind", to_string(w.kind)}};
    if (w.value) j["value"] = w.value->str();
    return j;
}

inline Witness witness_from_json(const nlohmann::json& j) {
    Witness w;
    w.kind = parse_witness_kind(j.at("kind").get<std::string>());
    if (w.kind == WitnessKind::Computed) w.value = parse_bigint(j.at("value").get<std::string>());
    return w;
}

inline nlohmann::json to_json(const Step& s) {
    if (const auto* m = std::get_if<MonotoneAdd>(&s))
        return {{"op", "monotone_add"}, {"summand", to_json(m->summand)}, {"witness", to_json(m->witness)}};
    if (const auto* c = std::get_if<ConjugatePair>(&s)) return {{"op", "conjugate_pair"}, {"entries", {c->i + 1, c->j + 1}}};
    const auto& p = std::get<Permute>(s);
    return {{"op", "permute"}, {"order", {p.order[0] + 1, p.order[1] + 1, p.order[2] + 1}}};
}

inline Step step_from_json(const nlohmann::json& j) {
    const std::string op = j.at("op").get<std::string>();
    if (op == "monotone_add") return MonotoneAdd{triple_from_json(j.at("summand")), witness_from_json(j.at("witness"))};
    if (op == "conjugate_pair") {
        const auto& e = j.at("entries");
        require(e.is_array() && e.size() == 2, "conjugate_pair: entries must list two indices");
        return ConjugatePair{e[0].get<int>() - 1, e[1].get<int>() - 1};
    }
    if (op == "permute") {
        const auto& o = j.at("order");
        require(o.is_array() && o.size() == 3, "permute: order must list three indices");
        return Permute{{o[0].get<int>() - 1, o[1].get<int>() - 1, o[2].get<int>() - 1}};
    }
    throw InvalidInput("certificate: unknown step op '" + op + "'");
}

inline nlohmann::json to_json(const LowerBoundCertificate& c) {
    nlohmann::json steps = nlohmann::json::array();
    for (const auto& s : c.steps) steps.push_back(to_json(s));
    return {{"description", c.description},
            {"source", to_json(c.source)},
            {"source_value", to_json(c.source_value)},
            {"steps", steps},
            {"target", to_json(c.target)},
            {"target_size", c.target.size()},
            {"certified",
             {{"inequality", "g(target) >= g(source)"},
              {"value", c.certified_value().str()},
              {"trivial", c.trivial()},
              {"rests_on_axioms", c.rests_on_axioms()}}}};
}

inline LowerBoundCertificate certificate_from_json(const nlohmann::json& j) {
    try {
        LowerBoundCertificate c;
        c.description = j.value("description", "");
        c.source = triple_from_json(j.at("source"));
        c.source_value = witness_from_json(j.at("source_value"));
        for (const auto& s : j.at("steps")) c.steps.push_back(step_from_json(s));
        c.target = triple_from_json(j.at("target"));
        return c;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("malformed certificate: ") + e.what());
    }
}

inline nlohmann::json to_json(const Confirmation& c) {
    nlohmann::json j{{"attempted", c.attempted}, {"holds", c.holds}, {"witnesses_match", c.witnesses_match}};
    j["source_value"] = c.source_value ? nlohmann::json(c.source_value->str()) : nlohmann::json(nullptr);
    j["target_value"] = c.target_value ? nlohmann::json(c.target_value->str()) : nlohmann::json(nullptr);
    if (!c.note.empty()) j["note"] = c.note;
    return j;
}

// ---------------------------------------------------------------------------
// Constructions.
// ---------------------------------------------------------------------------

namespace detail {

/// g(t) as a computed witness when |t| <= max_n, otherwise `fallback`.
inline Witness witness_for(KroneckerEngine& eng, const Triple& t, int max_n, std::optional<WitnessKind> fallback) {
    if (t.size() == 0) return Witness::computed(1);
    if (t.size() <= max_n || !fallback) return Witness::computed(eng.kron(t));
    return Witness::axiom(*fallback);
}

inline bool diagonal_self_conjugate(const Triple& t) { return t.a == t.b && t.b == t.c && is_self_conjugate(t.a); }

inline LowerBoundCertificate finish(LowerBoundCertificate c) {
    c.target = c.replay();
    return c;
}

}  // namespace detail

/// g(α+β+γ, ·, ·)³ >= g(α,β,γ): two monotone steps with summands (β,γ,α) and (γ,α,β).
inline LowerBoundCertificate symmetrize(KroneckerEngine& eng, const Partition& alpha, const Partition& beta,
                                        const Partition& gamma) {
    require(alpha.size() == beta.size() && beta.size() == gamma.size(), "symmetrize: partitions must have equal size");
    LowerBoundCertificate c;
    c.description = "symmetrization of " + Triple{alpha, beta, gamma}.str();
    c.source = {alpha, beta, gamma};
    BigInt g = alpha.size() == 0 ? BigInt(1) : eng.kron(alpha, beta, gamma);
    c.source_value = Witness::computed(g);
    // g is symmetric, so each permuted summand has the same value.
    c.steps.push_back(MonotoneAdd{{beta, gamma, alpha}, Witness::computed(g)});
    c.steps.push_back(MonotoneAdd{{gamma, alpha, beta}, Witness::computed(g)});
    return detail::finish(std::move(c));
}

/// Alternating monotone/conjugation chain from (α,β,γ) with a self-conjugate
/// base D (usually δ_k); requires ℓ(α), ℓ(β), ℓ(γ) <= k. With α = β = γ the
/// target is μ³ for μ = (D + 2α) ∪ (2α)′.
inline LowerBoundCertificate fullsym_embed(KroneckerEngine& eng, const Partition& alpha, const Partition& beta,
                                           const Partition& gamma, int k, std::optional<Partition> base = std::nullopt) {
    require(k >= 1, "embed: k must be >= 1");
    require(alpha.size() == beta.size() && beta.size() == gamma.size(), "embed: partitions must have equal size");
    require(alpha.length() <= k && beta.length() <= k && gamma.length() <= k,
            "embed: every partition needs length <= k = " + std::to_string(k));
    const Partition D = base ? *base : square(k);
    require(is_self_conjugate(D), "embed: base shape must be self-conjugate");
    const int max_n = eng.characters().limits().confirm_max_n;

    LowerBoundCertificate c;
    c.description = "self-conjugate embedding of " + Triple{alpha, beta, gamma}.str() + " with base " + D.str();
    c.source = {alpha, beta, gamma};
    const Witness g = detail::witness_for(eng, c.source, max_n, std::nullopt);
    c.source_value = g;
    const Triple d3{D, D, D};
    c.steps.push_back(MonotoneAdd{d3, detail::witness_for(eng, d3, max_n, WitnessKind::SelfConjugatePositive)});
    c.steps.push_back(ConjugatePair{0, 1});
    c.steps.push_back(MonotoneAdd{{beta, gamma, alpha}, g});
    c.steps.push_back(ConjugatePair{1, 2});
    c.steps.push_back(MonotoneAdd{{gamma, alpha, beta}, g});
    c.steps.push_back(ConjugatePair{0, 1});
    c.steps.push_back(MonotoneAdd{{beta, alpha, gamma}, g});
    return detail::finish(std::move(c));
}

inline LowerBoundCertificate fullsym_embed(KroneckerEngine& eng, const Partition& alpha, int k) {
    return fullsym_embed(eng, alpha, alpha, alpha, k);
}

/// (D + 2α) ∪ (2α)′.
inline Partition embedded_shape(const Partition& alpha, const Partition& D) {
    Partition two = scale(alpha, 2);
    return union_of(add(D, two), conjugate(two));
}

/// Companion chain for the same target starting from D³: the first summand is
/// α³ and the base square is added at the end of the ordering instead.
inline LowerBoundCertificate fullsym_embed_from_base(KroneckerEngine& eng, const Partition& alpha, int k) {
    require(k >= 1 && alpha.length() <= k, "embed: need length(alpha) <= k");
    const Partition D = square(k);
    const int max_n = eng.characters().limits().confirm_max_n;
    LowerBoundCertificate c;
    c.description = "self-conjugate embedding of " + alpha.str() + " read from the square side";
    c.source = {D, D, D};
    c.source_value = detail::witness_for(eng, c.source, max_n, WitnessKind::SelfConjugatePositive);
    const Triple a3{alpha, alpha, alpha};
    const Witness ga = detail::witness_for(eng, a3, max_n, is_self_conjugate(alpha)
                                                               ? std::optional(WitnessKind::SelfConjugatePositive)
                                                               : std::nullopt);
    c.steps.push_back(MonotoneAdd{a3, ga});
    c.steps.push_back(ConjugatePair{0, 1});
    c.steps.push_back(MonotoneAdd{a3, ga});
    c.steps.push_back(ConjugatePair{1, 2});
    c.steps.push_back(MonotoneAdd{a3, ga});
    c.steps.push_back(ConjugatePair{0, 1});
    c.steps.push_back(MonotoneAdd{a3, ga});
    return detail::finish(std::move(c));
}

/// g(τ_k³) >= g(ρ_k³): the embedding of ρ_k into a (k+1)-square.
inline LowerBoundCertificate caret_certificate(KroneckerEngine& eng, int k) {
    require(k >= 2, "caret certificate: k must be >= 2");
    const Partition rho = staircase(k);
    const int max_n = eng.characters().limits().confirm_max_n;
    const Triple r3{rho, rho, rho};
    // ρ_k is self-conjugate, so its cube is positive even beyond the oracle's reach.
    const Witness g = detail::witness_for(eng, r3, max_n, WitnessKind::SelfConjugatePositive);
    LowerBoundCertificate c;
    c.description = "caret tau_" + std::to_string(k) + " from the staircase rho_" + std::to_string(k);
    c.source = r3;
    c.source_value = g;
    const Partition D = square(k + 1);
    const Triple d3{D, D, D};
    c.steps.push_back(MonotoneAdd{d3, detail::witness_for(eng, d3, max_n, WitnessKind::SelfConjugatePositive)});
    c.steps.push_back(ConjugatePair{0, 1});
    c.steps.push_back(MonotoneAdd{r3, g});
    c.steps.push_back(ConjugatePair{1, 2});
    c.steps.push_back(MonotoneAdd{r3, g});
    c.steps.push_back(ConjugatePair{0, 1});
    c.steps.push_back(MonotoneAdd{r3, g});
    c = detail::finish(std::move(c));
    const Partition tau = caret(k);
    if (!(c.target == Triple{tau, tau, tau})) throw InternalError("caret certificate does not reach tau_k^3");
    return c;
}

/// g(τ_k³) >= g(δ_{k+1}³).
inline LowerBoundCertificate caret_certificate_from_square(KroneckerEngine& eng, int k) {
    require(k >= 2, "caret certificate: k must be >= 2");
    LowerBoundCertificate c = fullsym_embed_from_base(eng, staircase(k), k + 1);
    c.description = "caret tau_" + std::to_string(k) + " from the square delta_" + std::to_string(k + 1);
    const Partition tau = caret(k);
    if (!(c.target == Triple{tau, tau, tau})) throw InternalError("caret certificate does not reach tau_k^3");
    return c;
}

/// From ((2s)^{2s}, (2s)^{2s}, (k,k)) to (k^k)³, s = 2^r, k = 2s²: one
/// conjugation, then r rounds of doubling, conjugating, doubling.
inline LowerBoundCertificate square_chain(int r) {
    require(r >= 0 && r <= 6, "square_chain: r must be in 0..6");
    const int s = 1 << r;
    const int k = 2 * s * s;
    LowerBoundCertificate c;
    c.description = "iterated conjugation chain, r = " + std::to_string(r) + ", target square " + std::to_string(k);
    c.source = {square(2 * s), square(2 * s), rectangle(k, 2)};
    c.source_value = Witness::axiom(WitnessKind::SquareBase);
    c.steps.push_back(ConjugatePair{0, 2});
    Triple cur = apply_step(c.source, c.steps.back());
    for (int level = 0; level < r; ++level) {
        // Adding the current triple to itself; its g is positive by the chain so far.
        c.steps.push_back(MonotoneAdd{cur, Witness::axiom(WitnessKind::SquareBase)});
        cur = apply_step(cur, c.steps.back());
        c.steps.push_back(ConjugatePair{0, 1});
        cur = apply_step(cur, c.steps.back());
        c.steps.push_back(MonotoneAdd{cur, Witness::axiom(WitnessKind::SquareBase)});
        cur = apply_step(cur, c.steps.back());
    }
    c = detail::finish(std::move(c));
    const Partition target = square(k);
    if (!(c.target == Triple{target, target, target})) throw InternalError("square chain does not reach the square");
    return c;
}

/// Miniature doubling step ((2^{2m}))³ -> ((4m)^{2m}... ) checked by the oracle:
/// for m = 1, (2^4)³ + (2^4)³ = (4^4)³.
inline LowerBoundCertificate square_doubling(KroneckerEngine& eng, int m) {
    require(m >= 1, "square doubling: m must be >= 1");
    const Partition half = rectangle(2 * m, 4 * m);
    const Triple h3{half, half, half};
    const Witness g = Witness::computed(eng.kron(h3));
    LowerBoundCertificate c;
    c.description = "doubling (" + std::to_string(2 * m) + "^" + std::to_string(4 * m) + ")^3";
    c.source = h3;
    c.source_value = g;
    c.steps.push_back(MonotoneAdd{h3, g});
    return detail::finish(std::move(c));
}

// ---------------------------------------------------------------------------
// Monotonicity and stability.
// ---------------------------------------------------------------------------

struct MonotoneCheck {
    bool applicable = false;  // g(α,β,γ) > 0
    bool holds = false;       // g(λ+α,μ+β,ν+γ) >= g(λ,μ,ν)
    BigInt witness, before, after;
};

inline MonotoneCheck monotone_check(KroneckerEngine& eng, const Triple& base, const Triple& inc) {
    require(base.same_size() && inc.same_size(), "monotonicity: each triple needs equal sizes");
    MonotoneCheck m;
    m.witness = inc.size() == 0 ? BigInt(1) : eng.kron(inc);
    m.before = base.size() == 0 ? BigInt(1) : eng.kron(base);
    m.after = eng.kron(add(base.a, inc.a), add(base.b, inc.b), add(base.c, inc.c));
    m.applicable = m.witness > 0;
    m.holds = m.after >= m.before;
    return m;
}

inline nlohmann::json to_json(const MonotoneCheck& m) {
    return {{"applicable", m.applicable},
            {"holds", m.holds},
            {"witness", m.witness.str()},
            {"before", m.before.str()},
            {"after", m.after.str()}};
}

struct StabilitySequence {
    std::vector<BigInt> values;  // a_0 .. a_{d_max}
    BigInt witness;              // g(α,β,γ)
    bool non_decreasing = true;
    std::optional<bool> linear_lower_bound;  // a_d >= d+1, checked when g(α,β,γ) > 1 and a_0 > 0
};

/// a_d = g(λ+dα, μ+dβ, ν+dγ) for d = 0..d_max.
inline StabilitySequence stability_sequence(KroneckerEngine& eng, const Triple& base, const Triple& inc, int d_max) {
    require(base.same_size() && inc.same_size(), "stability: each triple needs equal sizes");
    require(d_max >= 0, "stability: d_max must be >= 0");
    eng.characters().guard(base.size() + d_max * inc.size());
    StabilitySequence s;
    s.witness = inc.size() == 0 ? BigInt(1) : eng.kron(inc);
    require(s.witness >= 1, "stability: g" + inc.str() + " = 0, the sequence is not covered by monotonicity");
    for (int d = 0; d <= d_max; ++d) {
        Triple t{add(base.a, scale(inc.a, d)), add(base.b, scale(inc.b, d)), add(base.c, scale(inc.c, d))};
        s.values.push_back(t.size() == 0 ? BigInt(1) : eng.kron(t));
    }
    for (size_t i = 1; i < s.values.size(); ++i)
        if (s.values[i] < s.values[i - 1]) s.non_decreasing = false;
    // a_d >= g(dα,dβ,dγ) needs a_0 > 0.
    if (s.witness > 1 && s.values[0] > 0) {
        bool ok = true;
        for (size_t d = 0; d < s.values.size(); ++d)
            if (s.values[d] < static_cast<long long>(d) + 1) ok = false;
        s.linear_lower_bound = ok;
    }
    return s;
}

inline nlohmann::json to_json(const StabilitySequence& s) {
    nlohmann::json vals = nlohmann::json::array();
    for (const auto& v : s.values) vals.push_back(v.str());
    nlohmann::json j{{"values", vals}, {"witness", s.witness.str()}, {"non_decreasing", s.non_decreasing}};
    j["linear_lower_bound"] = s.linear_lower_bound ? nlohmann::json(*s.linear_lower_bound) : nlohmann::json(nullptr);
    return j;
}

struct PropertySummary {
    std::string property;
    long long checked = 0;
    long long skipped = 0;  // instances whose hypothesis fails
    long long violations = 0;
    std::vector<std::string> counterexamples;

    bool passed() const { return violations == 0; }
};

inline nlohmann::json to_json(const PropertySummary& p) {
    return {{"property", p.property},
            {"checked", p.checked},
            {"skipped", p.skipped},
            {"violations", p.violations},
            {"counterexamples", p.counterexamples},
            {"passed", p.passed()}};
}

namespace detail {

inline void tally(PropertySummary& s, const MonotoneCheck& m, const Triple& base, const Triple& inc) {
    if (!m.applicable) {
        ++s.skipped;
        return;
    }
    ++s.checked;
    if (m.holds) return;
    ++s.violations;
    if (s.counterexamples.size() < 5)
        s.counterexamples.push_back("base " + base.str() + " + " + inc.str() + ": " + m.after.str() + " < " +
                                    m.before.str());
}

}  // namespace detail

/// `count` random instances with increment size and base size in 1..max_size.
/// Increments are redrawn until g(α,β,γ) > 0, so every instance is applicable.
inline PropertySummary verify_monotonicity_random(KroneckerEngine& eng, int count, int max_size, uint64_t seed) {
    require(count >= 0 && max_size >= 1, "monotonicity: need count >= 0 and max_size >= 1");
    PropertySummary s;
    s.property = "monotonicity (random, seed " + std::to_string(seed) + ")";
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> size_dist(1, max_size);
    auto pick = [&](const std::vector<Partition>& ps) {
        return ps[std::uniform_int_distribution<size_t>(0, ps.size() - 1)(rng)];
    };
    std::map<int, std::vector<Partition>> by_size;
    auto parts = [&](int n) -> const std::vector<Partition>& {
        auto& v = by_size[n];
        if (v.empty()) v = enumerate(n);
        return v;
    };
    for (int i = 0; i < count; ++i) {
        const int m = size_dist(rng), n = size_dist(rng);
        Triple inc;
        do {
            inc = {pick(parts(m)), pick(parts(m)), pick(parts(m))};
        } while (eng.kron(inc) == 0);
        Triple base{pick(parts(n)), pick(parts(n)), pick(parts(n))};
        detail::tally(s, monotone_check(eng, base, inc), base, inc);
    }
    return s;
}

/// g(λ+(1), μ+(1), ν+(1)) >= g(λ,μ,ν) for every triple of size 1..max_n.
inline PropertySummary verify_monotonicity_unit(KroneckerEngine& eng, int max_n) {
    PropertySummary s;
    s.property = "monotonicity (unit increments, n <= " + std::to_string(max_n) + ")";
    const Triple one{Partition{1}, Partition{1}, Partition{1}};
    for (int n = 1; n <= max_n; ++n) {
        const auto ps = enumerate(n);
        for (const auto& a : ps)
            for (const auto& b : ps)
                for (const auto& c : ps) {
                    Triple base{a, b, c};
                    detail::tally(s, monotone_check(eng, base, one), base, one);
                }
    }
    return s;
}

/// g(λ,λ,λ) >= 1 for every self-conjugate λ of size 1..max_n.
inline PropertySummary verify_self_conjugate_positivity(KroneckerEngine& eng, int max_n, unsigned threads = 0) {
    PropertySummary s;
    s.property = "g(l,l,l) >= 1 for self-conjugate l, n <= " + std::to_string(max_n);
    std::vector<Partition> all;
    EnumerationConstraints c;
    c.self_conjugate = true;
    for (int n = 1; n <= max_n; ++n)
        for (auto& p : enumerate(n, c)) all.push_back(std::move(p));
    std::vector<BigInt> values(all.size());
    KroneckerEngine::parallel_for(all.size(), threads, [&](size_t i) { values[i] = eng.kron(all[i], all[i], all[i]); });
    for (size_t i = 0; i < all.size(); ++i) {
        ++s.checked;
        if (values[i] >= 1) continue;
        ++s.violations;
        if (s.counterexamples.size() < 5) s.counterexamples.push_back("g(" + all[i].str() + ")^3 = " + values[i].str());
    }
    return s;
}

}  // namespace kroncalc
