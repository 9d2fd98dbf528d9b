#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "errors.hpp"
#include "json.hpp"
#include "kronecker.hpp"
#include "partition.hpp"
#include "polynomial.hpp"
#include "symfunc.hpp"

namespace kroncalc {

/// Size caps for the identity checks; `relaxed(n)` lifts them to n.
struct IdentityLimits {
    int contingency_max_k = 3;
    int contingency_max_a = 4;
    int littlewood_max_n = 6;
    int cauchy_max_n = 5;
    int cauchy_max_k = 3;

    static IdentityLimits relaxed(int n) { return {n, n, n, n, n}; }
};

struct ContingencySpec {
    int k = 1;
    int a = 0;

    int n() const { return k * a; }
};

struct IdentityResult {
    std::string identity;
    nlohmann::json parameters;
    BigInt lhs;
    BigInt rhs;
    bool equal = false;
    nlohmann::json details = nlohmann::json::object();
};

inline nlohmann::json to_json(const IdentityResult& r) {
    nlohmann::json j{{"identity", r.identity},
                     {"parameters", r.parameters},
                     {"lhs", r.lhs.str()},
                     {"rhs", r.rhs.str()},
                     {"equal", r.equal}};
    if (!r.details.empty()) j["details"] = r.details;
    return j;
}

namespace detail {

inline void check_contingency(const ContingencySpec& s, const IdentityLimits& lim) {
    require(s.k >= 1 && s.a >= 0, "contingency: need k >= 1 and a >= 0");
    if (s.k > lim.contingency_max_k || s.a > lim.contingency_max_a)
        throw InfeasibleError("contingency (k=" + std::to_string(s.k) + ", a=" + std::to_string(s.a) +
                              ") exceeds the guard (k <= " + std::to_string(lim.contingency_max_k) +
                              ", a <= " + std::to_string(lim.contingency_max_a) + "); pass --max-n to override");
}

/// Calls visit(matrix as row-major vector) for each k×k non-negative matrix
/// with total `total`, row sums <= row_cap and column sums <= col_cap.
template <typename Visit>
void for_each_matrix(int k, int total, const std::vector<int>& row_cap, const std::vector<int>& col_cap, Visit&& visit) {
    const size_t cells = static_cast<size_t>(k) * static_cast<size_t>(k);
    std::vector<int> m(cells, 0), rows(static_cast<size_t>(k), 0), cols(static_cast<size_t>(k), 0);
    std::function<void(size_t, int)> rec = [&](size_t idx, int remaining) {
        if (idx == cells) {
            if (remaining == 0) visit(m);
            return;
        }
        const size_t i = idx / static_cast<size_t>(k), j = idx % static_cast<size_t>(k);
        int hi = std::min({remaining, row_cap[i] - rows[i], col_cap[j] - cols[j]});
        for (int v = 0; v <= hi; ++v) {
            m[idx] = v;
            rows[i] += v;
            cols[j] += v;
            rec(idx + 1, remaining - v);
            rows[i] -= v;
            cols[j] -= v;
        }
        m[idx] = 0;
    };
    rec(0, total);
}

/// Kronecker coefficient that also accepts the empty triple.
inline BigInt kron_any(KroneckerEngine& eng, const Partition& a, const Partition& b, const Partition& c) {
    if (a.size() == 0 && b.size() == 0 && c.size() == 0) return 1;
    return eng.kron(a, b, c);
}

}  // namespace detail

/// Non-negative k×k×k integer arrays whose every axis-aligned slice sums to a,
/// counted slice by slice; the state is the vector of unused margins.
inline BigInt count_contingency_arrays(const ContingencySpec& s, const IdentityLimits& lim = {}) {
    detail::check_contingency(s, lim);
    const int k = s.k;
    std::map<std::pair<int, std::vector<int>>, BigInt> memo;
    std::function<BigInt(int, const std::vector<int>&, const std::vector<int>&)> rec =
        [&](int slice, const std::vector<int>& row_left, const std::vector<int>& col_left) -> BigInt {
        if (slice == k) {
            for (int v : row_left)
                if (v) return 0;
            for (int v : col_left)
                if (v) return 0;
            return 1;
        }
        std::vector<int> key = row_left;
        key.insert(key.end(), col_left.begin(), col_left.end());
        auto mk = std::make_pair(slice, key);
        if (auto it = memo.find(mk); it != memo.end()) return it->second;
        BigInt total = 0;
        detail::for_each_matrix(k, s.a, row_left, col_left, [&](const std::vector<int>& m) {
            std::vector<int> r = row_left, c = col_left;
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) {
                    r[static_cast<size_t>(i)] -= m[static_cast<size_t>(i * k + j)];
                    c[static_cast<size_t>(j)] -= m[static_cast<size_t>(i * k + j)];
                }
            total += rec(slice + 1, r, c);
        });
        memo.emplace(std::move(mk), total);
        return total;
    };
    std::vector<int> margins(static_cast<size_t>(k), s.a);
    return rec(0, margins, margins);
}

/// h_a evaluated at the k² products x_i y_j, as a polynomial in x_1..x_k, y_1..y_k.
inline Polynomial h_of_products(int k, int a) {
    const size_t vars = 2 * static_cast<size_t>(k);
    auto degree_ok = [a](const Exponent& e) {
        int x = 0;
        for (size_t i = 0; i < e.size() / 2; ++i) x += e[i];
        return x <= a;
    };
    // Π over letters of the truncated geometric series, then read off degree a.
    Polynomial acc = Polynomial::constant(vars, 1);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            Polynomial geo(vars);
            for (int e = 0; e <= a; ++e) {
                Exponent ex(vars, 0);
                ex[static_cast<size_t>(i)] = e;
                ex[static_cast<size_t>(k + j)] = e;
                geo.add_term(ex, 1);
            }
            acc = acc.multiply(geo, degree_ok);
        }
    Polynomial out(vars);
    for (const auto& [e, c] : acc.terms()) {
        int x = 0;
        for (int i = 0; i < k; ++i) x += e[static_cast<size_t>(i)];
        if (x == a) out.add_term(e, c);
    }
    return out;
}

/// [x^{a^k} y^{a^k}] (h_a[xy])^k by polynomial expansion.
inline BigInt count_contingency_polynomial(const ContingencySpec& s, const IdentityLimits& lim = {}) {
    detail::check_contingency(s, lim);
    const Polynomial h = h_of_products(s.k, s.a);
    auto within = [a = s.a](const Exponent& e) {
        for (int v : e)
            if (v > a) return false;
        return true;
    };
    Polynomial p = Polynomial::constant(h.variables(), 1);
    for (int t = 0; t < s.k; ++t) p = p.multiply(h, within);
    return p.coefficient(Exponent(h.variables(), s.a));
}

/// Both counting routes; throws InternalError if they disagree.
inline BigInt count_contingency(const ContingencySpec& s, const IdentityLimits& lim = {}) {
    BigInt arrays = count_contingency_arrays(s, lim);
    BigInt poly = count_contingency_polynomial(s, lim);
    if (arrays != poly)
        throw InternalError("contingency count (k=" + std::to_string(s.k) + ", a=" + std::to_string(s.a) +
                            "): array enumeration gives " + arrays.str() + ", polynomial expansion gives " + poly.str());
    return arrays;
}

/// Contingency count against Σ_{λ,μ,ν ⊢ ak, ℓ <= k} g(λ,μ,ν) K_{λ,a^k} K_{μ,a^k} K_{ν,a^k}.
inline IdentityResult verify_h_identity(KroneckerEngine& eng, const ContingencySpec& s, const IdentityLimits& lim = {}) {
    IdentityResult r;
    r.identity = "h-cauchy";
    r.parameters = {{"k", s.k}, {"a", s.a}};
    r.lhs = count_contingency(s, lim);
    const int n = s.n();
    EnumerationConstraints c;
    c.max_length = s.k;
    const auto parts = enumerate(n, c);
    const std::vector<int> content(static_cast<size_t>(s.k), s.a);
    std::vector<BigInt> K;
    for (const auto& p : parts) K.push_back(kostka(p, content));
    BigInt rhs = 0;
    for (size_t i = 0; i < parts.size(); ++i)
        for (size_t j = 0; j < parts.size(); ++j)
            for (size_t l = 0; l < parts.size(); ++l) {
                BigInt w = K[i] * K[j] * K[l];
                if (w == 0) continue;
                rhs += detail::kron_any(eng, parts[i], parts[j], parts[l]) * w;
            }
    r.rhs = rhs;
    r.equal = r.lhs == r.rhs;
    return r;
}

/// Littlewood's identity paired with s_μ, for every α ⊢ m, β ⊢ n−m, μ ⊢ n:
///   Σ_ν c^ν_{αβ} g(λ,ν,μ) = Σ_{θ,η,γ,ξ} c^λ_{θη} c^μ_{γξ} g(θ,α,γ) g(η,β,ξ).
/// lhs/rhs in the result are totals over all instances.
inline IdentityResult verify_littlewood(KroneckerEngine& eng, const Partition& lambda, int m, unsigned threads = 0,
                                        const IdentityLimits& lim = {}) {
    const int n = lambda.size();
    require(m >= 0 && m <= n, "littlewood: split must satisfy 0 <= m <= |lambda|");
    if (n > lim.littlewood_max_n)
        throw InfeasibleError("littlewood: n = " + std::to_string(n) + " exceeds the guard (" +
                              std::to_string(lim.littlewood_max_n) + "); pass --max-n to override");
    const auto P_m = enumerate(m), P_r = enumerate(n - m), P_n = enumerate(n);

    // c^λ_{θη} for all θ ⊢ m, η ⊢ n−m.
    std::vector<std::vector<BigInt>> c_lambda(P_m.size(), std::vector<BigInt>(P_r.size()));
    for (size_t t = 0; t < P_m.size(); ++t)
        for (size_t e = 0; e < P_r.size(); ++e) c_lambda[t][e] = lr(lambda, P_m[t], P_r[e]);

    struct Outcome {
        BigInt lhs = 0, rhs = 0;
        std::vector<std::string> mismatches;
    };
    std::vector<Outcome> per_mu(P_n.size());
    KroneckerEngine::parallel_for(P_n.size(), threads, [&](size_t mi) {
        const Partition& mu = P_n[mi];
        Outcome& out = per_mu[mi];
        for (const auto& alpha : P_m)
            for (const auto& beta : P_r) {
                BigInt lhs = 0;
                for (const auto& nu : P_n) {
                    BigInt c = lr(nu, alpha, beta);
                    if (c != 0) lhs += c * detail::kron_any(eng, lambda, nu, mu);
                }
                BigInt rhs = 0;
                for (size_t t = 0; t < P_m.size(); ++t)
                    for (size_t e = 0; e < P_r.size(); ++e) {
                        if (c_lambda[t][e] == 0) continue;
                        for (const auto& gamma : P_m)
                            for (const auto& xi : P_r) {
                                BigInt cm = lr(mu, gamma, xi);
                                if (cm == 0) continue;
                                rhs += c_lambda[t][e] * cm * detail::kron_any(eng, P_m[t], alpha, gamma) *
                                       detail::kron_any(eng, P_r[e], beta, xi);
                            }
                    }
                out.lhs += lhs;
                out.rhs += rhs;
                if (lhs != rhs && out.mismatches.size() < 5)
                    out.mismatches.push_back("alpha=" + alpha.str() + " beta=" + beta.str() + " mu=" + mu.str() +
                                             ": " + lhs.str() + " != " + rhs.str());
            }
    });

    IdentityResult r;
    r.identity = "littlewood";
    r.parameters = {{"lambda", lambda.str()}, {"m", m}};
    std::vector<std::string> mismatches;
    for (auto& o : per_mu) {
        r.lhs += o.lhs;
        r.rhs += o.rhs;
        for (auto& s : o.mismatches) mismatches.push_back(std::move(s));
    }
    r.equal = mismatches.empty();
    r.details = {{"instances", static_cast<long long>(P_m.size() * P_r.size() * P_n.size())},
                 {"mismatches", mismatches}};
    return r;
}

/// Every split m = 0..|λ| of verify_littlewood.
inline std::vector<IdentityResult> verify_littlewood_all_splits(KroneckerEngine& eng, const Partition& lambda,
                                                                unsigned threads = 0, const IdentityLimits& lim = {}) {
    std::vector<IdentityResult> out;
    for (int m = 0; m <= lambda.size(); ++m) out.push_back(verify_littlewood(eng, lambda, m, threads, lim));
    return out;
}

/// s_λ in `letters` variables from semistandard tableaux; `map` turns a
/// letter into its exponent contribution.
inline Polynomial schur_polynomial(const Partition& lambda, int letters, size_t vars,
                                   const std::function<void(int, Exponent&)>& map) {
    Polynomial out(vars);
    const auto& parts = lambda.parts();
    std::vector<std::vector<int>> t(parts.size());
    for (size_t r = 0; r < parts.size(); ++r) t[r].assign(static_cast<size_t>(parts[r]), 0);
    Exponent e(vars, 0);
    std::function<void(size_t, size_t)> rec = [&](size_t r, size_t c) {
        if (r == parts.size()) {
            out.add_term(e, 1);
            return;
        }
        if (c == t[r].size()) {
            rec(r + 1, 0);
            return;
        }
        int lo = 1;
        if (c > 0) lo = std::max(lo, t[r][c - 1]);
        if (r > 0) lo = std::max(lo, t[r - 1][c] + 1);
        for (int v = lo; v <= letters; ++v) {
            t[r][c] = v;
            Exponent saved = e;
            map(v, e);
            rec(r, c + 1);
            e = std::move(saved);
        }
    };
    rec(0, 0);
    return out;
}

/// s_λ[xy] = Σ_{μ,ν} g(λ,μ,ν) s_μ(x) s_ν(y) in k + k variables, for every λ ⊢ n.
inline IdentityResult verify_cauchy(KroneckerEngine& eng, int n, int k, const IdentityLimits& lim = {}) {
    require(n >= 1 && k >= 1, "cauchy: need n >= 1 and k >= 1");
    if (n > lim.cauchy_max_n || k > lim.cauchy_max_k)
        throw InfeasibleError("cauchy: (n=" + std::to_string(n) + ", k=" + std::to_string(k) +
                              ") exceeds the guard (n <= " + std::to_string(lim.cauchy_max_n) + ", k <= " +
                              std::to_string(lim.cauchy_max_k) + "); pass --max-n to override");
    const size_t vars = 2 * static_cast<size_t>(k);
    const auto parts = enumerate(n);

    // s_μ(x) and s_ν(y) through Kostka numbers over weak compositions.
    const auto comps = weak_compositions(n, k);
    auto schur_in = [&](const Partition& p, size_t offset) {
        Polynomial out(vars);
        for (const auto& a : comps) {
            BigInt K = kostka(p, a);
            if (K == 0) continue;
            Exponent e(vars, 0);
            for (size_t i = 0; i < a.size(); ++i) e[offset + i] = a[i];
            out.add_term(e, K);
        }
        return out;
    };
    std::vector<Polynomial> sx, sy;
    for (const auto& p : parts) {
        sx.push_back(schur_in(p, 0));
        sy.push_back(schur_in(p, static_cast<size_t>(k)));
    }

    IdentityResult r;
    r.identity = "cauchy";
    r.parameters = {{"n", n}, {"k", k}};
    std::vector<std::string> mismatches;
    long long monomials = 0;
    for (const auto& lambda : parts) {
        // Letter v (1-based) is the product x_i y_j with v-1 = i*k + j.
        Polynomial lhs = schur_polynomial(lambda, k * k, vars, [k](int v, Exponent& e) {
            ++e[static_cast<size_t>((v - 1) / k)];
            ++e[static_cast<size_t>(k + (v - 1) % k)];
        });
        Polynomial rhs(vars);
        for (size_t i = 0; i < parts.size(); ++i)
            for (size_t j = 0; j < parts.size(); ++j) {
                BigInt g = eng.kron(lambda, parts[i], parts[j]);
                if (g == 0) continue;
                Polynomial term = sx[i].multiply(sy[j]);
                Polynomial scaled(vars);
                for (const auto& [e, c] : term.terms()) scaled.add_term(e, c * g);
                rhs += scaled;
            }
        for (const auto& [e, c] : lhs.terms()) r.lhs += c;
        for (const auto& [e, c] : rhs.terms()) r.rhs += c;
        monomials += static_cast<long long>(lhs.terms().size());
        if (!(lhs == rhs) && mismatches.size() < 5) mismatches.push_back("lambda=" + lambda.str());
    }
    r.equal = mismatches.empty();
    r.details = {{"partitions", parts.size()}, {"monomials", monomials}, {"mismatches", mismatches}};
    return r;
}

}  // namespace kroncalc
