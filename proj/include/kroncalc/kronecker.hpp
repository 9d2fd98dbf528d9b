#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <optional>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "bigint.hpp"
#include "chartab.hpp"
#include "memo.hpp"
#include "partition.hpp"
#include "symfunc.hpp"

namespace kroncalc {

__extension__ using int128 = __int128;
__extension__ using uint128 = unsigned __int128;

struct Triple {
    Partition a, b, c;

    const Partition& operator[](size_t i) const { return i == 0 ? a : (i == 1 ? b : c); }
    Partition& operator[](size_t i) { return i == 0 ? a : (i == 1 ? b : c); }
    int size() const { return a.size(); }
    bool same_size() const { return a.size() == b.size() && b.size() == c.size(); }
    std::string str() const { return "(" + a.str() + " | " + b.str() + " | " + c.str() + ")"; }

    friend bool operator==(const Triple&, const Triple&) = default;
};

/// Representative of the orbit of (λ,μ,ν) under permutations and under
/// conjugating any two entries; g is constant on the orbit.
inline Triple canonical_triple(const Triple& t) {
    const std::array<Partition, 3> conj{conjugate(t.a), conjugate(t.b), conjugate(t.c)};
    static constexpr std::array<std::array<bool, 3>, 4> patterns{
        {{false, false, false}, {true, true, false}, {true, false, true}, {false, true, true}}};
    std::optional<std::array<Partition, 3>> best;
    for (const auto& pat : patterns) {
        std::array<Partition, 3> v{pat[0] ? conj[0] : t.a, pat[1] ? conj[1] : t.b, pat[2] ? conj[2] : t.c};
        std::sort(v.begin(), v.end());
        if (!best || v < *best) best = v;
    }
    return {(*best)[0], (*best)[1], (*best)[2]};
}

/// s_μ * s_ν = Σ_λ g(λ,μ,ν) s_λ.
struct KroneckerExpansion {
    Partition mu, nu;
    SchurExpansion coefficients;
};

enum class Statistic { K, Ks, Kfs, A, As, B, Bfs };

inline std::string to_string(Statistic s) {
    switch (s) {
        case Statistic::K: return "K";
        case Statistic::Ks: return "Ks";
        case Statistic::Kfs: return "Kfs";
        case Statistic::A: return "A";
        case Statistic::As: return "As";
        case Statistic::B: return "B";
        case Statistic::Bfs: return "Bfs";
    }
    return "?";
}

inline Statistic parse_statistic(const std::string& s) {
    for (auto st : {Statistic::K, Statistic::Ks, Statistic::Kfs, Statistic::A, Statistic::As, Statistic::B,
                    Statistic::Bfs})
        if (to_string(st) == s) return st;
    throw InvalidInput("unknown statistic '" + s + "' (expected K, Ks, Kfs, A, As, B or Bfs)");
}

inline bool statistic_needs_k(Statistic s) {
    return s == Statistic::A || s == Statistic::As || s == Statistic::B || s == Statistic::Bfs;
}

/// Diagonal statistics maximize g(λ,λ,λ); the rest range over all triples.
inline bool statistic_is_diagonal(Statistic s) {
    return s == Statistic::Ks || s == Statistic::Kfs || s == Statistic::As || s == Statistic::Bfs;
}

/// Partitions admissible for the statistic at (n, k).
inline std::vector<Partition> statistic_domain(Statistic s, int n, std::optional<int> k) {
    EnumerationConstraints c;
    switch (s) {
        case Statistic::K:
        case Statistic::Ks: break;
        case Statistic::Kfs: c.self_conjugate = true; break;
        case Statistic::A:
        case Statistic::As: c.max_length = k; break;
        case Statistic::B: c.max_durfee = k; break;
        case Statistic::Bfs:
            c.max_durfee = k;
            c.self_conjugate = true;
            break;
    }
    return enumerate(n, c);
}

struct MaxStatistic {
    Statistic name;
    int n;
    std::optional<int> k;
    BigInt value;
    std::optional<Triple> witness;  // empty when the domain is empty
};

/// Kronecker coefficients from the class-wise character sum
/// g = (1/n!) Σ_ρ |C_ρ| χ^λ(ρ)χ^μ(ρ)χ^ν(ρ). Thread-safe.
class KroneckerEngine {
public:
    explicit KroneckerEngine(CharacterStore& chars) : chars_(chars) {}

    CharacterStore& characters() { return chars_; }

    BigInt kron(const Partition& lambda, const Partition& mu, const Partition& nu) {
        require(lambda.size() == mu.size() && mu.size() == nu.size(),
                "kron: sizes differ (" + std::to_string(lambda.size()) + ", " + std::to_string(mu.size()) + ", " +
                    std::to_string(nu.size()) + ")");
        const int n = lambda.size();
        chars_.guard(n);
        Triple canon = canonical_triple({lambda, mu, nu});
        std::string key = canon.a.key() + '\0' + canon.b.key() + '\0' + canon.c.key();
        return memo_.get_or_compute(key, [&] { return class_sum(canon.a, canon.b, canon.c); });
    }

    BigInt kron(const Triple& t) { return kron(t.a, t.b, t.c); }

    /// Exact class sum, no memo. Uses 128-bit accumulation when every
    /// character value fits in 64 bits and (n!)^{3/2} < 2^127.
    BigInt class_sum(const Partition& lambda, const Partition& mu, const Partition& nu) {
        const int n = lambda.size();
        auto r1 = chars_.row(lambda), r2 = chars_.row(mu), r3 = chars_.row(nu);
        const auto& sizes = chars_.class_sizes(n);
        const BigInt nfact = factorial(n);
        BigInt numerator = 0;
        if (n <= kFastPathMaxN && r1->fits_int64 && r2->fits_int64 && r3->fits_int64) {
            // |term| <= max|χ| · Σ_ρ |C_ρ||χ^λχ^μ| <= (n!)^{3/2}, and so is the running sum.
            const auto& small_sizes = class_sizes_i128(n);
            int128 acc = 0;
            for (size_t i = 0; i < small_sizes.size(); ++i) {
                int128 term = static_cast<int128>(r1->small[i]) * r2->small[i];
                term *= r3->small[i];
                term *= small_sizes[i];
                acc += term;
            }
            numerator = from_int128(acc);
        } else {
            for (size_t i = 0; i < sizes.size(); ++i)
                numerator += sizes[i] * r1->values[i] * r2->values[i] * r3->values[i];
        }
        BigInt quotient, remainder;
        boost::multiprecision::divide_qr(numerator, nfact, quotient, remainder);
        if (remainder != 0 || quotient < 0)
            throw InternalError("character sum for " + Triple{lambda, mu, nu}.str() + " is not a non-negative integer");
        return quotient;
    }

    /// Same sum, always in arbitrary precision (reference path for tests).
    BigInt class_sum_bigint(const Partition& lambda, const Partition& mu, const Partition& nu) {
        auto r1 = chars_.row(lambda), r2 = chars_.row(mu), r3 = chars_.row(nu);
        const auto& sizes = chars_.class_sizes(lambda.size());
        BigInt numerator = 0;
        for (size_t i = 0; i < sizes.size(); ++i) numerator += sizes[i] * r1->values[i] * r2->values[i] * r3->values[i];
        BigInt q, r;
        boost::multiprecision::divide_qr(numerator, factorial(lambda.size()), q, r);
        if (r != 0) throw InternalError("non-integral character sum");
        return q;
    }

    /// All λ with g(λ,μ,ν) > 0, checked against Σ_λ g f^λ = f^μ f^ν.
    KroneckerExpansion expansion(const Partition& mu, const Partition& nu) {
        require(mu.size() == nu.size(), "kron expansion: |mu| = " + std::to_string(mu.size()) + " but |nu| = " +
                                            std::to_string(nu.size()));
        const int n = mu.size();
        chars_.guard(n);
        KroneckerExpansion out{mu, nu, {}};
        BigInt dim_sum = 0;
        for (const auto& lambda : chars_.classes(n)) {
            BigInt g = kron(lambda, mu, nu);
            if (g == 0) continue;
            dim_sum += g * chars_.dimension(lambda);
            out.coefficients.emplace_back(lambda, std::move(g));
        }
        if (dim_sum != chars_.dimension(mu) * chars_.dimension(nu))
            throw InternalError("kron expansion of " + mu.str() + " * " + nu.str() + " fails the dimension check");
        return out;
    }

    void guard_scan(Statistic s, int n) const {
        int limit = statistic_is_diagonal(s) ? chars_.limits().diag_scan_max_n : chars_.limits().scan_max_n;
        if (n > limit)
            throw InfeasibleError("scan " + to_string(s) + " at n = " + std::to_string(n) + " exceeds the guard (" +
                                  std::to_string(limit) + "); pass --max-n to override");
    }

    /// Exhaustive maximum over the statistic's domain. Unordered triples are
    /// visited as index triples i <= j <= l in enumeration order; ties keep
    /// the first triple, independent of `threads`.
    MaxStatistic scan_max(Statistic s, int n, std::optional<int> k, unsigned threads = 0) {
        require(n >= 1, "scan: n must be positive");
        if (statistic_needs_k(s)) require(k.has_value() && *k >= 1, "scan " + to_string(s) + " requires --k >= 1");
        else k.reset();
        guard_scan(s, n);
        const auto domain = statistic_domain(s, n, k);
        MaxStatistic result{s, n, k, 0, std::nullopt};
        if (domain.empty()) return result;
        for (const auto& p : domain) chars_.row(p);  // warm rows before fanning out

        struct Best {
            BigInt value = -1;
            std::optional<Triple> witness;
        };
        std::vector<Best> per_outer(domain.size());
        auto work = [&](size_t i) {
            Best best;
            if (statistic_is_diagonal(s)) {
                best.value = class_sum(domain[i], domain[i], domain[i]);
                best.witness = Triple{domain[i], domain[i], domain[i]};
            } else {
                for (size_t j = i; j < domain.size(); ++j)
                    for (size_t l = j; l < domain.size(); ++l) {
                        BigInt g = class_sum(domain[i], domain[j], domain[l]);
                        if (g > best.value) {
                            best.value = std::move(g);
                            best.witness = Triple{domain[i], domain[j], domain[l]};
                        }
                    }
            }
            per_outer[i] = std::move(best);
        };
        parallel_for(domain.size(), threads, work);
        for (auto& b : per_outer)
            if (b.value > result.value || !result.witness) {
                result.value = b.value;
                result.witness = b.witness;
            }
        return result;
    }

    /// Runs body(i) for i in [0, count) on a worker pool; `threads` = 0 means
    /// all hardware threads.
    template <typename Body>
    static void parallel_for(size_t count, unsigned threads, Body&& body) {
        if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
        threads = static_cast<unsigned>(std::min<size_t>(threads, std::max<size_t>(count, 1)));
        if (threads <= 1) {
            for (size_t i = 0; i < count; ++i) body(i);
            return;
        }
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        std::exception_ptr error;
        std::mutex error_mutex;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back([&] {
                try {
                    for (size_t i = next++; i < count; i = next++) body(i);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error) error = std::current_exception();
                    next = count;
                }
            });
        for (auto& th : pool) th.join();
        if (error) std::rethrow_exception(error);
    }

    size_t cache_hits() const { return memo_.hits(); }

    static constexpr int kFastPathMaxN = 24;

private:
    const std::vector<int128>& class_sizes_i128(int n) {
        std::lock_guard lock(sizes_mutex_);
        auto& v = small_sizes_[n];
        if (v.empty())
            for (const auto& c : chars_.class_sizes(n)) v.push_back(to_int128(c));
        return v;
    }

    static int128 to_int128(const BigInt& b) {
        int128 r = 0;
        BigInt mag = abs(b);
        r = static_cast<int128>(static_cast<uint64_t>(mag >> 64)) << 64;
        r += static_cast<uint64_t>(mag & BigInt(UINT64_MAX));
        return b < 0 ? -r : r;
    }

    static BigInt from_int128(int128 v) {
        bool neg = v < 0;
        uint128 u = neg ? static_cast<uint128>(-(v + 1)) + 1 : static_cast<uint128>(v);
        BigInt r = static_cast<uint64_t>(u >> 64);
        r <<= 64;
        r += static_cast<uint64_t>(u);
        return neg ? BigInt(-r) : r;
    }

    CharacterStore& chars_;
    ConcurrentMemo<BigInt> memo_;
    std::mutex sizes_mutex_;
    std::map<int, std::vector<int128>> small_sizes_;
};

}  // namespace kroncalc
