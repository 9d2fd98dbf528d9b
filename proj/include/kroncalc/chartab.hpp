#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "bigint.hpp"
#include "json.hpp"
#include "memo.hpp"
#include "partition.hpp"

namespace kroncalc {

/// Feasibility guards. Every limit is a largest allowed n.
struct Limits {
    int table_max_n = 40;    // anything touching characters of S_n
    int scan_max_n = 14;     // exhaustive scans over triples
    int diag_scan_max_n = 20;  // scans over g(λ,λ,λ)
    int confirm_max_n = 16;  // numeric confirmation of certificates

    /// Raises (or lowers) every guard to `n`.
    static Limits uniform(int n) { return {n, n, n, n}; }
};

/// Order of the centralizer of a permutation with cycle type rho.
inline BigInt centralizer_order(const Partition& rho) {
    BigInt z = 1;
    const auto& p = rho.parts();
    for (size_t i = 0; i < p.size();) {
        size_t j = i;
        while (j < p.size() && p[j] == p[i]) ++j;
        auto mult = static_cast<int>(j - i);
        z *= ipow(BigInt(p[i]), static_cast<unsigned>(mult)) * factorial(mult);
        i = j;
    }
    return z;
}

/// Number of permutations of cycle type rho: n!/z_rho.
inline BigInt class_size(const Partition& rho) { return factorial(rho.size()) / centralizer_order(rho); }

/// (-1)^(n - ℓ(rho)).
inline int sign(const Partition& rho) { return ((rho.size() - rho.length()) % 2) ? -1 : 1; }

/// f^λ by the hook-length formula.
inline BigInt hook_length_dimension(const Partition& lambda) {
    Partition conj = conjugate(lambda);
    BigInt hooks = 1;
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda[static_cast<size_t>(i)]; ++j)
            hooks *= (lambda[static_cast<size_t>(i)] - j - 1) + (conj[static_cast<size_t>(j)] - i - 1) + 1;
    return factorial(lambda.size()) / hooks;
}

namespace detail {

struct RimHookRemoval {
    Partition remainder;
    int sign;
};

/// All ways to strip a border strip of length r from lambda, via beta-sets:
/// moving a bead from b to b - r onto an empty position.
inline std::vector<RimHookRemoval> remove_rim_hooks(const Partition& lambda, int r) {
    std::vector<RimHookRemoval> out;
    const int len = lambda.length();
    std::vector<int> beta(static_cast<size_t>(len));
    for (int i = 0; i < len; ++i) beta[static_cast<size_t>(i)] = lambda[static_cast<size_t>(i)] + (len - 1 - i);
    std::vector<char> occupied(static_cast<size_t>(len ? beta[0] + 1 : 1), 0);
    for (int b : beta) occupied[static_cast<size_t>(b)] = 1;
    for (int i = 0; i < len; ++i) {
        int from = beta[static_cast<size_t>(i)];
        int to = from - r;
        if (to < 0 || occupied[static_cast<size_t>(to)]) continue;
        int height = 0;
        for (int b = to + 1; b < from; ++b) height += occupied[static_cast<size_t>(b)];
        std::vector<int> nb = beta;
        nb[static_cast<size_t>(i)] = to;
        std::sort(nb.begin(), nb.end(), std::greater<>());
        std::vector<int> parts(static_cast<size_t>(len));
        for (int j = 0; j < len; ++j) parts[static_cast<size_t>(j)] = nb[static_cast<size_t>(j)] - (len - 1 - j);
        out.push_back({Partition(std::move(parts)), (height % 2) ? -1 : 1});
    }
    return out;
}

inline std::string pair_key(const Partition& a, const Partition& b) {
    std::string k = a.key();
    k.push_back('\0');
    k += b.key();
    return k;
}

}  // namespace detail

/// Full character table of S_n, rows and columns in enumeration order.
class CharacterTable {
public:
    CharacterTable(int n, std::vector<Partition> partitions, std::vector<std::vector<BigInt>> values)
        : n_(n), partitions_(std::move(partitions)), values_(std::move(values)) {
        for (size_t i = 0; i < partitions_.size(); ++i) index_.emplace(partitions_[i], i);
    }

    int n() const { return n_; }
    const std::vector<Partition>& partitions() const { return partitions_; }
    const BigInt& at(size_t lambda, size_t rho) const { return values_[lambda][rho]; }
    const std::vector<BigInt>& row(size_t lambda) const { return values_[lambda]; }
    size_t index_of(const Partition& p) const {
        auto it = index_.find(p);
        require(it != index_.end(), "partition " + p.str() + " is not a partition of " + std::to_string(n_));
        return it->second;
    }

    /// Column orthogonality: Σ_λ χ^λ(ρ)χ^λ(σ) = z_ρ δ_{ρσ}. Implies Σ_λ (f^λ)² = n!.
    bool verify_orthogonality() const {
        const size_t p = partitions_.size();
        if (values_.size() != p) return false;
        for (const auto& r : values_)
            if (r.size() != p) return false;
        for (size_t a = 0; a < p; ++a) {
            BigInt z = centralizer_order(partitions_[a]);
            for (size_t b = a; b < p; ++b) {
                BigInt s = 0;
                for (size_t l = 0; l < p; ++l) s += values_[l][a] * values_[l][b];
                if (s != (a == b ? z : BigInt(0))) return false;
            }
        }
        return true;
    }

    nlohmann::json to_json() const {
        nlohmann::json entries = nlohmann::json::array();
        for (size_t i = 0; i < partitions_.size(); ++i)
            for (size_t j = 0; j < partitions_.size(); ++j)
                entries.push_back({{"lambda", partitions_[i].str()},
                                   {"rho", partitions_[j].str()},
                                   {"value", values_[i][j].str()}});
        return {{"version", 1}, {"n", n_}, {"entries", std::move(entries)}};
    }

    /// Parses a cache document; throws InvalidInput on any schema problem or
    /// if the table fails the orthogonality check.
    static CharacterTable from_json(const nlohmann::json& doc) {
        require(doc.is_object() && doc.value("version", 0) == 1, "character cache: unsupported version");
        int n = doc.at("n").get<int>();
        require(n >= 0, "character cache: negative n");
        auto parts = enumerate(n);
        std::map<Partition, size_t> idx;
        for (size_t i = 0; i < parts.size(); ++i) idx.emplace(parts[i], i);
        std::vector<std::vector<std::optional<BigInt>>> slots(parts.size(), std::vector<std::optional<BigInt>>(parts.size()));
        for (const auto& e : doc.at("entries")) {
            auto lam = Partition::parse(e.at("lambda").get<std::string>());
            auto rho = Partition::parse(e.at("rho").get<std::string>());
            require(lam.size() == n && rho.size() == n, "character cache: entry of wrong size");
            slots[idx.at(lam)][idx.at(rho)] = parse_bigint(e.at("value").get<std::string>());
        }
        std::vector<std::vector<BigInt>> values(parts.size(), std::vector<BigInt>(parts.size()));
        for (size_t i = 0; i < parts.size(); ++i)
            for (size_t j = 0; j < parts.size(); ++j) {
                require(slots[i][j].has_value(), "character cache: missing entry");
                values[i][j] = *slots[i][j];
            }
        CharacterTable table(n, std::move(parts), std::move(values));
        require(table.verify_orthogonality(), "character cache: orthogonality check failed");
        return table;
    }

private:
    int n_;
    std::vector<Partition> partitions_;
    std::vector<std::vector<BigInt>> values_;
    std::map<Partition, size_t> index_;
};

/// Character values of λ over all classes of S_n, with an int64 copy when
/// every value fits (used by the fast Kronecker path).
struct CharacterRow {
    std::vector<BigInt> values;
    std::vector<int64_t> small;
    bool fits_int64 = false;
};

/// Memoized Murnaghan–Nakayama evaluator with optional on-disk table cache.
/// Safe for concurrent use.
class CharacterStore {
public:
    explicit CharacterStore(Limits limits = {}, std::optional<std::filesystem::path> cache_dir = std::nullopt)
        : limits_(limits), cache_dir_(std::move(cache_dir)) {}

    const Limits& limits() const { return limits_; }
    void set_limits(const Limits& l) { limits_ = l; }
    const std::optional<std::filesystem::path>& cache_dir() const { return cache_dir_; }

    void guard(int n) const {
        if (n > limits_.table_max_n)
            throw InfeasibleError("n = " + std::to_string(n) + " exceeds the character-table guard (" +
                                  std::to_string(limits_.table_max_n) + "); pass --max-n to override");
    }

    /// χ^λ(ρ). Cycles are consumed largest-first.
    BigInt character(const Partition& lambda, const Partition& rho) {
        require(lambda.size() == rho.size(), "character: |lambda| = " + std::to_string(lambda.size()) +
                                                 " but |rho| = " + std::to_string(rho.size()));
        guard(lambda.size());
        maybe_load(lambda.size());
        return character_rec(lambda, rho);
    }

    /// f^λ by hook lengths, cross-checked against χ^λ(1^n).
    BigInt dimension(const Partition& lambda) {
        BigInt hooks = hook_length_dimension(lambda);
        if (hooks != character(lambda, rectangle(1, lambda.size())))
            throw InternalError("dimension of " + lambda.str() + ": hook-length and character values disagree");
        return hooks;
    }

    const std::vector<Partition>& classes(int n) {
        std::lock_guard lock(aux_mutex_);
        auto& v = classes_[n];
        if (v.empty()) v = enumerate(n);
        return v;
    }

    const std::vector<BigInt>& class_sizes(int n) {
        const auto& cls = classes(n);
        std::lock_guard lock(aux_mutex_);
        auto& v = class_sizes_[n];
        if (v.empty())
            for (const auto& c : cls) v.push_back(class_size(c));
        return v;
    }

    std::shared_ptr<const CharacterRow> row(const Partition& lambda) {
        guard(lambda.size());
        {
            std::lock_guard lock(aux_mutex_);
            auto it = rows_.find(lambda);
            if (it != rows_.end()) {
                ++row_hits_;
                return it->second;
            }
        }
        maybe_load(lambda.size());
        auto r = std::make_shared<CharacterRow>();
        const auto& cls = classes(lambda.size());
        r->values.reserve(cls.size());
        r->fits_int64 = true;
        for (const auto& rho : cls) {
            r->values.push_back(character_rec(lambda, rho));
            if (r->values.back() > INT64_MAX || r->values.back() < INT64_MIN) r->fits_int64 = false;
        }
        if (r->fits_int64)
            for (const auto& v : r->values) r->small.push_back(static_cast<int64_t>(v));
        std::lock_guard lock(aux_mutex_);
        return rows_.try_emplace(lambda, std::move(r)).first->second;
    }

    /// Full table for S_n; read from / written to the cache directory when set.
    std::shared_ptr<const CharacterTable> table(int n) {
        guard(n);
        maybe_load(n);
        {
            std::lock_guard lock(aux_mutex_);
            if (auto it = tables_.find(n); it != tables_.end()) return it->second;
        }
        const auto cls = classes(n);
        std::vector<std::vector<BigInt>> values;
        values.reserve(cls.size());
        for (const auto& lam : cls) values.push_back(row(lam)->values);
        auto t = std::make_shared<const CharacterTable>(n, cls, std::move(values));
        {
            std::lock_guard lock(aux_mutex_);
            t = tables_.try_emplace(n, t).first->second;
        }
        if (cache_dir_) save(*t);
        return t;
    }

    /// Memo and row hits since construction.
    size_t cache_hits() const {
        std::lock_guard lock(aux_mutex_);
        return memo_.hits() + row_hits_ + loaded_tables_;
    }

    size_t memo_size() const { return memo_.size(); }

    static std::string cache_file_name(int n) { return "chartab_" + std::to_string(n) + ".json"; }

private:
    BigInt character_rec(const Partition& lambda, const Partition& rho) {
        if (rho.empty()) return 1;
        if (lambda.length() == 1) return 1;  // trivial character
        std::string key = detail::pair_key(lambda, rho);
        if (auto hit = memo_.find(key)) return *hit;
        std::vector<int> rest(rho.parts().begin() + 1, rho.parts().end());
        Partition tail(std::move(rest));
        BigInt total = 0;
        for (const auto& rm : detail::remove_rim_hooks(lambda, rho.first())) {
            BigInt sub = character_rec(rm.remainder, tail);
            if (rm.sign < 0) total -= sub;
            else total += sub;
        }
        return memo_.insert(key, std::move(total));
    }

    void maybe_load(int n) {
        if (!cache_dir_) return;
        {
            std::lock_guard lock(aux_mutex_);
            if (!load_attempted_.insert(n).second) return;
        }
        auto path = *cache_dir_ / cache_file_name(n);
        std::error_code ec;
        if (!std::filesystem::exists(path, ec)) return;
        try {
            std::ifstream in(path);
            auto doc = nlohmann::json::parse(in);
            auto t = std::make_shared<const CharacterTable>(CharacterTable::from_json(doc));
            if (t->n() != n) return;
            const auto& parts = t->partitions();
            for (size_t i = 0; i < parts.size(); ++i)
                for (size_t j = 0; j < parts.size(); ++j) memo_.insert(detail::pair_key(parts[i], parts[j]), t->at(i, j));
            std::lock_guard lock(aux_mutex_);
            tables_.try_emplace(n, std::move(t));
            ++loaded_tables_;
        } catch (const std::exception&) {
            // An untrusted or corrupt file is ignored and overwritten on the next save.
        }
    }

    void save(const CharacterTable& t) const {
        std::error_code ec;
        std::filesystem::create_directories(*cache_dir_, ec);
        auto path = *cache_dir_ / cache_file_name(t.n());
        auto tmp = path;
        tmp += ".tmp";
        {
            std::ofstream out(tmp);
            if (!out) return;
            out << t.to_json().dump() << '\n';
        }
        std::filesystem::rename(tmp, path, ec);
    }

    Limits limits_;
    std::optional<std::filesystem::path> cache_dir_;
    ConcurrentMemo<BigInt> memo_;
    mutable std::mutex aux_mutex_;
    std::map<int, std::vector<Partition>> classes_;
    std::map<int, std::vector<BigInt>> class_sizes_;
    std::unordered_map<Partition, std::shared_ptr<const CharacterRow>> rows_;
    std::map<int, std::shared_ptr<const CharacterTable>> tables_;
    std::set<int> load_attempted_;
    size_t row_hits_ = 0;
    size_t loaded_tables_ = 0;
};

}  // namespace kroncalc
