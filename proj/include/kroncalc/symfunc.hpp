#pragma once

#include <functional>
#include <numeric>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "memo.hpp"
#include "partition.hpp"

namespace kroncalc {

/// Sparse Schur expansion Σ c_λ s_λ, terms in enumeration order, zeros omitted.
using SchurExpansion = std::vector<std::pair<Partition, BigInt>>;

/// At most one cell per column: inner ⊆ outer and outer_{i+1} <= inner_i.
inline bool is_horizontal_strip(const Partition& outer, const Partition& inner) {
    if (!contains(inner, outer)) return false;
    for (size_t i = 0; i + 1 < outer.parts().size(); ++i)
        if (outer[i + 1] > inner[i]) return false;
    return true;
}

/// inner = λ^(0) ⊂ λ^(1) ⊂ … ⊂ λ^(r) = outer with horizontal-strip steps.
struct PieriChain {
    std::vector<Partition> steps;

    bool valid_for(const std::vector<int>& content) const {
        if (steps.size() != content.size() + 1) return false;
        for (size_t i = 1; i < steps.size(); ++i) {
            if (!is_horizontal_strip(steps[i], steps[i - 1])) return false;
            if (steps[i].size() - steps[i - 1].size() != content[i - 1]) return false;
        }
        return true;
    }
};

namespace detail {

/// Calls visit(κ') for every κ' with inner ⊆ κ' and κ/κ' a horizontal strip of `size` cells.
template <typename Visit>
void for_each_strip_removal(const Partition& kappa, const Partition& inner, int size, Visit&& visit) {
    const size_t len = kappa.parts().size();
    std::vector<int> cur(len);
    std::function<void(size_t, int)> rec = [&](size_t row, int remaining) {
        if (row == len) {
            if (remaining == 0) visit(Partition(cur));
            return;
        }
        int hi = kappa[row];
        int lo = std::max(kappa[row + 1], inner[row]);
        for (int v = hi; v >= lo; --v) {
            int removed = hi - v;
            if (removed > remaining) break;
            cur[row] = v;
            rec(row + 1, remaining - removed);
        }
    };
    rec(0, size);
}

inline void check_content(const std::vector<int>& content) {
    for (int a : content) require(a >= 0, "content entries must be non-negative");
}

}  // namespace detail

/// K_{λ/μ,α}: number of Pieri chains from μ to λ with strip sizes α_1, α_2, …
/// (α may be any weak composition).
inline BigInt skew_kostka(const SkewShape& shape, const std::vector<int>& content) {
    detail::check_content(content);
    int total = std::accumulate(content.begin(), content.end(), 0);
    require(total == shape.size(), "kostka: |" + shape.str() + "| = " + std::to_string(shape.size()) +
                                       " but content sums to " + std::to_string(total));
    std::unordered_map<std::string, BigInt> memo;
    std::function<BigInt(const Partition&, size_t)> rec = [&](const Partition& kappa, size_t steps) -> BigInt {
        if (steps == 0) return kappa == shape.inner ? BigInt(1) : BigInt(0);
        std::string key = kappa.key();
        key.push_back('\0');
        key += std::to_string(steps);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        BigInt count = 0;
        detail::for_each_strip_removal(kappa, shape.inner, content[steps - 1],
                                       [&](const Partition& next) { count += rec(next, steps - 1); });
        memo.emplace(std::move(key), count);
        return count;
    };
    return rec(shape.outer, content.size());
}

/// K_{λ,α}: semistandard tableaux of shape λ and content α.
inline BigInt kostka(const Partition& lambda, const std::vector<int>& content) {
    return skew_kostka(SkewShape(lambda, {}), content);
}

inline BigInt kostka(const Partition& lambda, const Partition& content) { return kostka(lambda, content.parts()); }

/// Every Pieri chain counted by skew_kostka, listed explicitly.
inline std::vector<PieriChain> pieri_chains(const SkewShape& shape, const std::vector<int>& content) {
    detail::check_content(content);
    require(std::accumulate(content.begin(), content.end(), 0) == shape.size(), "pieri_chains: size mismatch");
    std::vector<PieriChain> out;
    std::vector<Partition> stack{shape.outer};
    std::function<void(size_t)> rec = [&](size_t steps) {
        if (steps == 0) {
            if (stack.back() == shape.inner) out.push_back({std::vector<Partition>(stack.rbegin(), stack.rend())});
            return;
        }
        Partition top = stack.back();
        detail::for_each_strip_removal(top, shape.inner, content[steps - 1], [&](const Partition& next) {
            stack.push_back(next);
            rec(steps - 1);
            stack.pop_back();
        });
    };
    rec(content.size());
    return out;
}

/// A Littlewood–Richardson filling of λ/μ: rows[i] holds the entries of the
/// skew cells of row i, left to right.
using SkewFilling = std::vector<std::vector<int>>;

namespace detail {

/// Depth-first search over fillings of λ/μ in reverse reading order (rows top
/// to bottom, each right to left) keeping the word a lattice word.
template <typename Visit>
void lr_search(const Partition& lambda, const Partition& mu, const Partition& nu, Visit&& visit) {
    struct Cell {
        int row, col;
    };
    std::vector<Cell> cells;
    for (int r = 0; r < lambda.length(); ++r)
        for (int c = lambda[static_cast<size_t>(r)] - 1; c >= mu[static_cast<size_t>(r)]; --c) cells.push_back({r, c});
    const int values = nu.length();
    std::vector<std::vector<int>> grid(static_cast<size_t>(lambda.length()));
    for (int r = 0; r < lambda.length(); ++r) grid[static_cast<size_t>(r)].assign(static_cast<size_t>(lambda[static_cast<size_t>(r)]), 0);
    std::vector<int> count(static_cast<size_t>(values) + 2, 0);
    std::function<void(size_t)> rec = [&](size_t idx) {
        if (idx == cells.size()) {
            visit(grid);
            return;
        }
        auto [r, c] = cells[idx];
        const auto ur = static_cast<size_t>(r), uc = static_cast<size_t>(c);
        int hi = values;
        if (c + 1 < lambda[ur]) hi = std::min(hi, grid[ur][uc + 1]);
        int lo = 1;
        if (r > 0 && c >= mu[ur - 1]) lo = grid[ur - 1][uc] + 1;
        for (int v = lo; v <= hi; ++v) {
            auto uv = static_cast<size_t>(v);
            if (count[uv] + 1 > nu[uv - 1]) continue;
            if (v > 1 && count[uv] + 1 > count[uv - 1]) continue;
            ++count[uv];
            grid[ur][uc] = v;
            rec(idx + 1);
            --count[uv];
        }
        grid[ur][uc] = 0;
    };
    rec(0);
}

inline ConcurrentMemo<BigInt>& lr_memo() {
    static ConcurrentMemo<BigInt> memo;
    return memo;
}

}  // namespace detail

/// c^λ_{μν} by counting LR tableaux of shape λ/μ and content ν.
inline BigInt lr(const Partition& lambda, const Partition& mu, const Partition& nu) {
    require(lambda.size() == mu.size() + nu.size(), "lr: |lambda| = " + std::to_string(lambda.size()) +
                                                         " but |mu| + |nu| = " + std::to_string(mu.size() + nu.size()));
    if (!contains(mu, lambda) || !contains(nu, lambda)) return 0;
    if (nu.empty()) return lambda == mu ? 1 : 0;
    std::string key = lambda.key() + '\0' + mu.key() + '\0' + nu.key();
    return detail::lr_memo().get_or_compute(key, [&] {
        BigInt count = 0;
        detail::lr_search(lambda, mu, nu, [&](const auto&) { ++count; });
        return count;
    });
}

/// The LR tableaux themselves (entries of the skew cells only).
inline std::vector<SkewFilling> lr_tableaux(const Partition& lambda, const Partition& mu, const Partition& nu) {
    require(lambda.size() == mu.size() + nu.size(), "lr_tableaux: size mismatch");
    std::vector<SkewFilling> out;
    if (!contains(mu, lambda) || !contains(nu, lambda)) return out;
    detail::lr_search(lambda, mu, nu, [&](const std::vector<std::vector<int>>& grid) {
        SkewFilling f(grid.size());
        for (size_t r = 0; r < grid.size(); ++r)
            f[r].assign(grid[r].begin() + mu[r], grid[r].end());
        out.push_back(std::move(f));
    });
    return out;
}

/// s_μ · s_ν = Σ_λ c^λ_{μν} s_λ.
inline SchurExpansion schur_product(const Partition& mu, const Partition& nu) {
    SchurExpansion out;
    EnumerationConstraints c;
    c.max_length = mu.length() + nu.length();
    for (const auto& lambda : enumerate(mu.size() + nu.size(), c)) {
        if (!contains(mu, lambda) || !contains(nu, lambda)) continue;
        BigInt v = lr(lambda, mu, nu);
        if (v != 0) out.emplace_back(lambda, std::move(v));
    }
    return out;
}

}  // namespace kroncalc
