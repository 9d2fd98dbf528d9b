#pragma once

// Brute-force reference computations used to cross-check the library.
// Nothing here calls the Murnaghan-Nakayama recursion, Pieri chains or the
// lattice-word search.

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "kroncalc/bigint.hpp"
#include "kroncalc/partition.hpp"

namespace oracle {

using kroncalc::BigInt;
using kroncalc::Partition;
using kroncalc::Rational;

/// Number of standard Young tableaux, by removing corners one at a time.
inline BigInt count_syt(const Partition& p) {
    static std::map<std::vector<int>, BigInt> memo;
    if (p.size() <= 1) return 1;
    if (auto it = memo.find(p.parts()); it != memo.end()) return it->second;
    BigInt total = 0;
    auto parts = p.parts();
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i + 1 < parts.size() && parts[i + 1] == parts[i]) continue;
        auto q = parts;
        --q[i];
        total += count_syt(Partition(q));
    }
    memo[p.parts()] = total;
    return total;
}

/// Semistandard fillings of outer/inner with the given content, cell by cell.
inline BigInt count_ssyt(const Partition& outer, const Partition& inner, const std::vector<int>& content) {
    struct Cell {
        int r, c;
    };
    std::vector<Cell> cells;
    for (int r = 0; r < outer.length(); ++r)
        for (int c = inner[r]; c < outer[r]; ++c) cells.push_back({r, c});
    if (static_cast<int>(cells.size()) != std::accumulate(content.begin(), content.end(), 0)) return 0;
    std::vector<std::vector<int>> grid(outer.length());
    for (int r = 0; r < outer.length(); ++r) grid[r].assign(outer[r], 0);
    std::vector<int> left = content;
    BigInt count = 0;
    auto rec = [&](auto&& self, size_t i) -> void {
        if (i == cells.size()) {
            ++count;
            return;
        }
        auto [r, c] = cells[i];
        int lo = 1;
        if (c > inner[r]) lo = std::max(lo, grid[r][c - 1]);
        if (r > 0 && c >= inner[r - 1]) lo = std::max(lo, grid[r - 1][c] + 1);
        for (int v = lo; v <= static_cast<int>(content.size()); ++v) {
            if (left[v - 1] == 0) continue;
            --left[v - 1];
            grid[r][c] = v;
            self(self, i + 1);
            ++left[v - 1];
        }
        grid[r][c] = 0;
    };
    rec(rec, 0);
    return count;
}

/// Fixed points of a permutation of cycle type rho on row-words of content mu:
/// ways to send each cycle to a row so that row i receives exactly mu_i points.
inline BigInt permutation_character(const Partition& mu, const Partition& rho) {
    std::vector<int> left = mu.parts();
    BigInt count = 0;
    auto rec = [&](auto&& self, size_t i) -> void {
        if (i == rho.parts().size()) {
            ++count;
            return;
        }
        for (auto& l : left)
            if (l >= rho.parts()[i]) {
                l -= rho.parts()[i];
                self(self, i + 1);
                l += rho.parts()[i];
            }
    };
    rec(rec, 0);
    return count;
}

/// Character table of S_n by inverting M^mu = sum_lambda K_{lambda mu} chi^lambda.
/// Indexed [lambda][rho] over kroncalc::enumerate(n) (reverse-lex order).
class Characters {
public:
    explicit Characters(int n) : parts_(kroncalc::enumerate(n)) {
        const size_t p = parts_.size();
        table_.assign(p, std::vector<BigInt>(p, 0));
        for (size_t j = 0; j < p; ++j) {
            for (size_t c = 0; c < p; ++c) table_[j][c] = permutation_character(parts_[j], parts_[c]);
            for (size_t i = 0; i < j; ++i) {
                BigInt k = count_ssyt(parts_[i], Partition(), parts_[j].parts());
                if (k == 0) continue;
                for (size_t c = 0; c < p; ++c) table_[j][c] -= k * table_[i][c];
            }
        }
    }

    const std::vector<Partition>& partitions() const { return parts_; }

    size_t index(const Partition& p) const {
        return static_cast<size_t>(std::find(parts_.begin(), parts_.end(), p) - parts_.begin());
    }

    const BigInt& operator()(const Partition& lambda, const Partition& rho) const {
        return table_[index(lambda)][index(rho)];
    }

private:
    std::vector<Partition> parts_;
    std::vector<std::vector<BigInt>> table_;
};

inline Partition cycle_type(const std::vector<int>& perm) {
    std::vector<bool> seen(perm.size(), false);
    std::vector<int> lens;
    for (size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (size_t j = i; !seen[j]; j = static_cast<size_t>(perm[j])) {
            seen[j] = true;
            ++len;
        }
        lens.push_back(len);
    }
    return Partition::from_multiset(lens);
}

/// g(lambda, mu, nu) as an average over every permutation of S_n.
inline BigInt kron_by_permutations(const Characters& chi, const Partition& a, const Partition& b, const Partition& c) {
    const int n = a.size();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    BigInt sum = 0;
    do {
        Partition rho = cycle_type(perm);
        sum += chi(a, rho) * chi(b, rho) * chi(c, rho);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return sum / kroncalc::factorial(n);
}

inline BigInt centralizer(const Partition& rho) {
    BigInt z = 1;
    std::map<int, int> mult;
    for (int p : rho.parts()) ++mult[p];
    for (auto [p, m] : mult) z *= kroncalc::ipow(BigInt(p), static_cast<unsigned>(m)) * kroncalc::factorial(m);
    return z;
}

/// c^lambda_{mu nu} = sum over rho1, rho2 of chi^lambda(rho1 ∪ rho2) chi^mu(rho1) chi^nu(rho2) / (z_rho1 z_rho2).
inline BigInt lr_by_characters(const Partition& lambda, const Partition& mu, const Partition& nu) {
    Characters cl(lambda.size()), cm(mu.size()), cn(nu.size());
    Rational sum = 0;
    for (const auto& r1 : cm.partitions())
        for (const auto& r2 : cn.partitions()) {
            Partition r = kroncalc::union_of(r1, r2);
            sum += Rational(cl(lambda, r) * cm(mu, r1) * cn(nu, r2), centralizer(r1) * centralizer(r2));
        }
    if (denominator(sum) != 1) throw std::logic_error("non-integral LR oracle value");
    return numerator(sum);
}

/// Every k x k x k array of non-negative integers whose axis sums are all a.
inline BigInt count_contingency(int k, int a) {
    const int cells = k * k * k;
    std::vector<int> v(cells, 0);
    BigInt count = 0;
    auto ok = [&] {
        for (int axis = 0; axis < 3; ++axis)
            for (int s = 0; s < k; ++s) {
                int total = 0;
                for (int i = 0; i < k; ++i)
                    for (int j = 0; j < k; ++j) {
                        int idx[3];
                        idx[axis] = s;
                        idx[(axis + 1) % 3] = i;
                        idx[(axis + 2) % 3] = j;
                        total += v[(idx[0] * k + idx[1]) * k + idx[2]];
                    }
                if (total != a) return false;
            }
        return true;
    };
    auto rec = [&](auto&& self, int i, int left) -> void {
        if (i == cells - 1) {
            v[i] = left;
            if (ok()) ++count;
            return;
        }
        for (int x = 0; x <= std::min(left, a); ++x) {
            v[i] = x;
            self(self, i + 1, left - x);
        }
    };
    rec(rec, 0, k * a);
    return count;
}

}  // namespace oracle
