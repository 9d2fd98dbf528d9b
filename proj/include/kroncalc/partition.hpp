#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace kroncalc {

/// Integer partition: weakly decreasing positive parts. The empty partition
/// (no parts) is the unique partition of zero.
class Partition {
public:
    Partition() = default;

    /// Validates that `parts` is weakly decreasing and positive. Trailing
    /// zeros are stripped so that padded vectors are accepted.
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (size_t i = 0; i < parts_.size(); ++i) {
            require(parts_[i] > 0, "partition parts must be positive");
            require(i == 0 || parts_[i - 1] >= parts_[i], "partition parts must be weakly decreasing");
        }
        size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// Sorts an arbitrary multiset of non-negative parts into a partition.
    static Partition from_multiset(std::vector<int> parts) {
        std::sort(parts.begin(), parts.end(), std::greater<>());
        return Partition(std::move(parts));
    }

    /// Parses "4,3,1", "4,2^3" (exponent form), or "" for the empty partition.
    static Partition parse(std::string_view text);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    /// i-th part (0-indexed), zero past the end.
    int operator[](size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
    int first() const { return (*this)[0]; }

    /// Canonical text form: comma-separated decreasing parts.
    std::string str() const {
        std::string s;
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(parts_[i]);
        }
        return s;
    }

    /// Compact byte encoding used as a hash key.
    std::string key() const {
        std::string k;
        k.reserve(parts_.size() + 1);
        for (int p : parts_) {
            if (p < 255) {
                k.push_back(static_cast<char>(p));
            } else {
                k.push_back(static_cast<char>(255));
                k += std::to_string(p);
                k.push_back(';');
            }
        }
        return k;
    }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// Enumeration order: by size, then reverse-lexicographic within a size.
inline bool graded_revlex_less(const Partition& a, const Partition& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.parts() > b.parts();
}

struct SkewShape {
    Partition outer;
    Partition inner;

    SkewShape(Partition o, Partition i);
    int size() const { return outer.size() - inner.size(); }
    std::string str() const { return outer.str() + "/" + inner.str(); }
};

inline Partition conjugate(const Partition& p) {
    std::vector<int> c(static_cast<size_t>(p.first()), 0);
    for (int part : p.parts())
        for (int j = 0; j < part; ++j) ++c[static_cast<size_t>(j)];
    return Partition(std::move(c));
}

inline Partition add(const Partition& a, const Partition& b) {
    size_t len = std::max(a.parts().size(), b.parts().size());
    std::vector<int> r(len);
    for (size_t i = 0; i < len; ++i) r[i] = a[i] + b[i];
    return Partition(std::move(r));
}

/// Multiset union of parts; agrees with (a' + b')'.
inline Partition union_of(const Partition& a, const Partition& b) {
    std::vector<int> r = a.parts();
    r.insert(r.end(), b.parts().begin(), b.parts().end());
    return Partition::from_multiset(std::move(r));
}

/// d * p, every part scaled.
inline Partition scale(const Partition& p, int d) {
    if (d == 0) return {};
    std::vector<int> r = p.parts();
    for (int& x : r) x *= d;
    return Partition(std::move(r));
}

/// Side of the Durfee square: max{k : p_k >= k}.
inline int durfee(const Partition& p) {
    int d = 0;
    while (d < p.length() && p[static_cast<size_t>(d)] >= d + 1) ++d;
    return d;
}

/// True iff inner_i <= outer_i for all i.
inline bool contains(const Partition& inner, const Partition& outer) {
    if (inner.length() > outer.length()) return false;
    for (size_t i = 0; i < inner.parts().size(); ++i)
        if (inner[i] > outer[i]) return false;
    return true;
}

inline bool is_self_conjugate(const Partition& p) { return conjugate(p) == p; }

inline SkewShape::SkewShape(Partition o, Partition i) : outer(std::move(o)), inner(std::move(i)) {
    require(contains(inner, outer), "skew shape " + outer.str() + "/" + inner.str() + ": inner not contained in outer");
}

/// (a^b): b rows of length a.
inline Partition rectangle(int a, int b) {
    if (a == 0 || b == 0) return {};
    return Partition(std::vector<int>(static_cast<size_t>(b), a));
}

struct EnumerationConstraints {
    std::optional<int> max_length;
    std::optional<int> max_durfee;
    bool self_conjugate = false;
};

namespace detail {

inline void enumerate_rec(int remaining, int max_part, std::vector<int>& cur, const EnumerationConstraints& c,
                          std::vector<Partition>& out) {
    if (remaining == 0) {
        Partition p(cur);
        if (c.max_durfee && durfee(p) > *c.max_durfee) return;
        if (c.self_conjugate && !is_self_conjugate(p)) return;
        out.push_back(std::move(p));
        return;
    }
    if (c.max_length && static_cast<int>(cur.size()) >= *c.max_length) return;
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        // Durfee grows only when the new row reaches the current square side + 1.
        if (c.max_durfee && part >= static_cast<int>(cur.size()) + 1 &&
            static_cast<int>(cur.size()) + 1 > *c.max_durfee)
            continue;
        cur.push_back(part);
        enumerate_rec(remaining - part, part, cur, c, out);
        cur.pop_back();
    }
}

}  // namespace detail

/// All partitions of n satisfying the constraints, in reverse-lexicographic
/// order ((n) first, (1^n) last).
inline std::vector<Partition> enumerate(int n, const EnumerationConstraints& c = {}) {
    require(n >= 0, "cannot enumerate partitions of a negative integer");
    std::vector<Partition> out;
    std::vector<int> cur;
    detail::enumerate_rec(n, n, cur, c, out);
    return out;
}

/// All partitions gamma (of any size) with gamma ⊆ outer, graded order.
inline std::vector<Partition> enumerate_contained(const Partition& outer) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(size_t)> rec = [&](size_t row) {
        out.emplace_back(cur);
        if (row >= outer.parts().size()) return;
        int cap = std::min(outer[row], row == 0 ? outer[0] : cur.back());
        for (int v = cap; v >= 1; --v) {
            cur.push_back(v);
            rec(row + 1);
            cur.pop_back();
        }
    };
    rec(0);
    std::sort(out.begin(), out.end(), graded_revlex_less);
    return out;
}

/// Weak compositions of n into exactly k parts, lexicographically decreasing.
inline std::vector<std::vector<int>> weak_compositions(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k == 0) {
        if (n == 0) out.emplace_back();
        return out;
    }
    std::vector<int> cur(static_cast<size_t>(k), 0);
    std::function<void(int, int)> rec = [&](int idx, int rem) {
        if (idx == k - 1) {
            cur[static_cast<size_t>(idx)] = rem;
            out.push_back(cur);
            return;
        }
        for (int v = rem; v >= 0; --v) {
            cur[static_cast<size_t>(idx)] = v;
            rec(idx + 1, rem - v);
        }
    };
    rec(0, n);
    return out;
}

inline Partition Partition::parse(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
        return s;
    };
    auto to_int = [&](std::string_view s) {
        s = trim(s);
        require(!s.empty(), "malformed partition '" + std::string(text) + "': empty part");
        long v = 0;
        for (char ch : s) {
            require(ch >= '0' && ch <= '9', "malformed partition '" + std::string(text) + "': unexpected '" +
                                                std::string(1, ch) + "'");
            v = v * 10 + (ch - '0');
            require(v <= 1'000'000, "malformed partition '" + std::string(text) + "': part too large");
        }
        return static_cast<int>(v);
    };
    text = trim(text);
    if (text.empty() || text == "()" || text == "0") return {};
    if (text.front() == '(' && text.back() == ')') text = text.substr(1, text.size() - 2);
    std::vector<int> parts;
    size_t start = 0;
    while (start <= text.size()) {
        size_t comma = text.find(',', start);
        std::string_view tok = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        size_t caret = tok.find('^');
        if (caret == std::string_view::npos) {
            parts.push_back(to_int(tok));
        } else {
            int value = to_int(tok.substr(0, caret));
            int reps = to_int(tok.substr(caret + 1));
            parts.insert(parts.end(), static_cast<size_t>(reps), value);
        }
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    for (size_t i = 1; i < parts.size(); ++i)
        require(parts[i - 1] >= parts[i], "malformed partition '" + std::string(text) + "': parts must be weakly decreasing");
    return Partition(std::move(parts));
}

}  // namespace kroncalc

template <>
struct std::hash<kroncalc::Partition> {
    size_t operator()(const kroncalc::Partition& p) const noexcept { return std::hash<std::string>()(p.key()); }
};
