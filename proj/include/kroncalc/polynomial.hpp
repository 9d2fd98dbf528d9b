#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "errors.hpp"

namespace kroncalc {

using Exponent = std::vector<int>;

/// Sparse polynomial in a fixed number of variables with big-integer
/// coefficients. Zero coefficients are never stored.
class Polynomial {
public:
    explicit Polynomial(size_t vars = 0) : vars_(vars) {}

    static Polynomial constant(size_t vars, const BigInt& c) {
        Polynomial p(vars);
        p.add_term(Exponent(vars, 0), c);
        return p;
    }

    size_t variables() const { return vars_; }
    const std::map<Exponent, BigInt>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Exponent& e, const BigInt& c) {
        require(e.size() == vars_, "polynomial: exponent arity mismatch");
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    BigInt coefficient(const Exponent& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? BigInt(0) : it->second;
    }

    Polynomial& operator+=(const Polynomial& o) {
        require(o.vars_ == vars_, "polynomial: variable count mismatch");
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }

    /// Product, dropping every monomial rejected by `keep`.
    Polynomial multiply(const Polynomial& o, const std::function<bool(const Exponent&)>& keep = {}) const {
        require(o.vars_ == vars_, "polynomial: variable count mismatch");
        Polynomial out(vars_);
        Exponent e(vars_);
        for (const auto& [e1, c1] : terms_)
            for (const auto& [e2, c2] : o.terms_) {
                for (size_t i = 0; i < vars_; ++i) e[i] = e1[i] + e2[i];
                if (keep && !keep(e)) continue;
                out.add_term(e, c1 * c2);
            }
        return out;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }

private:
    size_t vars_;
    std::map<Exponent, BigInt> terms_;
};

}  // namespace kroncalc
