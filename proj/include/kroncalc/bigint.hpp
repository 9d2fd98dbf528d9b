#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "errors.hpp"

namespace kroncalc {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt factorial(int n) {
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

inline BigInt binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

inline BigInt ipow(const BigInt& base, unsigned long long e) {
    BigInt result = 1, b = base;
    while (e) {
        if (e & 1) result *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return result;
}

inline Rational rpow(const Rational& base, unsigned long long e) {
    return Rational(ipow(numerator(base), e), ipow(denominator(base), e));
}

inline std::string to_decimal(const BigInt& v) { return v.str(); }

/// "p/q", or "p" when the denominator is one.
inline std::string to_fraction_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline BigInt parse_bigint(const std::string& s) {
    require(!s.empty(), "empty integer string");
    size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    require(i < s.size(), "malformed integer '" + s + "'");
    for (size_t j = i; j < s.size(); ++j)
        require(s[j] >= '0' && s[j] <= '9', "malformed integer '" + s + "'");
    return BigInt(s);
}

}  // namespace kroncalc
