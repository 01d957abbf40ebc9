#pragma once

// Exact decisions for inequalities that involve n^(1/k). Nothing here
// touches floating point except the *_display helpers.

#include "evencycle/graph.hpp"

#include <cmath>

namespace evencycle {

inline BigInt ipow(BigInt base, std::size_t e) {
    BigInt r = 1;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

inline Rational rpow(const Rational& base, std::size_t e) {
    return Rational(ipow(boost::multiprecision::numerator(base), e),
                    ipow(boost::multiprecision::denominator(base), e));
}

/// floor(n^(1/k)) for n >= 0.
inline BigInt iroot_floor(const BigInt& n, std::size_t k) {
    if (n < 2 || k == 1) return n;
    BigInt lo = 0, hi = 1;
    while (ipow(hi, k) <= n) hi *= 2;
    while (hi - lo > 1) {
        BigInt mid = (lo + hi) / 2;
        if (ipow(mid, k) <= n) lo = mid;
        else hi = mid;
    }
    return lo;
}

/// Sign of x - n^(1/k), n >= 0.
inline int compare_with_root(const Rational& x, std::size_t k, const BigInt& n) {
    if (x < 0) return -1;
    const Rational lhs = rpow(x, k);
    if (lhs < n) return -1;
    if (lhs > n) return 1;
    return 0;
}

/// Smallest integer c with c >= n^(1+1/k) / 2, i.e. (2c)^k >= n^(k+1).
inline BigInt ceil_half_power(const BigInt& n, std::size_t k) {
    const BigInt target = ipow(n, k + 1);
    BigInt c = iroot_floor(target, k) / 2;
    while (ipow(2 * c, k) < target) ++c;
    while (c > 0 && ipow(2 * (c - 1), k) >= target) --c;
    return c;
}

inline double to_display(const Rational& r) { return static_cast<double>(r); }
inline double to_display(const BigInt& r) { return static_cast<double>(r); }

inline double root_display(double n, std::size_t k) { return std::pow(n, 1.0 / static_cast<double>(k)); }

} // namespace evencycle
