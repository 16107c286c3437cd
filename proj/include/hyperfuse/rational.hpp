#pragma once

// Exact rational arithmetic. Numbers are kept in canonical form
// (coprime numerator/denominator, denominator > 0) by the backing
// boost::multiprecision rational type.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "hyperfuse/error.hpp"

namespace hyperfuse {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline int sign(const Rational& r) { return r.sign(); }
inline int sign(const BigInt& n) { return n.sign(); }

inline Rational rat_abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

// floor(p/q) with correct behaviour for negative values.
inline BigInt rat_floor(const Rational& r) {
    BigInt q, rem;
    divide_qr(numerator(r), denominator(r), q, rem);
    if (rem != 0 && r < 0) --q;
    return q;
}

inline BigInt rat_ceil(const Rational& r) { return -rat_floor(-r); }

// Largest s with s*s <= n. Requires n >= 0.
inline BigInt isqrt(const BigInt& n) { return boost::multiprecision::sqrt(n); }

inline bool is_perfect_square(const BigInt& n, BigInt& root) {
    if (n < 0) return false;
    root = isqrt(n);
    return root * root == n;
}

// Exact square root of a nonnegative rational, if it is rational.
inline bool rational_sqrt(const Rational& r, Rational& out) {
    if (r < 0) return false;
    BigInt rn, rd;
    if (!is_perfect_square(numerator(r), rn)) return false;
    if (!is_perfect_square(denominator(r), rd)) return false;
    out = Rational(rn, rd);
    return true;
}

// Enclosure of sqrt(r) with width 2^-k: returns [s, s + 2^-k] with
// s = floor(sqrt(r * 4^k)) / 2^k. Requires r >= 0.
inline void sqrt_enclosure(const Rational& r, unsigned k, Rational& lo, Rational& hi) {
    BigInt two_k = BigInt(1) << k;
    BigInt four_k = two_k * two_k;
    BigInt t = rat_floor(r * four_k);
    BigInt s = isqrt(t);
    lo = Rational(s, two_k);
    hi = Rational(s + 1, two_k);
    if (lo * lo == r) hi = lo; // exact
}

inline Rational pow2(int e) {
    if (e >= 0) return Rational(BigInt(1) << e);
    return Rational(BigInt(1), BigInt(1) << (-e));
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline std::string to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

} // namespace hyperfuse
