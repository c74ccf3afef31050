// Exact integer / rational scalar types used throughout the census.
// All lattice arithmetic is exact; nothing in the core ever touches
// floating point (the display-only h column is formatted elsewhere).
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace g2census {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using boost::multiprecision::abs;
using boost::multiprecision::gcd;

inline int sgn(const Int& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

// Floor division (cpp_int operator/ truncates toward zero).
inline Int floordiv(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Int mod_floor(const Int& a, const Int& b) { return a - floordiv(a, b) * b; }

// gcd of a whole sequence (0 for the empty sequence).
inline Int gcd_all(const std::vector<Int>& xs) {
    Int g = 0;
    for (const Int& x : xs) g = gcd(g, abs(x));
    return g;
}

// True iff x is a perfect square; root receives the non-negative root.
inline bool is_square(const Int& x, Int& root) {
    if (x < 0) return false;
    root = boost::multiprecision::sqrt(x);
    return root * root == x;
}

inline bool is_prime(const Int& p) {
    if (p < 2) return false;
    for (Int f = 2; f * f <= p; ++f)
        if (p % f == 0) return false;
    return true;
}

// Nearest integer to a rational (ties round up).
inline Int round_rat(const Rat& r) {
    Int num = numerator(r), den = denominator(r);  // den > 0
    return floordiv(2 * num + den, 2 * den);
}

inline std::string to_string(const Int& x) { return x.str(); }

}  // namespace g2census
