#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace stsurf {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rat& r) { return rat_den(r) == 1; }

// Floor square root by Newton iteration. The iterate x_{k+1} = (x_k + n/x_k)/2 is
// monotone decreasing once x_k >= sqrt(n), so we start from a power of two above
// sqrt(n) and stop at the first non-decrease; the result is checked exactly.
inline Int isqrt_floor(const Int& n) {
    if (n < 0) throw std::domain_error("isqrt_floor: negative argument");
    if (n == 0) return 0;
    std::size_t bits = boost::multiprecision::msb(n) + 1;
    Int x = Int(1) << (bits / 2 + 1);
    for (;;) {
        Int y = (x + n / x) >> 1;
        if (y >= x) break;
        x = y;
    }
    if (!(x * x <= n && (x + 1) * (x + 1) > n))
        throw std::logic_error("isqrt_floor: iteration failed");
    return x;
}

// Exact perfect-square test; on success *root receives the witness.
inline bool is_perfect_square(const Int& n, Int* root = nullptr) {
    if (n < 0) return false;
    Int r = isqrt_floor(n);
    if (r * r != n) return false;
    if (root) *root = r;
    return true;
}

inline std::string to_dec(const Int& n) { return n.str(); }

} // namespace stsurf
