#pragma once

#include <gmpxx.h>

#include <string>

namespace rootlat {

using Int = mpz_class;
using Rat = mpq_class;

// gmpxx has no long long constructors; on this platform long is 64-bit.
inline Int int_of(long long v) { return Int(static_cast<long>(v)); }
inline Rat rat_of(long long v) { return Rat(static_cast<long>(v)); }
inline Rat rat_frac(long long num, long long den) {
    Rat r(static_cast<long>(num), static_cast<long>(den));
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

// "p/q", or just "p" when q = 1.
inline std::string rat_to_string(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// Largest multiple of 2^-prec_bits that is <= x (rounds toward -inf).
Rat dyadic_floor(const Rat& x, long prec_bits);
// Smallest multiple of 2^-prec_bits that is >= x (rounds toward +inf).
Rat dyadic_ceil(const Rat& x, long prec_bits);

}  // namespace rootlat
