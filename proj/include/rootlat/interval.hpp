#pragma once

#include "rootlat/numtheory.hpp"
#include "rootlat/rational.hpp"

namespace rootlat {

// Certified real enclosure with dyadic endpoints, lo <= v <= hi.
struct RealInterval {
    Rat lo;
    Rat hi;

    Rat width() const { return hi - lo; }
    Rat midpoint() const { return (lo + hi) / 2; }
    bool contains_zero() const { return sgn(lo) <= 0 && sgn(hi) >= 0; }
};

// Enclosure of pi with width <= 2^-prec_bits, endpoints exact rationals.
// Machin's formula with explicit alternating-series tails; cached.
RealInterval pi_enclosure(long prec_bits);

// Enclosure of cos(2*pi*j/n) with width <= 2^-prec_bits. Exact range
// reduction on the rational j/n, then a Taylor partial sum with a proven
// remainder bound. Results are cached per (n, j, precision level).
RealInterval cos2pi_enclosure(i64 j, i64 n, long prec_bits);

}  // namespace rootlat
