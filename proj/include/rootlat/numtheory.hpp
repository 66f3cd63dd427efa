#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace rootlat {

using i64 = long long;

i64 gcd_i64(i64 a, i64 b);
i64 lcm_i64(i64 a, i64 b);

// Prime factorization by trial division, pairs (p, e) with p ascending.
std::vector<std::pair<i64, int>> factorize(i64 n);

i64 euler_phi(i64 n);
bool is_prime(i64 n);
// p^k with k >= 1.
bool is_prime_power(i64 n);

i64 mod_pow(i64 base, i64 exp, i64 mod);
i64 mod_inverse(i64 a, i64 m);  // gcd(a, m) = 1

// Solve x ≡ r1 (mod m1), x ≡ r2 (mod m2). Returns (x mod lcm, true) when
// compatible, (0, false) otherwise.
std::pair<i64, bool> crt_pair(i64 r1, i64 m1, i64 r2, i64 m2);

// Smallest generator of the cyclic group (Z/p^e)^x, p an odd prime.
i64 primitive_root(i64 p, int e);

// All k >= 1 with phi(k) <= bound, ascending. Every prime factor p of such k
// has p - 1 <= bound, so the search tree over prime powers is finite.
std::vector<i64> phi_bounded(i64 bound);

// Units of Z/m ascending; {0} for m = 1 by convention.
std::vector<i64> units_mod(i64 m);

}  // namespace rootlat
