#include "rootlat/numtheory.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace rootlat {

i64 gcd_i64(i64 a, i64 b) { return std::gcd(a, b); }

i64 lcm_i64(i64 a, i64 b) {
    if (a == 0 || b == 0) return 0;
    i64 g = std::gcd(a, b);
    i64 r = a / g;
    if (r > static_cast<i64>(9e18) / b)
        throw std::overflow_error("lcm overflow");
    return r * b;
}

std::vector<std::pair<i64, int>> factorize(i64 n) {
    std::vector<std::pair<i64, int>> out;
    if (n < 0) n = -n;
    for (i64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) { n /= p; ++e; }
            out.emplace_back(p, e);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

i64 euler_phi(i64 n) {
    i64 r = 1;
    for (auto [p, e] : factorize(n)) {
        r *= p - 1;
        for (int i = 1; i < e; ++i) r *= p;
    }
    return n >= 1 ? r : 0;
}

bool is_prime(i64 n) {
    if (n < 2) return false;
    auto f = factorize(n);
    return f.size() == 1 && f[0].second == 1;
}

bool is_prime_power(i64 n) {
    if (n < 2) return false;
    return factorize(n).size() == 1;
}

namespace {
i64 mul_mod(i64 a, i64 b, i64 m) {
    return static_cast<i64>(static_cast<__int128>(a) * b % m);
}
}  // namespace

i64 mod_pow(i64 base, i64 exp, i64 mod) {
    if (mod == 1) return 0;
    i64 r = 1;
    base %= mod;
    if (base < 0) base += mod;
    while (exp > 0) {
        if (exp & 1) r = mul_mod(r, base, mod);
        base = mul_mod(base, base, mod);
        exp >>= 1;
    }
    return r;
}

i64 mod_inverse(i64 a, i64 m) {
    i64 g = m, x = 0, x1 = 1, a1 = a % m;
    if (a1 < 0) a1 += m;
    while (a1 != 0) {
        i64 q = g / a1;
        g -= q * a1; std::swap(g, a1);
        x -= q * x1; std::swap(x, x1);
    }
    if (g != 1) throw std::invalid_argument("mod_inverse: arguments not coprime");
    x %= m;
    if (x < 0) x += m;
    return x;
}

std::pair<i64, bool> crt_pair(i64 r1, i64 m1, i64 r2, i64 m2) {
    i64 g = std::gcd(m1, m2);
    i64 d = ((r2 - r1) % m2 + m2) % m2;
    if (d % g != 0) return {0, false};
    i64 l = lcm_i64(m1, m2);
    i64 m2g = m2 / g;
    i64 t = mul_mod((d / g) % m2g, mod_inverse((m1 / g) % m2g, m2g), m2g);
    i64 x = (r1 % l + mul_mod(t % l, m1 % l, l)) % l;
    if (x < 0) x += l;
    return {x, true};
}

i64 primitive_root(i64 p, int e) {
    // Find a primitive root mod p, then promote to p^e if necessary.
    i64 phi_p = p - 1;
    auto fac = factorize(phi_p);
    i64 g = 0;
    for (i64 c = 2; c < p; ++c) {
        bool ok = true;
        for (auto [q, _] : fac) {
            if (mod_pow(c, phi_p / q, p) == 1) { ok = false; break; }
        }
        if (ok) { g = c; break; }
    }
    if (g == 0) throw std::logic_error("primitive_root: none found");
    if (e == 1) return g;
    i64 pe = 1;
    for (int i = 0; i < e; ++i) pe *= p;
    // g generates (Z/p^e)^x unless g^(p-1) ≡ 1 mod p^2, in which case g + p does.
    i64 p2 = p * p;
    if (mod_pow(g, p - 1, p2) == 1) g += p;
    return g % pe;
}

namespace {
void phi_bounded_rec(i64 bound, std::size_t prime_idx,
                     const std::vector<i64>& primes, i64 value, i64 phi,
                     std::vector<i64>& out) {
    out.push_back(value);
    for (std::size_t i = prime_idx; i < primes.size(); ++i) {
        i64 p = primes[i];
        // primes ascending: once p - 1 overshoots, all later ones do too
        if (p - 1 > bound / phi) break;
        i64 v = value * p;
        i64 f = phi * (p - 1);
        while (f <= bound) {
            phi_bounded_rec(bound, i + 1, primes, v, f, out);
            if (v > static_cast<i64>(4e18) / p) break;
            if (f > bound / p) break;
            v *= p;
            f *= p;
        }
    }
}
}  // namespace

std::vector<i64> phi_bounded(i64 bound) {
    if (bound < 1) return {};
    std::vector<i64> primes;
    for (i64 p = 2; p - 1 <= bound; ++p)
        if (is_prime(p)) primes.push_back(p);
    std::vector<i64> out;
    phi_bounded_rec(bound, 0, primes, 1, 1, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<i64> units_mod(i64 m) {
    if (m == 1) return {0};
    std::vector<i64> out;
    for (i64 a = 1; a < m; ++a)
        if (std::gcd(a, m) == 1) out.push_back(a);
    return out;
}

}  // namespace rootlat
