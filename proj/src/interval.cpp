#include "rootlat/interval.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace rootlat {

Rat dyadic_floor(const Rat& x, long prec_bits) {
    Int scaled_num = x.get_num() << prec_bits;
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), scaled_num.get_mpz_t(), x.get_den().get_mpz_t());
    Rat r(q, Int(1) << prec_bits);
    r.canonicalize();
    return r;
}

Rat dyadic_ceil(const Rat& x, long prec_bits) {
    Int scaled_num = x.get_num() << prec_bits;
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), scaled_num.get_mpz_t(), x.get_den().get_mpz_t());
    Rat r(q, Int(1) << prec_bits);
    r.canonicalize();
    return r;
}

namespace {

Rat pow2_neg(long bits) {
    Rat r(1, Int(1) << bits);
    r.canonicalize();
    return r;
}

// atan(1/x) for integer x >= 2 by the alternating Leibniz series; the partial
// sums bracket the value, so [min(S_m, S_{m+1}), max(S_m, S_{m+1})] encloses it.
std::pair<Rat, Rat> atan_inv_brackets(long x, long prec_bits) {
    Rat term(1, x);
    Rat x2(x * x);
    Rat s = term;
    Rat prev = s;
    Rat eps = pow2_neg(prec_bits);
    long k = 1;
    while (true) {
        term /= x2;
        Rat t = term / (2 * k + 1);
        prev = s;
        if (k % 2 == 1)
            s -= t;
        else
            s += t;
        if (t <= eps) break;
        ++k;
    }
    if (prev < s) return {prev, s};
    return {s, prev};
}

std::mutex g_pi_mutex;
long g_pi_bits = 0;
RealInterval g_pi;

// Taylor enclosure of cos(x) for exact rational 0 <= x <= 8/5.
RealInterval taylor_cos(const Rat& x, long prec_bits) {
    Rat x2 = x * x;
    Rat term(1);
    Rat s(1);
    Rat eps = pow2_neg(prec_bits);
    long i = 0;
    while (true) {
        ++i;
        term = term * x2 / ((2 * i - 1) * (2 * i));
        // terms are strictly decreasing for x <= 8/5, so the tail is bounded
        // by the first omitted term
        if (i % 2 == 1)
            s -= term;
        else
            s += term;
        Rat next = term * x2 / ((2 * i + 1) * (2 * i + 2));
        if (next <= eps) return {s - next, s + next};
    }
}

struct CosKey {
    i64 n;
    i64 j;
    long bits;
    bool operator<(const CosKey& o) const {
        return std::tie(n, j, bits) < std::tie(o.n, o.j, o.bits);
    }
};

std::mutex g_cos_mutex;
std::map<CosKey, RealInterval> g_cos_cache;

RealInterval cos2pi_uncached(i64 j, i64 n, long prec_bits) {
    long work = prec_bits + 8;
    for (;;) {
        // reduce t = j/n to [0, 1/4] using cos(2pi(1-t)) = cos(2pi t) and
        // cos(2pi t) = -cos(2pi(1/2 - t)); all steps exact on the rational t
        Rat t = rat_frac(j, n);
        bool flip = false;
        if (t > Rat(1, 2)) t = 1 - t;
        if (t > Rat(1, 4)) {
            flip = true;
            t = Rat(1, 2) - t;
        }
        RealInterval pi = pi_enclosure(work);
        Rat theta_lo = 2 * t * pi.lo;
        Rat theta_hi = 2 * t * pi.hi;
        // cos is decreasing on [0, pi/2]
        RealInterval at_hi = taylor_cos(theta_hi, work);
        RealInterval at_lo = taylor_cos(theta_lo, work);
        Rat lo = at_hi.lo, hi = at_lo.hi;
        if (flip) {
            Rat nlo = -hi, nhi = -lo;
            lo = nlo;
            hi = nhi;
        }
        lo = dyadic_floor(lo, work);
        hi = dyadic_ceil(hi, work);
        if (hi - lo <= pow2_neg(prec_bits)) return {lo, hi};
        work *= 2;
    }
}

}  // namespace

RealInterval pi_enclosure(long prec_bits) {
    std::lock_guard<std::mutex> lock(g_pi_mutex);
    if (g_pi_bits >= prec_bits) return g_pi;
    long work = prec_bits + 8;
    // Machin: pi = 16 atan(1/5) - 4 atan(1/239)
    auto [a5_lo, a5_hi] = atan_inv_brackets(5, work);
    auto [a239_lo, a239_hi] = atan_inv_brackets(239, work);
    Rat lo = 16 * a5_lo - 4 * a239_hi;
    Rat hi = 16 * a5_hi - 4 * a239_lo;
    g_pi = {dyadic_floor(lo, work), dyadic_ceil(hi, work)};
    g_pi_bits = prec_bits;
    if (g_pi.width() > pow2_neg(prec_bits))
        throw std::logic_error("pi enclosure did not reach requested width");
    return g_pi;
}

RealInterval cos2pi_enclosure(i64 j, i64 n, long prec_bits) {
    j %= n;
    if (j < 0) j += n;
    // quantize the precision so repeated queries share cache entries
    long bits = 32;
    while (bits < prec_bits) bits *= 2;
    CosKey key{n, j, bits};
    {
        std::lock_guard<std::mutex> lock(g_cos_mutex);
        auto it = g_cos_cache.find(key);
        if (it != g_cos_cache.end()) return it->second;
    }
    RealInterval v = cos2pi_uncached(j, n, bits);
    std::lock_guard<std::mutex> lock(g_cos_mutex);
    g_cos_cache.emplace(key, v);
    return v;
}

}  // namespace rootlat
