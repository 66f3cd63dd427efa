#include "rootlat/cyclo.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

namespace rootlat {

namespace {

// ---------------------------------------------------------------------------
// Integer polynomial helpers for the cyclotomic polynomials.

using IPoly = std::vector<Int>;  // ascending coefficients

// Exact division, known to be exact here (x^n - 1 by a product of cyclotomic
// factors, all monic).
IPoly ipoly_div(const IPoly& num, const IPoly& den) {
    IPoly rem = num;
    IPoly quot(num.size() - den.size() + 1, Int(0));
    for (std::size_t i = quot.size(); i-- > 0;) {
        Int c = rem[i + den.size() - 1];  // den is monic
        quot[i] = c;
        if (c != 0)
            for (std::size_t j = 0; j < den.size(); ++j)
                rem[i + j] -= c * den[j];
    }
    return quot;
}

IPoly ipoly_mul(const IPoly& a, const IPoly& b) {
    IPoly out(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0)
            for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

std::mutex g_cyclo_poly_mutex;
std::map<i64, IPoly> g_cyclo_polys;

IPoly cyclotomic_poly_unlocked(i64 n) {
    auto it = g_cyclo_polys.find(n);
    if (it != g_cyclo_polys.end()) return it->second;
    IPoly result;
    if (n == 1) {
        result = {Int(-1), Int(1)};  // x - 1
    } else {
        IPoly num(n + 1, Int(0));  // x^n - 1
        num[0] = -1;
        num[n] = 1;
        IPoly den = {Int(1)};
        for (i64 d = 1; d < n; ++d)
            if (n % d == 0) den = ipoly_mul(den, cyclotomic_poly_unlocked(d));
        result = ipoly_div(num, den);
    }
    g_cyclo_polys.emplace(n, result);
    return result;
}

// ---------------------------------------------------------------------------
// Per-modulus reduction data: Phi_N and the power basis rows zeta^j.

struct ModulusData {
    i64 n = 1;
    i64 phi = 1;
    IPoly cyclo;                     // Phi_n, monic, length phi + 1
    std::vector<std::vector<Int>> power;  // power[j] = zeta^j, j in [0, n)
};

std::mutex g_tables_mutex;
std::map<i64, std::shared_ptr<const ModulusData>> g_tables;

std::shared_ptr<const ModulusData> tables_for(i64 n) {
    std::lock_guard<std::mutex> lock(g_tables_mutex);
    auto it = g_tables.find(n);
    if (it != g_tables.end()) return it->second;

    auto data = std::make_shared<ModulusData>();
    data->n = n;
    {
        std::lock_guard<std::mutex> plock(g_cyclo_poly_mutex);
        data->cyclo = cyclotomic_poly_unlocked(n);
    }
    data->phi = static_cast<i64>(data->cyclo.size()) - 1;
    const i64 phi = data->phi;
    data->power.reserve(n);
    std::vector<Int> cur(phi, Int(0));
    cur[0] = 1;
    data->power.push_back(cur);
    for (i64 j = 1; j < n; ++j) {
        Int carry = cur[phi - 1];
        for (i64 t = phi - 1; t >= 1; --t) cur[t] = cur[t - 1];
        cur[0] = 0;
        if (carry != 0)  // x^phi = -(lower part of Phi_n)
            for (i64 t = 0; t < phi; ++t) cur[t] -= carry * data->cyclo[t];
        data->power.push_back(cur);
    }
    g_tables.emplace(n, data);
    return data;
}

std::vector<Rat> zero_coeffs(i64 phi) { return std::vector<Rat>(phi, Rat(0)); }

// ---------------------------------------------------------------------------
// Rational polynomial extended gcd, used for inversion mod Phi_N.

using QPoly = std::vector<Rat>;

void qpoly_trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly qpoly_sub_scaled(QPoly a, const QPoly& b, const Rat& c, std::size_t shift) {
    if (a.size() < b.size() + shift) a.resize(b.size() + shift, Rat(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
    qpoly_trim(a);
    return a;
}

}  // namespace

// ---------------------------------------------------------------------------
// CycElem basics

CycElem::CycElem() : modulus_(1), coeffs_(1, Rat(0)) {}

CycElem::CycElem(const Rat& r) : modulus_(1), coeffs_(1, r) {}

CycElem::CycElem(long v) : modulus_(1), coeffs_(1, Rat(v)) {}

CycElem::CycElem(i64 modulus, std::vector<Rat> coeffs)
    : modulus_(modulus), coeffs_(std::move(coeffs)) {
    if (modulus_ < 1) throw Error("modulus must be >= 1");
    if (static_cast<i64>(coeffs_.size()) != euler_phi(modulus_))
        throw Error("coefficient vector length must equal phi(modulus)");
}

CycElem CycElem::zeta(i64 n) { return zeta_power(n, 1); }

CycElem CycElem::zeta_power(i64 n, i64 k) {
    if (n < 1) throw Error("modulus must be >= 1");
    auto tab = tables_for(n);
    k %= n;
    if (k < 0) k += n;
    std::vector<Rat> c(tab->phi);
    for (i64 t = 0; t < tab->phi; ++t) c[t] = Rat(tab->power[k][t]);
    return CycElem(n, std::move(c));
}

bool CycElem::is_zero() const {
    for (const Rat& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool CycElem::is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

Rat CycElem::rational_value() const {
    if (!is_rational()) throw Error("value is not rational");
    return coeffs_[0];
}

CycElem CycElem::lifted_to(i64 new_modulus) const {
    if (new_modulus == modulus_) return *this;
    if (new_modulus % modulus_ != 0)
        throw Error("lift target must be a multiple of the modulus");
    auto tab = tables_for(new_modulus);
    i64 stride = new_modulus / modulus_;
    std::vector<Rat> out = zero_coeffs(tab->phi);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Rat& c = coeffs_[i];
        if (c == 0) continue;
        const auto& row = tab->power[(static_cast<i64>(i) * stride) % new_modulus];
        for (i64 t = 0; t < tab->phi; ++t)
            if (row[t] != 0) out[t] += c * row[t];
    }
    return CycElem(new_modulus, std::move(out));
}

CycElem CycElem::operator-() const {
    std::vector<Rat> out(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = -coeffs_[i];
    return CycElem(modulus_, std::move(out));
}

namespace {
i64 common_modulus(const CycElem& a, const CycElem& b) {
    return lcm_i64(a.modulus(), b.modulus());
}
}  // namespace

CycElem operator+(const CycElem& a, const CycElem& b) {
    i64 m = common_modulus(a, b);
    CycElem la = a.lifted_to(m), lb = b.lifted_to(m);
    std::vector<Rat> out(la.coeffs().size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = la.coeffs()[i] + lb.coeffs()[i];
    return CycElem(m, std::move(out));
}

CycElem operator-(const CycElem& a, const CycElem& b) {
    i64 m = common_modulus(a, b);
    CycElem la = a.lifted_to(m), lb = b.lifted_to(m);
    std::vector<Rat> out(la.coeffs().size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = la.coeffs()[i] - lb.coeffs()[i];
    return CycElem(m, std::move(out));
}

CycElem operator*(const CycElem& a, const CycElem& b) {
    i64 m = common_modulus(a, b);
    CycElem la = a.lifted_to(m), lb = b.lifted_to(m);
    auto tab = tables_for(m);
    const i64 phi = tab->phi;
    std::vector<Rat> conv(2 * phi - 1, Rat(0));
    for (i64 i = 0; i < phi; ++i) {
        const Rat& ca = la.coeffs()[i];
        if (ca == 0) continue;
        for (i64 j = 0; j < phi; ++j) {
            const Rat& cb = lb.coeffs()[j];
            if (cb != 0) conv[i + j] += ca * cb;
        }
    }
    std::vector<Rat> out(conv.begin(), conv.begin() + phi);
    for (i64 j = phi; j < 2 * phi - 1; ++j) {
        if (conv[j] == 0) continue;
        const auto& row = tab->power[j % m];
        for (i64 t = 0; t < phi; ++t)
            if (row[t] != 0) out[t] += conv[j] * row[t];
    }
    return CycElem(m, std::move(out));
}

CycElem operator/(const CycElem& a, const CycElem& b) { return a * invert(b); }

bool operator==(const CycElem& a, const CycElem& b) {
    i64 m = common_modulus(a, b);
    return a.lifted_to(m).coeffs() == b.lifted_to(m).coeffs();
}

// ---------------------------------------------------------------------------

CycElem make_zeta_plus(i64 m) {
    if (m < 1) throw Error("make_zeta_plus requires m >= 1");
    if (m == 1) return CycElem(2);
    if (m == 2) return CycElem(-2);
    return CycElem::zeta_power(m, 1) + CycElem::zeta_power(m, -1);
}

CycElem invert(const CycElem& a) {
    if (a.is_zero()) throw DivisionByZero();
    if (a.is_rational()) return CycElem(Rat(1) / a.rational_value());
    auto tab = tables_for(a.modulus());
    // extended Euclid in Q[x] against Phi_N; tracking r_i = (...)*Phi + s_i*a,
    // the run ends in a nonzero constant because Phi_N is irreducible.
    QPoly r0(tab->cyclo.size());
    for (std::size_t i = 0; i < tab->cyclo.size(); ++i) r0[i] = Rat(tab->cyclo[i]);
    QPoly r1 = a.coeffs();
    qpoly_trim(r1);
    QPoly s0 = {};
    QPoly s1 = {Rat(1)};
    while (r1.size() > 1) {
        QPoly q;
        QPoly rem = std::move(r0);
        while (rem.size() >= r1.size()) {
            Rat c = rem.back() / r1.back();
            std::size_t shift = rem.size() - r1.size();
            if (q.size() < shift + 1) q.resize(shift + 1, Rat(0));
            q[shift] += c;
            rem = qpoly_sub_scaled(std::move(rem), r1, c, shift);
        }
        r0 = std::move(r1);
        r1 = std::move(rem);
        QPoly s_new = s0;
        for (std::size_t i = 0; i < q.size(); ++i)
            if (q[i] != 0) s_new = qpoly_sub_scaled(std::move(s_new), s1, q[i], i);
        s0 = std::move(s1);
        s1 = std::move(s_new);
        if (r1.empty())
            throw std::logic_error("invert: zero remainder before constant gcd");
    }
    if (r1.empty() || r1[0] == 0)
        throw std::logic_error("invert: gcd with cyclotomic polynomial not constant");
    Rat lead = r1[0];
    std::vector<Rat> out = zero_coeffs(tab->phi);
    if (s1.size() > out.size())
        throw std::logic_error("invert: bezout coefficient degree too large");
    for (std::size_t i = 0; i < s1.size(); ++i) out[i] = s1[i] / lead;
    return CycElem(a.modulus(), std::move(out));
}

CycElem galois(const CycElem& a, i64 u) {
    i64 n = a.modulus();
    if (n == 1) return a;
    i64 ur = u % n;
    if (ur < 0) ur += n;
    if (std::gcd(ur, n) != 1)
        throw NotCoprime("galois: u = " + std::to_string(u) +
                         " is not coprime to the modulus " + std::to_string(n));
    auto tab = tables_for(n);
    std::vector<Rat> out = zero_coeffs(tab->phi);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        const Rat& c = a.coeffs()[i];
        if (c == 0) continue;
        const auto& row = tab->power[(static_cast<i64>(i) * ur) % n];
        for (i64 t = 0; t < tab->phi; ++t)
            if (row[t] != 0) out[t] += c * row[t];
    }
    return CycElem(n, std::move(out));
}

CycElem mul_zeta_power(const CycElem& a, i64 e) {
    i64 n = a.modulus();
    auto tab = tables_for(n);
    e %= n;
    if (e < 0) e += n;
    std::vector<Rat> out = zero_coeffs(tab->phi);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        const Rat& c = a.coeffs()[i];
        if (c == 0) continue;
        const auto& row = tab->power[(static_cast<i64>(i) + e) % n];
        for (i64 t = 0; t < tab->phi; ++t)
            if (row[t] != 0) out[t] += c * row[t];
    }
    return CycElem(n, std::move(out));
}

CycElem scale(const CycElem& a, const Rat& c) {
    std::vector<Rat> out(a.coeffs().size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeffs()[i] * c;
    return CycElem(a.modulus(), std::move(out));
}

bool is_real(const CycElem& a) {
    if (a.modulus() <= 2) return true;
    return galois(a, -1) == a;
}

bool is_algebraic_integer(const CycElem& a) {
    for (const Rat& c : a.coeffs())
        if (!is_integer(c)) return false;
    return true;
}

namespace {

RealInterval eval_interval(const CycElem& a, long prec_bits) {
    if (a.is_rational()) {
        const Rat& v = a.coeffs()[0];
        return {dyadic_floor(v, prec_bits), dyadic_ceil(v, prec_bits)};
    }
    // a real: a = sum c_i * cos(2*pi*i/N) under the fixed embedding
    i64 n = a.modulus();
    Rat abs_sum(0);
    int terms = 0;
    for (const Rat& c : a.coeffs())
        if (c != 0) { abs_sum += abs(c); ++terms; }
    if (terms == 0) return {Rat(0), Rat(0)};
    long extra = 2 + static_cast<long>(mpz_sizeinbase(Rat(abs_sum + terms).get_num().get_mpz_t(), 2));
    long work = prec_bits + extra;
    Rat lo(0), hi(0);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        const Rat& c = a.coeffs()[i];
        if (c == 0) continue;
        RealInterval ci = cos2pi_enclosure(static_cast<i64>(i), n, work);
        if (c > 0) {
            lo += c * ci.lo;
            hi += c * ci.hi;
        } else {
            lo += c * ci.hi;
            hi += c * ci.lo;
        }
    }
    return {dyadic_floor(lo, work), dyadic_ceil(hi, work)};
}

}  // namespace

RealInterval eval_real(const CycElem& a, const Rat& width) {
    if (width <= 0) throw Error("eval_real: width must be positive");
    if (!is_real(a)) throw NotReal("eval_real: element is not real");
    long prec = 32;
    for (;;) {
        RealInterval iv = eval_interval(a, prec);
        if (iv.width() <= width) return iv;
        prec *= 2;
        if (prec > (1L << 22))
            throw std::logic_error("eval_real: excessive precision requested");
    }
}

int sign_of(const CycElem& a) {
    if (!is_real(a)) throw NotReal("sign: element is not real");
    if (a.is_zero()) return 0;
    if (a.is_rational()) return sgn(a.rational_value());
    long prec = 32;
    for (;;) {
        RealInterval iv = eval_interval(a, prec);
        if (sgn(iv.lo) > 0) return 1;
        if (sgn(iv.hi) < 0) return -1;
        prec *= 2;
        // terminates: a is a fixed nonzero algebraic number
        if (prec > (1L << 22))
            throw std::logic_error("sign: interval refinement did not separate from zero");
    }
}

bool conjugate_bound_leq(const CycElem& a, BoundConst bound) {
    if (!is_real(a)) throw NotReal("conjugate_bound_leq: element is not real");
    CycElem b = bound == BoundConst::One    ? CycElem(1)
                : bound == BoundConst::Sqrt2 ? make_zeta_plus(8)
                                             : CycElem(2);
    i64 n = a.modulus();
    for (i64 u : units_mod(n)) {
        CycElem c = galois(a, u);
        if (sign_of(b - c) < 0 || sign_of(b + c) < 0) return false;
    }
    return true;
}

std::vector<Int> chebyshev_q(i64 k) {
    if (k < 0) throw Error("chebyshev_q requires k >= 0");
    IPoly prev = {Int(1)};  // q_0
    if (k == 0) return prev;
    IPoly cur = {Int(0), Int(1)};  // q_1 = t
    for (i64 i = 2; i <= k; ++i) {
        IPoly next(cur.size() + 1, Int(0));
        for (std::size_t j = 0; j < cur.size(); ++j) next[j + 1] = cur[j];
        for (std::size_t j = 0; j < prev.size(); ++j) next[j] -= prev[j];
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

CycElem cyclotomic_unit_c(i64 m, i64 k) {
    if (m < 2 || k < 1) throw Error("cyclotomic_unit_c requires m >= 2, k >= 1");
    std::vector<Int> q = chebyshev_q(k - 1);
    CycElem x = make_zeta_plus(2 * m);
    CycElem acc;
    for (std::size_t i = q.size(); i-- > 0;)
        acc = acc * x + CycElem(Rat(q[i]));
    return acc;
}

std::vector<CycElem> galois_orbit(const CycElem& a) {
    i64 n = a.modulus();
    std::set<std::vector<Rat>> seen;
    std::vector<CycElem> orbit;
    for (i64 u : units_mod(n)) {
        CycElem c = n == 1 ? a : galois(a, u);
        if (seen.insert(c.coeffs()).second) orbit.push_back(c);
    }
    return orbit;
}

std::vector<Rat> minimal_polynomial(const CycElem& a) {
    std::vector<CycElem> orbit = galois_orbit(a);
    std::vector<CycElem> poly = {CycElem(1)};
    for (const CycElem& c : orbit) {
        std::vector<CycElem> next(poly.size() + 1);
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] = next[i + 1] + poly[i];
            next[i] = next[i] - poly[i] * c;
        }
        poly = std::move(next);
    }
    std::vector<Rat> out(poly.size());
    for (std::size_t i = 0; i < poly.size(); ++i) {
        if (!poly[i].is_rational())
            throw std::logic_error("minimal_polynomial: non-rational coefficient");
        out[i] = poly[i].rational_value();
    }
    return out;
}

CycElem canonicalize(const CycElem& a) {
    i64 n = a.modulus();
    if (n == 1) return a;
    std::vector<i64> divisors;
    for (i64 d = 1; d <= n; ++d)
        if (n % d == 0) divisors.push_back(d);
    for (i64 d : divisors) {
        bool fixed = true;
        for (i64 u = 1; u < n && fixed; ++u) {
            if (u % d != 1 % d) continue;  // only sigma_u fixing Q(zeta_d)
            if (std::gcd(u, n) != 1) continue;
            if (galois(a, u) != a) fixed = false;
        }
        if (!fixed) continue;
        // a lies in Q(zeta_d): solve for its coordinates there
        i64 phi_d = euler_phi(d);
        std::vector<CycElem> basis;
        for (i64 t = 0; t < phi_d; ++t)
            basis.push_back(CycElem::zeta_power(d, t).lifted_to(n));
        i64 phi_n = static_cast<i64>(a.coeffs().size());
        // least-squares-free exact solve by Gaussian elimination on the
        // phi_n x (phi_d + 1) augmented system
        std::vector<std::vector<Rat>> m(phi_n, std::vector<Rat>(phi_d + 1, Rat(0)));
        for (i64 r = 0; r < phi_n; ++r) {
            for (i64 cidx = 0; cidx < phi_d; ++cidx) m[r][cidx] = basis[cidx].coeffs()[r];
            m[r][phi_d] = a.coeffs()[r];
        }
        std::vector<i64> pivot_col(phi_d, -1);
        i64 row = 0;
        for (i64 col = 0; col < phi_d && row < phi_n; ++col) {
            i64 pr = -1;
            for (i64 r = row; r < phi_n; ++r)
                if (m[r][col] != 0) { pr = r; break; }
            if (pr < 0) continue;
            std::swap(m[row], m[pr]);
            Rat inv = Rat(1) / m[row][col];
            for (i64 cidx = col; cidx <= phi_d; ++cidx) m[row][cidx] *= inv;
            for (i64 r = 0; r < phi_n; ++r) {
                if (r == row || m[r][col] == 0) continue;
                Rat f = m[r][col];
                for (i64 cidx = col; cidx <= phi_d; ++cidx) m[r][cidx] -= f * m[row][cidx];
            }
            pivot_col[col] = row;
            ++row;
        }
        bool consistent = true;
        for (i64 r = row; r < phi_n; ++r)
            if (m[r][phi_d] != 0) consistent = false;
        if (!consistent)
            throw std::logic_error("canonicalize: inconsistent system");
        std::vector<Rat> coords(phi_d, Rat(0));
        for (i64 col = 0; col < phi_d; ++col)
            if (pivot_col[col] >= 0) coords[col] = m[pivot_col[col]][phi_d];
        return CycElem(d, std::move(coords));
    }
    return a;
}

// ---------------------------------------------------------------------------
// Kronecker classification

namespace {

std::optional<KroneckerClass::SmallValue> small_value_for(i64 k, i64 m) {
    using SV = KroneckerClass::SmallValue;
    if (m == 2) return SV::Zero;
    if (m == 3) return k == 1 ? SV::PlusOne : SV::MinusOne;
    if (m == 4) return k == 1 ? SV::PlusSqrt2 : SV::MinusSqrt2;
    return std::nullopt;
}

// Identify k in [0, m] with a = 2cos(k*pi/m), knowing equality holds for
// exactly one k. The candidates are strictly decreasing with adjacent gaps
// at least 2(1 - cos(pi/m)) > 3.9/m^2, so an enclosure of a with width
// 1/(4m^2) plus a tight candidate enclosure overlaps only at the true k;
// the acos guess is just a hint and is re-derived from a narrower interval
// if the overlap check rejects it.
i64 recover_two_cos_numerator(const CycElem& a, i64 m) {
    Rat w = rat_frac(1, 4 * m * m);
    for (int iter = 0; iter < 40; ++iter) {
        RealInterval ia = eval_real(a, w);
        double mid = ia.midpoint().get_d() / 2.0;
        mid = std::min(1.0, std::max(-1.0, mid));
        i64 k = std::llround(std::acos(mid) * static_cast<double>(m) / M_PI);
        k = std::min<i64>(m, std::max<i64>(0, k));
        RealInterval cand = cos2pi_enclosure(k, 2 * m, 64);
        // candidate value is 2cos(k*pi/m)
        if (!(2 * cand.hi < ia.lo || 2 * cand.lo > ia.hi)) return k;
        w /= 16;
    }
    throw std::logic_error("kronecker: failed to identify cosine numerator");
}

}  // namespace

std::string KroneckerClass::to_string() const {
    std::ostringstream os;
    bool first = true;
    auto sep = [&] {
        if (!first) os << "/";
        first = false;
    };
    if (kind == Kind::RootOfUnity) {
        sep();
        os << "RootOfUnity(" << order << ")";
    }
    if (has_two_cos) {
        sep();
        os << "TwoCos(" << k << "," << m << ")";
    }
    if (small_set) {
        sep();
        os << "SmallSet(";
        switch (*small_set) {
            case SmallValue::Zero: os << "0"; break;
            case SmallValue::PlusOne: os << "+1"; break;
            case SmallValue::MinusOne: os << "-1"; break;
            case SmallValue::PlusSqrt2: os << "+sqrt2"; break;
            case SmallValue::MinusSqrt2: os << "-sqrt2"; break;
        }
        os << ")";
    }
    if (first) os << "None";
    return os.str();
}

KroneckerClass kronecker_classify(const CycElem& a) {
    if (!is_algebraic_integer(a))
        throw NotAlgebraicInteger("kronecker_classify requires an algebraic integer");
    KroneckerClass res;
    i64 n = a.modulus();

    // +-2 = 2cos(0*pi) / 2cos(1*pi) sit outside the m >= 2 pattern
    if (a == CycElem(2) || a == CycElem(-2)) {
        res.kind = KroneckerClass::Kind::TwoCosPiRational;
        res.has_two_cos = true;
        res.k = a == CycElem(2) ? 0 : 1;
        res.m = 1;
        return res;
    }

    // roots of unity in Q(zeta_N) are exactly +-zeta_N^j
    auto tab = tables_for(n);
    for (i64 j = 0; j < n; ++j) {
        bool plus = true, minus = true;
        for (i64 t = 0; t < tab->phi && (plus || minus); ++t) {
            const Rat& c = a.coeffs()[t];
            Rat row(tab->power[j][t]);
            if (plus && c != row) plus = false;
            if (minus && c != -row) minus = false;
        }
        if (!plus && !minus) continue;
        res.kind = KroneckerClass::Kind::RootOfUnity;
        if (plus)
            res.order = n / std::gcd(n, j);
        else  // -zeta_n^j = zeta_{2n}^{n + 2j}
            res.order = 2 * n / std::gcd(2 * n, n + 2 * j);
        if (res.order <= 2) {  // the real roots of unity are also 2cos values
            res.has_two_cos = true;
            res.k = res.order == 1 ? 1 : 2;
            res.m = 3;
            res.small_set = small_value_for(res.k, res.m);
        }
        return res;
    }

    if (!is_real(a) || !conjugate_bound_leq(a, BoundConst::Two)) return res;

    // a = 2cos(theta): b_j = 2cos(j*theta) via b_{j+1} = a b_j - b_{j-1};
    // b_m = +-2 exactly at multiples of the reduced denominator, so the first
    // hit is the reduced m. Candidates are bounded by phi(2m) <= 2 phi(N)
    // (Q(zeta_2m) sits in a quadratic extension of Q(zeta_N)); lemma
    // guarantees a hit within the bound.
    i64 phi_n = tab->phi;
    i64 m_max = 1;
    for (i64 kk : phi_bounded(2 * phi_n))
        if (kk % 2 == 0) m_max = std::max(m_max, kk / 2);
    CycElem two(2);
    CycElem prev(two), cur(a);
    for (i64 m = 2; m <= m_max; ++m) {
        CycElem next = a * cur - prev;
        prev = cur;
        cur = next;
        if (cur == two || cur == -two) {
            i64 k = recover_two_cos_numerator(a, m);
            if (std::gcd(k, m) != 1 || k <= 0 || k >= m)
                throw std::logic_error("kronecker: unreduced cosine fraction");
            res.kind = KroneckerClass::Kind::TwoCosPiRational;
            res.has_two_cos = true;
            res.k = k;
            res.m = m;
            res.small_set = small_value_for(k, m);
            return res;
        }
    }
    throw std::logic_error(
        "kronecker: conjugate bound held but no cosine representation found");
}

std::string to_string(const CycElem& a) {
    if (a.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    i64 n = a.modulus();
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        const Rat& c = a.coeffs()[i];
        if (c == 0) continue;
        Rat mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool unit_coeff = (mag == 1) && i > 0;
        if (!unit_coeff) os << rat_to_string(mag);
        if (i > 0) {
            if (!unit_coeff) os << "*";
            os << "z(" << n << ")";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

}  // namespace rootlat
