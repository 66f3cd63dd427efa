#pragma once

#include "rootlat/errors.hpp"
#include "rootlat/interval.hpp"
#include "rootlat/numtheory.hpp"
#include "rootlat/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rootlat {

/// An element of the cyclotomic field Q(zeta_N), stored as exact rational
/// coordinates in the power basis {zeta_N^i : 0 <= i < phi(N)} after
/// reduction modulo the N-th cyclotomic polynomial. The representation at a
/// fixed modulus is unique, so equality at one modulus is a coefficient
/// comparison; equality across moduli lifts both sides to the lcm modulus.
/// Values are immutable; all operations are pure.
class CycElem {
public:
    CycElem();  // 0 at modulus 1
    CycElem(const Rat& r);
    CycElem(long v);
    CycElem(i64 modulus, std::vector<Rat> coeffs);  // coeffs.size() == phi(modulus)

    static CycElem zeta(i64 n);               // primitive n-th root of unity
    static CycElem zeta_power(i64 n, i64 k);  // zeta_n^k for any integer k

    i64 modulus() const { return modulus_; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const;
    Rat rational_value() const;  // pre: is_rational()

    CycElem lifted_to(i64 new_modulus) const;  // pre: modulus() | new_modulus

    CycElem operator-() const;
    friend CycElem operator+(const CycElem& a, const CycElem& b);
    friend CycElem operator-(const CycElem& a, const CycElem& b);
    friend CycElem operator*(const CycElem& a, const CycElem& b);
    friend CycElem operator/(const CycElem& a, const CycElem& b);
    friend bool operator==(const CycElem& a, const CycElem& b);
    friend bool operator!=(const CycElem& a, const CycElem& b) { return !(a == b); }

private:
    i64 modulus_;
    std::vector<Rat> coeffs_;
};

/// zeta_m + zeta_m^{-1} = 2cos(2*pi/m) at modulus m (modulus 1 for m in {1,2}).
CycElem make_zeta_plus(i64 m);

/// Multiplicative inverse; throws DivisionByZero on 0.
CycElem invert(const CycElem& a);

/// The field automorphism sigma_u : zeta_N -> zeta_N^u, applied exactly on
/// power-basis coordinates. Throws NotCoprime when gcd(u, N) > 1.
CycElem galois(const CycElem& a, i64 u);

/// a multiplied by zeta_N^e at a's own modulus (cheap monomial product).
CycElem mul_zeta_power(const CycElem& a, i64 e);

CycElem scale(const CycElem& a, const Rat& c);

/// True iff a is fixed by complex conjugation sigma_{-1}.
bool is_real(const CycElem& a);

/// True iff all power-basis coordinates are rational integers. This decides
/// integrality because {zeta_N^i} is an integral basis: the ring of integers
/// of Q(zeta_N) is exactly Z[zeta_N].
bool is_algebraic_integer(const CycElem& a);

/// Certified enclosure of the image of a real element under the fixed
/// embedding zeta_N -> exp(2*pi*i/N), of width <= the requested width.
/// Throws NotReal when is_real(a) fails.
RealInterval eval_real(const CycElem& a, const Rat& width);

/// Exact sign in {-1, 0, +1} under the fixed embedding. Zero comes only from
/// the exact zero test on canonical coefficients; otherwise the certified
/// interval is refined until it excludes zero.
int sign_of(const CycElem& a);

enum class BoundConst { One, Sqrt2, Two };

/// True iff every Galois conjugate sigma_u(a) satisfies |sigma_u(a)| <= bound,
/// decided by exact sign tests on bound - sigma_u(a) and bound + sigma_u(a).
bool conjugate_bound_leq(const CycElem& a, BoundConst bound);

/// Outcome of the Kronecker small-integer classification (the trichotomy for
/// algebraic integers with bounded conjugates). A value can satisfy several
/// branches at once; the primary branch is `kind` and the secondary facts are
/// attached (e.g. sqrt(2) is TwoCosPiRational(1,4) with small_set = +sqrt2).
struct KroneckerClass {
    enum class Kind { RootOfUnity, TwoCosPiRational, SmallSet, None };
    enum class SmallValue { Zero, PlusOne, MinusOne, PlusSqrt2, MinusSqrt2 };

    Kind kind = Kind::None;
    i64 order = 0;  // minimal n with a^n = 1, when kind == RootOfUnity
    // a = 2cos(k*pi/m) with gcd(k, m) = 1, 0 <= k <= m, when has_two_cos.
    // The boundary values +-2 use the (0,1)/(1,1) convention.
    bool has_two_cos = false;
    i64 k = 0;
    i64 m = 0;
    std::optional<SmallValue> small_set;

    std::string to_string() const;
};

/// Classify a per Kronecker's theorem. Requires an algebraic integer
/// (NotAlgebraicInteger otherwise). Returns Kind::None when no rational-
/// conjugate bound holds.
KroneckerClass kronecker_classify(const CycElem& a);

/// Coefficients (ascending) of the monic integer polynomial q_k with
/// q_0 = 1, q_1 = t, q_{n+1} = t*q_n - q_{n-1}.
std::vector<Int> chebyshev_q(i64 k);

/// c_k = sin(k*pi/m)/sin(pi/m) = q_{k-1}(2cos(pi/m)), an algebraic integer;
/// a unit when gcd(m, k) = 1. Requires m >= 2, k >= 1.
CycElem cyclotomic_unit_c(i64 m, i64 k);

/// Distinct Galois conjugates of a (the orbit under Gal(Q(zeta_N)/Q)).
std::vector<CycElem> galois_orbit(const CycElem& a);

/// Monic minimal polynomial over Q, ascending coefficients, computed as the
/// product of t - c over the distinct Galois orbit of a.
std::vector<Rat> minimal_polynomial(const CycElem& a);

/// Re-express a at the smallest divisor modulus that contains it. Never
/// applied automatically.
CycElem canonicalize(const CycElem& a);

/// Diagnostic rendering "a0 + a1*z(N) + a2*z(N)^2 + ...", rationals as "p/q".
/// The output re-parses through parse_cyc_expr to an equal value.
std::string to_string(const CycElem& a);

}  // namespace rootlat
