#pragma once

#include "rootlat/fieldspec.hpp"
#include "rootlat/rootsys.hpp"

#include <string>
#include <utility>
#include <vector>

namespace rootlat {

/// The directed divisibility graph Q_K: vertices are the n > 1 with
/// zeta_{2n}^+ in K, edges x -> y where x | y and y/x is prime. Components
/// are taken under undirected connectivity.
struct QGraph {
    std::vector<i64> vertices;                  // ascending
    std::vector<std::pair<i64, i64>> edges;     // ascending lexicographically
    std::vector<std::vector<i64>> components;   // each ascending, by min member

    bool has_vertex(i64 n) const;
    const std::vector<i64>& component_of(i64 n) const;  // pre: has_vertex(n)
};

/// Scan n with phi(2n) <= 2d (hence 2n <= 8d^2) and keep those passing the
/// membership oracle; then attach edges and components.
QGraph compute_qk(const FieldDescriptor& f);

/// One isomorphism class of rank-2 root lattices, indexed by the order of its
/// group of roots of unity.
struct RankTwoClass {
    enum class Kind { PrimePower, Component };
    Kind kind;
    std::vector<i64> members;  // {q}, or the component, ascending
    i64 mu_order;              // 2q, or 2*lcm(C)
    std::string label;         // "A1xA1" when mu_order = 4, else "I2(m)"

    bool irreducible() const { return mu_order != 4; }
};

/// (P_K, R_K): prime-power singletons, and components containing a
/// non-prime-power.
std::pair<std::vector<std::vector<i64>>, std::vector<std::vector<i64>>>
partition_classes(const QGraph& g);

/// 2q for a singleton prime-power class, lcm{2n : n in C} = 2*lcm(C) for a
/// component class.
i64 mu_order_of(const std::vector<i64>& members, RankTwoClass::Kind kind);

/// One class per element of P_K u R_K, sorted by mu_order.
std::vector<RankTwoClass> classify_rank2(const FieldDescriptor& f);

/// m in Q_K and (m a prime power or maximal under divisibility in Q_K);
/// cross-validated against membership of I2(m) in classify_rank2 — a
/// discrepancy raises VerificationFailure instead of being resolved silently.
bool irreducible_I2_exists(const FieldDescriptor& f, i64 m);

struct ExistenceEntry {
    std::string label;      // "A3", "B4", "E6", "H3", ...
    bool exists;
    std::string condition;  // "always", "4 in Q_K", "5 in Q_K"
};

struct ExistenceTable {
    std::vector<ExistenceEntry> entries;  // catalogue order
    bool A = true, B = false, D = true;
    bool E6 = true, E7 = true, E8 = true;
    bool F4 = false, H3 = false, H4 = false;
};

/// Theorem-4.7 table for rank >= 3: A/D/E always, B_n (n >= 3) and F4 iff
/// 4 in Q_K, H3/H4 iff 5 in Q_K.
ExistenceTable classify_rank_ge3(const FieldDescriptor& f, i64 n_max);

/// Gram matrix [[2, zeta_{2n}^+], [zeta_{2n}^+, 2]] of the basis
/// {1, zeta_{2n}} of O[zeta_{2n}].
GramMatrix rank2_gram(i64 n);

/// Coordinates (a, b) with x = a + b*zeta_{2n} for every x in mu_{2m'}, where
/// m' = n for a prime power and lcm of n's component otherwise. This is the
/// graph-theoretic enumeration; the reflection orbit of {1, zeta_{2n}} can be
/// a strict subset of these roots when the component's lcm exceeds n, so it
/// is NOT used here.
std::vector<std::pair<CycElem, CycElem>> rank2_roots(const FieldDescriptor& f, i64 n);

struct ClassMapping {
    RankTwoClass from;
    RankTwoClass to;
};

/// Scalar-extension map on rank-2 classes for F1 a subfield of F2: prime
/// power classes are stable, a component class maps to the component of
/// Q_{F2} containing it. Throws NotSubfield when the precondition fails.
std::vector<ClassMapping> extend_classes(const FieldDescriptor& f1,
                                         const FieldDescriptor& f2);

/// DOT rendering: vertices labeled n, prime powers double-circled, directed
/// edges; deterministic ascending order.
std::string to_dot(const QGraph& g);

}  // namespace rootlat
