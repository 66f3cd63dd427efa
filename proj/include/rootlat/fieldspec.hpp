#pragma once

#include "rootlat/cyclo.hpp"
#include "rootlat/numtheory.hpp"

#include <string>
#include <vector>

namespace rootlat {

/// A totally real abelian base field K = Q(zeta_{2n}^+ : n in gens), realized
/// as the fixed field of the congruence subgroup
///   H = {a mod M : gcd(a, M) = 1, a = +-1 (mod 2n) for every generator n}
/// of the units modulo M = lcm{2n}. The degree is [K:Q] = phi(M)/|H|.
///
/// Note on indexing: a generator value n means zeta_{2n} + zeta_{2n}^{-1}, so
/// the field written Q(zeta_28^+, zeta_30^+) elsewhere is gens = {14, 15}.
class FieldDescriptor {
public:
    /// Build a descriptor; each generator must be >= 2 (InvalidGenerator
    /// otherwise). The empty set gives K = Q. Redundant generators are kept
    /// (descriptors with the same fixed field compare equal through mutual
    /// subfield_of).
    static FieldDescriptor make(std::vector<i64> gens);

    const std::vector<i64>& gens() const { return gens_; }
    i64 modulus() const { return modulus_; }
    const std::vector<i64>& subgroup() const { return subgroup_; }
    i64 degree() const { return degree_; }

    /// True iff zeta_{2n}^+ lies in K: every unit a mod lcm(M, 2n) whose
    /// reduction mod M lies in H satisfies a = +-1 (mod 2n). Decided on a
    /// finite generating set of that subgroup.
    bool contains_zeta_plus(i64 n) const;

    /// True iff a (lifted to a common modulus with M) is fixed by every
    /// sigma_u with u mod M in H.
    bool contains_element(const CycElem& a) const;

    /// True iff every generator of this field passes the other's membership
    /// test.
    bool subfield_of(const FieldDescriptor& other) const;

    /// Generators of the subgroup of (Z/m_big)^x that fixes K pointwise
    /// (m_big must be a multiple of M): lifts of H plus generators of the
    /// kernel of (Z/m_big)^x -> (Z/M)^x.
    std::vector<i64> fixing_group_generators(i64 m_big) const;

    std::string to_json_string() const;  // {"gens":[...]} with gens ascending

private:
    FieldDescriptor() = default;
    std::vector<i64> gens_;      // sorted, unique
    i64 modulus_ = 1;            // M
    std::vector<i64> subgroup_;  // H as residues mod M, ascending
    i64 degree_ = 1;             // phi(M)/|H|
};

/// Parse a comma-separated generator list ("14,15"; empty string means Q).
FieldDescriptor parse_field_gens(const std::string& text);

}  // namespace rootlat
