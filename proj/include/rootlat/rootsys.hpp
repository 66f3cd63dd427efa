#pragma once

#include "rootlat/cyclo.hpp"

#include <string>
#include <vector>

namespace rootlat {

/// A catalogued finite Coxeter type. I2(3) and I2(4) normalize to A2 and B2;
/// I2(m) with m >= 5 keeps the dihedral form.
struct CoxeterType {
    enum class Family { A, B, D, E, F, H, I2 };
    Family family;
    i64 rank;  // number of vertices; 2 for I2
    i64 m;     // edge label for I2, otherwise unused (0)

    static CoxeterType make(Family f, i64 rank_or_m);
    /// Accepts "A5", "E8", "H3", "I2(7)", ... (InadmissibleType otherwise).
    static CoxeterType parse(const std::string& text);
    std::string to_string() const;
    bool operator==(const CoxeterType& o) const {
        return family == o.family && rank == o.rank && m == o.m;
    }
};

/// Symmetric matrix of real cyclotomic entries over one ambient modulus,
/// diagonal 2 for root-lattice Grams.
struct GramMatrix {
    i64 size = 0;
    i64 modulus = 1;                // ambient cyclotomic modulus of all entries
    std::vector<CycElem> entries;   // row-major, size*size

    const CycElem& at(i64 i, i64 j) const { return entries[i * size + j]; }
    static GramMatrix from_entries(i64 size, std::vector<CycElem> entries);
};

/// A root in simple-basis coordinates; all coordinates share the Gram's
/// ambient modulus.
using RootVec = std::vector<CycElem>;

/// Simple-root Gram matrix of a catalogued type: off-diagonal entries
/// -2cos(pi/m_ij) read off the diagram, ambient modulus lcm{2 m_ij} over the
/// edges.
GramMatrix gram_of_type(const CoxeterType& t);

/// x^T G y, exact.
CycElem pairing(const GramMatrix& g, const RootVec& x, const RootVec& y);

/// Closure of the coordinate unit vectors under v -> v - (r^T G v) r over all
/// discovered roots r. Deduplication is by canonical coordinates at the
/// ambient modulus. Throws CapExceeded when the worklist passes cap.
std::vector<RootVec> enumerate_roots(const GramMatrix& g, i64 cap);

/// Expected |Phi| for a catalogued type (the cardinality table).
i64 expected_root_count(const CoxeterType& t);

/// Default enumeration cap: twice the expected size for catalogued types.
i64 default_cap(const CoxeterType& t);

/// The classical A_n/B_n/D_n root sets transcribed from their explicit
/// coordinate formulas (InadmissibleType for other families).
std::vector<RootVec> expected_roots_classical(const CoxeterType& t);

/// Partition roots by the exact sign of the dual functional t applied to the
/// simple-root coordinates, t(alpha) = sum t_i a_i; t must be generic
/// (NonGenericFunctional identifies a violating root otherwise). Returns
/// (plus, minus) with minus = -plus elementwise.
std::pair<std::vector<RootVec>, std::vector<RootVec>> positive_system(
    const std::vector<RootVec>& roots, const GramMatrix& g,
    const std::vector<Rat>& t);

/// The fundamental system determined by t: the positive roots alpha whose
/// reflection maps plus \ {alpha} into plus. The result is verified against
/// the definition directly (basis; every root is a one-signed combination
/// with algebraic-integer coefficients that are 0 or >= 1), and
/// VerificationFailure is raised if that audit fails.
std::vector<RootVec> fundamental_system(const std::vector<RootVec>& roots,
                                        const GramMatrix& g,
                                        const std::vector<Rat>& t);

/// Deterministic generic functional: t_i = (cap+1)^(n-i), falling back to
/// t_i + j*(i+1) for j = 1, 2, ... until the exact genericity check passes.
std::vector<Rat> default_functional(const std::vector<RootVec>& roots,
                                    const GramMatrix& g, i64 cap);

/// The unique m >= 2 with alpha^T G beta = -2cos(pi/m) (m = 2 means
/// orthogonal); InvalidRootPair when the pairing has no such form.
i64 pair_label(const RootVec& alpha, const RootVec& beta, const GramMatrix& g);

/// Labeled simple graph on a fundamental system: edges where m >= 3.
struct DiagramGraph {
    i64 n = 0;
    struct Edge {
        i64 a, b;  // a < b
        i64 label; // >= 3
    };
    std::vector<Edge> edges;
};

DiagramGraph diagram_of(const std::vector<RootVec>& delta, const GramMatrix& g);

/// Match each connected component against the catalogue by degree sequence,
/// label multiset and branch structure. UnrecognizedDiagram for foreign input.
std::vector<CoxeterType> recognize_type(const DiagramGraph& d);

/// Connected components of the off-diagonal support with restricted blocks,
/// in index order.
std::vector<std::pair<std::vector<i64>, GramMatrix>> decompose(const GramMatrix& g);

struct ValidationReport {
    struct Item {
        std::string check;
        bool pass;
        std::string detail;
    };
    std::vector<Item> items;
    bool all_pass = true;
    void add(const std::string& check, bool pass, const std::string& detail = "");
};

/// (a) total positive definiteness via exact conjugate-wise leading-minor
/// signs, (b) every pairwise root product classifies as 2cos(r*pi), (c) every
/// root has self-pairing 2 and integral coordinates.
ValidationReport validate_root_lattice(const GramMatrix& g,
                                       const std::vector<RootVec>& roots);

/// True iff all leading principal minors have positive sign under every
/// Galois conjugate.
bool is_totally_positive_definite(const GramMatrix& g);

std::string root_to_string(const RootVec& v);

}  // namespace rootlat
