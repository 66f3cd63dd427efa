#include "rootlat/qgraph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace rootlat {

bool QGraph::has_vertex(i64 n) const {
    return std::binary_search(vertices.begin(), vertices.end(), n);
}

const std::vector<i64>& QGraph::component_of(i64 n) const {
    for (const auto& c : components)
        if (std::binary_search(c.begin(), c.end(), n)) return c;
    throw NotInQK(std::to_string(n) + " is not a vertex of Q_K");
}

QGraph compute_qk(const FieldDescriptor& f) {
    QGraph g;
    i64 bound = 2 * f.degree();
    for (i64 k : phi_bounded(bound)) {
        if (k % 2 != 0 || k < 4) continue;
        i64 n = k / 2;
        if (f.contains_zeta_plus(n)) g.vertices.push_back(n);
    }
    std::sort(g.vertices.begin(), g.vertices.end());

    for (i64 x : g.vertices)
        for (i64 y : g.vertices)
            if (x < y && y % x == 0 && is_prime(y / x)) g.edges.emplace_back(x, y);
    std::sort(g.edges.begin(), g.edges.end());

    std::vector<i64> parent(g.vertices.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<i64(i64)> find = [&](i64 a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    auto index_of = [&](i64 n) {
        return std::lower_bound(g.vertices.begin(), g.vertices.end(), n) -
               g.vertices.begin();
    };
    for (auto [x, y] : g.edges) parent[find(index_of(x))] = find(index_of(y));
    std::map<i64, std::vector<i64>> comps;
    for (std::size_t i = 0; i < g.vertices.size(); ++i)
        comps[find(i)].push_back(g.vertices[i]);
    for (auto& [root, verts] : comps) g.components.push_back(verts);
    std::sort(g.components.begin(), g.components.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return g;
}

std::pair<std::vector<std::vector<i64>>, std::vector<std::vector<i64>>>
partition_classes(const QGraph& g) {
    std::vector<std::vector<i64>> p, r;
    for (i64 q : g.vertices)
        if (is_prime_power(q)) p.push_back({q});
    for (const auto& c : g.components) {
        bool has_npp = false;
        for (i64 n : c)
            if (!is_prime_power(n)) has_npp = true;
        if (has_npp) r.push_back(c);
    }
    return {p, r};
}

i64 mu_order_of(const std::vector<i64>& members, RankTwoClass::Kind kind) {
    if (kind == RankTwoClass::Kind::PrimePower) return 2 * members.at(0);
    i64 l = 1;
    for (i64 n : members) l = lcm_i64(l, n);
    return 2 * l;
}

namespace {

RankTwoClass make_class(std::vector<i64> members, RankTwoClass::Kind kind) {
    RankTwoClass c;
    c.kind = kind;
    c.members = std::move(members);
    c.mu_order = mu_order_of(c.members, kind);
    c.label = c.mu_order == 4 ? "A1xA1" : "I2(" + std::to_string(c.mu_order / 2) + ")";
    return c;
}

}  // namespace

std::vector<RankTwoClass> classify_rank2(const FieldDescriptor& f) {
    QGraph g = compute_qk(f);
    auto [p, r] = partition_classes(g);
    std::vector<RankTwoClass> out;
    for (auto& cls : p) out.push_back(make_class(cls, RankTwoClass::Kind::PrimePower));
    for (auto& cls : r) out.push_back(make_class(cls, RankTwoClass::Kind::Component));
    std::sort(out.begin(), out.end(), [](const RankTwoClass& a, const RankTwoClass& b) {
        return a.mu_order < b.mu_order;
    });
    return out;
}

bool irreducible_I2_exists(const FieldDescriptor& f, i64 m) {
    if (m < 3) throw Error("irreducible_I2_exists requires m >= 3");
    QGraph g = compute_qk(f);
    bool predicate = false;
    if (g.has_vertex(m)) {
        bool maximal = true;
        for (i64 y : g.vertices)
            if (y != m && y % m == 0) maximal = false;
        predicate = is_prime_power(m) || maximal;
    }
    // Cross-check against the classification (Theorem 5.15); the two must
    // agree, and a mismatch is an internal error rather than an answer.
    bool listed = false;
    for (const RankTwoClass& c : classify_rank2(f))
        if (c.irreducible() && c.mu_order == 2 * m) listed = true;
    if (listed != predicate)
        throw VerificationFailure(
            "irreducible_I2_exists disagrees with classify_rank2 at m = " +
            std::to_string(m));
    return predicate;
}

ExistenceTable classify_rank_ge3(const FieldDescriptor& f, i64 n_max) {
    if (n_max < 3) throw Error("classify_rank_ge3 requires n_max >= 3");
    bool has4 = f.contains_zeta_plus(4);
    bool has5 = f.contains_zeta_plus(5);
    ExistenceTable t;
    t.B = has4;
    t.F4 = has4;
    t.H3 = has5;
    t.H4 = has5;
    for (i64 n = 3; n <= n_max; ++n)
        t.entries.push_back({"A" + std::to_string(n), true, "always"});
    for (i64 n = 3; n <= n_max; ++n)
        t.entries.push_back({"B" + std::to_string(n), has4, "4 in Q_K"});
    for (i64 n = 4; n <= n_max; ++n)
        t.entries.push_back({"D" + std::to_string(n), true, "always"});
    t.entries.push_back({"E6", true, "always"});
    t.entries.push_back({"E7", true, "always"});
    t.entries.push_back({"E8", true, "always"});
    t.entries.push_back({"F4", has4, "4 in Q_K"});
    t.entries.push_back({"H3", has5, "5 in Q_K"});
    t.entries.push_back({"H4", has5, "5 in Q_K"});
    return t;
}

GramMatrix rank2_gram(i64 n) {
    if (n < 2) throw Error("rank2_gram requires n >= 2");
    CycElem zp = make_zeta_plus(2 * n);
    return GramMatrix::from_entries(2, {CycElem(2), zp, zp, CycElem(2)});
}

std::vector<std::pair<CycElem, CycElem>> rank2_roots(const FieldDescriptor& f, i64 n) {
    if (n < 2) throw Error("rank2_roots requires n >= 2");
    QGraph g = compute_qk(f);
    if (!g.has_vertex(n))
        throw NotInQK(std::to_string(n) + " is not in Q_K of this field");
    i64 m_prime = n;
    if (!is_prime_power(n)) {
        m_prime = 1;
        for (i64 v : g.component_of(n)) m_prime = lcm_i64(m_prime, v);
    }
    i64 m_big = lcm_i64(f.modulus(), 2 * m_prime);  // 2n | 2m' since n | m'

    // sigma: an ambient automorphism fixing K whose restriction to
    // K(zeta_{2n})/K is the nontrivial element
    i64 u = 0;
    for (i64 cand = 2; cand < m_big; ++cand) {
        if (std::gcd(cand, m_big) != 1) continue;
        bool fixes_k = true;
        for (i64 gen : f.gens()) {
            i64 r = cand % (2 * gen);
            if (r != 1 && r != 2 * gen - 1) { fixes_k = false; break; }
        }
        if (!fixes_k) continue;
        if (cand % (2 * n) == 1) continue;
        u = cand;
        break;
    }
    if (u == 0)
        throw std::logic_error("rank2_roots: no nontrivial automorphism over K");

    i64 stride_zeta = m_big / (2 * n);
    CycElem zeta = CycElem::zeta_power(m_big, stride_zeta);
    CycElem sigma_zeta = CycElem::zeta_power(m_big, (stride_zeta * u) % m_big);
    CycElem inv_denom = invert(zeta - sigma_zeta);

    i64 stride_mu = m_big / (2 * m_prime);
    std::vector<std::pair<CycElem, CycElem>> out;
    for (i64 t = 0; t < 2 * m_prime; ++t) {
        i64 e = (t * stride_mu) % m_big;
        CycElem x = CycElem::zeta_power(m_big, e);
        CycElem sx = CycElem::zeta_power(m_big, (e * u) % m_big);
        CycElem b = (x - sx) * inv_denom;
        CycElem a = x - mul_zeta_power(b, stride_zeta);
        if (!is_algebraic_integer(a) || !is_algebraic_integer(b))
            throw IntegralityViolation(
                "rank2_roots: non-integral coordinate for mu element " +
                std::to_string(t));
        if (!f.contains_element(a) || !f.contains_element(b))
            throw VerificationFailure(
                "rank2_roots: coordinate outside the base field for mu element " +
                std::to_string(t));
        out.emplace_back(std::move(a), std::move(b));
    }
    std::sort(out.begin(), out.end(), [](const auto& p, const auto& q) {
        if (p.first.coeffs() != q.first.coeffs())
            return p.first.coeffs() < q.first.coeffs();
        return p.second.coeffs() < q.second.coeffs();
    });
    return out;
}

std::vector<ClassMapping> extend_classes(const FieldDescriptor& f1,
                                         const FieldDescriptor& f2) {
    if (!f1.subfield_of(f2))
        throw NotSubfield("extend_classes: first field is not a subfield of the second");
    QGraph g2 = compute_qk(f2);
    std::vector<ClassMapping> out;
    for (const RankTwoClass& c : classify_rank2(f1)) {
        ClassMapping m;
        m.from = c;
        if (c.kind == RankTwoClass::Kind::PrimePower) {
            m.to = make_class(c.members, RankTwoClass::Kind::PrimePower);
        } else {
            m.to = make_class(g2.component_of(c.members.front()),
                              RankTwoClass::Kind::Component);
        }
        out.push_back(std::move(m));
    }
    return out;
}

std::string to_dot(const QGraph& g) {
    std::ostringstream os;
    os << "digraph QK {\n";
    os << "  rankdir=BT;\n";
    for (i64 n : g.vertices) {
        os << "  " << n;
        if (is_prime_power(n)) os << " [peripheries=2]";
        os << ";\n";
    }
    for (auto [x, y] : g.edges) os << "  " << x << " -> " << y << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace rootlat
