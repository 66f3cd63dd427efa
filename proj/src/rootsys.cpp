#include "rootlat/rootsys.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace rootlat {

namespace {

std::vector<Rat> flatten(const RootVec& v) {
    std::vector<Rat> out;
    for (const CycElem& c : v)
        out.insert(out.end(), c.coeffs().begin(), c.coeffs().end());
    return out;
}

CycElem dot(const RootVec& a, const RootVec& b) {
    CycElem s;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero() && !b[i].is_zero()) s = s + a[i] * b[i];
    return s;
}

RootVec matvec(const GramMatrix& g, const RootVec& v) {
    RootVec out(g.size, CycElem().lifted_to(g.modulus));
    for (i64 i = 0; i < g.size; ++i) {
        CycElem s = CycElem().lifted_to(g.modulus);
        for (i64 j = 0; j < g.size; ++j)
            if (!g.at(i, j).is_zero() && !v[j].is_zero())
                s = s + g.at(i, j) * v[j];
        out[i] = s;
    }
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// CoxeterType

CoxeterType CoxeterType::make(Family f, i64 v) {
    CoxeterType t{f, 0, 0};
    switch (f) {
        case Family::A:
            if (v < 1) throw InadmissibleType("A_n requires n >= 1");
            t.rank = v;
            break;
        case Family::B:
            if (v < 2) throw InadmissibleType("B_n requires n >= 2");
            t.rank = v;
            break;
        case Family::D:
            if (v < 4) throw InadmissibleType("D_n requires n >= 4");
            t.rank = v;
            break;
        case Family::E:
            if (v < 6 || v > 8) throw InadmissibleType("E_n requires n in {6,7,8}");
            t.rank = v;
            break;
        case Family::F:
            if (v != 4) throw InadmissibleType("F_n requires n = 4");
            t.rank = 4;
            break;
        case Family::H:
            if (v != 3 && v != 4) throw InadmissibleType("H_n requires n in {3,4}");
            t.rank = v;
            break;
        case Family::I2:
            if (v < 3) throw InadmissibleType("I2(m) requires m >= 3");
            if (v == 3) return make(Family::A, 2);
            if (v == 4) return make(Family::B, 2);
            t.rank = 2;
            t.m = v;
            break;
    }
    return t;
}

CoxeterType CoxeterType::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!isspace(static_cast<unsigned char>(c)) && c != '_') s += c;
    if (s.empty()) throw InadmissibleType("empty type");
    auto num = [&](const std::string& part) -> i64 {
        try {
            std::size_t used = 0;
            i64 v = std::stoll(part, &used);
            if (used != part.size()) throw std::invalid_argument(part);
            return v;
        } catch (const std::exception&) {
            throw InadmissibleType("cannot parse type '" + text + "'");
        }
    };
    if (s.size() >= 4 && (s.substr(0, 3) == "I2(") && s.back() == ')')
        return make(Family::I2, num(s.substr(3, s.size() - 4)));
    char f = s[0];
    std::string rest = s.substr(1);
    switch (f) {
        case 'A': return make(Family::A, num(rest));
        case 'B': return make(Family::B, num(rest));
        case 'C': return make(Family::B, num(rest));  // B and C share one diagram
        case 'D': return make(Family::D, num(rest));
        case 'E': return make(Family::E, num(rest));
        case 'F': return make(Family::F, num(rest));
        case 'H': return make(Family::H, num(rest));
        default: throw InadmissibleType("unknown type '" + text + "'");
    }
}

std::string CoxeterType::to_string() const {
    switch (family) {
        case Family::A: return "A" + std::to_string(rank);
        case Family::B: return "B" + std::to_string(rank);
        case Family::D: return "D" + std::to_string(rank);
        case Family::E: return "E" + std::to_string(rank);
        case Family::F: return "F4";
        case Family::H: return "H" + std::to_string(rank);
        case Family::I2: return "I2(" + std::to_string(m) + ")";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Gram matrices

GramMatrix GramMatrix::from_entries(i64 size, std::vector<CycElem> entries) {
    if (static_cast<i64>(entries.size()) != size * size)
        throw Error("GramMatrix: wrong entry count");
    i64 m = 1;
    for (const CycElem& e : entries) m = lcm_i64(m, e.modulus());
    for (CycElem& e : entries) e = e.lifted_to(m);
    for (i64 i = 0; i < size; ++i)
        for (i64 j = 0; j < i; ++j)
            if (entries[i * size + j] != entries[j * size + i])
                throw Error("GramMatrix: entries are not symmetric");
    GramMatrix g;
    g.size = size;
    g.modulus = m;
    g.entries = std::move(entries);
    return g;
}

namespace {

// Edges (i, j, m_ij) of the catalogued diagrams, 0-indexed vertices.
std::vector<std::tuple<i64, i64, i64>> edges_of_type(const CoxeterType& t) {
    using F = CoxeterType::Family;
    std::vector<std::tuple<i64, i64, i64>> e;
    i64 n = t.rank;
    switch (t.family) {
        case F::A:
            for (i64 i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1, 3);
            break;
        case F::B:
            for (i64 i = 0; i + 2 < n; ++i) e.emplace_back(i, i + 1, 3);
            e.emplace_back(n - 2, n - 1, 4);
            break;
        case F::D:
            for (i64 i = 0; i + 2 < n; ++i) e.emplace_back(i, i + 1, 3);
            e.emplace_back(n - 3, n - 1, 3);
            break;
        case F::E:
            for (i64 i = 0; i + 2 < n; ++i) e.emplace_back(i, i + 1, 3);
            e.emplace_back(2, n - 1, 3);
            break;
        case F::F:
            e = {{0, 1, 3}, {1, 2, 4}, {2, 3, 3}};
            break;
        case F::H:
            e.emplace_back(0, 1, 5);
            for (i64 i = 1; i + 1 < n; ++i) e.emplace_back(i, i + 1, 3);
            break;
        case F::I2:
            e.emplace_back(0, 1, t.m);
            break;
    }
    return e;
}

}  // namespace

GramMatrix gram_of_type(const CoxeterType& t) {
    i64 n = t.rank;
    auto edges = edges_of_type(t);
    std::vector<CycElem> entries(n * n, CycElem(0));
    for (i64 i = 0; i < n; ++i) entries[i * n + i] = CycElem(2);
    for (auto [i, j, m] : edges) {
        CycElem v = -make_zeta_plus(2 * m);  // -2cos(pi/m)
        entries[i * n + j] = v;
        entries[j * n + i] = v;
    }
    return GramMatrix::from_entries(n, std::move(entries));
}

CycElem pairing(const GramMatrix& g, const RootVec& x, const RootVec& y) {
    CycElem s;
    for (i64 i = 0; i < g.size; ++i) {
        if (x[i].is_zero()) continue;
        CycElem row;
        for (i64 j = 0; j < g.size; ++j)
            if (!g.at(i, j).is_zero() && !y[j].is_zero())
                row = row + g.at(i, j) * y[j];
        if (!row.is_zero()) s = s + x[i] * row;
    }
    return s;
}

// ---------------------------------------------------------------------------
// Root enumeration

std::vector<RootVec> enumerate_roots(const GramMatrix& g, i64 cap) {
    const i64 n = g.size;
    const CycElem two(2);
    for (i64 i = 0; i < n; ++i)
        if (g.at(i, i) != two)
            throw Error("enumerate_roots: Gram diagonal entries must equal 2");

    const CycElem zero = CycElem(0).lifted_to(g.modulus);
    std::map<std::vector<Rat>, i64> seen;
    std::vector<RootVec> roots;
    std::vector<RootVec> g_roots;  // cached G * root, kept in lockstep

    auto try_add = [&](RootVec v, RootVec gv) -> bool {
        auto key = flatten(v);
        if (seen.count(key)) return false;
        seen.emplace(std::move(key), static_cast<i64>(roots.size()));
        roots.push_back(std::move(v));
        g_roots.push_back(std::move(gv));
        if (static_cast<i64>(roots.size()) > cap)
            throw CapExceeded("enumerate_roots: more than " + std::to_string(cap) +
                              " roots; invalid or non-catalogue Gram");
        return true;
    };

    for (i64 i = 0; i < n; ++i) {
        RootVec e(n, zero);
        e[i] = CycElem(1).lifted_to(g.modulus);
        RootVec ge(n, zero);
        for (i64 r = 0; r < n; ++r) ge[r] = g.at(r, i);
        try_add(std::move(e), std::move(ge));
    }

    // reflect every pair both ways; each new root extends the outer loop, so
    // on termination the set is closed under all of its own reflections
    for (std::size_t i = 0; i < roots.size(); ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            for (int dir = 0; dir < 2; ++dir) {
                const RootVec& r = dir == 0 ? roots[j] : roots[i];
                const RootVec& gr = dir == 0 ? g_roots[j] : g_roots[i];
                const RootVec& v = dir == 0 ? roots[i] : roots[j];
                const RootVec& gv = dir == 0 ? g_roots[i] : g_roots[j];
                CycElem c = dot(gr, v);  // r^T G v
                if (c.is_zero()) continue;
                RootVec w(n), gw(n);
                for (i64 t = 0; t < n; ++t) {
                    w[t] = v[t] - c * r[t];
                    gw[t] = gv[t] - c * gr[t];
                }
                try_add(std::move(w), std::move(gw));
                if (i == j) break;  // s_v(v) = -v either way
            }
        }
    }

    std::sort(roots.begin(), roots.end(), [](const RootVec& a, const RootVec& b) {
        return flatten(a) < flatten(b);
    });
    return roots;
}

i64 expected_root_count(const CoxeterType& t) {
    using F = CoxeterType::Family;
    i64 n = t.rank;
    switch (t.family) {
        case F::A: return n * (n + 1);
        case F::B: return 2 * n * n;
        case F::D: return 2 * n * (n - 1);
        case F::E: return n == 6 ? 72 : n == 7 ? 126 : 240;
        case F::F: return 48;
        case F::H: return n == 3 ? 30 : 120;
        case F::I2: return 2 * t.m;
    }
    return 0;
}

i64 default_cap(const CoxeterType& t) { return 2 * expected_root_count(t); }

std::vector<RootVec> expected_roots_classical(const CoxeterType& t) {
    using F = CoxeterType::Family;
    if (t.family != F::A && t.family != F::B && t.family != F::D)
        throw InadmissibleType("expected_roots_classical covers A, B, D only");
    const i64 n = t.rank;
    const GramMatrix g = gram_of_type(t);
    const CycElem zero = CycElem(0).lifted_to(g.modulus);
    const CycElem one = CycElem(1).lifted_to(g.modulus);
    const CycElem twoc = CycElem(2).lifted_to(g.modulus);
    std::vector<RootVec> out;
    auto push_pm = [&](const RootVec& v) {
        out.push_back(v);
        RootVec neg(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) neg[i] = -v[i];
        out.push_back(std::move(neg));
    };
    if (t.family == F::A) {
        for (i64 i = 1; i <= n; ++i)
            for (i64 j = i; j <= n; ++j) {
                RootVec v(n, zero);
                for (i64 k = i; k <= j; ++k) v[k - 1] = one;
                push_pm(v);
            }
    } else if (t.family == F::B) {
        const CycElem sqrt2 = make_zeta_plus(8).lifted_to(g.modulus);
        for (i64 i = 1; i < n; ++i)
            for (i64 j = i + 1; j <= n; ++j) {
                RootVec v(n, zero);
                for (i64 k = i; k <= j - 1; ++k) v[k - 1] = one;
                push_pm(v);
            }
        for (i64 k = 1; k <= n; ++k) {
            RootVec v(n, zero);
            for (i64 t2 = k; t2 <= n - 1; ++t2) v[t2 - 1] = sqrt2;
            v[n - 1] = one;
            push_pm(v);
        }
        for (i64 i = 1; i < n; ++i)
            for (i64 j = i + 1; j <= n; ++j) {
                RootVec v(n, zero);
                for (i64 k = i; k <= j - 1; ++k) v[k - 1] = one;
                for (i64 k = j; k <= n - 1; ++k) v[k - 1] = twoc;
                v[n - 1] = sqrt2;
                push_pm(v);
            }
    } else {  // D_n
        for (i64 i = 1; i <= n; ++i)
            for (i64 j = i + 1; j <= n + 1; ++j) {
                // the branch roots alpha_{n-1}, alpha_n are orthogonal, so the
                // consecutive segment ending at alpha_n exists only for
                // i <= n-2 (and the singleton i = n); (n-1, n+1) is excluded
                if (i == n - 1 && j == n + 1) continue;
                RootVec v(n, zero);
                for (i64 k = i; k <= j - 1; ++k) v[k - 1] = one;
                push_pm(v);
            }
        for (i64 k = 1; k <= n - 2; ++k)
            for (i64 l = k + 1; l <= n - 2; ++l) {
                RootVec v(n, zero);
                for (i64 s = k; s <= l - 1; ++s) v[s - 1] = one;
                for (i64 s = l; s <= n - 2; ++s) v[s - 1] = twoc;
                v[n - 2] = one;
                v[n - 1] = one;
                push_pm(v);
            }
        for (i64 m = 1; m <= n - 2; ++m) {
            RootVec v(n, zero);
            for (i64 s = m; s <= n - 2; ++s) v[s - 1] = one;
            v[n - 1] = one;
            push_pm(v);
        }
    }
    std::sort(out.begin(), out.end(), [](const RootVec& a, const RootVec& b) {
        return flatten(a) < flatten(b);
    });
    return out;
}

// ---------------------------------------------------------------------------
// Positive and fundamental systems

namespace {

// t is a dual functional on simple-root coordinates: t(alpha) = sum t_i a_i.
// Every separating functional of the paper's form v -> v . alpha arises this
// way (the pairing is nondegenerate), and this is the reading under which the
// stated worked examples hold.
CycElem functional_value(const GramMatrix& g, const std::vector<Rat>& t,
                         const RootVec& alpha) {
    CycElem s = CycElem(0).lifted_to(g.modulus);
    for (i64 i = 0; i < g.size; ++i) {
        if (t[i] == 0 || alpha[i].is_zero()) continue;
        s = s + scale(alpha[i], t[i]);
    }
    return s;
}

}  // namespace

std::pair<std::vector<RootVec>, std::vector<RootVec>> positive_system(
    const std::vector<RootVec>& roots, const GramMatrix& g,
    const std::vector<Rat>& t) {
    if (static_cast<i64>(t.size()) != g.size)
        throw Error("positive_system: functional has wrong dimension");
    std::vector<RootVec> plus, minus;
    for (const RootVec& alpha : roots) {
        int s = sign_of(functional_value(g, t, alpha));
        if (s == 0)
            throw NonGenericFunctional("functional vanishes on root " +
                                       root_to_string(alpha));
        (s > 0 ? plus : minus).push_back(alpha);
    }
    return {plus, minus};
}

namespace {

// Gauss-Jordan inverse of the matrix whose columns are the given vectors.
// Returns empty when singular.
std::vector<std::vector<CycElem>> inverse_of_columns(const std::vector<RootVec>& cols,
                                                     i64 n) {
    std::vector<std::vector<CycElem>> m(n, std::vector<CycElem>(2 * n));
    for (i64 r = 0; r < n; ++r) {
        for (i64 c = 0; c < n; ++c) m[r][c] = cols[c][r];
        for (i64 c = 0; c < n; ++c) m[r][n + c] = CycElem(r == c ? 1 : 0);
    }
    for (i64 col = 0; col < n; ++col) {
        i64 piv = -1;
        for (i64 r = col; r < n; ++r)
            if (!m[r][col].is_zero()) { piv = r; break; }
        if (piv < 0) return {};
        std::swap(m[col], m[piv]);
        CycElem inv = invert(m[col][col]);
        for (i64 c = col; c < 2 * n; ++c) m[col][c] = m[col][c] * inv;
        for (i64 r = 0; r < n; ++r) {
            if (r == col || m[r][col].is_zero()) continue;
            CycElem f = m[r][col];
            for (i64 c = col; c < 2 * n; ++c)
                m[r][c] = m[r][c] - f * m[col][c];
        }
    }
    std::vector<std::vector<CycElem>> out(n, std::vector<CycElem>(n));
    for (i64 r = 0; r < n; ++r)
        for (i64 c = 0; c < n; ++c) out[r][c] = m[r][n + c];
    return out;
}

}  // namespace

std::vector<RootVec> fundamental_system(const std::vector<RootVec>& roots,
                                        const GramMatrix& g,
                                        const std::vector<Rat>& t) {
    auto [plus, minus] = positive_system(roots, g, t);
    const i64 n = g.size;

    std::set<std::vector<Rat>> plus_keys;
    for (const RootVec& a : plus) plus_keys.insert(flatten(a));

    std::vector<RootVec> delta;
    for (const RootVec& alpha : plus) {
        RootVec galpha = matvec(g, alpha);
        bool keeps = true;
        for (const RootVec& beta : plus) {
            if (&beta == &alpha) continue;
            CycElem c = dot(galpha, beta);
            if (c.is_zero()) continue;
            RootVec w(n);
            for (i64 k = 0; k < n; ++k) w[k] = beta[k] - c * alpha[k];
            if (!plus_keys.count(flatten(w))) { keeps = false; break; }
        }
        if (keeps) delta.push_back(alpha);
    }

    if (static_cast<i64>(delta.size()) != n)
        throw VerificationFailure("fundamental system has size " +
                                  std::to_string(delta.size()) + ", expected " +
                                  std::to_string(n));

    // Independent audit against the definition: every root must be a
    // one-signed combination with coefficients in {0} or >= 1, all algebraic
    // integers, over the basis delta.
    auto inv = inverse_of_columns(delta, n);
    if (inv.empty())
        throw VerificationFailure("fundamental system is not a basis");
    for (const RootVec& alpha : roots) {
        std::vector<CycElem> c(n);
        for (i64 r = 0; r < n; ++r) {
            CycElem s;
            for (i64 k = 0; k < n; ++k)
                if (!inv[r][k].is_zero() && !alpha[k].is_zero())
                    s = s + inv[r][k] * alpha[k];
            c[r] = s;
        }
        int overall = 0;
        for (i64 r = 0; r < n; ++r) {
            if (c[r].is_zero()) continue;
            if (!is_algebraic_integer(c[r]))
                throw VerificationFailure("non-integral coefficient " +
                                          to_string(c[r]) + " over the fundamental system");
            if (overall == 0) overall = sign_of(c[r]);
        }
        if (overall == 0) continue;  // alpha = 0 cannot happen for roots
        for (i64 r = 0; r < n; ++r) {
            if (c[r].is_zero()) continue;
            CycElem v = overall > 0 ? c[r] : -c[r];
            if (sign_of(v) <= 0 || sign_of(v - CycElem(1)) < 0)
                throw VerificationFailure(
                    "coefficient " + to_string(v) +
                    " violates the O_{>=1} condition of the fundamental system");
        }
    }

    std::sort(delta.begin(), delta.end(), [](const RootVec& a, const RootVec& b) {
        return flatten(a) < flatten(b);
    });
    return delta;
}

std::vector<Rat> default_functional(const std::vector<RootVec>& roots,
                                    const GramMatrix& g, i64 cap) {
    const i64 n = g.size;
    std::vector<Rat> base(n);
    for (i64 i = 0; i < n; ++i) {
        Int p;
        mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(cap + 1),
                      static_cast<unsigned long>(n - 1 - i));
        base[i] = Rat(p);
    }
    for (i64 j = 0;; ++j) {
        std::vector<Rat> t(n);
        for (i64 i = 0; i < n; ++i) t[i] = base[i] + rat_of(j * (i + 1));
        bool generic = true;
        for (const RootVec& alpha : roots) {
            if (sign_of(functional_value(g, t, alpha)) == 0) {
                generic = false;
                break;
            }
        }
        if (generic) return t;
        if (j > 1000)
            throw std::logic_error("default_functional: no generic candidate found");
    }
}

// ---------------------------------------------------------------------------
// Diagrams

i64 pair_label(const RootVec& alpha, const RootVec& beta, const GramMatrix& g) {
    CycElem v = pairing(g, alpha, beta);
    KroneckerClass kc;
    try {
        kc = kronecker_classify(v);
    } catch (const NotAlgebraicInteger&) {
        throw InvalidRootPair("pairing " + to_string(v) + " is not an algebraic integer");
    }
    // need v = -2cos(pi/m), i.e. 2cos((m-1)pi/m), with m >= 2
    if (kc.has_two_cos && kc.m >= 2 && kc.k == kc.m - 1) return kc.m;
    throw InvalidRootPair("pairing " + to_string(v) + " is not -2cos(pi/m)");
}

DiagramGraph diagram_of(const std::vector<RootVec>& delta, const GramMatrix& g) {
    DiagramGraph d;
    d.n = static_cast<i64>(delta.size());
    for (i64 i = 0; i < d.n; ++i)
        for (i64 j = i + 1; j < d.n; ++j) {
            i64 m = pair_label(delta[i], delta[j], g);
            if (m >= 3) d.edges.push_back({i, j, m});
        }
    return d;
}

namespace {

CoxeterType recognize_component(const std::vector<i64>& verts,
                                const std::vector<DiagramGraph::Edge>& edges) {
    using F = CoxeterType::Family;
    const i64 k = static_cast<i64>(verts.size());
    if (k == 1) return CoxeterType::make(F::A, 1);

    std::map<i64, i64> deg;
    for (i64 v : verts) deg[v] = 0;
    std::map<i64, std::vector<std::pair<i64, i64>>> adj;  // v -> (other, label)
    std::vector<DiagramGraph::Edge> big;
    for (const auto& e : edges) {
        ++deg[e.a];
        ++deg[e.b];
        adj[e.a].push_back({e.b, e.label});
        adj[e.b].push_back({e.a, e.label});
        if (e.label >= 4) big.push_back(e);
    }
    if (static_cast<i64>(edges.size()) != k - 1)
        throw UnrecognizedDiagram("diagram component contains a cycle");

    i64 max_deg = 0, branch = -1, branch_count = 0;
    for (auto [v, dg] : deg) {
        max_deg = std::max(max_deg, dg);
        if (dg >= 3) { branch = v; ++branch_count; }
    }

    if (big.empty()) {
        if (max_deg <= 2) return CoxeterType::make(F::A, k);
        if (branch_count == 1 && max_deg == 3) {
            // arm lengths away from the single branch vertex
            std::vector<i64> arms;
            for (auto [nb, lbl] : adj[branch]) {
                i64 len = 1, prev = branch, cur = nb;
                for (;;) {
                    i64 next = -1;
                    for (auto [w, l2] : adj[cur])
                        if (w != prev) next = w;
                    if (next < 0) break;
                    prev = cur;
                    cur = next;
                    ++len;
                }
                arms.push_back(len);
            }
            std::sort(arms.begin(), arms.end());
            if (arms.size() == 3 && arms[0] == 1 && arms[1] == 1)
                return CoxeterType::make(F::D, k);
            if (arms == std::vector<i64>{1, 2, 2}) return CoxeterType::make(F::E, 6);
            if (arms == std::vector<i64>{1, 2, 3}) return CoxeterType::make(F::E, 7);
            if (arms == std::vector<i64>{1, 2, 4}) return CoxeterType::make(F::E, 8);
        }
        throw UnrecognizedDiagram("unlabeled diagram outside the catalogue");
    }

    if (big.size() > 1 || max_deg > 2)
        throw UnrecognizedDiagram("labeled diagram outside the catalogue");

    const i64 label = big[0].label;
    if (k == 2) return CoxeterType::make(F::I2, label);
    // path with one labeled edge; position = distance of the labeled edge
    // from the nearer endpoint
    bool at_end = deg[big[0].a] == 1 || deg[big[0].b] == 1;
    if (label == 4) {
        if (at_end) return CoxeterType::make(F::B, k);
        if (k == 4) return CoxeterType::make(F::F, 4);  // middle edge of a 4-path
        throw UnrecognizedDiagram("interior 4-label outside F4");
    }
    if (label == 5 && at_end && (k == 3 || k == 4))
        return CoxeterType::make(F::H, k);
    throw UnrecognizedDiagram("labeled diagram outside the catalogue");
}

}  // namespace

std::vector<CoxeterType> recognize_type(const DiagramGraph& d) {
    // connected components by union-find
    std::vector<i64> parent(d.n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<i64(i64)> find = [&](i64 x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& e : d.edges) parent[find(e.a)] = find(e.b);
    std::map<i64, std::vector<i64>> comps;
    for (i64 v = 0; v < d.n; ++v) comps[find(v)].push_back(v);

    std::vector<std::pair<i64, i64>> order;  // (min vertex, root)
    for (auto& [root, verts] : comps) order.emplace_back(verts.front(), root);
    std::sort(order.begin(), order.end());

    std::vector<CoxeterType> out;
    for (auto [mn, root] : order) {
        std::vector<DiagramGraph::Edge> edges;
        for (const auto& e : d.edges)
            if (find(e.a) == root) edges.push_back(e);
        out.push_back(recognize_component(comps[root], edges));
    }
    return out;
}

std::vector<std::pair<std::vector<i64>, GramMatrix>> decompose(const GramMatrix& g) {
    std::vector<i64> parent(g.size);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<i64(i64)> find = [&](i64 x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (i64 i = 0; i < g.size; ++i)
        for (i64 j = i + 1; j < g.size; ++j)
            if (!g.at(i, j).is_zero()) parent[find(i)] = find(j);
    std::map<i64, std::vector<i64>> comps;
    for (i64 v = 0; v < g.size; ++v) comps[find(v)].push_back(v);

    std::vector<std::pair<std::vector<i64>, GramMatrix>> out;
    std::vector<std::vector<i64>> ordered;
    for (auto& [root, verts] : comps) ordered.push_back(verts);
    std::sort(ordered.begin(), ordered.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    for (const auto& verts : ordered) {
        i64 k = static_cast<i64>(verts.size());
        std::vector<CycElem> entries;
        entries.reserve(k * k);
        for (i64 i = 0; i < k; ++i)
            for (i64 j = 0; j < k; ++j) entries.push_back(g.at(verts[i], verts[j]));
        out.emplace_back(verts, GramMatrix::from_entries(k, std::move(entries)));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Validation

namespace {

CycElem leading_minor_det(const GramMatrix& g, i64 k) {
    std::vector<std::vector<CycElem>> m(k, std::vector<CycElem>(k));
    for (i64 i = 0; i < k; ++i)
        for (i64 j = 0; j < k; ++j) m[i][j] = g.at(i, j);
    CycElem det(1);
    for (i64 col = 0; col < k; ++col) {
        i64 piv = -1;
        for (i64 r = col; r < k; ++r)
            if (!m[r][col].is_zero()) { piv = r; break; }
        if (piv < 0) return CycElem(0);
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det = det * m[col][col];
        CycElem inv = invert(m[col][col]);
        for (i64 r = col + 1; r < k; ++r) {
            if (m[r][col].is_zero()) continue;
            CycElem f = m[r][col] * inv;
            for (i64 c = col; c < k; ++c) m[r][c] = m[r][c] - f * m[col][c];
        }
    }
    return det;
}

}  // namespace

bool is_totally_positive_definite(const GramMatrix& g) {
    for (i64 k = 1; k <= g.size; ++k) {
        CycElem det = leading_minor_det(g, k);
        if (det.is_zero()) return false;
        for (i64 u : units_mod(det.modulus())) {
            CycElem conj = det.modulus() == 1 ? det : galois(det, u);
            if (!is_real(conj)) return false;  // non-real Gram entry upstream
            if (sign_of(conj) <= 0) return false;
        }
    }
    return true;
}

void ValidationReport::add(const std::string& check, bool pass,
                           const std::string& detail) {
    items.push_back({check, pass, detail});
    all_pass = all_pass && pass;
}

ValidationReport validate_root_lattice(const GramMatrix& g,
                                       const std::vector<RootVec>& roots) {
    ValidationReport rep;
    bool diag_ok = true;
    for (i64 i = 0; i < g.size; ++i)
        if (g.at(i, i) != CycElem(2)) diag_ok = false;
    rep.add("diagonal entries equal 2", diag_ok);

    bool real_ok = true;
    for (const CycElem& e : g.entries)
        if (!is_real(e)) real_ok = false;
    rep.add("entries are real", real_ok);

    bool tpd = real_ok && is_totally_positive_definite(g);
    rep.add("totally positive definite (conjugate-wise leading minors)", tpd);

    bool self_ok = true, int_ok = true;
    for (const RootVec& r : roots) {
        if (static_cast<i64>(r.size()) != g.size) { self_ok = false; break; }
        if (pairing(g, r, r) != CycElem(2)) self_ok = false;
        for (const CycElem& c : r)
            if (!is_algebraic_integer(c)) int_ok = false;
    }
    rep.add("every root has self-pairing 2", self_ok);
    rep.add("root coordinates are algebraic integers", int_ok);

    bool pair_ok = true;
    std::set<std::pair<i64, i64>> classes;
    for (std::size_t i = 0; i < roots.size() && pair_ok; ++i)
        for (std::size_t j = i; j < roots.size(); ++j) {
            CycElem v = pairing(g, roots[i], roots[j]);
            try {
                KroneckerClass kc = kronecker_classify(v);
                if (!kc.has_two_cos) { pair_ok = false; break; }
                classes.insert({kc.k, kc.m});
            } catch (const Error&) {
                pair_ok = false;
                break;
            }
        }
    rep.add("pairwise pairings classify as 2cos(r*pi)", pair_ok,
            pair_ok ? std::to_string(classes.size()) + " distinct classes" : "");
    return rep;
}

std::string root_to_string(const RootVec& v) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ", ";
        os << to_string(v[i]);
    }
    os << "]";
    return os.str();
}

}  // namespace rootlat
