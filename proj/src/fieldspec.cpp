#include "rootlat/fieldspec.hpp"

#include "rootlat/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace rootlat {

FieldDescriptor FieldDescriptor::make(std::vector<i64> gens) {
    for (i64 n : gens)
        if (n <= 1)
            throw InvalidGenerator("field generator must be >= 2, got " +
                                   std::to_string(n));
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

    FieldDescriptor f;
    f.gens_ = gens;
    f.modulus_ = 1;
    for (i64 n : gens) f.modulus_ = lcm_i64(f.modulus_, 2 * n);

    // H = residues mod M compatible with some sign pattern a = eps_n (mod 2n);
    // built by CRT one generator at a time, deduplicating as patterns merge.
    std::set<std::pair<i64, i64>> partial = {{0, 1}};  // (residue, modulus)
    for (i64 n : gens) {
        std::set<std::pair<i64, i64>> next;
        for (auto [r, m] : partial) {
            for (i64 eps : {i64{1}, i64{-1}}) {
                i64 target = ((eps % (2 * n)) + 2 * n) % (2 * n);
                auto [x, ok] = crt_pair(r, m, target, 2 * n);
                if (ok) next.emplace(x, lcm_i64(m, 2 * n));
            }
        }
        partial = std::move(next);
    }
    for (auto [r, m] : partial) f.subgroup_.push_back(r);
    std::sort(f.subgroup_.begin(), f.subgroup_.end());
    f.degree_ = euler_phi(f.modulus_) / static_cast<i64>(f.subgroup_.size());
    return f;
}

std::vector<i64> FieldDescriptor::fixing_group_generators(i64 m_big) const {
    if (m_big % modulus_ != 0)
        throw Error("fixing_group_generators: modulus must divide the target");
    std::vector<i64> out;
    auto add_crt = [&](i64 residue, i64 pe) {
        // x = residue (mod pe), x = 1 (mod m_big/pe)
        auto [x, ok] = crt_pair(residue % pe, pe, 1 % (m_big / pe), m_big / pe);
        if (!ok) throw std::logic_error("fixing_group_generators: CRT failure");
        out.push_back(x);
    };
    // generators of ker((Z/m_big)^x -> (Z/M)^x), one prime power at a time
    for (auto [p, e] : factorize(m_big)) {
        i64 pe = 1;
        for (int i = 0; i < e; ++i) pe *= p;
        int a = 0;
        i64 mm = modulus_;
        while (mm % p == 0) { mm /= p; ++a; }
        if (a >= e) continue;  // fiber is trivial
        if (p != 2) {
            if (a == 0)
                add_crt(primitive_root(p, e), pe);
            else {
                i64 pa = 1;
                for (int i = 0; i < a; ++i) pa *= p;
                add_crt(1 + pa, pe);
            }
        } else {
            if (e == 1) continue;  // (Z/2)^x trivial
            if (e == 2) {
                if (a <= 1) add_crt(3, pe);
                continue;
            }
            if (a <= 1) {
                add_crt(pe - 1, pe);  // -1
                add_crt(5, pe);
            } else {
                i64 pa = 1;
                for (int i = 0; i < a; ++i) pa *= 2;
                if (pa < pe) add_crt(1 + pa, pe);  // generates {u = 1 mod 2^a}
            }
        }
    }
    // lifts of H to units mod m_big
    for (i64 h : subgroup_) {
        if (modulus_ == 1 || h == 1) continue;
        i64 x = h;
        while (std::gcd(x, m_big) != 1) x += modulus_;
        out.push_back(x % m_big);
    }
    return out;
}

bool FieldDescriptor::contains_zeta_plus(i64 n) const {
    if (n <= 1)
        throw InvalidGenerator("contains_zeta_plus requires n >= 2, got " +
                               std::to_string(n));
    i64 m_big = lcm_i64(modulus_, 2 * n);
    for (i64 g : fixing_group_generators(m_big)) {
        i64 r = g % (2 * n);
        if (r != 1 && r != 2 * n - 1) return false;
    }
    return true;
}

bool FieldDescriptor::contains_element(const CycElem& a) const {
    i64 m_big = lcm_i64(modulus_, a.modulus());
    CycElem lifted = a.lifted_to(m_big);
    for (i64 g : fixing_group_generators(m_big))
        if (galois(lifted, g) != lifted) return false;
    return true;
}

bool FieldDescriptor::subfield_of(const FieldDescriptor& other) const {
    for (i64 n : gens_)
        if (!other.contains_zeta_plus(n)) return false;
    return true;
}

std::string FieldDescriptor::to_json_string() const {
    std::ostringstream os;
    os << "{\"gens\":[";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (i) os << ",";
        os << gens_[i];
    }
    os << "]}";
    return os.str();
}

FieldDescriptor parse_field_gens(const std::string& text) {
    std::vector<i64> gens;
    std::string cur;
    std::istringstream is(text);
    while (std::getline(is, cur, ',')) {
        // trim spaces
        std::size_t b = cur.find_first_not_of(" \t");
        std::size_t e = cur.find_last_not_of(" \t");
        if (b == std::string::npos) continue;
        cur = cur.substr(b, e - b + 1);
        try {
            std::size_t used = 0;
            i64 v = std::stoll(cur, &used);
            if (used != cur.size()) throw std::invalid_argument(cur);
            gens.push_back(v);
        } catch (const std::exception&) {
            throw InvalidGenerator("cannot parse generator '" + cur + "'");
        }
    }
    return FieldDescriptor::make(gens);
}

}  // namespace rootlat
