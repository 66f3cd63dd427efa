#include "rootlat/report.hpp"

#include "rootlat/expr.hpp"
#include "rootlat/version.hpp"

namespace rootlat {

ordered_json field_to_json(const FieldDescriptor& f) {
    return ordered_json{{"gens", f.gens()}};
}

FieldDescriptor field_from_json(const ordered_json& j) {
    std::vector<i64> gens;
    for (const auto& g : j.at("gens")) gens.push_back(g.get<i64>());
    return FieldDescriptor::make(gens);
}

ordered_json qk_to_json(const QGraph& g) {
    ordered_json edges = ordered_json::array();
    for (auto [x, y] : g.edges) edges.push_back({x, y});
    ordered_json comps = ordered_json::array();
    for (const auto& c : g.components) comps.push_back(c);
    return ordered_json{
        {"vertices", g.vertices}, {"edges", edges}, {"components", comps}};
}

ordered_json rank2_class_to_json(const RankTwoClass& c) {
    return ordered_json{
        {"label", c.label},
        {"mu_order", c.mu_order},
        {"kind", c.kind == RankTwoClass::Kind::PrimePower ? "prime_power" : "component"},
        {"members", c.members}};
}

ordered_json existence_to_json(const ExistenceTable& t, i64 n_max) {
    ordered_json labels = ordered_json::array();
    for (const auto& e : t.entries)
        labels.push_back(ordered_json{
            {"label", e.label}, {"exists", e.exists}, {"condition", e.condition}});
    return ordered_json{{"A", t.A},   {"B", t.B},   {"D", t.D},
                        {"E6", t.E6}, {"E7", t.E7}, {"E8", t.E8},
                        {"F4", t.F4}, {"H3", t.H3}, {"H4", t.H4},
                        {"nmax", n_max}, {"labels", labels}};
}

ordered_json build_report(const FieldDescriptor& f, i64 n_max) {
    QGraph g = compute_qk(f);
    ordered_json rank2 = ordered_json::array();
    for (const RankTwoClass& c : classify_rank2(f)) rank2.push_back(rank2_class_to_json(c));
    return ordered_json{{"tool", kToolName},
                        {"version", kVersion},
                        {"field", field_to_json(f)},
                        {"qk", qk_to_json(g)},
                        {"rank2", rank2},
                        {"rank_ge3", existence_to_json(classify_rank_ge3(f, n_max), n_max)}};
}

ordered_json extend_report(const FieldDescriptor& f1, const FieldDescriptor& f2) {
    ordered_json maps = ordered_json::array();
    for (const ClassMapping& m : extend_classes(f1, f2))
        maps.push_back(ordered_json{{"from", rank2_class_to_json(m.from)},
                                    {"to", rank2_class_to_json(m.to)}});
    return ordered_json{{"tool", kToolName},
                        {"version", kVersion},
                        {"field_from", field_to_json(f1)},
                        {"field_to", field_to_json(f2)},
                        {"classes", maps}};
}

ordered_json gram_to_json(const GramMatrix& g) {
    ordered_json rows = ordered_json::array();
    for (i64 i = 0; i < g.size; ++i) {
        ordered_json row = ordered_json::array();
        for (i64 j = 0; j < g.size; ++j) row.push_back(to_string(g.at(i, j)));
        rows.push_back(row);
    }
    return ordered_json{{"size", g.size}, {"entries", rows}};
}

GramMatrix gram_from_json(const ordered_json& j) {
    i64 size = j.at("size").get<i64>();
    const auto& rows = j.at("entries");
    if (static_cast<i64>(rows.size()) != size)
        throw Error("gram JSON: row count does not match size");
    std::vector<CycElem> entries;
    entries.reserve(size * size);
    for (const auto& row : rows) {
        if (static_cast<i64>(row.size()) != size)
            throw Error("gram JSON: column count does not match size");
        for (const auto& cell : row)
            entries.push_back(parse_cyc_expr(cell.get<std::string>()));
    }
    return GramMatrix::from_entries(size, std::move(entries));
}

ordered_json roots_to_json(const std::vector<RootVec>& roots) {
    ordered_json list = ordered_json::array();
    for (const RootVec& r : roots) {
        ordered_json coords = ordered_json::array();
        for (const CycElem& c : r) coords.push_back(to_string(c));
        list.push_back(coords);
    }
    return ordered_json{{"count", roots.size()}, {"roots", list}};
}

ordered_json rank2_roots_to_json(const std::vector<std::pair<CycElem, CycElem>>& roots) {
    ordered_json list = ordered_json::array();
    for (const auto& [a, b] : roots) list.push_back({to_string(a), to_string(b)});
    return ordered_json{{"count", roots.size()}, {"roots", list}};
}

std::string dump_json(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace rootlat
