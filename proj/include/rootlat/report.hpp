#pragma once

#include "rootlat/qgraph.hpp"

#include <json.hpp>

#include <string>

namespace rootlat {

using ordered_json = nlohmann::ordered_json;

ordered_json field_to_json(const FieldDescriptor& f);
FieldDescriptor field_from_json(const ordered_json& j);

ordered_json qk_to_json(const QGraph& g);
ordered_json rank2_class_to_json(const RankTwoClass& c);
ordered_json existence_to_json(const ExistenceTable& t, i64 n_max);

/// The full classification report: tool metadata, input echo, Q_K, rank-2
/// classes and the rank >= 3 existence table. Byte-deterministic for
/// identical inputs.
ordered_json build_report(const FieldDescriptor& f, i64 n_max);

ordered_json extend_report(const FieldDescriptor& f1, const FieldDescriptor& f2);

ordered_json gram_to_json(const GramMatrix& g);
GramMatrix gram_from_json(const ordered_json& j);

ordered_json roots_to_json(const std::vector<RootVec>& roots);
ordered_json rank2_roots_to_json(const std::vector<std::pair<CycElem, CycElem>>& roots);

/// Fixed-format dump used everywhere output must be byte-identical.
std::string dump_json(const ordered_json& j);

}  // namespace rootlat
