#pragma once

#include <string>

#include <json.hpp>

#include "ua/acceptance.hpp"
#include "ua/bala_carter.hpp"
#include "ua/class_catalog.hpp"
#include "ua/oracle.hpp"
#include "ua/partition.hpp"
#include "ua/root_system.hpp"

namespace ua::io {

// Insertion-ordered so that identical inputs give byte-identical documents.
using Json = nlohmann::ordered_json;

[[nodiscard]] Json to_json(const Partition& p);
[[nodiscard]] Json to_json(const LeviDatum& levi);
[[nodiscard]] Json to_json(const BCPair& pair);
[[nodiscard]] Json to_json(const ParabolicLabel& j);
[[nodiscard]] Json to_json(const DimRange& d);
[[nodiscard]] Json to_json(const oracle::Report& r, const Partition& predicted);
[[nodiscard]] Json to_json(const acceptance::Outcome& o);

/// nodes: [{partition, dim}], covers: [[lower, upper]].
[[nodiscard]] Json poset_json(const ClassPoset& poset);
/// Hasse diagram with edges pointing from the larger class to the one it covers.
[[nodiscard]] std::string poset_dot(const ClassPoset& poset);
[[nodiscard]] std::string poset_text(const ClassPoset& poset);

}  // namespace ua::io
