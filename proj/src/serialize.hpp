#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <json.hpp>

#include "fk_family.hpp"
#include "labeling.hpp"
#include "partition.hpp"

namespace bcp {

struct PartitionDocument {
  BicliquePartition partition;
  std::string method;
  std::uint64_t seed = 0;
};

/// {"n", "method", "seed", "blocks": [{"left": [...], "right": [...]}]}
nlohmann::json partition_to_json(const PartitionDocument& doc);
PartitionDocument partition_from_json(std::string_view text);
PartitionDocument partition_from_json(const nlohmann::json& j);

/// {"k", "r", "s", "tau", "groups": [[...]], "b": [...], "patterns": ["0110", ...]}
nlohmann::json witness_to_json(const fk::PatternedBipartite& f);
fk::PatternedBipartite witness_from_json(std::string_view text);
fk::PatternedBipartite witness_from_json(const nlohmann::json& j);

/// {"r", "labels": ["012", ...]}
nlohmann::json labeling_to_json(const VectorLabeling& l);
VectorLabeling labeling_from_json(std::string_view text);
VectorLabeling labeling_from_json(const nlohmann::json& j);

/// Parses text as JSON, mapping syntax errors to ParseError.
nlohmann::json parse_json(std::string_view text);

}  // namespace bcp
