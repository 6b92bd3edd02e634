// Text formats: multipartitions as nested JSON arrays ("[[3],[1]]", empty
// partition "[]"), charges as comma-separated integers, and block tables in
// JSON, CSV or Markdown.

#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>
#include <string_view>

#include "akcores/blocks.hpp"
#include "akcores/partitions.hpp"

namespace akcores {

// Raised on malformed textual input (bad JSON, bad integer lists, part lists
// that are not partitions).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

nlohmann::json to_json(const Partition& p);
nlohmann::json to_json(const Multipartition& mp);

Partition partition_from_json(const nlohmann::json& j);
Multipartition multipartition_from_json(const nlohmann::json& j);

Partition parse_partition(std::string_view text);
Multipartition parse_multipartition(std::string_view text);
Multicharge parse_charge_list(std::string_view text);  // "0,1" or "-1, 2"

std::string format_partition(const Partition& p);
std::string format_multipartition(const Multipartition& mp);
std::string format_charge(const Multicharge& s);  // JSON array, e.g. "[0,1]"

enum class TableFormat { Json, Csv, Markdown };

// Parses "json" / "csv" / "md" (also "markdown").
TableFormat parse_table_format(std::string_view name);

// One row per multipartition in enumeration order; columns multipartition,
// core, core_charge, weight, block_id.
std::string render_block_table(const std::vector<Block>& blocks, Int n, int l, Int e,
                               const Multicharge& s, TableFormat format);

}  // namespace akcores
