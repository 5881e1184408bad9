#pragma once

#include <ostream>
#include <string>

#include <json.hpp>

namespace latsnake::cli {

using Json = nlohmann::ordered_json;

enum class Format { Json, Csv, Text };

Format parse_format(const std::string& name);

/// Writes `report`. Csv renders the "rows" table when there is one and a
/// key,value listing otherwise.
void write_report(std::ostream& out, const Json& report, Format format);

}  // namespace latsnake::cli
