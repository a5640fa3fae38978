#pragma once

#include "weylhodge/lefschetz/albert.hpp"

#include <json.hpp>

#include <filesystem>

namespace weylhodge::cli {

/// Parses {"factors":[{"type":"I","f":1,"d":1,"g":2,"m":1,"label":"E"}]}.
/// "label" is optional. Unknown keys, missing fields and wrongly typed values
/// throw InvalidArgument. Divisibility rules are left to validate().
AbelianDescriptor parse_descriptor(const nlohmann::json& doc);
AbelianDescriptor load_descriptor(const std::filesystem::path& path);

nlohmann::json to_json(const AbelianDescriptor& desc);

} // namespace weylhodge::cli
