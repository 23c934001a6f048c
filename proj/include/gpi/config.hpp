#pragma once

#include <cstddef>
#include <filesystem>
#include <string_view>

#include "json.hpp"

#include "gpi/grading.hpp"
#include "gpi/group.hpp"

namespace gpi {

/// {"cyclic": m} or {"elements": [...], "table": [[...]]}.
Group group_from_json(const nlohmann::json& j, std::size_t max_order = kDefaultMaxGroupOrder);

/// {"group": <group>, "tuple": ["e", "a", ...]}.
Grading grading_from_json(const nlohmann::json& j, std::size_t max_order = kDefaultMaxGroupOrder);

/// Parses config text; syntax errors raise ConfigError with line and column.
Grading parse_grading_config(std::string_view text, std::size_t max_order = kDefaultMaxGroupOrder);

/// Throws IoError if the file cannot be read.
Grading load_grading_config(const std::filesystem::path& path,
                            std::size_t max_order = kDefaultMaxGroupOrder);

nlohmann::json group_to_json(const Group& group);
nlohmann::json grading_to_json(const Grading& grading);

}  // namespace gpi
