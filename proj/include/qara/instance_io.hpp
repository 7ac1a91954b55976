#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "qara/exact_cover.hpp"

namespace qara {

// Interchange format: {"universe": [ints...], "subsets": [[ints...], ...]}.
// Both arrays are order-significant.

nlohmann::json instance_to_json(const ExactCoverInstance& instance);
ExactCoverInstance instance_from_json(const nlohmann::json& doc);

ExactCoverInstance load_instance(const std::filesystem::path& path);
void save_instance(const ExactCoverInstance& instance, const std::filesystem::path& path);

}  // namespace qara
