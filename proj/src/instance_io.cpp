#include "qara/instance_io.hpp"

#include <fstream>

#include "qara/errors.hpp"

namespace qara {

nlohmann::json instance_to_json(const ExactCoverInstance& instance) {
  return nlohmann::json{{"universe", instance.universe()}, {"subsets", instance.subsets()}};
}

ExactCoverInstance instance_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("universe") || !doc.contains("subsets")) {
    throw InvalidArgument("instance JSON needs \"universe\" and \"subsets\" keys");
  }
  try {
    return ExactCoverInstance(doc.at("universe").get<std::vector<ElementId>>(),
                              doc.at("subsets").get<std::vector<std::vector<ElementId>>>());
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed instance JSON: ") + e.what());
  }
}

ExactCoverInstance load_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open instance file " + path.string());
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidArgument("cannot parse " + path.string() + ": " + e.what());
  }
  return instance_from_json(doc);
}

void save_instance(const ExactCoverInstance& instance, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write instance file " + path.string());
  out << instance_to_json(instance).dump() << '\n';
}

}  // namespace qara
