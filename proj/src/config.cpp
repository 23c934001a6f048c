#include "gpi/config.hpp"

#include <fstream>
#include <sstream>

#include "gpi/error.hpp"

namespace gpi {
namespace {

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace

Group group_from_json(const nlohmann::json& j, std::size_t max_order) {
  if (!j.is_object()) throw ConfigError("group description must be a JSON object");
  if (j.contains("cyclic")) {
    const auto& m = j.at("cyclic");
    if (!m.is_number_integer() || m.get<long long>() < 1) {
      throw ConfigError("\"cyclic\" must be a positive integer");
    }
    const auto order = m.get<long long>();
    if (static_cast<unsigned long long>(order) > max_order) {
      throw ConfigError("cyclic group order " + std::to_string(order) + " exceeds the cap " +
                        std::to_string(max_order));
    }
    return make_cyclic(static_cast<std::size_t>(order), max_order);
  }
  if (!j.contains("elements") || !j.contains("table")) {
    throw ConfigError("group needs either \"cyclic\" or both \"elements\" and \"table\"");
  }
  try {
    auto names = j.at("elements").get<std::vector<std::string>>();
    auto table = j.at("table").get<std::vector<std::vector<std::size_t>>>();
    return make_from_table(std::move(names), std::move(table), max_order);
  } catch (const nlohmann::json::exception& ex) {
    throw ConfigError(std::string("bad group table: ") + ex.what());
  } catch (const GroupError& ex) {
    throw ConfigError(std::string("invalid group: ") + ex.what());
  }
}

Grading grading_from_json(const nlohmann::json& j, std::size_t max_order) {
  if (!j.is_object() || !j.contains("group") || !j.contains("tuple")) {
    throw ConfigError("grading config needs \"group\" and \"tuple\"");
  }
  Group group = group_from_json(j.at("group"), max_order);
  const auto& t = j.at("tuple");
  if (!t.is_array()) throw ConfigError("\"tuple\" must be a list of element names");
  std::vector<Element> tuple;
  for (const auto& name : t) {
    if (!name.is_string()) throw ConfigError("\"tuple\" entries must be element names");
    const auto g = group.find(name.get<std::string>());
    if (!g) throw ConfigError("tuple names unknown element '" + name.get<std::string>() + "'");
    tuple.push_back(*g);
  }
  return Grading::build(std::move(group), std::move(tuple));
}

Grading parse_grading_config(std::string_view text, std::size_t max_order) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& ex) {
    const auto [line, col] = line_column(text, ex.byte > 0 ? ex.byte - 1 : 0);
    throw ConfigError("malformed JSON: " + std::string(ex.what()), line, col);
  }
  return grading_from_json(j, max_order);
}

Grading load_grading_config(const std::filesystem::path& path, std::size_t max_order) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_grading_config(buf.str(), max_order);
}

nlohmann::json group_to_json(const Group& group) {
  return {{"elements", group.names()}, {"table", group.table()}};
}

nlohmann::json grading_to_json(const Grading& grading) {
  nlohmann::json tuple = nlohmann::json::array();
  for (const auto g : grading.tuple()) tuple.push_back(grading.group().name(g));
  return {{"group", group_to_json(grading.group())}, {"tuple", tuple}};
}

}  // namespace gpi
