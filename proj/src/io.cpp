#include "knapkit/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "json.hpp"

namespace knapkit {

using nlohmann::json;

namespace {

Value as_integer(const json& node, const std::string& field) {
  if (!node.is_number_integer()) {
    throw ArgumentError("'" + field + "' must hold integers");
  }
  if (node.is_number_unsigned() &&
      node.get<std::uint64_t>() >
          static_cast<std::uint64_t>(std::numeric_limits<Value>::max())) {
    throw OverflowError("'" + field + "' holds a value above 2^63 - 1");
  }
  return node.get<Value>();
}

std::vector<Value> as_list(const json& node, const std::string& field) {
  if (!node.is_array()) throw ArgumentError("'" + field + "' must be a list");
  std::vector<Value> out;
  out.reserve(node.size());
  for (const auto& v : node) out.push_back(as_integer(v, field));
  return out;
}

const json& require(const json& doc, const std::string& field) {
  if (!doc.contains(field)) {
    throw ArgumentError("instance document lacks '" + field + "'");
  }
  return doc.at(field);
}

std::vector<std::vector<Value>> dkp_table(const json& node, std::size_t n,
                                          std::size_t d) {
  if (!node.is_array()) throw ArgumentError("'sizes' must be a list");
  std::vector<std::vector<Value>> table;
  if (!node.empty() && node.front().is_array()) {
    for (const auto& row : node) table.push_back(as_list(row, "sizes"));
    return table;
  }
  const auto flat = as_list(node, "sizes");
  if (flat.size() != n * d) {
    throw ArgumentError("flat d-KP size list has " + std::to_string(flat.size()) +
                        " entries, expected d*n = " + std::to_string(n * d));
  }
  for (std::size_t i = 0; i < d; ++i) {
    table.emplace_back(flat.begin() + static_cast<std::ptrdiff_t>(i * n),
                       flat.begin() + static_cast<std::ptrdiff_t>((i + 1) * n));
  }
  return table;
}

}  // namespace

InstanceFile parse_instance(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ArgumentError(std::string("instance is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ArgumentError("instance document must be an object");
  const auto& type_node = require(doc, "type");
  if (!type_node.is_string()) throw ArgumentError("'type' must be a string");
  const auto type = type_node.get<std::string>();

  std::optional<Value> threshold;
  if (doc.contains("threshold") && !doc.at("threshold").is_null()) {
    threshold = as_integer(doc.at("threshold"), "threshold");
    if (*threshold < 1) throw ArgumentError("'threshold' must be positive");
  }
  auto profits = as_list(require(doc, "profits"), "profits");
  const auto& sizes = require(doc, "sizes");
  const auto& capacities = require(doc, "capacities");

  if (type == "kp") {
    Value c = 0;
    if (capacities.is_array()) {
      const auto list = as_list(capacities, "capacities");
      if (list.size() != 1) throw ArgumentError("kp needs exactly one capacity");
      c = list.front();
    } else {
      c = as_integer(capacities, "capacities");
    }
    return {KpInstance(std::move(profits), as_list(sizes, "sizes"), c), threshold};
  }
  if (type == "dkp") {
    auto caps = as_list(capacities, "capacities");
    auto table = dkp_table(sizes, profits.size(), caps.size());
    return {DkpInstance(std::move(profits), std::move(table), std::move(caps)),
            threshold};
  }
  if (type == "mkp") {
    return {MkpInstance(std::move(profits), as_list(sizes, "sizes"),
                        as_list(capacities, "capacities")),
            threshold};
  }
  throw ArgumentError("unknown instance type '" + type + "'");
}

InstanceFile read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot open instance file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_instance(buffer.str());
}

namespace {

json to_json(std::span<const Value> values) {
  return json(std::vector<Value>(values.begin(), values.end()));
}

}  // namespace

std::string format_instance(const AnyInstance& instance,
                            std::optional<Value> threshold) {
  json doc;
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, KpInstance>) {
          doc["type"] = "kp";
          doc["profits"] = to_json(x.profits());
          doc["sizes"] = to_json(x.sizes());
          doc["capacities"] = x.capacity();
        } else if constexpr (std::is_same_v<T, DkpInstance>) {
          doc["type"] = "dkp";
          doc["profits"] = to_json(x.profits());
          doc["sizes"] = x.size_table();
          doc["capacities"] = to_json(x.capacities());
        } else {
          doc["type"] = "mkp";
          doc["profits"] = to_json(x.profits());
          doc["sizes"] = to_json(x.sizes());
          doc["capacities"] = to_json(x.capacities());
        }
      },
      instance);
  if (threshold) doc["threshold"] = *threshold;
  return doc.dump() + "\n";
}

}  // namespace knapkit
