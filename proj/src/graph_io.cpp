#include "onelight/graph_io.hpp"

#include <sstream>

#include "json.hpp"

namespace onelight {

using nlohmann::json;

namespace {

[[noreturn]] void schema_error(const std::string& pointer, const std::string& msg) {
  throw GraphFormatError(msg + " at " + (pointer.empty() ? "/" : pointer), std::nullopt, pointer);
}

int as_id(const json& j, const std::string& pointer) {
  if (!j.is_number_integer() || j.get<long long>() < 0 || j.get<long long>() > 1'000'000'000)
    schema_error(pointer, "expected a non-negative integer id");
  return static_cast<int>(j.get<long long>());
}

}  // namespace

GraphDocument parse_graph_document(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& ex) {
    const std::size_t offset = ex.byte > 0 ? ex.byte - 1 : 0;
    std::ostringstream os;
    os << "JSON syntax error at byte " << offset;
    throw GraphFormatError(os.str(), offset, "");
  }

  if (!root.is_object()) schema_error("", "expected an object");
  if (!root.contains("vertices") || !root["vertices"].is_array())
    schema_error("/vertices", "expected an array");
  if (!root.contains("rotation") || !root["rotation"].is_object())
    schema_error("/rotation", "expected an object");

  const json& verts = root["vertices"];
  const std::size_t n = verts.size();
  GraphDocument doc;
  doc.false_marks.assign(n, false);
  doc.rotation.rotation.assign(n, {});
  std::vector<char> seen(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const std::string ptr = "/vertices/" + std::to_string(i);
    const json& v = verts[i];
    if (!v.is_object() || !v.contains("id") || !v.contains("false"))
      schema_error(ptr, "expected {\"id\": int, \"false\": bool}");
    const int id = as_id(v["id"], ptr + "/id");
    if (static_cast<std::size_t>(id) >= n) schema_error(ptr + "/id", "ids must be dense from 0");
    if (seen[id]) schema_error(ptr + "/id", "duplicate id " + std::to_string(id));
    seen[id] = 1;
    if (!v["false"].is_boolean()) schema_error(ptr + "/false", "expected a boolean");
    doc.false_marks[id] = v["false"].get<bool>();
  }

  const json& rot = root["rotation"];
  if (rot.size() != n) schema_error("/rotation", "expected one rotation entry per vertex");
  for (const auto& [key, list] : rot.items()) {
    const std::string ptr = "/rotation/" + key;
    std::size_t used = 0;
    long long id = -1;
    try {
      id = std::stoll(key, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != key.size() || id < 0 || static_cast<std::size_t>(id) >= n ||
        std::to_string(id) != key)
      schema_error(ptr, "rotation key is not a vertex id");
    if (!list.is_array()) schema_error(ptr, "expected an array of neighbor ids");
    auto& out = doc.rotation.rotation[id];
    for (std::size_t k = 0; k < list.size(); ++k)
      out.push_back(as_id(list[k], ptr + "/" + std::to_string(k)));
  }
  return doc;
}

std::string serialize_graph_document(const GraphDocument& doc) {
  std::ostringstream os;
  const std::size_t n = doc.false_marks.size();
  os << "{\n  \"vertices\": [";
  for (std::size_t v = 0; v < n; ++v) {
    os << (v ? ",\n" : "\n") << "    {\"id\": " << v << ", \"false\": "
       << (doc.false_marks[v] ? "true" : "false") << "}";
  }
  os << (n ? "\n  ],\n" : "],\n");
  os << "  \"rotation\": {";
  for (std::size_t v = 0; v < n; ++v) {
    os << (v ? ",\n" : "\n") << "    \"" << v << "\": [";
    const auto& r = doc.rotation.rotation[v];
    for (std::size_t i = 0; i < r.size(); ++i) os << (i ? ", " : "") << r[i];
    os << "]";
  }
  os << (n ? "\n  }\n}\n" : "}\n}\n");
  return os.str();
}

GraphDocument to_document(const AssociatedPlaneGraph& g) {
  return {g.embedding().rotation(), g.false_marks()};
}

std::string serialize_graph(const AssociatedPlaneGraph& g) {
  return serialize_graph_document(to_document(g));
}

AssociatedPlaneGraph parse_graph(std::string_view text) {
  GraphDocument doc = parse_graph_document(text);
  return AssociatedPlaneGraph::from_rotation(std::move(doc.rotation), std::move(doc.false_marks));
}

}  // namespace onelight
