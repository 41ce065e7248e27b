// Copyright 2026 The critloc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "critloc/io.hpp"

#include <algorithm>
#include <initializer_list>
#include <limits>
#include <sstream>

#include "critloc/error.hpp"
#include "json.hpp"

namespace critloc {

namespace {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

[[noreturn]] void schema_error(const std::string& where,
                               const std::string& message,
                               std::vector<std::string> ids = {}) {
  throw Error(ErrorCode::SchemaError, "at " + where + ": " + message,
              std::move(ids));
}

void reject_unknown_fields(const json& object, const std::string& where,
                           std::initializer_list<std::string_view> allowed) {
  for (const auto& [key, value] : object.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      schema_error(where, "unknown field '" + key + "'");
    }
  }
}

std::string required_string(const json& object, const std::string& where,
                            const char* field) {
  const auto it = object.find(field);
  if (it == object.end()) schema_error(where, std::string("missing '") + field + "'");
  if (!it->is_string()) {
    schema_error(where + "/" + field, std::string("'") + field + "' must be a string");
  }
  return it->get<std::string>();
}

std::optional<std::string> optional_string(const json& object,
                                           const std::string& where,
                                           const char* field) {
  const auto it = object.find(field);
  if (it == object.end()) return std::nullopt;
  if (!it->is_string()) {
    schema_error(where + "/" + field, std::string("'") + field + "' must be a string");
  }
  return it->get<std::string>();
}

const json& required_array(const json& doc, const char* field) {
  const auto it = doc.find(field);
  if (it == doc.end()) schema_error("/", std::string("missing '") + field + "'");
  if (!it->is_array()) {
    schema_error(std::string("/") + field, std::string("'") + field + "' must be an array");
  }
  return *it;
}

Activity parse_node(const json& node, const std::string& where) {
  if (!node.is_object()) schema_error(where, "node must be an object");
  reject_unknown_fields(node, where, {"id", "label", "kind"});
  Activity a;
  a.id = required_string(node, where, "id");
  a.label = optional_string(node, where, "label");
  if (auto kind = optional_string(node, where, "kind")) {
    const auto parsed = parse_declared_kind(*kind);
    if (!parsed) {
      schema_error(where + "/kind", "node '" + a.id + "' has unknown kind '" + *kind +
                                        "' (expected auto, critical, non_critical)",
                   {a.id});
    }
    a.declared_kind = *parsed;
  }
  return a;
}

ActivityEdge parse_edge(const json& edge, const std::string& where) {
  if (!edge.is_object()) schema_error(where, "edge must be an object");
  reject_unknown_fields(edge, where, {"id", "from", "to", "weight", "kind"});
  ActivityEdge e;
  e.id = required_string(edge, where, "id");
  e.tail = required_string(edge, where, "from");
  e.head = required_string(edge, where, "to");

  const auto weight = edge.find("weight");
  if (weight == edge.end()) {
    schema_error(where, "edge '" + e.id + "' is missing 'weight'", {e.id});
  }
  if (weight->is_number_unsigned()) {
    const auto value = weight->get<std::uint64_t>();
    if (value > static_cast<std::uint64_t>(std::numeric_limits<Time>::max())) {
      schema_error(where + "/weight", "edge '" + e.id + "' weight is out of range",
                   {e.id});
    }
    e.weight = static_cast<Time>(value);
  } else {
    schema_error(where + "/weight",
                 "edge '" + e.id + "' weight must be a non-negative integer, got " +
                     weight->dump(),
                 {e.id});
  }

  if (auto kind = optional_string(edge, where, "kind")) {
    const auto parsed = parse_edge_kind(*kind);
    if (!parsed) {
      schema_error(where + "/kind",
                   "edge '" + e.id + "' has unknown kind '" + *kind +
                       "' (expected scheduling, dependency_only, dummy)",
                   {e.id});
    }
    e.kind = *parsed;
  }
  return e;
}

// Pointer to the element an ActivityGraph construction error is about.
std::string locate(const Error& error, const std::vector<Activity>& nodes,
                   const std::vector<ActivityEdge>& edges) {
  if (error.ids().empty()) return "/";
  const std::string& id = error.ids().front();
  const bool about_node = std::string_view(error.what()).find(": activity id") !=
                          std::string_view::npos;
  if (about_node) {
    // Duplicates point at the repeat, so search from the back.
    for (std::size_t i = nodes.size(); i-- > 0;) {
      if (nodes[i].id == id) return "/nodes/" + std::to_string(i);
    }
  } else {
    for (std::size_t i = edges.size(); i-- > 0;) {
      if (edges[i].id == id) return "/edges/" + std::to_string(i);
    }
  }
  return "/";
}

std::string syntax_message(const json::parse_error& e) {
  // nlohmann messages read "[json.exception.parse_error.N] parse error at
  // line L, column C: detail"; keep everything from "line".
  const std::string_view what = e.what();
  const auto at = what.find("line ");
  if (at != std::string_view::npos) return std::string(what.substr(at));
  return "byte " + std::to_string(e.byte) + ": " + std::string(what);
}

template <typename Cell>
std::string csv(const std::vector<std::string>& rows,
                const std::vector<std::string>& cols, Cell cell) {
  std::ostringstream out;
  for (const auto& label : cols) out << ',' << label;
  out << '\n';
  for (std::size_t r = 0; r < rows.size(); ++r) {
    out << rows[r];
    for (std::size_t c = 0; c < cols.size(); ++c) out << ',' << cell(r, c);
    out << '\n';
  }
  return out.str();
}

std::string dot_id(const std::string& id) {
  if (id.find('-') == std::string::npos) return id;
  return '"' + id + '"';
}

std::string dot_escape(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

GraphDocument parse_document(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::SyntaxError, syntax_message(e));
  }

  if (!doc.is_object()) schema_error("/", "document must be an object");
  reject_unknown_fields(doc, "/", {"format_version", "unit", "nodes", "edges"});

  const auto version = doc.find("format_version");
  if (version == doc.end()) schema_error("/", "missing 'format_version'");
  if (!version->is_number_integer() || version->get<long long>() != kFormatVersion) {
    schema_error("/format_version", "unsupported format_version " + version->dump() +
                                        " (expected " + std::to_string(kFormatVersion) +
                                        ")");
  }
  GraphDocument document;
  document.unit = optional_string(doc, "", "unit").value_or("ms");

  auto& nodes = document.nodes;
  const json& node_array = required_array(doc, "nodes");
  nodes.reserve(node_array.size());
  for (std::size_t i = 0; i < node_array.size(); ++i) {
    nodes.push_back(parse_node(node_array[i], "/nodes/" + std::to_string(i)));
  }

  auto& edges = document.edges;
  const json& edge_array = required_array(doc, "edges");
  edges.reserve(edge_array.size());
  for (std::size_t i = 0; i < edge_array.size(); ++i) {
    edges.push_back(parse_edge(edge_array[i], "/edges/" + std::to_string(i)));
  }

  return document;
}

ActivityGraph parse_graph(std::string_view text) {
  GraphDocument document = parse_document(text);
  const auto& nodes = document.nodes;
  const auto& edges = document.edges;
  try {
    return build_graph(nodes, edges, document.unit);
  } catch (const Error& e) {
    const std::string_view what = e.what();
    const auto detail = what.substr(what.find(": ") + 2);
    throw Error(e.code(), "at " + locate(e, nodes, edges) + ": " + std::string(detail),
                e.ids());
  }
}

std::string serialize_graph(const ActivityGraph& graph) {
  ordered_json doc;
  doc["format_version"] = kFormatVersion;
  doc["unit"] = graph.unit();
  doc["nodes"] = ordered_json::array();
  for (const Activity& a : graph.activities()) {
    ordered_json node;
    node["id"] = a.id;
    if (a.label) node["label"] = *a.label;
    node["kind"] = to_string(a.declared_kind);
    doc["nodes"].push_back(std::move(node));
  }
  doc["edges"] = ordered_json::array();
  for (const ActivityEdge& e : graph.edges()) {
    ordered_json edge;
    edge["id"] = e.id;
    edge["from"] = e.tail;
    edge["to"] = e.head;
    edge["weight"] = e.weight;
    edge["kind"] = to_string(e.kind);
    doc["edges"].push_back(std::move(edge));
  }
  return doc.dump(2) + "\n";
}

std::string to_csv(const IncidenceMatrix& m) {
  return csv(m.row_labels, m.col_labels, [&](auto r, auto c) { return m.at(r, c); });
}

std::string to_csv(const AdjacencyMatrix& m) {
  return csv(m.labels, m.labels, [&](auto r, auto c) { return m.at(r, c); });
}

std::string to_csv(const DependencyMatrix& m) {
  return csv(m.labels(), m.labels(),
             [&](auto r, auto c) { return m.test(r, c) ? 1 : 0; });
}

std::string export_dot(const ActivityGraph& graph, const Schedule* schedule,
                       const LocalizationReport* report) {
  std::ostringstream out;
  out << "digraph activities {\n"
      << "  rankdir=LR;\n"
      << "  node [shape=circle];\n";

  for (NodeIndex v = 0; v < graph.node_count(); ++v) {
    const Activity& a = graph.activities()[v];
    std::vector<std::string> attrs;
    if (a.label) attrs.push_back("label=\"" + dot_escape(a.id + "\\n" + *a.label) + "\"");
    if (schedule && schedule->is_critical(v)) attrs.emplace_back("shape=doublecircle");
    if (report && report->symptoms.contains(v)) {
      attrs.emplace_back("style=filled");
      attrs.emplace_back("fillcolor=\"#f4cccc\"");
    }
    if (report && std::binary_search(report->independent.begin(),
                                     report->independent.end(), v)) {
      attrs.emplace_back("color=red");
      attrs.emplace_back("penwidth=2");
      attrs.emplace_back("xlabel=\"independent fault\"");
    }
    out << "  " << dot_id(a.id);
    if (!attrs.empty()) {
      out << " [";
      for (std::size_t i = 0; i < attrs.size(); ++i) out << (i ? ", " : "") << attrs[i];
      out << ']';
    }
    out << ";\n";
  }

  for (const ActivityEdge& e : graph.edges()) {
    out << "  " << dot_id(e.tail) << " -> " << dot_id(e.head) << " [label=\""
        << e.weight << '"';
    if (e.kind == EdgeKind::dependency_only) out << ", style=dashed";
    if (e.kind == EdgeKind::dummy) out << ", style=dotted";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace critloc
