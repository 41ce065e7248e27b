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

#include "critloc/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace critloc {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr const char* kGeneratorModel =
    "layered DAG; scheduling edges between adjacent layers with probability "
    "edge_density; dependency-only feedback edges to earlier layers";
constexpr const char* kPropagationModel =
    "every activity that transitively depends on the root is affected; each "
    "is observed with probability detect_prob; the root always observes "
    "itself";
constexpr const char* kBaselineModel = "exhaustive scan of every activity";

std::string dump(const ordered_json& doc) { return doc.dump(2) + "\n"; }

std::string fixed(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.4f", value);
  return buffer;
}

// Left-aligned columns separated by two spaces, no trailing whitespace.
std::string table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths;
  for (const auto& row : rows) {
    widths.resize(std::max(widths.size(), row.size()), 0);
    for (std::size_t c = 0; c < row.size(); ++c)
      widths[c] = std::max(widths[c], row[c].size());
  }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line += std::string(widths[c] - row[c].size() + 2, ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + '\n';
  }
  return out;
}

std::string join(const std::vector<std::string>& items, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

std::vector<std::string> ids(const std::vector<NodeIndex>& nodes,
                             const std::vector<std::string>& labels) {
  std::vector<std::string> out;
  out.reserve(nodes.size());
  for (NodeIndex v : nodes) out.push_back(labels[v]);
  return out;
}

std::vector<std::string> graph_ids(const ActivityGraph& graph) {
  std::vector<std::string> out;
  for (const Activity& a : graph.activities()) out.push_back(a.id);
  return out;
}

template <typename Cell>
std::string matrix_text(const std::vector<std::string>& rows,
                        const std::vector<std::string>& cols, Cell cell) {
  std::vector<std::vector<std::string>> grid;
  std::vector<std::string> header{""};
  header.insert(header.end(), cols.begin(), cols.end());
  grid.push_back(std::move(header));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    std::vector<std::string> line{rows[r]};
    for (std::size_t c = 0; c < cols.size(); ++c) line.push_back(std::to_string(cell(r, c)));
    grid.push_back(std::move(line));
  }
  return table(grid);
}

template <typename Cell>
std::string matrix_json(std::string_view kind, const std::vector<std::string>& rows,
                        const std::vector<std::string>& cols, Cell cell,
                        bool closed = false) {
  ordered_json doc;
  doc["kind"] = kind;
  if (kind == "dependency") doc["closed"] = closed;
  doc["rows"] = rows;
  doc["cols"] = cols;
  doc["cells"] = ordered_json::array();
  for (std::size_t r = 0; r < rows.size(); ++r) {
    ordered_json line = ordered_json::array();
    for (std::size_t c = 0; c < cols.size(); ++c) line.push_back(cell(r, c));
    doc["cells"].push_back(std::move(line));
  }
  return dump(doc);
}

std::string_view view_name(EdgeView view) {
  return view == EdgeView::all_edges ? "all_edges" : "scheduling_only";
}

std::string_view key_name(RankKey key) {
  switch (key) {
    case RankKey::explains_desc: return "explains_desc";
    case RankKey::critical_first: return "critical_first";
    case RankKey::distance_asc: return "distance_asc";
  }
  return "";
}

ordered_json params_json(const ExperimentConfig& c) {
  ordered_json p;
  p["nodes"] = c.params.node_count;
  p["layers"] = c.params.layer_count;
  p["density"] = c.params.edge_density;
  p["feedback"] = c.params.feedback_edge_fraction;
  p["wmax"] = c.params.weight_max;
  p["seed"] = c.params.seed;
  p["trials"] = c.trials;
  p["detect_prob"] = c.detect_prob;
  p["root_policy"] = to_string(c.root_policy);
  return p;
}

}  // namespace

std::string to_text(const ValidationReport& report) {
  std::string out = report.ok ? "ok\n" : "failed\n";
  for (const Issue& issue : report.issues) {
    out += issue.severity == Severity::error ? "error " : "warning ";
    out += issue.code + ": " + issue.message + '\n';
  }
  return out;
}

std::string to_json(const ValidationReport& report) {
  ordered_json doc;
  doc["ok"] = report.ok;
  doc["issues"] = ordered_json::array();
  for (const Issue& issue : report.issues) {
    doc["issues"].push_back(
        {{"severity", issue.severity == Severity::error ? "error" : "warning"},
         {"code", issue.code},
         {"message", issue.message},
         {"ids", issue.ids}});
  }
  return dump(doc);
}

std::string to_text(const IncidenceMatrix& m) {
  return matrix_text(m.row_labels, m.col_labels, [&](auto r, auto c) { return m.at(r, c); });
}

std::string to_text(const AdjacencyMatrix& m) {
  return matrix_text(m.labels, m.labels, [&](auto r, auto c) { return m.at(r, c); });
}

std::string to_text(const DependencyMatrix& m) {
  return matrix_text(m.labels(), m.labels(),
                     [&](auto r, auto c) { return m.test(r, c) ? 1 : 0; });
}

std::string to_json(const IncidenceMatrix& m) {
  return matrix_json("incidence", m.row_labels, m.col_labels,
                     [&](auto r, auto c) { return m.at(r, c); });
}

std::string to_json(const AdjacencyMatrix& m) {
  return matrix_json("adjacency", m.labels, m.labels,
                     [&](auto r, auto c) { return m.at(r, c); });
}

std::string to_json(const DependencyMatrix& m) {
  return matrix_json("dependency", m.labels(), m.labels(),
                     [&](auto r, auto c) { return m.test(r, c) ? 1 : 0; }, m.closed());
}

std::string schedule_text(const ActivityGraph& graph, const Schedule& s) {
  const auto labels = graph_ids(graph);
  const auto classes = classify_activities(graph, s);
  std::string out = "duration: " + std::to_string(s.duration) + " " + graph.unit() + "\n";
  out += "critical: " + join(ids(s.critical_nodes, labels), ", ") + "\n\n";

  std::vector<std::vector<std::string>> rows{
      {"activity", "earliest", "latest", "slack", "class"}};
  for (NodeIndex v = 0; v < graph.node_count(); ++v) {
    std::string cls = classes[v].activity_class == ActivityClass::critical
                          ? "critical"
                          : "non_critical";
    if (classes[v].overridden) cls += " (declared)";
    rows.push_back({labels[v], std::to_string(s.earliest[v]),
                    std::to_string(s.latest[v]), std::to_string(s.slack[v]), cls});
  }
  out += table(rows);
  out += "\ncritical paths:\n";
  for (const auto& path : s.paths) out += "  " + join(ids(path, labels), " -> ") + "\n";
  if (s.paths_truncated) out += "  ... (truncated)\n";
  return out;
}

std::string schedule_json(const ActivityGraph& graph, const Schedule& s) {
  const auto labels = graph_ids(graph);
  const auto classes = classify_activities(graph, s);
  ordered_json doc;
  doc["unit"] = graph.unit();
  doc["duration"] = s.duration;
  doc["critical_nodes"] = ids(s.critical_nodes, labels);
  doc["activities"] = ordered_json::array();
  for (NodeIndex v = 0; v < graph.node_count(); ++v) {
    doc["activities"].push_back(
        {{"id", labels[v]},
         {"earliest", s.earliest[v]},
         {"latest", s.latest[v]},
         {"slack", s.slack[v]},
         {"class", classes[v].activity_class == ActivityClass::critical
                       ? "critical"
                       : "non_critical"},
         {"overridden", classes[v].overridden}});
  }
  doc["critical_paths"] = ordered_json::array();
  for (const auto& path : s.paths) doc["critical_paths"].push_back(ids(path, labels));
  doc["paths_truncated"] = s.paths_truncated;
  return dump(doc);
}

std::string to_text(const LocalizationReport& r) {
  const auto& labels = r.node_ids;
  const auto independent = ids(r.independent, labels);
  std::string out = "view: " + std::string(view_name(r.view)) + "\n";
  out += "symptoms: " + join(ids(r.symptoms.nodes, labels), ", ") + "\n";
  out += "independent: " + (independent.empty() ? "(none)" : join(independent, ", ")) + "\n";
  out += "nodes examined: " + std::to_string(r.nodes_examined) + " of " +
         std::to_string(labels.size()) + "\n";
  if (r.criticality_from_declared) {
    out += "note: schedule is cyclic, criticality taken from declared kinds\n";
  }
  out += '\n';
  std::vector<std::vector<std::string>> rows{
      {"rank", "activity", "explains", "critical", "distance", "scc"}};
  for (std::size_t i = 0; i < r.candidates.size(); ++i) {
    const Candidate& c = r.candidates[i];
    rows.push_back({std::to_string(i + 1), labels[c.node],
                    join(ids(c.explains, labels), ","), c.is_critical ? "yes" : "no",
                    std::to_string(c.min_distance), std::to_string(c.scc)});
  }
  out += table(rows);
  return out;
}

std::string to_json(const LocalizationReport& r) {
  const auto& labels = r.node_ids;
  ordered_json doc;
  doc["view"] = view_name(r.view);
  doc["symptoms"] = ids(r.symptoms.nodes, labels);
  doc["independent"] = ids(r.independent, labels);
  doc["nodes_examined"] = r.nodes_examined;
  doc["node_count"] = labels.size();
  doc["examination_order"] = ids(r.examination_order, labels);
  doc["criticality_from_declared"] = r.criticality_from_declared;
  ordered_json policy = ordered_json::array();
  for (RankKey key : r.policy.keys) policy.push_back(key_name(key));
  policy.push_back("input_order");
  doc["policy"] = std::move(policy);
  doc["candidates"] = ordered_json::array();
  for (std::size_t i = 0; i < r.candidates.size(); ++i) {
    const Candidate& c = r.candidates[i];
    doc["candidates"].push_back({{"rank", i + 1},
                                 {"id", labels[c.node]},
                                 {"explains", ids(c.explains, labels)},
                                 {"critical", c.is_critical},
                                 {"min_distance", c.min_distance},
                                 {"scc", c.scc}});
  }
  return dump(doc);
}

std::string to_text(const ExperimentReport& r) {
  const ExperimentConfig& c = r.config;
  std::ostringstream out;
  out << "generator: " << kGeneratorModel << "\n"
      << "propagation: " << kPropagationModel << "\n"
      << "baseline: " << kBaselineModel << "\n"
      << "params: nodes=" << c.params.node_count << " layers=" << c.params.layer_count
      << " density=" << c.params.edge_density
      << " feedback=" << c.params.feedback_edge_fraction << " wmax=" << c.params.weight_max
      << " seed=" << c.params.seed << " trials=" << c.trials
      << " detect_prob=" << c.detect_prob << " root_policy=" << to_string(c.root_policy)
      << "\n\n"
      << "hit rate: " << fixed(r.hit_rate) << "\n"
      << "mean root rank: " << fixed(r.mean_root_rank) << "\n"
      << "median root rank: " << fixed(r.median_root_rank) << "\n"
      << "mean examined (localizer): " << fixed(r.mean_examined_localizer) << "\n"
      << "mean examined (baseline): " << fixed(r.mean_examined_baseline) << "\n"
      << "mean examined ratio: " << fixed(r.mean_examined_ratio) << "\n";
  return out.str();
}

std::string to_json(const ExperimentReport& r) {
  ordered_json doc;
  doc["model"] = {{"generator", kGeneratorModel},
                  {"propagation", kPropagationModel},
                  {"baseline", kBaselineModel},
                  {"seed_derivation", "splitmix64: trial i uses output i of a "
                                      "generator seeded with seed"}};
  doc["params"] = params_json(r.config);
  doc["hit_rate"] = r.hit_rate;
  doc["mean_root_rank"] = r.mean_root_rank;
  doc["median_root_rank"] = r.median_root_rank;
  doc["mean_examined_localizer"] = r.mean_examined_localizer;
  doc["mean_examined_baseline"] = r.mean_examined_baseline;
  doc["mean_examined_ratio"] = r.mean_examined_ratio;
  doc["trials"] = ordered_json::array();
  for (const TrialMetrics& t : r.rows) {
    doc["trials"].push_back({{"trial", t.trial},
                             {"seed", t.seed},
                             {"root", t.root},
                             {"symptoms", t.symptom_count},
                             {"root_rank", t.root_rank},
                             {"candidates", t.candidate_count},
                             {"examined_localizer", t.nodes_examined_localizer},
                             {"examined_baseline", t.nodes_examined_baseline},
                             {"hit", t.hit}});
  }
  return dump(doc);
}

std::string to_csv(const ExperimentReport& r) {
  std::ostringstream out;
  out << "trial,seed,root,symptoms,root_rank,candidates,examined_localizer,"
         "examined_baseline,hit\n";
  for (const TrialMetrics& t : r.rows) {
    out << t.trial << ',' << t.seed << ',' << t.root << ',' << t.symptom_count << ','
        << t.root_rank << ',' << t.candidate_count << ',' << t.nodes_examined_localizer
        << ',' << t.nodes_examined_baseline << ',' << (t.hit ? 1 : 0) << '\n';
  }
  return out.str();
}

}  // namespace critloc
