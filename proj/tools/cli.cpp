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

#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "critloc/error.hpp"
#include "critloc/io.hpp"
#include "critloc/localize.hpp"
#include "critloc/matrix.hpp"
#include "critloc/report.hpp"
#include "critloc/schedule.hpp"
#include "critloc/simulate.hpp"

namespace critloc::cli {

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

EdgeView parse_view(const std::string& view) {
  return view == "scheduling" ? EdgeView::scheduling_only : EdgeView::all_edges;
}

std::vector<std::string> split_ids(const std::string& list) {
  std::vector<std::string> ids;
  std::stringstream in(list);
  for (std::string id; std::getline(in, id, ',');) {
    if (!id.empty()) ids.push_back(id);
  }
  return ids;
}

struct Options {
  std::string file;
  std::string format;
  std::string kind = "dependency";
  std::string view = "all";
  std::string symptoms;
  std::size_t max_paths = kAllPaths;
  bool plain = false;
  ExperimentConfig experiment;
  std::string root_policy = "critical_only";
};

int cmd_validate(const Options& o, std::ostream& out) {
  const GraphDocument doc = parse_document(read_file(o.file));
  const ValidationReport report = validate(doc.nodes, doc.edges);
  out << (o.format == "json" ? to_json(report) : to_text(report));
  return report.ok ? kSuccess : kValidationFailed;
}

int cmd_matrix(const Options& o, std::ostream& out) {
  const ActivityGraph graph = parse_graph(read_file(o.file));
  auto emit = [&](const auto& m) {
    if (o.format == "json") out << to_json(m);
    else if (o.format == "text") out << to_text(m);
    else out << to_csv(m);
  };
  if (o.kind == "incidence") emit(incidence_matrix(graph));
  else if (o.kind == "adjacency") emit(adjacency_matrix(graph));
  else if (o.kind == "closure")
    emit(transitive_closure(dependency_matrix(graph, parse_view(o.view))));
  else emit(dependency_matrix(graph, parse_view(o.view)));
  return kSuccess;
}

int cmd_cpm(const Options& o, std::ostream& out) {
  const ActivityGraph graph = parse_graph(read_file(o.file));
  const Schedule schedule = compute_schedule(graph, o.max_paths);
  out << (o.format == "json" ? schedule_json(graph, schedule)
                             : schedule_text(graph, schedule));
  return kSuccess;
}

int cmd_localize(const Options& o, std::ostream& out) {
  const ActivityGraph graph = parse_graph(read_file(o.file));
  const auto ids = split_ids(o.symptoms);
  const SymptomSet symptoms = make_symptoms(graph, std::span<const std::string>(ids));
  const LocalizationReport report = localize(graph, symptoms, {}, parse_view(o.view));
  out << (o.format == "json" ? to_json(report) : to_text(report));
  return kSuccess;
}

int cmd_simulate(const Options& o, std::ostream& out) {
  ExperimentConfig config = o.experiment;
  config.root_policy =
      o.root_policy == "uniform" ? RootPolicy::uniform : RootPolicy::critical_only;
  const ExperimentReport report = run_experiment(config);
  if (o.format == "json") out << to_json(report);
  else if (o.format == "csv") out << to_csv(report);
  else out << to_text(report);
  return kSuccess;
}

int cmd_export(const Options& o, std::ostream& out) {
  const ActivityGraph graph = parse_graph(read_file(o.file));
  std::optional<Schedule> schedule;
  if (!o.plain) {
    try {
      schedule = compute_schedule(graph, 0);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::CyclicSchedule && e.code() != ErrorCode::EmptyGraph)
        throw;
    }
  }
  std::optional<LocalizationReport> report;
  if (!o.symptoms.empty()) {
    const auto ids = split_ids(o.symptoms);
    report = localize(graph, make_symptoms(graph, std::span<const std::string>(ids)),
                      {}, parse_view(o.view));
  }
  out << export_dot(graph, schedule ? &*schedule : nullptr, report ? &*report : nullptr);
  return kSuccess;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Critical-first fault localization over activity dependency graphs",
               "critloc"};
  app.require_subcommand(1);
  Options o;

  auto add_file = [&](CLI::App* cmd) {
    cmd->add_option("file", o.file, "Graph document (JSON)")->required();
  };

  auto* validate_cmd = app.add_subcommand("validate", "Check a graph document");
  add_file(validate_cmd);
  validate_cmd->add_option("--format", o.format)
      ->check(CLI::IsMember({"text", "json"}))
      ->default_val("text");

  auto* matrix_cmd = app.add_subcommand("matrix", "Print a matrix view of the graph");
  add_file(matrix_cmd);
  matrix_cmd->add_option("--kind", o.kind)
      ->check(CLI::IsMember({"incidence", "adjacency", "dependency", "closure"}))
      ->default_val("dependency");
  matrix_cmd->add_option("--view", o.view, "Edges admitted to dependency views")
      ->check(CLI::IsMember({"all", "scheduling"}))
      ->default_val("all");
  matrix_cmd->add_option("--format", o.format)
      ->check(CLI::IsMember({"csv", "text", "json"}))
      ->default_val("csv");

  auto* cpm_cmd = app.add_subcommand("cpm", "Critical path schedule");
  add_file(cpm_cmd);
  cpm_cmd->add_option("--format", o.format)
      ->check(CLI::IsMember({"text", "json"}))
      ->default_val("text");
  cpm_cmd->add_option("--max-paths", o.max_paths, "Limit on listed critical paths");

  auto* localize_cmd = app.add_subcommand("localize", "Rank root-cause candidates");
  add_file(localize_cmd);
  localize_cmd->add_option("--symptoms", o.symptoms, "Comma-separated activity ids")
      ->required();
  localize_cmd->add_option("--view", o.view)
      ->check(CLI::IsMember({"all", "scheduling"}))
      ->default_val("all");
  localize_cmd->add_option("--format", o.format)
      ->check(CLI::IsMember({"text", "json"}))
      ->default_val("text");

  auto* simulate_cmd = app.add_subcommand("simulate", "Fault-injection experiment");
  auto& e = o.experiment;
  simulate_cmd->add_option("--nodes", e.params.node_count)->default_val(200);
  simulate_cmd->add_option("--layers", e.params.layer_count)->default_val(10);
  simulate_cmd->add_option("--density", e.params.edge_density)->default_val(0.05);
  simulate_cmd->add_option("--feedback", e.params.feedback_edge_fraction)
      ->default_val(0.02);
  simulate_cmd->add_option("--wmax", e.params.weight_max)->default_val(9);
  simulate_cmd->add_option("--trials", e.trials)->default_val(100);
  simulate_cmd->add_option("--detect-prob", e.detect_prob)->default_val(0.9);
  simulate_cmd->add_option("--root-policy", o.root_policy)
      ->check(CLI::IsMember({"critical_only", "uniform"}))
      ->default_val("critical_only");
  simulate_cmd->add_option("--seed", e.params.seed)->default_val(42);
  simulate_cmd->add_option("--threads", e.threads, "Worker threads (0 = hardware)")
      ->default_val(1);
  simulate_cmd->add_option("--format", o.format)
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->default_val("text");

  auto* export_cmd = app.add_subcommand("export", "Graphviz DOT rendering");
  add_file(export_cmd);
  export_cmd->add_option("--format", o.format)
      ->check(CLI::IsMember({"dot"}))
      ->default_val("dot");
  export_cmd->add_flag("--plain", o.plain, "Skip the critical-path overlay");
  export_cmd->add_option("--symptoms", o.symptoms, "Overlay a localization");
  export_cmd->add_option("--view", o.view)
      ->check(CLI::IsMember({"all", "scheduling"}))
      ->default_val("all");

  std::vector<const char*> argv{"critloc"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& error) {
    err << "critloc: " << error.what() << '\n';
    return kInputError;
  }

  if (e.threads == 0) e.threads = std::max(1U, std::thread::hardware_concurrency());

  try {
    if (validate_cmd->parsed()) return cmd_validate(o, out);
    if (matrix_cmd->parsed()) return cmd_matrix(o, out);
    if (cpm_cmd->parsed()) return cmd_cpm(o, out);
    if (localize_cmd->parsed()) return cmd_localize(o, out);
    if (simulate_cmd->parsed()) return cmd_simulate(o, out);
    if (export_cmd->parsed()) return cmd_export(o, out);
  } catch (const Error& error) {
    err << "critloc: " << error.what() << '\n';
    return kInputError;
  } catch (const InputError& error) {
    err << "critloc: " << error.what() << '\n';
    return kInputError;
  } catch (const std::exception& error) {
    err << "critloc: internal error: " << error.what() << '\n';
    return kInternalError;
  }
  return kInternalError;
}

}  // namespace critloc::cli
