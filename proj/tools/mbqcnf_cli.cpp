// Copyright 2026 The mbqcnf Authors
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

// mbqcnf command-line front end. Every command prints exactly one JSON
// document on stdout; diagnostics go to stderr.
//
// Exit codes: 0 success, 1 negative but valid answer, 2 input error,
// 3 resource limit.

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "mbqcnf/mbqcnf.hpp"

namespace {

using nlohmann::json;
using namespace mbqcnf;

enum ExitCode : int { kOk = 0, kNegative = 1, kInputError = 2, kResource = 3 };

struct Outcome {
  int code = kOk;
  json report;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Pauli sigma_from_option(const std::string& text) {
  const auto p = pauli_from_string(text);
  if (!p) throw ParseError("--sigma must be X, Y or Z");
  return *p;
}

json vertex_list(const VertexSet& s) { return json(s.to_vector()); }

Outcome cmd_verify(const std::string& graph_file, const std::string& gflow_file) {
  const ExtendedOpenGraph eog = io::parse_open_graph(read_file(graph_file));
  const Gflow g = io::parse_gflow(read_file(gflow_file));
  const VerificationReport r = verify_gflow(eog, g);
  return {r.valid ? kOk : kNegative, io::report_to_json(r)};
}

Outcome cmd_find(const std::string& graph_file) {
  const ExtendedOpenGraph eog = io::parse_open_graph(read_file(graph_file));
  const auto found = find_gflow_layered(eog);
  json report{{"found", found.has_value()}};
  if (!found) {
    report["gflow"] = nullptr;
    return {kNegative, report};
  }
  report["gflow"] = io::gflow_to_json(found->gflow)["g"];
  json rounds = json::object();
  for (const auto& [u, r] : found->round) rounds[std::to_string(u)] = r;
  report["rounds"] = std::move(rounds);
  return {kOk, report};
}

Outcome cmd_enumerate(const std::string& graph_file, std::size_t limit) {
  const ExtendedOpenGraph eog = io::parse_open_graph(read_file(graph_file));
  const GflowEnumeration e = brute_force_enumerate(eog, limit);
  json report = io::enumeration_to_json(e);
  report["limit"] = limit;
  return {e.exhausted ? kOk : kResource, report};
}

Outcome cmd_focus(const std::string& graph_file, const std::string& gflow_file,
                  const std::string& sigma_text) {
  const Pauli sigma = sigma_from_option(sigma_text);
  const ExtendedOpenGraph eog = io::parse_open_graph(read_file(graph_file));
  const Gflow g = io::parse_gflow(read_file(gflow_file));
  const Gflow focused = focus(eog, g, sigma);
  json report = io::gflow_to_json(focused);
  report["sigma"] = to_string(sigma);
  return {kOk, report};
}

Outcome cmd_check_nf(const std::string& graph_file, const std::string& gflow_file,
                     const std::string& sigma_text) {
  const Pauli sigma = sigma_from_option(sigma_text);
  const ExtendedOpenGraph eog = io::parse_open_graph(read_file(graph_file));
  const Gflow g = io::parse_gflow(read_file(gflow_file));
  const bool valid = verify_gflow(eog, g).valid;
  VertexSet offenders;
  for (const auto& [u, s] : g.g) {
    if (!satisfies_normal_form_at(eog, u, s, sigma)) offenders.insert(u);
  }
  const bool nf = valid && offenders.empty();
  return {nf ? kOk : kNegative,
          json{{"gflow", valid},
               {"normal_form", nf},
               {"offending_vertices", vertex_list(offenders)},
               {"sigma", to_string(sigma)}}};
}

Outcome cmd_promote(const std::string& graph_file, const std::string& gflow_file,
                    const std::string& sigma_text, VertexId vertex) {
  const Pauli sigma = sigma_from_option(sigma_text);
  if (sigma == Pauli::X) throw ParseError("--sigma must be Y or Z for promote");
  const ExtendedOpenGraph eog = io::parse_open_graph(read_file(graph_file));
  const Gflow g = io::parse_gflow(read_file(gflow_file));
  const PromotionResult r = sigma == Pauli::Z ? promote_input_z(eog, g, vertex)
                                              : promote_input_y(eog, g, vertex);
  const bool valid = is_gflow(r.rewritten, r.gflow);
  const bool nf = check_normal_form(r.rewritten, r.gflow, sigma);
  json report{{"graph", io::open_graph_to_json(r.rewritten)},
              {"gflow", io::gflow_to_json(r.gflow)["g"]},
              {"is_gflow", valid},
              {"normal_form", nf},
              {"promoted_vertex", r.promoted_vertex},
              {"sigma", to_string(sigma)}};
  report["added_vertex"] = r.added_vertex ? json(*r.added_vertex) : json(nullptr);
  return {valid && nf ? kOk : kNegative, report};
}

struct SimulateOptions {
  std::string graph_file;
  std::string corrections_file;
  bool uncorrected = false;
  std::string input = "random";
  std::uint64_t seed = 0;
  double tol = kStateTolerance;
  bool dump_branches = false;
};

json branch_to_json(const BranchResult& b) {
  json signals = json::object();
  for (const auto& [u, s] : b.signals) signals[std::to_string(u)] = s;
  return json{{"output_state", io::statevector_to_json(b.output_state)},
              {"probability", b.probability},
              {"signals", std::move(signals)}};
}

Outcome cmd_simulate(const SimulateOptions& o) {
  if (o.input != "basis" && o.input != "random") {
    throw ParseError("--input must be basis or random");
  }
  const json doc = io::parse_json(read_file(o.graph_file));
  const ExtendedOpenGraph eog = io::open_graph_from_json(doc);
  std::mt19937_64 rng(o.seed);

  AngleMap angles;
  if (auto given = io::angles_from_json(doc, eog)) {
    angles = std::move(*given);
    for (VertexId u : eog.measured()) {
      if (!angles.count(u)) {
        throw ParseError("missing angle for measured vertex " + std::to_string(u));
      }
    }
  } else {
    angles = generic_angles(eog.measured(), rng);
  }

  CorrectiveMaps maps;
  if (!o.corrections_file.empty()) {
    const json c = io::parse_json(read_file(o.corrections_file));
    if (c.is_object() && c.contains("g")) {
      const Gflow g = io::gflow_from_json(c);
      if (!is_gflow(eog, g)) {
        return {kNegative, json{{"error", "supplied map is not a gflow"},
                                {"verification", io::report_to_json(verify_gflow(eog, g))}}};
      }
      maps = corrective_maps(eog, g);
    } else {
      maps = io::corrective_maps_from_json(c);
    }
  } else {
    const auto g = find_gflow(eog);
    if (!g) return {kNegative, json{{"error", "instance has no gflow"}}};
    maps = corrective_maps(eog, *g);
  }

  Pattern pattern = make_pattern(eog, angles, maps);
  if (o.uncorrected) pattern = strip_corrections(pattern);

  const std::vector<VertexId> in = eog.inputs().to_vector();
  std::vector<Statevector> inputs;
  if (o.input == "basis") {
    for (std::size_t x = 0; x < (std::size_t{1} << in.size()); ++x) {
      inputs.push_back(Statevector::basis(in, x));
    }
  } else {
    inputs.push_back(random_state(in, rng));
  }

  bool deterministic = true;
  bool strong = true;
  double deviation = 0;
  json runs = json::array();
  for (const Statevector& s : inputs) {
    const std::vector<BranchResult> branches = run_all_branches(pattern, s);
    const DeterminismReport r = check_determinism(branches, o.tol);
    deterministic = deterministic && r.deterministic;
    strong = strong && r.strong;
    deviation = std::max(deviation, r.max_state_deviation);
    json run = io::determinism_to_json(r);
    run["input_state"] = io::statevector_to_json(s);
    if (o.dump_branches) {
      json dump = json::array();
      for (const BranchResult& b : branches) dump.push_back(branch_to_json(b));
      run["branches"] = std::move(dump);
    }
    runs.push_back(std::move(run));
  }

  json angle_json = json::object();
  for (const auto& [u, a] : angles) angle_json[std::to_string(u)] = a;
  json report{{"angles", std::move(angle_json)},
              {"corrections", io::corrective_maps_to_json(pattern.corrections)},
              {"deterministic", deterministic},
              {"input", o.input},
              {"max_state_deviation", deviation},
              {"runs", std::move(runs)},
              {"schedule", pattern.schedule},
              {"seed", o.seed},
              {"strong", strong},
              {"tol", o.tol},
              {"uncorrected", o.uncorrected}};
  return {deterministic && strong ? kOk : kNegative, report};
}

Outcome cmd_oracle_compare(unsigned max_vertices, std::uint64_t seed,
                           unsigned trials) {
  if (max_vertices < 1 || max_vertices > 8) {
    throw ParseError("--max-vertices must lie in [1, 8]");
  }
  std::mt19937_64 rng(seed);
  unsigned with_gflow = 0;
  json disagreements = json::array();
  for (unsigned t = 0; t < trials; ++t) {
    const ExtendedOpenGraph eog = random_instance(rng, 1, max_vertices);
    const auto found = find_gflow(eog);
    const GflowEnumeration all = brute_force_enumerate(eog);
    if (!all.exhausted) throw ResourceError("brute force exceeded its limit");
    const bool agree = found.has_value() == !all.gflows.empty() &&
                       (!found || is_gflow(eog, *found));
    if (found) ++with_gflow;
    if (!agree) {
      std::cerr << "disagreement on trial " << t << ": "
                << io::serialize_open_graph(eog) << '\n';
      disagreements.push_back({{"found", found.has_value()},
                               {"graph", io::open_graph_to_json(eog)},
                               {"trial", t},
                               {"enumerated", all.gflows.size()}});
    }
  }
  const bool ok = disagreements.empty();
  return {ok ? kOk : kNegative,
          json{{"agree", ok},
               {"disagreements", std::move(disagreements)},
               {"max_vertices", max_vertices},
               {"seed", seed},
               {"trials", trials},
               {"with_gflow", with_gflow}}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Extended-MBQC open graphs: gflow, normal forms, simulation"};
  app.require_subcommand(1);

  std::string graph_file, gflow_file, sigma;
  std::size_t limit = kDefaultSearchLimit;
  VertexId vertex = 0;
  SimulateOptions sim;
  unsigned max_vertices = 4;
  std::uint64_t seed = 0;
  unsigned trials = 1000;

  auto* verify = app.add_subcommand("verify", "Check a candidate gflow");
  verify->add_option("graph", graph_file, "Open graph JSON")->required();
  verify->add_option("gflow", gflow_file, "Gflow JSON")->required();

  auto* find = app.add_subcommand("find", "Find a gflow with the layered solver");
  find->add_option("graph", graph_file, "Open graph JSON")->required();

  auto* enumerate = app.add_subcommand("enumerate", "List every gflow");
  enumerate->add_option("graph", graph_file, "Open graph JSON")->required();
  enumerate->add_option("--limit", limit, "Search node budget");

  auto* focus_cmd = app.add_subcommand("focus", "Rewrite a gflow into sigma-normal form");
  focus_cmd->add_option("graph", graph_file, "Open graph JSON")->required();
  focus_cmd->add_option("gflow", gflow_file, "Gflow JSON")->required();
  focus_cmd->add_option("--sigma", sigma, "X, Y or Z")->required();

  auto* check_nf = app.add_subcommand("check-nf", "Is a gflow in sigma-normal form?");
  check_nf->add_option("graph", graph_file, "Open graph JSON")->required();
  check_nf->add_option("gflow", gflow_file, "Gflow JSON")->required();
  check_nf->add_option("--sigma", sigma, "X, Y or Z")->required();

  auto* promote = app.add_subcommand("promote", "Turn a measured vertex into an input");
  promote->add_option("graph", graph_file, "Open graph JSON")->required();
  promote->add_option("gflow", gflow_file, "Normal-form gflow JSON")->required();
  promote->add_option("--sigma", sigma, "Y or Z")->required();
  promote->add_option("--vertex", vertex, "Vertex to promote")->required();

  auto* simulate = app.add_subcommand("simulate", "Run every measurement branch");
  simulate->add_option("graph", sim.graph_file, "Open graph JSON, optionally with angles")
      ->required();
  simulate->add_option("corrections", sim.corrections_file,
                       "Gflow JSON or explicit {\"x\":..,\"z\":..} corrections");
  simulate->add_flag("--uncorrected", sim.uncorrected, "Drop every correction");
  simulate->add_option("--input", sim.input, "basis or random");
  simulate->add_option("--seed", sim.seed, "Seed for input state and missing angles");
  simulate->add_option("--tol", sim.tol, "Determinism tolerance");
  simulate->add_flag("--dump-branches", sim.dump_branches, "Include every branch");

  auto* oracle = app.add_subcommand("oracle-compare",
                                    "Layered solver against brute force on random instances");
  oracle->add_option("--max-vertices", max_vertices, "Largest instance size");
  oracle->add_option("--seed", seed, "Random seed");
  oracle->add_option("--trials", trials, "Number of instances");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << '\n';
    std::cout << json{{"error", e.what()}}.dump(2) << '\n';
    return kInputError;
  }

  Outcome outcome;
  try {
    if (*verify) outcome = cmd_verify(graph_file, gflow_file);
    else if (*find) outcome = cmd_find(graph_file);
    else if (*enumerate) outcome = cmd_enumerate(graph_file, limit);
    else if (*focus_cmd) outcome = cmd_focus(graph_file, gflow_file, sigma);
    else if (*check_nf) outcome = cmd_check_nf(graph_file, gflow_file, sigma);
    else if (*promote) outcome = cmd_promote(graph_file, gflow_file, sigma, vertex);
    else if (*simulate) outcome = cmd_simulate(sim);
    else outcome = cmd_oracle_compare(max_vertices, seed, trials);
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    outcome = {kResource, json{{"error", e.what()}}};
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    outcome = {kInputError, json{{"error", e.what()}}};
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    outcome = {kInputError, json{{"error", e.what()}}};
  }
  std::cout << outcome.report.dump(2) << '\n';
  return outcome.code;
}
