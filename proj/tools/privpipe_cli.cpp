// Copyright 2026 The privpipe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "privpipe/experiments.hpp"
#include "privpipe/io.hpp"
#include "privpipe/refinement.hpp"

namespace {

using privpipe::Json;

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
  } else {
    privpipe::write_file(out_path, content);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact-rational analysis of privacy/utility in data-release pipelines"};
  app.require_subcommand(1);

  // ---- mech build
  auto* mech = app.add_subcommand("mech", "Mechanism constructors");
  mech->require_subcommand(1);
  auto* build = mech->add_subcommand("build", "Write a mechanism channel as CSV");
  std::string family, param, spec_path, mech_out;
  int size = 0;
  build->add_option("--family", family, "rr or geometric");
  build->add_option("--k,--n", size, "choice-set / domain size");
  build->add_option("--p,--alpha", param, "truth probability / decay (exact rational)");
  build->add_option("--spec", spec_path, "mechanism spec JSON file (alternative to flags)");
  build->add_option("--out", mech_out, "output CSV path (default stdout)");
  build->callback([&] {
    privpipe::MechanismSpec spec;
    if (!spec_path.empty()) {
      spec = privpipe::mechanism_spec_from_json(Json::parse(privpipe::read_file(spec_path)));
    } else {
      if (family != "rr" && family != "geometric") {
        throw CLI::ValidationError("--family must be rr or geometric");
      }
      spec.family = family == "rr" ? privpipe::MechanismSpec::Family::RandomResponse
                                   : privpipe::MechanismSpec::Family::Geometric;
      spec.size = size;
      spec.param = privpipe::Rational::parse(param);
    }
    const privpipe::Channel c = privpipe::build_mechanism(spec);
    emit(mech_out, privpipe::matrix_to_csv(c.matrix()));
    const privpipe::EpsKey key = privpipe::mechanism_eps_key(spec);
    std::cerr << "epsilon: " << privpipe::format_double(key.eps_float()) << "\n";
  });

  // ---- refine check
  auto* refine = app.add_subcommand("refine", "Refinement decisions");
  refine->require_subcommand(1);
  auto* check = refine->add_subcommand("check", "Decide A (refined-by) B for two channel CSVs");
  std::string a_path, b_path, verdict_out;
  unsigned check_seed = 0;
  check->add_option("a", a_path, "channel A CSV")->required();
  check->add_option("b", b_path, "channel B CSV")->required();
  check->add_option("--out", verdict_out, "verdict JSON path (default stdout)");
  check->add_option("--seed", check_seed, "seed for the randomized certificate fallback");
  check->callback([&] {
    const privpipe::Channel a(privpipe::matrix_from_csv_file(a_path));
    const privpipe::Channel b(privpipe::matrix_from_csv_file(b_path));
    const privpipe::RefinementVerdict verdict = privpipe::check_refinement(a, b, check_seed);
    emit(verdict_out, privpipe::verdict_to_json(verdict).dump(2) + "\n");
  });

  // ---- stability scan
  auto* stability = app.add_subcommand("stability", "Stability scans over parameter grids");
  stability->require_subcommand(1);
  auto* scan = stability->add_subcommand("scan", "Run the scan described by a config JSON");
  std::string cfg_path, scan_out;
  unsigned scan_seed = 0;
  scan->add_option("config", cfg_path, "experiment config JSON")->required();
  scan->add_option("--out", scan_out, "output directory");
  scan->add_option("--seed", scan_seed, "seed");
  scan->callback([&] {
    privpipe::ExperimentConfig cfg;
    cfg.name = "custom";
    cfg.parameters = Json::parse(privpipe::read_file(cfg_path));
    cfg.output_dir = scan_out;
    cfg.seed = scan_seed;
    const privpipe::ReportBundle bundle = privpipe::run_experiment(cfg);
    if (scan_out.empty()) std::cout << bundle.verdict.dump(2) << "\n";
  });

  // ---- experiment
  auto* experiment = app.add_subcommand("experiment", "Reproduce a named analysis");
  std::string exp_name, exp_out;
  unsigned exp_seed = 0;
  experiment->add_option("name", exp_name, "one of: appendix-d, sum-instability, geo-counting, "
                                           "outlier-stability, argmax-sweep, rr-counting-suite")
      ->required();
  experiment->add_option("--out", exp_out, "output directory");
  experiment->add_option("--seed", exp_seed, "seed");
  experiment->callback([&] {
    privpipe::ExperimentConfig cfg;
    cfg.name = exp_name;
    cfg.output_dir = exp_out;
    cfg.seed = exp_seed;
    const privpipe::ReportBundle bundle = privpipe::run_experiment(cfg);
    if (exp_out.empty()) std::cout << bundle.verdict.dump(2) << "\n";
  });

  // ---- ingest
  auto* ingest = app.add_subcommand("ingest", "Build a prior + known-values list from a CSV column");
  std::string csv_path, column, map_path, ingest_out;
  size_t target_row = 0;
  ingest->add_option("--csv", csv_path, "dataset CSV")->required();
  ingest->add_option("--column", column, "column name")->required();
  ingest->add_option("--map", map_path, "token -> integer map JSON")->required();
  ingest->add_option("--target-row", target_row, "0-based data row of the unknown respondent")
      ->required();
  ingest->add_option("--out", ingest_out, "output JSON path (default stdout)");
  ingest->callback([&] {
    const Json map_json = Json::parse(privpipe::read_file(map_path));
    std::map<std::string, std::int64_t> value_map;
    for (const auto& [token, v] : map_json.items()) value_map[token] = v.get<std::int64_t>();
    const privpipe::IngestResult result =
        privpipe::ingest_csv(csv_path, column, value_map, target_row);
    Json j;
    j["prior"] = privpipe::prior_to_json(result.prior);
    j["known"] = Json::array();
    for (const privpipe::Label& l : result.known_values) j["known"].push_back(l.str());
    j["target_value"] = result.target_value.str();
    emit(ingest_out, j.dump(2) + "\n");
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
