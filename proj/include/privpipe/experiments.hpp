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

#ifndef PRIVPIPE_EXPERIMENTS_HPP_
#define PRIVPIPE_EXPERIMENTS_HPP_

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "privpipe/io.hpp"
#include "privpipe/pipelines.hpp"

namespace privpipe {

// Named experiments are code-pinned: their matrices are constructed from
// parameters in code, never read from disk, so golden outputs cannot drift.
struct ExperimentConfig {
  std::string name;        // appendix-d, sum-instability, geo-counting,
                           // outlier-stability, argmax-sweep,
                           // rr-counting-suite, custom
  Json parameters;         // custom only; named experiments ignore overrides
  std::string output_dir;  // empty: nothing is written
  unsigned seed = 0;       // randomized fallback search + suite generation
};

struct ReportBundle {
  Json verdict;                                          // verdict.json content
  std::vector<std::pair<std::string, std::string>> files;  // name -> bytes

  const std::string& file(const std::string& name) const;
};

// Runs one experiment; identical config + seed gives a byte-identical bundle.
ReportBundle run_experiment(const ExperimentConfig& cfg);

const std::vector<std::string>& experiment_names();

// Empirical-frequency prior plus the known-values list for the
// single-unknown-respondent counting scenario.
struct IngestResult {
  Prior prior;
  std::vector<Label> known_values;
  Label target_value;
};

// Reads one column of a CSV dataset through a token -> integer map. The
// designated target row becomes the unknown respondent; every other row's
// mapped value is prior knowledge.
IngestResult ingest_csv(const std::string& path, const std::string& column,
                        const std::map<std::string, std::int64_t>& value_map, size_t target_row);

// Grid report as CSV: param, epsilon, utility_exact, utility_float,
// violation_flag (flag sits on the higher-epsilon row of a violating pair).
std::string report_to_csv(const StabilityReport& report);

// Plot-friendly projection: epsilon_float, loss_float, violation_flag.
std::string emit_plot_data(const StabilityReport& report);

Json report_to_json(const StabilityReport& report);

}  // namespace privpipe

#endif  // PRIVPIPE_EXPERIMENTS_HPP_
