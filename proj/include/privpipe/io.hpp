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

#ifndef PRIVPIPE_IO_HPP_
#define PRIVPIPE_IO_HPP_

#include <string>

#include <json.hpp>

#include "privpipe/mechanisms.hpp"
#include "privpipe/refinement.hpp"
#include "privpipe/utility.hpp"

namespace privpipe {

using Json = nlohmann::ordered_json;

// Matrix text format: a header row of column labels with a leading label
// column, then one row per matrix row. Entries are exact "p/q" strings;
// decimal literals are also accepted on input and parsed exactly.
std::string matrix_to_csv(const Matrix& m);
Matrix matrix_from_csv(const std::string& text);
Matrix matrix_from_csv_file(const std::string& path);

// Priors use the same CSV format as a 1 x n matrix.
std::string prior_to_csv(const Prior& pi);
Prior prior_from_csv(const std::string& text);

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);
Json prior_to_json(const Prior& pi);
Prior prior_from_json(const Json& j);
Json loss_to_json(const LossFunction& l);
LossFunction loss_from_json(const Json& j);

// {"family": "rr"|"geometric", "k"/"n": int, "p"/"alpha": "p/q"}
MechanismSpec mechanism_spec_from_json(const Json& j);
Json mechanism_spec_to_json(const MechanismSpec& spec);

// {refines, witness?, certificate?, stats: {pivots, variables}}
Json verdict_to_json(const RefinementVerdict& v);

// Round-trip-safe decimal rendering for the *_float report columns.
std::string format_double(double v);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace privpipe

#endif  // PRIVPIPE_IO_HPP_
