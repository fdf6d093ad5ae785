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

#include "privpipe/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

namespace privpipe {
namespace {

// Minimal RFC-4180 quoting so tuple labels like (0,1) survive the format.
std::string csv_cell(const std::string& value) {
  if (value.find_first_of(",\"\n") == std::string::npos) return value;
  std::string out = "\"";
  for (char c : value) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  bool quoted = false;
  for (size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cell.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cell.push_back(c);
      }
    } else if (c == '"' && cell.empty()) {
      quoted = true;
    } else if (c == ',') {
      out.push_back(cell);
      cell.clear();
    } else if (c != '\r') {
      cell.push_back(c);
    }
  }
  if (quoted) throw ParseError("unterminated quote in CSV line: " + line);
  out.push_back(cell);
  return out;
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string line;
  std::istringstream in(text);
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

}  // namespace

std::string matrix_to_csv(const Matrix& m) {
  std::string out;
  for (const Label& c : m.col_labels()) {
    out += ",";
    out += csv_cell(c.str());
  }
  out += "\n";
  for (size_t i = 0; i < m.n_rows(); ++i) {
    out += csv_cell(m.row_labels()[i].str());
    for (size_t j = 0; j < m.n_cols(); ++j) {
      out += ",";
      out += m.at(i, j).str();
    }
    out += "\n";
  }
  return out;
}

Matrix matrix_from_csv(const std::string& text) {
  const std::vector<std::string> lines = split_lines(text);
  if (lines.empty()) throw ParseError("empty matrix CSV");
  const std::vector<std::string> header = split_csv_line(lines[0]);
  if (header.size() < 2) throw ParseError("matrix CSV header needs at least one column label");
  std::vector<Label> cols;
  for (size_t j = 1; j < header.size(); ++j) cols.push_back(Label::from_text(header[j]));
  std::vector<Label> rows;
  std::vector<Rational> entries;
  for (size_t i = 1; i < lines.size(); ++i) {
    const std::vector<std::string> cells = split_csv_line(lines[i]);
    if (cells.size() != header.size()) {
      throw ParseError("matrix CSV row " + std::to_string(i + 1) + " has " +
                       std::to_string(cells.size()) + " cells, expected " +
                       std::to_string(header.size()));
    }
    rows.push_back(Label::from_text(cells[0]));
    for (size_t j = 1; j < cells.size(); ++j) entries.push_back(Rational::parse(cells[j]));
  }
  return Matrix(std::move(rows), std::move(cols), std::move(entries));
}

Matrix matrix_from_csv_file(const std::string& path) { return matrix_from_csv(read_file(path)); }

std::string prior_to_csv(const Prior& pi) {
  Matrix m({Label("pi")}, pi.over, pi.probs);
  return matrix_to_csv(m);
}

Prior prior_from_csv(const std::string& text) {
  const Matrix m = matrix_from_csv(text);
  if (m.n_rows() != 1) throw ParseError("prior CSV must have exactly one row");
  std::vector<Rational> probs;
  probs.reserve(m.n_cols());
  for (size_t j = 0; j < m.n_cols(); ++j) probs.push_back(m.at(0, j));
  return Prior(m.col_labels(), std::move(probs));
}

Json matrix_to_json(const Matrix& m) {
  Json j;
  j["rows"] = Json::array();
  for (const Label& l : m.row_labels()) j["rows"].push_back(l.str());
  j["cols"] = Json::array();
  for (const Label& l : m.col_labels()) j["cols"].push_back(l.str());
  j["entries"] = Json::array();
  for (size_t i = 0; i < m.n_rows(); ++i) {
    Json row = Json::array();
    for (size_t c = 0; c < m.n_cols(); ++c) row.push_back(m.at(i, c).str());
    j["entries"].push_back(std::move(row));
  }
  return j;
}

Matrix matrix_from_json(const Json& j) {
  std::vector<Label> rows, cols;
  for (const auto& l : j.at("rows")) rows.push_back(Label::from_text(l.get<std::string>()));
  for (const auto& l : j.at("cols")) cols.push_back(Label::from_text(l.get<std::string>()));
  std::vector<Rational> entries;
  for (const auto& row : j.at("entries")) {
    for (const auto& v : row) entries.push_back(Rational::parse(v.get<std::string>()));
  }
  return Matrix(std::move(rows), std::move(cols), std::move(entries));
}

Json prior_to_json(const Prior& pi) {
  Json j;
  j["over"] = Json::array();
  for (const Label& l : pi.over) j["over"].push_back(l.str());
  j["probs"] = Json::array();
  for (const Rational& p : pi.probs) j["probs"].push_back(p.str());
  return j;
}

Prior prior_from_json(const Json& j) {
  std::vector<Label> over;
  std::vector<Rational> probs;
  for (const auto& l : j.at("over")) over.push_back(Label::from_text(l.get<std::string>()));
  for (const auto& p : j.at("probs")) probs.push_back(Rational::parse(p.get<std::string>()));
  return Prior(std::move(over), std::move(probs));
}

Json loss_to_json(const LossFunction& l) {
  Json j;
  j["secrets"] = Json::array();
  for (const Label& s : l.secrets()) j["secrets"].push_back(s.str());
  j["actions"] = Json::array();
  for (const Label& a : l.actions()) j["actions"].push_back(a.str());
  j["loss"] = Json::array();
  for (size_t x = 0; x < l.n_secrets(); ++x) {
    Json row = Json::array();
    for (size_t w = 0; w < l.n_actions(); ++w) row.push_back(l.at(x, w).str());
    j["loss"].push_back(std::move(row));
  }
  return j;
}

LossFunction loss_from_json(const Json& j) {
  std::vector<Label> secrets, actions;
  for (const auto& l : j.at("secrets")) secrets.push_back(Label::from_text(l.get<std::string>()));
  for (const auto& l : j.at("actions")) actions.push_back(Label::from_text(l.get<std::string>()));
  std::vector<Rational> grid;
  for (const auto& row : j.at("loss")) {
    for (const auto& v : row) grid.push_back(Rational::parse(v.get<std::string>()));
  }
  return LossFunction(std::move(secrets), std::move(actions), std::move(grid));
}

MechanismSpec mechanism_spec_from_json(const Json& j) {
  const std::string family = j.at("family").get<std::string>();
  MechanismSpec spec;
  if (family == "rr") {
    spec.family = MechanismSpec::Family::RandomResponse;
    spec.size = j.at("k").get<int>();
    spec.param = Rational::parse(j.at("p").get<std::string>());
  } else if (family == "geometric") {
    spec.family = MechanismSpec::Family::Geometric;
    spec.size = j.at("n").get<int>();
    spec.param = Rational::parse(j.at("alpha").get<std::string>());
  } else {
    throw ParseError("unknown mechanism family: " + family);
  }
  return spec;
}

Json mechanism_spec_to_json(const MechanismSpec& spec) {
  Json j;
  if (spec.family == MechanismSpec::Family::RandomResponse) {
    j["family"] = "rr";
    j["k"] = spec.size;
    j["p"] = spec.param.str();
  } else {
    j["family"] = "geometric";
    j["n"] = spec.size;
    j["alpha"] = spec.param.str();
  }
  return j;
}

Json verdict_to_json(const RefinementVerdict& v) {
  Json j;
  j["refines"] = v.refines;
  if (v.witness) j["witness"] = matrix_to_json(*v.witness);
  if (v.certificate) {
    Json cert;
    cert["prior"] = prior_to_json(v.certificate->first);
    cert["loss"] = loss_to_json(v.certificate->second);
    j["certificate"] = std::move(cert);
  }
  j["stats"] = Json{{"pivots", v.stats.pivots}, {"variables", v.stats.variables}};
  return j;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return std::string(buf);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write file: " + path);
  out << content;
}

}  // namespace privpipe
