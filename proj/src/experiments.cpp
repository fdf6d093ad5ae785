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

#include "privpipe/experiments.hpp"

#include <algorithm>
#include <filesystem>
#include <random>
#include <sstream>

#include "privpipe/refinement.hpp"

namespace privpipe {
namespace {

bool row_is_flagged(const StabilityReport& report, size_t i) {
  for (const auto& v : report.violations) {
    if (v.hi_index == i) return true;
  }
  return false;
}

std::string verdict_name(StabilityReport::Verdict v) {
  return v == StabilityReport::Verdict::Unstable ? "UNSTABLE" : "L_STABLE_ON_GRID";
}

void add_json(ReportBundle& bundle, const std::string& name, const Json& j) {
  bundle.files.emplace_back(name, j.dump(2) + "\n");
}

// --- appendix-d -----------------------------------------------------------

ReportBundle run_appendix_d(const ExperimentConfig& cfg) {
  const std::vector<Label> domain = int_range(7);
  const std::vector<Label> known = {Label(0), Label(1), Label(1)};
  const std::vector<Rational> grid = {Rational(2, 7), Rational(100, 351)};

  auto pipeline = [&](const Rational& alpha) {
    return known_context_count(truncated_geometric({7, alpha}), known, Label(0), domain);
  };
  auto eps_of = [](const Rational& alpha) {
    return mechanism_eps_key({MechanismSpec::Family::Geometric, 7, alpha});
  };
  const LossFunction loss = builtin_loss(LossKind::ScaledAbs, domain, Rational(1000));
  const Prior pi = Prior::uniform(domain);
  const StabilityReport report = stability_scan(grid, pipeline, eps_of, loss, pi);

  ReportBundle bundle;
  for (size_t i = 0; i < grid.size(); ++i) {
    const Channel g = truncated_geometric({7, grid[i]});
    const Channel counts = pipeline(grid[i]);
    bundle.files.emplace_back("perturber_" + std::to_string(i) + ".csv",
                              matrix_to_csv(g.matrix()));
    bundle.files.emplace_back("count_channel_" + std::to_string(i) + ".csv",
                              matrix_to_csv(counts.matrix()));
  }
  bundle.files.emplace_back("report.csv", report_to_csv(report));
  bundle.files.emplace_back("plot.csv", emit_plot_data(report));

  Json j;
  j["experiment"] = cfg.name;
  j["seed"] = cfg.seed;
  j["verdict"] = verdict_name(report.verdict);
  j["report"] = report_to_json(report);
  bundle.verdict = std::move(j);
  return bundle;
}

// --- refinement counterexamples -------------------------------------------

ReportBundle run_refinement_experiment(const ExperimentConfig& cfg, const Channel& a,
                                       const Channel& b, const Json& scenario) {
  const RefinementVerdict verdict = check_refinement(a, b, cfg.seed);
  ReportBundle bundle;
  bundle.files.emplace_back("pipeline_a.csv", matrix_to_csv(a.matrix()));
  bundle.files.emplace_back("pipeline_b.csv", matrix_to_csv(b.matrix()));

  Json j;
  j["experiment"] = cfg.name;
  j["seed"] = cfg.seed;
  j["verdict"] = verdict.refines ? "REFINEMENT" : "NON_REFINEMENT";
  j["scenario"] = scenario;
  j["a"] = matrix_to_json(a.matrix());
  j["b"] = matrix_to_json(b.matrix());
  j["check"] = verdict_to_json(verdict);
  if (verdict.certificate) {
    j["certificate_gap"] =
        Json{{"u_a", posterior_uncertainty(verdict.certificate->second, verdict.certificate->first, a).str()},
             {"u_b", posterior_uncertainty(verdict.certificate->second, verdict.certificate->first, b).str()}};
  }
  bundle.verdict = std::move(j);
  return bundle;
}

ReportBundle run_sum_instability(const ExperimentConfig& cfg) {
  const Channel r3 = random_response({3, Rational(2, 5)});
  const Channel r2 = random_response({3, Rational(1, 4)});
  const PostProcessor s = sum_query(int_range(3), 2);
  const Channel a = Channel(matmul(kron_power(r3.matrix(), 2), s.matrix()));
  const Channel b = Channel(matmul(kron_power(r2.matrix(), 2), s.matrix()));
  Json scenario;
  scenario["perturbers"] = "rr(k=3, p=2/5)^(x)2 vs rr(k=3, p=1/4)^(x)2";
  scenario["post"] = "sum over {0,1,2}^2";
  return run_refinement_experiment(cfg, a, b, scenario);
}

ReportBundle run_geo_counting(const ExperimentConfig& cfg) {
  const Channel g3 = truncated_geometric({3, Rational(1, 3)});
  const Channel g2 = truncated_geometric({3, Rational(1, 2)});
  const PostProcessor count_zeros = counting_query(boolean_aggregator(int_range(3), {Label(0)}), 2);
  const Channel a = Channel(matmul(kron_power(g3.matrix(), 2), count_zeros.matrix()));
  const Channel b = Channel(matmul(kron_power(g2.matrix(), 2), count_zeros.matrix()));
  Json scenario;
  scenario["perturbers"] = "geometric(n=3, alpha=1/3)^(x)2 vs geometric(n=3, alpha=1/2)^(x)2";
  scenario["post"] = "count of zeros";
  return run_refinement_experiment(cfg, a, b, scenario);
}

// --- outlier-stability ------------------------------------------------------

ReportBundle run_outlier_stability(const ExperimentConfig& cfg) {
  const GeomParams g3{3, Rational(1, 3)};
  const GeomParams g2{3, Rational(1, 2)};
  const Matrix witness = geometric_witness(g3, g2);
  const PostProcessor outlier = boolean_aggregator(int_range(3), {Label(0), Label(2)});
  const PostProcessor zeros = boolean_aggregator(int_range(3), {Label(0)});

  const bool outlier_ok = structural_stability_check(witness, outlier);
  const bool zeros_ok = structural_stability_check(witness, zeros);
  const PrecheckVerdict pre =
      instability_precheck(truncated_geometric(g3), truncated_geometric(g2), zeros);

  const PostProcessor count_outliers = counting_query(outlier, 2);
  const Channel a =
      Channel(matmul(kron_power(truncated_geometric(g3).matrix(), 2), count_outliers.matrix()));
  const Channel b =
      Channel(matmul(kron_power(truncated_geometric(g2).matrix(), 2), count_outliers.matrix()));
  const RefinementVerdict outlier_pipelines = check_refinement(a, b, cfg.seed);

  ReportBundle bundle;
  bundle.files.emplace_back("witness.csv", matrix_to_csv(witness));

  Json j;
  j["experiment"] = cfg.name;
  j["seed"] = cfg.seed;
  j["witness"] = matrix_to_json(witness);
  j["witness_stochastic"] = is_stochastic(witness);
  j["structural_check_outlier"] = outlier_ok;
  j["structural_check_zeros"] = zeros_ok;
  j["precheck_zeros"] = pre == PrecheckVerdict::Unstable ? "UNSTABLE" : "INCONCLUSIVE";
  j["outlier_pipelines_refine"] = outlier_pipelines.refines;
  j["verdict"] = pre == PrecheckVerdict::Unstable ? "UNSTABLE" : "INCONCLUSIVE";
  bundle.verdict = std::move(j);
  return bundle;
}

// --- argmax-sweep -----------------------------------------------------------

ReportBundle run_argmax_sweep(const ExperimentConfig& cfg) {
  const int k = 3;
  const int n = 20;
  const std::vector<Rational> grid = {Rational(9, 10), Rational(4, 5), Rational(7, 10),
                                      Rational(3, 5),  Rational(1, 2), Rational(2, 5),
                                      Rational(3, 10), Rational(1, 5), Rational(1, 10),
                                      Rational(1, 20)};
  const std::vector<Label> hists = histogram_domain(k, n);
  auto pipeline = [&](const Rational& alpha) { return noisy_argmax_pipeline(k, n, {n + 1, alpha}); };
  auto eps_of = [&](const Rational& alpha) {
    return mechanism_eps_key({MechanismSpec::Family::Geometric, n + 1, alpha});
  };
  const LossFunction loss = ama_loss(hists, k);
  const Prior pi = Prior::uniform(hists);
  const StabilityReport report = stability_scan(grid, pipeline, eps_of, loss, pi);

  ReportBundle bundle;
  bundle.files.emplace_back("report.csv", report_to_csv(report));
  bundle.files.emplace_back("plot.csv", emit_plot_data(report));
  Json j;
  j["experiment"] = cfg.name;
  j["seed"] = cfg.seed;
  j["participants"] = n;
  j["categories"] = k;
  j["histograms"] = hists.size();
  j["verdict"] = verdict_name(report.verdict);
  j["report"] = report_to_json(report);
  bundle.verdict = std::move(j);
  return bundle;
}

// --- rr-counting-suite ------------------------------------------------------

Rational random_probability(std::mt19937& rng) {
  std::uniform_int_distribution<int> den_dist(2, 12);
  const int den = den_dist(rng);
  std::uniform_int_distribution<int> num_dist(0, den);
  return Rational(num_dist(rng), den);
}

ReportBundle run_rr_counting_suite(const ExperimentConfig& cfg) {
  std::mt19937 rng(cfg.seed);
  struct Instance {
    int k, n;
    Rational p_high, p_low;
    std::vector<Label> accepted;
  };
  std::vector<Instance> instances;
  std::uniform_int_distribution<int> k_dist(2, 3);
  std::uniform_int_distribution<int> n_dist(1, 3);
  for (int i = 0; i < 50; ++i) {
    Instance inst;
    inst.k = k_dist(rng);
    inst.n = n_dist(rng);
    Rational p1 = random_probability(rng);
    Rational p2 = random_probability(rng);
    if (p1 < p2) std::swap(p1, p2);
    inst.p_high = p1;
    inst.p_low = p2;
    // random proper non-empty subset
    std::uniform_int_distribution<int> size_dist(1, inst.k - 1);
    std::vector<int> values(inst.k);
    for (int v = 0; v < inst.k; ++v) values[v] = v;
    std::shuffle(values.begin(), values.end(), rng);
    const int subset_size = size_dist(rng);
    std::vector<int> chosen(values.begin(), values.begin() + subset_size);
    std::sort(chosen.begin(), chosen.end());
    for (int v : chosen) inst.accepted.emplace_back(v);
    instances.push_back(std::move(inst));
  }
  // pinned instance: three respondents, three choices, tallying choice 1
  instances.push_back({3, 3, Rational(3, 4), Rational(1, 2), {Label(1)}});

  bool all_refine = true;
  Json results = Json::array();
  std::string csv = "k,n,p_high,p_low,accepted,refines,pivots\n";
  for (const Instance& inst : instances) {
    const PostProcessor t = counting_query(boolean_aggregator(int_range(inst.k), inst.accepted),
                                           inst.n);
    const Channel a = Channel(
        matmul(kron_power(random_response({inst.k, inst.p_high}).matrix(), inst.n), t.matrix()));
    const Channel b = Channel(
        matmul(kron_power(random_response({inst.k, inst.p_low}).matrix(), inst.n), t.matrix()));
    const WitnessSearch search = find_witness_detail(a, b);
    const bool ok = search.witness && matmul(a.matrix(), *search.witness).same_entries(b.matrix());
    all_refine = all_refine && ok;
    std::string accepted_str;
    for (const Label& l : inst.accepted) {
      if (!accepted_str.empty()) accepted_str += "|";
      accepted_str += l.str();
    }
    results.push_back(Json{{"k", inst.k},
                           {"n", inst.n},
                           {"p_high", inst.p_high.str()},
                           {"p_low", inst.p_low.str()},
                           {"accepted", accepted_str},
                           {"refines", ok},
                           {"pivots", search.stats.pivots}});
    csv += std::to_string(inst.k) + "," + std::to_string(inst.n) + "," + inst.p_high.str() + "," +
           inst.p_low.str() + "," + accepted_str + "," + (ok ? "true" : "false") + "," +
           std::to_string(search.stats.pivots) + "\n";
  }

  ReportBundle bundle;
  bundle.files.emplace_back("instances.csv", csv);
  Json j;
  j["experiment"] = cfg.name;
  j["seed"] = cfg.seed;
  j["instances"] = instances.size();
  j["all_refine"] = all_refine;
  j["verdict"] = all_refine ? "STABLE_ON_ALL_INSTANCES" : "REFINEMENT_FAILURE";
  j["results"] = std::move(results);
  bundle.verdict = std::move(j);
  return bundle;
}

// --- custom -----------------------------------------------------------------

LossFunction loss_from_spec(const Json& spec, const std::vector<Label>& secrets) {
  const std::string kind = spec.value("kind", "bayes_risk");
  if (kind == "bayes_risk") return builtin_loss(LossKind::BayesRisk, secrets);
  if (kind == "linear_error") return builtin_loss(LossKind::LinearError, secrets);
  if (kind == "mse") return builtin_loss(LossKind::MeanSquaredError, secrets);
  if (kind == "scaled_abs") {
    return builtin_loss(LossKind::ScaledAbs, secrets,
                        Rational::parse(spec.value("scale", "1")));
  }
  if (kind == "ama") {
    return ama_loss(secrets, static_cast<int>(secrets.front().elems().size()));
  }
  if (kind == "matrix") return loss_from_json(spec.at("matrix"));
  if (kind == "csv") {
    const Matrix m = matrix_from_csv_file(spec.at("path").get<std::string>());
    std::vector<Rational> grid;
    grid.reserve(m.n_rows() * m.n_cols());
    for (size_t x = 0; x < m.n_rows(); ++x) {
      for (size_t w = 0; w < m.n_cols(); ++w) grid.push_back(m.at(x, w));
    }
    return LossFunction(m.row_labels(), m.col_labels(), std::move(grid));
  }
  throw ParseError("unknown loss kind: " + kind);
}

Prior prior_from_spec(const Json& spec, const std::vector<Label>& over) {
  const std::string kind = spec.value("kind", "uniform");
  if (kind == "uniform") return Prior::uniform(over);
  if (kind == "point") return Prior::point(over, spec.at("index").get<size_t>());
  if (kind == "explicit") return prior_from_json(spec);
  if (kind == "csv") return prior_from_csv(read_file(spec.at("path").get<std::string>()));
  throw ParseError("unknown prior kind: " + kind);
}

ReportBundle run_custom(const ExperimentConfig& cfg) {
  const Json& p = cfg.parameters;
  const MechanismSpec mech = mechanism_spec_from_json(p.at("mechanism"));
  const Json post = p.value("post", Json{{"kind", "identity"}});
  const std::string post_kind = post.value("kind", "identity");

  std::vector<Rational> grid;
  for (const auto& g : p.value("grid", Json::array())) {
    grid.push_back(Rational::parse(g.get<std::string>()));
  }

  const std::vector<Label> domain = int_range(mech.size);
  std::function<Channel(const Rational&)> pipeline;
  if (post_kind == "identity") {
    pipeline = [mech](const Rational& param) {
      return build_mechanism({mech.family, mech.size, param});
    };
  } else if (post_kind == "counting") {
    std::vector<Label> accepted;
    for (const auto& a : post.at("accepted")) accepted.push_back(Label::from_text(a.get<std::string>()));
    const int n = post.at("n").get<int>();
    const PostProcessor t = counting_query(boolean_aggregator(domain, accepted), n);
    pipeline = [mech, t, n](const Rational& param) {
      return Channel(
          matmul(kron_power(build_mechanism({mech.family, mech.size, param}).matrix(), n),
                 t.matrix()));
    };
  } else if (post_kind == "sum") {
    const int n = post.at("n").get<int>();
    const PostProcessor s = sum_query(domain, n);
    pipeline = [mech, s, n](const Rational& param) {
      return Channel(
          matmul(kron_power(build_mechanism({mech.family, mech.size, param}).matrix(), n),
                 s.matrix()));
    };
  } else if (post_kind == "argmax") {
    const int k = post.at("k").get<int>();
    const int n = post.at("n").get<int>();
    if (mech.family != MechanismSpec::Family::Geometric || mech.size != n + 1) {
      throw DomainError("argmax post needs a geometric mechanism on {0..n}");
    }
    pipeline = [k, n](const Rational& param) { return noisy_argmax_pipeline(k, n, {n + 1, param}); };
  } else if (post_kind == "known_context_count") {
    std::vector<Label> known;
    for (const auto& v : post.at("known")) known.push_back(Label::from_text(v.get<std::string>()));
    const Label target = Label::from_text(post.at("target").get<std::string>());
    pipeline = [mech, known, target, domain](const Rational& param) {
      return known_context_count(build_mechanism({mech.family, mech.size, param}), known, target,
                                 domain);
    };
  } else {
    throw ParseError("unknown post kind: " + post_kind);
  }
  auto eps_of = [mech](const Rational& param) {
    return mechanism_eps_key({mech.family, mech.size, param});
  };

  StabilityReport report;
  if (!grid.empty()) {
    const std::vector<Label> secrets = pipeline(grid.front()).row_labels();
    const LossFunction loss = loss_from_spec(p.value("loss", Json{{"kind", "bayes_risk"}}), secrets);
    const Prior pi = prior_from_spec(p.value("prior", Json{{"kind", "uniform"}}), secrets);
    report = stability_scan(grid, pipeline, eps_of, loss, pi);
  }

  ReportBundle bundle;
  bundle.files.emplace_back("report.csv", report_to_csv(report));
  bundle.files.emplace_back("plot.csv", emit_plot_data(report));
  Json j;
  j["experiment"] = cfg.name;
  j["seed"] = cfg.seed;
  j["verdict"] = verdict_name(report.verdict);
  j["report"] = report_to_json(report);
  bundle.verdict = std::move(j);
  return bundle;
}

}  // namespace

const std::string& ReportBundle::file(const std::string& name) const {
  for (const auto& [n, content] : files) {
    if (n == name) return content;
  }
  throw Error("no such report file: " + name);
}

const std::vector<std::string>& experiment_names() {
  static const std::vector<std::string> names = {
      "appendix-d",        "sum-instability", "geo-counting", "outlier-stability",
      "argmax-sweep",      "rr-counting-suite", "custom"};
  return names;
}

ReportBundle run_experiment(const ExperimentConfig& cfg) {
  ReportBundle bundle;
  if (cfg.name == "appendix-d") {
    bundle = run_appendix_d(cfg);
  } else if (cfg.name == "sum-instability") {
    bundle = run_sum_instability(cfg);
  } else if (cfg.name == "geo-counting") {
    bundle = run_geo_counting(cfg);
  } else if (cfg.name == "outlier-stability") {
    bundle = run_outlier_stability(cfg);
  } else if (cfg.name == "argmax-sweep") {
    bundle = run_argmax_sweep(cfg);
  } else if (cfg.name == "rr-counting-suite") {
    bundle = run_rr_counting_suite(cfg);
  } else if (cfg.name == "custom") {
    bundle = run_custom(cfg);
  } else {
    std::string known;
    for (const std::string& n : experiment_names()) known += (known.empty() ? "" : ", ") + n;
    throw DomainError("unknown experiment: " + cfg.name + " (known: " + known + ")");
  }
  add_json(bundle, "verdict.json", bundle.verdict);
  if (!cfg.output_dir.empty()) {
    std::filesystem::create_directories(cfg.output_dir);
    for (const auto& [name, content] : bundle.files) {
      write_file((std::filesystem::path(cfg.output_dir) / name).string(), content);
    }
  }
  return bundle;
}

IngestResult ingest_csv(const std::string& path, const std::string& column,
                        const std::map<std::string, std::int64_t>& value_map, size_t target_row) {
  const std::string text = read_file(path);
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw ParseError("empty dataset: " + path);
  if (!line.empty() && line.back() == '\r') line.pop_back();
  std::istringstream hs(line);
  std::string cell;
  std::vector<std::string> header;
  while (std::getline(hs, cell, ',')) header.push_back(cell);
  const auto col_it = std::find(header.begin(), header.end(), column);
  if (col_it == header.end()) throw ParseError("no column named '" + column + "' in " + path);
  const size_t col = static_cast<size_t>(col_it - header.begin());

  std::vector<std::int64_t> values;
  size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::vector<std::string> cells;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (cells.size() <= col) {
      throw ParseError("line " + std::to_string(line_no) + " has no '" + column + "' cell");
    }
    const auto it = value_map.find(cells[col]);
    if (it == value_map.end()) {
      throw ParseError("unmapped value '" + cells[col] + "' at line " + std::to_string(line_no));
    }
    values.push_back(it->second);
  }
  if (values.empty()) throw ParseError("dataset has no data rows: " + path);
  if (target_row >= values.size()) {
    throw DomainError("target row " + std::to_string(target_row) + " out of range (rows: " +
                      std::to_string(values.size()) + ")");
  }

  // Empirical frequencies over the map's value range, target row included.
  std::vector<std::int64_t> domain_values;
  for (const auto& [token, v] : value_map) domain_values.push_back(v);
  std::sort(domain_values.begin(), domain_values.end());
  domain_values.erase(std::unique(domain_values.begin(), domain_values.end()),
                      domain_values.end());
  std::vector<Label> over;
  std::vector<Rational> probs;
  for (std::int64_t v : domain_values) {
    over.emplace_back(v);
    const long count = static_cast<long>(std::count(values.begin(), values.end(), v));
    probs.emplace_back(count, static_cast<long>(values.size()));
  }

  IngestResult out{Prior(std::move(over), std::move(probs)), {}, Label(values[target_row])};
  for (size_t i = 0; i < values.size(); ++i) {
    if (i != target_row) out.known_values.emplace_back(values[i]);
  }
  return out;
}

std::string report_to_csv(const StabilityReport& report) {
  std::string out = "param,epsilon,utility_exact,utility_float,violation_flag\n";
  for (size_t i = 0; i < report.grid.size(); ++i) {
    const auto& pt = report.grid[i];
    out += pt.param.str() + "," + format_double(pt.epsilon_float) + "," + pt.utility.str() + "," +
           format_double(pt.utility.to_double()) + "," + (row_is_flagged(report, i) ? "1" : "0") +
           "\n";
  }
  return out;
}

std::string emit_plot_data(const StabilityReport& report) {
  std::string out = "epsilon_float,loss_float,violation_flag\n";
  for (size_t i = 0; i < report.grid.size(); ++i) {
    const auto& pt = report.grid[i];
    out += format_double(pt.epsilon_float) + "," + format_double(pt.utility.to_double()) + "," +
           (row_is_flagged(report, i) ? "1" : "0") + "\n";
  }
  return out;
}

Json report_to_json(const StabilityReport& report) {
  Json j;
  j["verdict"] = verdict_name(report.verdict);
  j["grid"] = Json::array();
  for (size_t i = 0; i < report.grid.size(); ++i) {
    const auto& pt = report.grid[i];
    j["grid"].push_back(Json{{"param", pt.param.str()},
                             {"epsilon", pt.epsilon_float},
                             {"utility_exact", pt.utility.str()},
                             {"utility_float", pt.utility.to_double()},
                             {"violation", row_is_flagged(report, i)}});
  }
  j["violations"] = Json::array();
  for (const auto& v : report.violations) {
    j["violations"].push_back(Json::array({v.lo_index, v.hi_index}));
  }
  return j;
}

}  // namespace privpipe
