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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "privpipe/experiments.hpp"
#include "privpipe/io.hpp"
#include "privpipe/refinement.hpp"

namespace py = pybind11;

namespace {

using privpipe::Json;

// Matrices cross the boundary as dicts of exact fraction strings.
py::object json_to_py(const Json& j) {
  switch (j.type()) {
    case Json::value_t::null:
      return py::none();
    case Json::value_t::boolean:
      return py::bool_(j.get<bool>());
    case Json::value_t::number_integer:
      return py::int_(j.get<std::int64_t>());
    case Json::value_t::number_unsigned:
      return py::int_(j.get<std::uint64_t>());
    case Json::value_t::number_float:
      return py::float_(j.get<double>());
    case Json::value_t::string:
      return py::str(j.get<std::string>());
    case Json::value_t::array: {
      py::list out;
      for (const auto& v : j) out.append(json_to_py(v));
      return out;
    }
    case Json::value_t::object: {
      py::dict out;
      for (const auto& [k, v] : j.items()) out[py::str(k)] = json_to_py(v);
      return out;
    }
    default:
      throw privpipe::Error("unsupported JSON value");
  }
}

Json py_to_json(const py::handle& obj) {
  if (obj.is_none()) return nullptr;
  if (py::isinstance<py::bool_>(obj)) return obj.cast<bool>();
  if (py::isinstance<py::int_>(obj)) return obj.cast<std::int64_t>();
  if (py::isinstance<py::float_>(obj)) return obj.cast<double>();
  if (py::isinstance<py::str>(obj)) return obj.cast<std::string>();
  if (py::isinstance<py::list>(obj) || py::isinstance<py::tuple>(obj)) {
    Json out = Json::array();
    for (const auto& v : obj) out.push_back(py_to_json(v));
    return out;
  }
  if (py::isinstance<py::dict>(obj)) {
    Json out = Json::object();
    for (const auto& [k, v] : obj.cast<py::dict>()) {
      out[k.cast<std::string>()] = py_to_json(v);
    }
    return out;
  }
  throw privpipe::Error("unsupported python value in spec");
}

privpipe::Matrix matrix_from_py(const py::dict& d) {
  return privpipe::matrix_from_json(py_to_json(d));
}

py::dict matrix_to_py(const privpipe::Matrix& m) {
  return json_to_py(privpipe::matrix_to_json(m)).cast<py::dict>();
}

std::vector<privpipe::Label> labels_from_py(const py::list& labels) {
  std::vector<privpipe::Label> out;
  for (const auto& l : labels) {
    if (py::isinstance<py::int_>(l)) {
      out.emplace_back(l.cast<std::int64_t>());
    } else {
      out.emplace_back(l.cast<std::string>());
    }
  }
  return out;
}

privpipe::MechanismSpec spec_from_py(const std::string& family, int size,
                                     const std::string& param) {
  privpipe::MechanismSpec spec;
  if (family == "rr") {
    spec.family = privpipe::MechanismSpec::Family::RandomResponse;
  } else if (family == "geometric") {
    spec.family = privpipe::MechanismSpec::Family::Geometric;
  } else {
    throw privpipe::DomainError("family must be 'rr' or 'geometric'");
  }
  spec.size = size;
  spec.param = privpipe::Rational::parse(param);
  return spec;
}

}  // namespace

PYBIND11_MODULE(_privpipe, m) {
  m.doc() = "Exact-rational privacy/utility pipeline analysis";

  py::register_exception<privpipe::Error>(m, "PrivpipeError");

  m.def(
      "mech_build",
      [](const std::string& family, int size, const std::string& param) {
        return matrix_to_py(privpipe::build_mechanism(spec_from_py(family, size, param)).matrix());
      },
      py::arg("family"), py::arg("size"), py::arg("param"));

  m.def("mech_epsilon", [](const std::string& family, int size, const std::string& param) {
    return privpipe::mechanism_eps_key(spec_from_py(family, size, param)).eps_float();
  });

  m.def("kronecker", [](const py::dict& a, const py::dict& b) {
    return matrix_to_py(privpipe::kronecker(matrix_from_py(a), matrix_from_py(b)));
  });
  m.def("kron_power", [](const py::dict& a, int n) {
    return matrix_to_py(privpipe::kron_power(matrix_from_py(a), n));
  });
  m.def("matmul", [](const py::dict& a, const py::dict& b) {
    return matrix_to_py(privpipe::matmul(matrix_from_py(a), matrix_from_py(b)));
  });
  m.def("invert", [](const py::dict& a) { return matrix_to_py(privpipe::invert(matrix_from_py(a))); });
  m.def("left_inverse",
        [](const py::dict& a) { return matrix_to_py(privpipe::left_inverse(matrix_from_py(a))); });
  m.def("is_stochastic", [](const py::dict& a) { return privpipe::is_stochastic(matrix_from_py(a)); });
  m.def("is_deterministic",
        [](const py::dict& a) { return privpipe::is_deterministic(matrix_from_py(a)); });

  m.def(
      "realized_epsilon",
      [](const py::dict& c, const std::string& kind) {
        privpipe::Adjacency adj = privpipe::Adjacency::all_pairs();
        if (kind == "euclidean") {
          adj = privpipe::Adjacency::euclidean();
        } else if (kind == "manhattan") {
          adj = privpipe::Adjacency::manhattan();
        } else if (kind != "all_pairs") {
          throw privpipe::DomainError("adjacency must be all_pairs, euclidean or manhattan");
        }
        const privpipe::MaxRatio r =
            privpipe::realized_epsilon(privpipe::Channel(matrix_from_py(c)), adj);
        py::dict out;
        out["unbounded"] = r.unbounded;
        out["epsilon"] = r.epsilon();
        if (!r.unbounded && kind == "all_pairs") out["ratio"] = r.ratio().str();
        return out;
      },
      py::arg("channel"), py::arg("adjacency") = "all_pairs");

  m.def("geometric_witness", [](int n, const std::string& from_alpha, const std::string& to_alpha) {
    return matrix_to_py(privpipe::geometric_witness(
        {n, privpipe::Rational::parse(from_alpha)}, {n, privpipe::Rational::parse(to_alpha)}));
  });
  m.def("rr_witness", [](int k, const std::string& from_p, const std::string& to_p) {
    return matrix_to_py(privpipe::rr_witness({k, privpipe::Rational::parse(from_p)},
                                             {k, privpipe::Rational::parse(to_p)})
                            .matrix());
  });

  m.def(
      "posterior_uncertainty",
      [](const py::dict& loss, const py::dict& prior, const py::dict& channel) {
        return privpipe::posterior_uncertainty(privpipe::loss_from_json(py_to_json(loss)),
                                               privpipe::prior_from_json(py_to_json(prior)),
                                               privpipe::Channel(matrix_from_py(channel)))
            .str();
      },
      py::arg("loss"), py::arg("prior"), py::arg("channel"));

  m.def("builtin_loss", [](const std::string& kind, const py::list& domain, const std::string& scale) {
    privpipe::LossKind k;
    if (kind == "bayes_risk") {
      k = privpipe::LossKind::BayesRisk;
    } else if (kind == "linear_error") {
      k = privpipe::LossKind::LinearError;
    } else if (kind == "mse") {
      k = privpipe::LossKind::MeanSquaredError;
    } else if (kind == "scaled_abs") {
      k = privpipe::LossKind::ScaledAbs;
    } else {
      throw privpipe::DomainError("unknown loss kind: " + kind);
    }
    return json_to_py(privpipe::loss_to_json(
        privpipe::builtin_loss(k, labels_from_py(domain), privpipe::Rational::parse(scale))));
  }, py::arg("kind"), py::arg("domain"), py::arg("scale") = "1");

  m.def("uniform_prior", [](const py::list& labels) {
    return json_to_py(privpipe::prior_to_json(privpipe::Prior::uniform(labels_from_py(labels))));
  });

  m.def(
      "check_refinement",
      [](const py::dict& a, const py::dict& b, unsigned seed) {
        return json_to_py(privpipe::verdict_to_json(privpipe::check_refinement(
            privpipe::Channel(matrix_from_py(a)), privpipe::Channel(matrix_from_py(b)), seed)));
      },
      py::arg("a"), py::arg("b"), py::arg("seed") = 0);

  m.def("structural_stability_check", [](const py::dict& w, const py::dict& p) {
    return privpipe::structural_stability_check(matrix_from_py(w),
                                                privpipe::PostProcessor(matrix_from_py(p)));
  });
  m.def("instability_precheck", [](const py::dict& g, const py::dict& g2, const py::dict& p) {
    const auto v = privpipe::instability_precheck(privpipe::Channel(matrix_from_py(g)),
                                                  privpipe::Channel(matrix_from_py(g2)),
                                                  privpipe::PostProcessor(matrix_from_py(p)));
    return std::string(v == privpipe::PrecheckVerdict::Unstable ? "UNSTABLE" : "INCONCLUSIVE");
  });

  m.def("boolean_aggregator", [](const py::list& domain, const py::list& accepted) {
    return matrix_to_py(
        privpipe::boolean_aggregator(labels_from_py(domain), labels_from_py(accepted)).matrix());
  });
  m.def("tally", [](int n) { return matrix_to_py(privpipe::tally(n).matrix()); });
  m.def("counting_query", [](const py::dict& b, int n) {
    return matrix_to_py(privpipe::counting_query(privpipe::PostProcessor(matrix_from_py(b)), n).matrix());
  });
  m.def("sum_query", [](const py::list& domain, int n) {
    return matrix_to_py(privpipe::sum_query(labels_from_py(domain), n).matrix());
  });
  m.def("argmax_post", [](int k, int n) { return matrix_to_py(privpipe::argmax_post(k, n).matrix()); });
  m.def("known_context_count",
        [](const py::dict& g, const py::list& known, std::int64_t target, const py::list& domain) {
          return matrix_to_py(privpipe::known_context_count(
                                  privpipe::Channel(matrix_from_py(g)), labels_from_py(known),
                                  privpipe::Label(target), labels_from_py(domain))
                                  .matrix());
        });
  m.def("noisy_argmax_pipeline", [](int k, int n, const std::string& alpha) {
    return matrix_to_py(
        privpipe::noisy_argmax_pipeline(k, n, {n + 1, privpipe::Rational::parse(alpha)}).matrix());
  });

  m.def(
      "run_experiment",
      [](const std::string& name, const py::object& parameters, const std::string& out_dir,
         unsigned seed) {
        privpipe::ExperimentConfig cfg;
        cfg.name = name;
        cfg.parameters = parameters.is_none() ? Json::object() : py_to_json(parameters);
        cfg.output_dir = out_dir;
        cfg.seed = seed;
        return json_to_py(privpipe::run_experiment(cfg).verdict);
      },
      py::arg("name"), py::arg("parameters") = py::none(), py::arg("out_dir") = "",
      py::arg("seed") = 0);

  m.def("matrix_to_csv", [](const py::dict& m) { return privpipe::matrix_to_csv(matrix_from_py(m)); });
  m.def("matrix_from_csv",
        [](const std::string& text) { return matrix_to_py(privpipe::matrix_from_csv(text)); });
}
