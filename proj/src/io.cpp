// Copyright 2026 The qdiscrim Authors
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

#include "qdiscrim/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace qdiscrim {

namespace {

using Index = Eigen::Index;

// Runs `fn`, turning nlohmann type/range errors into ParseError.
template <class Fn>
auto guarded(const char* what, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw ParseError(std::string("expected an object with field '") + key + "'");
  const auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field '") + key + "'");
  return *it;
}

std::size_t positive_size(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer() || v.get<long long>() <= 0) {
    throw ParseError(std::string("field '") + key + "' must be a positive integer");
  }
  return v.get<std::size_t>();
}

double number(const Json& j) {
  if (!j.is_number()) throw ParseError("expected a number");
  return j.get<double>();
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_json(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

double round_significant(double x, int digits) {
  if (x == 0.0 || !std::isfinite(x)) return x;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return std::strtod(buf, nullptr);
}

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2) throw ParseError("complex numbers are [re, im] pairs");
  return {number(j[0]), number(j[1])};
}

Json matrix_to_json(const CMatrix& m) {
  Json out = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index k = 0; k < m.cols(); ++k) out.push_back(complex_to_json(m(i, k)));
  }
  return out;
}

CMatrix matrix_from_json(const Json& j, std::size_t dim) {
  if (!j.is_array()) throw ParseError("matrix must be an array");
  const Index d = static_cast<Index>(dim);
  CMatrix m(d, d);
  const bool nested = j.size() == dim && !j.empty() && j[0].is_array() && j[0].size() == dim &&
                      (dim != 2 || (j[0][0].is_array()));
  if (nested) {
    for (Index i = 0; i < d; ++i) {
      const Json& row = j[static_cast<std::size_t>(i)];
      if (!row.is_array() || row.size() != dim) throw ParseError("matrix rows must have length dim");
      for (Index k = 0; k < d; ++k) m(i, k) = complex_from_json(row[static_cast<std::size_t>(k)]);
    }
    return m;
  }
  if (j.size() != dim * dim) {
    throw ParseError("matrix must hold dim² = " + std::to_string(dim * dim) + " entries, got " +
                     std::to_string(j.size()));
  }
  for (Index i = 0; i < d; ++i) {
    for (Index k = 0; k < d; ++k) m(i, k) = complex_from_json(j[static_cast<std::size_t>(i * d + k)]);
  }
  return m;
}

Json to_json(const StateVector& v) {
  Json amps = Json::array();
  for (std::size_t i = 0; i < v.dim(); ++i) amps.push_back(complex_to_json(v[i]));
  return Json{{"dim", v.dim()}, {"amplitudes", amps}};
}

Json to_json(const PureState& s) { return to_json(s.vector()); }

PureState pure_state_from_json(const Json& j) {
  return guarded("state", [&] {
    const std::size_t d = positive_size(j, "dim");
    const Json& amps = field(j, "amplitudes");
    if (!amps.is_array() || amps.size() != d) throw ParseError("state: 'amplitudes' must hold dim entries");
    CVector v(static_cast<Index>(d));
    for (std::size_t i = 0; i < d; ++i) v(static_cast<Index>(i)) = complex_from_json(amps[i]);
    return PureState(StateVector(v));
  });
}

Json to_json(const Operator& op) { return Json{{"dim", op.dim()}, {"matrix", matrix_to_json(op.matrix())}}; }
Json to_json(const Effect& e) { return to_json(e.matrix()); }
Json to_json(const DensityOperator& rho) { return to_json(rho.matrix()); }

Operator operator_from_json(const Json& j) {
  return guarded("operator", [&] {
    const std::size_t d = positive_size(j, "dim");
    return Operator(matrix_from_json(field(j, "matrix"), d));
  });
}

DensityOperator density_from_json(const Json& j) { return DensityOperator(operator_from_json(j)); }

DensityOperator state_or_density_from_json(const Json& j) {
  if (j.is_object() && j.contains("amplitudes")) return DensityOperator::from_pure(pure_state_from_json(j));
  return density_from_json(j);
}

Json to_json(const Povm& povm) {
  Json outcomes = Json::array();
  for (const auto& o : povm.outcomes()) {
    outcomes.push_back({{"label", o.label}, {"matrix", matrix_to_json(o.effect.matrix().matrix())}});
  }
  return Json{{"dim", povm.dim()}, {"outcomes", outcomes}};
}

std::vector<PovmElement> povm_elements_from_json(const Json& j) {
  return guarded("povm", [&] {
    const std::size_t d = positive_size(j, "dim");
    const Json& outcomes = field(j, "outcomes");
    if (!outcomes.is_array()) throw ParseError("povm: 'outcomes' must be an array");
    std::vector<PovmElement> els;
    for (std::size_t k = 0; k < outcomes.size(); ++k) {
      const Json& o = outcomes[k];
      std::string label = std::to_string(k);
      if (o.is_object() && o.contains("label")) label = o.at("label").get<std::string>();
      const Json& m = o.is_object() ? field(o, "matrix") : o;
      els.push_back({label, Operator(matrix_from_json(m, d))});
    }
    return els;
  });
}

Povm povm_from_json(const Json& j) { return Povm(povm_elements_from_json(j)); }

Json to_json(const MeasurementScheme& s) {
  Json pointer = Json::array();
  for (const auto& o : s.pointer().outcomes()) {
    pointer.push_back({{"label", o.label}, {"matrix", matrix_to_json(o.effect.matrix().matrix())}});
  }
  return Json{{"object_dim", s.object_dim()},
              {"probe_dim", s.probe_dim()},
              {"probe_init", to_json(s.probe_init())},
              {"coupling", matrix_to_json(s.coupling().matrix())},
              {"pointer", pointer}};
}

MeasurementScheme scheme_from_json(const Json& j) {
  return guarded("scheme", [&] {
    const std::size_t od = positive_size(j, "object_dim");
    const std::size_t pd = positive_size(j, "probe_dim");
    PureState init = pure_state_from_json(field(j, "probe_init"));
    Operator coupling(matrix_from_json(field(j, "coupling"), od * pd));
    Json pointer_povm{{"dim", pd}, {"outcomes", field(j, "pointer")}};
    return MeasurementScheme(od, pd, std::move(init), std::move(coupling), povm_from_json(pointer_povm));
  });
}

StatePair state_pair_from_json(const Json& j) {
  return guarded("state pair", [&] {
    PureState phi = pure_state_from_json(field(j, "phi"));
    PureState psi = pure_state_from_json(field(j, "psi"));
    PriorPair priors;
    if (j.contains("priors")) {
      const Json& p = j.at("priors");
      if (!p.is_array() || p.size() != 2) throw ParseError("'priors' must be [p_phi, p_psi]");
      const double a = number(p[0]);
      const double b = number(p[1]);
      if (std::abs(a + b - 1.0) > kDefaultTolerance) throw DomainError("priors must sum to 1");
      priors = PriorPair(a);
    }
    return StatePair{std::move(phi), std::move(psi), priors};
  });
}

SignalingProtocol protocol_from_json(const Json& j) {
  return guarded("protocol", [&] {
    const Json& letters_j = field(j, "letters");
    if (!letters_j.is_array()) throw ParseError("'letters' must be an array of 3-vectors");
    std::vector<SpinDirection> letters;
    for (const auto& l : letters_j) {
      if (!l.is_array() || l.size() != 3) throw ParseError("each letter is a direction [x, y, z]");
      letters.emplace_back(number(l[0]), number(l[1]), number(l[2]));
    }
    std::vector<double> priors;
    if (j.contains("priors")) {
      for (const auto& p : j.at("priors")) priors.push_back(number(p));
    }
    if (j.contains("decision")) return SignalingProtocol(letters, povm_from_json(j.at("decision")), priors);
    return SignalingProtocol(letters, Effect(operator_from_json(field(j, "effect"))), priors);
  });
}

Json to_json(const SignalingProtocol& p) {
  Json letters = Json::array();
  for (const auto& l : p.letters()) letters.push_back(Json::array({l.x(), l.y(), l.z()}));
  return Json{{"letters", letters}, {"priors", p.priors()}, {"decision", to_json(p.decision())}};
}

Json to_json(const FrequencyVector& f) {
  Json values = Json::array();
  for (double v : f.values) values.push_back(round_significant(v));
  return Json{{"frequencies", values}, {"samples", f.samples}};
}

FrequencyVector frequencies_from_json(const Json& j) {
  return guarded("frequencies", [&] {
    FrequencyVector f;
    const Json& values = field(j, "frequencies");
    if (!values.is_array()) throw ParseError("'frequencies' must be an array");
    for (const auto& v : values) f.values.push_back(number(v));
    if (j.contains("samples")) f.samples = j.at("samples").get<std::uint64_t>();
    return f;
  });
}

Json to_json(const PovmReport& r) {
  Json effects = Json::array();
  for (std::size_t k = 0; k < r.effect_ok.size(); ++k) {
    Json e{{"ok", static_cast<bool>(r.effect_ok[k])}};
    if (k < r.min_eigenvalues.size() && std::isfinite(r.min_eigenvalues[k])) {
      e["min_eigenvalue"] = round_significant(r.min_eigenvalues[k]);
      e["max_eigenvalue"] = round_significant(r.max_eigenvalues[k]);
    }
    effects.push_back(e);
  }
  return Json{{"valid", r.valid},
              {"sharp", r.sharp},
              {"completeness_residual", r.completeness_residual},
              {"effects", effects},
              {"message", r.message}};
}

Json to_json(const MinErrorResult& r) {
  return Json{{"method", "closed-form"},
              {"p_success", round_significant(r.p_success)},
              {"overlap", round_significant(r.overlap)},
              {"effect", to_json(r.effect)}};
}

Json to_json(const UnambiguousResult& r) {
  return Json{{"method", "closed-form"},
              {"p_success", round_significant(r.p_success)},
              {"e1", round_significant(r.e1)},
              {"e2", round_significant(r.e2)},
              {"w", round_significant(r.w)},
              {"overlap", round_significant(r.overlap)},
              {"degenerate", r.degenerate},
              {"effects", to_json(r.effects)}};
}

}  // namespace qdiscrim
