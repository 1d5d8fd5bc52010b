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

#pragma once

/// @file io.hpp
/// JSON schemas shared by the CLI and by files on disk.
///
///   complex     [re, im]
///   matrix      row-major list of d² complex numbers, or d rows of d
///   state       {"dim": d, "amplitudes": [complex, ...]}
///   operator    {"dim": d, "matrix": matrix}       (effects, density operators)
///   povm        {"dim": d, "outcomes": [{"label": str, "matrix": matrix}, ...]}
///   scheme      {"object_dim", "probe_dim", "probe_init": state,
///                "coupling": matrix, "pointer": [matrix | {"label", "matrix"}, ...]}
///   state pair  {"phi": state, "psi": state, "priors": [p_phi, p_psi]?}
///   protocol    {"letters": [[x, y, z], ...], "priors": [...]?,
///                "effect": operator | "decision": povm}
///   frequencies {"frequencies": [...], "samples": n?}
///
/// Structural problems raise ParseError; well-formed input that violates a
/// mathematical invariant raises DomainError from the constructors.

#include <string>
#include <vector>

#include <json.hpp>

#include "qdiscrim/discrimination.hpp"
#include "qdiscrim/quantum.hpp"
#include "qdiscrim/scheme.hpp"
#include "qdiscrim/signaling.hpp"
#include "qdiscrim/tomography.hpp"

namespace qdiscrim {

using Json = nlohmann::ordered_json;

class ParseError : public Error {
 public:
  using Error::Error;
};

/// Parses text, mapping syntax errors to ParseError.
Json parse_json(const std::string& text);
/// Reads and parses a file; missing files and syntax errors raise ParseError.
Json read_json_file(const std::string& path);

/// Rounds to `digits` significant digits for printing probabilities.
double round_significant(double x, int digits = 9);

Json complex_to_json(Complex z);
Complex complex_from_json(const Json& j);

Json matrix_to_json(const CMatrix& m);
CMatrix matrix_from_json(const Json& j, std::size_t dim);

Json to_json(const StateVector& v);
Json to_json(const PureState& s);
PureState pure_state_from_json(const Json& j);

Json to_json(const Operator& op);
Json to_json(const Effect& e);
Json to_json(const DensityOperator& rho);
Operator operator_from_json(const Json& j);
DensityOperator density_from_json(const Json& j);
/// Accepts either a state or an operator object.
DensityOperator state_or_density_from_json(const Json& j);

Json to_json(const Povm& povm);
std::vector<PovmElement> povm_elements_from_json(const Json& j);
Povm povm_from_json(const Json& j);

Json to_json(const MeasurementScheme& s);
MeasurementScheme scheme_from_json(const Json& j);

struct StatePair {
  PureState phi;
  PureState psi;
  PriorPair priors;
};
StatePair state_pair_from_json(const Json& j);

SignalingProtocol protocol_from_json(const Json& j);
Json to_json(const SignalingProtocol& p);

Json to_json(const FrequencyVector& f);
FrequencyVector frequencies_from_json(const Json& j);

Json to_json(const PovmReport& r);
Json to_json(const MinErrorResult& r);
Json to_json(const UnambiguousResult& r);

}  // namespace qdiscrim
