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

#include "qdiscrim/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <numbers>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "qdiscrim/io.hpp"
#include "qdiscrim/parallel.hpp"
#include "qdiscrim/random.hpp"

namespace qdiscrim {

namespace {

enum class OutputFormat { Json, Csv };

struct RunConfig {
  std::string command;
  std::vector<std::string> inputs;
  std::uint64_t seed = 0;
  std::uint64_t trials = 1'000'000;
  std::uint64_t samples = 1'000'000;
  std::size_t resolution = 100;
  double tolerance = kDefaultTolerance;
  OutputFormat format = OutputFormat::Json;
  bool oracle = false;
  std::optional<std::string> out_path;
  std::optional<double> prior_phi;
  std::vector<double> phases;
  std::vector<double> direction;
};

void check_config(const RunConfig& cfg) {
  if (cfg.trials < 1) throw DomainError("--trials must be at least 1");
  if (cfg.resolution < 10) throw DomainError("--resolution must be at least 10");
  if (!(cfg.tolerance > 0.0)) throw DomainError("--tol must be positive");
}

const std::string& input(const RunConfig& cfg, std::size_t i, const char* what) {
  if (i >= cfg.inputs.size()) throw ParseError(std::string("missing input file: ") + what);
  return cfg.inputs[i];
}

Json empirical(double value, std::uint64_t n, double stderr_value) {
  return Json{{"value", round_significant(value)}, {"n", n}, {"stderr", round_significant(stderr_value)}};
}

Json probabilities_json(const std::vector<double>& values) {
  Json out = Json::array();
  for (double v : values) out.push_back(round_significant(v));
  return out;
}

Json cmd_validate(const RunConfig& cfg) {
  const Json j = read_json_file(input(cfg, 0, "povm"));
  const auto elements = povm_elements_from_json(j);
  const PovmReport report = validate_povm(elements, cfg.tolerance);
  Json out = to_json(report);
  if (report.valid) {
    const Povm povm(elements, cfg.tolerance);
    const bool ic = is_informationally_complete(povm, cfg.tolerance);
    out["informationally_complete"] = ic;
    out["frame_rank"] = frame_rank(povm, cfg.tolerance);
    out["summary"] = report.message + (ic ? ", informationally complete" : ", not IC");
  } else {
    out["summary"] = "invalid: " + report.message;
  }
  return out;
}

StatePair read_pair(const RunConfig& cfg) {
  StatePair pair = state_pair_from_json(read_json_file(input(cfg, 0, "state pair")));
  if (cfg.prior_phi) pair.priors = PriorPair(*cfg.prior_phi);
  return pair;
}

Json cmd_helstrom(const RunConfig& cfg) {
  const StatePair pair = read_pair(cfg);
  const MinErrorResult r = helstrom(pair.phi, pair.psi, pair.priors);
  Json out = to_json(r);
  out["priors"] = Json::array({pair.priors.phi(), pair.priors.psi()});
  if (cfg.oracle) {
    const CommonSpan span = rotate_to_common_span(pair.phi, pair.psi);
    const MinErrorOracle o = brute_force_min_error(span.phi, span.psi, pair.priors, cfg.resolution, threads_from_env());
    out["oracle"] = Json{{"method", "oracle"},
                         {"resolution", cfg.resolution},
                         {"p_success", round_significant(o.p_success)},
                         {"polar", o.polar},
                         {"azimuth", o.azimuth},
                         {"alpha", o.alpha},
                         {"beta", o.beta},
                         {"residual", round_significant(std::abs(r.p_success - o.p_success))}};
  }
  return out;
}

Json cmd_unambiguous(const RunConfig& cfg) {
  const StatePair pair = read_pair(cfg);
  const CommonSpan span = rotate_to_common_span(pair.phi, pair.psi);
  const UnambiguousResult r = unambiguous(span.phi, span.psi);
  Json out = to_json(r);
  if (pair.phi.dim() > 2) out["effects"] = to_json(embed_povm(span, r.effects));
  if (cfg.oracle) {
    const UnambiguousOracle o = brute_force_unambiguous(span.phi, span.psi, cfg.resolution, threads_from_env());
    out["oracle"] = Json{{"method", "oracle"},
                         {"resolution", cfg.resolution},
                         {"p_success", round_significant(o.p_success)},
                         {"e1", o.e1},
                         {"e2", o.e2},
                         {"feasible_points", o.feasible_points},
                         {"maximizers", o.maximizers},
                         {"residual", round_significant(std::abs(r.p_success - o.p_success))}};
  }
  return out;
}

SignalingProtocol read_protocol(const RunConfig& cfg) {
  if (cfg.inputs.empty()) return SignalingProtocol::default_xy();
  return protocol_from_json(read_json_file(cfg.inputs[0]));
}

std::string trials_csv(const std::vector<TrialRecord>& records) {
  std::ostringstream csv;
  csv << "trial,letter,bob_outcome,abner_decision\n";
  for (std::size_t t = 0; t < records.size(); ++t) {
    csv << t << ',' << records[t].letter << ',' << static_cast<int>(records[t].bob_outcome) << ','
        << records[t].decision << '\n';
  }
  return csv.str();
}

Json cmd_signal(const RunConfig& cfg, std::string* csv) {
  const SignalingProtocol protocol = read_protocol(cfg);
  std::vector<TrialRecord> records;
  const SignalingSummary s =
      simulate_signaling(protocol, cfg.trials, cfg.seed, threads_from_env(), csv != nullptr ? &records : nullptr);
  if (csv != nullptr) {
    *csv = trials_csv(records);
    return {};
  }

  Json out{{"protocol", to_json(protocol)}, {"seed", cfg.seed}};
  if (protocol.letter_count() == 2) {
    out["analytic_success"] = Json{{"method", "closed-form"}, {"value", round_significant(inference_success(protocol))}};
  }
  out["success_rate"] = empirical(s.success_rate, s.log.n_trials, s.standard_error);
  out["mutual_information_bits"] = Json{{"value", round_significant(s.mutual_information_bits)}, {"n", s.log.n_trials}};
  Json marginal = Json::array();
  const auto n = static_cast<double>(s.log.n_trials);
  for (double m : s.decision_marginal) marginal.push_back(empirical(m, s.log.n_trials, std::sqrt(m * (1.0 - m) / n)));
  out["decision_marginal"] = marginal;
  out["contingency"] = s.log.counts;
  return out;
}

Json cmd_correlate(const RunConfig& cfg) {
  std::vector<double> d = cfg.direction.empty() ? std::vector<double>{0.0, 0.0, 1.0} : cfg.direction;
  if (d.size() != 3) throw DomainError("--direction takes three components");
  const SpinDirection dir(d[0], d[1], d[2], cfg.tolerance);
  const JointCounts c = singlet_outcome_correlation(dir, cfg.trials, cfg.seed, threads_from_env());
  const double a = c.anticorrelation();
  return Json{{"direction", d},
              {"seed", cfg.seed},
              {"anticorrelation", empirical(a, c.n_trials, std::sqrt(a * (1.0 - a) / static_cast<double>(c.n_trials)))},
              {"counts", {{c.counts[0][0], c.counts[0][1]}, {c.counts[1][0], c.counts[1][1]}}}};
}

Json cmd_scheme(const RunConfig& cfg) {
  const MeasurementScheme scheme = scheme_from_json(read_json_file(input(cfg, 0, "scheme")));
  const PureState state = pure_state_from_json(read_json_file(input(cfg, 1, "state")));
  if (state.dim() != scheme.object_dim()) throw DimensionError("state dimension differs from the scheme's object_dim");

  const Povm induced = induced_observable(scheme);
  const auto pointer = outcome_probabilities(scheme, state);
  Json outcomes = Json::array();
  double max_residual = 0.0;
  for (std::size_t k = 0; k < induced.size(); ++k) {
    const double object = born_probability(induced.effect(k), state);
    const double residual = std::abs(pointer[k].probability - object);
    max_residual = std::max(max_residual, residual);
    outcomes.push_back(Json{{"label", pointer[k].label},
                            {"pointer_probability", round_significant(pointer[k].probability)},
                            {"object_probability", round_significant(object)},
                            {"residual", residual}});
  }
  Json trivial = Json::array();
  for (const auto& f : detect_trivial_effects(scheme, cfg.tolerance)) {
    Json t{{"label", f.label}, {"trivial", f.lambda.has_value()}};
    if (f.lambda) t["lambda"] = round_significant(*f.lambda);
    trivial.push_back(t);
  }
  return Json{{"induced_povm", to_json(induced)},
              {"povm_report", to_json(validate_povm(induced, cfg.tolerance))},
              {"outcomes", outcomes},
              {"max_residual", round_significant(max_residual)},
              {"trivial_effects", trivial}};
}

Json cmd_no_go(const RunConfig& cfg) {
  const MeasurementScheme scheme = scheme_from_json(read_json_file(input(cfg, 0, "scheme")));
  const StatePair pair = state_pair_from_json(read_json_file(input(cfg, 1, "state pair")));
  const NoGoReport r = scheme_no_go_check(scheme, pair.phi, pair.psi, cfg.tolerance);
  return Json{{"overlap_squared", round_significant(r.overlap_squared)},
              {"joint_overlap", round_significant(r.joint_overlap)},
              {"best_subset",
               {{"labels", r.best.labels},
                {"retention", round_significant(r.best.retention)},
                {"leakage", round_significant(r.best.leakage)}}},
              {"subsets_checked", r.subsets.size()},
              {"perfect_discrimination", r.perfect_discrimination},
              {"leakage_bound_holds", r.leakage_bound_holds}};
}

DensityOperator tomography_target(const RunConfig& cfg) {
  if (!cfg.inputs.empty()) return state_or_density_from_json(read_json_file(cfg.inputs[0]));
  Rng rng(cfg.seed);
  return random_density_operator(2, rng);
}

Json cmd_tomography(const RunConfig& cfg) {
  const DensityOperator truth = tomography_target(cfg);
  if (truth.dim() != 2) throw DimensionError("tomography uses the qubit tetrahedron POVM; state must be 2-dimensional");
  const Povm povm = tetrahedron_povm();
  const FrequencyVector freq = cfg.samples == 0
                                   ? predict_frequencies(povm, truth)
                                   : sample_frequencies(povm, truth, cfg.samples, cfg.seed + 1, threads_from_env());
  const Reconstruction rec = reconstruct_state(povm, freq, cfg.tolerance);
  const double distance = trace_distance(truth, rec.state);
  Json out{{"seed", cfg.seed},
           {"samples", cfg.samples},
           {"true_state", to_json(truth)},
           {"frequencies", to_json(freq)},
           {"reconstructed_state", to_json(rec.state)},
           {"repaired", rec.repaired}};
  if (cfg.samples == 0) {
    out["trace_distance"] = round_significant(distance);
  } else {
    // Trace distance of a linear-inversion estimate shrinks like n^{-1/2}.
    out["trace_distance"] =
        Json{{"value", round_significant(distance)},
             {"n", cfg.samples},
             {"stderr", round_significant(1.0 / std::sqrt(cfg.samples))}};
  }
  return out;
}

Json cmd_phase_twin(const RunConfig& cfg) {
  const PureState psi = cfg.inputs.empty() ? spin_state(SpinDirection::x_axis(), +1)
                                           : pure_state_from_json(read_json_file(cfg.inputs[0]));
  if (psi.dim() != 2) throw DimensionError("phase-twin demo compares qubit states");
  const SharpObservable a = spin_component(SpinDirection::z_axis());
  const PhaseFunction f{cfg.phases.empty() ? std::vector<double>{0.0, std::numbers::pi / 2} : cfg.phases};
  const PureState twin = phase_twin(psi, a, f);

  const Povm a_povm = a.to_povm();
  const Povm tetra = tetrahedron_povm();
  const auto stats = [](const Povm& p, const PureState& s) {
    return predict_frequencies(p, DensityOperator::from_pure(s)).values;
  };
  const auto max_diff = [](const std::vector<double>& x, const std::vector<double>& y) {
    double m = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) m = std::max(m, std::abs(x[i] - y[i]));
    return m;
  };
  const auto a_psi = stats(a_povm, psi);
  const auto a_twin = stats(a_povm, twin);
  const auto t_psi = stats(tetra, psi);
  const auto t_twin = stats(tetra, twin);
  return Json{{"observable", "s_z"},
              {"phases", f.values},
              {"state", to_json(psi)},
              {"twin", to_json(twin)},
              {"a_statistics", {{"state", probabilities_json(a_psi)}, {"twin", probabilities_json(a_twin)}}},
              {"a_max_difference", round_significant(max_diff(a_psi, a_twin))},
              {"tetrahedron_statistics", {{"state", probabilities_json(t_psi)}, {"twin", probabilities_json(t_twin)}}},
              {"tetrahedron_max_difference", round_significant(max_diff(t_psi, t_twin))}};
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (!cfg.out_path) {
    out << text;
    return;
  }
  std::ofstream file(*cfg.out_path, std::ios::binary);
  if (!file) throw ParseError("cannot write '" + *cfg.out_path + "'");
  file << text;
  if (!file) throw ParseError("write to '" + *cfg.out_path + "' failed");
}

void add_common_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--seed", cfg.seed, "RNG seed");
  sub->add_option("--trials", cfg.trials, "Monte Carlo trials");
  sub->add_option("--resolution", cfg.resolution, "oracle grid resolution (>= 10)");
  sub->add_option("--tol", cfg.tolerance, "numerical tolerance");
  sub->add_option("--format", cfg.format, "output format: json or csv")
      ->option_text("FORMAT")
      ->transform(CLI::CheckedTransformer(std::map<std::string, OutputFormat>{{"json", OutputFormat::Json},
                                                                              {"csv", OutputFormat::Csv}})
                      .description(""));
  sub->add_flag("--oracle", cfg.oracle, "also run the brute-force oracle");
  sub->add_option("--out", cfg.out_path, "write output to a file instead of stdout");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"qdiscrim: quantum measurement and state discrimination toolkit", "qdiscrim"};
  app.require_subcommand(1);

  struct Command {
    const char* name;
    const char* help;
    const char* inputs_help;
  };
  const std::vector<Command> commands{
      {"validate", "check a POVM file and report sharpness and informational completeness", "POVM file"},
      {"helstrom", "minimum-error discrimination of a state pair", "state-pair file"},
      {"unambiguous", "unambiguous discrimination of a state pair", "state-pair file"},
      {"signal", "simulate the singlet signalling protocol (default: letters x, y)", "protocol file (optional)"},
      {"correlate", "sample spin outcomes of both singlet particles along one direction", ""},
      {"scheme", "induced POVM, outcome table and trivial-effect flags of a measurement scheme",
       "scheme file, state file"},
      {"no-go", "check a scheme against perfect discrimination of a state pair", "scheme file, state-pair file"},
      {"tomography", "reconstruct a qubit state from tetrahedron POVM statistics",
       "state file (optional; random state from --seed otherwise)"},
      {"phase-twin", "compare s_z and tetrahedron statistics of a state and its phase twin",
       "state file (optional; |+,x> otherwise)"},
  };
  for (const auto& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    add_common_options(sub, cfg);
    if (*c.inputs_help != '\0') sub->add_option("inputs", cfg.inputs, c.inputs_help);
    sub->callback([&cfg, name = std::string(c.name)] { cfg.command = name; });
    const std::string name = c.name;
    if (name == "helstrom" || name == "unambiguous") {
      sub->add_option("--priors", cfg.prior_phi, "prior of phi (psi gets the rest)");
    }
    if (name == "tomography") sub->add_option("--samples", cfg.samples, "POVM draws; 0 uses exact probabilities");
    if (name == "phase-twin") sub->add_option("--phases", cfg.phases, "phase per s_z eigenvalue (+1/2, -1/2)");
    if (name == "correlate") sub->add_option("--direction", cfg.direction, "spin direction x y z")->expected(3);
  }

  std::vector<const char*> argv{"qdiscrim"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitParse;
  }

  try {
    check_config(cfg);
    const std::map<std::string, std::function<Json(const RunConfig&)>> handlers{
        {"validate", cmd_validate},   {"helstrom", cmd_helstrom},     {"unambiguous", cmd_unambiguous},
        {"correlate", cmd_correlate}, {"scheme", cmd_scheme},         {"no-go", cmd_no_go},
        {"tomography", cmd_tomography}, {"phase-twin", cmd_phase_twin},
        {"signal", [](const RunConfig& c) { return cmd_signal(c, nullptr); }},
    };
    if (cfg.format == OutputFormat::Csv) {
      if (cfg.command != "signal") throw DomainError("--format csv is only available for 'signal'");
      std::string csv;
      cmd_signal(cfg, &csv);
      emit(cfg, csv, out);
      return kExitOk;
    }
    const Json result = handlers.at(cfg.command)(cfg);
    emit(cfg, result.dump(2) + "\n", out);
    if (cfg.command == "validate" && !result.at("valid").get<bool>()) return kExitDomain;
    return kExitOk;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
}

}  // namespace qdiscrim
