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

/// @file signaling.hpp
/// Attempted signaling through a shared singlet.
///
/// Bob encodes a letter by choosing which spin component of his particle to
/// measure. Abner applies a decision POVM to his particle and guesses the
/// letter. Particle order in the singlet is (Abner, Bob).

#include <array>
#include <cstdint>
#include <vector>

#include "qdiscrim/quantum.hpp"

namespace qdiscrim {

class SignalingProtocol {
 public:
  /// Two letters decided by a single effect: E means letter 0, I − E letter 1.
  SignalingProtocol(std::vector<SpinDirection> letters, const Effect& decision, std::vector<double> priors = {});
  /// N letters with one decision outcome per letter, in letter order.
  SignalingProtocol(std::vector<SpinDirection> letters, Povm decision, std::vector<double> priors = {});

  /// Letters x and y decided by |+,x⟩⟨+,x|.
  static SignalingProtocol default_xy();

  std::size_t letter_count() const { return letters_.size(); }
  const std::vector<SpinDirection>& letters() const { return letters_; }
  const std::vector<double>& priors() const { return priors_; }
  const Povm& decision() const { return decision_; }

 private:
  std::vector<SpinDirection> letters_;
  Povm decision_;
  std::vector<double> priors_;
};

/// Abner's state after Bob measured along `direction` and obtained `sign`
/// (±1), via the Lüders rule on the singlet, with the outcome probability.
struct CollapsedState {
  double probability;
  DensityOperator state;
};
CollapsedState collapse_on_bob_outcome(const SpinDirection& direction, int sign);

/// Σ_± p_± ρ_±: what Abner holds when Bob measured along `direction`.
DensityOperator conditional_ensemble(const SpinDirection& direction);

/// Abner's reduced state when Bob does not measure.
DensityOperator unmeasured_ensemble();

/// Exact probability that Abner's guess is right, two-letter protocols
/// only: p₀Tr[E ρ₀] + p₁Tr[(I − E) ρ₁].
double inference_success(const SignalingProtocol& protocol);

/// letter × decision contingency table of a simulated run.
struct TrialLog {
  std::uint64_t seed;
  std::uint64_t n_trials;
  std::vector<std::vector<std::uint64_t>> counts;
};

struct TrialRecord {
  std::uint32_t letter;
  std::int8_t bob_outcome;  ///< +1 or −1
  std::uint32_t decision;
};

struct SignalingSummary {
  TrialLog log;
  double success_rate;
  double standard_error;
  double mutual_information_bits;  ///< plug-in estimate of I(letter; decision)
  std::vector<double> decision_marginal;
};

/// Monte Carlo run: per trial draw the letter, Bob's outcome by the Born
/// rule on the singlet, and Abner's decision by the Born rule on the
/// collapsed state. Trials are generated in fixed blocks with per-block
/// streams, so the result is independent of `threads`. When `records` is
/// non-null it receives every trial in order.
SignalingSummary simulate_signaling(const SignalingProtocol& protocol, std::uint64_t n_trials, std::uint64_t seed,
                                    std::size_t threads = 1, std::vector<TrialRecord>* records = nullptr);

/// Plug-in mutual information of a contingency table, in bits.
double mutual_information_bits(const std::vector<std::vector<std::uint64_t>>& counts);

/// Both particles measured along the same axis; counts[a][b] with index 0
/// for outcome + and 1 for −, a for Abner and b for Bob.
struct JointCounts {
  std::uint64_t n_trials;
  std::array<std::array<std::uint64_t, 2>, 2> counts;
  double anticorrelation() const;
};

JointCounts singlet_outcome_correlation(const SpinDirection& direction, std::uint64_t n_trials,
                                        std::uint64_t seed, std::size_t threads = 1);

}  // namespace qdiscrim
