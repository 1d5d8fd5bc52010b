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

#include "qdiscrim/signaling.hpp"

#include <cmath>

#include "qdiscrim/parallel.hpp"
#include "qdiscrim/random.hpp"

namespace qdiscrim {

namespace {

std::vector<double> checked_priors(std::vector<double> priors, std::size_t letters) {
  if (letters < 2) throw DomainError("SignalingProtocol: need at least two letters");
  if (priors.empty()) return std::vector<double>(letters, 1.0 / static_cast<double>(letters));
  if (priors.size() != letters) throw DomainError("SignalingProtocol: one prior per letter required");
  double sum = 0.0;
  for (double p : priors) {
    if (!(p >= 0.0)) throw DomainError("SignalingProtocol: priors must be non-negative");
    sum += p;
  }
  if (std::abs(sum - 1.0) > kDefaultTolerance) throw DomainError("SignalingProtocol: priors must sum to 1");
  return priors;
}

Povm binary_decision(const Effect& e) {
  return Povm({{"0", e.matrix()}, {"1", e.complement().matrix()}});
}

// Sampling tables shared by every block of a run.
struct SamplingTables {
  std::vector<std::array<double, 2>> bob;                   // [letter][±]
  std::vector<std::array<std::vector<double>, 2>> decision; // [letter][±][k]
};

SamplingTables build_tables(const SignalingProtocol& protocol) {
  SamplingTables t;
  for (const auto& dir : protocol.letters()) {
    std::array<double, 2> bob{};
    std::array<std::vector<double>, 2> dec;
    for (int s = 0; s < 2; ++s) {
      const auto collapsed = collapse_on_bob_outcome(dir, s == 0 ? +1 : -1);
      bob[static_cast<std::size_t>(s)] = collapsed.probability;
      for (const auto& o : protocol.decision().outcomes()) {
        dec[static_cast<std::size_t>(s)].push_back(std::max(0.0, born_probability(o.effect, collapsed.state)));
      }
    }
    t.bob.push_back(bob);
    t.decision.push_back(std::move(dec));
  }
  return t;
}

}  // namespace

SignalingProtocol::SignalingProtocol(std::vector<SpinDirection> letters, const Effect& decision,
                                     std::vector<double> priors)
    : SignalingProtocol(std::move(letters), binary_decision(decision), std::move(priors)) {}

SignalingProtocol::SignalingProtocol(std::vector<SpinDirection> letters, Povm decision, std::vector<double> priors)
    : letters_(std::move(letters)), decision_(std::move(decision)) {
  priors_ = checked_priors(std::move(priors), letters_.size());
  if (decision_.dim() != 2) throw DimensionError("SignalingProtocol: decision must act on a qubit");
  if (decision_.size() != letters_.size()) {
    throw DomainError("SignalingProtocol: decision needs one outcome per letter");
  }
}

SignalingProtocol SignalingProtocol::default_xy() {
  const Effect e(Operator::projector(spin_state(SpinDirection::x_axis(), +1).vector()));
  return SignalingProtocol({SpinDirection::x_axis(), SpinDirection::y_axis()}, e);
}

CollapsedState collapse_on_bob_outcome(const SpinDirection& direction, int sign) {
  const Operator measured =
      tensor_product(Operator::identity(2), Operator::projector(spin_state(direction, sign).vector()));
  const StateVector projected = measured * singlet().vector();
  const double p = projected.amplitudes().squaredNorm();
  const Operator reduced = partial_trace(Operator::projector(projected), Subsystem::First, {2, 2});
  return {p, DensityOperator(Complex(1.0 / p) * reduced)};
}

DensityOperator conditional_ensemble(const SpinDirection& direction) {
  Operator sum = Operator::zero(2);
  for (int sign : {+1, -1}) {
    const auto c = collapse_on_bob_outcome(direction, sign);
    sum = sum + Complex(c.probability) * c.state.matrix();
  }
  return DensityOperator(sum);
}

DensityOperator unmeasured_ensemble() {
  return DensityOperator(partial_trace(Operator::projector(singlet().vector()), Subsystem::First, {2, 2}));
}

double inference_success(const SignalingProtocol& protocol) {
  if (protocol.letter_count() != 2) {
    throw DomainError("inference_success: exact evaluation covers two-letter protocols; simulate larger ones");
  }
  const auto& pr = protocol.priors();
  return pr[0] * born_probability(protocol.decision().effect(0), conditional_ensemble(protocol.letters()[0])) +
         pr[1] * born_probability(protocol.decision().effect(1), conditional_ensemble(protocol.letters()[1]));
}

double mutual_information_bits(const std::vector<std::vector<std::uint64_t>>& counts) {
  double n = 0.0;
  std::vector<double> rows(counts.size(), 0.0);
  std::vector<double> cols;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (cols.size() < counts[i].size()) cols.resize(counts[i].size(), 0.0);
    for (std::size_t j = 0; j < counts[i].size(); ++j) {
      const auto c = static_cast<double>(counts[i][j]);
      rows[i] += c;
      cols[j] += c;
      n += c;
    }
  }
  if (n == 0.0) return 0.0;
  double mi = 0.0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    for (std::size_t j = 0; j < counts[i].size(); ++j) {
      const auto c = static_cast<double>(counts[i][j]);
      if (c > 0.0) mi += (c / n) * std::log2(c * n / (rows[i] * cols[j]));
    }
  }
  return std::max(0.0, mi);
}

SignalingSummary simulate_signaling(const SignalingProtocol& protocol, std::uint64_t n_trials, std::uint64_t seed,
                                    std::size_t threads, std::vector<TrialRecord>* records) {
  if (n_trials == 0) throw DomainError("simulate_signaling: need at least one trial");
  const SamplingTables tables = build_tables(protocol);
  const std::size_t letters = protocol.letter_count();
  const std::size_t decisions = protocol.decision().size();
  const std::size_t n_blocks = static_cast<std::size_t>((n_trials + kTrialBlock - 1) / kTrialBlock);

  if (records != nullptr) records->assign(static_cast<std::size_t>(n_trials), TrialRecord{});

  using Table = std::vector<std::vector<std::uint64_t>>;
  std::vector<Table> block_counts(n_blocks, Table(letters, std::vector<std::uint64_t>(decisions, 0)));

  parallel_for(n_blocks, threads, [&](std::size_t block) {
    Rng rng = Rng::stream(seed, block);
    const std::uint64_t begin = static_cast<std::uint64_t>(block) * kTrialBlock;
    const std::uint64_t end = std::min<std::uint64_t>(n_trials, begin + kTrialBlock);
    Table& counts = block_counts[block];
    for (std::uint64_t t = begin; t < end; ++t) {
      const std::size_t letter = rng.categorical(protocol.priors());
      const std::size_t bob = rng.categorical(tables.bob[letter]);
      const std::size_t decision = rng.categorical(tables.decision[letter][bob]);
      ++counts[letter][decision];
      if (records != nullptr) {
        (*records)[static_cast<std::size_t>(t)] = {static_cast<std::uint32_t>(letter),
                                                   static_cast<std::int8_t>(bob == 0 ? 1 : -1),
                                                   static_cast<std::uint32_t>(decision)};
      }
    }
  });

  SignalingSummary s;
  s.log = {seed, n_trials, Table(letters, std::vector<std::uint64_t>(decisions, 0))};
  for (const auto& block : block_counts) {
    for (std::size_t i = 0; i < letters; ++i) {
      for (std::size_t j = 0; j < decisions; ++j) s.log.counts[i][j] += block[i][j];
    }
  }

  std::uint64_t correct = 0;
  s.decision_marginal.assign(decisions, 0.0);
  for (std::size_t i = 0; i < letters; ++i) {
    correct += s.log.counts[i][i];
    for (std::size_t j = 0; j < decisions; ++j) s.decision_marginal[j] += static_cast<double>(s.log.counts[i][j]);
  }
  const auto n = static_cast<double>(n_trials);
  for (double& m : s.decision_marginal) m /= n;
  s.success_rate = static_cast<double>(correct) / n;
  s.standard_error = std::sqrt(s.success_rate * (1.0 - s.success_rate) / n);
  s.mutual_information_bits = mutual_information_bits(s.log.counts);
  return s;
}

double JointCounts::anticorrelation() const {
  return n_trials == 0 ? 0.0 : static_cast<double>(counts[0][1] + counts[1][0]) / static_cast<double>(n_trials);
}

JointCounts singlet_outcome_correlation(const SpinDirection& direction, std::uint64_t n_trials, std::uint64_t seed,
                                        std::size_t threads) {
  const StateVector psi = singlet().vector();
  const std::array<Operator, 2> proj{Operator::projector(spin_state(direction, +1).vector()),
                                     Operator::projector(spin_state(direction, -1).vector())};
  const Operator id = Operator::identity(2);

  // Abner's marginal, then Bob's outcome conditioned on Abner's.
  std::array<double, 2> abner{};
  std::array<std::array<double, 2>, 2> bob_given{};
  for (std::size_t a = 0; a < 2; ++a) {
    abner[a] = (tensor_product(proj[a], id) * psi).amplitudes().squaredNorm();
    for (std::size_t b = 0; b < 2; ++b) {
      bob_given[a][b] = (tensor_product(proj[a], proj[b]) * psi).amplitudes().squaredNorm() / abner[a];
    }
  }

  const std::size_t n_blocks = static_cast<std::size_t>((n_trials + kTrialBlock - 1) / kTrialBlock);
  std::vector<std::array<std::array<std::uint64_t, 2>, 2>> block_counts(n_blocks);
  parallel_for(n_blocks, threads, [&](std::size_t block) {
    Rng rng = Rng::stream(seed, block);
    const std::uint64_t begin = static_cast<std::uint64_t>(block) * kTrialBlock;
    const std::uint64_t end = std::min<std::uint64_t>(n_trials, begin + kTrialBlock);
    auto& counts = block_counts[block];
    counts = {};
    for (std::uint64_t t = begin; t < end; ++t) {
      const std::size_t a = rng.categorical(abner);
      const std::size_t b = rng.categorical(bob_given[a]);
      ++counts[a][b];
    }
  });

  JointCounts out{n_trials, {}};
  for (const auto& c : block_counts) {
    for (std::size_t a = 0; a < 2; ++a) {
      for (std::size_t b = 0; b < 2; ++b) out.counts[a][b] += c[a][b];
    }
  }
  return out;
}

}  // namespace qdiscrim
