/* Copyright 2026 The iontc Authors.
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at
    http://www.apache.org/licenses/LICENSE-2.0
Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef IONTC_OPTIMIZER_HPP
#define IONTC_OPTIMIZER_HPP

#include <cstdint>
#include <random>
#include <variant>

#include "iontc/objective.hpp"

namespace iontc {

struct OptimizerConfig {
  double gamma = 0.6;        // penalty exponent, in (0,1)
  double alpha = 5e-3;       // penalty weight
  double t_init = 0.0;       // initial effective temperature
  double cool_factor = 0.95; // T_eff multiplier per sweep, in (0,1)
  double fixed_step = 0.1;   // step when the local profile is not concave
  double prune_eps = 1e-3;   // pulses shorter than this are dropped
  int insert_period = 25;    // sweeps between insertion attempts
  int max_sweeps = 1000;
  double target_fidelity = 1.0 - 1e-9;  // on Phi_norm (Phi_qec / 4 for QEC)
  std::uint64_t seed = 0;

  void validate() const;
};

struct TracePoint {
  int sweep;
  double value;    // unpenalized Phi
  double penalty;  // Phi_p
};

enum class Termination { TargetReached, MaxSweeps };

struct OptimizationReport {
  PulseSequence best_sequence;
  double best_value = 0.0;  // value(spec, best_sequence), recomputed
  std::vector<TracePoint> trace;
  int pulse_count = 0;
  int sweeps_used = 0;
  Termination terminated_by = Termination::MaxSweeps;
};

/// One curvature-adaptive annealed coordinate step for pulse m (0-based):
/// at a concave point jump to the parabola vertex plus a normal draw of
/// variance t_eff / (2|h|), otherwise take a fixed step uphill. Returns
/// the updated angle; the sequence is not modified.
double coordinate_update(const ObjectiveSpec& spec, const PulseSequence& seq,
                         std::size_t m, const OptimizerConfig& config,
                         std::mt19937_64& rng, double t_eff);

/// One pass of coordinate updates over all pulses in order, reusing the
/// forward/backward propagator products so the pass costs O(M) matrix
/// products. Cools t_eff by cool_factor afterwards. Returns the penalized
/// objective of the updated sequence.
double sweep(const ObjectiveSpec& spec, PulseSequence& seq,
             const OptimizerConfig& config, std::mt19937_64& rng,
             double& t_eff);

/// Propose one random new pulse, settle it with a zero-temperature sweep,
/// keep the proposal only if the penalized objective improved.
PulseSequence try_insert(const ObjectiveSpec& spec, const PulseSequence& seq,
                         const OptimizerConfig& config, std::mt19937_64& rng);

struct RandomInit {
  int n_pulses;
};

using Init = std::variant<RandomInit, PulseSequence>;

OptimizationReport optimize(const ObjectiveSpec& spec, const Init& init,
                            const OptimizerConfig& config);

/// Uniform random pulse sequence used for cold starts.
PulseSequence random_sequence(int n_pulses, int n_qubits,
                              std::mt19937_64& rng);

}  // namespace iontc

#endif  // IONTC_OPTIMIZER_HPP
