// Copyright 2026 The qcc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "qcc/circuit.hpp"
#include "qcc/fermion.hpp"
#include "qcc/pauli.hpp"
#include "qcc/rng.hpp"
#include "qcc/simulator.hpp"
#include "qcc/vqe.hpp"

namespace qcc {

/// Estimates at noise scales lambda_1 = 1 < lambda_2 < ...
struct NoiseScaledSeries {
  std::vector<std::pair<double, ShotEstimate>> points;

  void validate() const;
};

/// Energies of one ansatz at each noise scale (insertion probabilities times
/// lambda), `trajectories` each.
NoiseScaledSeries zne_series(const Ansatz& a, std::span<const double> theta, const PauliSum& h,
                             const NoiseModel& noise, const std::vector<double>& lambdas,
                             int trajectories, Rng& rng);

/// Least-squares line through (lambda, mean), evaluated at lambda = 0. With
/// two points this is (l O(1) - O(l)) / (l - 1).
ShotEstimate extrapolate_linear(const NoiseScaledSeries& s);

/// Fit (O - offset) = A exp(-b lambda) by least squares on log|O - offset|;
/// returns A + offset. All shifted means must share one sign.
ShotEstimate extrapolate_exponential(const NoiseScaledSeries& s, double offset = 0.0);

/// Pauli string on the gate's local qubits (bit k is the gate's k-th
/// target), drawn with `probability`, sign `parity`.
struct QuasiProbEntry {
  PauliString pauli;
  double probability = 0.0;
  int parity = 1;
};

struct QuasiProbDecomposition {
  int arity = 1;
  double gamma = 1.0;
  std::vector<QuasiProbEntry> entries;

  /// gamma * parity * probability for each entry: the signed coefficients of
  /// the realised map sum_P c_P P rho P.
  std::vector<double> coefficients() const;
};

/// Inverse of the depolarising channel rho -> (1 - p) rho + p I / 2 on one
/// qubit (arity 1) or of its two-qubit product (arity 2).
QuasiProbDecomposition pec_decompose_depolarizing(double p, int arity);

/// Quasi-probability inverse of a general Pauli channel rho -> sum_P q_P P rho P
/// given q over all 4^arity strings (index k: letter of qubit j is (k >> 2j) & 3).
QuasiProbDecomposition pec_decompose_pauli_channel(const std::vector<double>& q, int arity);

struct PecOptions {
  int samples = 10000;
  std::uint64_t shots_per_sample = 0;  // 0 means exact expectation per sample
};

struct PecResult {
  ShotEstimate mitigated;
  ShotEstimate raw;  // same trajectories without the quasi-probability insertions
  double gamma_total = 1.0;
  double sample_variance = 0.0;      // of gamma_total * parity * value
  double raw_sample_variance = 0.0;  // of the unmitigated values
};

/// After every native gate: the gate, the stochastic noise, then one draw from
/// the decomposition for the gate's arity, accumulating parities.
PecResult pec_estimate(const Circuit& c, std::span<const double> theta, const PauliSum& observable,
                       const NoiseModel& noise, const QuasiProbDecomposition& one_qubit,
                       const QuasiProbDecomposition& two_qubit, const PecOptions& opts, Rng& rng);

enum class ParityKind { kTotalNumber, kSpinUp, kSpinDown };

struct StabiliserCheck {
  std::vector<int> parity_qubits;
  int expected = 0;
  ParityKind kind = ParityKind::kTotalNumber;
};

/// Number and spin parity checks for a Jordan-Wigner register.
std::vector<StabiliserCheck> jordan_wigner_parity_checks(int n_modes, int n_electrons, int n_up,
                                                         SpinOrdering ordering,
                                                         bool include_spin_down = false);

struct PostselectOptions {
  int shots = 10000;
  /// Applied to the system after the circuit and before the checks.
  std::optional<PauliString> inject;
};

struct PostselectResult {
  ShotEstimate mitigated;
  ShotEstimate raw;
  double retained_fraction = 0.0;
};

/// Each shot runs the noisy circuit, fans each check's parity onto its own
/// ancilla with CNOTs (also noisy), measures the ancillas and keeps the shot
/// only if every outcome matches. The energy of a kept shot is the exact
/// expectation in its post-measurement system state.
PostselectResult stabiliser_postselect(const Circuit& c, std::span<const double> theta,
                                       const PauliSum& h, const std::vector<StabiliserCheck>& checks,
                                       const NoiseModel& noise, const PostselectOptions& opts,
                                       Rng& rng);

}  // namespace qcc
