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
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qcc/circuit.hpp"
#include "qcc/encoding.hpp"
#include "qcc/fermion.hpp"
#include "qcc/optimizer.hpp"
#include "qcc/pauli.hpp"
#include "qcc/rng.hpp"
#include "qcc/simulator.hpp"

namespace qcc {

enum class AnsatzFamily { kUccsd, kHardwareEfficient, kHamiltonianVariational, kLdca };

std::string_view to_string(AnsatzFamily f);
AnsatzFamily parse_ansatz(std::string_view name);

/// Parametrised circuit U(theta) applied after a parameter-free reference
/// preparation.
struct Ansatz {
  AnsatzFamily family = AnsatzFamily::kUccsd;
  Circuit reference;
  Circuit circuit;
  std::vector<std::string> labels;  // one per parameter

  int n_qubits() const { return std::max(reference.n_qubits(), circuit.n_qubits()); }
  int n_params() const { return circuit.n_params(); }
  /// Reference followed by the variational part.
  Circuit full_circuit() const;
  StateVector prepare(std::span<const double> theta) const;
};

/// X gates writing `bits` on n qubits.
Circuit basis_state_circuit(int n_qubits, std::uint64_t bits);

/// exp(theta_k G_k) for each anti-Hermitian generator, split into one Pauli
/// exponential per encoded string (canonical order), repeated `trotter_steps`
/// times with theta / steps each. The reference writes the encoded HF state.
Ansatz build_uccsd(const std::vector<FermionSum>& generators, const EncodingScheme& scheme,
                   int trotter_steps, std::uint64_t hf_occupation);
Ansatz build_uccsd(const std::vector<UccGenerator>& generators, const EncodingScheme& scheme,
                   int trotter_steps, std::uint64_t hf_occupation);

enum class Entangler { kCnotChain, kCzChain };

/// Ry/Rz on every qubit, then `layers` times (entangler ladder, Ry/Rz layer).
/// UCC ansatz from already-encoded anti-Hermitian generators, e.g. after
/// tapering. Each generator gets one parameter.
Ansatz build_uccsd_encoded(const std::vector<PauliSum>& generators,
                           const std::vector<std::string>& labels, int n_qubits,
                           std::uint64_t reference_bits, int trotter_steps);

Ansatz build_hardware_efficient(int n_qubits, int layers, Entangler entangler = Entangler::kCnotChain);

/// Qubit images of the diagonal, hopping and exchange groups.
struct HvaPartition {
  PauliSum diagonal;
  PauliSum hopping;
  PauliSum exchange;
};

HvaPartition encode_partition(const FermionSum& h, const EncodingScheme& scheme);

/// Per step: U_ex(t_ex/2) U_h(t_h/2) U_d(t_d) U_h(t_h/2) U_ex(t_ex/2) with
/// U_i(t) = exp(i t H_i) split per string. When `full` is given the three
/// groups must add up to it (identity terms aside).
Ansatz build_hamiltonian_variational(const HvaPartition& parts, int steps, const Circuit& reference,
                                     const PauliSum* full = nullptr);

/// Rz layer, then per cycle the five paired rotations on even then odd
/// neighbour pairs.
Ansatz build_ldca(int n_qubits, int cycles);

/// Zeros for UCCSD; uniform in [-0.01, 0.01] otherwise. A real reference
/// state is a stationary point of the Hamiltonian variational ansatz, so it
/// gets the random start as well.
std::vector<double> initial_parameters(const Ansatz& a, Rng& rng);

struct EstimateOptions {
  enum class Mode { kExact, kShots };
  Mode mode = Mode::kExact;
  std::uint64_t shots_per_term = 10000;
  std::optional<NoiseModel> noise;
  int trajectories = 1000;  // with noise
};

/// Energy of the prepared state. Exact mode returns std_error 0; shot mode
/// samples each term; noise averages over independent trajectories (each
/// drawn from rng.split(k)).
ShotEstimate estimate_energy(const Ansatz& a, std::span<const double> theta, const PauliSum& h,
                             const EstimateOptions& opts, Rng& rng);
ShotEstimate estimate_energy(const Ansatz& a, std::span<const double> theta, const PauliSum& h);

/// dE/dtheta on the statevector. Every parametrised gate must be a Pauli
/// rotation; each contributes -2 k m Im<lambda|P|psi> at its position, the
/// commutator form of the parameter-shift derivative.
std::vector<double> analytic_gradient(const Ansatz& a, std::span<const double> theta,
                                      const PauliSum& h);
/// Same for an arbitrary Hermitian observable given by its action.
std::vector<double> analytic_gradient(const Ansatz& a, std::span<const double> theta,
                                      const std::function<CVector(const CVector&)>& observable);

struct PenaltyTerm {
  PauliSum q;
  double target = 0.0;
  double beta = 1.0;
};

/// h + sum_j beta_j (Q_j - q_j I)^2
PauliSum penalty_hamiltonian(const PauliSum& h, const std::vector<PenaltyTerm>& constraints);

struct VqeResult {
  std::vector<double> best_params;
  double best_energy = 0.0;     // min over the trace
  std::vector<double> final_params;
  ShotEstimate final_estimate;  // re-estimate at final_params
  std::vector<TraceEntry> trace;
  std::uint64_t shots_used = 0;
  int evals = 0;
  bool converged = false;
};

struct VqeOptions {
  OptimizerConfig optimizer;
  EstimateOptions estimate;
  int final_repeats = 16;  // independent estimates averaged at the end (stochastic modes)
  std::optional<std::vector<double>> initial;
};

VqeResult optimize(const Ansatz& a, const PauliSum& h, const VqeOptions& opts);

}  // namespace qcc
