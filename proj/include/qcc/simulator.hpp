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
#include <span>
#include <vector>

#include "qcc/circuit.hpp"
#include "qcc/pauli.hpp"
#include "qcc/rng.hpp"
#include "qcc/statevector.hpp"

namespace qcc {

/// exp(-i t h) as a first-order product over the canonical term order with
/// dt = t / steps. The identity term contributes its global phase.
void trotter_evolve(StateVector& psi, const PauliSum& h, double t, int steps);

/// How each constant-Hamiltonian slice is propagated.
enum class SliceEvolution {
  kTrotter,  // one first-order Trotter step
  kExact,    // dense exponential; registers up to kDenseEigenQubits
};

/// Piecewise-constant evolution along H(s) = (1 - s) h0 + s hs with slices of
/// length T / steps, s sampled at slice midpoints.
StateVector adiabatic_prepare(const PauliSum& h0, const PauliSum& hs, double total_time,
                              int steps, const StateVector& psi0,
                              SliceEvolution mode = SliceEvolution::kTrotter);

/// Normalised exp(-tau h) psi, taken in sub-steps short enough for a
/// converged Taylor series and renormalised after each.
StateVector imaginary_time_evolve(const StateVector& psi, const PauliSum& h, double tau,
                                  int steps = 1);

struct ShotEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::uint64_t shots = 1;
};

/// Hamiltonian averaging: every non-identity term is measured in its own
/// eigenbasis `shots_per_term` times. The +1/-1 outcome count of one term is
/// binomial in its exact parity probability, which is what is drawn.
ShotEstimate sample_expectation(const StateVector& psi, const PauliSum& h,
                                std::uint64_t shots_per_term, Rng& rng);

/// Stochastic Pauli noise inserted after each gate of the native circuit.
struct NoiseModel {
  enum class TwoQubit {
    kUniformPair,  // one of the 15 non-identity Paulis on the pair
    kIndependent,  // each qubit independently, probability p2 each
  };

  double p1 = 0.0;  // insertion probability after a one-qubit gate
  double p2 = 0.0;  // insertion probability after a two-qubit gate
  TwoQubit two_qubit = TwoQubit::kUniformPair;

  /// Insertion probabilities that realise the depolarising channel
  /// rho -> (1 - p) rho + p I / d on each gate's support.
  static NoiseModel depolarizing(double p1, double p2,
                                 TwoQubit mode = TwoQubit::kUniformPair);

  bool noiseless() const { return p1 == 0.0 && p2 == 0.0; }
  NoiseModel scaled(double lambda) const;
  void validate() const;
};

/// Draws the noise for one gate and applies it; returns the inserted string
/// (identity when nothing was inserted).
PauliString apply_gate_noise(StateVector& psi, const Gate& g, const NoiseModel& noise,
                             Rng& rng);

/// One noisy trajectory from |0...0> (or `psi` when given). Pauli
/// exponentials and controlled phases are lowered to native gates first so
/// noise lands on physical one- and two-qubit gates.
StateVector run_noisy_trajectory(const Circuit& c, std::span<const double> theta,
                                 const NoiseModel& noise, Rng& rng);
void run_noisy(const Circuit& native, std::span<const double> theta,
               const NoiseModel& noise, Rng& rng, StateVector& psi);

/// Affine map E' = (E - offset) * scale placing the spectrum in [0, 1).
struct PhaseRescale {
  double offset = 0.0;
  double scale = 1.0;

  double to_phase(double e) const { return (e - offset) * scale; }
  double to_energy(double phase) const { return phase / scale + offset; }

  /// Uses +/- (|c_I| + Gershgorin radius) widened by `margin` on each side.
  static PhaseRescale from_bound(const PauliSum& h, double margin = 0.05);
};

struct QpeOptions {
  enum class Backend { kExact, kTrotter };
  Backend backend = Backend::kExact;
  int trotter_steps = 1;  // per application of exp(-2 pi i H'), Trotter backend
  PhaseRescale rescale;
  bool auto_rescale = true;
};

struct QpeDistribution {
  RVector probabilities;  // over the ancilla readout y in [0, 2^n_ancilla)
  PhaseRescale rescale;
  int n_ancilla = 0;

  double energy(std::uint64_t y) const;
  std::uint64_t mode() const;
};

/// Circuit-level phase estimation: Hadamards on the ancillas, controlled
/// exp(-2 pi i H' 2^k), QFT, readout. System qubits sit below the ancillas.
QpeDistribution qpe_distribution(const StateVector& psi, const PauliSum& h, int n_ancilla,
                                 const QpeOptions& opts = {});

/// One measured energy estimate.
double qpe_sample(const QpeDistribution& dist, Rng& rng);
double qpe_sample(const StateVector& psi, const PauliSum& h, int n_ancilla, Rng& rng,
                  const QpeOptions& opts = {});

/// Draws an index from a discrete distribution.
std::uint64_t sample_index(const RVector& probabilities, Rng& rng);

}  // namespace qcc
