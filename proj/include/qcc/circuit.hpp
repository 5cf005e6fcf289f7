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

#include <span>
#include <string>
#include <vector>

#include "qcc/pauli.hpp"
#include "qcc/statevector.hpp"

namespace qcc {

enum class GateKind {
  kX,
  kY,
  kZ,
  kH,
  kS,
  kSdg,
  kT,
  kRx,         // exp(-i a X / 2)
  kRy,         // exp(-i a Y / 2)
  kRz,         // exp(-i a Z / 2)
  kCNOT,       // qubits = {control, target}
  kCZ,         // qubits = {a, b}
  kCPhase,     // qubits = {a, b}; diag(1, 1, 1, exp(i a))
  kSwap,       // qubits = {a, b}
  kPauliExp,   // exp(i a P); an optional control qubit in `control`
};

std::string_view to_string(GateKind k);

/// One gate. The angle a is `angle + multiplier * theta[param]` when
/// `param >= 0`, otherwise just `angle`.
struct Gate {
  Gate() = default;
  Gate(GateKind k, std::vector<int> q, int slot = -1, double a = 0.0, double mult = 1.0)
      : kind(k), qubits(std::move(q)), param(slot), angle(a), multiplier(mult) {}

  GateKind kind = GateKind::kX;
  std::vector<int> qubits;
  int param = -1;
  double angle = 0.0;
  double multiplier = 1.0;
  PauliString pauli;  // kPauliExp only
  int control = -1;   // kPauliExp only

  double resolve(std::span<const double> theta) const;
  bool parametrized() const { return param >= 0; }
  /// Every qubit the gate touches (targets, Pauli support and control).
  std::vector<int> support() const;
};

/// Ordered gate list over n qubits with parameter slots 0..n_params-1.
class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(int n_qubits) : n_(n_qubits) {}

  int n_qubits() const { return n_; }
  int n_params() const { return n_params_; }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }

  /// Reserves a fresh parameter slot.
  int new_param() { return n_params_++; }

  Circuit& add(Gate g);
  Circuit& x(int q) { return add({GateKind::kX, {q}}); }
  Circuit& y(int q) { return add({GateKind::kY, {q}}); }
  Circuit& z(int q) { return add({GateKind::kZ, {q}}); }
  Circuit& h(int q) { return add({GateKind::kH, {q}}); }
  Circuit& s(int q) { return add({GateKind::kS, {q}}); }
  Circuit& t(int q) { return add({GateKind::kT, {q}}); }
  Circuit& rx(int q, double a) { return add({GateKind::kRx, {q}, -1, a}); }
  Circuit& ry(int q, double a) { return add({GateKind::kRy, {q}, -1, a}); }
  Circuit& rz(int q, double a) { return add({GateKind::kRz, {q}, -1, a}); }
  Circuit& rx_param(int q, int slot, double mult = 1.0);
  Circuit& ry_param(int q, int slot, double mult = 1.0);
  Circuit& rz_param(int q, int slot, double mult = 1.0);
  Circuit& cnot(int c, int t) { return add({GateKind::kCNOT, {c, t}}); }
  Circuit& cz(int a, int b) { return add({GateKind::kCZ, {a, b}}); }
  Circuit& cphase(int a, int b, double phi) { return add({GateKind::kCPhase, {a, b}, -1, phi}); }
  Circuit& swap(int a, int b) { return add({GateKind::kSwap, {a, b}}); }
  /// exp(i phi P)
  Circuit& pauli_exp(const PauliString& p, double phi);
  /// exp(i (mult * theta[slot]) P)
  Circuit& pauli_exp_param(const PauliString& p, int slot, double mult = 1.0);

  /// Appends all gates of `other`, shifting its parameter slots by `offset`.
  Circuit& append(const Circuit& other, int param_offset = 0);

  /// Same unitary expressed with single-qubit gates and CNOTs only.
  Circuit lowered() const;

 private:
  std::vector<Gate> gates_;
  int n_ = 0;
  int n_params_ = 0;
};

void apply_gate(StateVector& psi, const Gate& g, std::span<const double> theta = {});
/// Applies the inverse of g.
void apply_gate_inverse(StateVector& psi, const Gate& g, std::span<const double> theta = {});

/// psi <- exp(i phi P) psi
void apply_pauli_exponential(StateVector& psi, const PauliString& p, double phi);
/// Same, only on amplitudes whose `control` bit is set.
void apply_controlled_pauli_exponential(StateVector& psi, const PauliString& p, double phi,
                                        int control);
/// Value-returning form.
StateVector pauli_exponential(const StateVector& psi, const PauliString& p, double phi);

void run(const Circuit& c, std::span<const double> theta, StateVector& psi);
/// Runs from |0...0>.
StateVector simulate(const Circuit& c, std::span<const double> theta = {});

/// Generator of a parametrised gate as a Pauli string and the factor k such
/// that the gate is exp(i k a G) with a = resolve(theta).
struct GateGenerator {
  PauliString pauli;
  double factor = 0.0;
};
GateGenerator generator_of(const Gate& g);

/// Quantum Fourier transform F|x> = N^-1/2 sum_y exp(2 pi i x y / N) |y> on
/// the listed qubits (qubits[k] carries weight 2^k), as gates.
void append_qft(Circuit& c, const std::vector<int>& qubits, bool inverse = false);

}  // namespace qcc
