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

#include "qcc/circuit.hpp"

#include <bit>
#include <cmath>
#include <numbers>

#include "qcc/error.hpp"

namespace qcc {
namespace {

using Index = Eigen::Index;

Index bit(int q) { return Index{1} << q; }

void check_qubit(const StateVector& psi, int q) {
  if (q < 0 || q >= psi.n_qubits()) {
    fail(ErrorCode::kBadTarget, "qubit " + std::to_string(q) + " outside a " +
                                    std::to_string(psi.n_qubits()) + "-qubit register");
  }
}

void check_pair(const StateVector& psi, const Gate& g) {
  if (g.qubits.size() != 2) fail(ErrorCode::kBadTarget, "two-qubit gate needs two targets");
  check_qubit(psi, g.qubits[0]);
  check_qubit(psi, g.qubits[1]);
  if (g.qubits[0] == g.qubits[1]) fail(ErrorCode::kBadTarget, "repeated target qubit");
}

void apply_1q(StateVector& psi, int q, cplx m00, cplx m01, cplx m10, cplx m11) {
  CVector& a = psi.amplitudes();
  const Index dim = a.size();
  const Index step = bit(q);
  for (Index base = 0; base < dim; base += 2 * step) {
    for (Index i = base; i < base + step; ++i) {
      const cplx a0 = a[i];
      const cplx a1 = a[i + step];
      a[i] = m00 * a0 + m01 * a1;
      a[i + step] = m10 * a0 + m11 * a1;
    }
  }
}

void apply_phase_on_one(StateVector& psi, int q, cplx phase) {
  apply_1q(psi, q, 1.0, 0.0, 0.0, phase);
}

void apply_rotation(StateVector& psi, GateKind kind, int q, double a) {
  const double c = std::cos(a / 2);
  const double s = std::sin(a / 2);
  switch (kind) {
    case GateKind::kRx: apply_1q(psi, q, c, cplx(0, -s), cplx(0, -s), c); break;
    case GateKind::kRy: apply_1q(psi, q, c, -s, s, c); break;
    default: apply_1q(psi, q, cplx(c, -s), 0.0, 0.0, cplx(c, s)); break;
  }
}

void apply_cnot(StateVector& psi, int control, int target) {
  CVector& a = psi.amplitudes();
  const Index cm = bit(control);
  const Index tm = bit(target);
  for (Index i = 0; i < a.size(); ++i) {
    if ((i & cm) && !(i & tm)) std::swap(a[i], a[i | tm]);
  }
}

void apply_controlled_phase(StateVector& psi, int qa, int qb, cplx phase) {
  CVector& a = psi.amplitudes();
  const Index m = bit(qa) | bit(qb);
  for (Index i = 0; i < a.size(); ++i) {
    if ((i & m) == m) a[i] *= phase;
  }
}

void apply_swap(StateVector& psi, int qa, int qb) {
  CVector& a = psi.amplitudes();
  const Index ma = bit(qa);
  const Index mb = bit(qb);
  for (Index i = 0; i < a.size(); ++i) {
    if ((i & ma) && !(i & mb)) std::swap(a[i], a[(i ^ ma) | mb]);
  }
}

// Phase of P|b> = phase(b) |b ^ x>.
cplx string_phase(std::uint64_t b, std::uint64_t z, int y_count) {
  static const cplx kPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const int k = (y_count + 2 * (std::popcount(b & z) & 1)) & 3;
  return kPow[k];
}

void pauli_exp_kernel(StateVector& psi, const PauliString& p, double phi, std::uint64_t cmask) {
  CVector& a = psi.amplitudes();
  const Index dim = a.size();
  const double c = std::cos(phi);
  const double s = std::sin(phi);
  const int ny = std::popcount(p.x & p.z);
  if (p.is_identity()) {
    const cplx ph(c, s);
    for (Index i = 0; i < dim; ++i) {
      if ((static_cast<std::uint64_t>(i) & cmask) == cmask) a[i] *= ph;
    }
    return;
  }
  if (p.x == 0) {
    const cplx plus(c, s);
    const cplx minus(c, -s);
    for (Index i = 0; i < dim; ++i) {
      const auto b = static_cast<std::uint64_t>(i);
      if ((b & cmask) != cmask) continue;
      a[i] *= (std::popcount(b & p.z) & 1) ? minus : plus;
    }
    return;
  }
  const std::uint64_t pivot = p.x & (~p.x + 1);
  const cplx is(0.0, s);
  for (Index i = 0; i < dim; ++i) {
    const auto b = static_cast<std::uint64_t>(i);
    if ((b & pivot) || (b & cmask) != cmask) continue;
    const auto b2 = b ^ p.x;
    const cplx a0 = a[i];
    const cplx a1 = a[static_cast<Index>(b2)];
    a[i] = c * a0 + is * string_phase(b2, p.z, ny) * a1;
    a[static_cast<Index>(b2)] = c * a1 + is * string_phase(b, p.z, ny) * a0;
  }
}

void check_pauli(const StateVector& psi, const PauliString& p, int control) {
  if (p.max_qubit() >= psi.n_qubits()) {
    fail(ErrorCode::kBadTarget, "Pauli string " + p.to_string() + " exceeds the register");
  }
  if (control >= 0) {
    check_qubit(psi, control);
    if ((p.support() >> control) & 1) {
      fail(ErrorCode::kBadTarget, "control qubit inside the Pauli support");
    }
  }
}

void apply_resolved(StateVector& psi, const Gate& g, double a, bool inverse) {
  constexpr double kPi = std::numbers::pi;
  if (g.kind != GateKind::kPauliExp) {
    if (g.qubits.empty()) fail(ErrorCode::kBadTarget, "gate without targets");
    for (int q : g.qubits) check_qubit(psi, q);
  }
  const double sgn = inverse ? -1.0 : 1.0;
  switch (g.kind) {
    case GateKind::kX: apply_1q(psi, g.qubits[0], 0.0, 1.0, 1.0, 0.0); break;
    case GateKind::kY: apply_1q(psi, g.qubits[0], 0.0, cplx(0, -1), cplx(0, 1), 0.0); break;
    case GateKind::kZ: apply_phase_on_one(psi, g.qubits[0], -1.0); break;
    case GateKind::kH: {
      const double r = std::numbers::sqrt2 / 2;
      apply_1q(psi, g.qubits[0], r, r, r, -r);
      break;
    }
    case GateKind::kS: apply_phase_on_one(psi, g.qubits[0], cplx(0, sgn)); break;
    case GateKind::kSdg: apply_phase_on_one(psi, g.qubits[0], cplx(0, -sgn)); break;
    case GateKind::kT: apply_phase_on_one(psi, g.qubits[0], std::polar(1.0, sgn * kPi / 4)); break;
    case GateKind::kRx:
    case GateKind::kRy:
    case GateKind::kRz: apply_rotation(psi, g.kind, g.qubits[0], sgn * a); break;
    case GateKind::kCNOT:
      check_pair(psi, g);
      apply_cnot(psi, g.qubits[0], g.qubits[1]);
      break;
    case GateKind::kCZ:
      check_pair(psi, g);
      apply_controlled_phase(psi, g.qubits[0], g.qubits[1], -1.0);
      break;
    case GateKind::kCPhase:
      check_pair(psi, g);
      apply_controlled_phase(psi, g.qubits[0], g.qubits[1], std::polar(1.0, sgn * a));
      break;
    case GateKind::kSwap:
      check_pair(psi, g);
      apply_swap(psi, g.qubits[0], g.qubits[1]);
      break;
    case GateKind::kPauliExp:
      check_pauli(psi, g.pauli, g.control);
      pauli_exp_kernel(psi, g.pauli, sgn * a,
                       g.control >= 0 ? std::uint64_t{1} << g.control : 0);
      break;
  }
}

}  // namespace

std::string_view to_string(GateKind k) {
  switch (k) {
    case GateKind::kX: return "X";
    case GateKind::kY: return "Y";
    case GateKind::kZ: return "Z";
    case GateKind::kH: return "H";
    case GateKind::kS: return "S";
    case GateKind::kSdg: return "Sdg";
    case GateKind::kT: return "T";
    case GateKind::kRx: return "Rx";
    case GateKind::kRy: return "Ry";
    case GateKind::kRz: return "Rz";
    case GateKind::kCNOT: return "CNOT";
    case GateKind::kCZ: return "CZ";
    case GateKind::kCPhase: return "CPhase";
    case GateKind::kSwap: return "SWAP";
    case GateKind::kPauliExp: return "PauliExp";
  }
  return "?";
}

double Gate::resolve(std::span<const double> theta) const {
  if (param < 0) return angle;
  if (static_cast<std::size_t>(param) >= theta.size()) {
    fail(ErrorCode::kDimensionMismatch, "parameter slot " + std::to_string(param) +
                                            " but only " + std::to_string(theta.size()) +
                                            " values supplied");
  }
  return angle + multiplier * theta[static_cast<std::size_t>(param)];
}

std::vector<int> Gate::support() const {
  std::vector<int> out = qubits;
  if (kind == GateKind::kPauliExp) {
    out.clear();
    for (std::uint64_t m = pauli.support(); m; m &= m - 1) out.push_back(std::countr_zero(m));
    if (control >= 0) out.push_back(control);
  }
  return out;
}

Circuit& Circuit::add(Gate g) {
  for (int q : g.support()) {
    if (q < 0) fail(ErrorCode::kBadTarget, "negative qubit index");
    if (q >= n_) n_ = q + 1;
  }
  if (g.param >= n_params_) n_params_ = g.param + 1;
  gates_.push_back(std::move(g));
  return *this;
}

Circuit& Circuit::rx_param(int q, int slot, double mult) {
  return add({GateKind::kRx, {q}, slot, 0.0, mult});
}
Circuit& Circuit::ry_param(int q, int slot, double mult) {
  return add({GateKind::kRy, {q}, slot, 0.0, mult});
}
Circuit& Circuit::rz_param(int q, int slot, double mult) {
  return add({GateKind::kRz, {q}, slot, 0.0, mult});
}

Circuit& Circuit::pauli_exp(const PauliString& p, double phi) {
  Gate g{GateKind::kPauliExp, {}, -1, phi};
  g.pauli = p;
  return add(std::move(g));
}

Circuit& Circuit::pauli_exp_param(const PauliString& p, int slot, double mult) {
  Gate g{GateKind::kPauliExp, {}, slot, 0.0, mult};
  g.pauli = p;
  return add(std::move(g));
}

Circuit& Circuit::append(const Circuit& other, int param_offset) {
  for (Gate g : other.gates_) {
    if (g.param >= 0) g.param += param_offset;
    add(std::move(g));
  }
  if (other.n_ > n_) n_ = other.n_;
  return *this;
}

Circuit Circuit::lowered() const {
  Circuit out(n_);
  out.n_params_ = n_params_;
  for (const Gate& g : gates_) {
    switch (g.kind) {
      case GateKind::kPauliExp: {
        if (g.control >= 0) {
          fail(ErrorCode::kUnsupportedGate, "controlled Pauli exponential has no native lowering");
        }
        const std::vector<int> sup = g.support();
        if (sup.empty()) break;  // global phase
        for (int q : sup) {
          const Pauli p = g.pauli.at(q);
          if (p == Pauli::X) out.h(q);
          if (p == Pauli::Y) out.rx(q, std::numbers::pi / 2);
        }
        for (std::size_t k = 0; k + 1 < sup.size(); ++k) out.cnot(sup[k], sup[k + 1]);
        // exp(i a Z) = Rz(-2a)
        out.add({GateKind::kRz, {sup.back()}, g.param, -2.0 * g.angle, -2.0 * g.multiplier});
        for (std::size_t k = sup.size() - 1; k > 0; --k) out.cnot(sup[k - 1], sup[k]);
        for (int q : sup) {
          const Pauli p = g.pauli.at(q);
          if (p == Pauli::X) out.h(q);
          if (p == Pauli::Y) out.rx(q, -std::numbers::pi / 2);
        }
        break;
      }
      case GateKind::kCPhase: {
        if (g.param >= 0) fail(ErrorCode::kUnsupportedGate, "parametrised CPhase");
        const int a = g.qubits[0];
        const int b = g.qubits[1];
        out.rz(a, g.angle / 2).rz(b, g.angle / 2).cnot(a, b).rz(b, -g.angle / 2).cnot(a, b);
        break;
      }
      case GateKind::kSwap:
        out.cnot(g.qubits[0], g.qubits[1])
            .cnot(g.qubits[1], g.qubits[0])
            .cnot(g.qubits[0], g.qubits[1]);
        break;
      default: out.add(g); break;
    }
  }
  return out;
}

void apply_gate(StateVector& psi, const Gate& g, std::span<const double> theta) {
  apply_resolved(psi, g, g.resolve(theta), false);
}

void apply_gate_inverse(StateVector& psi, const Gate& g, std::span<const double> theta) {
  apply_resolved(psi, g, g.resolve(theta), true);
}

void apply_pauli_exponential(StateVector& psi, const PauliString& p, double phi) {
  check_pauli(psi, p, -1);
  pauli_exp_kernel(psi, p, phi, 0);
}

void apply_controlled_pauli_exponential(StateVector& psi, const PauliString& p, double phi,
                                        int control) {
  check_pauli(psi, p, control);
  pauli_exp_kernel(psi, p, phi, std::uint64_t{1} << control);
}

StateVector pauli_exponential(const StateVector& psi, const PauliString& p, double phi) {
  StateVector out = psi;
  apply_pauli_exponential(out, p, phi);
  return out;
}

void run(const Circuit& c, std::span<const double> theta, StateVector& psi) {
  if (c.n_qubits() > psi.n_qubits()) {
    fail(ErrorCode::kDimensionMismatch, "circuit is wider than the state");
  }
  for (const Gate& g : c.gates()) apply_gate(psi, g, theta);
}

StateVector simulate(const Circuit& c, std::span<const double> theta) {
  if (c.n_qubits() > kStateQubitLimit) {
    fail(ErrorCode::kTooManyQubits, "circuit exceeds the statevector limit");
  }
  StateVector psi(c.n_qubits());
  run(c, theta, psi);
  return psi;
}

GateGenerator generator_of(const Gate& g) {
  switch (g.kind) {
    case GateKind::kRx: return {PauliString::single(g.qubits[0], Pauli::X), -0.5};
    case GateKind::kRy: return {PauliString::single(g.qubits[0], Pauli::Y), -0.5};
    case GateKind::kRz: return {PauliString::single(g.qubits[0], Pauli::Z), -0.5};
    case GateKind::kPauliExp:
      if (g.control < 0) return {g.pauli, 1.0};
      break;
    default: break;
  }
  fail(ErrorCode::kUnsupportedGate,
       std::string("gate ") + std::string(to_string(g.kind)) + " is not a Pauli rotation");
}

void append_qft(Circuit& c, const std::vector<int>& qubits, bool inverse) {
  const int n = static_cast<int>(qubits.size());
  Circuit f(c.n_qubits());
  for (int j = n - 1; j >= 0; --j) {
    f.h(qubits[j]);
    for (int k = j - 1; k >= 0; --k) {
      f.cphase(qubits[k], qubits[j], std::numbers::pi / static_cast<double>(1 << (j - k)));
    }
  }
  for (int j = 0; j < n / 2; ++j) f.swap(qubits[j], qubits[n - 1 - j]);
  if (!inverse) {
    c.append(f);
    return;
  }
  for (auto it = f.gates().rbegin(); it != f.gates().rend(); ++it) {
    Gate g = *it;
    g.angle = -g.angle;
    c.add(std::move(g));
  }
}

}  // namespace qcc
