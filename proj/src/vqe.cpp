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

#include "qcc/vqe.hpp"

#include <cmath>

#include "qcc/error.hpp"

namespace qcc {
namespace {

constexpr double kCoeffTol = 1e-12;

void add_group_exponential(Circuit& c, const PauliSum& group, int slot, double scale) {
  for (const auto& [s, coeff] : group.terms()) {
    if (s.is_identity() || std::abs(coeff) < kCoeffTol) continue;
    c.pauli_exp_param(s, slot, scale * coeff.real());
  }
}

ShotEstimate mean_of(const std::vector<double>& v) {
  ShotEstimate e;
  const double n = static_cast<double>(v.size());
  double sum = 0.0;
  double sum2 = 0.0;
  for (double x : v) {
    sum += x;
    sum2 += x * x;
  }
  e.mean = sum / n;
  e.std_error = v.size() > 1 ? std::sqrt(std::max(0.0, (sum2 / n - e.mean * e.mean) / (n - 1.0)))
                             : 0.0;
  return e;
}

}  // namespace

std::string_view to_string(AnsatzFamily f) {
  switch (f) {
    case AnsatzFamily::kUccsd: return "uccsd";
    case AnsatzFamily::kHardwareEfficient: return "hea";
    case AnsatzFamily::kHamiltonianVariational: return "hva";
    case AnsatzFamily::kLdca: return "ldca";
  }
  return "?";
}

AnsatzFamily parse_ansatz(std::string_view name) {
  if (name == "uccsd") return AnsatzFamily::kUccsd;
  if (name == "hea") return AnsatzFamily::kHardwareEfficient;
  if (name == "hva") return AnsatzFamily::kHamiltonianVariational;
  if (name == "ldca") return AnsatzFamily::kLdca;
  fail(ErrorCode::kInvalidArgument, "unknown ansatz '" + std::string(name) + "'");
}

Circuit Ansatz::full_circuit() const {
  Circuit c(n_qubits());
  c.append(reference);
  c.append(circuit);
  return c;
}

StateVector Ansatz::prepare(std::span<const double> theta) const {
  if (static_cast<int>(theta.size()) != n_params()) {
    fail(ErrorCode::kDimensionMismatch, "expected " + std::to_string(n_params()) +
                                            " parameters, got " + std::to_string(theta.size()));
  }
  StateVector psi(n_qubits());
  run(reference, {}, psi);
  run(circuit, theta, psi);
  return psi;
}

Circuit basis_state_circuit(int n_qubits, std::uint64_t bits) {
  Circuit c(n_qubits);
  for (int q = 0; q < n_qubits; ++q) {
    if ((bits >> q) & 1) c.x(q);
  }
  return c;
}

Ansatz build_uccsd(const std::vector<FermionSum>& generators, const EncodingScheme& scheme,
                   int trotter_steps, std::uint64_t hf_occupation) {
  std::vector<PauliSum> encoded;
  std::vector<std::string> labels;
  for (const FermionSum& g : generators) {
    encoded.push_back(encode_operator(g, scheme));
    labels.push_back(g.to_string());
  }
  return build_uccsd_encoded(encoded, labels, scheme.n_modes,
                             encode_state(hf_occupation, scheme), trotter_steps);
}

Ansatz build_uccsd_encoded(const std::vector<PauliSum>& generators,
                           const std::vector<std::string>& labels, int n_qubits,
                           std::uint64_t reference_bits, int trotter_steps) {
  require(trotter_steps >= 1, ErrorCode::kInvalidArgument, "trotter_steps must be positive");
  require(labels.size() == generators.size(), ErrorCode::kDimensionMismatch,
          "one label per generator");
  Ansatz a;
  a.family = AnsatzFamily::kUccsd;
  a.reference = basis_state_circuit(n_qubits, reference_bits);
  a.circuit = Circuit(n_qubits);
  std::vector<PauliSum> encoded;
  for (std::size_t k = 0; k < generators.size(); ++k) {
    PauliSum p = canonicalize(generators[k]);
    for (const auto& [s, c] : p.terms()) {
      if (std::abs(c.real()) > 1e-10) {
        fail(ErrorCode::kNotAntiHermitian, "generator " + labels[k] + " is not anti-Hermitian");
      }
    }
    require(p.n_qubits() <= n_qubits, ErrorCode::kDimensionMismatch,
            "generator wider than the register");
    encoded.push_back(std::move(p));
    a.circuit.new_param();
    a.labels.push_back(labels[k]);
  }
  for (int step = 0; step < trotter_steps; ++step) {
    for (std::size_t k = 0; k < encoded.size(); ++k) {
      for (const auto& [s, c] : encoded[k].terms()) {
        if (s.is_identity() || std::abs(c) < kCoeffTol) continue;
        // exp(theta c P) with c = i Im(c)
        a.circuit.pauli_exp_param(s, static_cast<int>(k), c.imag() / trotter_steps);
      }
    }
  }
  return a;
}

Ansatz build_uccsd(const std::vector<UccGenerator>& generators, const EncodingScheme& scheme,
                   int trotter_steps, std::uint64_t hf_occupation) {
  std::vector<FermionSum> g;
  for (const auto& u : generators) g.push_back(u.generator);
  Ansatz a = build_uccsd(g, scheme, trotter_steps, hf_occupation);
  for (std::size_t k = 0; k < generators.size(); ++k) a.labels[k] = generators[k].label;
  return a;
}

Ansatz build_hardware_efficient(int n_qubits, int layers, Entangler entangler) {
  require(n_qubits >= 1 && layers >= 1, ErrorCode::kInvalidArgument,
          "hardware-efficient ansatz needs qubits and layers");
  Ansatz a;
  a.family = AnsatzFamily::kHardwareEfficient;
  a.reference = Circuit(n_qubits);
  a.circuit = Circuit(n_qubits);
  Circuit& c = a.circuit;
  auto rotations = [&](int layer) {
    for (int q = 0; q < n_qubits; ++q) {
      c.ry_param(q, c.new_param());
      a.labels.push_back("ry[" + std::to_string(layer) + "][" + std::to_string(q) + "]");
      c.rz_param(q, c.new_param());
      a.labels.push_back("rz[" + std::to_string(layer) + "][" + std::to_string(q) + "]");
    }
  };
  rotations(0);
  for (int l = 1; l <= layers; ++l) {
    for (int q = 0; q + 1 < n_qubits; ++q) {
      if (entangler == Entangler::kCnotChain) {
        c.cnot(q, q + 1);
      } else {
        c.cz(q, q + 1);
      }
    }
    rotations(l);
  }
  return a;
}

HvaPartition encode_partition(const FermionSum& h, const EncodingScheme& scheme) {
  const FermionPartition f = partition_hamiltonian(h);
  return {canonicalize(encode_operator(f.diagonal, scheme)),
          canonicalize(encode_operator(f.hopping, scheme)),
          canonicalize(encode_operator(f.exchange, scheme))};
}

Ansatz build_hamiltonian_variational(const HvaPartition& parts, int steps, const Circuit& reference,
                                     const PauliSum* full) {
  require(steps >= 1, ErrorCode::kInvalidArgument, "steps must be positive");
  for (const PauliSum* g : {&parts.diagonal, &parts.hopping, &parts.exchange}) {
    if (!g->is_hermitian()) fail(ErrorCode::kNonHermitian, "partition group is not Hermitian");
  }
  if (full != nullptr) {
    PauliSum diff = parts.diagonal + parts.hopping + parts.exchange - *full;
    diff = canonicalize(diff, 1e-10);
    for (const auto& [s, c] : diff.terms()) {
      if (!s.is_identity()) {
        fail(ErrorCode::kPartitionIncomplete, "term " + s.to_string() + " missing from the partition");
      }
    }
  }
  int n = reference.n_qubits();
  for (const PauliSum* g : {&parts.diagonal, &parts.hopping, &parts.exchange}) {
    n = std::max(n, g->n_qubits());
  }
  Ansatz a;
  a.family = AnsatzFamily::kHamiltonianVariational;
  a.reference = reference;
  a.circuit = Circuit(n);
  Circuit& c = a.circuit;
  for (int b = 0; b < steps; ++b) {
    const int d = c.new_param();
    const int h = c.new_param();
    const int ex = c.new_param();
    const std::string tag = "[" + std::to_string(b) + "]";
    a.labels.insert(a.labels.end(), {"diag" + tag, "hop" + tag, "exch" + tag});
    // Rightmost factor first: U_ex(t/2) U_h(t/2) U_d(t) U_h(t/2) U_ex(t/2).
    add_group_exponential(c, parts.exchange, ex, 0.5);
    add_group_exponential(c, parts.hopping, h, 0.5);
    add_group_exponential(c, parts.diagonal, d, 1.0);
    add_group_exponential(c, parts.hopping, h, 0.5);
    add_group_exponential(c, parts.exchange, ex, 0.5);
  }
  return a;
}

Ansatz build_ldca(int n_qubits, int cycles) {
  require(n_qubits >= 2, ErrorCode::kInvalidArgument, "LDCA needs at least two qubits");
  require(cycles >= 1, ErrorCode::kInvalidArgument, "cycles must be positive");
  Ansatz a;
  a.family = AnsatzFamily::kLdca;
  a.reference = Circuit(n_qubits);
  a.circuit = Circuit(n_qubits);
  Circuit& c = a.circuit;
  for (int q = 0; q < n_qubits; ++q) {
    c.rz_param(q, c.new_param());
    a.labels.push_back("rz[" + std::to_string(q) + "]");
  }
  struct Factor {
    Pauli first;
    Pauli second;
    double sign;
    const char* name;
  };
  // Application order: R^{XX}, R^{-YY}, R^{ZZ}, R^{XY}, R^{-YX}.
  const Factor factors[] = {{Pauli::X, Pauli::X, 1.0, "xx"},
                            {Pauli::Y, Pauli::Y, -1.0, "yy"},
                            {Pauli::Z, Pauli::Z, 1.0, "zz"},
                            {Pauli::X, Pauli::Y, 1.0, "xy"},
                            {Pauli::Y, Pauli::X, -1.0, "yx"}};
  for (int cyc = 0; cyc < cycles; ++cyc) {
    for (int parity : {0, 1}) {
      for (int q = parity; q + 1 < n_qubits; q += 2) {
        for (const Factor& f : factors) {
          PauliString p;
          p.set(q, f.first);
          p.set(q + 1, f.second);
          c.pauli_exp_param(p, c.new_param(), f.sign);
          a.labels.push_back(std::string(f.name) + "[" + std::to_string(cyc) + "][" +
                             std::to_string(q) + "," + std::to_string(q + 1) + "]");
        }
      }
    }
  }
  return a;
}

std::vector<double> initial_parameters(const Ansatz& a, Rng& rng) {
  std::vector<double> theta(static_cast<std::size_t>(a.n_params()), 0.0);
  if (a.family != AnsatzFamily::kUccsd) {
    for (double& t : theta) t = rng.uniform(-0.01, 0.01);
  }
  return theta;
}

ShotEstimate estimate_energy(const Ansatz& a, std::span<const double> theta, const PauliSum& h,
                             const EstimateOptions& opts, Rng& rng) {
  if (h.n_qubits() > a.n_qubits()) {
    fail(ErrorCode::kDimensionMismatch, "Hamiltonian is wider than the ansatz");
  }
  const bool shots = opts.mode == EstimateOptions::Mode::kShots;
  if (!opts.noise || opts.noise->noiseless()) {
    const StateVector psi = a.prepare(theta);
    if (shots) return sample_expectation(psi, h, opts.shots_per_term, rng);
    return {expectation(h, psi), 0.0, 1};
  }
  require(opts.trajectories >= 1, ErrorCode::kInvalidArgument, "trajectories must be positive");
  const Circuit native = a.full_circuit().lowered();
  const Rng base(rng.next());
  std::vector<double> values(static_cast<std::size_t>(opts.trajectories));
  std::uint64_t used = 0;
  for (int k = 0; k < opts.trajectories; ++k) {
    Rng tr = base.split(static_cast<std::uint64_t>(k));
    StateVector psi(a.n_qubits());
    run_noisy(native, theta, *opts.noise, tr, psi);
    if (shots) {
      const ShotEstimate e = sample_expectation(psi, h, opts.shots_per_term, tr);
      values[static_cast<std::size_t>(k)] = e.mean;
      used += e.shots;
    } else {
      values[static_cast<std::size_t>(k)] = expectation(h, psi);
    }
  }
  ShotEstimate e = mean_of(values);
  e.shots = shots ? used : static_cast<std::uint64_t>(opts.trajectories);
  return e;
}

ShotEstimate estimate_energy(const Ansatz& a, std::span<const double> theta, const PauliSum& h) {
  Rng unused(0);
  return estimate_energy(a, theta, h, {}, unused);
}

std::vector<double> analytic_gradient(const Ansatz& a, std::span<const double> theta,
                                      const std::function<CVector(const CVector&)>& observable) {
  StateVector psi = a.prepare(theta);
  StateVector lambda(observable(psi.amplitudes()));
  std::vector<double> grad(static_cast<std::size_t>(a.n_params()), 0.0);
  const auto& gates = a.circuit.gates();
  for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
    const Gate& g = *it;
    if (g.parametrized()) {
      const GateGenerator gen = generator_of(g);
      const cplx overlap = lambda.inner(apply(gen.pauli, psi));
      grad[static_cast<std::size_t>(g.param)] += -2.0 * gen.factor * g.multiplier * overlap.imag();
    }
    apply_gate_inverse(psi, g, theta);
    apply_gate_inverse(lambda, g, theta);
  }
  return grad;
}

std::vector<double> analytic_gradient(const Ansatz& a, std::span<const double> theta,
                                      const PauliSum& h) {
  if (!h.is_hermitian()) fail(ErrorCode::kNonHermitian, "observable is not Hermitian");
  PauliSum hh = h;
  hh.set_n_qubits(a.n_qubits());
  const PauliOperator op(hh);
  return analytic_gradient(a, theta, [&](const CVector& v) { return op.apply(v); });
}

PauliSum penalty_hamiltonian(const PauliSum& h, const std::vector<PenaltyTerm>& constraints) {
  PauliSum out = h;
  for (const PenaltyTerm& t : constraints) {
    require(t.beta > 0.0, ErrorCode::kInvalidArgument, "penalty weight must be positive");
    if (!t.q.is_hermitian()) fail(ErrorCode::kNonHermitian, "constraint operator is not Hermitian");
    PauliSum shifted = t.q;
    shifted.add(PauliString{}, -t.target);
    out += (shifted * shifted) * cplx(t.beta);
  }
  return canonicalize(out);
}

VqeResult optimize(const Ansatz& a, const PauliSum& h, const VqeOptions& opts) {
  const Rng master(opts.optimizer.seed);
  std::uint64_t stream = 0;
  VqeResult r;
  auto estimate = [&](std::span<const double> theta) {
    Rng rng = master.split(stream++);
    const ShotEstimate e = estimate_energy(a, theta, h, opts.estimate, rng);
    if (opts.estimate.mode == EstimateOptions::Mode::kShots) r.shots_used += e.shots;
    return e;
  };
  const Objective f = [&](std::span<const double> theta) { return estimate(theta).mean; };
  const Gradient grad = [&](std::span<const double> theta) {
    return analytic_gradient(a, theta, h);
  };
  std::vector<double> x0;
  if (opts.initial) {
    x0 = *opts.initial;
  } else {
    Rng init = master.split(~std::uint64_t{0});
    x0 = initial_parameters(a, init);
  }
  if (static_cast<int>(x0.size()) != a.n_params()) {
    fail(ErrorCode::kDimensionMismatch, "initial parameter count does not match the ansatz");
  }
  OptimizerResult o = minimize(f, grad, std::move(x0), opts.optimizer);
  r.best_params = std::move(o.best_params);
  r.best_energy = o.best_energy;
  r.final_params = std::move(o.final_params);
  r.trace = std::move(o.trace);
  r.evals = o.evals;
  r.converged = o.converged;

  const bool stochastic = opts.estimate.mode == EstimateOptions::Mode::kShots ||
                          (opts.estimate.noise && !opts.estimate.noise->noiseless());
  if (!stochastic) {
    r.final_estimate = estimate(r.final_params);
    return r;
  }
  const int reps = std::max(1, opts.final_repeats);
  double sum = 0.0;
  double var = 0.0;
  std::uint64_t shots = 0;
  for (int k = 0; k < reps; ++k) {
    const ShotEstimate e = estimate(r.final_params);
    sum += e.mean;
    var += e.std_error * e.std_error;
    shots += e.shots;
  }
  r.final_estimate = {sum / reps, std::sqrt(var) / reps, shots};
  return r;
}

}  // namespace qcc
