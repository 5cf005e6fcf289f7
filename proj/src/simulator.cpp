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

#include "qcc/simulator.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "qcc/eigensolve.hpp"
#include "qcc/error.hpp"

namespace qcc {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_hermitian(const PauliSum& h) {
  require(h.is_hermitian(), ErrorCode::kNonHermitian, "operator is not Hermitian");
}

void trotter_step(StateVector& psi, const PauliSum& h, double dt) {
  for (const auto& [s, c] : h.terms()) {
    if (s.is_identity()) {
      psi.amplitudes() *= std::polar(1.0, -c.real() * dt);
    } else {
      apply_pauli_exponential(psi, s, -c.real() * dt);
    }
  }
}

Pauli random_letter(Rng& rng) { return static_cast<Pauli>(1 + rng.uniform_int(3)); }

PauliSum rescaled(const PauliSum& h, const PhaseRescale& r) {
  PauliSum out = h * cplx(r.scale);
  out.add(PauliString{}, -r.offset * r.scale);
  return canonicalize(out);
}

}  // namespace

void trotter_evolve(StateVector& psi, const PauliSum& h, double t, int steps) {
  require(steps >= 1, ErrorCode::kInvalidArgument, "steps must be positive");
  require_hermitian(h);
  const PauliSum hc = canonicalize(h);
  const double dt = t / steps;
  for (int k = 0; k < steps; ++k) trotter_step(psi, hc, dt);
}

StateVector adiabatic_prepare(const PauliSum& h0, const PauliSum& hs, double total_time,
                              int steps, const StateVector& psi0, SliceEvolution mode) {
  require(steps >= 1, ErrorCode::kInvalidArgument, "steps must be positive");
  require_hermitian(h0);
  require_hermitian(hs);
  StateVector psi = psi0;
  const double dt = total_time / steps;
  for (int k = 0; k < steps; ++k) {
    const double s = (k + 0.5) / steps;
    const PauliSum hk = canonicalize(h0 * cplx(1.0 - s) + hs * cplx(s));
    if (mode == SliceEvolution::kTrotter) {
      trotter_step(psi, hk, dt);
      continue;
    }
    if (psi.n_qubits() > kDenseEigenQubits) {
      fail(ErrorCode::kTooLarge, "exact slices need a dense eigendecomposition");
    }
    Eigen::SelfAdjointEigenSolver<CMatrix> es(to_matrix(hk, psi.n_qubits()));
    CVector ph(es.eigenvalues().size());
    for (Eigen::Index j = 0; j < ph.size(); ++j) ph[j] = std::polar(1.0, -es.eigenvalues()[j] * dt);
    psi.amplitudes() =
        es.eigenvectors() * (ph.asDiagonal() * (es.eigenvectors().adjoint() * psi.amplitudes()));
  }
  return psi;
}

StateVector imaginary_time_evolve(const StateVector& psi, const PauliSum& h, double tau,
                                  int steps) {
  require(steps >= 1, ErrorCode::kInvalidArgument, "steps must be positive");
  require_hermitian(h);
  // The identity term only rescales the norm.
  PauliSum traceless = h;
  traceless.add(PauliString{}, -h.constant());
  traceless = canonicalize(traceless);
  traceless.set_n_qubits(psi.n_qubits());
  const PauliOperator op(traceless);
  const double radius = traceless.one_norm();
  const int sub = std::max(steps, static_cast<int>(std::ceil(std::abs(tau) * radius / 0.5)));
  const double dtau = tau / sub;

  CVector v = psi.amplitudes();
  if (v.norm() < 1e-14) fail(ErrorCode::kZeroOverlap, "input state has zero norm");
  v.normalize();
  for (int s = 0; s < sub; ++s) {
    CVector term = v;
    CVector acc = v;
    for (int k = 1; k < 60; ++k) {
      term = op.apply(term) * cplx(-dtau / k);
      acc += term;
      if (term.norm() < 1e-17 * acc.norm()) break;
    }
    const double nrm = acc.norm();
    if (nrm < 1e-14) fail(ErrorCode::kZeroOverlap, "imaginary-time norm collapsed");
    v = acc / nrm;
  }
  return StateVector(std::move(v));
}

ShotEstimate sample_expectation(const StateVector& psi, const PauliSum& h,
                                std::uint64_t shots_per_term, Rng& rng) {
  require(shots_per_term >= 1, ErrorCode::kInvalidArgument, "shots must be positive");
  require_hermitian(h);
  const auto n = static_cast<double>(shots_per_term);
  ShotEstimate est;
  est.shots = 0;
  double var = 0.0;
  const PauliSum hc = canonicalize(h);
  for (const auto& [s, c] : hc.terms()) {
    if (s.is_identity()) {
      est.mean += c.real();
      continue;
    }
    const double exact = expectation(s, psi);
    const double p_plus = std::clamp(0.5 * (1.0 + exact), 0.0, 1.0);
    double k = 0.0;
    if (p_plus >= 1.0) {
      k = n;
    } else if (p_plus > 0.0) {
      std::binomial_distribution<std::uint64_t> draw(shots_per_term, p_plus);
      k = static_cast<double>(draw(rng.engine()));
    }
    const double m = 2.0 * k / n - 1.0;
    est.mean += c.real() * m;
    // Unbiased sample variance of the +-1 outcomes.
    const double sv = shots_per_term > 1 ? (1.0 - m * m) * n / (n - 1.0) : 0.0;
    var += c.real() * c.real() * sv / n;
    est.shots += shots_per_term;
  }
  est.std_error = std::sqrt(std::max(var, 0.0));
  if (est.shots == 0) est.shots = 1;
  return est;
}

NoiseModel NoiseModel::depolarizing(double p1, double p2, TwoQubit mode) {
  NoiseModel m;
  m.two_qubit = mode;
  m.p1 = 0.75 * p1;
  m.p2 = mode == TwoQubit::kUniformPair ? 15.0 / 16.0 * p2 : 0.75 * p2;
  m.validate();
  return m;
}

NoiseModel NoiseModel::scaled(double lambda) const {
  NoiseModel m = *this;
  m.p1 *= lambda;
  m.p2 *= lambda;
  m.validate();
  return m;
}

void NoiseModel::validate() const {
  require(p1 >= 0.0 && p1 <= 1.0 && p2 >= 0.0 && p2 <= 1.0, ErrorCode::kInvalidProbability,
          "noise probabilities must lie in [0, 1]");
}

PauliString apply_gate_noise(StateVector& psi, const Gate& g, const NoiseModel& noise,
                             Rng& rng) {
  PauliString e;
  const std::vector<int> sup = g.support();
  if (sup.size() == 1) {
    if (noise.p1 > 0.0 && rng.bernoulli(noise.p1)) e.set(sup[0], random_letter(rng));
  } else if (sup.size() == 2) {
    if (noise.two_qubit == NoiseModel::TwoQubit::kUniformPair) {
      if (noise.p2 > 0.0 && rng.bernoulli(noise.p2)) {
        const auto k = 1 + rng.uniform_int(15);
        e.set(sup[0], static_cast<Pauli>(k & 3));
        e.set(sup[1], static_cast<Pauli>(k >> 2));
      }
    } else {
      for (int q : sup) {
        if (noise.p2 > 0.0 && rng.bernoulli(noise.p2)) e.set(q, random_letter(rng));
      }
    }
  } else if (!sup.empty() && !noise.noiseless()) {
    fail(ErrorCode::kUnsupportedGate, "noise is defined for one- and two-qubit gates only");
  }
  if (!e.is_identity()) psi = apply(e, psi);
  return e;
}

void run_noisy(const Circuit& native, std::span<const double> theta, const NoiseModel& noise,
               Rng& rng, StateVector& psi) {
  for (const Gate& g : native.gates()) {
    apply_gate(psi, g, theta);
    apply_gate_noise(psi, g, noise, rng);
  }
}

StateVector run_noisy_trajectory(const Circuit& c, std::span<const double> theta,
                                 const NoiseModel& noise, Rng& rng) {
  noise.validate();
  StateVector psi(c.n_qubits());
  if (noise.noiseless()) {
    run(c, theta, psi);
    return psi;
  }
  run_noisy(c.lowered(), theta, noise, rng, psi);
  return psi;
}

PhaseRescale PhaseRescale::from_bound(const PauliSum& h, double margin) {
  const double r = spectral_radius_bound(h);
  const double c = h.constant().real();
  const double width = r > 0.0 ? 2.0 * r : 1.0;
  const double lo = c - 0.5 * width - margin * width;
  const double hi = c + 0.5 * width + margin * width;
  return {lo, 1.0 / (hi - lo)};
}

double QpeDistribution::energy(std::uint64_t y) const {
  return rescale.to_energy(static_cast<double>(y) / static_cast<double>(probabilities.size()));
}

std::uint64_t QpeDistribution::mode() const {
  Eigen::Index k = 0;
  probabilities.maxCoeff(&k);
  return static_cast<std::uint64_t>(k);
}

QpeDistribution qpe_distribution(const StateVector& psi, const PauliSum& h, int n_ancilla,
                                 const QpeOptions& opts) {
  require(n_ancilla >= 1, ErrorCode::kInvalidArgument, "need at least one ancilla");
  require_hermitian(h);
  const int ns = psi.n_qubits();
  require(h.n_qubits() <= ns, ErrorCode::kDimensionMismatch, "operator wider than the state");
  if (ns + n_ancilla > kStateQubitLimit) {
    fail(ErrorCode::kTooManyQubits, "system plus ancillas exceed the statevector limit");
  }
  if (opts.backend == QpeOptions::Backend::kExact && ns > kDenseEigenQubits) {
    fail(ErrorCode::kTooManyQubits, "exact QPE backend diagonalises the system densely");
  }

  QpeDistribution out;
  out.n_ancilla = n_ancilla;
  out.rescale = opts.auto_rescale ? PhaseRescale::from_bound(h) : opts.rescale;
  const PauliSum hp = rescaled(h, out.rescale);

  const int n = ns + n_ancilla;
  const Eigen::Index dim_sys = Eigen::Index{1} << ns;
  const Eigen::Index dim_anc = Eigen::Index{1} << n_ancilla;
  CVector full = CVector::Zero(dim_sys * dim_anc);
  full.head(dim_sys) = psi.amplitudes();
  StateVector state(std::move(full));
  for (int k = 0; k < n_ancilla; ++k) apply_gate(state, {GateKind::kH, {ns + k}});

  if (opts.backend == QpeOptions::Backend::kExact) {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(to_matrix(hp, ns));
    Eigen::Map<CMatrix> block(state.amplitudes().data(), dim_sys, dim_anc);
    for (int k = 0; k < n_ancilla; ++k) {
      const double power = std::ldexp(1.0, k);
      CVector ph(dim_sys);
      for (Eigen::Index j = 0; j < dim_sys; ++j) {
        ph[j] = std::polar(1.0, -kTwoPi * power * std::fmod(es.eigenvalues()[j], 1.0));
      }
      const CMatrix u = es.eigenvectors() * ph.asDiagonal() * es.eigenvectors().adjoint();
      for (Eigen::Index a = 0; a < dim_anc; ++a) {
        if ((a >> k) & 1) block.col(a) = u * block.col(a);
      }
    }
  } else {
    require(opts.trotter_steps >= 1, ErrorCode::kInvalidArgument, "steps must be positive");
    const PauliSum hc = canonicalize(hp);
    const double dt = kTwoPi / opts.trotter_steps;
    for (int k = 0; k < n_ancilla; ++k) {
      const int control = ns + k;
      const long reps = (1L << k) * opts.trotter_steps;
      for (long r = 0; r < reps; ++r) {
        for (const auto& [s, c] : hc.terms()) {
          apply_controlled_pauli_exponential(state, s, -c.real() * dt, control);
        }
      }
    }
  }

  Circuit qft(n);
  std::vector<int> anc(static_cast<std::size_t>(n_ancilla));
  for (int k = 0; k < n_ancilla; ++k) anc[static_cast<std::size_t>(k)] = ns + k;
  append_qft(qft, anc);
  run(qft, {}, state);
  out.probabilities = state.marginal(anc);
  return out;
}

std::uint64_t sample_index(const RVector& probabilities, Rng& rng) {
  const double total = probabilities.sum();
  double u = rng.uniform() * total;
  for (Eigen::Index k = 0; k < probabilities.size(); ++k) {
    u -= probabilities[k];
    if (u < 0.0) return static_cast<std::uint64_t>(k);
  }
  return static_cast<std::uint64_t>(probabilities.size() - 1);
}

double qpe_sample(const QpeDistribution& dist, Rng& rng) {
  return dist.energy(sample_index(dist.probabilities, rng));
}

double qpe_sample(const StateVector& psi, const PauliSum& h, int n_ancilla, Rng& rng,
                  const QpeOptions& opts) {
  return qpe_sample(qpe_distribution(psi, h, n_ancilla, opts), rng);
}

}  // namespace qcc
