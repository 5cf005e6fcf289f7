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

#include "qcc/spectra.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "qcc/eigensolve.hpp"
#include "qcc/error.hpp"

namespace qcc {
namespace {

PauliOperator make_operator(PauliSum h, int n) {
  h.set_n_qubits(n);
  return PauliOperator(h);
}

}  // namespace

double default_deflation_alpha(const PauliSum& h) { return 2.0 * 2.0 * spectral_radius_bound(h); }

DeflatedObjective::DeflatedObjective(PauliSum h, StateVector ground, double alpha)
    : h_(std::move(h)),
      op_(make_operator(h_, ground.n_qubits())),
      ground_(std::move(ground)),
      alpha_(alpha),
      alpha_too_small_(alpha < 2.0 * spectral_radius_bound(h_)) {
  if (!h_.is_hermitian()) fail(ErrorCode::kNonHermitian, "Hamiltonian is not Hermitian");
  ground_.normalize();
}

double DeflatedObjective::operator()(const StateVector& psi) const {
  return op_.expectation(psi.amplitudes()).real() + alpha_ * ground_.fidelity(psi);
}

CVector DeflatedObjective::apply(const CVector& v) const {
  CVector out = op_.apply(v);
  out += alpha_ * ground_.amplitudes().dot(v) * ground_.amplitudes();
  return out;
}

DeflationResult optimize_deflated(const Ansatz& a, const DeflatedObjective& objective,
                                  const PauliSum& h, const VqeOptions& opts) {
  DeflationResult r;
  r.alpha_too_small = objective.alpha_too_small();
  const Objective f = [&](std::span<const double> t) { return objective(a.prepare(t)); };
  const Gradient g = [&](std::span<const double> t) {
    return analytic_gradient(a, t, [&](const CVector& v) { return objective.apply(v); });
  };
  std::vector<double> x0;
  if (opts.initial) {
    x0 = *opts.initial;
  } else {
    Rng init = Rng(opts.optimizer.seed).split(~std::uint64_t{0});
    x0 = initial_parameters(a, init);
  }
  OptimizerResult o = minimize(f, g, std::move(x0), opts.optimizer);
  r.vqe.best_params = o.best_params;
  r.vqe.best_energy = o.best_energy;
  r.vqe.final_params = o.final_params;
  r.vqe.trace = std::move(o.trace);
  r.vqe.evals = o.evals;
  r.vqe.converged = o.converged;
  const StateVector psi = a.prepare(r.vqe.best_params);
  r.vqe.final_estimate = {objective(psi), 0.0, 1};
  r.plain_energy = expectation(h, psi);
  r.overlap = objective.alpha() != 0.0 ? (objective(psi) - r.plain_energy) / objective.alpha() : 0.0;
  return r;
}

PauliSum folded_hamiltonian(const PauliSum& h, double alpha) {
  PauliSum shifted = h;
  shifted.add(PauliString{}, -alpha);
  return canonicalize(shifted * shifted);
}

std::vector<FoldedPoint> folded_spectrum_scan(const Ansatz& a, const PauliSum& h,
                                              const std::vector<double>& alphas,
                                              const VqeOptions& opts, int restarts) {
  require(restarts >= 1, ErrorCode::kInvalidArgument, "restarts must be positive");
  const PauliSum h2 = canonicalize(h * h);
  std::vector<FoldedPoint> out;
  Rng rng(opts.optimizer.seed);
  for (double alpha : alphas) {
    const PauliSum folded = folded_hamiltonian(h, alpha);
    FoldedPoint best{alpha, std::numeric_limits<double>::infinity(), 0.0, 0.0};
    for (int k = 0; k < restarts; ++k) {
      VqeOptions o = opts;
      std::vector<double> x0(static_cast<std::size_t>(a.n_params()));
      for (double& x : x0) x = rng.uniform(-std::numbers::pi, std::numbers::pi);
      o.initial = std::move(x0);
      const VqeResult r = optimize(a, folded, o);
      if (r.best_energy < best.folded_min) {
        const StateVector psi = a.prepare(r.best_params);
        best.folded_min = r.best_energy;
        best.energy = expectation(h, psi);
        best.variance = expectation(h2, psi) - best.energy * best.energy;
      }
    }
    out.push_back(best);
  }
  return out;
}

std::vector<double> folded_eigenvalues(const std::vector<FoldedPoint>& scan, double variance_tol,
                                       double merge_tol) {
  std::vector<double> e;
  for (const auto& p : scan) {
    if (p.variance < variance_tol) e.push_back(p.energy);
  }
  std::sort(e.begin(), e.end());
  std::vector<double> out;
  for (double v : e) {
    if (out.empty() || v - out.back() > merge_tol) out.push_back(v);
  }
  return out;
}

SubspaceProblem build_subspace(const StateVector& psi, const PauliSum& h,
                               const std::vector<PauliSum>& expansion,
                               std::vector<std::string> labels) {
  require(!expansion.empty(), ErrorCode::kInvalidArgument, "expansion set is empty");
  if (!h.is_hermitian()) fail(ErrorCode::kNonHermitian, "Hamiltonian is not Hermitian");
  const int n = psi.n_qubits();
  const PauliOperator op = make_operator(h, n);
  std::vector<CVector> phi;
  std::vector<CVector> hphi;
  for (const PauliSum& o : expansion) {
    phi.push_back(apply(o, psi).amplitudes());
    hphi.push_back(op.apply(phi.back()));
  }
  const auto m = static_cast<Eigen::Index>(expansion.size());
  SubspaceProblem p{CMatrix(m, m), CMatrix(m, m), std::move(labels)};
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) {
      p.h(i, j) = phi[i].dot(hphi[j]);
      p.s(i, j) = phi[i].dot(phi[j]);
    }
  }
  // Symmetrise away rounding.
  p.h = 0.5 * (p.h + p.h.adjoint()).eval();
  p.s = 0.5 * (p.s + p.s.adjoint()).eval();
  return p;
}

RVector solve_subspace(const SubspaceProblem& p, double s_cutoff) {
  Eigen::SelfAdjointEigenSolver<CMatrix> se(p.s);
  std::vector<Eigen::Index> keep;
  for (Eigen::Index k = 0; k < se.eigenvalues().size(); ++k) {
    if (se.eigenvalues()[k] > s_cutoff) keep.push_back(k);
  }
  if (keep.empty()) fail(ErrorCode::kDegenerateSubspace, "overlap matrix has no retained directions");
  CMatrix x(p.s.rows(), static_cast<Eigen::Index>(keep.size()));
  for (std::size_t c = 0; c < keep.size(); ++c) {
    x.col(static_cast<Eigen::Index>(c)) =
        se.eigenvectors().col(keep[c]) / std::sqrt(se.eigenvalues()[keep[c]]);
  }
  const CMatrix hp = x.adjoint() * p.h * x;
  Eigen::SelfAdjointEigenSolver<CMatrix> he(0.5 * (hp + hp.adjoint()), Eigen::EigenvaluesOnly);
  return he.eigenvalues();
}

RVector qse_solve(const StateVector& psi, const PauliSum& h,
                  const std::vector<PauliString>& expansion, double s_cutoff) {
  require(std::any_of(expansion.begin(), expansion.end(),
                      [](const PauliString& p) { return p.is_identity(); }),
          ErrorCode::kInvalidArgument, "expansion must contain the identity");
  std::vector<PauliSum> ops;
  std::vector<std::string> labels;
  for (const PauliString& p : expansion) {
    ops.emplace_back(p, 1.0, psi.n_qubits());
    labels.push_back(p.to_string());
  }
  return solve_subspace(build_subspace(psi, h, ops, std::move(labels)), s_cutoff);
}

std::vector<PauliString> single_qubit_expansion(int n_qubits) {
  std::vector<PauliString> out{PauliString{}};
  for (int q = 0; q < n_qubits; ++q) {
    for (Pauli p : {Pauli::X, Pauli::Y, Pauli::Z}) out.push_back(PauliString::single(q, p));
  }
  return out;
}

std::vector<PauliString> full_pauli_expansion(int n_qubits) {
  require(n_qubits <= 8, ErrorCode::kTooLarge, "full Pauli expansion limited to 8 qubits");
  std::vector<PauliString> out;
  const std::uint64_t total = std::uint64_t{1} << (2 * n_qubits);
  for (std::uint64_t k = 0; k < total; ++k) {
    PauliString p;
    for (int q = 0; q < n_qubits; ++q) p.set(q, static_cast<Pauli>((k >> (2 * q)) & 3));
    out.push_back(p);
  }
  return out;
}

RVector fermionic_qse(const StateVector& psi, const PauliSum& h, const EncodingScheme& scheme,
                      double s_cutoff) {
  std::vector<PauliSum> ops{PauliSum::identity(1.0, psi.n_qubits())};
  std::vector<std::string> labels{"1"};
  for (int i = 0; i < scheme.n_modes; ++i) {
    for (int j = 0; j < scheme.n_modes; ++j) {
      if (i == j) continue;
      const FermionOperator op{{{i, true}, {j, false}}, 1.0};
      ops.push_back(encode_operator(FermionSum(op), scheme));
      labels.push_back(op.label());
    }
  }
  return solve_subspace(build_subspace(psi, h, ops, std::move(labels)), s_cutoff);
}

}  // namespace qcc
