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

#include <string>
#include <vector>

#include "qcc/encoding.hpp"
#include "qcc/pauli.hpp"
#include "qcc/statevector.hpp"
#include "qcc/vqe.hpp"

namespace qcc {

/// 2 x (Gershgorin width): the default overlap penalty.
double default_deflation_alpha(const PauliSum& h);

/// <psi|H|psi> + alpha |<ground|psi>|^2. The overlap is an exact inner
/// product; on hardware it would come from a SWAP test.
class DeflatedObjective {
 public:
  DeflatedObjective(PauliSum h, StateVector ground, double alpha);

  double operator()(const StateVector& psi) const;
  /// Action of H + alpha |g><g| on a vector.
  CVector apply(const CVector& v) const;

  double alpha() const { return alpha_; }
  /// Set when alpha is below the Gershgorin width of H, in which case the
  /// penalised ground state may stay below the first excited state.
  bool alpha_too_small() const { return alpha_too_small_; }

 private:
  PauliSum h_;
  PauliOperator op_;
  StateVector ground_;
  double alpha_;
  bool alpha_too_small_;
};

/// VQE over the deflated objective; returns the result with energies of the
/// objective and `plain_energy` holding <H> at the final parameters.
struct DeflationResult {
  VqeResult vqe;
  double plain_energy = 0.0;
  double overlap = 0.0;  // |<ground|psi>|^2 at the final parameters
  bool alpha_too_small = false;
};
DeflationResult optimize_deflated(const Ansatz& a, const DeflatedObjective& objective,
                                  const PauliSum& h, const VqeOptions& opts);

/// (H - alpha I)^2, canonicalised.
PauliSum folded_hamiltonian(const PauliSum& h, double alpha);

struct FoldedPoint {
  double alpha = 0.0;
  double folded_min = 0.0;  // min <(H - alpha)^2> found
  double energy = 0.0;      // <H> at that state
  double variance = 0.0;    // <H^2> - <H>^2 at that state
};

/// Minimises the folded operator for each alpha with `restarts` random
/// starts of the ansatz (best kept).
std::vector<FoldedPoint> folded_spectrum_scan(const Ansatz& a, const PauliSum& h,
                                              const std::vector<double>& alphas,
                                              const VqeOptions& opts, int restarts = 3);

/// Energies of scan points whose state is an eigenstate (variance below
/// `variance_tol`), merged within `merge_tol`, ascending.
std::vector<double> folded_eigenvalues(const std::vector<FoldedPoint>& scan,
                                       double variance_tol = 1e-6, double merge_tol = 1e-4);

struct SubspaceProblem {
  CMatrix h;
  CMatrix s;
  std::vector<std::string> labels;
};

/// H_ij = <psi|O_i^dag H O_j|psi>, S_ij = <psi|O_i^dag O_j|psi>.
SubspaceProblem build_subspace(const StateVector& psi, const PauliSum& h,
                               const std::vector<PauliSum>& expansion,
                               std::vector<std::string> labels = {});

/// Generalised eigenvalues by canonical orthogonalisation: S eigenvectors with
/// eigenvalue below `s_cutoff` are dropped. Ascending.
RVector solve_subspace(const SubspaceProblem& p, double s_cutoff = 1e-8);

/// Quantum subspace expansion over Pauli strings; must include the identity.
RVector qse_solve(const StateVector& psi, const PauliSum& h,
                  const std::vector<PauliString>& expansion, double s_cutoff = 1e-8);

/// Identity plus all single-qubit X, Y, Z.
std::vector<PauliString> single_qubit_expansion(int n_qubits);
/// All 4^n strings.
std::vector<PauliString> full_pauli_expansion(int n_qubits);

/// Identity plus the encoded one-body excitations a+_i a_j (i != j).
RVector fermionic_qse(const StateVector& psi, const PauliSum& h, const EncodingScheme& scheme,
                      double s_cutoff = 1e-8);

}  // namespace qcc
