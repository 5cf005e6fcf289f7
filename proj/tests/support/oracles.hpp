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

// Independent reference implementations used only by tests. They are built
// from first principles (Kronecker products, explicit occupation-basis
// matrices, eigendecompositions) and share no code paths with the library
// kernels they check.

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using RVec = Eigen::VectorXd;

inline CMat pauli2x2(char c) {
  CMat m(2, 2);
  switch (c) {
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, cplx(0, -1), cplx(0, 1), 0; break;
    case 'Z': m << 1, 0, 0, -1; break;
    default: m << 1, 0, 0, 1; break;
  }
  return m;
}

inline CMat kron(const CMat& a, const CMat& b) {
  CMat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

/// letters[q] is the Pauli on qubit q; qubit 0 is the rightmost factor.
inline CMat pauli_kron(const std::vector<char>& letters) {
  CMat m = CMat::Identity(1, 1);
  for (int q = static_cast<int>(letters.size()) - 1; q >= 0; --q) {
    m = kron(m, pauli2x2(letters[q]));
  }
  return m;
}

/// Annihilator a_p on M modes in the occupation basis, built entry by entry
/// from a_p|f> = delta(f_p,1) (-1)^{sum_{i<p} f_i} |f ^ (1<<p)>.
inline CMat occupation_annihilator(int p, int m) {
  const std::uint64_t dim = std::uint64_t{1} << m;
  CMat a = CMat::Zero(dim, dim);
  for (std::uint64_t f = 0; f < dim; ++f) {
    if (!((f >> p) & 1)) continue;
    int parity = 0;
    for (int i = 0; i < p; ++i) parity += (f >> i) & 1;
    a(f ^ (std::uint64_t{1} << p), f) = (parity % 2) ? -1.0 : 1.0;
  }
  return a;
}

inline RVec sorted_eigenvalues(const CMat& h) {
  Eigen::SelfAdjointEigenSolver<CMat> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

/// exp(-i t H) for Hermitian H by eigendecomposition.
inline CMat expm_hermitian(const CMat& h, double t) {
  Eigen::SelfAdjointEigenSolver<CMat> es(h);
  CVec phases(es.eigenvalues().size());
  for (Eigen::Index k = 0; k < phases.size(); ++k) {
    phases[k] = std::exp(cplx(0.0, -t * es.eigenvalues()[k]));
  }
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

/// exp(-tau H) for Hermitian H by eigendecomposition.
inline CMat expm_imag(const CMat& h, double tau) {
  Eigen::SelfAdjointEigenSolver<CMat> es(h);
  RVec w = (-tau * es.eigenvalues().array()).exp();
  return es.eigenvectors() * w.cast<cplx>().asDiagonal() * es.eigenvectors().adjoint();
}

inline CVec random_state(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  CVec v(Eigen::Index{1} << n);
  for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = cplx(g(rng), g(rng));
  return v.normalized();
}

/// Single-qubit depolarising-type Pauli channel acting on qubit q of an
/// n-qubit density matrix: rho -> (1-p) rho + p/3 (X rho X + Y rho Y + Z rho Z).
inline CMat pauli_channel_1q(const CMat& rho, int q, int n, double p) {
  CMat out = (1.0 - p) * rho;
  for (char c : {'X', 'Y', 'Z'}) {
    std::vector<char> letters(n, 'I');
    letters[q] = c;
    const CMat P = pauli_kron(letters);
    out += (p / 3.0) * P * rho * P.adjoint();
  }
  return out;
}

/// Two-qubit channel: with probability p one of the 15 non-identity Paulis on
/// (q0, q1), uniformly.
inline CMat pauli_channel_2q(const CMat& rho, int q0, int q1, int n, double p) {
  CMat out = (1.0 - p) * rho;
  const char L[4] = {'I', 'X', 'Y', 'Z'};
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      if (a == 0 && b == 0) continue;
      std::vector<char> letters(n, 'I');
      letters[q0] = L[a];
      letters[q1] = L[b];
      const CMat P = pauli_kron(letters);
      out += (p / 15.0) * P * rho * P.adjoint();
    }
  }
  return out;
}

}  // namespace oracle
