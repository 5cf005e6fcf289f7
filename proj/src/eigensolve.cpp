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

#include "qcc/eigensolve.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <bit>
#include <cmath>
#include <unordered_map>

#include "qcc/error.hpp"

namespace qcc {
namespace {

Eigenpairs dense_solve(const CMatrix& m, int k, bool want_vectors) {
  Eigenpairs out;
  const bool real = m.size() == 0 || m.imag().cwiseAbs().maxCoeff() < 1e-14;
  if (real) {
    Eigen::SelfAdjointEigenSolver<RMatrix> es(
        m.real(), want_vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
    out.values = es.eigenvalues().head(k);
    if (want_vectors) out.vectors = es.eigenvectors().leftCols(k).cast<cplx>();
  } else {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(
        m, want_vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
    out.values = es.eigenvalues().head(k);
    if (want_vectors) out.vectors = es.eigenvectors().leftCols(k);
  }
  return out;
}

// Lowest eigenpair orthogonal to `locked`, by restarted Lanczos with full
// reorthogonalisation inside each restart cycle.
std::pair<double, CVector> lanczos_lowest(const PauliOperator& op, Eigen::Index dim,
                                          const std::vector<CVector>& locked,
                                          std::uint64_t seed) {
  const std::size_t bytes = static_cast<std::size_t>(dim) * sizeof(cplx);
  const int krylov =
      static_cast<int>(std::clamp<std::size_t>((std::size_t{1} << 30) / bytes, 4, 60));
  auto project_out = [&](CVector& v) {
    for (const auto& l : locked) v -= l * l.dot(v);
  };
  // Deterministic start vector that overlaps every basis state.
  CVector v(dim);
  std::uint64_t s = seed | 1;
  for (Eigen::Index i = 0; i < dim; ++i) {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    v[i] = cplx(double(s % 1000003) / 1000003.0 - 0.5, 0.0);
  }
  project_out(v);
  v.normalize();

  double theta = 0.0;
  for (int restart = 0; restart < 500; ++restart) {
    std::vector<CVector> basis{v};
    std::vector<double> alpha, beta;
    CVector w;
    for (int j = 0; j < krylov; ++j) {
      op.apply(basis[j], w);
      project_out(w);
      const double a = basis[j].dot(w).real();
      alpha.push_back(a);
      for (const auto& b : basis) w -= b * b.dot(w);
      for (const auto& b : basis) w -= b * b.dot(w);
      const double nb = w.norm();
      if (nb < 1e-12 || j + 1 == krylov || j + 1 == dim) break;
      beta.push_back(nb);
      basis.push_back(w / nb);
    }
    const int m = static_cast<int>(alpha.size());
    RMatrix t = RMatrix::Zero(m, m);
    for (int j = 0; j < m; ++j) {
      t(j, j) = alpha[j];
      if (j + 1 < m) t(j, j + 1) = t(j + 1, j) = beta[j];
    }
    Eigen::SelfAdjointEigenSolver<RMatrix> es(t);
    theta = es.eigenvalues()[0];
    CVector ritz = CVector::Zero(dim);
    for (int j = 0; j < m; ++j) ritz += es.eigenvectors()(j, 0) * basis[j];
    project_out(ritz);
    ritz.normalize();
    CVector r;
    op.apply(ritz, r);
    project_out(r);
    const double resid = (r - theta * ritz).norm();
    v = ritz;
    if (resid < 1e-9 * std::max(1.0, std::abs(theta)) || m >= dim) break;
  }
  return {theta, v};
}

}  // namespace

Eigenpairs exact_eigensolve(const PauliSum& h, int k, bool want_vectors, int n_qubits) {
  require(h.is_hermitian(1e-10), ErrorCode::kNonHermitian, "eigensolve needs a Hermitian operator");
  const int n = std::max({n_qubits, h.n_qubits(), 1});
  require(n <= kStateQubitLimit, ErrorCode::kTooLarge,
          "eigensolve limited to " + std::to_string(kStateQubitLimit) + " qubits");
  const Eigen::Index dim = Eigen::Index{1} << n;
  require(k >= 1 && k <= dim, ErrorCode::kInvalidArgument, "eigenvalue count out of range");
  if (n <= kDenseEigenQubits) return dense_solve(to_matrix(h, n), k, want_vectors);

  const PauliOperator op(h);
  std::vector<CVector> locked;
  Eigenpairs out;
  out.values.resize(k);
  for (int j = 0; j < k; ++j) {
    auto [val, vec] = lanczos_lowest(op, dim, locked, 0x9e3779b97f4a7c15ULL + j);
    out.values[j] = val;
    locked.push_back(std::move(vec));
  }
  // Locking can return values slightly out of order near degeneracies.
  std::vector<int> order(k);
  for (int j = 0; j < k; ++j) order[j] = j;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return out.values[a] < out.values[b]; });
  RVector sorted(k);
  for (int j = 0; j < k; ++j) sorted[j] = out.values[order[j]];
  out.values = sorted;
  if (want_vectors) {
    out.vectors.resize(dim, k);
    for (int j = 0; j < k; ++j) out.vectors.col(j) = locked[order[j]];
  }
  return out;
}

std::pair<double, StateVector> ground_state(const PauliSum& h, int n_qubits) {
  const int n = std::max({n_qubits, h.n_qubits(), 1});
  Eigenpairs e = exact_eigensolve(h, 1, true, n);
  return {e.values[0], StateVector(CVector(e.vectors.col(0)))};
}

CMatrix restricted_matrix(const PauliSum& h, const std::vector<std::uint64_t>& basis) {
  const Eigen::Index d = static_cast<Eigen::Index>(basis.size());
  std::unordered_map<std::uint64_t, Eigen::Index> index;
  index.reserve(basis.size() * 2);
  for (Eigen::Index i = 0; i < d; ++i) index.emplace(basis[i], i);
  CMatrix m = CMatrix::Zero(d, d);
  for (const auto& [p, c] : h.terms()) {
    const int y = std::popcount(p.x & p.z) & 3;
    const cplx phase = c * std::pow(cplx(0, 1), y);
    for (Eigen::Index col = 0; col < d; ++col) {
      const std::uint64_t b = basis[col];
      const auto it = index.find(b ^ p.x);
      if (it == index.end()) continue;
      const double sign = (std::popcount(b & p.z) & 1) ? -1.0 : 1.0;
      m(it->second, col) += phase * sign;
    }
  }
  return m;
}

Eigenpairs sector_eigensolve(const PauliSum& h, const std::vector<std::uint64_t>& basis,
                             int k, bool want_vectors) {
  require(!basis.empty(), ErrorCode::kInvalidArgument, "empty sector");
  require(k >= 1 && k <= static_cast<int>(basis.size()), ErrorCode::kInvalidArgument,
          "eigenvalue count out of range");
  require(h.is_hermitian(1e-10), ErrorCode::kNonHermitian, "eigensolve needs a Hermitian operator");
  return dense_solve(restricted_matrix(h, basis), k, want_vectors);
}

std::vector<std::uint64_t> occupation_sector(int n_bits, std::uint64_t mask_a, int count_a,
                                             std::uint64_t mask_b, int count_b) {
  require(n_bits >= 0 && n_bits <= 30, ErrorCode::kTooLarge, "sector enumeration limited to 30 bits");
  std::vector<std::uint64_t> out;
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << n_bits); ++b) {
    if (std::popcount(b & mask_a) == count_a && std::popcount(b & mask_b) == count_b) {
      out.push_back(b);
    }
  }
  return out;
}

double spectral_radius_bound(const PauliSum& h) { return h.one_norm(false); }

}  // namespace qcc
