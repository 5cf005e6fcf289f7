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

#include "qcc/reduction.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <numeric>
#include <set>

#include "qcc/error.hpp"

namespace qcc {

NaturalOrbitals diagonalize_1rdm(const RMatrix& rdm) {
  require(rdm.rows() == rdm.cols() && rdm.rows() > 0, ErrorCode::kDimensionMismatch,
          "1-RDM must be square and non-empty");
  require((rdm - rdm.transpose()).cwiseAbs().maxCoeff() <= 1e-8, ErrorCode::kNotSymmetric,
          "1-RDM is not symmetric");
  const int n = static_cast<int>(rdm.rows());
  Eigen::SelfAdjointEigenSolver<RMatrix> es(0.5 * (rdm + rdm.transpose()));
  RMatrix vecs = es.eigenvectors();
  std::vector<int> home(n);
  for (int k = 0; k < n; ++k) {
    Eigen::Index arg;
    vecs.col(k).cwiseAbs().maxCoeff(&arg);
    home[k] = static_cast<int>(arg);
    if (vecs(arg, k) < 0) vecs.col(k) = -vecs.col(k);
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  const RVector& w = es.eigenvalues();
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    if (std::abs(w[a] - w[b]) > 1e-12) return w[a] > w[b];
    return home[a] < home[b];
  });
  NaturalOrbitals out;
  out.noons.resize(n);
  out.rotation.resize(n, n);
  for (int k = 0; k < n; ++k) {
    out.noons[k] = w[order[k]];
    out.rotation.col(k) = vecs.col(order[k]);
  }
  return out;
}

ActiveSpace select_active_space(const RVector& noons, double lower, double upper) {
  require(0.0 <= lower && lower < upper && upper <= 2.0, ErrorCode::kInvalidArgument,
          "thresholds must satisfy 0 <= lower < upper <= 2");
  ActiveSpace s;
  for (int k = 0; k < noons.size(); ++k) {
    if (noons[k] > upper) {
      s.frozen_occupied.push_back(k);
    } else if (noons[k] < lower) {
      s.removed_virtual.push_back(k);
    } else {
      s.retained.push_back(k);
    }
  }
  require(!s.retained.empty(), ErrorCode::kEmptyActiveSpace, "no orbitals retained");
  return s;
}

SpatialIntegrals rotate_orbitals(const SpatialIntegrals& s, const RMatrix& r) {
  const int n = s.n_orbitals;
  require(r.rows() == n && r.cols() == n, ErrorCode::kDimensionMismatch,
          "rotation must be n x n");
  require((r.transpose() * r - RMatrix::Identity(n, n)).cwiseAbs().maxCoeff() < 1e-8,
          ErrorCode::kInvalidArgument, "rotation is not orthogonal");
  SpatialIntegrals out = s;
  out.h1 = r.transpose() * s.h1 * r;
  // Four quarter transformations, one index at a time.
  const std::size_t n2 = static_cast<std::size_t>(n) * n;
  std::vector<double> a = s.eri, b(a.size());
  for (int pass = 0; pass < 4; ++pass) {
    // Transform the leading index and rotate it to the back.
    for (int p = 0; p < n; ++p) {
      for (std::size_t rest = 0; rest < n2 * n; ++rest) {
        double acc = 0.0;
        for (int i = 0; i < n; ++i) acc += r(i, p) * a[i * n2 * n + rest];
        b[rest * n + p] = acc;
      }
    }
    std::swap(a, b);
  }
  out.eri = std::move(a);
  return out;
}

namespace {

void check_space(const ActiveSpace& space, const MolecularIntegrals& ints) {
  const int n = ints.n_spatial();
  std::vector<int> seen(n, 0);
  for (const auto* set : {&space.frozen_occupied, &space.removed_virtual, &space.retained}) {
    for (int k : *set) {
      require(k >= 0 && k < n, ErrorCode::kInconsistentSpace,
              "orbital index " + std::to_string(k) + " out of range");
      require(++seen[k] == 1, ErrorCode::kInconsistentSpace,
              "orbital " + std::to_string(k) + " listed twice");
    }
  }
  for (int k = 0; k < n; ++k) {
    require(seen[k] == 1, ErrorCode::kInconsistentSpace,
            "orbital " + std::to_string(k) + " not assigned");
  }
  const int nf = static_cast<int>(space.frozen_occupied.size());
  const int na = static_cast<int>(space.retained.size());
  require(ints.n_up >= nf && ints.n_down() >= nf, ErrorCode::kInconsistentSpace,
          "more frozen orbitals than electrons of either spin");
  require(ints.n_up - nf <= na && ints.n_down() - nf <= na, ErrorCode::kInconsistentSpace,
          "active electrons do not fit in the retained orbitals");
}

}  // namespace

MolecularIntegrals freeze_reduce(const MolecularIntegrals& ints, ActiveSpace& space) {
  check_space(space, ints);
  const int n = ints.n_spatial();
  const SpinOrdering ord = ints.ordering;
  std::vector<int> frozen;
  for (int k : space.frozen_occupied) {
    for (int sp = 0; sp < 2; ++sp) frozen.push_back(spin_orbital_index(k, sp, n, ord));
  }
  const int na = static_cast<int>(space.retained.size());
  std::vector<int> keep(2 * na);
  for (int i = 0; i < na; ++i) {
    for (int sp = 0; sp < 2; ++sp) {
      keep[spin_orbital_index(i, sp, na, ord)] =
          spin_orbital_index(space.retained[i], sp, n, ord);
    }
  }

  MolecularIntegrals out;
  out.n_spin_orbitals = 2 * na;
  out.n_electrons = ints.n_electrons - static_cast<int>(frozen.size());
  out.n_up = ints.n_up - static_cast<int>(space.frozen_occupied.size());
  out.ordering = ord;
  // Energy of the frozen determinant (without the original constant).
  double shift = -ints.core_energy + determinant_energy(ints, frozen);
  out.core_energy = ints.core_energy + shift;
  const int m = out.n_spin_orbitals;
  out.h_one = RMatrix::Zero(m, m);
  for (int p = 0; p < m; ++p) {
    for (int q = 0; q < m; ++q) {
      double v = ints.h_one(keep[p], keep[q]);
      for (int f : frozen) {
        v += ints.two(keep[p], f, f, keep[q]) - ints.two(keep[p], f, keep[q], f);
      }
      out.h_one(p, q) = v;
    }
  }
  out.h_two.assign(static_cast<std::size_t>(m) * m * m * m, 0.0);
  for (int p = 0; p < m; ++p) {
    for (int q = 0; q < m; ++q) {
      for (int r = 0; r < m; ++r) {
        for (int s = 0; s < m; ++s) {
          out.two(p, q, r, s) = ints.two(keep[p], keep[q], keep[r], keep[s]);
        }
      }
    }
  }
  space.core_shift = shift;
  return out;
}

MolecularIntegrals freeze_reduce(const MolecularIntegrals& ints, const ActiveSpace& space) {
  ActiveSpace copy = space;
  return freeze_reduce(ints, copy);
}

SymmetrySector sector_for(int n_electrons, int n_up) {
  return {n_electrons % 2 ? -1 : 1, n_up % 2 ? -1 : 1};
}

std::pair<int, int> tapered_qubits(int n_modes) { return {n_modes / 2 - 1, n_modes - 1}; }

PauliSum taper_two_qubits(const PauliSum& h, const EncodingScheme& scheme,
                          const SymmetrySector& sector) {
  const int m = scheme.n_modes;
  require(m >= 2 && m % 2 == 0, ErrorCode::kInvalidArgument,
          "tapering needs an even number of modes");
  require(std::abs(sector.z_total) == 1 && std::abs(sector.z_up) == 1,
          ErrorCode::kInvalidArgument, "sector eigenvalues must be +1 or -1");
  require(scheme.variant != Encoding::kJordanWigner, ErrorCode::kInvalidArgument,
          "Jordan-Wigner qubits do not store parities");
  const auto [qa, qb] = tapered_qubits(m);
  // The two qubits must hold the spin-up parity and the total parity.
  const BitMatrix& beta = encoding_matrix(scheme);
  const std::uint64_t all = (m == 64) ? ~0ULL : ((1ULL << m) - 1);
  const std::uint64_t up_block = (1ULL << (m / 2)) - 1;
  require(beta.rows[qb] == all && beta.rows[qa] == up_block, ErrorCode::kInvalidArgument,
          std::string("encoding '") + std::string(to_string(scheme.variant)) +
              "' at M=" + std::to_string(m) + " does not store the spin-up and total parities");
  require(h.n_qubits() <= m, ErrorCode::kDimensionMismatch, "operator wider than the scheme");

  auto squeeze = [&](std::uint64_t v) {
    std::uint64_t out = 0;
    int dst = 0;
    for (int q = 0; q < m; ++q) {
      if (q == qa || q == qb) continue;
      out |= ((v >> q) & 1) << dst++;
    }
    return out;
  };
  PauliSum out(m - 2);
  for (const auto& [p, c] : h.terms()) {
    for (int q : {qa, qb}) {
      require(!((p.x >> q) & 1), ErrorCode::kNotSymmetric,
              "term " + p.to_string() + " flips tapered qubit " + std::to_string(q));
    }
    double factor = 1.0;
    if ((p.z >> qa) & 1) factor *= sector.z_up;
    if ((p.z >> qb) & 1) factor *= sector.z_total;
    out.add(PauliString{squeeze(p.x), squeeze(p.z)}, c * factor);
  }
  out.prune();
  return out;
}

std::uint64_t taper_bitstring(std::uint64_t bits, int n_modes) {
  const auto [qa, qb] = tapered_qubits(n_modes);
  std::uint64_t out = 0;
  int dst = 0;
  for (int q = 0; q < n_modes; ++q) {
    if (q == qa || q == qb) continue;
    out |= ((bits >> q) & 1) << dst++;
  }
  return out;
}

}  // namespace qcc
