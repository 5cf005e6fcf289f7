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

#include <vector>

#include "qcc/encoding.hpp"
#include "qcc/fermion.hpp"
#include "qcc/io.hpp"
#include "qcc/pauli.hpp"

namespace qcc {

struct NaturalOrbitals {
  RVector noons;     // descending
  RMatrix rotation;  // column k is natural orbital k in the input basis
};

/// Eigendecomposition of a symmetric 1-RDM with occupations sorted
/// descending. Each column's largest component is made positive.
NaturalOrbitals diagonalize_1rdm(const RMatrix& rdm);

struct ActiveSpace {
  std::vector<int> frozen_occupied;
  std::vector<int> removed_virtual;
  std::vector<int> retained;
  double core_shift = 0.0;  // filled in by freeze_reduce
};

inline constexpr double kDefaultNoonLower = 1e-4;
inline constexpr double kDefaultNoonUpper = 1.99;

/// Spin-summed thresholds: NOON > upper is frozen, NOON < lower is removed.
ActiveSpace select_active_space(const RVector& noons, double lower = kDefaultNoonLower,
                                double upper = kDefaultNoonUpper);

/// Integrals in a rotated spatial basis: new orbital k = sum_i R(i,k) old i.
SpatialIntegrals rotate_orbitals(const SpatialIntegrals& s, const RMatrix& rotation);

/// Restricts to the retained spatial orbitals (both spins). Frozen orbitals
/// are doubly occupied: their mean field is folded into the one-body terms
/// and their energy into the core constant. Removed virtuals are dropped.
/// Sets space.core_shift to the change in the constant term.
MolecularIntegrals freeze_reduce(const MolecularIntegrals& ints, ActiveSpace& space);
MolecularIntegrals freeze_reduce(const MolecularIntegrals& ints, const ActiveSpace& space);

struct SymmetrySector {
  int z_total = 1;  // eigenvalue substituted for Z on qubit M-1
  int z_up = 1;     // eigenvalue substituted for Z on qubit M/2-1
};

/// ((-1)^N, (-1)^N_up).
SymmetrySector sector_for(int n_electrons, int n_up);

/// Qubits whose Z value is fixed by the two parities: {M/2-1, M-1}.
std::pair<int, int> tapered_qubits(int n_modes);

/// Replaces Z on qubits M-1 and M/2-1 by the sector eigenvalues and removes
/// both qubits, shifting higher indices down.
PauliSum taper_two_qubits(const PauliSum& h, const EncodingScheme& scheme,
                          const SymmetrySector& sector);

/// Drops the two tapered qubits from an encoded basis state.
std::uint64_t taper_bitstring(std::uint64_t bits, int n_modes);

}  // namespace qcc
