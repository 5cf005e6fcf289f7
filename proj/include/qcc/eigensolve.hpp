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

#include <cstdint>
#include <vector>

#include "qcc/pauli.hpp"
#include "qcc/statevector.hpp"
#include "qcc/types.hpp"

namespace qcc {

/// Register widths up to this size are diagonalised densely; wider ones use
/// restarted Lanczos.
inline constexpr int kDenseEigenQubits = 10;

struct Eigenpairs {
  RVector values;   // ascending
  CMatrix vectors;  // column k pairs with values[k]; empty if not requested
};

/// k lowest eigenvalues of a Hermitian operator on n_qubits (defaults to the
/// operator's own width).
Eigenpairs exact_eigensolve(const PauliSum& h, int k, bool want_vectors = false,
                            int n_qubits = 0);

/// Lowest eigenpair as a state.
std::pair<double, StateVector> ground_state(const PauliSum& h, int n_qubits = 0);

/// Restriction of h to the span of the listed computational basis states.
CMatrix restricted_matrix(const PauliSum& h, const std::vector<std::uint64_t>& basis);

/// Eigenpairs of h within span(basis). Vectors are expressed in the listed
/// basis (row i <-> basis[i]).
Eigenpairs sector_eigensolve(const PauliSum& h, const std::vector<std::uint64_t>& basis,
                             int k, bool want_vectors = false);

/// Basis states of `n_bits` with popcount(bits & mask_a) == count_a and
/// popcount(bits & mask_b) == count_b.
std::vector<std::uint64_t> occupation_sector(int n_bits, std::uint64_t mask_a, int count_a,
                                             std::uint64_t mask_b, int count_b);

/// Gershgorin-style bound: sum of |coeff| over non-identity terms.
double spectral_radius_bound(const PauliSum& h);

}  // namespace qcc
