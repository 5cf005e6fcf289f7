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

#include "qcc/types.hpp"

namespace qcc {

/// 2^n complex amplitudes. Basis index bit q is the occupation of qubit q,
/// so qubit 0 is the least-significant (rightmost) position of |q_{n-1}..q_0>.
class StateVector {
 public:
  StateVector() = default;

  /// |0...0> on n qubits.
  explicit StateVector(int n_qubits);

  /// Takes ownership of the amplitudes; size must be a power of two.
  explicit StateVector(CVector amplitudes);

  static StateVector basis_state(int n_qubits, std::uint64_t index);

  int n_qubits() const noexcept { return n_; }
  Eigen::Index dim() const noexcept { return amps_.size(); }

  const CVector& amplitudes() const noexcept { return amps_; }
  CVector& amplitudes() noexcept { return amps_; }

  cplx operator[](Eigen::Index i) const { return amps_[i]; }
  cplx& operator[](Eigen::Index i) { return amps_[i]; }

  double norm() const { return amps_.norm(); }

  /// Rescales to unit norm and returns the norm before rescaling.
  double normalize();

  /// <this|other>
  cplx inner(const StateVector& other) const;

  /// |<this|other>|^2
  double fidelity(const StateVector& other) const;

  RVector probabilities() const;

  /// Marginal distribution over the listed qubits; outcome bit k of the
  /// returned index corresponds to qubits[k].
  RVector marginal(const std::vector<int>& qubits) const;

 private:
  CVector amps_;
  int n_ = 0;
};

}  // namespace qcc
