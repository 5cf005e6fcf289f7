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

#include "qcc/statevector.hpp"

#include <bit>

#include "qcc/error.hpp"

namespace qcc {

StateVector::StateVector(int n_qubits) : n_(n_qubits) {
  require(n_qubits >= 0 && n_qubits <= kStateQubitLimit, ErrorCode::kTooLarge,
          "statevector limited to " + std::to_string(kStateQubitLimit) +
              " qubits, got " + std::to_string(n_qubits));
  amps_ = CVector::Zero(Eigen::Index{1} << n_qubits);
  amps_[0] = 1.0;
}

StateVector::StateVector(CVector amplitudes) : amps_(std::move(amplitudes)) {
  const auto size = static_cast<std::uint64_t>(amps_.size());
  require(size > 0 && std::has_single_bit(size), ErrorCode::kDimensionMismatch,
          "amplitude count must be a power of two");
  n_ = std::countr_zero(size);
  require(n_ <= kStateQubitLimit, ErrorCode::kTooLarge, "register too large");
}

StateVector StateVector::basis_state(int n_qubits, std::uint64_t index) {
  StateVector psi(n_qubits);
  require(index < static_cast<std::uint64_t>(psi.dim()),
          ErrorCode::kIndexOutOfRange, "basis index out of range");
  psi.amps_[0] = 0.0;
  psi.amps_[static_cast<Eigen::Index>(index)] = 1.0;
  return psi;
}

double StateVector::normalize() {
  const double nrm = amps_.norm();
  if (nrm > 0.0) amps_ /= nrm;
  return nrm;
}

cplx StateVector::inner(const StateVector& other) const {
  require(dim() == other.dim(), ErrorCode::kDimensionMismatch,
          "inner product of different registers");
  return amps_.dot(other.amps_);
}

double StateVector::fidelity(const StateVector& other) const {
  return std::norm(inner(other));
}

RVector StateVector::probabilities() const { return amps_.cwiseAbs2(); }

RVector StateVector::marginal(const std::vector<int>& qubits) const {
  for (int q : qubits) {
    require(q >= 0 && q < n_, ErrorCode::kBadTarget, "marginal qubit out of range");
  }
  RVector out = RVector::Zero(Eigen::Index{1} << qubits.size());
  for (Eigen::Index i = 0; i < dim(); ++i) {
    Eigen::Index key = 0;
    for (std::size_t k = 0; k < qubits.size(); ++k) {
      key |= ((i >> qubits[k]) & 1) << k;
    }
    out[key] += std::norm(amps_[i]);
  }
  return out;
}

}  // namespace qcc
