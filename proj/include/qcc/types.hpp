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

#include <complex>

#include <Eigen/Dense>

namespace qcc {

using cplx = std::complex<double>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using RVector = Vector<double>;
using RMatrix = Matrix<double>;
using CVector = Vector<cplx>;
using CMatrix = Matrix<cplx>;

inline constexpr cplx kI{0.0, 1.0};

/// Largest register for which dense 2^n x 2^n matrices are built.
inline constexpr int kDenseQubitLimit = 14;
/// Largest statevector register.
inline constexpr int kStateQubitLimit = 24;

/// Chemical accuracy in Hartree.
inline constexpr double kChemicalAccuracy = 1.6e-3;

}  // namespace qcc
