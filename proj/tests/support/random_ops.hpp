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

#include <random>

#include "qcc/fermion.hpp"

namespace oracle {

/// Random Hermitian, particle-number-conserving fermionic sum on m modes.
inline qcc::FermionSum random_number_conserving(int m, std::mt19937_64& rng,
                                                int n_terms = 6) {
  std::normal_distribution<double> g;
  qcc::FermionSum t;
  for (int k = 0; k < n_terms; ++k) {
    qcc::FermionOperator op;
    op.coeff = {g(rng), g(rng)};
    if (rng() % 2) {
      op.factors = {{int(rng() % m), true}, {int(rng() % m), false}};
    } else {
      op.factors = {{int(rng() % m), true}, {int(rng() % m), true},
                    {int(rng() % m), false}, {int(rng() % m), false}};
    }
    t.add(op);
  }
  return qcc::normal_order(t + t.adjoint());
}

}  // namespace oracle
