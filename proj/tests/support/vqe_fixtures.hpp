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

#include <algorithm>
#include <string>
#include <vector>

#include "molecules.hpp"
#include "qcc/vqe.hpp"

namespace testmol {

/// Occupied and virtual spin orbitals of the aufbau reference.
inline std::pair<std::vector<int>, std::vector<int>> occ_virt(const qcc::MolecularIntegrals& ints) {
  const std::vector<int> occ = ints.hf_occupation();
  std::vector<int> virt;
  for (int p = 0; p < ints.n_spin_orbitals; ++p) {
    if (std::find(occ.begin(), occ.end(), p) == occ.end()) virt.push_back(p);
  }
  return {occ, virt};
}

struct UccsdProblem {
  qcc::MolecularIntegrals ints;
  qcc::PauliSum h;
  qcc::Ansatz ansatz;
};

inline UccsdProblem uccsd_problem(const std::string& fixture, qcc::Encoding enc,
                                  int trotter_steps = 1,
                                  qcc::SpinOrdering ord = qcc::SpinOrdering::kBlocked) {
  UccsdProblem p{load(fixture, ord), {}, {}};
  p.h = qubit_hamiltonian(p.ints, enc);
  const auto [occ, virt] = occ_virt(p.ints);
  const auto gens = qcc::uccsd_generators(p.ints.n_spin_orbitals, occ, virt, true, ord);
  p.ansatz = qcc::build_uccsd(gens, {enc, p.ints.n_spin_orbitals}, trotter_steps,
                              p.ints.hf_bits());
  return p;
}

}  // namespace testmol
