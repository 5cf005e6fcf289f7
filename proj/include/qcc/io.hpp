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

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qcc/fermion.hpp"
#include "qcc/pauli.hpp"
#include "qcc/types.hpp"

namespace qcc {

/// Integrals over spatial orbitals as stored in an FCIDUMP file.
struct SpatialIntegrals {
  int n_orbitals = 0;
  int n_electrons = 0;
  int ms2 = 0;
  double core_energy = 0.0;
  RMatrix h1;               // n x n
  std::vector<double> eri;  // chemists' (ij|kl), row-major n^4

  double& eri_at(int i, int j, int k, int l) {
    const std::size_t n = n_orbitals;
    return eri[((i * n + j) * n + k) * n + l];
  }
  double eri_at(int i, int j, int k, int l) const {
    const std::size_t n = n_orbitals;
    return eri[((i * n + j) * n + k) * n + l];
  }
};

/// Parses FCIDUMP text (namelist header, then "value i j k l" records with
/// 1-based indices). Equivalent records under the 8-fold permutation
/// symmetry must agree; a conflict raises kSymmetryViolation.
SpatialIntegrals parse_fcidump_spatial(std::string_view text);

MolecularIntegrals parse_fcidump(std::string_view text,
                                 SpinOrdering ordering = SpinOrdering::kBlocked);

MolecularIntegrals to_spin_orbitals(const SpatialIntegrals& s,
                                    SpinOrdering ordering = SpinOrdering::kBlocked);

/// Recovers spatial integrals from the spin-up block.
SpatialIntegrals to_spatial(const MolecularIntegrals& ints);

/// Writes unique records only (i>=j, k>=l, ij>=kl), full precision.
std::string emit_fcidump(const SpatialIntegrals& s);

std::string read_text_file(const std::filesystem::path& path);

/// Square matrix from whitespace-separated rows; '#' starts a comment.
RMatrix parse_matrix(std::string_view text);

/// Directory holding the shipped molecule files.
std::filesystem::path fixture_dir();

struct FixtureInfo {
  std::string name;
  std::string basis;
  double bond_length = 0.0;
  int n_orbitals = 0;
  int n_electrons = 0;
  double e_hf = 0.0;
  std::optional<double> e_fci;
  std::optional<double> e_cisd;
  bool has_rdm = false;
};

std::vector<FixtureInfo> list_fixtures();
FixtureInfo fixture_info(const std::string& name);
SpatialIntegrals load_fixture(const std::string& name);
/// Spin-summed CISD 1-RDM shipped next to some fixtures.
RMatrix load_fixture_rdm(const std::string& name);

/// JSON term list [{"string": "X0 Z1", "re": .., "im": ..}, ...].
std::string pauli_sum_to_json(const PauliSum& s);

}  // namespace qcc
