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
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qcc/types.hpp"

namespace qcc {

/// How spatial orbital k and spin s map to a spin-orbital index.
/// kBlocked: up k -> k, down k -> k + M/2.  kInterleaved: up 2k, down 2k+1.
enum class SpinOrdering { kBlocked, kInterleaved };

int spin_orbital_index(int spatial, int spin, int n_spatial, SpinOrdering ord);
/// 0 for spin up, 1 for spin down.
int spin_of(int spin_orbital, int n_spatial, SpinOrdering ord);
int spatial_of(int spin_orbital, int n_spatial, SpinOrdering ord);

/// Spin-orbital integrals with H = core + sum h_pq a+_p a_q
///                                 + 1/2 sum h_pqrs a+_p a+_q a_r a_s.
/// h_pqrs is in physicists' order, h_pqrs = (ps|qr) in chemists' notation.
struct MolecularIntegrals {
  int n_spin_orbitals = 0;
  int n_electrons = 0;
  int n_up = 0;
  double core_energy = 0.0;
  RMatrix h_one;
  std::vector<double> h_two;  // row-major M^4
  SpinOrdering ordering = SpinOrdering::kBlocked;

  int n_spatial() const { return n_spin_orbitals / 2; }
  int n_down() const { return n_electrons - n_up; }

  double& two(int p, int q, int r, int s) {
    const std::size_t m = n_spin_orbitals;
    return h_two[((p * m + q) * m + r) * m + s];
  }
  double two(int p, int q, int r, int s) const {
    const std::size_t m = n_spin_orbitals;
    return h_two[((p * m + q) * m + r) * m + s];
  }

  /// Spin-orbital indices occupied in the aufbau reference (lowest n_up up
  /// orbitals and lowest n_down down orbitals).
  std::vector<int> hf_occupation() const;
  std::uint64_t hf_bits() const;
};

/// Expands spatial integrals (h1 over spatial orbitals, eri in chemists'
/// order (ij|kl) as a row-major n^4 array) into spin orbitals.
MolecularIntegrals from_spatial(const RMatrix& h1, const std::vector<double>& eri,
                                double core_energy, int n_electrons, int ms2,
                                SpinOrdering ordering = SpinOrdering::kBlocked);

/// Checks hermiticity, h_pqrs = h_qpsr = h_srqp and spin selection rules.
void validate(const MolecularIntegrals& ints, double tol = 1e-8);

/// Same integrals relabelled to another spin ordering.
MolecularIntegrals reorder_spins(const MolecularIntegrals& ints,
                                 SpinOrdering ordering);

/// Energy of the determinant with the listed spin-orbitals occupied.
double determinant_energy(const MolecularIntegrals& ints,
                          const std::vector<int>& occupied);

/// Product of ladder operators, leftmost factor first; (mode, dagger).
struct FermionOperator {
  std::vector<std::pair<int, bool>> factors;
  cplx coeff{1.0, 0.0};

  static FermionOperator create(int p) { return {{{p, true}}, 1.0}; }
  static FermionOperator annihilate(int p) { return {{{p, false}}, 1.0}; }
  static FermionOperator number(int p) { return {{{p, true}, {p, false}}, 1.0}; }

  /// Parses "1.5 [3^ 2^ 1 0]"-free form "3^ 2^ 1 0"; coefficient 1.
  static FermionOperator parse(const std::string& text, cplx coeff = 1.0);

  int max_mode() const;
  FermionOperator adjoint() const;
  /// "3^ 2^ 1 0", empty string for the identity.
  std::string label() const;
};

FermionOperator operator*(const FermionOperator& a, const FermionOperator& b);

/// Sum of ladder-operator products. Canonical means normal ordered: daggers
/// left of annihilators, descending mode index inside each block, each
/// product appearing once.
class FermionSum {
 public:
  FermionSum() = default;
  FermionSum(FermionOperator op) { add(std::move(op)); }

  void add(FermionOperator op) {
    terms_.push_back(std::move(op));
    canonical_ = false;
  }
  const std::vector<FermionOperator>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  bool canonical() const { return canonical_; }

  int max_mode() const;
  FermionSum adjoint() const;

  FermionSum& operator+=(const FermionSum& o);
  FermionSum& operator-=(const FermionSum& o);
  FermionSum& operator*=(cplx c);
  friend FermionSum operator+(FermionSum a, const FermionSum& b) { return a += b; }
  friend FermionSum operator-(FermionSum a, const FermionSum& b) { return a -= b; }
  friend FermionSum operator*(cplx c, FermionSum a) { return a *= c; }
  friend FermionSum operator*(FermionSum a, cplx c) { return a *= c; }
  friend FermionSum operator*(const FermionSum& a, const FermionSum& b);

  std::string to_string() const;

 private:
  friend FermionSum normal_order(const FermionSum& s, double tol);
  std::vector<FermionOperator> terms_;
  bool canonical_ = false;
};

FermionSum normal_order(const FermionSum& s, double tol = 1e-12);

/// Coefficient of one normal-ordered product in a canonical sum.
cplx coefficient_of(const FermionSum& canonical, const FermionOperator& product);

/// Applies the product right to left to the occupation bitmask f (bit p is
/// f_p). Returns (sign, f') or nothing when the state is annihilated. The
/// coefficient of op is ignored.
std::optional<std::pair<int, std::uint64_t>> apply_to_occupation(
    const FermionOperator& op, std::uint64_t f);

/// Second-quantised molecular Hamiltonian, normal ordered, with the core
/// energy as the identity term.
FermionSum build_molecular_hamiltonian(const MolecularIntegrals& ints,
                                       double tol = 1e-12);

/// Total number operator sum_p n_p.
FermionSum number_operator(int n_modes);
/// Number operator restricted to spin-up modes.
FermionSum spin_up_number_operator(int n_modes, SpinOrdering ordering);

struct UccGenerator {
  std::string label;
  FermionSum generator;  // T - T^dagger
};

/// Anti-Hermitian single and double excitation generators from occ into
/// virt, in singles-then-doubles order.
std::vector<UccGenerator> uccsd_generators(
    int n_modes, const std::vector<int>& occ, const std::vector<int>& virt,
    bool spin_conserving, SpinOrdering ordering = SpinOrdering::kBlocked);

/// Groups of a Hermitian fermionic Hamiltonian: number-type products,
/// single-index hopping and everything else.
struct FermionPartition {
  FermionSum diagonal;
  FermionSum hopping;
  FermionSum exchange;
};

FermionPartition partition_hamiltonian(const FermionSum& h);

}  // namespace qcc
