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

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qcc/statevector.hpp"
#include "qcc/types.hpp"

namespace qcc {

inline constexpr double kDropTolerance = 1e-12;
inline constexpr int kMaxPauliQubits = 64;

enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

/// Pauli string stored as symplectic bit masks: the operator is
/// i^{|x&z|} X^x Z^z, so x=z=1 on a qubit means Y there.
struct PauliString {
  std::uint64_t x = 0;
  std::uint64_t z = 0;

  PauliString() = default;
  constexpr PauliString(std::uint64_t xm, std::uint64_t zm) : x(xm), z(zm) {}

  static PauliString single(int qubit, Pauli p);

  /// Parses "X0 Z2 Y5"; "I" or "" is the identity.
  static PauliString parse(std::string_view text);

  Pauli at(int qubit) const;
  void set(int qubit, Pauli p);

  int weight() const;
  /// Highest qubit carrying a non-identity letter, -1 for the identity.
  int max_qubit() const;
  bool is_identity() const { return (x | z) == 0; }
  /// Diagonal in the computational basis (only I/Z letters).
  bool is_diagonal() const { return x == 0; }
  std::uint64_t support() const { return x | z; }

  /// "X0 Z2 Y5" or "I".
  std::string to_string() const;

  friend auto operator<=>(const PauliString&, const PauliString&) = default;
};

struct PauliTerm {
  PauliString string;
  cplx coeff{1.0, 0.0};
};

bool commutes(const PauliString& a, const PauliString& b);

/// Product a*b; the phase from the single-qubit products is folded into the
/// coefficient.
PauliTerm mul_terms(const PauliTerm& a, const PauliTerm& b);

/// Sparse linear combination of Pauli strings with merged duplicates and a
/// deterministic order (ascending (x, z) masks, so the identity comes first).
class PauliSum {
 public:
  using Map = std::map<PauliString, cplx>;

  PauliSum() = default;
  explicit PauliSum(int n_qubits) : n_(n_qubits) {}
  PauliSum(const PauliString& s, cplx c, int n_qubits = 0);

  static PauliSum identity(cplx c = 1.0, int n_qubits = 0);

  /// Adds c*s without dropping small coefficients.
  void add(const PauliString& s, cplx c);
  void add(const PauliTerm& t) { add(t.string, t.coeff); }

  const Map& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }

  /// Declared register width, widened to cover every term.
  int n_qubits() const;
  void set_n_qubits(int n) { n_ = n; }

  cplx coeff(const PauliString& s) const;
  cplx constant() const { return coeff(PauliString{}); }

  bool is_hermitian(double tol = 1e-10) const;
  PauliSum adjoint() const;

  /// Removes terms with |coeff| < tol in place.
  void prune(double tol = kDropTolerance);

  PauliSum& operator+=(const PauliSum& o);
  PauliSum& operator-=(const PauliSum& o);
  PauliSum& operator*=(cplx c);

  friend PauliSum operator+(PauliSum a, const PauliSum& b) { return a += b; }
  friend PauliSum operator-(PauliSum a, const PauliSum& b) { return a -= b; }
  friend PauliSum operator*(PauliSum a, cplx c) { return a *= c; }
  friend PauliSum operator*(cplx c, PauliSum a) { return a *= c; }
  friend PauliSum operator*(const PauliSum& a, const PauliSum& b);

  /// One term per line, "coeff * X0 Z2".
  std::string to_string(int precision = 12) const;

  /// 1-norm of the coefficients excluding the identity.
  double one_norm(bool include_identity = false) const;

 private:
  Map terms_;
  int n_ = 0;
};

/// Merges duplicates, drops |coeff| < tol, fixes the term order.
PauliSum canonicalize(const PauliSum& s, double tol = kDropTolerance);

/// a*b - b*a
PauliSum commutator(const PauliSum& a, const PauliSum& b);

/// Dense 2^n x 2^n matrix with qubit 0 the least-significant tensor factor.
CMatrix to_matrix(const PauliSum& s, int n_qubits);
CMatrix to_matrix(const PauliString& s, int n_qubits);

/// S|psi>, exact.
StateVector apply(const PauliSum& s, const StateVector& psi);
/// P|psi>, exact.
StateVector apply(const PauliString& p, const StateVector& psi);

/// <psi|S|psi> for Hermitian S.
double expectation(const PauliSum& s, const StateVector& psi);
/// <psi|P|psi> for one string (always real).
double expectation(const PauliString& p, const StateVector& psi);
/// <phi|S|psi>
cplx matrix_element(const StateVector& phi, const PauliSum& s,
                    const StateVector& psi);

/// Pre-grouped form of a PauliSum for repeated application: terms sharing an
/// x mask act as one permutation times a diagonal.
class PauliOperator {
 public:
  PauliOperator() = default;
  explicit PauliOperator(const PauliSum& s);

  int n_qubits() const { return n_; }
  void apply(const CVector& in, CVector& out) const;
  CVector apply(const CVector& in) const;
  cplx expectation(const CVector& psi) const;

 private:
  struct Group {
    std::uint64_t x;
    std::vector<std::uint64_t> z;
    std::vector<cplx> c;  // includes the i^{|x&z|} phase
  };
  std::vector<Group> groups_;
  int n_ = 0;
};

}  // namespace qcc
