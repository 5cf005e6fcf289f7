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
#include <string>
#include <string_view>
#include <vector>

#include "qcc/fermion.hpp"
#include "qcc/pauli.hpp"

namespace qcc {

enum class Encoding { kJordanWigner, kParity, kBravyiKitaev, kBravyiKitaevTree };

std::string_view to_string(Encoding e);
/// Accepts "jw", "parity", "bk", "bktree".
Encoding parse_encoding(std::string_view name);

struct EncodingScheme {
  Encoding variant = Encoding::kJordanWigner;
  int n_modes = 0;
};

/// Square matrix over GF(2); row p is a bit mask over columns.
struct BitMatrix {
  int n = 0;
  std::vector<std::uint64_t> rows;

  bool at(int r, int c) const { return (rows[r] >> c) & 1; }
  std::uint64_t column(int c) const;
  /// y = A x over GF(2), with x and y as bit masks.
  std::uint64_t apply(std::uint64_t x) const;
  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;
};

BitMatrix gf2_inverse(const BitMatrix& a);

/// Bravyi-Kitaev transform matrix; non-power-of-two sizes keep the leading
/// rows and columns of the next power of two.
BitMatrix bk_matrix(int n_modes);

/// Partial-sum tree over modes 0..n-1. Qubit i stores the parity of all
/// modes in the subtree rooted at i.
struct FenwickTree {
  int n = 0;
  std::vector<int> parent;                 // -1 for the root
  std::vector<std::vector<int>> children;  // ascending

  /// Ancestors of i (the qubits that must flip when mode i flips).
  std::vector<int> update_set(int i) const;
  /// Mask of modes whose occupation sums into qubit i.
  std::uint64_t subtree_mask(int i) const;
};

/// Tree built by recursive halving of [0, n-1]: R is joined to floor((L+R)/2)
/// as its parent, then both halves recurse.
FenwickTree fenwick_tree(int n_modes);

/// Linear map f -> q over GF(2) used by a scheme (identity for JW).
const BitMatrix& encoding_matrix(const EncodingScheme& scheme);

std::uint64_t encode_state(std::uint64_t occupation, const EncodingScheme& scheme);
std::uint64_t decode_state(std::uint64_t qubits, const EncodingScheme& scheme);

/// Qubit image of a single ladder operator.
const PauliSum& encode_ladder(int mode, bool dagger, const EncodingScheme& scheme);

/// Qubit image of a fermionic sum, canonicalized.
PauliSum encode_operator(const FermionSum& s, const EncodingScheme& scheme);

/// Renders qubit n-1 leftmost, qubit 0 rightmost.
inline std::string bitstring(std::uint64_t bits, int n) {
  std::string s(n, '0');
  for (int q = 0; q < n; ++q) {
    if ((bits >> q) & 1) s[n - 1 - q] = '1';
  }
  return s;
}

/// Inverse of bitstring(): leftmost character is qubit n-1.
std::uint64_t parse_bitstring(std::string_view s);

}  // namespace qcc
