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

#include "qcc/encoding.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <tuple>

#include "qcc/error.hpp"

namespace qcc {
namespace {

void check_modes(int n) {
  require(n >= 1 && n <= kMaxPauliQubits, ErrorCode::kInvalidArgument,
          "mode count must be in 1..64");
}

std::uint64_t low_mask(int n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

void build_tree(int l, int r, FenwickTree& t) {
  if (l >= r) return;
  const int mid = (l + r) / 2;
  t.parent[mid] = r;
  t.children[r].push_back(mid);
  build_tree(l, mid, t);
  build_tree(mid + 1, r, t);
}

BitMatrix make_matrix(const EncodingScheme& s) {
  check_modes(s.n_modes);
  const int n = s.n_modes;
  BitMatrix m{n, std::vector<std::uint64_t>(n, 0)};
  switch (s.variant) {
    case Encoding::kJordanWigner:
      for (int p = 0; p < n; ++p) m.rows[p] = std::uint64_t{1} << p;
      break;
    case Encoding::kParity:
      for (int p = 0; p < n; ++p) m.rows[p] = low_mask(p + 1);
      break;
    case Encoding::kBravyiKitaev:
      m = bk_matrix(n);
      break;
    case Encoding::kBravyiKitaevTree: {
      const FenwickTree t = fenwick_tree(n);
      for (int p = 0; p < n; ++p) m.rows[p] = t.subtree_mask(p);
      break;
    }
  }
  return m;
}

// Per-scheme data shared by every ladder image.
struct SchemeData {
  BitMatrix beta;
  BitMatrix inverse;
};

using SchemeKey = std::pair<int, int>;

std::shared_mutex& cache_mutex() {
  static std::shared_mutex m;
  return m;
}

const SchemeData& scheme_data(const EncodingScheme& s) {
  static std::map<SchemeKey, std::unique_ptr<SchemeData>> cache;
  const SchemeKey key{static_cast<int>(s.variant), s.n_modes};
  {
    std::shared_lock lock(cache_mutex());
    if (auto it = cache.find(key); it != cache.end()) return *it->second;
  }
  auto data = std::make_unique<SchemeData>();
  data->beta = make_matrix(s);
  data->inverse = gf2_inverse(data->beta);
  std::unique_lock lock(cache_mutex());
  auto [it, fresh] = cache.emplace(key, std::move(data));
  return *it->second;
}

PauliSum build_ladder(int p, bool dagger, const EncodingScheme& s) {
  const SchemeData& d = scheme_data(s);
  // Occupation of mode p and the parity of modes below p, read off the
  // encoded qubits through the inverse map.
  const std::uint64_t flip = d.inverse.rows[p];
  std::uint64_t below = 0;
  for (int i = 0; i < p; ++i) below ^= d.inverse.rows[i];
  const PauliTerm xz = mul_terms({PauliString{d.beta.column(p), 0}, 1.0},
                                 {PauliString{0, below}, 1.0});
  PauliSum out(s.n_modes);
  out.add(mul_terms(xz, {PauliString{}, 0.5}));
  out.add(mul_terms(xz, {PauliString{0, flip}, dagger ? 0.5 : -0.5}));
  out.prune();
  return out;
}

}  // namespace

std::string_view to_string(Encoding e) {
  switch (e) {
    case Encoding::kJordanWigner: return "jw";
    case Encoding::kParity: return "parity";
    case Encoding::kBravyiKitaev: return "bk";
    case Encoding::kBravyiKitaevTree: return "bktree";
  }
  return "unknown";
}

Encoding parse_encoding(std::string_view name) {
  if (name == "jw") return Encoding::kJordanWigner;
  if (name == "parity") return Encoding::kParity;
  if (name == "bk") return Encoding::kBravyiKitaev;
  if (name == "bktree") return Encoding::kBravyiKitaevTree;
  fail(ErrorCode::kInvalidArgument, "unknown encoding '" + std::string(name) + "'");
}

std::uint64_t BitMatrix::column(int c) const {
  std::uint64_t col = 0;
  for (int r = 0; r < n; ++r) col |= ((rows[r] >> c) & 1) << r;
  return col;
}

std::uint64_t BitMatrix::apply(std::uint64_t x) const {
  std::uint64_t y = 0;
  for (int r = 0; r < n; ++r) y |= static_cast<std::uint64_t>(std::popcount(rows[r] & x) & 1) << r;
  return y;
}

BitMatrix gf2_inverse(const BitMatrix& a) {
  const int n = a.n;
  std::vector<std::uint64_t> m = a.rows;
  BitMatrix inv{n, std::vector<std::uint64_t>(n)};
  for (int r = 0; r < n; ++r) inv.rows[r] = std::uint64_t{1} << r;
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r) {
      if ((m[r] >> c) & 1) {
        piv = r;
        break;
      }
    }
    require(piv >= 0, ErrorCode::kInvalidArgument, "matrix singular over GF(2)");
    std::swap(m[c], m[piv]);
    std::swap(inv.rows[c], inv.rows[piv]);
    for (int r = 0; r < n; ++r) {
      if (r != c && ((m[r] >> c) & 1)) {
        m[r] ^= m[c];
        inv.rows[r] ^= inv.rows[c];
      }
    }
  }
  return inv;
}

BitMatrix bk_matrix(int n_modes) {
  check_modes(n_modes);
  const int size = static_cast<int>(std::bit_ceil(static_cast<unsigned>(n_modes)));
  // beta_{2k} = [[beta_k, 0], [A, beta_k]] with A zero except an all-ones
  // bottom row.
  std::vector<std::uint64_t> rows{1};
  for (int k = 1; k < size; k *= 2) {
    std::vector<std::uint64_t> next(2 * k);
    for (int r = 0; r < k; ++r) {
      next[r] = rows[r];
      next[k + r] = rows[r] << k;
    }
    next[2 * k - 1] |= low_mask(k);
    rows = std::move(next);
  }
  BitMatrix out{n_modes, std::vector<std::uint64_t>(n_modes)};
  for (int r = 0; r < n_modes; ++r) out.rows[r] = rows[r] & low_mask(n_modes);
  return out;
}

std::vector<int> FenwickTree::update_set(int i) const {
  std::vector<int> out;
  for (int a = parent[i]; a >= 0; a = parent[a]) out.push_back(a);
  return out;
}

std::uint64_t FenwickTree::subtree_mask(int i) const {
  std::uint64_t m = std::uint64_t{1} << i;
  for (int c : children[i]) m |= subtree_mask(c);
  return m;
}

FenwickTree fenwick_tree(int n_modes) {
  check_modes(n_modes);
  FenwickTree t;
  t.n = n_modes;
  t.parent.assign(n_modes, -1);
  t.children.assign(n_modes, {});
  build_tree(0, n_modes - 1, t);
  for (auto& c : t.children) std::sort(c.begin(), c.end());
  return t;
}

const BitMatrix& encoding_matrix(const EncodingScheme& scheme) {
  return scheme_data(scheme).beta;
}

std::uint64_t encode_state(std::uint64_t occupation, const EncodingScheme& scheme) {
  require((occupation & ~low_mask(scheme.n_modes)) == 0, ErrorCode::kIndexOutOfRange,
          "occupation has bits beyond the mode count");
  return scheme_data(scheme).beta.apply(occupation);
}

std::uint64_t decode_state(std::uint64_t qubits, const EncodingScheme& scheme) {
  require((qubits & ~low_mask(scheme.n_modes)) == 0, ErrorCode::kIndexOutOfRange,
          "bitstring has bits beyond the mode count");
  return scheme_data(scheme).inverse.apply(qubits);
}

const PauliSum& encode_ladder(int mode, bool dagger, const EncodingScheme& scheme) {
  require(mode >= 0 && mode < scheme.n_modes, ErrorCode::kIndexOutOfRange,
          "mode " + std::to_string(mode) + " outside 0.." +
              std::to_string(scheme.n_modes - 1));
  static std::map<std::tuple<int, int, int, bool>, std::unique_ptr<PauliSum>> cache;
  static std::shared_mutex mutex;
  const auto key = std::make_tuple(static_cast<int>(scheme.variant), scheme.n_modes,
                                   mode, dagger);
  {
    std::shared_lock lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return *it->second;
  }
  auto image = std::make_unique<PauliSum>(build_ladder(mode, dagger, scheme));
  std::unique_lock lock(mutex);
  auto [it, fresh] = cache.emplace(key, std::move(image));
  return *it->second;
}

PauliSum encode_operator(const FermionSum& s, const EncodingScheme& scheme) {
  check_modes(scheme.n_modes);
  PauliSum out(scheme.n_modes);
  for (const auto& t : s.terms()) {
    PauliSum prod = PauliSum::identity(t.coeff, scheme.n_modes);
    for (const auto& [p, dag] : t.factors) {
      prod = prod * encode_ladder(p, dag, scheme);
      if (prod.empty()) break;
    }
    for (const auto& [str, c] : prod.terms()) out.add(str, c);
  }
  out.prune();
  return out;
}

std::uint64_t parse_bitstring(std::string_view s) {
  require(s.size() <= 64, ErrorCode::kInvalidArgument, "bitstring longer than 64");
  std::uint64_t bits = 0;
  const int n = static_cast<int>(s.size());
  for (int k = 0; k < n; ++k) {
    const char c = s[k];
    require(c == '0' || c == '1', ErrorCode::kInvalidArgument, "bitstring must be 0/1");
    if (c == '1') bits |= std::uint64_t{1} << (n - 1 - k);
  }
  return bits;
}

}  // namespace qcc
