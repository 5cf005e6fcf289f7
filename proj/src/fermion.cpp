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

#include "qcc/fermion.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <iomanip>
#include <set>
#include <sstream>

#include "qcc/error.hpp"

namespace qcc {
namespace {

using Factors = std::vector<std::pair<int, bool>>;

// Shorter products first, then lexicographic, so the identity leads.
struct FactorsLess {
  bool operator()(const Factors& a, const Factors& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

using TermMap = std::map<Factors, cplx, FactorsLess>;

// True when the adjacent pair (l, r) is already in canonical order.
bool in_order(const std::pair<int, bool>& l, const std::pair<int, bool>& r) {
  if (l.second != r.second) return l.second;  // dagger before non-dagger
  return l.first > r.first;
}

// Normal orders one product, accumulating into out.
void normal_order_product(Factors f, cplx c, TermMap& out) {
  std::vector<std::pair<Factors, cplx>> work{{std::move(f), c}};
  while (!work.empty()) {
    auto [fs, coeff] = std::move(work.back());
    work.pop_back();
    bool zero = false;
    bool changed = true;
    // Bubble sort; every swap either flips a sign, or spawns a contraction.
    while (changed && !zero) {
      changed = false;
      for (std::size_t k = 0; k + 1 < fs.size(); ++k) {
        auto& l = fs[k];
        auto& r = fs[k + 1];
        if (l.first == r.first && l.second == r.second) {
          zero = true;
          break;
        }
        if (in_order(l, r)) continue;
        if (!l.second && r.second && l.first == r.first) {
          // a_p a+_p = 1 - a+_p a_p
          Factors contracted;
          contracted.reserve(fs.size() - 2);
          contracted.insert(contracted.end(), fs.begin(), fs.begin() + k);
          contracted.insert(contracted.end(), fs.begin() + k + 2, fs.end());
          work.emplace_back(std::move(contracted), coeff);
        }
        std::swap(l, r);
        coeff = -coeff;
        changed = true;
      }
    }
    if (!zero) out[fs] += coeff;
  }
}

std::string format_coeff(cplx c) {
  std::ostringstream os;
  os << std::setprecision(12);
  if (c.imag() == 0.0) {
    os << c.real();
  } else {
    os << '(' << c.real() << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag())
       << "i)";
  }
  return os.str();
}

}  // namespace

int spin_orbital_index(int spatial, int spin, int n_spatial, SpinOrdering ord) {
  return ord == SpinOrdering::kBlocked ? spatial + spin * n_spatial
                                       : 2 * spatial + spin;
}

int spin_of(int p, int n_spatial, SpinOrdering ord) {
  return ord == SpinOrdering::kBlocked ? (p >= n_spatial ? 1 : 0) : (p & 1);
}

int spatial_of(int p, int n_spatial, SpinOrdering ord) {
  return ord == SpinOrdering::kBlocked ? p % n_spatial : p / 2;
}

std::vector<int> MolecularIntegrals::hf_occupation() const {
  const int n = n_spatial();
  std::vector<int> occ;
  for (int k = 0; k < n_up; ++k) occ.push_back(spin_orbital_index(k, 0, n, ordering));
  for (int k = 0; k < n_down(); ++k) occ.push_back(spin_orbital_index(k, 1, n, ordering));
  std::sort(occ.begin(), occ.end());
  return occ;
}

std::uint64_t MolecularIntegrals::hf_bits() const {
  std::uint64_t bits = 0;
  for (int p : hf_occupation()) bits |= std::uint64_t{1} << p;
  return bits;
}

MolecularIntegrals from_spatial(const RMatrix& h1, const std::vector<double>& eri,
                                double core_energy, int n_electrons, int ms2,
                                SpinOrdering ordering) {
  const int n = static_cast<int>(h1.rows());
  require(h1.cols() == n, ErrorCode::kDimensionMismatch, "h1 must be square");
  require(eri.size() == static_cast<std::size_t>(n) * n * n * n,
          ErrorCode::kDimensionMismatch, "eri must hold n^4 entries");
  require(n_electrons >= 0 && n_electrons <= 2 * n, ErrorCode::kInvalidArgument,
          "electron count exceeds spin-orbital count");
  require((n_electrons + ms2) % 2 == 0 && std::abs(ms2) <= n_electrons,
          ErrorCode::kInvalidArgument, "inconsistent electron count and MS2");
  MolecularIntegrals out;
  const int m = 2 * n;
  out.n_spin_orbitals = m;
  out.n_electrons = n_electrons;
  out.n_up = (n_electrons + ms2) / 2;
  out.core_energy = core_energy;
  out.ordering = ordering;
  out.h_one = RMatrix::Zero(m, m);
  out.h_two.assign(static_cast<std::size_t>(m) * m * m * m, 0.0);
  auto chem = [&](int i, int j, int k, int l) {
    return eri[((static_cast<std::size_t>(i) * n + j) * n + k) * n + l];
  };
  for (int sp = 0; sp < 2; ++sp) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        out.h_one(spin_orbital_index(i, sp, n, ordering),
                  spin_orbital_index(j, sp, n, ordering)) = h1(i, j);
      }
    }
  }
  // h_pqrs = (ps|qr), nonzero when spin(p) = spin(s) and spin(q) = spin(r).
  for (int s1 = 0; s1 < 2; ++s1) {
    for (int s2 = 0; s2 < 2; ++s2) {
      for (int p = 0; p < n; ++p) {
        for (int q = 0; q < n; ++q) {
          for (int r = 0; r < n; ++r) {
            for (int s = 0; s < n; ++s) {
              out.two(spin_orbital_index(p, s1, n, ordering),
                      spin_orbital_index(q, s2, n, ordering),
                      spin_orbital_index(r, s2, n, ordering),
                      spin_orbital_index(s, s1, n, ordering)) = chem(p, s, q, r);
            }
          }
        }
      }
    }
  }
  return out;
}

void validate(const MolecularIntegrals& ints, double tol) {
  const int m = ints.n_spin_orbitals;
  require(m >= 0 && m % 2 == 0, ErrorCode::kInvalidIntegrals,
          "spin-orbital count must be even");
  require(ints.h_one.rows() == m && ints.h_one.cols() == m,
          ErrorCode::kInvalidIntegrals, "h_one has wrong shape");
  require(ints.h_two.size() == static_cast<std::size_t>(m) * m * m * m,
          ErrorCode::kInvalidIntegrals, "h_two has wrong size");
  require(ints.n_up >= 0 && ints.n_down() >= 0 && ints.n_up <= m / 2 &&
              ints.n_down() <= m / 2,
          ErrorCode::kInvalidIntegrals, "electron counts do not fit");
  const int n = m / 2;
  for (int p = 0; p < m; ++p) {
    for (int q = 0; q < m; ++q) {
      const double v = ints.h_one(p, q);
      require(std::isfinite(v), ErrorCode::kInvalidIntegrals, "non-finite h_one");
      require(std::abs(v - ints.h_one(q, p)) <= tol, ErrorCode::kInvalidIntegrals,
              "h_one not Hermitian");
      if (spin_of(p, n, ints.ordering) != spin_of(q, n, ints.ordering)) {
        require(std::abs(v) <= tol, ErrorCode::kInvalidIntegrals,
                "h_one couples opposite spins");
      }
    }
  }
  for (int p = 0; p < m; ++p) {
    for (int q = 0; q < m; ++q) {
      for (int r = 0; r < m; ++r) {
        for (int s = 0; s < m; ++s) {
          const double v = ints.two(p, q, r, s);
          if (v == 0.0) continue;
          require(std::isfinite(v), ErrorCode::kInvalidIntegrals, "non-finite h_two");
          require(std::abs(v - ints.two(q, p, s, r)) <= tol,
                  ErrorCode::kInvalidIntegrals, "h_two violates h_pqrs = h_qpsr");
          require(std::abs(v - ints.two(s, r, q, p)) <= tol,
                  ErrorCode::kInvalidIntegrals, "h_two violates h_pqrs = h_srqp");
          if (std::abs(v) > tol) {
            require(spin_of(p, n, ints.ordering) == spin_of(s, n, ints.ordering) &&
                        spin_of(q, n, ints.ordering) == spin_of(r, n, ints.ordering),
                    ErrorCode::kInvalidIntegrals, "h_two violates spin selection");
          }
        }
      }
    }
  }
}

MolecularIntegrals reorder_spins(const MolecularIntegrals& ints,
                                 SpinOrdering ordering) {
  if (ints.ordering == ordering) return ints;
  const int m = ints.n_spin_orbitals, n = m / 2;
  std::vector<int> map(m);
  for (int p = 0; p < m; ++p) {
    map[p] = spin_orbital_index(spatial_of(p, n, ints.ordering),
                                spin_of(p, n, ints.ordering), n, ordering);
  }
  MolecularIntegrals out = ints;
  out.ordering = ordering;
  for (int p = 0; p < m; ++p) {
    for (int q = 0; q < m; ++q) out.h_one(map[p], map[q]) = ints.h_one(p, q);
  }
  for (int p = 0; p < m; ++p) {
    for (int q = 0; q < m; ++q) {
      for (int r = 0; r < m; ++r) {
        for (int s = 0; s < m; ++s) {
          out.two(map[p], map[q], map[r], map[s]) = ints.two(p, q, r, s);
        }
      }
    }
  }
  return out;
}

double determinant_energy(const MolecularIntegrals& ints,
                          const std::vector<int>& occupied) {
  double e = ints.core_energy;
  for (int i : occupied) {
    require(i >= 0 && i < ints.n_spin_orbitals, ErrorCode::kIndexOutOfRange,
            "occupied index out of range");
    e += ints.h_one(i, i);
  }
  for (int i : occupied) {
    for (int j : occupied) {
      e += 0.5 * (ints.two(i, j, j, i) - ints.two(i, j, i, j));
    }
  }
  return e;
}

FermionOperator FermionOperator::parse(const std::string& text, cplx coeff) {
  FermionOperator op;
  op.coeff = coeff;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    bool dag = false;
    if (!tok.empty() && tok.back() == '^') {
      dag = true;
      tok.pop_back();
    }
    require(!tok.empty() && std::all_of(tok.begin(), tok.end(), ::isdigit),
            ErrorCode::kInvalidArgument, "bad ladder operator token '" + tok + "'");
    op.factors.emplace_back(std::stoi(tok), dag);
  }
  return op;
}

int FermionOperator::max_mode() const {
  int m = -1;
  for (const auto& [p, d] : factors) m = std::max(m, p);
  return m;
}

FermionOperator FermionOperator::adjoint() const {
  FermionOperator out;
  out.coeff = std::conj(coeff);
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
    out.factors.emplace_back(it->first, !it->second);
  }
  return out;
}

std::string FermionOperator::label() const {
  std::string s;
  for (const auto& [p, d] : factors) {
    if (!s.empty()) s += ' ';
    s += std::to_string(p);
    if (d) s += '^';
  }
  return s;
}

FermionOperator operator*(const FermionOperator& a, const FermionOperator& b) {
  FermionOperator out;
  out.coeff = a.coeff * b.coeff;
  out.factors = a.factors;
  out.factors.insert(out.factors.end(), b.factors.begin(), b.factors.end());
  return out;
}

int FermionSum::max_mode() const {
  int m = -1;
  for (const auto& t : terms_) m = std::max(m, t.max_mode());
  return m;
}

FermionSum FermionSum::adjoint() const {
  FermionSum out;
  for (const auto& t : terms_) out.terms_.push_back(t.adjoint());
  return out;
}

FermionSum& FermionSum::operator+=(const FermionSum& o) {
  terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
  canonical_ = false;
  return *this;
}

FermionSum& FermionSum::operator-=(const FermionSum& o) {
  for (auto t : o.terms_) {
    t.coeff = -t.coeff;
    terms_.push_back(std::move(t));
  }
  canonical_ = false;
  return *this;
}

FermionSum& FermionSum::operator*=(cplx c) {
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

FermionSum operator*(const FermionSum& a, const FermionSum& b) {
  FermionSum out;
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) out.terms_.push_back(x * y);
  }
  return out;
}

std::string FermionSum::to_string() const {
  std::string s;
  for (const auto& t : terms_) {
    s += format_coeff(t.coeff);
    s += " [";
    s += t.label();
    s += "]\n";
  }
  return s;
}

FermionSum normal_order(const FermionSum& s, double tol) {
  TermMap acc;
  for (const auto& t : s.terms()) {
    if (t.coeff == cplx{}) continue;
    normal_order_product(t.factors, t.coeff, acc);
  }
  FermionSum out;
  for (auto& [f, c] : acc) {
    if (std::abs(c) < tol) continue;
    out.terms_.push_back({f, c});
  }
  out.canonical_ = true;
  return out;
}

cplx coefficient_of(const FermionSum& canonical, const FermionOperator& product) {
  require(canonical.canonical(), ErrorCode::kInvalidArgument,
          "coefficient lookup needs a normal-ordered sum");
  for (const auto& t : canonical.terms()) {
    if (t.factors == product.factors) return t.coeff;
  }
  return {};
}

std::optional<std::pair<int, std::uint64_t>> apply_to_occupation(
    const FermionOperator& op, std::uint64_t f) {
  int sign = 1;
  for (auto it = op.factors.rbegin(); it != op.factors.rend(); ++it) {
    const auto [p, dag] = *it;
    require(p >= 0 && p < 64, ErrorCode::kIndexOutOfRange, "mode index out of range");
    const std::uint64_t bit = std::uint64_t{1} << p;
    const bool occupied = (f & bit) != 0;
    if (dag == occupied) return std::nullopt;
    if (std::popcount(f & (bit - 1)) & 1) sign = -sign;
    f ^= bit;
  }
  return std::make_pair(sign, f);
}

FermionSum build_molecular_hamiltonian(const MolecularIntegrals& ints,
                                       double tol) {
  validate(ints);
  const int m = ints.n_spin_orbitals;
  FermionSum h;
  if (ints.core_energy != 0.0) h.add({{}, ints.core_energy});
  for (int p = 0; p < m; ++p) {
    for (int q = 0; q < m; ++q) {
      const double v = ints.h_one(p, q);
      if (std::abs(v) > tol) h.add({{{p, true}, {q, false}}, v});
    }
  }
  for (int p = 0; p < m; ++p) {
    for (int q = 0; q < m; ++q) {
      if (p == q) continue;
      for (int r = 0; r < m; ++r) {
        for (int s = 0; s < m; ++s) {
          if (r == s) continue;
          const double v = ints.two(p, q, r, s);
          if (std::abs(v) > tol) {
            h.add({{{p, true}, {q, true}, {r, false}, {s, false}}, 0.5 * v});
          }
        }
      }
    }
  }
  return normal_order(h, tol);
}

FermionSum number_operator(int n_modes) {
  FermionSum n;
  for (int p = 0; p < n_modes; ++p) n.add(FermionOperator::number(p));
  return normal_order(n);
}

FermionSum spin_up_number_operator(int n_modes, SpinOrdering ordering) {
  FermionSum n;
  for (int p = 0; p < n_modes; ++p) {
    if (spin_of(p, n_modes / 2, ordering) == 0) n.add(FermionOperator::number(p));
  }
  return normal_order(n);
}

std::vector<UccGenerator> uccsd_generators(int n_modes,
                                           const std::vector<int>& occ,
                                           const std::vector<int>& virt,
                                           bool spin_conserving,
                                           SpinOrdering ordering) {
  std::set<int> o(occ.begin(), occ.end()), v(virt.begin(), virt.end());
  for (int p : o) {
    require(p >= 0 && p < n_modes, ErrorCode::kIndexOutOfRange, "occupied mode out of range");
    require(!v.count(p), ErrorCode::kInvalidArgument, "mode both occupied and virtual");
  }
  for (int p : v) {
    require(p >= 0 && p < n_modes, ErrorCode::kIndexOutOfRange, "virtual mode out of range");
  }
  const int n = n_modes / 2;
  auto spin = [&](int p) { return spin_of(p, n, ordering); };

  std::vector<UccGenerator> out;
  // Excitations equal up to sign after normal ordering share one generator.
  std::map<Factors, std::size_t> seen;
  auto push = [&](FermionOperator t) {
    const FermionSum canon = normal_order(FermionSum(t));
    if (canon.empty()) return;
    const FermionOperator& lead = canon.terms().front();
    const FermionSum g = normal_order(canon - canon.adjoint());
    if (g.empty()) return;
    if (auto it = seen.find(lead.factors); it != seen.end()) {
      out[it->second].generator =
          normal_order(out[it->second].generator + g);
      return;
    }
    seen.emplace(lead.factors, out.size());
    out.push_back({lead.label(), g});
  };

  for (int i : o) {
    for (int a : v) {
      if (spin_conserving && spin(i) != spin(a)) continue;
      push({{{a, true}, {i, false}}, 1.0});
    }
  }
  for (auto i = o.begin(); i != o.end(); ++i) {
    for (auto j = std::next(i); j != o.end(); ++j) {
      for (auto a = v.begin(); a != v.end(); ++a) {
        for (auto b = std::next(a); b != v.end(); ++b) {
          if (spin_conserving && spin(*a) + spin(*b) != spin(*i) + spin(*j)) continue;
          push({{{*b, true}, {*a, true}, {*j, false}, {*i, false}}, 1.0});
        }
      }
    }
  }
  return out;
}

FermionPartition partition_hamiltonian(const FermionSum& h) {
  const FermionSum canon = h.canonical() ? h : normal_order(h);
  FermionPartition part;
  for (const auto& t : canon.terms()) {
    std::multiset<int> cre, ann;
    for (const auto& [p, d] : t.factors) (d ? cre : ann).insert(p);
    std::vector<int> diff;
    std::set_symmetric_difference(cre.begin(), cre.end(), ann.begin(), ann.end(),
                                  std::back_inserter(diff));
    if (diff.empty()) {
      part.diagonal.add(t);
    } else if (diff.size() == 2) {
      part.hopping.add(t);
    } else {
      part.exchange.add(t);
    }
  }
  return part;
}

}  // namespace qcc
