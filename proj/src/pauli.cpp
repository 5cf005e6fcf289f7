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

#include "qcc/pauli.hpp"

#include <bit>
#include <cctype>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "qcc/error.hpp"

namespace qcc {
namespace {

// i^k for k mod 4.
cplx ipow(int k) {
  switch (k & 3) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

int pc(std::uint64_t v) { return std::popcount(v); }

void check_qubit(int q) {
  require(q >= 0 && q < kMaxPauliQubits, ErrorCode::kIndexOutOfRange,
          "qubit index " + std::to_string(q) + " outside 0..63");
}

// Sign-free diagonal factor (-1)^{|b&z|}.
double zsign(std::uint64_t b, std::uint64_t z) {
  return (pc(b & z) & 1) ? -1.0 : 1.0;
}

}  // namespace

PauliString PauliString::single(int qubit, Pauli p) {
  PauliString s;
  s.set(qubit, p);
  return s;
}

PauliString PauliString::parse(std::string_view text) {
  PauliString s;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == '*') {
      ++i;
      continue;
    }
    Pauli p;
    switch (c) {
      case 'I': p = Pauli::I; break;
      case 'X': p = Pauli::X; break;
      case 'Y': p = Pauli::Y; break;
      case 'Z': p = Pauli::Z; break;
      default:
        fail(ErrorCode::kInvalidArgument,
             "bad Pauli letter '" + std::string(1, c) + "'");
    }
    ++i;
    std::size_t j = i;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    if (j == i) {
      require(p == Pauli::I, ErrorCode::kInvalidArgument,
              "Pauli letter without qubit index");
      continue;
    }
    const int q = std::stoi(std::string(text.substr(i, j - i)));
    i = j;
    require(s.at(q) == Pauli::I, ErrorCode::kInvalidArgument,
            "qubit " + std::to_string(q) + " repeated in Pauli string");
    s.set(q, p);
  }
  return s;
}

Pauli PauliString::at(int qubit) const {
  check_qubit(qubit);
  const int xb = (x >> qubit) & 1, zb = (z >> qubit) & 1;
  if (xb && zb) return Pauli::Y;
  if (xb) return Pauli::X;
  if (zb) return Pauli::Z;
  return Pauli::I;
}

void PauliString::set(int qubit, Pauli p) {
  check_qubit(qubit);
  const std::uint64_t m = std::uint64_t{1} << qubit;
  x &= ~m;
  z &= ~m;
  if (p == Pauli::X || p == Pauli::Y) x |= m;
  if (p == Pauli::Z || p == Pauli::Y) z |= m;
}

int PauliString::weight() const { return pc(x | z); }

int PauliString::max_qubit() const {
  const std::uint64_t s = x | z;
  return s == 0 ? -1 : 63 - std::countl_zero(s);
}

std::string PauliString::to_string() const {
  if (is_identity()) return "I";
  std::string out;
  for (int q = 0; q <= max_qubit(); ++q) {
    const Pauli p = at(q);
    if (p == Pauli::I) continue;
    if (!out.empty()) out += ' ';
    out += "IXYZ"[static_cast<int>(p)];
    out += std::to_string(q);
  }
  return out;
}

bool commutes(const PauliString& a, const PauliString& b) {
  return ((pc(a.x & b.z) + pc(a.z & b.x)) & 1) == 0;
}

PauliTerm mul_terms(const PauliTerm& a, const PauliTerm& b) {
  const PauliString& s1 = a.string;
  const PauliString& s2 = b.string;
  PauliString s3{s1.x ^ s2.x, s1.z ^ s2.z};
  const int k = pc(s1.x & s1.z) + pc(s2.x & s2.z) + 2 * pc(s1.z & s2.x) -
                pc(s3.x & s3.z);
  return {s3, a.coeff * b.coeff * ipow(((k % 4) + 4) % 4)};
}

PauliSum::PauliSum(const PauliString& s, cplx c, int n_qubits) : n_(n_qubits) {
  add(s, c);
}

PauliSum PauliSum::identity(cplx c, int n_qubits) {
  return PauliSum(PauliString{}, c, n_qubits);
}

void PauliSum::add(const PauliString& s, cplx c) {
  require(std::isfinite(c.real()) && std::isfinite(c.imag()),
          ErrorCode::kInvalidArgument, "non-finite Pauli coefficient");
  terms_[s] += c;
}

int PauliSum::n_qubits() const {
  int n = n_;
  for (const auto& [s, c] : terms_) n = std::max(n, s.max_qubit() + 1);
  return n;
}

cplx PauliSum::coeff(const PauliString& s) const {
  const auto it = terms_.find(s);
  return it == terms_.end() ? cplx{} : it->second;
}

bool PauliSum::is_hermitian(double tol) const {
  for (const auto& [s, c] : terms_) {
    if (std::abs(c.imag()) > tol) return false;
  }
  return true;
}

PauliSum PauliSum::adjoint() const {
  PauliSum out(n_);
  for (const auto& [s, c] : terms_) out.terms_.emplace(s, std::conj(c));
  return out;
}

void PauliSum::prune(double tol) {
  std::erase_if(terms_, [tol](const auto& kv) { return std::abs(kv.second) < tol; });
}

PauliSum& PauliSum::operator+=(const PauliSum& o) {
  for (const auto& [s, c] : o.terms_) terms_[s] += c;
  n_ = std::max(n_, o.n_);
  prune();
  return *this;
}

PauliSum& PauliSum::operator-=(const PauliSum& o) {
  for (const auto& [s, c] : o.terms_) terms_[s] -= c;
  n_ = std::max(n_, o.n_);
  prune();
  return *this;
}

PauliSum& PauliSum::operator*=(cplx c) {
  for (auto& [s, v] : terms_) v *= c;
  prune();
  return *this;
}

PauliSum operator*(const PauliSum& a, const PauliSum& b) {
  PauliSum out(std::max(a.n_, b.n_));
  for (const auto& [sa, ca] : a.terms_) {
    for (const auto& [sb, cb] : b.terms_) {
      const PauliTerm t = mul_terms({sa, ca}, {sb, cb});
      out.terms_[t.string] += t.coeff;
    }
  }
  out.prune();
  return out;
}

std::string PauliSum::to_string(int precision) const {
  std::ostringstream os;
  os << std::setprecision(precision);
  for (const auto& [s, c] : terms_) {
    if (c.imag() == 0.0) {
      os << c.real();
    } else {
      os << '(' << c.real() << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag())
         << "i)";
    }
    os << " * " << s.to_string() << '\n';
  }
  return os.str();
}

double PauliSum::one_norm(bool include_identity) const {
  double n = 0.0;
  for (const auto& [s, c] : terms_) {
    if (include_identity || !s.is_identity()) n += std::abs(c);
  }
  return n;
}

PauliSum canonicalize(const PauliSum& s, double tol) {
  require(tol >= 0.0, ErrorCode::kInvalidArgument, "negative drop tolerance");
  PauliSum out = s;
  out.prune(tol);
  return out;
}

PauliSum commutator(const PauliSum& a, const PauliSum& b) {
  return a * b - b * a;
}

CMatrix to_matrix(const PauliString& s, int n_qubits) {
  return to_matrix(PauliSum(s, 1.0, n_qubits), n_qubits);
}

CMatrix to_matrix(const PauliSum& s, int n_qubits) {
  require(n_qubits >= 0 && n_qubits <= kDenseQubitLimit, ErrorCode::kTooLarge,
          "dense matrix limited to " + std::to_string(kDenseQubitLimit) +
              " qubits");
  require(s.n_qubits() <= n_qubits, ErrorCode::kDimensionMismatch,
          "operator acts on qubits beyond the requested width");
  const std::uint64_t dim = std::uint64_t{1} << n_qubits;
  CMatrix m = CMatrix::Zero(dim, dim);
  for (const auto& [p, c] : s.terms()) {
    const cplx ph = c * ipow(pc(p.x & p.z));
    for (std::uint64_t b = 0; b < dim; ++b) {
      m(b ^ p.x, b) += ph * zsign(b, p.z);
    }
  }
  return m;
}

PauliOperator::PauliOperator(const PauliSum& s) : n_(s.n_qubits()) {
  std::map<std::uint64_t, std::size_t> index;
  for (const auto& [p, c] : s.terms()) {
    auto [it, fresh] = index.emplace(p.x, groups_.size());
    if (fresh) groups_.push_back({p.x, {}, {}});
    Group& g = groups_[it->second];
    g.z.push_back(p.z);
    g.c.push_back(c * ipow(pc(p.x & p.z)));
  }
}

void PauliOperator::apply(const CVector& in, CVector& out) const {
  require(in.size() >= (Eigen::Index{1} << n_), ErrorCode::kDimensionMismatch,
          "state narrower than operator");
  out = CVector::Zero(in.size());
  const auto dim = static_cast<std::uint64_t>(in.size());
  for (const Group& g : groups_) {
    for (std::uint64_t b = 0; b < dim; ++b) {
      const cplx a = in[b];
      if (a == cplx{}) continue;
      cplx acc{};
      for (std::size_t k = 0; k < g.z.size(); ++k) {
        acc += (pc(b & g.z[k]) & 1) ? -g.c[k] : g.c[k];
      }
      out[b ^ g.x] += acc * a;
    }
  }
}

CVector PauliOperator::apply(const CVector& in) const {
  CVector out;
  apply(in, out);
  return out;
}

cplx PauliOperator::expectation(const CVector& psi) const {
  require(psi.size() >= (Eigen::Index{1} << n_), ErrorCode::kDimensionMismatch,
          "state narrower than operator");
  const auto dim = static_cast<std::uint64_t>(psi.size());
  cplx total{};
  for (const Group& g : groups_) {
    for (std::uint64_t b = 0; b < dim; ++b) {
      const cplx a = psi[b];
      if (a == cplx{}) continue;
      cplx acc{};
      for (std::size_t k = 0; k < g.z.size(); ++k) {
        acc += (pc(b & g.z[k]) & 1) ? -g.c[k] : g.c[k];
      }
      total += std::conj(psi[b ^ g.x]) * acc * a;
    }
  }
  return total;
}

StateVector apply(const PauliSum& s, const StateVector& psi) {
  require(s.n_qubits() <= psi.n_qubits(), ErrorCode::kDimensionMismatch,
          "operator acts on qubits beyond the state");
  return StateVector(PauliOperator(s).apply(psi.amplitudes()));
}

StateVector apply(const PauliString& p, const StateVector& psi) {
  require(p.max_qubit() < psi.n_qubits(), ErrorCode::kDimensionMismatch,
          "Pauli string acts beyond the state");
  const cplx ph = ipow(pc(p.x & p.z));
  CVector out(psi.dim());
  const auto dim = static_cast<std::uint64_t>(psi.dim());
  for (std::uint64_t b = 0; b < dim; ++b) {
    out[b ^ p.x] = ph * zsign(b, p.z) * psi[b];
  }
  return StateVector(std::move(out));
}

double expectation(const PauliSum& s, const StateVector& psi) {
  require(s.n_qubits() <= psi.n_qubits(), ErrorCode::kDimensionMismatch,
          "operator acts on qubits beyond the state");
  require(s.is_hermitian(1e-10), ErrorCode::kNonHermitian,
          "expectation requires a Hermitian operator");
  const cplx v = PauliOperator(s).expectation(psi.amplitudes());
  require(std::abs(v.imag()) < 1e-10 * std::max(1.0, s.one_norm(true)),
          ErrorCode::kNonHermitian, "imaginary expectation residue");
  return v.real();
}

double expectation(const PauliString& p, const StateVector& psi) {
  require(p.max_qubit() < psi.n_qubits(), ErrorCode::kDimensionMismatch,
          "Pauli string acts beyond the state");
  const cplx ph = ipow(pc(p.x & p.z));
  const auto dim = static_cast<std::uint64_t>(psi.dim());
  cplx total{};
  for (std::uint64_t b = 0; b < dim; ++b) {
    total += std::conj(psi[b ^ p.x]) * zsign(b, p.z) * psi[b];
  }
  return (ph * total).real();
}

cplx matrix_element(const StateVector& phi, const PauliSum& s,
                    const StateVector& psi) {
  require(phi.dim() == psi.dim(), ErrorCode::kDimensionMismatch,
          "bra and ket differ in width");
  return phi.inner(apply(s, psi));
}

}  // namespace qcc
