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

#include "qcc/io.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

#include <json.hpp>

#include "qcc/error.hpp"

namespace qcc {
namespace {

std::string upper(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

// Finds KEY=<int> inside the namelist header.
std::optional<int> header_int(const std::string& header, const std::string& key) {
  std::size_t pos = 0;
  while ((pos = header.find(key, pos)) != std::string::npos) {
    const bool word_start = pos == 0 || !std::isalnum(static_cast<unsigned char>(header[pos - 1]));
    std::size_t p = pos + key.size();
    while (p < header.size() && std::isspace(static_cast<unsigned char>(header[p]))) ++p;
    if (word_start && p < header.size() && header[p] == '=') {
      ++p;
      while (p < header.size() && std::isspace(static_cast<unsigned char>(header[p]))) ++p;
      int v = 0;
      const auto [ptr, ec] = std::from_chars(header.data() + p, header.data() + header.size(), v);
      if (ec == std::errc()) return v;
      return std::nullopt;
    }
    pos += key.size();
  }
  return std::nullopt;
}

double parse_double(const std::string& tok, int line) {
  std::string t = tok;
  // Fortran exponent markers.
  std::replace(t.begin(), t.end(), 'D', 'E');
  std::replace(t.begin(), t.end(), 'd', 'e');
  try {
    std::size_t used = 0;
    const double v = std::stod(t, &used);
    if (used != t.size()) throw std::invalid_argument(t);
    return v;
  } catch (const std::exception&) {
    throw ParseError(line, "bad number '" + tok + "'");
  }
}

int parse_index(const std::string& tok, int line) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(line, "bad index '" + tok + "'");
  }
  return v;
}

}  // namespace

SpatialIntegrals parse_fcidump_spatial(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  std::string header;
  bool header_done = false;
  while (std::getline(in, line)) {
    ++lineno;
    header += ' ' + upper(line);
    const std::string u = upper(line);
    if (u.find("&END") != std::string::npos || u.find('/') != std::string::npos) {
      header_done = true;
      break;
    }
  }
  if (!header_done) throw ParseError(lineno, "missing &END in FCIDUMP header");
  if (header.find("&FCI") == std::string::npos) throw ParseError(1, "missing &FCI namelist");
  const auto norb = header_int(header, "NORB");
  const auto nelec = header_int(header, "NELEC");
  if (!norb || *norb < 0) throw ParseError(1, "missing or bad NORB");
  if (!nelec || *nelec < 0) throw ParseError(1, "missing or bad NELEC");
  const int ms2 = header_int(header, "MS2").value_or(0);
  if (*nelec > 2 * *norb) throw ParseError(1, "NELEC exceeds 2*NORB");
  if ((*nelec + ms2) % 2 != 0 || std::abs(ms2) > *nelec) {
    throw ParseError(1, "NELEC and MS2 inconsistent");
  }

  SpatialIntegrals s;
  const int n = *norb;
  s.n_orbitals = n;
  s.n_electrons = *nelec;
  s.ms2 = ms2;
  s.h1 = RMatrix::Zero(n, n);
  s.eri.assign(static_cast<std::size_t>(n) * n * n * n, 0.0);
  std::vector<char> eri_set(s.eri.size(), 0);
  RMatrix h1_set = RMatrix::Zero(n, n);
  bool core_set = false;
  constexpr double kAgree = 1e-10;

  auto put_eri = [&](int i, int j, int k, int l, double v, int ln) {
    const std::array<std::array<int, 4>, 8> perms{{{i, j, k, l}, {j, i, k, l},
                                                  {i, j, l, k}, {j, i, l, k},
                                                  {k, l, i, j}, {l, k, i, j},
                                                  {k, l, j, i}, {l, k, j, i}}};
    for (const auto& p : perms) {
      const std::size_t idx =
          ((static_cast<std::size_t>(p[0]) * n + p[1]) * n + p[2]) * n + p[3];
      if (eri_set[idx] && std::abs(s.eri[idx] - v) > kAgree) {
        throw Error(ErrorCode::kSymmetryViolation,
                    "line " + std::to_string(ln) +
                        ": two-electron record contradicts an equivalent one");
      }
      s.eri[idx] = v;
      eri_set[idx] = 1;
    }
  };

  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::vector<std::string> tok;
    std::string t;
    while (ls >> t) tok.push_back(t);
    if (tok.empty()) continue;
    if (tok.size() != 5) throw ParseError(lineno, "expected 'value i j k l'");
    const double v = parse_double(tok[0], lineno);
    int idx[4];
    for (int k = 0; k < 4; ++k) {
      idx[k] = parse_index(tok[k + 1], lineno);
      if (idx[k] < 0 || idx[k] > n) {
        throw ParseError(lineno, "orbital index " + tok[k + 1] + " outside 0.." +
                                     std::to_string(n));
      }
    }
    const auto [i, j, k, l] = idx;
    if (i == 0 && j == 0 && k == 0 && l == 0) {
      if (core_set && std::abs(s.core_energy - v) > kAgree) {
        throw Error(ErrorCode::kSymmetryViolation,
                    "line " + std::to_string(lineno) + ": conflicting core energy");
      }
      s.core_energy = v;
      core_set = true;
    } else if (k == 0 && l == 0) {
      if (i == 0 || j == 0) throw ParseError(lineno, "one-body record with index 0");
      for (auto [a, b] : {std::pair{i - 1, j - 1}, std::pair{j - 1, i - 1}}) {
        if (h1_set(a, b) != 0.0 && std::abs(s.h1(a, b) - v) > kAgree) {
          throw Error(ErrorCode::kSymmetryViolation,
                      "line " + std::to_string(lineno) + ": conflicting one-body record");
        }
        s.h1(a, b) = v;
        h1_set(a, b) = 1.0;
      }
    } else {
      if (i == 0 || j == 0 || k == 0 || l == 0) {
        throw ParseError(lineno, "two-body record with index 0");
      }
      put_eri(i - 1, j - 1, k - 1, l - 1, v, lineno);
    }
  }
  return s;
}

MolecularIntegrals to_spin_orbitals(const SpatialIntegrals& s, SpinOrdering ordering) {
  return from_spatial(s.h1, s.eri, s.core_energy, s.n_electrons, s.ms2, ordering);
}

MolecularIntegrals parse_fcidump(std::string_view text, SpinOrdering ordering) {
  return to_spin_orbitals(parse_fcidump_spatial(text), ordering);
}

SpatialIntegrals to_spatial(const MolecularIntegrals& ints) {
  SpatialIntegrals s;
  const int n = ints.n_spatial();
  s.n_orbitals = n;
  s.n_electrons = ints.n_electrons;
  s.ms2 = ints.n_up - ints.n_down();
  s.core_energy = ints.core_energy;
  s.h1 = RMatrix::Zero(n, n);
  s.eri.assign(static_cast<std::size_t>(n) * n * n * n, 0.0);
  auto up = [&](int k) { return spin_orbital_index(k, 0, n, ints.ordering); };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) s.h1(i, j) = ints.h_one(up(i), up(j));
  }
  // (ij|kl) = h_{i k l j} with all indices spin up.
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
          s.eri_at(i, j, k, l) = ints.two(up(i), up(k), up(l), up(j));
        }
      }
    }
  }
  return s;
}

std::string emit_fcidump(const SpatialIntegrals& s) {
  std::ostringstream os;
  const int n = s.n_orbitals;
  os << " &FCI NORB=" << n << ",NELEC=" << s.n_electrons << ",MS2=" << s.ms2 << ",\n";
  os << "  ORBSYM=";
  for (int i = 0; i < n; ++i) os << "1,";
  os << "\n  ISYM=1,\n &END\n";
  os << std::setprecision(17);
  auto rec = [&](double v, int i, int j, int k, int l) {
    os << ' ' << v << ' ' << i << ' ' << j << ' ' << k << ' ' << l << '\n';
  };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= i; ++j) {
      const int ij = i * (i + 1) / 2 + j;
      for (int k = 0; k < n; ++k) {
        for (int l = 0; l <= k; ++l) {
          if (k * (k + 1) / 2 + l > ij) continue;
          const double v = s.eri_at(i, j, k, l);
          if (v != 0.0) rec(v, i + 1, j + 1, k + 1, l + 1);
        }
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= i; ++j) {
      if (s.h1(i, j) != 0.0) rec(s.h1(i, j), i + 1, j + 1, 0, 0);
    }
  }
  rec(s.core_energy, 0, 0, 0, 0);
  return os.str();
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  require(static_cast<bool>(in), ErrorCode::kInvalidArgument,
          "cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RMatrix parse_matrix(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<std::vector<double>> rows;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::vector<double> row;
    std::string t;
    while (ls >> t) row.push_back(parse_double(t, lineno));
    if (!row.empty()) rows.push_back(std::move(row));
  }
  const int n = static_cast<int>(rows.size());
  RMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n) throw ParseError(0, "matrix is not square");
    for (int j = 0; j < n; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

std::filesystem::path fixture_dir() {
  if (const char* env = std::getenv("QCC_FIXTURE_DIR"); env && *env) return env;
  return QCC_FIXTURE_DIR;
}

std::vector<FixtureInfo> list_fixtures() {
  const auto doc = nlohmann::json::parse(read_text_file(fixture_dir() / "manifest.json"));
  std::vector<FixtureInfo> out;
  for (const auto& e : doc) {
    FixtureInfo f;
    f.name = e.at("name").get<std::string>();
    f.basis = e.at("basis").get<std::string>();
    f.bond_length = e.at("bond_length_angstrom").get<double>();
    f.n_orbitals = e.at("norb").get<int>();
    f.n_electrons = e.at("nelec").get<int>();
    f.e_hf = e.at("e_hf").get<double>();
    if (e.contains("e_fci") && !e["e_fci"].is_null()) f.e_fci = e["e_fci"].get<double>();
    if (e.contains("e_cisd") && !e["e_cisd"].is_null()) f.e_cisd = e["e_cisd"].get<double>();
    f.has_rdm = std::filesystem::exists(fixture_dir() / (f.name + ".rdm1"));
    out.push_back(std::move(f));
  }
  return out;
}

FixtureInfo fixture_info(const std::string& name) {
  for (auto& f : list_fixtures()) {
    if (f.name == name) return f;
  }
  fail(ErrorCode::kInvalidArgument, "unknown fixture '" + name + "'");
}

SpatialIntegrals load_fixture(const std::string& name) {
  return parse_fcidump_spatial(read_text_file(fixture_dir() / (name + ".fcidump")));
}

RMatrix load_fixture_rdm(const std::string& name) {
  return parse_matrix(read_text_file(fixture_dir() / (name + ".rdm1")));
}

std::string pauli_sum_to_json(const PauliSum& s) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [str, c] : s.terms()) {
    arr.push_back({{"string", str.to_string()}, {"re", c.real()}, {"im", c.imag()}});
  }
  return arr.dump();
}

}  // namespace qcc
