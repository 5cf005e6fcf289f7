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
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qcc/encoding.hpp"
#include "qcc/fermion.hpp"
#include "qcc/io.hpp"
#include "qcc/optimizer.hpp"
#include "qcc/pauli.hpp"
#include "qcc/reduction.hpp"
#include "qcc/vqe.hpp"

namespace qcc {

enum class Solver { kExact, kVqe, kQpe, kSpectrum, kMitigate };
enum class MitigationTechnique { kLinear, kExponential, kPec, kPostselect };

std::string_view to_string(Solver s);
Solver parse_solver(std::string_view name);
std::string_view to_string(MitigationTechnique t);
MitigationTechnique parse_mitigation(std::string_view name);

struct RunConfig {
  // Problem source: exactly one of the two.
  std::string fixture;
  std::filesystem::path fcidump;

  Encoding encoding = Encoding::kJordanWigner;
  bool taper = false;
  bool active_space = false;  // natural-orbital reduction; needs the fixture's 1-RDM
  double noon_lower = kDefaultNoonLower;
  double noon_upper = kDefaultNoonUpper;

  Solver solver = Solver::kExact;
  AnsatzFamily ansatz = AnsatzFamily::kUccsd;
  int ansatz_depth = 1;  // Trotter steps, layers, HVA steps or LDCA cycles
  OptimizerConfig optimizer;
  EstimateOptions::Mode mode = EstimateOptions::Mode::kExact;
  std::uint64_t shots_per_term = 10000;

  // QPE.
  int n_ancilla = 10;
  int qpe_samples = 1000;
  QpeOptions::Backend qpe_backend = QpeOptions::Backend::kExact;
  int qpe_trotter_steps = 4;

  // Spectrum.
  int n_levels = 4;

  // Mitigation and noise.
  MitigationTechnique technique = MitigationTechnique::kExponential;
  double noise_p = 1e-3;
  std::vector<double> lambdas{1.0, 2.0, 3.0};
  int trajectories = 10000;

  std::uint64_t seed = 0;
  bool seed_given = false;

  void validate() const;
};

/// Counts recorded after one pipeline stage.
struct StageRecord {
  std::string stage;
  std::vector<std::pair<std::string, std::int64_t>> counts;
};

/// Qubit Hamiltonian plus the bookkeeping needed to build states on it.
struct Problem {
  std::string source;
  MolecularIntegrals ints;
  EncodingScheme scheme;
  PauliSum h;
  int n_qubits = 0;
  std::uint64_t reference_bits = 0;  // Hartree-Fock state on the (tapered) register
  bool tapered = false;
  SymmetrySector sector;
  std::vector<StageRecord> stages;
};

/// Ingest, active space, encode and taper.
Problem prepare_problem(const RunConfig& cfg);

/// Lowest eigenvalues of the problem's Hamiltonian within the reference's
/// electron-number and spin sector.
std::vector<double> sector_energies(const Problem& p, int k);

/// Ansatz for cfg.ansatz on the problem register.
Ansatz build_ansatz(const Problem& p, const RunConfig& cfg);

/// Full run; returns the JSON document (deterministic for a given config).
std::string run_pipeline(const RunConfig& cfg);

/// JSON document with the stage log and the (tapered) qubit Hamiltonian.
std::string hamiltonian_document(const RunConfig& cfg);

/// CSV table level,method,energy_hartree of the sector spectrum and its
/// single-qubit QSE estimate.
std::string spectrum_csv(const RunConfig& cfg);

struct CurveRow {
  double bond_length = 0.0;
  std::string method;
  double energy = 0.0;
  std::string fixture;
};

struct CurveResult {
  std::vector<CurveRow> rows;

  std::string to_csv() const;
};

/// Bond-length sweep over the fixtures of one basis. Methods: "hf" and
/// "exact" always, plus "vqe" when cfg.solver is kVqe.
CurveResult run_curve(const RunConfig& cfg, const std::string& basis);

}  // namespace qcc
