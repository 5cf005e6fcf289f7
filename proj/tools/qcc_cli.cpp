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

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

#include "qcc/error.hpp"
#include "qcc/pipeline.hpp"

namespace {

constexpr int kExitParse = 2;
constexpr int kExitNumerical = 3;

void write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) qcc::fail(qcc::ErrorCode::kInvalidArgument, "cannot open '" + path + "' for writing");
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum computational chemistry toolkit: encode, taper and solve molecular "
               "Hamiltonians on a statevector simulator."};
  app.require_subcommand(1);
  app.fallthrough();

  qcc::RunConfig cfg;
  std::string fcidump;
  std::string encoding = "jw";
  std::string out_path;
  app.add_option("--fixture", cfg.fixture, "Name of a bundled molecule fixture");
  app.add_option("--fcidump", fcidump, "Path to an FCIDUMP file")->check(CLI::ExistingFile);
  app.add_option("--encoding", encoding, "Fermion-to-qubit encoding")
      ->check(CLI::IsMember({"jw", "parity", "bk", "bktree"}))
      ->capture_default_str();
  app.add_flag("--taper", cfg.taper, "Remove the two parity qubits");
  app.add_flag("--active-space", cfg.active_space,
               "Reduce to natural orbitals inside the occupation window (fixtures with a 1-RDM)");
  app.add_option("--seed", cfg.seed, "Seed for every stochastic stage");
  app.add_option("--out", out_path, "Output file (stdout when omitted)");

  auto* encode = app.add_subcommand("encode", "Emit the qubit Hamiltonian as JSON");
  auto* taper = app.add_subcommand("taper", "Emit the two-qubit-tapered Hamiltonian as JSON");

  std::string ansatz = "uccsd";
  std::string optimizer = "gd";
  std::string mode = "exact";
  auto add_ansatz_options = [&](CLI::App* sub) {
    sub->add_option("--ansatz", ansatz, "Ansatz family")
        ->check(CLI::IsMember({"uccsd", "hea", "hva", "ldca"}))
        ->capture_default_str();
    sub->add_option("--depth", cfg.ansatz_depth, "Trotter steps, layers or cycles")
        ->capture_default_str();
    sub->add_option("--optimizer", optimizer, "Classical optimizer")
        ->check(CLI::IsMember({"nm", "spsa", "gd"}))
        ->capture_default_str();
    sub->add_option("--max-evals", cfg.optimizer.max_evals, "Objective evaluation budget")
        ->capture_default_str();
  };
  auto* vqe = app.add_subcommand("vqe", "Variational ground-state search");
  add_ansatz_options(vqe);
  vqe->add_option("--mode", mode, "Energy estimation")
      ->check(CLI::IsMember({"exact", "shots"}))
      ->capture_default_str();
  vqe->add_option("--shots", cfg.shots_per_term, "Shots per Pauli term in shots mode")
      ->capture_default_str();

  std::string backend = "exact";
  auto* qpe = app.add_subcommand("qpe", "Phase estimation from the Hartree-Fock state");
  qpe->add_option("--ancillas", cfg.n_ancilla, "Readout qubits")->capture_default_str();
  qpe->add_option("--samples", cfg.qpe_samples, "Readout samples")->capture_default_str();
  qpe->add_option("--backend", backend, "Controlled-evolution backend")
      ->check(CLI::IsMember({"exact", "trotter"}))
      ->capture_default_str();
  qpe->add_option("--trotter-steps", cfg.qpe_trotter_steps, "Trotter steps per power")
      ->capture_default_str();

  auto* spectrum = app.add_subcommand("spectrum", "Low-lying spectrum as CSV");
  spectrum->add_option("--levels", cfg.n_levels, "Number of levels")->capture_default_str();

  std::string technique = "exponential";
  auto* mitigate = app.add_subcommand("mitigate", "Noisy energy with and without mitigation");
  add_ansatz_options(mitigate);
  mitigate->add_option("--technique", technique, "Mitigation technique")
      ->check(CLI::IsMember({"linear", "exponential", "pec", "postselect"}))
      ->capture_default_str();
  mitigate->add_option("--p", cfg.noise_p, "Depolarising strength per gate")
      ->capture_default_str();
  mitigate->add_option("--lambdas", cfg.lambdas, "Noise scales for extrapolation");
  mitigate->add_option("--trajectories", cfg.trajectories, "Noisy samples")
      ->capture_default_str();

  std::string basis = "sto-3g";
  bool curve_vqe = false;
  auto* curve = app.add_subcommand("curve", "H2 dissociation curve as CSV");
  curve->add_option("--basis", basis, "Basis set of the fixtures")->capture_default_str();
  curve->add_flag("--vqe", curve_vqe, "Add a UCCSD-VQE column");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  try {
    cfg.fcidump = fcidump;
    cfg.seed_given = app.count("--seed") > 0;
    cfg.encoding = qcc::parse_encoding(encoding);
    cfg.ansatz = qcc::parse_ansatz(ansatz);
    cfg.optimizer.method = qcc::parse_optimizer(optimizer);
    cfg.mode = mode == "shots" ? qcc::EstimateOptions::Mode::kShots
                               : qcc::EstimateOptions::Mode::kExact;
    cfg.qpe_backend = backend == "trotter" ? qcc::QpeOptions::Backend::kTrotter
                                           : qcc::QpeOptions::Backend::kExact;
    cfg.technique = qcc::parse_mitigation(technique);

    std::string text;
    if (*encode || *taper) {
      if (*taper) cfg.taper = true;
      text = qcc::hamiltonian_document(cfg);
    } else if (*vqe) {
      cfg.solver = qcc::Solver::kVqe;
      text = qcc::run_pipeline(cfg);
    } else if (*qpe) {
      cfg.solver = qcc::Solver::kQpe;
      text = qcc::run_pipeline(cfg);
    } else if (*spectrum) {
      text = qcc::spectrum_csv(cfg);
    } else if (*mitigate) {
      cfg.solver = qcc::Solver::kMitigate;
      text = qcc::run_pipeline(cfg);
    } else if (*curve) {
      if (curve_vqe) cfg.solver = qcc::Solver::kVqe;
      text = qcc::run_curve(cfg, basis).to_csv();
    }
    write_output(text, out_path);
  } catch (const qcc::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    const bool usage = e.code() == qcc::ErrorCode::kParseError ||
                       e.code() == qcc::ErrorCode::kInvalidArgument;
    return usage ? kExitParse : kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumerical;
  }
  return 0;
}
