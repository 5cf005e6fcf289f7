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

#include "qcc/pipeline.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "molecules.hpp"
#include "qcc/eigensolve.hpp"
#include "qcc/error.hpp"

namespace {

using nlohmann::json;
using qcc::RunConfig;

RunConfig h2(qcc::Encoding e = qcc::Encoding::kJordanWigner) {
  RunConfig c;
  c.fixture = "h2_sto3g_0.7414";
  c.encoding = e;
  return c;
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(QCC_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

TEST(Pipeline, H2UccsdExactMatchesOracle) {
  RunConfig c = h2();
  c.solver = qcc::Solver::kVqe;
  const json doc = json::parse(qcc::run_pipeline(c));
  const double oracle =
      qcc::ground_state(testmol::qubit_hamiltonian(testmol::load(c.fixture),
                                                   qcc::Encoding::kJordanWigner))
          .first;
  EXPECT_NEAR(doc["result"]["energy"].get<double>(), oracle, 1e-6);
  EXPECT_NEAR(doc["result"]["exact_energy"].get<double>(), oracle, 1e-10);
  EXPECT_NEAR(oracle, *qcc::fixture_info(c.fixture).e_fci, 1e-8);
  EXPECT_EQ(doc["config"]["encoding"], "jw");
  std::vector<std::string> stages;
  for (const auto& s : doc["stages"]) stages.push_back(s["stage"]);
  EXPECT_EQ(stages, (std::vector<std::string>{"ingest", "encode", "ansatz"}));
  EXPECT_EQ(doc["stages"][1]["counts"]["pauli_terms"], 15);
  EXPECT_EQ(doc["stages"][2]["counts"]["parameters"], 3);
}

TEST(Pipeline, TaperRemovesExactlyTwoQubits) {
  for (const std::string& fixture : {"h2_sto3g_0.7414", "lih_sto3g_1.45"}) {
    RunConfig c = h2(qcc::Encoding::kParity);
    c.fixture = fixture;
    const qcc::Problem full = qcc::prepare_problem(c);
    c.taper = true;
    const qcc::Problem tapered = qcc::prepare_problem(c);
    EXPECT_EQ(tapered.n_qubits, full.n_qubits - 2) << fixture;
    EXPECT_EQ(tapered.stages.back().stage, "taper");
    EXPECT_NEAR(qcc::sector_energies(tapered, 1)[0], qcc::sector_energies(full, 1)[0], 1e-10);
  }
}

TEST(Pipeline, TaperedUccsdReachesSectorGround) {
  RunConfig c = h2(qcc::Encoding::kParity);
  c.taper = true;
  c.solver = qcc::Solver::kVqe;
  const json doc = json::parse(qcc::run_pipeline(c));
  EXPECT_NEAR(doc["result"]["energy"].get<double>(), *qcc::fixture_info(c.fixture).e_fci, 1e-6);
  EXPECT_EQ(doc["stages"][2]["counts"]["qubits"], 2);
}

TEST(Pipeline, ActiveSpaceLithiumHydride) {
  RunConfig c;
  c.fixture = "lih_sto3g_1.45";
  c.active_space = true;
  const qcc::Problem p = qcc::prepare_problem(c);
  EXPECT_EQ(p.n_qubits, 8);
  EXPECT_EQ(p.stages[1].stage, "active_space");
  const double fci = *qcc::fixture_info(c.fixture).e_fci;
  EXPECT_LT(std::abs(qcc::sector_energies(p, 1)[0] - fci), 5e-4);
}

TEST(Pipeline, ByteIdenticalOutput) {
  RunConfig c = h2();
  c.solver = qcc::Solver::kVqe;
  c.mode = qcc::EstimateOptions::Mode::kShots;
  c.optimizer.method = qcc::OptimizerMethod::kSpsa;
  c.optimizer.max_evals = 150;
  c.shots_per_term = 1000;
  c.seed = 42;
  c.seed_given = true;
  EXPECT_EQ(qcc::run_pipeline(c), qcc::run_pipeline(c));

  RunConfig m = h2();
  m.solver = qcc::Solver::kMitigate;
  m.trajectories = 200;
  m.seed = 9;
  m.seed_given = true;
  EXPECT_EQ(qcc::run_pipeline(m), qcc::run_pipeline(m));
  m.seed = 10;
  const std::string other = qcc::run_pipeline(m);
  m.seed = 9;
  EXPECT_NE(qcc::run_pipeline(m), other);
}

TEST(Pipeline, MitigationReportsRawAndMitigated) {
  RunConfig c = h2();
  c.solver = qcc::Solver::kMitigate;
  c.trajectories = 2000;
  c.seed = 4;
  c.seed_given = true;
  for (auto t : {qcc::MitigationTechnique::kLinear, qcc::MitigationTechnique::kExponential,
                 qcc::MitigationTechnique::kPec, qcc::MitigationTechnique::kPostselect}) {
    c.technique = t;
    const json doc = json::parse(qcc::run_pipeline(c));
    const json& m = doc["result"]["mitigation"];
    EXPECT_TRUE(m.contains("raw") && m.contains("mitigated")) << to_string(t);
    EXPECT_GT(m["raw_error"].get<double>(), 0.0);
  }
  c.taper = true;
  c.encoding = qcc::Encoding::kParity;
  c.technique = qcc::MitigationTechnique::kPostselect;
  EXPECT_THROW(qcc::run_pipeline(c), qcc::Error);
}

TEST(Pipeline, QpeAndSpectrum) {
  RunConfig c = h2(qcc::Encoding::kParity);
  c.taper = true;
  c.solver = qcc::Solver::kQpe;
  c.seed = 1;
  c.seed_given = true;
  const json doc = json::parse(qcc::run_pipeline(c));
  const json& r = doc["result"];
  EXPECT_LE(std::abs(r["modal_energy"].get<double>() - r["exact_energy"].get<double>()),
            r["bin_width"].get<double>());

  const std::string csv = qcc::spectrum_csv(h2());
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "level,method,energy_hartree");
  std::getline(in, line);
  EXPECT_EQ(line.rfind("0,exact,-1.13727", 0), 0U) << line;
}

TEST(Pipeline, DissociationCurveHasSingleMinimum) {
  RunConfig c;
  const qcc::CurveResult curve = qcc::run_curve(c, "sto-3g");
  std::vector<double> exact;
  std::vector<double> lengths;
  for (const auto& r : curve.rows) {
    if (r.method != "exact") continue;
    lengths.push_back(r.bond_length);
    exact.push_back(r.energy);
  }
  ASSERT_GE(exact.size(), 5U);
  for (std::size_t i = 1; i < lengths.size(); ++i) EXPECT_GT(lengths[i], lengths[i - 1]);
  int sign_changes = 0;
  for (std::size_t i = 2; i < exact.size(); ++i) {
    if ((exact[i] - exact[i - 1] > 0) != (exact[i - 1] - exact[i - 2] > 0)) ++sign_changes;
  }
  EXPECT_EQ(sign_changes, 1);
  EXPECT_LT(exact.front(), 0.0);
  const auto lowest = std::min_element(exact.begin(), exact.end()) - exact.begin();
  EXPECT_DOUBLE_EQ(lengths[static_cast<std::size_t>(lowest)], 0.7414);
  for (std::size_t i = 0; i < curve.rows.size(); ++i) {
    if (curve.rows[i].method != "exact") continue;
    EXPECT_NEAR(curve.rows[i].energy, *qcc::fixture_info(curve.rows[i].fixture).e_fci, 1e-8);
  }
  EXPECT_EQ(curve.to_csv().rfind("bond_length_angstrom,method,energy_hartree,fixture\n", 0), 0U);
}

TEST(Pipeline, ConfigValidation) {
  RunConfig none;
  EXPECT_THROW(qcc::prepare_problem(none), qcc::Error);
  RunConfig both = h2();
  both.fcidump = "/nonexistent";
  EXPECT_THROW(qcc::prepare_problem(both), qcc::Error);
  RunConfig unseeded = h2();
  unseeded.solver = qcc::Solver::kQpe;
  EXPECT_THROW(qcc::run_pipeline(unseeded), qcc::Error);
  RunConfig jw = h2();
  jw.taper = true;
  try {
    qcc::prepare_problem(jw);
    FAIL();
  } catch (const qcc::Error& e) {
    EXPECT_NE(std::string(e.what()).find("taper:"), std::string::npos);
  }
}

TEST(Pipeline, FcidumpSourceMatchesFixture) {
  RunConfig c = h2();
  c.fixture.clear();
  c.fcidump = qcc::fixture_dir() / "h2_sto3g_0.7414.fcidump";
  EXPECT_NEAR(qcc::sector_energies(qcc::prepare_problem(c), 1)[0],
              qcc::sector_energies(qcc::prepare_problem(h2()), 1)[0], 1e-12);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli("--fixture h2_sto3g_0.7414 encode"), 0);
  EXPECT_EQ(run_cli("--fixture h2_sto3g_0.7414 --encoding parity --taper vqe"), 0);
  EXPECT_EQ(run_cli("--help"), 0);
  EXPECT_EQ(run_cli("--fixture h2_sto3g_0.7414 vqe --no-such-flag"), 2);
  EXPECT_EQ(run_cli("--fixture h2_sto3g_0.7414 --encoding xyz encode"), 2);
  EXPECT_EQ(run_cli("encode"), 2);
  const std::string bad = testing::TempDir() + "bad.fcidump";
  std::ofstream(bad) << "&FCI NORB=2,NELEC=2,MS2=0\n&END\n1.0 3 1 0 0\n";
  EXPECT_EQ(run_cli("--fcidump " + bad + " encode"), 2);
  // 12 system qubits exceed the dense controlled-evolution backend.
  EXPECT_EQ(run_cli("--fixture lih_sto3g_1.45 --seed 1 qpe --ancillas 4"), 3);
}

TEST(Cli, WritesOutputFile) {
  const std::string out = testing::TempDir() + "curve.csv";
  ASSERT_EQ(run_cli("curve --out " + out), 0);
  std::ifstream in(out);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "bond_length_angstrom,method,energy_hartree,fixture");
}

}  // namespace
