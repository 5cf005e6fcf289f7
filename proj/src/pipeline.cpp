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

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include <json.hpp>

#include "qcc/eigensolve.hpp"
#include "qcc/error.hpp"
#include "qcc/mitigation.hpp"
#include "qcc/simulator.hpp"
#include "qcc/spectra.hpp"

namespace qcc {
namespace {

using Json = nlohmann::ordered_json;

template <typename F>
auto stage(const char* name, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    std::string what = e.what();
    const auto colon = what.find(": ");
    if (colon != std::string::npos) what = what.substr(colon + 2);
    throw Error(e.code(), std::string(name) + ": " + what);
  }
}

std::uint64_t spin_mask(int n_modes, int spin) {
  std::uint64_t m = 0;
  for (int q = 0; q < n_modes; ++q) {
    if (spin_of(q, n_modes / 2, SpinOrdering::kBlocked) == spin) m |= std::uint64_t{1} << q;
  }
  return m;
}

std::vector<std::uint64_t> sector_basis(const Problem& p) {
  const int m = p.ints.n_spin_orbitals;
  std::vector<std::uint64_t> basis;
  for (std::uint64_t occ : occupation_sector(m, spin_mask(m, 0), p.ints.n_up, spin_mask(m, 1),
                                             p.ints.n_down())) {
    std::uint64_t b = encode_state(occ, p.scheme);
    if (p.tapered) b = taper_bitstring(b, m);
    basis.push_back(b);
  }
  std::sort(basis.begin(), basis.end());
  basis.erase(std::unique(basis.begin(), basis.end()), basis.end());
  return basis;
}

StateVector sector_ground_state(const Problem& p) {
  const std::vector<std::uint64_t> basis = sector_basis(p);
  const Eigenpairs e = sector_eigensolve(p.h, basis, 1, true);
  StateVector psi(p.n_qubits);
  psi.amplitudes().setZero();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    psi[static_cast<Eigen::Index>(basis[i])] = e.vectors(static_cast<Eigen::Index>(i), 0);
  }
  psi.normalize();
  return psi;
}

PauliSum taper_like(const Problem& p, const PauliSum& s) {
  if (!p.tapered) return s;
  PauliSum t = taper_two_qubits(s, p.scheme, p.sector);
  t.set_n_qubits(p.n_qubits);
  return t;
}

Json estimate_json(const ShotEstimate& e) {
  return Json{{"mean", e.mean}, {"std_error", e.std_error}, {"samples", e.shots}};
}

Json stages_json(const Problem& p) {
  Json stages = Json::array();
  for (const StageRecord& s : p.stages) {
    Json counts;
    for (const auto& [k, v] : s.counts) counts[k] = v;
    stages.push_back({{"stage", s.stage}, {"counts", std::move(counts)}});
  }
  return stages;
}

Json config_json(const RunConfig& c) {
  Json j;
  if (!c.fixture.empty()) j["fixture"] = c.fixture;
  if (!c.fcidump.empty()) j["fcidump"] = c.fcidump.generic_string();
  j["encoding"] = std::string(to_string(c.encoding));
  j["taper"] = c.taper;
  j["active_space"] = c.active_space;
  if (c.active_space) j["noon_window"] = {c.noon_lower, c.noon_upper};
  j["solver"] = std::string(to_string(c.solver));
  if (c.solver == Solver::kVqe || c.solver == Solver::kMitigate) {
    j["ansatz"] = std::string(to_string(c.ansatz));
    j["ansatz_depth"] = c.ansatz_depth;
    j["optimizer"] = std::string(to_string(c.optimizer.method));
    j["max_evals"] = c.optimizer.max_evals;
  }
  if (c.solver == Solver::kVqe) {
    j["mode"] = c.mode == EstimateOptions::Mode::kExact ? "exact" : "shots";
    if (c.mode == EstimateOptions::Mode::kShots) j["shots_per_term"] = c.shots_per_term;
  }
  if (c.solver == Solver::kQpe) {
    j["n_ancilla"] = c.n_ancilla;
    j["samples"] = c.qpe_samples;
    j["backend"] = c.qpe_backend == QpeOptions::Backend::kExact ? "exact" : "trotter";
    if (c.qpe_backend == QpeOptions::Backend::kTrotter) j["trotter_steps"] = c.qpe_trotter_steps;
  }
  if (c.solver == Solver::kSpectrum) j["levels"] = c.n_levels;
  if (c.solver == Solver::kMitigate) {
    j["technique"] = std::string(to_string(c.technique));
    j["noise_p"] = c.noise_p;
    j["lambdas"] = c.lambdas;
    j["trajectories"] = c.trajectories;
  }
  if (c.seed_given) j["seed"] = c.seed;
  return j;
}

std::vector<double> optimal_parameters(const Ansatz& a, const PauliSum& h, const RunConfig& cfg) {
  VqeOptions opts;
  opts.optimizer = cfg.optimizer;
  opts.optimizer.method = OptimizerMethod::kGradientDescent;
  opts.optimizer.seed = cfg.seed;
  return optimize(a, h, opts).best_params;
}

Json run_solver(const RunConfig& cfg, Problem& p) {
  Json r;
  const double exact = sector_energies(p, 1).front();
  r["exact_energy"] = exact;
  r["hf_energy"] = expectation(p.h, StateVector::basis_state(p.n_qubits, p.reference_bits));
  Rng master(cfg.seed);

  switch (cfg.solver) {
    case Solver::kExact:
      break;
    case Solver::kVqe: {
      const Ansatz a = stage("ansatz", [&] { return build_ansatz(p, cfg); });
      p.stages.push_back({"ansatz",
                          {{"parameters", a.n_params()},
                           {"native_gates", static_cast<std::int64_t>(
                                                a.full_circuit().lowered().gates().size())}}});
      VqeOptions opts;
      opts.optimizer = cfg.optimizer;
      opts.optimizer.seed = cfg.seed;
      opts.estimate.mode = cfg.mode;
      opts.estimate.shots_per_term = cfg.shots_per_term;
      const VqeResult v = stage("vqe", [&] { return optimize(a, p.h, opts); });
      r["energy"] = v.final_estimate.mean;
      r["energy_std_error"] = v.final_estimate.std_error;
      r["best_energy"] = v.best_energy;
      r["error"] = v.final_estimate.mean - exact;
      r["evaluations"] = v.evals;
      r["shots"] = v.shots_used;
      r["converged"] = v.converged;
      r["parameters"] = v.best_params;
      Json trace = Json::array();
      for (const TraceEntry& t : v.trace) {
        trace.push_back({{"iteration", t.iteration}, {"energy", t.energy}, {"best", t.best}});
      }
      r["trace"] = std::move(trace);
      break;
    }
    case Solver::kQpe: {
      const StateVector psi = StateVector::basis_state(p.n_qubits, p.reference_bits);
      QpeOptions o;
      o.backend = cfg.qpe_backend;
      o.trotter_steps = cfg.qpe_trotter_steps;
      const QpeDistribution d =
          stage("qpe", [&] { return qpe_distribution(psi, p.h, cfg.n_ancilla, o); });
      Rng rng = master.split(1);
      std::map<std::uint64_t, int> counts;
      for (int s = 0; s < cfg.qpe_samples; ++s) ++counts[sample_index(d.probabilities, rng)];
      const auto modal = std::max_element(counts.begin(), counts.end(), [](auto& a, auto& b) {
        return a.second < b.second;
      });
      r["modal_energy"] = d.energy(modal->first);
      r["modal_count"] = modal->second;
      r["error"] = d.energy(modal->first) - exact;
      r["bin_width"] = 1.0 / (d.rescale.scale * std::ldexp(1.0, cfg.n_ancilla));
      r["rescale"] = {{"offset", d.rescale.offset}, {"scale", d.rescale.scale}};
      Json hist = Json::array();
      for (const auto& [y, n] : counts) hist.push_back({{"y", y}, {"energy", d.energy(y)}, {"count", n}});
      r["histogram"] = std::move(hist);
      break;
    }
    case Solver::kSpectrum: {
      r["sector_energies"] = sector_energies(p, cfg.n_levels);
      const StateVector g = sector_ground_state(p);
      const RVector qse = stage("qse", [&] {
        return qse_solve(g, p.h, single_qubit_expansion(p.n_qubits));
      });
      r["qse_energies"] = std::vector<double>(qse.data(), qse.data() + qse.size());
      break;
    }
    case Solver::kMitigate: {
      const Ansatz a = stage("ansatz", [&] { return build_ansatz(p, cfg); });
      const std::vector<double> theta = optimal_parameters(a, p.h, cfg);
      r["noiseless_energy"] = estimate_energy(a, theta, p.h).mean;
      Rng rng = master.split(2);
      Json m = stage("mitigate", [&] {
        Json out;
        switch (cfg.technique) {
          case MitigationTechnique::kLinear:
          case MitigationTechnique::kExponential: {
            const NoiseScaledSeries s = zne_series(a, theta, p.h,
                                                   NoiseModel::depolarizing(cfg.noise_p, cfg.noise_p),
                                                   cfg.lambdas, cfg.trajectories, rng);
            Json pts = Json::array();
            for (const auto& [l, e] : s.points) {
              Json row = estimate_json(e);
              row["lambda"] = l;
              pts.push_back(std::move(row));
            }
            out["series"] = std::move(pts);
            out["raw"] = estimate_json(s.points.front().second);
            out["mitigated"] = estimate_json(cfg.technique == MitigationTechnique::kLinear
                                                 ? extrapolate_linear(s)
                                                 : extrapolate_exponential(s));
            break;
          }
          case MitigationTechnique::kPec: {
            const NoiseModel noise = NoiseModel::depolarizing(cfg.noise_p, cfg.noise_p,
                                                              NoiseModel::TwoQubit::kIndependent);
            const PecResult e = pec_estimate(
                a.full_circuit(), theta, p.h, noise, pec_decompose_depolarizing(cfg.noise_p, 1),
                pec_decompose_depolarizing(cfg.noise_p, 2), {cfg.trajectories, 0}, rng);
            out["raw"] = estimate_json(e.raw);
            out["mitigated"] = estimate_json(e.mitigated);
            out["gamma_total"] = e.gamma_total;
            break;
          }
          case MitigationTechnique::kPostselect: {
            require(cfg.encoding == Encoding::kJordanWigner && !p.tapered,
                    ErrorCode::kInvalidArgument,
                    "post-selection parity checks need an untapered Jordan-Wigner register");
            const auto checks = jordan_wigner_parity_checks(
                p.ints.n_spin_orbitals, p.ints.n_electrons, p.ints.n_up, SpinOrdering::kBlocked);
            const PostselectResult e = stabiliser_postselect(
                a.full_circuit(), theta, p.h, checks,
                NoiseModel::depolarizing(cfg.noise_p, cfg.noise_p), {cfg.trajectories, {}}, rng);
            out["raw"] = estimate_json(e.raw);
            out["mitigated"] = estimate_json(e.mitigated);
            out["retained_fraction"] = e.retained_fraction;
            break;
          }
        }
        out["raw_error"] = out["raw"]["mean"].get<double>() - exact;
        out["mitigated_error"] = out["mitigated"]["mean"].get<double>() - exact;
        return out;
      });
      r["mitigation"] = std::move(m);
      break;
    }
  }
  return r;
}

}  // namespace

std::string_view to_string(Solver s) {
  switch (s) {
    case Solver::kExact: return "exact";
    case Solver::kVqe: return "vqe";
    case Solver::kQpe: return "qpe";
    case Solver::kSpectrum: return "spectrum";
    case Solver::kMitigate: return "mitigate";
  }
  return "?";
}

Solver parse_solver(std::string_view name) {
  for (Solver s : {Solver::kExact, Solver::kVqe, Solver::kQpe, Solver::kSpectrum,
                   Solver::kMitigate}) {
    if (to_string(s) == name) return s;
  }
  fail(ErrorCode::kInvalidArgument, "unknown solver '" + std::string(name) + "'");
}

std::string_view to_string(MitigationTechnique t) {
  switch (t) {
    case MitigationTechnique::kLinear: return "linear";
    case MitigationTechnique::kExponential: return "exponential";
    case MitigationTechnique::kPec: return "pec";
    case MitigationTechnique::kPostselect: return "postselect";
  }
  return "?";
}

MitigationTechnique parse_mitigation(std::string_view name) {
  for (MitigationTechnique t : {MitigationTechnique::kLinear, MitigationTechnique::kExponential,
                                MitigationTechnique::kPec, MitigationTechnique::kPostselect}) {
    if (to_string(t) == name) return t;
  }
  fail(ErrorCode::kInvalidArgument, "unknown mitigation technique '" + std::string(name) + "'");
}

void RunConfig::validate() const {
  require(fixture.empty() != fcidump.empty(), ErrorCode::kInvalidArgument,
          "give exactly one of a fixture name or an FCIDUMP path");
  if (!fcidump.empty()) {
    require(std::filesystem::exists(fcidump), ErrorCode::kInvalidArgument,
            "FCIDUMP file '" + fcidump.string() + "' does not exist");
  }
  require(!active_space || !fixture.empty(), ErrorCode::kInvalidArgument,
          "active-space reduction needs a fixture with a 1-RDM");
  require(ansatz_depth >= 1, ErrorCode::kInvalidArgument, "ansatz depth must be positive");
  require(n_ancilla >= 1 && qpe_samples >= 1, ErrorCode::kInvalidArgument,
          "QPE needs ancillas and samples");
  require(n_levels >= 1, ErrorCode::kInvalidArgument, "need at least one level");
  require(trajectories >= 2, ErrorCode::kInvalidArgument, "need at least two trajectories");
  optimizer.validate();
  const bool stochastic = solver == Solver::kQpe || solver == Solver::kMitigate ||
                          (solver == Solver::kVqe && (mode == EstimateOptions::Mode::kShots ||
                                                      optimizer.method == OptimizerMethod::kSpsa ||
                                                      ansatz != AnsatzFamily::kUccsd));
  require(!stochastic || seed_given, ErrorCode::kInvalidArgument,
          "a seed is required for stochastic runs");
}

Problem prepare_problem(const RunConfig& cfg) {
  cfg.validate();
  Problem p;
  p.source = cfg.fixture.empty() ? cfg.fcidump.generic_string() : cfg.fixture;
  const SpatialIntegrals s = stage("ingest", [&] {
    return cfg.fixture.empty() ? parse_fcidump_spatial(read_text_file(cfg.fcidump))
                               : load_fixture(cfg.fixture);
  });
  p.stages.push_back({"ingest",
                      {{"orbitals", s.n_orbitals}, {"electrons", s.n_electrons}, {"ms2", s.ms2}}});

  p.ints = stage("active_space", [&] {
    if (!cfg.active_space) return to_spin_orbitals(s);
    const NaturalOrbitals no = diagonalize_1rdm(load_fixture_rdm(cfg.fixture));
    ActiveSpace space = select_active_space(no.noons, cfg.noon_lower, cfg.noon_upper);
    MolecularIntegrals r = freeze_reduce(to_spin_orbitals(rotate_orbitals(s, no.rotation)), space);
    p.stages.push_back({"active_space",
                        {{"frozen_orbitals", static_cast<std::int64_t>(space.frozen_occupied.size())},
                         {"removed_orbitals", static_cast<std::int64_t>(space.removed_virtual.size())},
                         {"active_orbitals", static_cast<std::int64_t>(space.retained.size())},
                         {"electrons", r.n_electrons}}});
    return r;
  });

  const int m = p.ints.n_spin_orbitals;
  p.scheme = {cfg.encoding, m};
  p.h = stage("encode", [&] {
    PauliSum h = canonicalize(encode_operator(build_molecular_hamiltonian(p.ints), p.scheme));
    h.set_n_qubits(m);
    return h;
  });
  p.n_qubits = m;
  p.reference_bits = encode_state(p.ints.hf_bits(), p.scheme);
  p.stages.push_back({"encode",
                      {{"spin_orbitals", m},
                       {"qubits", m},
                       {"pauli_terms", static_cast<std::int64_t>(p.h.terms().size())}}});

  if (cfg.taper) {
    p.sector = sector_for(p.ints.n_electrons, p.ints.n_up);
    p.h = stage("taper", [&] {
      PauliSum t = taper_two_qubits(p.h, p.scheme, p.sector);
      t.set_n_qubits(m - 2);
      return t;
    });
    p.tapered = true;
    p.n_qubits = m - 2;
    p.reference_bits = taper_bitstring(p.reference_bits, m);
    p.stages.push_back(
        {"taper", {{"qubits", p.n_qubits}, {"pauli_terms", static_cast<std::int64_t>(p.h.terms().size())}}});
  }
  return p;
}

std::vector<double> sector_energies(const Problem& p, int k) {
  const Eigenpairs e = sector_eigensolve(p.h, sector_basis(p), k);
  return std::vector<double>(e.values.data(), e.values.data() + e.values.size());
}

Ansatz build_ansatz(const Problem& p, const RunConfig& cfg) {
  const int n = p.n_qubits;
  const int depth = cfg.ansatz_depth;
  switch (cfg.ansatz) {
    case AnsatzFamily::kUccsd: {
      const std::vector<int> occ = p.ints.hf_occupation();
      std::vector<int> virt;
      for (int q = 0; q < p.ints.n_spin_orbitals; ++q) {
        if (std::find(occ.begin(), occ.end(), q) == occ.end()) virt.push_back(q);
      }
      std::vector<PauliSum> gens;
      std::vector<std::string> labels;
      for (const UccGenerator& g : uccsd_generators(p.ints.n_spin_orbitals, occ, virt, true,
                                                    SpinOrdering::kBlocked)) {
        gens.push_back(taper_like(p, encode_operator(g.generator, p.scheme)));
        labels.push_back(g.label);
      }
      return build_uccsd_encoded(gens, labels, n, p.reference_bits, depth);
    }
    case AnsatzFamily::kHardwareEfficient:
      return build_hardware_efficient(n, depth);
    case AnsatzFamily::kHamiltonianVariational: {
      HvaPartition parts = encode_partition(build_molecular_hamiltonian(p.ints), p.scheme);
      parts.diagonal = taper_like(p, parts.diagonal);
      parts.hopping = taper_like(p, parts.hopping);
      parts.exchange = taper_like(p, parts.exchange);
      return build_hamiltonian_variational(parts, depth, basis_state_circuit(n, p.reference_bits),
                                           &p.h);
    }
    case AnsatzFamily::kLdca: {
      Ansatz a = build_ldca(n, depth);
      a.reference = basis_state_circuit(n, p.reference_bits);
      return a;
    }
  }
  fail(ErrorCode::kInvalidArgument, "unknown ansatz family");
}

std::string run_pipeline(const RunConfig& cfg) {
  Problem p = prepare_problem(cfg);
  Json doc;
  doc["config"] = config_json(cfg);
  Json result = run_solver(cfg, p);
  doc["stages"] = stages_json(p);
  doc["result"] = std::move(result);
  return doc.dump(2) + "\n";
}

std::string hamiltonian_document(const RunConfig& cfg) {
  const Problem p = prepare_problem(cfg);
  Json doc;
  doc["config"] = config_json(cfg);
  doc["config"].erase("solver");
  doc["stages"] = stages_json(p);
  doc["n_qubits"] = p.n_qubits;
  doc["reference_bits"] = p.reference_bits;
  doc["hamiltonian"] = Json::parse(pauli_sum_to_json(p.h));
  return doc.dump(2) + "\n";
}

std::string spectrum_csv(const RunConfig& cfg) {
  RunConfig c = cfg;
  c.solver = Solver::kSpectrum;
  const Json doc = Json::parse(run_pipeline(c));
  std::ostringstream out;
  out.precision(12);
  out << "level,method,energy_hartree\n";
  for (const char* key : {"sector_energies", "qse_energies"}) {
    const Json& v = doc["result"][key];
    for (std::size_t k = 0; k < v.size(); ++k) {
      out << k << ',' << (key[0] == 's' ? "exact" : "qse") << ',' << v[k].get<double>() << '\n';
    }
  }
  return out.str();
}

std::string CurveResult::to_csv() const {
  std::ostringstream out;
  out.precision(12);
  out << "bond_length_angstrom,method,energy_hartree,fixture\n";
  for (const CurveRow& r : rows) {
    out << r.bond_length << ',' << r.method << ',' << r.energy << ',' << r.fixture << '\n';
  }
  return out.str();
}

CurveResult run_curve(const RunConfig& cfg, const std::string& basis) {
  std::vector<FixtureInfo> points;
  for (const FixtureInfo& f : list_fixtures()) {
    if (f.basis == basis && f.name.rfind("h2_", 0) == 0) points.push_back(f);
  }
  require(points.size() >= 2, ErrorCode::kInvalidArgument,
          "basis '" + basis + "' has fewer than two H2 fixtures");
  std::sort(points.begin(), points.end(),
            [](const FixtureInfo& a, const FixtureInfo& b) { return a.bond_length < b.bond_length; });
  CurveResult c;
  std::vector<std::string> methods{"hf", "exact"};
  if (cfg.solver == Solver::kVqe) methods.push_back("vqe");
  std::map<std::string, std::vector<CurveRow>> by_method;
  for (const FixtureInfo& f : points) {
    RunConfig rc = cfg;
    rc.fixture = f.name;
    rc.fcidump.clear();
    Problem p = prepare_problem(rc);
    const double hf = expectation(p.h, StateVector::basis_state(p.n_qubits, p.reference_bits));
    by_method["hf"].push_back({f.bond_length, "hf", hf, f.name});
    by_method["exact"].push_back({f.bond_length, "exact", sector_energies(p, 1).front(), f.name});
    if (cfg.solver == Solver::kVqe) {
      const Ansatz a = build_ansatz(p, rc);
      VqeOptions opts;
      opts.optimizer = rc.optimizer;
      opts.optimizer.seed = rc.seed;
      opts.estimate.mode = rc.mode;
      opts.estimate.shots_per_term = rc.shots_per_term;
      by_method["vqe"].push_back(
          {f.bond_length, "vqe", optimize(a, p.h, opts).final_estimate.mean, f.name});
    }
  }
  for (const std::string& m : methods) {
    for (CurveRow& r : by_method[m]) c.rows.push_back(std::move(r));
  }
  return c;
}

}  // namespace qcc
