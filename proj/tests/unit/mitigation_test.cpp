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

#include "qcc/mitigation.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "circuit_oracles.hpp"
#include "oracles.hpp"
#include "qcc/eigensolve.hpp"
#include "qcc/error.hpp"
#include "vqe_fixtures.hpp"

namespace {

using qcc::NoiseModel;
using qcc::NoiseScaledSeries;
using qcc::PauliString;
using qcc::PauliSum;
using qcc::ShotEstimate;

constexpr double kPi = std::numbers::pi;

NoiseScaledSeries series(const std::vector<double>& lambdas, const std::vector<double>& means) {
  NoiseScaledSeries s;
  for (std::size_t i = 0; i < lambdas.size(); ++i) s.points.push_back({lambdas[i], {means[i], 0.0, 1}});
  return s;
}

struct OptimisedH2 {
  testmol::UccsdProblem p;
  std::vector<double> theta;
  double e0 = 0.0;
};

OptimisedH2 optimised_h2(int trotter_steps = 1) {
  OptimisedH2 o{testmol::uccsd_problem("h2_sto3g_0.7414", qcc::Encoding::kJordanWigner,
                                       trotter_steps),
                {}, 0.0};
  qcc::VqeOptions opts;
  opts.optimizer.method = qcc::OptimizerMethod::kGradientDescent;
  opts.optimizer.max_evals = 20000;
  o.theta = qcc::optimize(o.p.ansatz, o.p.h, opts).best_params;
  o.e0 = qcc::ground_state(o.p.h).first;
  return o;
}

// Superoperator of rho -> sum_k c_k P_k rho P_k on `arity` qubits.
oracle::CMat pauli_map(const std::vector<double>& c, int arity) {
  const auto dim = oracle::CMat::Index{1} << arity;
  oracle::CMat s = oracle::CMat::Zero(dim * dim, dim * dim);
  for (std::size_t k = 0; k < c.size(); ++k) {
    PauliString p;
    for (int j = 0; j < arity; ++j) p.set(j, static_cast<qcc::Pauli>((k >> (2 * j)) & 3));
    const oracle::CMat m = qcc::to_matrix(p, arity);
    s += c[k] * oracle::kron(m.conjugate(), m);
  }
  return s;
}

std::vector<double> depolarizing_probs(double p, int arity) {
  const std::vector<double> q1{1.0 - 0.75 * p, 0.25 * p, 0.25 * p, 0.25 * p};
  if (arity == 1) return q1;
  std::vector<double> q(16);
  for (std::size_t k = 0; k < 16; ++k) q[k] = q1[k & 3] * q1[k >> 2];
  return q;
}

TEST(Extrapolation, LinearExamples) {
  EXPECT_NEAR(qcc::extrapolate_linear(series({1, 2}, {0.7, 0.7})).mean, 0.7, 1e-14);
  EXPECT_NEAR(qcc::extrapolate_linear(series({1, 2}, {0.9, 0.8})).mean, 1.0, 1e-12);
  EXPECT_NEAR(qcc::extrapolate_linear(series({1, 3}, {0.9, 0.7})).mean, 1.0, 1e-12);
  EXPECT_NEAR(qcc::extrapolate_linear(series({1, 2, 3, 5}, {-0.9, -0.8, -0.7, -0.5})).mean, -1.0,
              1e-12);
}

TEST(Extrapolation, LinearErrorPropagation) {
  NoiseScaledSeries s;
  s.points = {{1.0, {0.9, 0.01, 100}}, {2.0, {0.8, 0.02, 100}}};
  const ShotEstimate e = qcc::extrapolate_linear(s);
  EXPECT_NEAR(e.std_error, std::sqrt(4 * 1e-4 + 4e-4), 1e-14);
  EXPECT_EQ(e.shots, 200U);
}

TEST(Extrapolation, ExponentialExamples) {
  const auto f = [](double l) { return 0.8 * std::exp(-0.5 * l); };
  EXPECT_NEAR(qcc::extrapolate_exponential(series({1, 2}, {f(1), f(2)})).mean, 0.8, 1e-12);
  EXPECT_NEAR(qcc::extrapolate_exponential(series({1, 2, 3}, {f(1), f(2), f(3)})).mean, 0.8,
              1e-12);
  EXPECT_NEAR(qcc::extrapolate_exponential(series({1, 2}, {-f(1), -f(2)})).mean, -0.8, 1e-12);
  EXPECT_NEAR(qcc::extrapolate_exponential(series({1, 4}, {0.3, 0.3})).mean, 0.3, 1e-14);
  // Two-point closed form O(1)^{l/(l-1)} O(l)^{-1/(l-1)}.
  const double l = 2.5;
  const double closed = std::pow(0.7, l / (l - 1)) * std::pow(0.55, -1 / (l - 1));
  EXPECT_NEAR(qcc::extrapolate_exponential(series({1, l}, {0.7, 0.55})).mean, closed, 1e-12);
  // Offset model.
  const auto g = [](double x) { return -0.2 + 0.6 * std::exp(-0.3 * x); };
  EXPECT_NEAR(qcc::extrapolate_exponential(series({1, 2, 3}, {g(1), g(2), g(3)}), -0.2).mean, 0.4,
              1e-12);
}

TEST(Extrapolation, RejectsBadSeries) {
  EXPECT_THROW(qcc::extrapolate_exponential(series({1, 2}, {0.5, -0.1})), qcc::Error);
  EXPECT_THROW(qcc::extrapolate_exponential(series({1, 2}, {0.5, 0.0})), qcc::Error);
  EXPECT_THROW(qcc::extrapolate_linear(series({1}, {0.5})), qcc::Error);
  EXPECT_THROW(qcc::extrapolate_linear(series({2, 3}, {0.5, 0.4})), qcc::Error);
  EXPECT_THROW(qcc::extrapolate_linear(series({1, 1}, {0.5, 0.4})), qcc::Error);
  try {
    qcc::extrapolate_exponential(series({1, 2}, {0.5, -0.1}));
  } catch (const qcc::Error& e) {
    EXPECT_EQ(e.code(), qcc::ErrorCode::kSignInconsistent);
  }
}

TEST(Extrapolation, H2LinearAndExponentialReduceError) {
  const OptimisedH2 o = optimised_h2();
  const NoiseModel noise = NoiseModel::depolarizing(1e-3, 1e-3);
  qcc::Rng rng(11);
  const NoiseScaledSeries s =
      qcc::zne_series(o.p.ansatz, o.theta, o.p.h, noise, {1, 2, 3}, 10000, rng);
  const double raw = std::abs(s.points[0].second.mean - o.e0);
  EXPECT_GT(s.points[0].second.mean, o.e0);
  EXPECT_LE(std::abs(qcc::extrapolate_linear(s).mean - o.e0), raw / 3.0);
  EXPECT_LE(std::abs(qcc::extrapolate_exponential(s).mean - o.e0), raw / 3.0);
}

TEST(Extrapolation, H2ExponentialOverSeeds) {
  const OptimisedH2 o = optimised_h2();
  const NoiseModel noise = NoiseModel::depolarizing(1e-3, 1e-3);
  int wins = 0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    qcc::Rng rng(seed);
    const NoiseScaledSeries s =
        qcc::zne_series(o.p.ansatz, o.theta, o.p.h, noise, {1, 2, 3}, 10000, rng);
    const double raw = std::abs(s.points[0].second.mean - o.e0);
    const double mit = std::abs(qcc::extrapolate_exponential(s).mean - o.e0);
    if (mit <= raw / 3.0) ++wins;
  }
  EXPECT_GE(wins, 7);
}

TEST(Extrapolation, DeepCircuitExponentialBeatsLinear) {
  const OptimisedH2 o = optimised_h2(3);
  const NoiseModel noise = NoiseModel::depolarizing(2e-3, 2e-3);
  int wins = 0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    qcc::Rng rng(100 + seed);
    const NoiseScaledSeries s =
        qcc::zne_series(o.p.ansatz, o.theta, o.p.h, noise, {1, 2, 3}, 4000, rng);
    const double lin = std::abs(qcc::extrapolate_linear(s).mean - o.e0);
    const double ex = std::abs(qcc::extrapolate_exponential(s).mean - o.e0);
    if (ex < lin) ++wins;
  }
  EXPECT_GE(wins, 7);
}

TEST(Pec, DepolarizingCoefficients) {
  const auto d0 = qcc::pec_decompose_depolarizing(0.0, 1);
  EXPECT_DOUBLE_EQ(d0.gamma, 1.0);
  EXPECT_DOUBLE_EQ(d0.entries[0].probability, 1.0);
  EXPECT_DOUBLE_EQ(d0.entries[1].probability, 0.0);

  const auto d = qcc::pec_decompose_depolarizing(0.1, 1);
  EXPECT_NEAR(d.gamma, 2.1 / 1.8, 1e-14);
  EXPECT_NEAR(d.gamma, 1.1667, 5e-5);
  ASSERT_EQ(d.entries.size(), 4U);
  EXPECT_TRUE(d.entries[0].pauli.is_identity());
  EXPECT_EQ(d.entries[0].parity, 1);
  EXPECT_NEAR(d.entries[0].probability, 3.9 / 4.2, 1e-14);
  EXPECT_NEAR(d.entries[0].probability, 0.9286, 5e-5);
  for (int k = 1; k < 4; ++k) {
    EXPECT_EQ(d.entries[static_cast<std::size_t>(k)].parity, -1);
    EXPECT_NEAR(d.entries[static_cast<std::size_t>(k)].probability, 0.1 / 4.2, 1e-14);
    EXPECT_NEAR(d.entries[static_cast<std::size_t>(k)].probability, 0.02381, 5e-6);
  }
  for (double p : {0.0, 0.01, 0.3, 0.9}) {
    const auto e = qcc::pec_decompose_depolarizing(p, 1);
    EXPECT_NEAR(e.entries[0].probability + 3 * e.entries[1].probability, 1.0, 1e-14);
    EXPECT_NEAR(e.gamma, (p + 2) / (2 - 2 * p), 1e-14);
  }
  EXPECT_THROW(qcc::pec_decompose_depolarizing(1.0, 1), qcc::Error);
  EXPECT_THROW(qcc::pec_decompose_depolarizing(-0.1, 2), qcc::Error);
  EXPECT_THROW(qcc::pec_decompose_depolarizing(0.1, 3), qcc::Error);
}

TEST(Pec, TwoQubitParitiesAndProbabilities) {
  const double p = 0.1;
  const auto d = qcc::pec_decompose_depolarizing(p, 2);
  const auto one = qcc::pec_decompose_depolarizing(p, 1);
  ASSERT_EQ(d.entries.size(), 16U);
  EXPECT_NEAR(d.gamma, one.gamma * one.gamma, 1e-12);
  double total = 0.0;
  for (const auto& e : d.entries) {
    total += e.probability;
    const int w = e.pauli.weight();
    EXPECT_EQ(e.parity, w == 1 ? -1 : 1) << e.pauli.to_string();
    const double p1 = one.entries[0].probability;
    const double p2 = one.entries[1].probability;
    const double expected = w == 0 ? p1 * p1 : (w == 1 ? p1 * p2 : p2 * p2);
    EXPECT_NEAR(e.probability, expected, 1e-12);
  }
  EXPECT_NEAR(total, 1.0, 1e-12);
}

TEST(Pec, CompositionWithForwardChannelIsIdentity) {
  for (int arity : {1, 2}) {
    for (double p : {0.0, 0.05, 0.1, 0.4}) {
      const auto d = qcc::pec_decompose_depolarizing(p, arity);
      const oracle::CMat forward = pauli_map(depolarizing_probs(p, arity), arity);
      const oracle::CMat inverse = pauli_map(d.coefficients(), arity);
      const oracle::CMat id = oracle::CMat::Identity(forward.rows(), forward.cols());
      EXPECT_LT((inverse * forward - id).cwiseAbs().maxCoeff(), 1e-12) << arity << " " << p;
      EXPECT_LT((forward * inverse - id).cwiseAbs().maxCoeff(), 1e-12);
      // On each Pauli basis element.
      for (std::size_t k = 0; k < (std::size_t{1} << (2 * arity)); ++k) {
        PauliString b;
        for (int j = 0; j < arity; ++j) b.set(j, static_cast<qcc::Pauli>((k >> (2 * j)) & 3));
        const oracle::CMat m = qcc::to_matrix(b, arity);
        const auto dim = m.rows();
        oracle::CVec v = Eigen::Map<const oracle::CVec>(m.data(), dim * dim);
        const oracle::CVec out = inverse * (forward * v);
        EXPECT_LT((out - v).cwiseAbs().maxCoeff(), 1e-12);
      }
    }
  }
}

TEST(Pec, GenericInverseMatchesAsymmetricChannel) {
  const std::vector<double> q{0.9, 0.05, 0.03, 0.02};
  const auto d = qcc::pec_decompose_pauli_channel(q, 1);
  const oracle::CMat id = oracle::CMat::Identity(4, 4);
  EXPECT_LT((pauli_map(d.coefficients(), 1) * pauli_map(q, 1) - id).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_GE(d.gamma, 1.0);
  EXPECT_THROW(qcc::pec_decompose_pauli_channel({0.5, 0.5, 0.0, 0.0}, 1), qcc::Error);
  EXPECT_THROW(qcc::pec_decompose_pauli_channel({0.5, 0.2}, 1), qcc::Error);
}

TEST(Pec, NoiselessIsPlainEstimate) {
  qcc::Circuit c(1);
  c.rx(0, kPi / 3);
  const auto d1 = qcc::pec_decompose_depolarizing(0.0, 1);
  const auto d2 = qcc::pec_decompose_depolarizing(0.0, 2);
  qcc::Rng rng(3);
  const auto r = qcc::pec_estimate(c, {}, PauliSum(PauliString::parse("Z0"), 1.0), NoiseModel{}, d1, d2,
                                   {100, 0}, rng);
  EXPECT_DOUBLE_EQ(r.gamma_total, 1.0);
  EXPECT_NEAR(r.mitigated.mean, 0.5, 1e-12);
  EXPECT_NEAR(r.mitigated.std_error, 0.0, 1e-12);
}

TEST(Pec, SingleQubitRxRecoversNoiselessValue) {
  const double p = 0.05;
  qcc::Circuit c(1);
  c.rx(0, kPi / 3);
  const NoiseModel noise = NoiseModel::depolarizing(p, p, NoiseModel::TwoQubit::kIndependent);
  // Channel oracle for the unmitigated value.
  const oracle::CMat rho = oracle::noisy_density(c.lowered(), {}, 1, noise.p1, noise.p2);
  const double raw_exact = (rho(0, 0) - rho(1, 1)).real();
  EXPECT_NEAR(raw_exact, (1 - p) * 0.5, 1e-12);

  qcc::Rng rng(2026);
  const auto r = qcc::pec_estimate(c, {}, PauliSum(PauliString::parse("Z0"), 1.0), noise,
                                   qcc::pec_decompose_depolarizing(p, 1),
                                   qcc::pec_decompose_depolarizing(p, 2), {100000, 0}, rng);
  EXPECT_NEAR(r.gamma_total, (p + 2) / (2 - 2 * p), 1e-14);
  EXPECT_LT(std::abs(r.mitigated.mean - 0.5), 3 * r.mitigated.std_error);
  EXPECT_LT(std::abs(r.raw.mean - raw_exact), 4 * r.raw.std_error);
  EXPECT_GT(r.mitigated.std_error, r.raw.std_error);
}

TEST(Pec, VarianceInflationMatchesGammaSquared) {
  const double p = 0.2;
  qcc::Circuit c(2);
  c.h(0);
  c.cnot(0, 1);
  const NoiseModel noise = NoiseModel::depolarizing(p, p, NoiseModel::TwoQubit::kIndependent);
  qcc::Rng rng(5);
  const auto r = qcc::pec_estimate(c, {}, PauliSum(PauliString::parse("Z1"), 1.0), noise,
                                   qcc::pec_decompose_depolarizing(p, 1),
                                   qcc::pec_decompose_depolarizing(p, 2), {40000, 1}, rng);
  const double g = (p + 2) / (2 - 2 * p);
  EXPECT_NEAR(r.gamma_total, g * g * g, 1e-12);
  const double ratio = r.sample_variance / r.raw_sample_variance;
  EXPECT_NEAR(ratio / (r.gamma_total * r.gamma_total), 1.0, 0.3);
  EXPECT_LT(std::abs(r.mitigated.mean), 3 * r.mitigated.std_error + 1e-12);
}

TEST(Pec, GammaTotalAtLeastOne) {
  qcc::Circuit c(2);
  c.h(0);
  c.cnot(0, 1);
  c.rz(1, 0.3);
  for (double p : {0.0, 1e-3, 0.1}) {
    qcc::Rng rng(1);
    const auto r = qcc::pec_estimate(
        c, {}, PauliSum(PauliString::parse("Z0 Z1"), 1.0),
        NoiseModel::depolarizing(p, p, NoiseModel::TwoQubit::kIndependent),
        qcc::pec_decompose_depolarizing(p, 1), qcc::pec_decompose_depolarizing(p, 2), {10, 0}, rng);
    if (p == 0.0) {
      EXPECT_DOUBLE_EQ(r.gamma_total, 1.0);
    } else {
      EXPECT_GT(r.gamma_total, 1.0);
    }
  }
}

TEST(Postselect, ParityChecksForJordanWigner) {
  const auto blocked = qcc::jordan_wigner_parity_checks(4, 2, 1, qcc::SpinOrdering::kBlocked);
  ASSERT_EQ(blocked.size(), 2U);
  EXPECT_EQ(blocked[0].parity_qubits, (std::vector<int>{0, 1, 2, 3}));
  EXPECT_EQ(blocked[0].expected, 0);
  EXPECT_EQ(blocked[0].kind, qcc::ParityKind::kTotalNumber);
  EXPECT_EQ(blocked[1].parity_qubits, (std::vector<int>{0, 1}));
  EXPECT_EQ(blocked[1].expected, 1);
  const auto inter =
      qcc::jordan_wigner_parity_checks(4, 2, 1, qcc::SpinOrdering::kInterleaved, true);
  ASSERT_EQ(inter.size(), 3U);
  EXPECT_EQ(inter[1].parity_qubits, (std::vector<int>{0, 2}));
  EXPECT_EQ(inter[2].parity_qubits, (std::vector<int>{1, 3}));
  EXPECT_EQ(inter[2].kind, qcc::ParityKind::kSpinDown);
}

TEST(Postselect, NoiselessKeepsEveryShot) {
  const OptimisedH2 o = optimised_h2();
  const auto checks = qcc::jordan_wigner_parity_checks(4, 2, 1, qcc::SpinOrdering::kBlocked);
  qcc::Rng rng(1);
  const auto r = qcc::stabiliser_postselect(o.p.ansatz.full_circuit(), o.theta, o.p.h, checks,
                                            NoiseModel{}, {50, std::nullopt}, rng);
  EXPECT_DOUBLE_EQ(r.retained_fraction, 1.0);
  const double exact = qcc::expectation(o.p.h, o.p.ansatz.prepare(o.theta));
  EXPECT_NEAR(r.mitigated.mean, exact, 1e-10);
  EXPECT_NEAR(r.raw.mean, exact, 1e-10);
}

TEST(Postselect, InjectedBitFlipIsAlwaysRejected) {
  const OptimisedH2 o = optimised_h2();
  const auto number = qcc::jordan_wigner_parity_checks(4, 2, 1, qcc::SpinOrdering::kBlocked);
  for (int q = 0; q < 4; ++q) {
    qcc::Rng rng(static_cast<std::uint64_t>(q));
    qcc::PostselectOptions opts{100, PauliString::single(q, qcc::Pauli::X)};
    try {
      qcc::stabiliser_postselect(o.p.ansatz.full_circuit(), o.theta, o.p.h, {number[0]},
                                 NoiseModel{}, opts, rng);
      ADD_FAILURE() << "shot with X" << q << " was kept";
    } catch (const qcc::Error& e) {
      EXPECT_EQ(e.code(), qcc::ErrorCode::kAllShotsRejected);
    }
  }
  // A Z error commutes with the check and passes.
  qcc::Rng rng(9);
  const auto r = qcc::stabiliser_postselect(o.p.ansatz.full_circuit(), o.theta, o.p.h,
                                            {number[0]}, NoiseModel{},
                                            {20, PauliString::single(0, qcc::Pauli::Z)}, rng);
  EXPECT_DOUBLE_EQ(r.retained_fraction, 1.0);
}

TEST(Postselect, H2ErrorReducedOverSeeds) {
  const OptimisedH2 o = optimised_h2();
  const auto checks = qcc::jordan_wigner_parity_checks(4, 2, 1, qcc::SpinOrdering::kBlocked);
  const NoiseModel noise = NoiseModel::depolarizing(2e-3, 2e-3);
  int wins = 0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    qcc::Rng rng(seed);
    const auto r = qcc::stabiliser_postselect(o.p.ansatz.full_circuit(), o.theta, o.p.h, checks,
                                              noise, {10000, std::nullopt}, rng);
    const double raw = std::abs(r.raw.mean - o.e0);
    const double mit = std::abs(r.mitigated.mean - o.e0);
    EXPECT_GT(r.retained_fraction, 0.5);
    EXPECT_LT(r.retained_fraction, 1.0);
    if (mit < raw) ++wins;
  }
  EXPECT_GE(wins, 8);
}

}  // namespace
