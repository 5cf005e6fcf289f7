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

#include <algorithm>
#include <cmath>
#include <string>

#include "qcc/error.hpp"

namespace qcc {
namespace {

ShotEstimate mean_and_error(const std::vector<double>& v, double* variance = nullptr) {
  ShotEstimate e;
  const double n = static_cast<double>(v.size());
  double sum = 0.0;
  for (double x : v) sum += x;
  e.mean = sum / n;
  double ss = 0.0;
  for (double x : v) ss += (x - e.mean) * (x - e.mean);
  const double var = v.size() > 1 ? ss / (n - 1.0) : 0.0;
  if (variance) *variance = var;
  e.std_error = std::sqrt(var / n);
  e.shots = v.size();
  return e;
}

// Intercept weights of the ordinary least-squares line through (x_i, y_i).
std::vector<double> intercept_weights(const std::vector<double>& x) {
  const double n = static_cast<double>(x.size());
  double xbar = 0.0;
  for (double v : x) xbar += v;
  xbar /= n;
  double sxx = 0.0;
  for (double v : x) sxx += (v - xbar) * (v - xbar);
  std::vector<double> w(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) w[i] = 1.0 / n - xbar * (x[i] - xbar) / sxx;
  return w;
}

bool anticommute(std::uint64_t a, std::uint64_t b, int arity) {
  int n = 0;
  for (int j = 0; j < arity; ++j) {
    const auto pa = static_cast<Pauli>((a >> (2 * j)) & 3);
    const auto pb = static_cast<Pauli>((b >> (2 * j)) & 3);
    if (pa != Pauli::I && pb != Pauli::I && pa != pb) ++n;
  }
  return n % 2 == 1;
}

PauliString local_string(std::uint64_t index, int arity) {
  PauliString p;
  for (int j = 0; j < arity; ++j) p.set(j, static_cast<Pauli>((index >> (2 * j)) & 3));
  return p;
}

QuasiProbDecomposition from_coefficients(const std::vector<double>& c, int arity) {
  QuasiProbDecomposition d;
  d.arity = arity;
  d.gamma = 0.0;
  for (double v : c) d.gamma += std::abs(v);
  for (std::size_t k = 0; k < c.size(); ++k) {
    d.entries.push_back({local_string(k, arity), std::abs(c[k]) / d.gamma, c[k] < 0.0 ? -1 : 1});
  }
  return d;
}

const QuasiProbEntry& draw(const QuasiProbDecomposition& d, Rng& rng) {
  const double u = rng.uniform();
  double acc = 0.0;
  for (const QuasiProbEntry& e : d.entries) {
    acc += e.probability;
    if (u < acc) return e;
  }
  return d.entries.back();
}

PauliString place(const PauliString& local, const std::vector<int>& support) {
  PauliString p;
  for (std::size_t k = 0; k < support.size(); ++k) {
    p.set(support[k], local.at(static_cast<int>(k)));
  }
  return p;
}

}  // namespace

void NoiseScaledSeries::validate() const {
  require(points.size() >= 2, ErrorCode::kInvalidArgument, "extrapolation needs two noise scales");
  require(points.front().first == 1.0, ErrorCode::kInvalidArgument,
          "the first noise scale must be 1");
  for (std::size_t i = 1; i < points.size(); ++i) {
    require(points[i].first > points[i - 1].first, ErrorCode::kInvalidArgument,
            "noise scales must be strictly increasing");
  }
}

NoiseScaledSeries zne_series(const Ansatz& a, std::span<const double> theta, const PauliSum& h,
                             const NoiseModel& noise, const std::vector<double>& lambdas,
                             int trajectories, Rng& rng) {
  NoiseScaledSeries s;
  const std::uint64_t seed = rng.next();
  for (double lambda : lambdas) {
    EstimateOptions opts;
    opts.noise = noise.scaled(lambda);
    opts.trajectories = trajectories;
    // Common random numbers across scales.
    Rng r(seed);
    s.points.emplace_back(lambda, estimate_energy(a, theta, h, opts, r));
  }
  s.validate();
  return s;
}

ShotEstimate extrapolate_linear(const NoiseScaledSeries& s) {
  s.validate();
  std::vector<double> x;
  for (const auto& [l, e] : s.points) x.push_back(l);
  const std::vector<double> w = intercept_weights(x);
  ShotEstimate r{0.0, 0.0, 0};
  double var = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const ShotEstimate& e = s.points[i].second;
    r.mean += w[i] * e.mean;
    var += w[i] * w[i] * e.std_error * e.std_error;
    r.shots += e.shots;
  }
  r.std_error = std::sqrt(var);
  return r;
}

ShotEstimate extrapolate_exponential(const NoiseScaledSeries& s, double offset) {
  s.validate();
  const double first = s.points.front().second.mean - offset;
  const double sign = first < 0.0 ? -1.0 : 1.0;
  std::vector<double> x;
  for (const auto& [l, e] : s.points) {
    const double v = e.mean - offset;
    if (v == 0.0 || (v < 0.0) != (sign < 0.0)) {
      fail(ErrorCode::kSignInconsistent, "noise-scaled estimates change sign");
    }
    x.push_back(l);
  }
  const std::vector<double> w = intercept_weights(x);
  double log_a = 0.0;
  double rel_var = 0.0;
  std::uint64_t shots = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const ShotEstimate& e = s.points[i].second;
    const double v = std::abs(e.mean - offset);
    log_a += w[i] * std::log(v);
    rel_var += w[i] * w[i] * (e.std_error / v) * (e.std_error / v);
    shots += e.shots;
  }
  const double amp = std::exp(log_a);
  return {sign * amp + offset, amp * std::sqrt(rel_var), shots};
}

std::vector<double> QuasiProbDecomposition::coefficients() const {
  std::vector<double> c;
  c.reserve(entries.size());
  for (const QuasiProbEntry& e : entries) c.push_back(gamma * e.parity * e.probability);
  return c;
}

QuasiProbDecomposition pec_decompose_depolarizing(double p, int arity) {
  if (!(p >= 0.0 && p < 1.0)) {
    fail(ErrorCode::kInvalidProbability, "depolarising strength must lie in [0, 1)");
  }
  require(arity == 1 || arity == 2, ErrorCode::kInvalidArgument, "arity must be 1 or 2");
  if (arity == 1) {
    const double ci = (4.0 - p) / (4.0 * (1.0 - p));
    const double cp = -p / (4.0 * (1.0 - p));
    return from_coefficients({ci, cp, cp, cp}, 1);
  }
  // Two qubits: invert the product of single-qubit channels numerically.
  const std::vector<double> q1{1.0 - 0.75 * p, 0.25 * p, 0.25 * p, 0.25 * p};
  std::vector<double> q2(16);
  for (std::size_t k = 0; k < 16; ++k) q2[k] = q1[k & 3] * q1[k >> 2];
  return pec_decompose_pauli_channel(q2, 2);
}

QuasiProbDecomposition pec_decompose_pauli_channel(const std::vector<double>& q, int arity) {
  require(arity >= 1 && arity <= 4, ErrorCode::kInvalidArgument, "arity must be 1..4");
  const std::size_t dim = std::size_t{1} << (2 * arity);
  require(q.size() == dim, ErrorCode::kDimensionMismatch, "need 4^arity channel probabilities");
  double total = 0.0;
  for (double v : q) {
    if (v < 0.0) fail(ErrorCode::kInvalidProbability, "negative channel probability");
    total += v;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    fail(ErrorCode::kInvalidProbability, "channel probabilities must sum to 1");
  }
  // Pauli transfer eigenvalues, then the inverse in the Pauli basis.
  std::vector<double> lambda(dim, 0.0);
  for (std::size_t b = 0; b < dim; ++b) {
    for (std::size_t a = 0; a < dim; ++a) {
      lambda[b] += anticommute(a, b, arity) ? -q[a] : q[a];
    }
    if (std::abs(lambda[b]) < 1e-14) {
      fail(ErrorCode::kInvalidProbability, "channel is not invertible");
    }
  }
  std::vector<double> c(dim, 0.0);
  for (std::size_t a = 0; a < dim; ++a) {
    for (std::size_t b = 0; b < dim; ++b) {
      c[a] += (anticommute(a, b, arity) ? -1.0 : 1.0) / lambda[b];
    }
    c[a] /= static_cast<double>(dim);
  }
  return from_coefficients(c, arity);
}

PecResult pec_estimate(const Circuit& c, std::span<const double> theta, const PauliSum& observable,
                       const NoiseModel& noise, const QuasiProbDecomposition& one_qubit,
                       const QuasiProbDecomposition& two_qubit, const PecOptions& opts, Rng& rng) {
  noise.validate();
  require(opts.samples >= 2, ErrorCode::kInvalidArgument, "PEC needs at least two samples");
  require(one_qubit.arity == 1 && two_qubit.arity == 2, ErrorCode::kInvalidArgument,
          "decompositions must have arity 1 and 2");
  const Circuit native = c.lowered();
  PecResult r;
  for (const Gate& g : native.gates()) {
    const std::size_t k = g.support().size();
    if (k == 1) {
      r.gamma_total *= one_qubit.gamma;
    } else if (k == 2) {
      r.gamma_total *= two_qubit.gamma;
    } else {
      fail(ErrorCode::kUnsupportedGate, "PEC is defined for one- and two-qubit gates only");
    }
  }
  const auto measure = [&](const StateVector& psi, Rng& tr) {
    if (opts.shots_per_sample == 0) return expectation(observable, psi);
    return sample_expectation(psi, observable, opts.shots_per_sample, tr).mean;
  };
  const Rng base(rng.next());
  const auto n = static_cast<std::size_t>(opts.samples);
  std::vector<double> mitigated(n);
  std::vector<double> raw(n);
  for (std::size_t s = 0; s < n; ++s) {
    Rng tr = base.split(2 * s);
    StateVector psi(c.n_qubits());
    int parity = 1;
    for (const Gate& g : native.gates()) {
      apply_gate(psi, g, theta);
      apply_gate_noise(psi, g, noise, tr);
      const std::vector<int> sup = g.support();
      const QuasiProbEntry& e = draw(sup.size() == 1 ? one_qubit : two_qubit, tr);
      if (!e.pauli.is_identity()) psi = apply(place(e.pauli, sup), psi);
      parity *= e.parity;
    }
    mitigated[s] = r.gamma_total * parity * measure(psi, tr);

    Rng plain = base.split(2 * s + 1);
    StateVector phi(c.n_qubits());
    run_noisy(native, theta, noise, plain, phi);
    raw[s] = measure(phi, plain);
  }
  r.mitigated = mean_and_error(mitigated, &r.sample_variance);
  r.raw = mean_and_error(raw, &r.raw_sample_variance);
  return r;
}

std::vector<StabiliserCheck> jordan_wigner_parity_checks(int n_modes, int n_electrons, int n_up,
                                                         SpinOrdering ordering,
                                                         bool include_spin_down) {
  require(n_modes >= 2 && n_modes % 2 == 0, ErrorCode::kInvalidArgument,
          "need an even number of spin orbitals");
  require(n_up >= 0 && n_up <= n_electrons, ErrorCode::kInvalidArgument, "bad spin-up count");
  const int n_spatial = n_modes / 2;
  StabiliserCheck total{{}, n_electrons % 2, ParityKind::kTotalNumber};
  StabiliserCheck up{{}, n_up % 2, ParityKind::kSpinUp};
  StabiliserCheck down{{}, (n_electrons - n_up) % 2, ParityKind::kSpinDown};
  for (int q = 0; q < n_modes; ++q) {
    total.parity_qubits.push_back(q);
    (spin_of(q, n_spatial, ordering) == 0 ? up : down).parity_qubits.push_back(q);
  }
  std::vector<StabiliserCheck> checks{total, up};
  if (include_spin_down) checks.push_back(down);
  return checks;
}

PostselectResult stabiliser_postselect(const Circuit& c, std::span<const double> theta,
                                       const PauliSum& h, const std::vector<StabiliserCheck>& checks,
                                       const NoiseModel& noise, const PostselectOptions& opts,
                                       Rng& rng) {
  noise.validate();
  require(opts.shots >= 2, ErrorCode::kInvalidArgument, "post-selection needs at least two shots");
  require(!checks.empty(), ErrorCode::kInvalidArgument, "no stabiliser checks given");
  const int n = c.n_qubits();
  const int m = static_cast<int>(checks.size());
  require(n + m <= 24, ErrorCode::kTooManyQubits, "register too large");
  if (opts.inject && opts.inject->max_qubit() >= n) {
    fail(ErrorCode::kBadTarget, "injected error acts outside the system register");
  }
  Circuit fan(n + m);
  std::vector<int> ancillas;
  std::uint64_t expected = 0;
  for (int k = 0; k < m; ++k) {
    for (int q : checks[static_cast<std::size_t>(k)].parity_qubits) {
      if (q < 0 || q >= n) fail(ErrorCode::kBadTarget, "parity qubit outside the register");
      fan.cnot(q, n + k);
    }
    ancillas.push_back(n + k);
    if (checks[static_cast<std::size_t>(k)].expected & 1) expected |= std::uint64_t{1} << k;
  }
  Circuit body(n + m);
  body.append(c);
  const Circuit native = body.lowered();

  const Rng base(rng.next());
  std::vector<double> kept;
  std::vector<double> raw;
  for (int s = 0; s < opts.shots; ++s) {
    Rng tr = base.split(static_cast<std::uint64_t>(s));
    StateVector psi(n + m);
    run_noisy(native, theta, noise, tr, psi);
    if (opts.inject) psi = apply(*opts.inject, psi);
    raw.push_back(expectation(h, psi));
    run_noisy(fan, theta, noise, tr, psi);
    const std::uint64_t outcome = sample_index(psi.marginal(ancillas), tr);
    if (outcome != expected) continue;
    CVector& amps = psi.amplitudes();
    for (Eigen::Index i = 0; i < amps.size(); ++i) {
      if ((static_cast<std::uint64_t>(i) >> n) != expected) amps[i] = 0.0;
    }
    psi.normalize();
    kept.push_back(expectation(h, psi));
  }
  if (kept.empty()) fail(ErrorCode::kAllShotsRejected, "every shot failed a stabiliser check");
  PostselectResult r;
  r.mitigated = mean_and_error(kept);
  r.raw = mean_and_error(raw);
  r.retained_fraction = static_cast<double>(kept.size()) / static_cast<double>(opts.shots);
  return r;
}

}  // namespace qcc
