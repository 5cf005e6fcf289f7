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
#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "qcc/rng.hpp"

namespace qcc {

enum class OptimizerMethod { kNelderMead, kSpsa, kGradientDescent };

std::string_view to_string(OptimizerMethod m);
OptimizerMethod parse_optimizer(std::string_view name);

struct OptimizerConfig {
  OptimizerMethod method = OptimizerMethod::kNelderMead;
  int max_evals = 4000;
  double tolerance = 1e-10;  // |dE| per iteration, Hartree
  int patience = 10;         // consecutive iterations below tolerance
  std::uint64_t seed = 1;

  double nm_step = 0.1;  // initial simplex edge

  // SPSA gains a_k = a / (k + 1 + A)^alpha, c_k = c / (k + 1)^gamma.
  double spsa_a = 0.1;
  double spsa_c = 0.1;
  double spsa_big_a = -1.0;  // < 0 means 10% of the iteration budget
  double spsa_alpha = 0.602;
  double spsa_gamma = 0.101;
  double spsa_average_fraction = 0.2;  // trailing iterates averaged at the end

  double gd_step = 1.0;  // first trial step
  double gd_armijo = 1e-4;

  void validate() const;
};

struct TraceEntry {
  int iteration = 0;
  double energy = 0.0;  // objective at the current iterate
  double best = 0.0;    // best-so-far
  int evals = 0;        // cumulative objective evaluations
};

struct OptimizerResult {
  std::vector<double> best_params;
  double best_energy = 0.0;
  std::vector<double> final_params;  // SPSA: trailing-iterate average
  std::vector<TraceEntry> trace;
  int evals = 0;
  bool converged = false;
};

using Objective = std::function<double(std::span<const double>)>;
using Gradient = std::function<std::vector<double>(std::span<const double>)>;

/// Minimises `f` from x0. Gradient descent requires `grad`. Running out of
/// evaluations is not an error: the result reports converged = false.
OptimizerResult minimize(const Objective& f, const Gradient& grad, std::vector<double> x0,
                         const OptimizerConfig& config);

}  // namespace qcc
