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

#include "qcc/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qcc/error.hpp"

namespace qcc {
namespace {

using Vec = std::vector<double>;

// Shared bookkeeping: evaluation budget, best point, trace, patience rule.
class Tracker {
 public:
  Tracker(const Objective& f, const OptimizerConfig& cfg) : f_(f), cfg_(cfg) {}

  double eval(const Vec& x) {
    ++evals_;
    const double v = f_(x);
    if (!has_best_ || v < best_) {
      best_ = v;
      best_x_ = x;
      has_best_ = true;
    }
    return v;
  }

  bool budget_left(int needed = 1) const { return evals_ + needed <= cfg_.max_evals; }

  // Records one iteration; `change` is the convergence measure for it.
  void record(double energy, double change) {
    trace_.push_back({static_cast<int>(trace_.size()) + 1, energy, best_, evals_});
    streak_ = std::abs(change) < cfg_.tolerance ? streak_ + 1 : 0;
  }

  bool converged() const { return streak_ >= cfg_.patience; }

  OptimizerResult finish(Vec final_x) {
    OptimizerResult r;
    r.best_params = best_x_;
    r.best_energy = best_;
    r.final_params = std::move(final_x);
    r.trace = std::move(trace_);
    r.evals = evals_;
    r.converged = converged();
    return r;
  }

 private:
  const Objective& f_;
  const OptimizerConfig& cfg_;
  int evals_ = 0;
  double best_ = 0.0;
  Vec best_x_;
  bool has_best_ = false;
  std::vector<TraceEntry> trace_;
  int streak_ = 0;
};

Vec axpy(double a, const Vec& x, const Vec& y) {
  Vec out(y);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += a * x[i];
  return out;
}

OptimizerResult nelder_mead(const Objective& f, Vec x0, const OptimizerConfig& cfg) {
  Tracker t(f, cfg);
  const std::size_t n = x0.size();
  const double dn = static_cast<double>(n);
  // Dimension-adaptive coefficients; the classic values below two dimensions.
  const double rho = 1.0;
  const double chi = n >= 2 ? 1.0 + 2.0 / dn : 2.0;
  const double psi = n >= 2 ? 0.75 - 0.5 / dn : 0.5;
  const double sigma = n >= 2 ? 1.0 - 1.0 / dn : 0.5;

  std::vector<Vec> xs{x0};
  std::vector<double> fs{t.eval(x0)};
  for (std::size_t i = 0; i < n; ++i) {
    Vec x = x0;
    x[i] += cfg.nm_step;
    xs.push_back(x);
    fs.push_back(t.eval(x));
  }
  std::vector<std::size_t> order(n + 1);
  auto sort_simplex = [&] {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return fs[a] < fs[b]; });
    std::vector<Vec> nx;
    std::vector<double> nf;
    for (auto k : order) {
      nx.push_back(xs[k]);
      nf.push_back(fs[k]);
    }
    xs.swap(nx);
    fs.swap(nf);
  };
  sort_simplex();
  double prev_best = fs[0];
  while (n > 0 && !t.converged() && t.budget_left(2)) {
    Vec centroid(n, 0.0);
    for (std::size_t k = 0; k < n; ++k) centroid = axpy(1.0 / dn, xs[k], centroid);
    const Vec& worst = xs[n];
    auto along = [&](double coef) {
      Vec d(n);
      for (std::size_t i = 0; i < n; ++i) d[i] = centroid[i] + coef * (centroid[i] - worst[i]);
      return d;
    };
    const Vec xr = along(rho);
    const double fr = t.eval(xr);
    if (fr < fs[0]) {
      const Vec xe = along(rho * chi);
      const double fe = t.eval(xe);
      if (fe < fr) {
        xs[n] = xe;
        fs[n] = fe;
      } else {
        xs[n] = xr;
        fs[n] = fr;
      }
    } else if (fr < fs[n - 1]) {
      xs[n] = xr;
      fs[n] = fr;
    } else {
      const bool outside = fr < fs[n];
      const Vec xc = along(outside ? rho * psi : -psi);
      const double fc = t.eval(xc);
      if (fc < (outside ? fr : fs[n])) {
        xs[n] = xc;
        fs[n] = fc;
      } else {
        for (std::size_t k = 1; k <= n && t.budget_left(); ++k) {
          for (std::size_t i = 0; i < n; ++i) xs[k][i] = xs[0][i] + sigma * (xs[k][i] - xs[0][i]);
          fs[k] = t.eval(xs[k]);
        }
      }
    }
    sort_simplex();
    // Converged once the best value has settled and the simplex is flat.
    const double change = std::max(std::abs(fs[0] - prev_best), fs[n] - fs[0]);
    prev_best = fs[0];
    t.record(fs[0], change);
  }
  if (n == 0) t.record(fs[0], 0.0);
  return t.finish(xs[0]);
}

OptimizerResult spsa(const Objective& f, Vec x, const OptimizerConfig& cfg) {
  Tracker t(f, cfg);
  Rng rng(cfg.seed);
  const std::size_t n = x.size();
  const int iterations = std::max(1, cfg.max_evals / 3);
  const double big_a = cfg.spsa_big_a >= 0.0 ? cfg.spsa_big_a : 0.1 * iterations;
  std::vector<Vec> history;
  double prev = t.eval(x);
  for (int k = 0; k < iterations && t.budget_left(3) && !t.converged(); ++k) {
    const double ak = cfg.spsa_a / std::pow(k + 1 + big_a, cfg.spsa_alpha);
    const double ck = cfg.spsa_c / std::pow(k + 1, cfg.spsa_gamma);
    Vec delta(n);
    for (auto& d : delta) d = rng.rademacher();
    const double fp = t.eval(axpy(ck, delta, x));
    const double fm = t.eval(axpy(-ck, delta, x));
    const double slope = (fp - fm) / (2.0 * ck);
    for (std::size_t i = 0; i < n; ++i) x[i] -= ak * slope / delta[i];
    history.push_back(x);
    const double e = t.eval(x);
    t.record(e, e - prev);
    prev = e;
  }
  Vec avg = x;
  if (!history.empty()) {
    const auto keep = std::max<std::size_t>(
        1, static_cast<std::size_t>(cfg.spsa_average_fraction * history.size()));
    std::fill(avg.begin(), avg.end(), 0.0);
    for (std::size_t h = history.size() - keep; h < history.size(); ++h) {
      avg = axpy(1.0 / static_cast<double>(keep), history[h], avg);
    }
  }
  return t.finish(avg);
}

OptimizerResult gradient_descent(const Objective& f, const Gradient& grad, Vec x,
                                 const OptimizerConfig& cfg) {
  require(static_cast<bool>(grad), ErrorCode::kInvalidArgument,
          "gradient descent needs a gradient");
  Tracker t(f, cfg);
  double fx = t.eval(x);
  double step = cfg.gd_step;
  while (!t.converged() && t.budget_left()) {
    const Vec g = grad(x);
    const double g2 = std::inner_product(g.begin(), g.end(), g.begin(), 0.0);
    if (g2 == 0.0) {
      t.record(fx, 0.0);
      continue;
    }
    // Armijo backtracking from a step that grows after each success.
    Vec trial;
    double ft = fx;
    bool accepted = false;
    while (t.budget_left() && step > 1e-14) {
      trial = axpy(-step, g, x);
      ft = t.eval(trial);
      if (ft <= fx - cfg.gd_armijo * step * g2) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) {
      t.record(fx, 0.0);
      break;
    }
    const double change = ft - fx;
    x = trial;
    fx = ft;
    step *= 2.0;
    t.record(fx, change);
  }
  return t.finish(x);
}

}  // namespace

std::string_view to_string(OptimizerMethod m) {
  switch (m) {
    case OptimizerMethod::kNelderMead: return "nelder-mead";
    case OptimizerMethod::kSpsa: return "spsa";
    case OptimizerMethod::kGradientDescent: return "gradient-descent";
  }
  return "?";
}

OptimizerMethod parse_optimizer(std::string_view name) {
  if (name == "nelder-mead" || name == "nm") return OptimizerMethod::kNelderMead;
  if (name == "spsa") return OptimizerMethod::kSpsa;
  if (name == "gradient-descent" || name == "gd") return OptimizerMethod::kGradientDescent;
  fail(ErrorCode::kInvalidArgument, "unknown optimizer '" + std::string(name) + "'");
}

void OptimizerConfig::validate() const {
  require(tolerance > 0.0, ErrorCode::kInvalidArgument, "tolerance must be positive");
  require(max_evals >= 1, ErrorCode::kInvalidArgument, "max_evals must be positive");
  require(patience >= 1, ErrorCode::kInvalidArgument, "patience must be positive");
}

OptimizerResult minimize(const Objective& f, const Gradient& grad, std::vector<double> x0,
                         const OptimizerConfig& config) {
  config.validate();
  switch (config.method) {
    case OptimizerMethod::kNelderMead: return nelder_mead(f, std::move(x0), config);
    case OptimizerMethod::kSpsa: return spsa(f, std::move(x0), config);
    case OptimizerMethod::kGradientDescent:
      return gradient_descent(f, grad, std::move(x0), config);
  }
  fail(ErrorCode::kInvalidArgument, "unknown optimizer");
}

}  // namespace qcc
