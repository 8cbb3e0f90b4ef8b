// Copyright 2026 The annealed-cm Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "acm/annealed_iid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "acm/errors.hpp"
#include "acm/kernel.hpp"

namespace acm {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kBetaCap = 50.0;

double atanh_inverse_nu(const DegreeDistribution& q) {
  const double nu = forward_degree_nu(q);
  return nu > 1.0 ? std::atanh(1.0 / nu) : kInf;
}

// Gradients for every support point; T and F_beta(T) are shared.
std::vector<double> all_q_gradients(std::span<const int> degrees, std::span<const double> weights,
                                    std::span<const double> s, const ModelParams& params) {
  double stub_mass = 0.0;
  double edge_mass = 0.0;
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    stub_mass += degrees[i] * weights[i];
    edge_mass += degrees[i] * weights[i] * s[i];
  }
  std::vector<double> grad(degrees.size());
  double t = 0.0, F = 0.0, Fp = 0.0;
  if (stub_mass > 0.0) {
    t = std::clamp(edge_mass / stub_mass, 0.0, 1.0);
    F = F_beta(t, params.beta);
    Fp = F_beta_prime(t, params.beta);
  }
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    const double k = degrees[i];
    double g = binary_entropy(s[i]) + 2.0 * s[i] * params.B + k * F;
    if (stub_mass > 0.0) g += stub_mass * Fp * (k * s[i] / stub_mass - k * t / stub_mass);
    grad[i] = g;
  }
  return grad;
}

DegreeDistribution from_log_weights(std::span<const int> degrees, const std::vector<double>& lw,
                                    const Provenance& prov) {
  const double top = *std::max_element(lw.begin(), lw.end());
  std::vector<std::pair<int, double>> pairs;
  for (std::size_t i = 0; i < degrees.size(); ++i)
    pairs.emplace_back(degrees[i], std::exp(lw[i] - top));
  return DegreeDistribution::from_weights(std::move(pairs), prov);
}

DegreeDistribution mix(const DegreeDistribution& a, const DegreeDistribution& b, double alpha) {
  std::vector<std::pair<int, double>> pairs;
  for (std::size_t i = 0; i < a.size(); ++i)
    pairs.emplace_back(a.support()[i], (1.0 - alpha) * a.probs()[i] + alpha * b.prob(a.support()[i]));
  return DegreeDistribution::from_weights(std::move(pairs), a.provenance());
}

double sup_change(const DegreeDistribution& a, const DegreeDistribution& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    d = std::max(d, std::abs(a.probs()[i] - b.prob(a.support()[i])));
  return d;
}

struct Iterate {
  DegreeDistribution q;
  PressureResult inner;
  double objective;
};

Iterate evaluate(const ModelParams& params, const DegreeDistribution& p, DegreeDistribution q,
                 const SolverOptions& opts) {
  PressureResult inner = pressure(params, q, opts);
  const double obj = inner.pressure - relative_entropy(q, p);
  return Iterate{std::move(q), std::move(inner), obj};
}

}  // namespace

CriticalBound beta_bar_c(const DegreeDistribution& dist) {
  auto h = [&](double beta) { return beta - atanh_inverse_nu(tilt(dist, beta)); };
  CriticalBound out{kInf, dist, forward_degree_nu(dist), false};
  double lo = 0.0;
  double hi = 1.0;
  while (h(hi) < 0.0) {
    if (hi >= kBetaCap) return out;
    lo = hi;
    hi = std::min(2.0 * hi, kBetaCap);
  }
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (h(mid) < 0.0)
      lo = mid;
    else
      hi = mid;
  }
  out.beta_bar = 0.5 * (lo + hi);
  out.tilted_q = tilt(dist, out.beta_bar);
  out.nu_at_bar = forward_degree_nu(out.tilted_q);
  out.has_transition = true;
  return out;
}

double poisson_beta_bar(double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda))
    throw InvalidParameter("poisson intensity must be positive");
  const double l2 = lambda * lambda;
  const double root = std::sqrt(1.0 + 4.0 * l2 * l2);
  return -std::log(2.0 * l2) + std::log(1.0 + root + std::sqrt(2.0 + 2.0 * root));
}

double geometric_quartic(double x, double p) {
  const double r = 1.0 - p;
  return 3.0 * r * r * x * x * x * x + 2.0 * r * x * x * x - x * x - 4.0 * r * r;
}

double geometric_quartic_root(double p) {
  if (!(p > 0.0 && p < 1.0)) throw InvalidParameter("geometric parameter must lie in (0,1)");
  double lo = 1.0;
  double hi = 1.0 / (1.0 - p);
  for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (geometric_quartic(mid, p) < 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

double geometric_beta_bar(double p) {
  const double x = geometric_quartic_root(p);
  const double x2 = x * x;
  return std::log(x2 + std::sqrt(x2 * x2 - 1.0));
}

double q_gradient(std::size_t index, std::span<const int> degrees,
                  std::span<const double> weights, std::span<const double> s,
                  const ModelParams& params) {
  if (index >= degrees.size()) throw InvalidParameter("q_gradient index out of range");
  return all_q_gradients(degrees, weights, s, params)[index];
}

double q_gradient(int degree, std::span<const double> s, const DegreeDistribution& q,
                  const ModelParams& params) {
  const auto support = q.support();
  const auto it = std::lower_bound(support.begin(), support.end(), degree);
  if (it == support.end() || *it != degree)
    throw InvalidParameter("degree " + std::to_string(degree) + " is not in the support");
  return q_gradient(static_cast<std::size_t>(it - support.begin()), support, q.probs(), s, params);
}

double iid_objective(const ModelParams& params, const DegreeDistribution& p,
                     const DegreeDistribution& q, const SolverOptions& opts) {
  SolverOptions o = opts;
  o.allow_isolated = true;
  return pressure(params, q, o).pressure - relative_entropy(q, p);
}

IidPressureResult pressure_iid(const ModelParams& params, const DegreeDistribution& p,
                               const IidOptions& opts) {
  IidPressureResult result{0.0, p, {}, 0.0, 0, false, false, {}};
  if (!exp_moment_condition(p.provenance(), params.beta)) {
    result.pressure = kInf;
    result.infinite = true;
    result.diagnostic = "E[exp(beta D/2)] is infinite for the untruncated " +
                        std::string(family_name(p.provenance().family)) +
                        " family; the annealed pressure is +infinity";
    return result;
  }
  SolverOptions solver = opts.solver;
  solver.allow_isolated = true;

  std::vector<DegreeDistribution> starts;
  if (opts.start_from_p) starts.push_back(p);
  if (opts.start_from_tilt) starts.push_back(tilt(p, params.beta));
  if (opts.start_from_uniform) {
    std::vector<std::pair<int, double>> flat;
    for (int k : p.support()) flat.emplace_back(k, 1.0);
    starts.push_back(DegreeDistribution::from_weights(std::move(flat), p.provenance()));
  }
  if (starts.empty()) throw InvalidParameter("pressure_iid needs at least one starting point");

  const double half_beta = 0.5 * params.beta;
  bool have_best = false;
  for (const auto& start : starts) {
    Iterate cur = evaluate(params, p, start, solver);
    bool converged = false;
    int it = 0;
    while (it < opts.max_iterations) {
      ++it;
      const auto grad = all_q_gradients(cur.q.support(), cur.q.probs(), cur.inner.solution.s, params);
      std::vector<double> lw(cur.q.size());
      for (std::size_t i = 0; i < cur.q.size(); ++i) {
        const int k = cur.q.support()[i];
        lw[i] = std::log(p.prob(k)) + half_beta * k + grad[i];
      }
      const DegreeDistribution target = from_log_weights(cur.q.support(), lw, p.provenance());
      // Full step first; halve the step while the objective would decrease.
      double alpha = 1.0;
      Iterate next = evaluate(params, p, target, solver);
      for (int halving = 0; halving < 40 && next.objective < cur.objective - 1e-14; ++halving) {
        alpha *= 0.5;
        next = evaluate(params, p, mix(cur.q, target, alpha), solver);
      }
      const double change = sup_change(cur.q, next.q);
      cur = std::move(next);
      if (change < opts.tolerance) {
        converged = true;
        break;
      }
    }
    if (!have_best || cur.objective > result.pressure) {
      have_best = true;
      result.pressure = cur.objective;
      result.entropy_cost = relative_entropy(cur.q, p);
      result.optimizer_q = cur.q;
      result.inner = cur.inner;
      result.iterations = it;
      result.converged = converged;
    }
  }
  if (!result.converged) result.diagnostic = "best restart did not reach the tolerance";
  return result;
}

SpontaneousMagnetization spontaneous_magnetization_iid(double beta, const DegreeDistribution& dist,
                                                       std::span<const double> fields,
                                                       const IidOptions& opts) {
  if (fields.empty()) throw InvalidParameter("field ladder is empty");
  SpontaneousMagnetization out;
  out.fields.assign(fields.begin(), fields.end());
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (!(fields[i] > 0.0) || (i > 0 && !(fields[i] < fields[i - 1])))
      throw InvalidParameter("field ladder must be positive and strictly decreasing");
    const auto r = pressure_iid({beta, fields[i]}, dist, opts);
    if (r.infinite) throw InvalidParameter(r.diagnostic);
    out.magnetizations.push_back(r.inner.magnetization);
  }
  for (std::size_t i = 1; i < out.magnetizations.size(); ++i)
    if (out.magnetizations[i] > out.magnetizations[i - 1]) out.monotone = false;
  out.value = beta == 0.0 ? 0.0 : extrapolate_to_zero(out.fields, out.magnetizations);
  return out;
}

}  // namespace acm
