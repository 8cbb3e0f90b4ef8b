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

#include "acm/annealed_deterministic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "acm/errors.hpp"
#include "acm/kernel.hpp"

namespace acm {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kTieTolerance = 1e-12;

void check_params(const ModelParams& params) {
  if (!(params.beta >= 0.0) || !std::isfinite(params.beta))
    throw InvalidParameter("beta must be finite and nonnegative");
  if (!std::isfinite(params.B)) throw InvalidParameter("B must be finite");
}

void check_support(const DegreeDistribution& dist, const SolverOptions& opts) {
  if (!opts.allow_isolated && dist.min_degree() < 1)
    throw InvalidDistribution("deterministic degrees must be at least 1 (got mass at degree " +
                              std::to_string(dist.min_degree()) + ")");
}

std::vector<double> occupations(double w, double B, const DegreeDistribution& dist) {
  std::vector<double> s(dist.size());
  for (std::size_t i = 0; i < dist.size(); ++i) s[i] = occupation(w, B, dist.support()[i]);
  return s;
}

FixedPointSolution make_solution(double w, double residual, const ModelParams& params,
                                 const DegreeDistribution& dist) {
  FixedPointSolution sol;
  sol.w = w;
  sol.s = occupations(w, params.B, dist);
  sol.G_value = G_functional(sol.s, params, dist);
  sol.residual = residual;
  return sol;
}

double magnetization_of(std::span<const double> s, const DegreeDistribution& dist) {
  double m = 0.0;
  for (std::size_t i = 0; i < dist.size(); ++i) m += dist.probs()[i] * (2.0 * s[i] - 1.0);
  return std::clamp(m, -1.0, 1.0);
}

}  // namespace

double binary_entropy(double t) {
  if (t <= 0.0 || t >= 1.0) return 0.0;
  return -t * std::log(t) - (1.0 - t) * std::log1p(-t);
}

double occupation(double w, double B, int k) {
  return 1.0 / (std::pow(w, k) * std::exp(-2.0 * B) + 1.0);
}

double G_functional(std::span<const int> degrees, std::span<const double> weights,
                    std::span<const double> s, const ModelParams& params) {
  double entropy = 0.0;
  double field = 0.0;
  double edge_mass = 0.0;
  double stub_mass = 0.0;
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    if (!(s[i] >= 0.0 && s[i] <= 1.0)) throw DomainError("occupations must lie in [0, 1]");
    entropy += weights[i] * binary_entropy(s[i]);
    field += weights[i] * s[i];
    edge_mass += degrees[i] * weights[i] * s[i];
    stub_mass += degrees[i] * weights[i];
  }
  double value = entropy + params.B * (2.0 * field - 1.0);
  if (stub_mass > 0.0) {
    const double t = std::clamp(edge_mass / stub_mass, 0.0, 1.0);
    value += stub_mass * F_beta(t, params.beta);
  }
  return value;
}

double G_functional(std::span<const double> s, const ModelParams& params,
                    const DegreeDistribution& dist) {
  if (s.size() != dist.size()) throw DomainError("occupation vector does not match support");
  return G_functional(dist.support(), dist.probs(), s, params);
}

double fixed_point_residual(double w, const ModelParams& params, const DegreeDistribution& dist) {
  const double c = std::exp(-2.0 * params.beta);
  const double field = std::exp(-2.0 * std::abs(params.B));
  const double lhs = (1.0 - c * w) / (1.0 + w * w - 2.0 * c * w);
  double stub_mass = 0.0;
  double rhs = 0.0;
  // Support is sorted, so w^k advances by w^(gap).
  double power = 1.0;
  int prev = 0;
  for (std::size_t i = 0; i < dist.size(); ++i) {
    const int k = dist.support()[i];
    power *= k - prev == 1 ? w : std::pow(w, k - prev);
    prev = k;
    if (k == 0) continue;
    const double weight = k * dist.probs()[i];
    stub_mass += weight;
    rhs += weight / (1.0 + power * field);
  }
  if (!(stub_mass > 0.0)) throw DegenerateDistribution("consistency equation needs E[D] > 0");
  return lhs - rhs / stub_mass;
}

std::vector<FixedPointSolution> solve_w(const ModelParams& raw, const DegreeDistribution& dist,
                                        const SolverOptions& opts) {
  check_params(raw);
  check_support(dist, opts);
  if (opts.grid_size < 2) throw InvalidParameter("grid size must be at least 2");
  const ModelParams params{raw.beta, std::abs(raw.B)};

  // beta = 0 and edgeless graphs decouple: the only candidate is w = 1.
  if (params.beta == 0.0 || !(mean(dist) > 0.0)) {
    if (!(mean(dist) > 0.0) && !opts.allow_isolated)
      throw DegenerateDistribution("distribution has zero mean degree");
    return {make_solution(1.0, 0.0, params, dist)};
  }

  const double c = std::exp(-2.0 * params.beta);
  const double lo = c + opts.eps_w;
  const double hi = 1.0 - opts.eps_w;
  std::vector<double> grid;
  grid.reserve(opts.grid_size + 2);
  // For B > 0 the residual is positive at w = c and negative at w = 1, so the
  // closed endpoints guarantee a bracket.
  if (params.B > 0.0) grid.push_back(c);
  if (lo < hi) {
    for (int i = 0; i < opts.grid_size; ++i)
      grid.push_back(lo + (hi - lo) * static_cast<double>(i) / (opts.grid_size - 1));
  }
  if (params.B > 0.0) grid.push_back(1.0);

  auto residual = [&](double w) { return fixed_point_residual(w, params, dist); };
  std::vector<double> values(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) values[i] = residual(grid[i]);

  std::vector<FixedPointSolution> roots;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (values[i] == 0.0) {
      if (!(params.B == 0.0 && grid[i] == 1.0)) roots.push_back(make_solution(grid[i], 0.0, params, dist));
      continue;
    }
    if (i + 1 == grid.size() || values[i + 1] == 0.0) continue;
    if ((values[i] < 0.0) == (values[i + 1] < 0.0)) continue;
    double a = grid[i];
    double b = grid[i + 1];
    const bool a_negative = values[i] < 0.0;
    while (b - a > opts.bisection_tol) {
      const double mid = 0.5 * (a + b);
      if (mid <= a || mid >= b) break;
      const double f = residual(mid);
      if (f == 0.0) {
        a = b = mid;
        break;
      }
      if ((f < 0.0) == a_negative)
        a = mid;
      else
        b = mid;
    }
    const double w = 0.5 * (a + b);
    roots.push_back(make_solution(w, residual(w), params, dist));
  }
  if (params.B == 0.0) roots.push_back(make_solution(1.0, 0.0, params, dist));
  if (roots.empty())
    throw NoRootFound("no root of the consistency equation at beta = " +
                      std::to_string(params.beta) + ", B = " + std::to_string(params.B));
  return roots;
}

std::size_t select_maximizer(std::span<const FixedPointSolution> roots, double shift) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < roots.size(); ++i) {
    const double gi = roots[i].G_value + shift;
    const double gb = roots[best].G_value + shift;
    if (gi > gb + kTieTolerance || (std::abs(gi - gb) <= kTieTolerance && roots[i].w > roots[best].w))
      best = i;
  }
  return best;
}

PressureResult pressure(const ModelParams& params, const DegreeDistribution& dist,
                        const SolverOptions& opts) {
  PressureResult result;
  result.all_roots = solve_w(params, dist, opts);
  result.n_roots = static_cast<int>(result.all_roots.size());
  result.solution = result.all_roots[select_maximizer(result.all_roots)];
  result.pressure = 0.5 * params.beta * mean(dist) + result.solution.G_value;
  const double m = magnetization_of(result.solution.s, dist);
  result.magnetization = params.B < 0.0 ? -m : m;
  return result;
}

double critical_beta(const DegreeDistribution& dist) {
  const double nu = forward_degree_nu(dist);
  if (nu <= 1.0) return kInf;
  return std::atanh(1.0 / nu);
}

double extrapolate_to_zero(std::span<const double> xs, std::span<const double> ys,
                           std::size_t points) {
  if (xs.size() != ys.size() || xs.empty())
    throw InvalidParameter("extrapolation needs matching, nonempty samples");
  points = std::min(points, xs.size());
  const std::size_t first = xs.size() - points;
  std::vector<double> x(xs.begin() + first, xs.end());
  std::vector<double> p(ys.begin() + first, ys.end());
  // Neville's tableau evaluated at 0.
  for (std::size_t level = 1; level < points; ++level) {
    for (std::size_t i = 0; i + level < points; ++i) {
      const double xi = x[i];
      const double xj = x[i + level];
      p[i] = ((0.0 - xj) * p[i] - (0.0 - xi) * p[i + 1]) / (xi - xj);
    }
  }
  return p[0];
}

SpontaneousMagnetization spontaneous_magnetization(double beta, const DegreeDistribution& dist,
                                                   std::span<const double> fields,
                                                   const SolverOptions& opts) {
  if (fields.empty()) throw InvalidParameter("field ladder is empty");
  SpontaneousMagnetization out;
  out.fields.assign(fields.begin(), fields.end());
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (!(fields[i] > 0.0) || (i > 0 && !(fields[i] < fields[i - 1])))
      throw InvalidParameter("field ladder must be positive and strictly decreasing");
    out.magnetizations.push_back(pressure({beta, fields[i]}, dist, opts).magnetization);
  }
  for (std::size_t i = 1; i < out.magnetizations.size(); ++i)
    if (out.magnetizations[i] > out.magnetizations[i - 1]) out.monotone = false;
  // At beta = 0 the limit of tanh(B) is exactly zero.
  out.value = beta == 0.0 ? 0.0 : extrapolate_to_zero(out.fields, out.magnetizations);
  return out;
}

AscentResult direct_ascent_pressure(const ModelParams& params, const DegreeDistribution& dist,
                                    int restarts, double tol, std::uint64_t seed) {
  check_params(params);
  const auto table = cached_F_beta_table(params.beta);
  const std::size_t n = dist.size();
  const double stub_mass = mean(dist);
  constexpr double kEdge = 1e-12;

  auto objective = [&](const std::vector<double>& s) {
    double entropy = 0.0, field = 0.0, edge = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      entropy += dist.probs()[i] * binary_entropy(s[i]);
      field += dist.probs()[i] * s[i];
      edge += dist.support()[i] * dist.probs()[i] * s[i];
    }
    return entropy + params.B * (2.0 * field - 1.0) +
           stub_mass * table->value(std::clamp(edge / stub_mass, 0.0, 1.0));
  };
  auto direction = [&](const std::vector<double>& s) {
    double edge = 0.0;
    for (std::size_t i = 0; i < n; ++i) edge += dist.support()[i] * dist.probs()[i] * s[i];
    const double fp = F_beta_prime(std::clamp(edge / stub_mass, 0.0, 1.0), params.beta);
    std::vector<double> d(n);
    for (std::size_t i = 0; i < n; ++i) {
      const double g = std::log((1.0 - s[i]) / s[i]) + 2.0 * params.B + dist.support()[i] * fp;
      // Diagonal preconditioner from the entropy curvature.
      d[i] = g * s[i] * (1.0 - s[i]);
    }
    return d;
  };

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uniform(0.05, 0.95);
  AscentResult best;
  best.pressure = -kInf;
  for (int r = 0; r < restarts; ++r) {
    std::vector<double> s(n);
    for (double& v : s) v = uniform(rng);
    double value = objective(s);
    double step = 1.0;
    int it = 0;
    for (; it < 100000; ++it) {
      const auto d = direction(s);
      double accepted = -kInf;
      std::vector<double> trial(n);
      for (int ls = 0; ls < 60; ++ls) {
        for (std::size_t i = 0; i < n; ++i) trial[i] = std::clamp(s[i] + step * d[i], kEdge, 1.0 - kEdge);
        accepted = objective(trial);
        if (accepted >= value) break;
        step *= 0.5;
      }
      if (!(accepted >= value)) break;
      const double gain = accepted - value;
      s = trial;
      value = accepted;
      step = std::min(step * 2.0, 4.0);
      double dnorm = 0.0;
      for (double v : d) dnorm = std::max(dnorm, std::abs(v));
      if (gain < tol * 1e-3 && dnorm < tol) break;
    }
    // Reported value uses the direct quadrature.
    const double exact = 0.5 * params.beta * stub_mass + G_functional(s, params, dist);
    if (exact > best.pressure) {
      best.pressure = exact;
      best.s = s;
      best.iterations = it;
    }
  }
  return best;
}

}  // namespace acm
