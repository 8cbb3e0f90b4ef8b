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

// Thermodynamic-limit annealed pressure for a configuration model whose
// empirical degree law converges to a fixed distribution p.
//
// The pressure is  beta E[D]/2 + sup_s G(s)  with
//
//   G(s) = sum_k p_k I(s_k) + B (2 sum_k p_k s_k - 1) + E[D] F_beta(T),
//   T    = sum_k k p_k s_k / E[D],
//
// and every maximizer lies on the curve s_k = 1 / (w^k e^{-2B} + 1), where w
// solves the scalar consistency equation evaluated by fixed_point_residual().

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "acm/degree_model.hpp"

namespace acm {

struct ModelParams {
  double beta = 0.0;
  double B = 0.0;
};

struct SolverOptions {
  int grid_size = 2048;
  double eps_w = 1e-9;
  double bisection_tol = 1e-13;
  // Lets degree-0 atoms through (isolated vertices); used by the i.i.d. layer.
  bool allow_isolated = false;
};

// One stationary point on the s(w, B) curve. `s[i]` is the occupation of
// degree support()[i] of the distribution it was solved for.
struct FixedPointSolution {
  double w = 1.0;
  std::vector<double> s;
  double G_value = 0.0;
  double residual = 0.0;
};

struct PressureResult {
  double pressure = 0.0;
  double magnetization = 0.0;
  FixedPointSolution solution;
  int n_roots = 0;
  std::vector<FixedPointSolution> all_roots;
};

struct SpontaneousMagnetization {
  double value = 0.0;
  std::vector<double> fields;
  std::vector<double> magnetizations;
  bool monotone = true;
};

inline const std::vector<double>& default_field_ladder() {
  static const std::vector<double> ladder{1e-1, 3e-2, 1e-2, 3e-3, 1e-3};
  return ladder;
}

// Binary entropy I(t) with I(0) = I(1) = 0.
double binary_entropy(double t);

double occupation(double w, double B, int k);

// G for arbitrary nonnegative weights (not necessarily normalized); s is
// aligned with `degrees`. Throws DomainError for s outside [0, 1].
double G_functional(std::span<const int> degrees, std::span<const double> weights,
                    std::span<const double> s, const ModelParams& params);
double G_functional(std::span<const double> s, const ModelParams& params,
                    const DegreeDistribution& dist);

// LHS - RHS of the consistency equation for w.
double fixed_point_residual(double w, const ModelParams& params, const DegreeDistribution& dist);

// All roots of the consistency equation in (e^{-2 beta}, 1], including w = 1
// when B = 0. Uses |B|. Throws NoRootFound if nothing is bracketed.
std::vector<FixedPointSolution> solve_w(const ModelParams& params, const DegreeDistribution& dist,
                                        const SolverOptions& opts = {});

// Index of the root with largest G; ties (within 1e-12) go to the larger w.
// `shift` is added to every G value before comparison.
std::size_t select_maximizer(std::span<const FixedPointSolution> roots, double shift = 0.0);

PressureResult pressure(const ModelParams& params, const DegreeDistribution& dist,
                        const SolverOptions& opts = {});

// atanh(1/nu), or +infinity when nu <= 1.
double critical_beta(const DegreeDistribution& dist);

// Magnetization along a decreasing field ladder, extrapolated to B = 0.
SpontaneousMagnetization spontaneous_magnetization(
    double beta, const DegreeDistribution& dist,
    std::span<const double> fields = default_field_ladder(), const SolverOptions& opts = {});

// Polynomial (Neville) extrapolation to x = 0 through the last `points`
// samples of (xs, ys).
double extrapolate_to_zero(std::span<const double> xs, std::span<const double> ys,
                           std::size_t points = 3);

// Cross-check oracle: projected gradient ascent of G directly over (s_k),
// with random restarts. Returns beta E[D]/2 + best G found.
struct AscentResult {
  double pressure = 0.0;
  std::vector<double> s;
  int iterations = 0;
};
AscentResult direct_ascent_pressure(const ModelParams& params, const DegreeDistribution& dist,
                                    int restarts = 5, double tol = 1e-10,
                                    std::uint64_t seed = 12345);

}  // namespace acm
