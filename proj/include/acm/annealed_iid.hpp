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

// Annealed pressure with i.i.d. degrees drawn from p:
//
//   phi(beta, B) = sup_q [ phi_det(beta, B; q) - H(q | p) ],
//
// plus the tilted-law critical bound beta_bar solving
// beta = atanh(1 / nu(tilt(p, beta))).

#pragma once

#include <span>
#include <string>
#include <vector>

#include "acm/annealed_deterministic.hpp"
#include "acm/degree_model.hpp"

namespace acm {

struct CriticalBound {
  double beta_bar = 0.0;  // +infinity when there is no transition
  DegreeDistribution tilted_q;
  double nu_at_bar = 0.0;
  bool has_transition = false;
};

struct IidOptions {
  int max_iterations = 10000;
  double tolerance = 1e-11;
  // Starting points: p itself, tilt(p, beta), uniform on the support of p.
  bool start_from_p = true;
  bool start_from_tilt = true;
  bool start_from_uniform = true;
  SolverOptions solver{};
};

struct IidPressureResult {
  double pressure = 0.0;
  DegreeDistribution optimizer_q;
  PressureResult inner;
  double entropy_cost = 0.0;
  int iterations = 0;
  bool converged = false;
  // E[exp(beta D / 2)] = infinity for the untruncated family.
  bool infinite = false;
  std::string diagnostic;
};

CriticalBound beta_bar_c(const DegreeDistribution& dist);

double poisson_beta_bar(double lambda);

// Root x* >= 1 of 3r^2 x^4 + 2r x^3 - x^2 - 4r^2 with r = 1 - p.
double geometric_quartic_root(double p);
double geometric_quartic(double x, double p);
double geometric_beta_bar(double p);

// d/dq_i of G(s; q) at fixed s, for unnormalized weights aligned with
// `degrees`. `index` selects the degree.
double q_gradient(std::size_t index, std::span<const int> degrees,
                  std::span<const double> weights, std::span<const double> s,
                  const ModelParams& params);
double q_gradient(int degree, std::span<const double> s, const DegreeDistribution& q,
                  const ModelParams& params);

// phi_det(beta, B; q) - H(q | p).
double iid_objective(const ModelParams& params, const DegreeDistribution& p,
                     const DegreeDistribution& q, const SolverOptions& opts = {});

IidPressureResult pressure_iid(const ModelParams& params, const DegreeDistribution& dist,
                               const IidOptions& opts = {});

// Envelope magnetization of pressure_iid along the ladder, extrapolated to 0.
SpontaneousMagnetization spontaneous_magnetization_iid(
    double beta, const DegreeDistribution& dist,
    std::span<const double> fields = default_field_ladder(), const IidOptions& opts = {});

}  // namespace acm
