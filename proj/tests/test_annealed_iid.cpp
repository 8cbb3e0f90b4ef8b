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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "acm/annealed_iid.hpp"
#include "acm/errors.hpp"
#include "acm/kernel.hpp"

using namespace acm;

namespace {

bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

const DegreeDistribution& p13() {
  static const auto d = make_distribution({{1, 0.5}, {3, 0.5}});
  return d;
}

}  // namespace

TEST_CASE("critical bound for dirac laws equals atanh(1/(r-1))") {
  for (int r : {3, 4, 7}) {
    const auto b = beta_bar_c(dirac(r));
    CHECK(b.has_transition);
    CHECK(near(b.beta_bar, std::atanh(1.0 / (r - 1)), 1e-11));
  }
  const auto none = beta_bar_c(dirac(2));
  CHECK_FALSE(none.has_transition);
  CHECK(std::isinf(none.beta_bar));
}

TEST_CASE("critical bound fixed-point identity") {
  for (const auto& d : {p13(), poisson_truncated(2.0, 100), geometric(0.4, 200)}) {
    const auto b = beta_bar_c(d);
    REQUIRE(b.has_transition);
    CHECK(near(b.beta_bar, std::atanh(1.0 / b.nu_at_bar), 1e-10));
    CHECK(near(b.nu_at_bar, forward_degree_nu(tilt(d, b.beta_bar)), 1e-14));
  }
}

TEST_CASE("poisson closed form") {
  const double golden = std::log((1.0 + std::sqrt(5.0) + std::sqrt(2.0 + 2.0 * std::sqrt(5.0))) / 2.0);
  CHECK(near(poisson_beta_bar(1.0), golden, 1e-14));
  CHECK(near(poisson_beta_bar(1.0), beta_bar_c(poisson_truncated(1.0, 200)).beta_bar, 1e-6));
  CHECK(near(poisson_beta_bar(2.0), beta_bar_c(poisson_truncated(2.0, 200)).beta_bar, 1e-6));
  for (double lambda : {0.3, 1.0, 2.0, 5.0}) {
    const double b = poisson_beta_bar(lambda);
    CHECK(near(std::tanh(b) * lambda * std::sqrt(std::cosh(b)), 1.0, 1e-10));
  }
  CHECK_THROWS_AS(poisson_beta_bar(0.0), InvalidParameter);
}

TEST_CASE("geometric closed form") {
  for (int i = 1; i <= 9; ++i) {
    const double p = 0.1 * i;
    CHECK(geometric_quartic(1.0, p) <= 0.0);
    CHECK(geometric_quartic(1.0 / (1.0 - p), p) >= 0.0);
    const double x = geometric_quartic_root(p);
    CHECK(x >= 1.0);
    CHECK(x < 1.0 / (1.0 - p));
    CHECK(near(geometric_quartic(x, p), 0.0, 1e-12));
    CHECK(geometric_beta_bar(p) < -2.0 * std::log(1.0 - p));
  }
  CHECK(near(geometric_beta_bar(0.5), beta_bar_c(geometric(0.5, 400)).beta_bar, 1e-5));
  CHECK_THROWS_AS(geometric_beta_bar(1.0), InvalidParameter);
}

TEST_CASE("q gradient examples") {
  const std::vector<double> half(2, 0.5);
  for (double beta : {0.0, 0.6, 1.4})
    for (int i : {1, 3}) {
      const double expected = std::log(2.0) + 0.5 * i * std::log((1.0 + std::exp(-2.0 * beta)) / 2.0);
      CHECK(near(q_gradient(i, half, p13(), {beta, 0.0}), expected, 1e-12));
    }
  CHECK(near(q_gradient(3, half, p13(), {0.0, 0.0}), std::log(2.0), 1e-15));
  CHECK_THROWS_AS(q_gradient(2, half, p13(), {0.5, 0.0}), InvalidParameter);
}

TEST_CASE("q gradient matches a central difference") {
  const std::vector<int> degrees{1, 2, 4};
  const std::vector<double> w{0.3, 0.3, 0.4};
  const std::vector<double> s{0.63, 0.71, 0.88};
  const double h = 1e-6;
  for (const auto& params : {ModelParams{0.0, 0.0}, ModelParams{0.5, 0.1}, ModelParams{1.2, -0.4}})
    for (std::size_t i = 0; i < degrees.size(); ++i) {
      auto up = w, down = w;
      up[i] += h;
      down[i] -= h;
      const double fd = (G_functional(degrees, up, s, params) - G_functional(degrees, down, s, params)) / (2 * h);
      CHECK(near(q_gradient(i, degrees, w, s, params), fd, 1e-5));
    }
}

TEST_CASE("iid pressure at zero coupling") {
  for (double B : {0.0, 0.3, -0.8}) {
    const auto r = pressure_iid({0.0, B}, p13());
    CHECK(near(r.pressure, std::log(2.0 * std::cosh(B)), 1e-12));
    CHECK(total_variation(r.optimizer_q, p13()) <= 1e-9);
  }
}

TEST_CASE("iid pressure for dirac equals the deterministic pressure") {
  for (double beta : {0.3, 0.9})
    for (double B : {0.0, 0.2}) {
      const auto r = pressure_iid({beta, B}, dirac(3));
      CHECK(r.pressure == pressure({beta, B}, dirac(3)).pressure);
      CHECK(r.entropy_cost == 0.0);
    }
}

TEST_CASE("subcritical optimizer is the tilted law") {
  for (const auto& p : {p13(), poisson_truncated(1.0, 60), geometric(0.5, 60)}) {
    const double beta = 0.7 * beta_bar_c(p).beta_bar;
    const auto r = pressure_iid({beta, 0.0}, p);
    CHECK(r.converged);
    CHECK(total_variation(r.optimizer_q, tilt(p, beta)) <= 1e-6);
    CHECK(near(r.pressure, r.inner.pressure - r.entropy_cost, 1e-14));
    // At the tilt the value has the closed form log 2 + log E[cosh(beta)^{D/2}].
    double c = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) c += p.probs()[i] * std::exp(0.5 * p.support()[i] * log_cosh(beta));
    CHECK(near(r.pressure, std::log(2.0) + std::log(c), 1e-10));
  }
}

TEST_CASE("iid pressure dominates the deterministic pressure") {
  for (double beta : {0.25, 0.5, 1.0})
    for (double B : {0.0, 0.05, 0.5}) CHECK(pressure_iid({beta, B}, p13()).pressure >= pressure({beta, B}, p13()).pressure - 1e-9);
  CHECK(pressure_iid({0.4, 0.0}, p13()).pressure - pressure({0.4, 0.0}, p13()).pressure >= 1e-4);
}

TEST_CASE("infinite pressure sentinel") {
  const auto r = pressure_iid({1.5, 0.0}, geometric(0.5, 100));
  CHECK(r.infinite);
  CHECK(std::isinf(r.pressure));
  CHECK_FALSE(r.diagnostic.empty());
  CHECK_FALSE(pressure_iid({1.0, 0.0}, geometric(0.5, 100)).infinite);
}

TEST_CASE("objective and restart options") {
  IidOptions only_p;
  only_p.start_from_tilt = false;
  only_p.start_from_uniform = false;
  const auto r = pressure_iid({0.3, 0.1}, p13(), only_p);
  CHECK(near(r.pressure, iid_objective({0.3, 0.1}, p13(), r.optimizer_q), 1e-14));
  IidOptions none = only_p;
  none.start_from_p = false;
  CHECK_THROWS_AS(pressure_iid({0.3, 0.1}, p13(), none), InvalidParameter);
}

TEST_CASE("spontaneous magnetization under iid degrees") {
  const double bar = beta_bar_c(p13()).beta_bar;
  CHECK(std::abs(spontaneous_magnetization_iid(0.5 * bar, p13()).value) <= 2e-3);
  CHECK(spontaneous_magnetization_iid(1.5 * bar, p13()).value > 0.05);
}
