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

// Acceptance runner: one PASS/FAIL line per criterion, exit 1 on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "acm/annealed_deterministic.hpp"
#include "acm/annealed_iid.hpp"
#include "acm/cli.hpp"
#include "acm/exact_oracle.hpp"
#include "acm/kernel.hpp"

using namespace acm;

namespace {

struct Outcome {
  bool passed = false;
  std::string detail;
};

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

void sequences(int n_max, int stub_max, std::vector<int>& cur, int min_deg, int sum,
               std::vector<std::vector<int>>& out) {
  if (!cur.empty() && sum % 2 == 0) out.push_back(cur);
  if (static_cast<int>(cur.size()) == n_max) return;
  for (int d = min_deg; sum + d <= stub_max; ++d) {
    cur.push_back(d);
    sequences(n_max, stub_max, cur, d, sum + d, out);
    cur.pop_back();
  }
}

Outcome a1() {
  std::vector<std::vector<int>> all;
  std::vector<int> cur;
  sequences(6, 12, cur, 1, 0, all);
  double worst = 0.0;
  for (const auto& seq : all) {
    const OracleInstance inst{DegreeSequence(seq)};
    const BruteForceTable table(inst);
    for (double beta : {0.0, 0.5, 1.3})
      for (double B : {0.0, 0.2, -0.2})
        worst = std::max(worst, std::abs(log_annealed_Z(inst, {beta, B}) - table.log_Z({beta, B})));
  }
  return {all.size() >= 15 && worst <= 1e-10,
          std::to_string(all.size()) + " sequences, max diff " + fmt(worst)};
}

Outcome a2() {
  double worst = 0.0;
  for (int m = 2; m <= 12; m += 2)
    for (int k = 0; k <= m; ++k) {
      const auto exact = crossing_distribution(k, m);
      const auto brute = brute_force_crossing(k, m);
      for (int j = 0; j <= m; ++j) worst = std::max(worst, std::abs(exact.prob(j) - brute.prob(j)));
    }
  return {worst <= 1e-12, "max diff " + fmt(worst)};
}

Outcome a3() {
  bool bounded = true;
  double worst_ratio = 0.0;
  for (double beta : {0.3, 0.8, 1.5})
    for (double t : {0.1, 0.25, 0.5}) {
      double first = 0.0, max_err = 0.0;
      for (int m : {40, 80, 160, 320}) {
        const int k = static_cast<int>(std::floor(t * m));
        const double err = m * std::abs(log_g_beta(k, m, beta) / m - F_beta(t, beta));
        if (m == 40) first = err;
        max_err = std::max(max_err, err);
      }
      bounded = bounded && max_err <= 2.0 * first + 1.0;
      worst_ratio = std::max(worst_ratio, max_err / (2.0 * first + 1.0));
    }
  double worst_half = 0.0;
  for (double beta : {0.5, 1.0}) {
    auto a = [beta](int m) { return log_g_beta(m / 2, m, beta) / m; };
    const double r_low = 2.0 * a(1000) - a(500);
    const double r_high = 2.0 * a(2000) - a(1000);
    const double extrapolated = (4.0 * r_high - r_low) / 3.0;
    const double closed = 0.5 * std::log((1.0 + std::exp(-2.0 * beta)) / 2.0);
    worst_half = std::max({worst_half, std::abs(extrapolated - closed), std::abs(F_beta(0.5, beta) - closed)});
  }
  return {bounded && worst_half <= 1e-6,
          "scaled error ratio " + fmt(worst_ratio) + ", F(1/2) diff " + fmt(worst_half)};
}

Outcome a4() {
  double worst = 0.0;
  for (const auto& d : {dirac(3), make_distribution({{1, 0.5}, {2, 0.5}})}) {
    const double nu = forward_degree_nu(d);
    const double beta_c = nu > 1.0 ? std::atanh(1.0 / nu) : INFINITY;
    const std::vector<double> betas = std::isfinite(beta_c) ? std::vector<double>{0.8 * beta_c}
                                                            : std::vector<double>{0.5, 1.0, 2.0};
    for (double beta : betas) {
      const double expected = std::log(2.0) + 0.5 * mean(d) * log_cosh(beta);
      worst = std::max(worst, std::abs(pressure({beta, 0.0}, d).pressure - expected));
    }
  }
  return {worst <= 1e-9, "max diff " + fmt(worst)};
}

Outcome a5() {
  const auto d = dirac(3);
  std::vector<double> betas;
  for (int i = 0; i <= 30; ++i) betas.push_back(0.3 + 0.02 * i);
  const auto pts = cli::transition_points(d, cli::Mode::kDeterministic, betas, default_field_ladder());
  const auto est = cli::estimate_transition(pts);
  const double target = std::atanh(0.5);
  const double low = spontaneous_magnetization(0.45, d).value;
  const double high = spontaneous_magnetization(0.70, d).value;
  const bool ok = est && std::abs(*est - target) <= 0.02 && std::abs(low) <= 2e-3 && high >= 0.05;
  return {ok, "estimate " + (est ? fmt(*est) : std::string("none")) + ", M(0.45) " + fmt(low) + ", M(0.70) " +
                  fmt(high)};
}

Outcome a6() {
  double worst = 0.0;
  for (double lambda : {0.5, 1.0, 2.0, 4.0})
    worst = std::max(worst, std::abs(poisson_beta_bar(lambda) - beta_bar_c(poisson_truncated(lambda, 200)).beta_bar));
  const double at_one = poisson_beta_bar(1.0);
  const bool quenched_infinite = std::isinf(std::atanh(1.0 / 1.0));
  return {worst <= 1e-6 && std::isfinite(at_one) && std::abs(at_one - 1.0613) < 1e-4 && quenched_infinite,
          "max diff " + fmt(worst) + ", beta_bar(1) " + fmt(at_one)};
}

Outcome a7() {
  bool bracket = true;
  for (int i = 1; i <= 9; ++i) {
    const double p = 0.1 * i;
    const double x = geometric_quartic_root(p);
    bracket = bracket && x >= 1.0 && x < 1.0 / (1.0 - p);
  }
  double worst = 0.0;
  for (double p : {0.3, 0.5, 0.7})
    worst = std::max(worst, std::abs(geometric_beta_bar(p) - beta_bar_c(geometric(p, 400)).beta_bar));
  const double quenched = std::atanh(0.7 / (2.0 * 0.3));
  const bool contrast = !std::isfinite(quenched) && std::isfinite(geometric_beta_bar(0.7));
  return {bracket && worst <= 1e-5 && contrast,
          "max diff " + fmt(worst) + ", beta_bar(0.7) " + fmt(geometric_beta_bar(0.7))};
}

Outcome a8() {
  const auto p = make_distribution({{1, 0.5}, {3, 0.5}});
  const auto iid = pressure_iid({0.4, 0.0}, p);
  const double gap = iid.pressure - pressure({0.4, 0.0}, p).pressure;
  const double tv = total_variation(iid.optimizer_q, tilt(p, 0.4));
  return {gap >= 1e-4 && tv <= 1e-6, "gap " + fmt(gap) + ", TV " + fmt(tv)};
}

Outcome a9() {
  const double phi = pressure({0.4, 0.1}, dirac(3)).pressure;
  std::vector<double> errs;
  for (int n : {4, 8, 16, 32, 64})
    errs.push_back(std::abs(psi_n(OracleInstance{DegreeSequence(std::vector<int>(n, 3))}, {0.4, 0.1}) - phi));
  bool decreasing = true;
  for (std::size_t i = 1; i < errs.size(); ++i) decreasing = decreasing && errs[i] < errs[i - 1];
  std::string detail;
  for (double e : errs) detail += fmt(e) + " ";
  return {decreasing && errs.back() <= errs.front() / 4.0, detail};
}

Outcome a10() {
  const char* argv[] = {"annealed_cm", "verify"};
  std::ostringstream out, err;
  const int code = cli::main_entry(2, argv, out, err);
  const std::string text = out.str();
  const auto last = text.rfind("checks passed");
  const auto line_start = text.rfind('\n', last == std::string::npos ? 0 : last);
  const std::string summary =
      last == std::string::npos ? "no summary" : text.substr(line_start + 1, last + 13 - line_start - 1);
  return {code == cli::kExitOk, "exit " + std::to_string(code) + ", " + summary};
}

}  // namespace

int main() {
  struct Criterion {
    const char* id;
    double budget_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"A1", 30, a1}, {"A2", 10, a2}, {"A3", 120, a3}, {"A4", 5, a4},  {"A5", 120, a5},
      {"A6", 10, a6}, {"A7", 20, a7}, {"A8", 60, a8},  {"A9", 60, a9}, {"A10", 180, a10},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool passed = o.passed && secs < c.budget_s;
    failures += passed ? 0 : 1;
    std::printf("%-4s %s  %s (%.2fs of %.0fs)\n", c.id, passed ? "PASS" : "FAIL", o.detail.c_str(), secs,
                c.budget_s);
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
