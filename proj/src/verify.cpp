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

#include "acm/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>

#include "acm/annealed_deterministic.hpp"
#include "acm/annealed_iid.hpp"
#include "acm/degree_model.hpp"
#include "acm/exact_oracle.hpp"
#include "acm/kernel.hpp"

namespace acm {

namespace {

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

// Runs `body`, which returns the worst deviation and sets `ok`.
CheckResult run_check(const std::string& name, const std::function<bool(std::string&)>& body) {
  CheckResult r{name, false, {}};
  try {
    r.passed = body(r.detail);
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = std::string("exception: ") + e.what();
  }
  return r;
}

std::vector<DegreeDistribution> random_distributions(std::uint64_t seed, int count, int min_degree) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> size(2, 5);
  std::uniform_int_distribution<int> degree(min_degree, 9);
  std::uniform_real_distribution<double> weight(0.05, 1.0);
  std::vector<DegreeDistribution> out;
  while (static_cast<int>(out.size()) < count) {
    std::vector<std::pair<int, double>> pairs;
    const int want = size(rng);
    while (static_cast<int>(pairs.size()) < want) {
      const int k = degree(rng);
      if (std::none_of(pairs.begin(), pairs.end(), [&](const auto& pr) { return pr.first == k; }))
        pairs.emplace_back(k, weight(rng));
    }
    out.push_back(make_distribution(std::move(pairs)));
  }
  return out;
}

// Distributions with nu > 1 and degrees >= 1, used by the solver checks.
std::vector<DegreeDistribution> solver_distributions() {
  return {dirac(3), dirac(4), make_distribution({{1, 0.3}, {3, 0.4}, {5, 0.3}}),
          make_distribution({{1, 0.5}, {3, 0.5}})};
}

// D* is constant exactly when a single positive degree carries mass.
bool constant_size_biased(const DegreeDistribution& d) {
  return std::count_if(d.support().begin(), d.support().end(), [](int k) { return k > 0; }) == 1;
}

double phi(double beta, double B, const DegreeDistribution& d, const SolverOptions& opts = {}) {
  return pressure({beta, B}, d, opts).pressure;
}

}  // namespace

std::vector<CheckResult> degree_model_checks() {
  std::vector<CheckResult> out;
  auto dists = random_distributions(101, 25, 0);
  dists.push_back(poisson_truncated(1.5, 200));
  dists.push_back(geometric(0.4, 200));
  dists.push_back(dirac(3));

  out.push_back(run_check("tilt at beta 0 is the identity", [&](std::string& detail) {
    double worst = 0.0;
    for (const auto& d : dists) {
      const auto t = tilt(d, 0.0);
      for (std::size_t i = 0; i < d.size(); ++i)
        worst = std::max(worst, std::abs(t.probs()[i] - d.probs()[i]));
    }
    detail = "max |dq| = " + sci(worst);
    return worst <= 1e-15;
  }));

  out.push_back(run_check("tilt raises the forward degree", [&](std::string& detail) {
    bool ok = true;
    double smallest_gain = 1e300;
    for (const auto& d : dists) {
      if (mean(d) <= 0.0) continue;
      const double nu0 = forward_degree_nu(d);
      for (int j = 1; j <= 20; ++j) {
        const double gain = forward_degree_nu(tilt(d, 0.1 * j)) - nu0;
        if (constant_size_biased(d)) {
          ok = ok && std::abs(gain) <= 1e-12;
        } else {
          ok = ok && gain > 0.0;
          smallest_gain = std::min(smallest_gain, gain);
        }
      }
    }
    detail = "min strict gain = " + sci(smallest_gain);
    return ok;
  }));

  out.push_back(run_check("Gibbs inequality for relative entropy", [&](std::string& detail) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> weight(0.01, 1.0);
    bool ok = true;
    double min_h = 1e300;
    for (const auto& p : dists) {
      ok = ok && relative_entropy(p, p) == 0.0;
      for (int rep = 0; rep < 4; ++rep) {
        std::vector<std::pair<int, double>> pairs;
        for (int k : p.support()) pairs.emplace_back(k, weight(rng));
        const auto q = make_distribution(std::move(pairs));
        if (p.is_dirac()) continue;
        const double h = relative_entropy(q, p);
        min_h = std::min(min_h, h);
        ok = ok && h > 0.0;
      }
    }
    detail = "min H(q|p) over q != p = " + sci(min_h);
    return ok;
  }));

  out.push_back(run_check("size-biased mean equals nu + 1", [&](std::string& detail) {
    double worst = 0.0;
    for (const auto& d : dists) {
      if (mean(d) <= 0.0) continue;
      const double nu = forward_degree_nu(d);
      worst = std::max(worst, std::abs(mean(size_biased(d).distribution()) - (nu + 1.0)) / (nu + 1.0));
    }
    detail = "max relative error = " + sci(worst);
    return worst <= 1e-12;
  }));
  return out;
}

std::vector<CheckResult> kernel_checks() {
  std::vector<CheckResult> out;
  const double betas[] = {0.3, 0.8, 1.5};

  out.push_back(run_check("g_beta symmetric under k -> m - k", [&](std::string& detail) {
    int cases = 0;
    for (double beta : betas)
      for (int m = 2; m <= 60; m += 2)
        for (int k = 0; k <= m; ++k, ++cases)
          if (log_g_beta(k, m, beta) != log_g_beta(m - k, m, beta)) {
            detail = "mismatch at k=" + std::to_string(k) + " m=" + std::to_string(m);
            return false;
          }
    detail = std::to_string(cases) + " exact matches";
    return true;
  }));

  out.push_back(run_check("F_beta reflection symmetry", [&](std::string& detail) {
    double worst = 0.0;
    for (double beta : betas)
      for (int i = 0; i <= 100; ++i) {
        const double t = i / 100.0;
        worst = std::max(worst, std::abs(F_beta(t, beta) - F_beta(1.0 - t, beta)));
      }
    detail = "max |F(t) - F(1-t)| = " + sci(worst);
    return worst <= 1e-12;
  }));

  out.push_back(run_check("g_beta asymptotics have bounded m-scaled error", [&](std::string& detail) {
    bool ok = true;
    double worst_ratio = 0.0;
    for (double beta : betas)
      for (double t : {0.1, 0.25, 0.5}) {
        std::vector<double> scaled;
        for (int m : {40, 80, 160, 320}) {
          const int k = static_cast<int>(std::floor(t * m));
          scaled.push_back(m * std::abs(log_g_beta(k, m, beta) / m - F_beta(t, beta)));
        }
        const double bound = 2.0 * scaled.front() + 1.0;
        const double top = *std::max_element(scaled.begin(), scaled.end());
        worst_ratio = std::max(worst_ratio, top / bound);
        ok = ok && top <= bound;
      }
    detail = "max scaled error / bound = " + sci(worst_ratio);
    return ok;
  }));

  out.push_back(run_check("F_beta(1/2) closed form", [&](std::string& detail) {
    double worst = 0.0;
    for (double beta : {0.5, 1.0, 0.3, 1.5}) {
      const double closed = 0.5 * std::log((1.0 + std::exp(-2.0 * beta)) / 2.0);
      worst = std::max(worst, std::abs(F_beta(0.5, beta) - closed));
    }
    detail = "max deviation = " + sci(worst);
    return worst <= 1e-12;
  }));

  out.push_back(run_check("crossing inequality d F(c/d) <= b F(a/b)", [&](std::string& detail) {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double worst = -1e300;
    for (double beta : betas)
      for (int rep = 0; rep < 400; ++rep) {
        // 0 <= a <= b, a <= c <= d, b - a <= d - c.
        const double b = 0.1 + 10.0 * unit(rng);
        const double a = b * unit(rng);
        const double c = a + 5.0 * unit(rng);
        const double d = std::max(c, c + (b - a) + 5.0 * unit(rng));
        const double gap = d * F_beta(c / d, beta) - b * F_beta(a / b, beta);
        worst = std::max(worst, gap);
      }
    detail = "max d F(c/d) - b F(a/b) = " + sci(worst);
    return worst <= 1e-10;
  }));

  out.push_back(run_check("F_beta decreasing on [0,1/2] and convex", [&](std::string& detail) {
    bool ok = true;
    double worst_second = 0.0;
    for (double beta : betas) {
      const int n = 400;
      std::vector<double> v(n + 1);
      for (int i = 0; i <= n; ++i) v[i] = F_beta(static_cast<double>(i) / n, beta);
      for (int i = 0; i < n / 2; ++i) ok = ok && v[i + 1] <= v[i] + 1e-15;
      for (int i = 1; i < n; ++i) worst_second = std::min(worst_second, v[i - 1] - 2.0 * v[i] + v[i + 1]);
    }
    detail = "min second difference = " + sci(worst_second);
    return ok && worst_second >= -1e-12;
  }));

  out.push_back(run_check("crossing law matches exhaustive matchings", [&](std::string& detail) {
    double worst = 0.0;
    for (int m = 2; m <= 12; m += 2)
      for (int k = 0; k <= m; ++k) {
        const auto exact = brute_force_crossing(k, m);
        const auto formula = crossing_distribution(k, m);
        for (int j = 0; j <= m / 2; ++j) worst = std::max(worst, std::abs(exact.prob(j) - formula.prob(j)));
      }
    detail = "max |dP| = " + sci(worst);
    return worst <= 1e-12;
  }));

  out.push_back(run_check("F_beta table agrees with quadrature", [&](std::string& detail) {
    double worst = 0.0;
    for (double beta : betas) {
      const auto table = cached_F_beta_table(beta);
      for (int i = 0; i <= 997; ++i) {
        const double t = i / 997.0;
        worst = std::max(worst, std::abs(table->value(t) - F_beta(t, beta)));
      }
    }
    detail = "max interpolation error = " + sci(worst);
    return worst <= 1e-10;
  }));
  return out;
}

std::vector<CheckResult> deterministic_checks() {
  std::vector<CheckResult> out;
  const auto dists = solver_distributions();
  const double betas[] = {0.3, 0.8, 1.2};

  out.push_back(run_check("pressure even in B", [&](std::string& detail) {
    double worst = 0.0;
    for (const auto& d : dists)
      for (double beta : betas)
        for (double B : {0.05, 0.3, 1.0}) worst = std::max(worst, std::abs(phi(beta, B, d) - phi(beta, -B, d)));
    detail = "max |phi(B) - phi(-B)| = " + sci(worst);
    return worst <= 1e-12;
  }));

  out.push_back(run_check("pressure convex in B", [&](std::string& detail) {
    double worst = 0.0;
    for (const auto& d : dists)
      for (double beta : betas) {
        std::vector<double> v;
        for (int i = -20; i <= 20; ++i) v.push_back(phi(beta, 0.05 * i, d));
        for (std::size_t i = 1; i + 1 < v.size(); ++i) worst = std::min(worst, v[i - 1] - 2.0 * v[i] + v[i + 1]);
      }
    detail = "min second difference = " + sci(worst);
    return worst >= -1e-8;
  }));

  out.push_back(run_check("magnetization matches dphi/dB", [&](std::string& detail) {
    const double h = 1e-5;
    double worst = 0.0;
    for (const auto& d : dists)
      for (double beta : betas)
        for (double B : {0.2, -0.3, 0.7}) {
          const double fd = (phi(beta, B + h, d) - phi(beta, B - h, d)) / (2.0 * h);
          worst = std::max(worst, std::abs(pressure({beta, B}, d).magnetization - fd));
        }
    detail = "max |M - FD| = " + sci(worst);
    return worst <= 1e-5;
  }));

  out.push_back(run_check("root placement (w < 1 for B > 0, w = 1 listed at B = 0)", [&](std::string& detail) {
    bool ok = true;
    for (const auto& d : dists)
      for (double beta : betas) {
        for (const auto& r : solve_w({beta, 0.1}, d)) ok = ok && r.w < 1.0;
        const auto zero = solve_w({beta, 0.0}, d);
        ok = ok && std::any_of(zero.begin(), zero.end(), [](const auto& r) { return r.w == 1.0; });
      }
    detail = ok ? "all placements hold" : "violation found";
    return ok;
  }));

  out.push_back(run_check("pressure nondecreasing in beta at B = 0", [&](std::string& detail) {
    double worst = 0.0;
    for (const auto& d : dists) {
      double prev = phi(0.0, 0.0, d);
      for (int i = 1; i <= 40; ++i) {
        const double cur = phi(0.05 * i, 0.0, d);
        worst = std::min(worst, cur - prev);
        prev = cur;
      }
    }
    detail = "min increment = " + sci(worst);
    return worst >= 0.0;
  }));

  out.push_back(run_check("selected root invariant under a shift of G", [&](std::string& detail) {
    bool ok = true;
    for (const auto& d : dists)
      for (double beta : {0.8, 1.2}) {
        const auto roots = solve_w({beta, 0.0}, d);
        const auto base = select_maximizer(roots);
        for (double shift : {-7.5, 0.25, 3.0, 100.0}) ok = ok && select_maximizer(roots, shift) == base;
      }
    // An exact tie resolves toward the larger w.
    FixedPointSolution a, b;
    a.w = 0.4;
    b.w = 0.9;
    a.G_value = b.G_value = 1.0;
    const std::vector<FixedPointSolution> tie{b, a};
    ok = ok && tie[select_maximizer(tie)].w == 0.9;
    detail = ok ? "selection stable" : "selection changed";
    return ok;
  }));

  out.push_back(run_check("root grid self-consistency (2048 vs 4096)", [&](std::string& detail) {
    SolverOptions coarse, fine;
    fine.grid_size = 2 * coarse.grid_size;
    double worst = 0.0;
    bool same_count = true;
    for (const auto& d : dists)
      for (double beta : betas)
        for (double B : {0.0, 0.01, 0.3}) {
          const auto a = solve_w({beta, B}, d, coarse);
          const auto b = solve_w({beta, B}, d, fine);
          if (a.size() != b.size()) {
            same_count = false;
            continue;
          }
          for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i].w - b[i].w));
        }
    detail = "max root shift = " + sci(worst) + (same_count ? "" : ", root counts differ");
    return same_count && worst <= 1e-9;
  }));

  out.push_back(run_check("direct ascent over s agrees with the w family", [&](std::string& detail) {
    double worst = 0.0;
    for (const auto& d : dists)
      for (double beta : {0.4, 0.9})
        for (double B : {0.1, 0.5}) {
          const double direct = direct_ascent_pressure({beta, B}, d).pressure;
          worst = std::max(worst, std::abs(direct - phi(beta, B, d)));
        }
    detail = "max |direct - solver| = " + sci(worst);
    return worst <= 1e-8;
  }));

  out.push_back(run_check("high-temperature closed form at B = 0", [&](std::string& detail) {
    std::vector<DegreeDistribution> all = dists;
    all.push_back(make_distribution({{1, 0.5}, {2, 0.5}}));
    double worst = 0.0;
    for (const auto& d : all) {
      const double bc = critical_beta(d);
      const std::vector<double> samples =
          std::isfinite(bc) ? std::vector<double>{0.2 * bc, 0.5 * bc, 0.8 * bc} : std::vector<double>{0.5, 1.0, 2.0};
      for (double beta : samples)
        worst = std::max(worst, std::abs(phi(beta, 0.0, d) - (std::log(2.0) + 0.5 * mean(d) * log_cosh(beta))));
    }
    detail = "max deviation = " + sci(worst);
    return worst <= 1e-9;
  }));
  return out;
}

std::vector<CheckResult> iid_checks() {
  std::vector<CheckResult> out;
  const std::vector<DegreeDistribution> dists{
      make_distribution({{1, 0.5}, {3, 0.5}}), make_distribution({{1, 0.3}, {2, 0.3}, {4, 0.4}}),
      poisson_truncated(2.0, 60), geometric(0.5, 60)};

  out.push_back(run_check("nu strictly increasing along the tilt path", [&](std::string& detail) {
    bool ok = true;
    for (const auto& d : dists) {
      double prev = forward_degree_nu(d);
      for (int i = 1; i <= 12; ++i) {
        const double cur = forward_degree_nu(tilt(d, 0.1 * i));
        ok = ok && cur > prev;
        prev = cur;
      }
    }
    const auto d3 = dirac(3);
    for (int i = 1; i <= 12; ++i) ok = ok && forward_degree_nu(tilt(d3, 0.1 * i)) == forward_degree_nu(d3);
    detail = ok ? "monotone on all grids" : "monotonicity violated";
    return ok;
  }));

  out.push_back(run_check("beta_bar below atanh(1/nu), equal for dirac", [&](std::string& detail) {
    bool ok = true;
    double min_gap = 1e300;
    std::vector<DegreeDistribution> all = dists;
    all.push_back(poisson_truncated(4.0, 120));
    for (const auto& d : all) {
      const auto bound = beta_bar_c(d);
      const double bc = critical_beta(d);
      if (!bound.has_transition) {
        ok = false;
        continue;
      }
      if (std::isfinite(bc)) min_gap = std::min(min_gap, bc - bound.beta_bar);
      ok = ok && bound.beta_bar < bc;
    }
    double dirac_gap = 0.0;
    for (int r : {3, 4, 6}) dirac_gap = std::max(dirac_gap, std::abs(beta_bar_c(dirac(r)).beta_bar - critical_beta(dirac(r))));
    detail = "min strict gap = " + sci(min_gap) + ", dirac gap = " + sci(dirac_gap);
    return ok && dirac_gap <= 1e-10;
  }));

  out.push_back(run_check("iid pressure dominates deterministic pressure", [&](std::string& detail) {
    double worst = 1e300;
    for (const auto& d : dists) {
      if (d.min_degree() < 1) continue;
      for (double beta : {0.2, 0.5, 0.9})
        for (double B : {0.0, 0.1, 0.4}) {
          const auto iid = pressure_iid({beta, B}, d);
          worst = std::min(worst, iid.pressure - phi(beta, B, d));
        }
    }
    const auto p13 = make_distribution({{1, 0.5}, {3, 0.5}});
    const double strict = pressure_iid({0.4, 0.0}, p13).pressure - phi(0.4, 0.0, p13);
    detail = "min gap = " + sci(worst) + ", strict gap = " + sci(strict);
    return worst >= -1e-9 && strict > 1e-4;
  }));

  out.push_back(run_check("optimizer stationarity at B = 0, subcritical", [&](std::string& detail) {
    double worst = 0.0;
    for (const auto& p : dists) {
      const double beta = 0.6 * beta_bar_c(p).beta_bar;
      const ModelParams params{beta, 0.0};
      const auto r = pressure_iid(params, p);
      const auto& q = r.optimizer_q;
      double lo = 1e300, hi = -1e300;
      for (std::size_t i = 0; i < q.size(); ++i) {
        const int k = q.support()[i];
        const double v = std::log(q.probs()[i] / p.prob(k)) - 0.5 * beta * k - q_gradient(k, r.inner.solution.s, q, params);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
      }
      worst = std::max(worst, hi - lo);
    }
    detail = "max residual spread = " + sci(worst);
    return worst <= 1e-8;
  }));

  out.push_back(run_check("K_max stability of the iid pressure", [&](std::string& detail) {
    double worst = 0.0;
    bool ok = true;
    for (const auto& [beta, B] : std::vector<std::pair<double, double>>{{0.5, 0.0}, {0.3, 0.1}}) {
      const auto small = geometric(0.5, 20);
      const auto large = geometric(0.5, 40);
      const double delta = std::abs(pressure_iid({beta, B}, small).pressure - pressure_iid({beta, B}, large).pressure);
      const double tail = tilted_tail_mass(small, beta);
      worst = std::max(worst, delta / tail);
      ok = ok && delta < 10.0 * tail;
    }
    detail = "max change / tail mass = " + sci(worst);
    return ok;
  }));

  out.push_back(run_check("q-gradient matches finite difference", [&](std::string& detail) {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> unit(0.05, 0.95);
    const double h = 1e-6;
    double worst = 0.0;
    for (const auto& d : dists)
      for (const auto& params : {ModelParams{0.0, 0.0}, ModelParams{0.4, 0.2}, ModelParams{1.1, -0.3}}) {
        const auto degrees = d.support();
        std::vector<double> w(d.probs().begin(), d.probs().end());
        std::vector<double> s(d.size());
        for (double& v : s) v = unit(rng);
        for (std::size_t i = 0; i < d.size(); ++i) {
          if (w[i] < 1e-3) continue;
          auto up = w, down = w;
          up[i] += h;
          down[i] -= h;
          const double fd = (G_functional(degrees, up, s, params) - G_functional(degrees, down, s, params)) / (2.0 * h);
          worst = std::max(worst, std::abs(q_gradient(i, degrees, w, s, params) - fd));
        }
      }
    detail = "max |grad - FD| = " + sci(worst);
    return worst <= 1e-5;
  }));
  return out;
}

std::vector<CheckResult> oracle_checks() {
  std::vector<CheckResult> out;

  out.push_back(run_check("subset sum equals exhaustive enumeration", [&](std::string& detail) {
    double worst = 0.0;
    int instances = 0;
    std::vector<int> seq;
    std::function<void(int, int, int)> grow = [&](int min_deg, int n_left, int sum) {
      if (seq.size() >= 2 && sum % 2 == 0) {
        const OracleInstance inst{DegreeSequence(seq)};
        const BruteForceTable table(inst);
        ++instances;
        for (double beta : {0.0, 0.5, 1.3})
          for (double B : {0.0, 0.2, -0.2})
            worst = std::max(worst, std::abs(log_annealed_Z(inst, {beta, B}) - table.log_Z({beta, B})));
      }
      if (n_left == 0) return;
      for (int k = min_deg; sum + k <= kMaxBruteForceStubs; ++k) {
        seq.push_back(k);
        grow(k, n_left - 1, sum + k);
        seq.pop_back();
      }
    };
    grow(1, 6, 0);
    detail = std::to_string(instances) + " instances, max |diff| = " + sci(worst);
    return worst <= 1e-10;
  }));

  out.push_back(run_check("annealed Z even in B", [&](std::string& detail) {
    bool ok = true;
    for (const auto& v : std::vector<std::vector<int>>{{1, 1}, {1, 2, 3}, {3, 3, 3, 3}, {1, 1, 2, 4, 5, 5}})
      for (double beta : {0.3, 1.0})
        for (double B : {0.1, 0.7}) {
          const OracleInstance inst{DegreeSequence(v)};
          ok = ok && log_annealed_Z(inst, {beta, B}) == log_annealed_Z(inst, {beta, -B});
        }
    detail = ok ? "exact equality" : "asymmetry found";
    return ok;
  }));

  out.push_back(run_check("decoupled value at beta = 0", [&](std::string& detail) {
    double worst = 0.0;
    for (const auto& v : std::vector<std::vector<int>>{{1, 1}, {2, 3, 3}, {4, 4, 4, 4, 4, 4, 4, 4}})
      for (double B : {0.0, 0.5, -1.2}) {
        const OracleInstance inst{DegreeSequence(v)};
        worst = std::max(worst, std::abs(log_annealed_Z(inst, {0.0, B}) - inst.n() * std::log(2.0 * std::cosh(B))));
      }
    detail = "max deviation = " + sci(worst);
    return worst <= 1e-12;
  }));

  out.push_back(run_check("finite-n pressure converges for regular sequences", [&](std::string& detail) {
    bool ok = true;
    double worst_ratio = 0.0;
    for (int r : {3, 4}) {
      const double beta = 0.9 * std::atanh(1.0 / (r - 1));
      const double limit = std::log(2.0) + 0.5 * r * log_cosh(beta);
      std::vector<double> scaled;
      for (int n : {8, 16, 32, 64, 128}) {
        const OracleInstance inst{DegreeSequence(std::vector<int>(n, r))};
        scaled.push_back(n * std::abs(psi_n(inst, {beta, 0.0}) - limit) / std::log(static_cast<double>(n)));
      }
      for (double v : scaled) {
        worst_ratio = std::max(worst_ratio, v / scaled.front());
        ok = ok && v <= scaled.front() * (1.0 + 1e-9);
      }
    }
    detail = "max n|err|/log n relative to n=8: " + sci(worst_ratio);
    return ok;
  }));
  return out;
}

std::vector<CheckResult> run_invariant_suite() {
  std::vector<CheckResult> all;
  for (auto* group : {&degree_model_checks, &kernel_checks, &deterministic_checks, &iid_checks, &oracle_checks}) {
    auto part = group();
    all.insert(all.end(), part.begin(), part.end());
  }
  return all;
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
}

}  // namespace acm
