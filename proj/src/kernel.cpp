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

#include "acm/kernel.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <string>

#include "acm/errors.hpp"

namespace acm {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr int kMaxRowStubs = 4000;

void check_beta(double beta) {
  if (!(beta >= 0.0) || !std::isfinite(beta))
    throw InvalidParameter("beta must be finite and nonnegative");
}

double log_f(double u, double beta) { return std::log(f_beta(u, beta)); }

// max_depth = 0 applies a single 31-point rule (used on short table panels).
double integrate_log_f(double a, double b, double beta, unsigned max_depth = 15) {
  if (b <= a || beta == 0.0) return 0.0;
  auto integrand = [beta](double u) { return log_f(u, beta); };
  double error = 0.0;
  return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(integrand, a, b, max_depth,
                                                                       1e-12, &error);
}

double log_choose(const std::vector<double>& lf, int n, int r) {
  return lf[n] - lf[r] - lf[n - r];
}

// log((2a-1)!!) = log((2a)!) - a log 2 - log(a!), with (-1)!! = 1 at a = 0.
double log_df_from_table(const std::vector<double>& lf, int n) {
  const int a = (n + 1) / 2;
  return lf[2 * a] - a * std::log(2.0) - lf[a];
}

std::vector<double> log_factorials(int m) {
  std::vector<double> lf(m + 1, 0.0);
  for (int i = 1; i <= m; ++i) lf[i] = lf[i - 1] + std::log(static_cast<double>(i));
  return lf;
}

void check_km(int k, int m, int m_cap) {
  if (m < 0 || m % 2 != 0) throw InvalidParameter("m must be a nonnegative even integer");
  if (k < 0 || k > m) throw InvalidParameter("k must lie in [0, m]");
  if (m > m_cap)
    throw InvalidParameter("m = " + std::to_string(m) + " exceeds the cap " +
                           std::to_string(m_cap));
}

// Fills `out` with log P(X(k,m) = j) for admissible j, using factorial table lf.
void crossing_log_probs(int k, int m, const std::vector<double>& lf, std::vector<int>& js,
                        std::vector<double>& lp) {
  js.clear();
  lp.clear();
  const int lo = std::min(k, m - k);
  const double norm = log_df_from_table(lf, m - 1);
  for (int j = k % 2; j <= lo; j += 2) {
    const double v = log_choose(lf, k, j) + log_choose(lf, m - k, j) + lf[j] +
                     log_df_from_table(lf, k - j - 1) + log_df_from_table(lf, m - k - j - 1) -
                     norm;
    js.push_back(j);
    lp.push_back(v);
  }
}

double log_mgf(const std::vector<int>& js, const std::vector<double>& lp, double beta) {
  if (beta == 0.0) return 0.0;
  double top = kNegInf;
  for (std::size_t i = 0; i < js.size(); ++i) top = std::max(top, lp[i] - 2.0 * beta * js[i]);
  double acc = 0.0;
  for (std::size_t i = 0; i < js.size(); ++i) acc += std::exp(lp[i] - 2.0 * beta * js[i] - top);
  return std::min(top + std::log(acc), 0.0);
}

}  // namespace

double f_beta(double u, double beta) {
  if (!(u >= 0.0 && u <= 0.5)) throw DomainError("f_beta needs u in [0, 1/2]");
  const double c = std::exp(-2.0 * beta);
  const double x = 1.0 - 2.0 * u;
  return (c * x + std::sqrt(1.0 + (c * c - 1.0) * x * x)) / (2.0 * (1.0 - u));
}

double f_beta_inverse(double y, double beta) {
  const double c = std::exp(-2.0 * beta);
  if (!(y > c && y <= 1.0) && !(beta == 0.0 && y == 1.0))
    throw DomainError("f_beta_inverse needs y in (e^{-2 beta}, 1]");
  if (y == 1.0) return 0.5;
  return (y * y - c * y) / (1.0 + y * y - 2.0 * c * y);
}

double F_beta(double t, double beta) {
  check_beta(beta);
  if (!(t >= 0.0 && t <= 1.0)) throw DomainError("F_beta needs t in [0, 1]");
  const double upper = std::min(t, 1.0 - t);
  return std::min(integrate_log_f(0.0, upper, beta), 0.0);
}

double F_beta_prime(double t, double beta) {
  if (!(t >= 0.0 && t <= 1.0)) throw DomainError("F_beta_prime needs t in [0, 1]");
  return t <= 0.5 ? log_f(t, beta) : -log_f(1.0 - t, beta);
}

double log_double_factorial_odd(long long n) {
  if (n < -1 || n % 2 == 0) throw InvalidParameter("double factorial argument must be odd");
  const double a = static_cast<double>((n + 1) / 2);
  return std::lgamma(2.0 * a + 1.0) - a * std::log(2.0) - std::lgamma(a + 1.0);
}

double CrossingDistribution::prob(int j) const {
  const auto it = std::lower_bound(js.begin(), js.end(), j);
  if (it == js.end() || *it != j) return 0.0;
  return std::exp(log_probs[static_cast<std::size_t>(it - js.begin())]);
}

CrossingDistribution crossing_distribution(int k, int m, int m_cap) {
  check_km(k, m, m_cap);
  CrossingDistribution out;
  out.k = k;
  out.m = m;
  const auto lf = log_factorials(m);
  crossing_log_probs(std::min(k, m - k), m, lf, out.js, out.log_probs);
  return out;
}

double log_g_beta(int k, int m, double beta, int m_cap) {
  check_beta(beta);
  check_km(k, m, m_cap);
  const auto lf = log_factorials(m);
  std::vector<int> js;
  std::vector<double> lp;
  crossing_log_probs(std::min(k, m - k), m, lf, js, lp);
  return log_mgf(js, lp, beta);
}

std::vector<double> log_g_beta_row(int m, double beta) {
  check_beta(beta);
  check_km(0, m, kMaxRowStubs);
  const auto lf = log_factorials(m);
  std::vector<double> row(m + 1);
  std::vector<int> js;
  std::vector<double> lp;
  for (int k = 0; k <= m / 2; ++k) {
    crossing_log_probs(k, m, lf, js, lp);
    row[k] = log_mgf(js, lp, beta);
    row[m - k] = row[k];
  }
  return row;
}

FBetaTable::FBetaTable(double beta, int nodes) : beta_(beta) {
  check_beta(beta);
  if (nodes < 2) throw InvalidParameter("FBetaTable needs at least two nodes");
  h_ = 0.5 / (nodes - 1);
  values_.assign(nodes, 0.0);
  slopes_.assign(nodes, 0.0);
  for (int i = 0; i < nodes; ++i) {
    const double t = std::min(i * h_, 0.5);
    slopes_[i] = log_f(t, beta);
    if (i > 0) values_[i] = values_[i - 1] + integrate_log_f((i - 1) * h_, t, beta, 0);
  }
}

double FBetaTable::value(double t) const {
  if (!(t >= 0.0 && t <= 1.0)) throw DomainError("F_beta needs t in [0, 1]");
  const double u = std::min(t, 1.0 - t);
  const auto last = values_.size() - 1;
  auto i = std::min(static_cast<std::size_t>(u / h_), last - 1);
  const double s = (u - i * h_) / h_;
  const double s2 = s * s;
  const double s3 = s2 * s;
  const double h00 = 2 * s3 - 3 * s2 + 1;
  const double h10 = s3 - 2 * s2 + s;
  const double h01 = -2 * s3 + 3 * s2;
  const double h11 = s3 - s2;
  return h00 * values_[i] + h10 * h_ * slopes_[i] + h01 * values_[i + 1] +
         h11 * h_ * slopes_[i + 1];
}

double FBetaTable::derivative_at(double t) const { return F_beta_prime(t, beta_); }

std::shared_ptr<const FBetaTable> cached_F_beta_table(double beta) {
  static std::mutex mutex;
  static std::map<double, std::shared_ptr<const FBetaTable>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[beta];
  if (!slot) slot = std::make_shared<const FBetaTable>(beta);
  return slot;
}

}  // namespace acm
