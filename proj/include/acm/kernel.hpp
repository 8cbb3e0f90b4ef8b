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

// Analytic and combinatorial kernel of the annealed Ising model on a random
// matching:
//
//   f_beta(u)  = [e^{-2b}(1-2u) + sqrt(1 + (e^{-4b}-1)(1-2u)^2)] / (2(1-u))
//   F_beta(t)  = int_0^{min(t,1-t)} log f_beta(u) du
//   g_beta(k,m) = E[exp(-2 beta X(k,m))]
//
// where X(k,m) counts the pairs of a uniform perfect matching of m stubs that
// join one of the first k stubs to one of the remaining m-k.

#pragma once

#include <memory>
#include <vector>

namespace acm {

inline constexpr int kMaxKernelStubs = 2000;

double f_beta(double u, double beta);
double f_beta_inverse(double y, double beta);

// Adaptive Gauss-Kronrod quadrature, absolute error well below 1e-12.
double F_beta(double t, double beta);
double F_beta_prime(double t, double beta);

// log((n)!!) for odd n >= -1; (-1)!! = 1.
double log_double_factorial_odd(long long n);

// Law of X(k, m). `js` lists admissible crossing counts in increasing order,
// `log_probs[i]` is log P(X = js[i]).
struct CrossingDistribution {
  int m = 0;
  int k = 0;
  std::vector<int> js;
  std::vector<double> log_probs;

  double prob(int j) const;
};

// Throws InvalidParameter for odd m, k outside [0, m], or m > m_cap.
CrossingDistribution crossing_distribution(int k, int m, int m_cap = kMaxKernelStubs);

double log_g_beta(int k, int m, double beta, int m_cap = kMaxKernelStubs);

// log g_beta(k, m) for every k in [0, m]; m up to 4000.
std::vector<double> log_g_beta_row(int m, double beta);

// F_beta tabulated on a uniform grid of [0, 1/2] with cubic Hermite
// interpolation (derivatives are exact). For inner loops only; reported
// values use F_beta directly. Immutable once built.
class FBetaTable {
 public:
  explicit FBetaTable(double beta, int nodes = 4097);

  double beta() const { return beta_; }
  double value(double t) const;
  double derivative(double t) const { return derivative_at(t); }

 private:
  double derivative_at(double t) const;

  double beta_;
  double h_;
  std::vector<double> values_;
  std::vector<double> slopes_;
};

// Process-wide memoized table for `beta`; safe for concurrent callers.
std::shared_ptr<const FBetaTable> cached_F_beta_table(double beta);

}  // namespace acm
