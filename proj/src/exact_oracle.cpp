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

#include "acm/exact_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "acm/errors.hpp"

namespace acm {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Streaming log-sum-exp with a running maximum.
class LogSumExp {
 public:
  void add(double v) {
    if (v == kNegInf) return;
    if (v > top_) {
      acc_ = acc_ * std::exp(top_ - v) + 1.0;
      top_ = v;
    } else {
      acc_ += std::exp(v - top_);
    }
  }
  double value() const { return acc_ > 0.0 ? top_ + std::log(acc_) : kNegInf; }

 private:
  double top_ = kNegInf;
  double acc_ = 0.0;
};

void match_recursive(std::vector<int>& partner, const std::function<void(std::span<const int>)>& visit) {
  const auto first = std::find(partner.begin(), partner.end(), -1);
  if (first == partner.end()) {
    visit(partner);
    return;
  }
  const int i = static_cast<int>(first - partner.begin());
  for (int j = i + 1; j < static_cast<int>(partner.size()); ++j) {
    if (partner[j] != -1) continue;
    partner[i] = j;
    partner[j] = i;
    match_recursive(partner, visit);
    partner[i] = -1;
    partner[j] = -1;
  }
}

}  // namespace

OracleInstance::OracleInstance(DegreeSequence seq) : seq_(std::move(seq)) {
  for (int d : seq_.degrees()) ++counts_[d];
}

double log_annealed_Z(const OracleInstance& instance, const ModelParams& params,
                      std::uint64_t budget) {
  if (!(params.beta >= 0.0) || !std::isfinite(params.beta) || !std::isfinite(params.B))
    throw InvalidParameter("beta must be finite and nonnegative, B finite");
  const long long ell = instance.total_degree();
  if (ell > kMaxSubsetStubs)
    throw BudgetExceeded("total degree exceeds the kernel cap " + std::to_string(kMaxSubsetStubs),
                         static_cast<std::uint64_t>(ell));
  std::vector<int> degrees;
  std::vector<int> counts;
  std::uint64_t combos = 1;
  for (const auto& [k, c] : instance.counts()) {
    degrees.push_back(k);
    counts.push_back(c);
    if (combos > budget) continue;
    combos *= static_cast<std::uint64_t>(c) + 1;
  }
  if (combos > budget) throw BudgetExceeded("subset enumeration exceeds the budget", combos);

  // Symmetric in B (A <-> complement of A); use |B| so both signs agree bitwise.
  const double B = std::abs(params.B);
  const int n = instance.n();
  std::vector<double> lf(n + 1, 0.0);
  for (int i = 1; i <= n; ++i) lf[i] = lf[i - 1] + std::log(static_cast<double>(i));
  const auto log_g = log_g_beta_row(static_cast<int>(ell), params.beta);

  const std::size_t K = degrees.size();
  std::vector<int> j(K, 0);
  LogSumExp total;
  while (true) {
    double term = 0.0;
    long long stubs = 0;
    long long plus = 0;
    for (std::size_t i = 0; i < K; ++i) {
      term += lf[counts[i]] - lf[j[i]] - lf[counts[i] - j[i]];
      stubs += static_cast<long long>(degrees[i]) * j[i];
      plus += j[i];
    }
    term += 2.0 * B * static_cast<double>(plus) + log_g[static_cast<std::size_t>(stubs)];
    total.add(term);
    std::size_t pos = 0;
    while (pos < K && j[pos] == counts[pos]) j[pos++] = 0;
    if (pos == K) break;
    ++j[pos];
  }
  return 0.5 * params.beta * static_cast<double>(ell) - B * n + total.value();
}

double psi_n(const OracleInstance& instance, const ModelParams& params, std::uint64_t budget) {
  return log_annealed_Z(instance, params, budget) / instance.n();
}

void for_each_perfect_matching(int m, const std::function<void(std::span<const int>)>& visit) {
  if (m < 0 || m % 2 != 0) throw InvalidParameter("matching needs an even number of points");
  std::vector<int> partner(m, -1);
  match_recursive(partner, visit);
}

BruteForceTable::BruteForceTable(const OracleInstance& instance)
    : n_(instance.n()), stubs_(static_cast<int>(instance.total_degree())) {
  if (stubs_ > kMaxBruteForceStubs || n_ > kMaxBruteForceVertices) {
    std::uint64_t required = std::uint64_t{1} << std::min(n_, 63);
    for (int i = stubs_ - 1; i > 1 && required < (std::uint64_t{1} << 62); i -= 2) required *= i;
    throw BudgetExceeded("brute force needs total degree <= 12 and n <= 10", required);
  }
  std::vector<int> owner;
  for (int v = 0; v < n_; ++v)
    for (int d = 0; d < instance.sequence().degrees()[v]; ++d) owner.push_back(v);

  const int max_x = stubs_ / 2;
  counts_.assign(static_cast<std::size_t>(max_x + 1) * (n_ + 1), 0);
  const std::uint32_t masks = 1u << n_;
  std::vector<int> plus_count(masks);
  for (std::uint32_t mask = 0; mask < masks; ++mask) plus_count[mask] = __builtin_popcount(mask);

  std::vector<std::pair<int, int>> edges;
  for_each_perfect_matching(stubs_, [&](std::span<const int> partner) {
    ++matchings_;
    edges.clear();
    for (int i = 0; i < stubs_; ++i) {
      const int j = partner[i];
      if (i < j && owner[i] != owner[j]) edges.emplace_back(owner[i], owner[j]);
    }
    for (std::uint32_t mask = 0; mask < masks; ++mask) {
      int x = 0;
      for (const auto& [u, v] : edges) x += static_cast<int>(((mask >> u) ^ (mask >> v)) & 1u);
      ++counts_[static_cast<std::size_t>(x) * (n_ + 1) + plus_count[mask]];
    }
  });
}

double BruteForceTable::log_Z(const ModelParams& params) const {
  LogSumExp total;
  const int max_x = stubs_ / 2;
  for (int x = 0; x <= max_x; ++x) {
    for (int a = 0; a <= n_; ++a) {
      const auto c = counts_[static_cast<std::size_t>(x) * (n_ + 1) + a];
      if (c == 0) continue;
      total.add(std::log(static_cast<double>(c)) + params.beta * (0.5 * stubs_ - 2.0 * x) +
                params.B * (2.0 * a - n_));
    }
  }
  return total.value() - std::log(static_cast<double>(matchings_));
}

double brute_force_Z(const OracleInstance& instance, const ModelParams& params) {
  return BruteForceTable(instance).log_Z(params);
}

CrossingDistribution brute_force_crossing(int k, int m) {
  if (m < 0 || m % 2 != 0 || k < 0 || k > m)
    throw InvalidParameter("need even m and 0 <= k <= m");
  if (m > kMaxBruteForceStubs)
    throw BudgetExceeded("brute-force crossing enumeration needs m <= 12",
                         static_cast<std::uint64_t>(std::exp(log_double_factorial_odd(m - 1))));
  std::vector<std::uint64_t> tally(m / 2 + 1, 0);
  std::uint64_t total = 0;
  for_each_perfect_matching(m, [&](std::span<const int> partner) {
    int x = 0;
    for (int i = 0; i < k; ++i) x += partner[i] >= k ? 1 : 0;
    ++tally[x];
    ++total;
  });
  CrossingDistribution out;
  out.k = k;
  out.m = m;
  for (int j = 0; j <= m / 2; ++j) {
    if (tally[j] == 0) continue;
    out.js.push_back(j);
    out.log_probs.push_back(std::log(static_cast<double>(tally[j]) / static_cast<double>(total)));
  }
  return out;
}

}  // namespace acm
