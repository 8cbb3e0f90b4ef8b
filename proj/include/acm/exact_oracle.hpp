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

// Exact finite-n quantities for a configuration model with a given degree
// sequence. Two independent routes to E[Z_n]:
//
//  * log_annealed_Z: sum over how many vertices of each degree carry a +
//    spin, weighted by the random-matching kernel g_beta;
//  * brute_force_Z: every perfect matching of the labeled half-edges times
//    every spin vector.
//
// Self-loops contribute beta (sigma_i^2 = 1) and multi-edges contribute once
// per pairing, matching the half-edge bookkeeping of g_beta.

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <vector>

#include "acm/annealed_deterministic.hpp"
#include "acm/degree_model.hpp"
#include "acm/kernel.hpp"

namespace acm {

inline constexpr std::uint64_t kDefaultEnumerationBudget = 10'000'000;
inline constexpr int kMaxSubsetStubs = 4000;
inline constexpr int kMaxBruteForceStubs = 12;
inline constexpr int kMaxBruteForceVertices = 10;

class OracleInstance {
 public:
  explicit OracleInstance(DegreeSequence seq);

  const DegreeSequence& sequence() const { return seq_; }
  const std::map<int, int>& counts() const { return counts_; }
  int n() const { return seq_.n(); }
  long long total_degree() const { return seq_.total_degree(); }

 private:
  DegreeSequence seq_;
  std::map<int, int> counts_;
};

double log_annealed_Z(const OracleInstance& instance, const ModelParams& params,
                      std::uint64_t budget = kDefaultEnumerationBudget);

double psi_n(const OracleInstance& instance, const ModelParams& params,
             std::uint64_t budget = kDefaultEnumerationBudget);

// Exhaustive enumeration of matchings and spins, tabulated once per instance
// as counts of (crossing pairs, plus spins); evaluating at any (beta, B) is then
// a short log-sum-exp.
class BruteForceTable {
 public:
  explicit BruteForceTable(const OracleInstance& instance);

  double log_Z(const ModelParams& params) const;
  std::uint64_t matchings() const { return matchings_; }

 private:
  int n_ = 0;
  int stubs_ = 0;
  std::uint64_t matchings_ = 0;
  // counts_[x * (n + 1) + a]: (matching, spin vector) pairs with x
  // disagreeing edges and a plus spins.
  std::vector<std::uint64_t> counts_;
};

double brute_force_Z(const OracleInstance& instance, const ModelParams& params);

CrossingDistribution brute_force_crossing(int k, int m);

// Visits every perfect matching of m points: partner[i] is the point paired
// with i. Lowest free point is paired with each larger free point in turn.
void for_each_perfect_matching(int m, const std::function<void(std::span<const int>)>& visit);

}  // namespace acm
