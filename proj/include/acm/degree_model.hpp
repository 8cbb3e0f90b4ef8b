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

#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace acm {

inline constexpr int kDefaultKmax = 200;

enum class Family { kExplicit, kDirac, kPoisson, kGeometric, kEmpirical };

std::string_view family_name(Family family);

// Parses "explicit", "dirac", "poisson", "geometric" or "empirical".
// Throws UnsupportedFamily otherwise.
Family family_from_string(std::string_view name);

// Where a distribution came from. For truncated infinite-support families
// `tail_mass` is the probability the untruncated law puts above `kmax`.
struct Provenance {
  Family family = Family::kExplicit;
  double lambda = 0.0;  // poisson
  double p = 0.0;       // geometric
  int degree = 0;       // dirac
  int kmax = 0;         // poisson, geometric
  double tail_mass = 0.0;
};

// Finite-support probability mass function over integer degrees k >= 0.
// Support is strictly increasing; probabilities are strictly positive and sum
// to one. Immutable after construction.
class DegreeDistribution {
 public:
  // Normalizes `pairs` (degree, weight). Zero-weight atoms are dropped.
  // Throws InvalidDistribution on negative/non-finite weights, duplicate or
  // negative degrees, or when no weight is positive.
  static DegreeDistribution from_weights(std::vector<std::pair<int, double>> pairs,
                                         Provenance provenance = {});

  std::span<const int> support() const { return support_; }
  std::span<const double> probs() const { return probs_; }
  const Provenance& provenance() const { return provenance_; }

  std::size_t size() const { return support_.size(); }
  int min_degree() const { return support_.front(); }
  int max_degree() const { return support_.back(); }
  bool is_dirac() const { return support_.size() == 1; }

  // Probability of degree k (zero off-support).
  double prob(int k) const;

 private:
  DegreeDistribution() = default;

  std::vector<int> support_;
  std::vector<double> probs_;
  Provenance provenance_;
};

// Law of the degree at the end of a uniformly chosen half-edge.
class SizeBiasedDistribution {
 public:
  explicit SizeBiasedDistribution(DegreeDistribution dist) : dist_(std::move(dist)) {}

  const DegreeDistribution& distribution() const { return dist_; }
  std::span<const int> support() const { return dist_.support(); }
  std::span<const double> probs() const { return dist_.probs(); }

 private:
  DegreeDistribution dist_;
};

// Degree sequence of a configuration model. An odd total degree is made even
// by incrementing the last degree.
class DegreeSequence {
 public:
  explicit DegreeSequence(std::vector<int> degrees);

  std::span<const int> degrees() const { return degrees_; }
  int n() const { return static_cast<int>(degrees_.size()); }
  long long total_degree() const { return total_degree_; }
  bool parity_adjusted() const { return parity_adjusted_; }

 private:
  std::vector<int> degrees_;
  long long total_degree_ = 0;
  bool parity_adjusted_ = false;
};

DegreeDistribution make_distribution(std::vector<std::pair<int, double>> pairs);
DegreeDistribution dirac(int degree);
DegreeDistribution poisson_truncated(double lambda, int kmax = kDefaultKmax);
DegreeDistribution geometric(double p, int kmax = kDefaultKmax);
DegreeDistribution empirical_from_sequence(const DegreeSequence& seq);

double mean(const DegreeDistribution& dist);
double second_moment(const DegreeDistribution& dist);

// E[D(D-1)] / E[D]. Throws DegenerateDistribution when E[D] = 0.
double forward_degree_nu(const DegreeDistribution& dist);

SizeBiasedDistribution size_biased(const DegreeDistribution& dist);

// q_k proportional to p_k cosh(beta)^{k/2}. Computed in log space, so large
// beta and degree do not overflow.
DegreeDistribution tilt(const DegreeDistribution& dist, double beta);

// sum_i q_i log(q_i / p_i); +infinity when q charges a degree p does not.
double relative_entropy(const DegreeDistribution& q, const DegreeDistribution& p);

// Whether E[exp(beta D / 2)] is finite for the untruncated family.
bool exp_moment_condition(const Provenance& family, double beta);

// Mass that the untruncated tilted family tilt(., beta) puts above kmax.
// Zero for finite families; +infinity when the tilted family is not summable.
double tilted_tail_mass(const DegreeDistribution& dist, double beta);

// Total variation distance over the union of supports.
double total_variation(const DegreeDistribution& a, const DegreeDistribution& b);

// log cosh(x) without overflow.
double log_cosh(double x);

// Reads whitespace-separated positive integers.
DegreeSequence read_degree_sequence(const std::string& path);

}  // namespace acm
