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

#include "acm/degree_model.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <numeric>

#include "acm/errors.hpp"

namespace acm {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Normalizes log-weights into probabilities with a max shift.
std::vector<std::pair<int, double>> exp_normalized(
    const std::vector<std::pair<int, double>>& log_weights) {
  double top = -kInf;
  for (const auto& [k, lw] : log_weights) top = std::max(top, lw);
  std::vector<std::pair<int, double>> out;
  out.reserve(log_weights.size());
  for (const auto& [k, lw] : log_weights) out.emplace_back(k, std::exp(lw - top));
  return out;
}

// P(Poisson(mu) > kmax), summed from the first omitted term.
double poisson_upper_tail(double mu, int kmax) {
  if (mu <= 0.0) return 0.0;
  double log_term = -mu + (kmax + 1) * std::log(mu) - std::lgamma(kmax + 2.0);
  double total = 0.0;
  for (int i = kmax + 1; i < kmax + 100000; ++i) {
    const double term = std::exp(log_term);
    total += term;
    if (i > mu && term < 1e-18 * std::max(total, 1e-300)) break;
    log_term += std::log(mu) - std::log(i + 1.0);
  }
  return std::min(total, 1.0);
}

}  // namespace

std::string_view family_name(Family family) {
  switch (family) {
    case Family::kExplicit: return "explicit";
    case Family::kDirac: return "dirac";
    case Family::kPoisson: return "poisson";
    case Family::kGeometric: return "geometric";
    case Family::kEmpirical: return "empirical";
  }
  return "unknown";
}

Family family_from_string(std::string_view name) {
  if (name == "explicit") return Family::kExplicit;
  if (name == "dirac") return Family::kDirac;
  if (name == "poisson") return Family::kPoisson;
  if (name == "geometric") return Family::kGeometric;
  if (name == "empirical") return Family::kEmpirical;
  throw UnsupportedFamily("unknown distribution family '" + std::string(name) + "'");
}

DegreeDistribution DegreeDistribution::from_weights(std::vector<std::pair<int, double>> pairs,
                                                    Provenance provenance) {
  if (pairs.empty()) throw InvalidDistribution("distribution needs at least one atom");
  std::sort(pairs.begin(), pairs.end());
  double total = 0.0;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto [k, w] = pairs[i];
    if (k < 0) throw InvalidDistribution("negative degree " + std::to_string(k));
    if (!std::isfinite(w) || w < 0.0)
      throw InvalidDistribution("weight of degree " + std::to_string(k) +
                                " must be finite and nonnegative");
    if (i > 0 && pairs[i - 1].first == k)
      throw InvalidDistribution("duplicate degree " + std::to_string(k));
    total += w;
  }
  if (!(total > 0.0)) throw InvalidDistribution("all weights are zero");

  DegreeDistribution dist;
  dist.provenance_ = provenance;
  for (const auto& [k, w] : pairs) {
    if (w == 0.0) continue;
    dist.support_.push_back(k);
    dist.probs_.push_back(w / total);
  }
  // Second pass keeps the sum within rounding of one.
  const double sum = std::accumulate(dist.probs_.begin(), dist.probs_.end(), 0.0);
  for (double& q : dist.probs_) q /= sum;
  return dist;
}

double DegreeDistribution::prob(int k) const {
  const auto it = std::lower_bound(support_.begin(), support_.end(), k);
  if (it == support_.end() || *it != k) return 0.0;
  return probs_[static_cast<std::size_t>(it - support_.begin())];
}

DegreeSequence::DegreeSequence(std::vector<int> degrees) : degrees_(std::move(degrees)) {
  if (degrees_.empty()) throw InvalidParameter("degree sequence is empty");
  for (int d : degrees_) {
    if (d < 1) throw InvalidParameter("degrees must be positive, got " + std::to_string(d));
    total_degree_ += d;
  }
  if (total_degree_ % 2 != 0) {
    ++degrees_.back();
    ++total_degree_;
    parity_adjusted_ = true;
  }
}

DegreeDistribution make_distribution(std::vector<std::pair<int, double>> pairs) {
  return DegreeDistribution::from_weights(std::move(pairs));
}

DegreeDistribution dirac(int degree) {
  Provenance prov;
  prov.family = Family::kDirac;
  prov.degree = degree;
  return DegreeDistribution::from_weights({{degree, 1.0}}, prov);
}

DegreeDistribution poisson_truncated(double lambda, int kmax) {
  if (!(lambda > 0.0) || !std::isfinite(lambda))
    throw InvalidParameter("poisson intensity must be positive");
  if (kmax < 0) throw InvalidParameter("kmax must be nonnegative");
  std::vector<std::pair<int, double>> log_w;
  for (int i = 0; i <= kmax; ++i)
    log_w.emplace_back(i, i * std::log(lambda) - std::lgamma(i + 1.0));
  Provenance prov;
  prov.family = Family::kPoisson;
  prov.lambda = lambda;
  prov.kmax = kmax;
  prov.tail_mass = poisson_upper_tail(lambda, kmax);
  return DegreeDistribution::from_weights(exp_normalized(log_w), prov);
}

DegreeDistribution geometric(double p, int kmax) {
  if (!(p > 0.0 && p < 1.0)) throw InvalidParameter("geometric parameter must lie in (0,1)");
  if (kmax < 1) throw InvalidParameter("kmax must be at least 1");
  std::vector<std::pair<int, double>> log_w;
  const double log_r = std::log1p(-p);
  for (int i = 1; i <= kmax; ++i) log_w.emplace_back(i, (i - 1) * log_r + std::log(p));
  Provenance prov;
  prov.family = Family::kGeometric;
  prov.p = p;
  prov.kmax = kmax;
  prov.tail_mass = std::exp(kmax * log_r);
  return DegreeDistribution::from_weights(exp_normalized(log_w), prov);
}

DegreeDistribution empirical_from_sequence(const DegreeSequence& seq) {
  std::map<int, int> counts;
  for (int d : seq.degrees()) ++counts[d];
  std::vector<std::pair<int, double>> pairs;
  for (const auto& [k, c] : counts) pairs.emplace_back(k, static_cast<double>(c) / seq.n());
  Provenance prov;
  prov.family = Family::kEmpirical;
  return DegreeDistribution::from_weights(std::move(pairs), prov);
}

double mean(const DegreeDistribution& dist) {
  double m = 0.0;
  for (std::size_t i = 0; i < dist.size(); ++i) m += dist.support()[i] * dist.probs()[i];
  return m;
}

double second_moment(const DegreeDistribution& dist) {
  double m = 0.0;
  for (std::size_t i = 0; i < dist.size(); ++i) {
    const double k = dist.support()[i];
    m += k * k * dist.probs()[i];
  }
  return m;
}

double forward_degree_nu(const DegreeDistribution& dist) {
  const double m1 = mean(dist);
  if (!(m1 > 0.0)) throw DegenerateDistribution("forward degree needs a positive mean");
  double num = 0.0;
  for (std::size_t i = 0; i < dist.size(); ++i) {
    const double k = dist.support()[i];
    num += k * (k - 1.0) * dist.probs()[i];
  }
  return num / m1;
}

SizeBiasedDistribution size_biased(const DegreeDistribution& dist) {
  if (!(mean(dist) > 0.0)) throw DegenerateDistribution("size-biasing needs a positive mean");
  std::vector<std::pair<int, double>> pairs;
  for (std::size_t i = 0; i < dist.size(); ++i) {
    const int k = dist.support()[i];
    if (k > 0) pairs.emplace_back(k, k * dist.probs()[i]);
  }
  return SizeBiasedDistribution(DegreeDistribution::from_weights(std::move(pairs),
                                                                 dist.provenance()));
}

double log_cosh(double x) {
  const double a = std::abs(x);
  return a + std::log1p(std::exp(-2.0 * a)) - std::log(2.0);
}

DegreeDistribution tilt(const DegreeDistribution& dist, double beta) {
  if (beta < 0.0 || !std::isfinite(beta)) throw InvalidParameter("tilt needs beta >= 0");
  if (beta == 0.0) return dist;
  const double lc = log_cosh(beta);
  std::vector<std::pair<int, double>> log_w;
  log_w.reserve(dist.size());
  for (std::size_t i = 0; i < dist.size(); ++i) {
    const int k = dist.support()[i];
    log_w.emplace_back(k, std::log(dist.probs()[i]) + 0.5 * k * lc);
  }
  return DegreeDistribution::from_weights(exp_normalized(log_w), dist.provenance());
}

double relative_entropy(const DegreeDistribution& q, const DegreeDistribution& p) {
  double h = 0.0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    const double qi = q.probs()[i];
    const double pi = p.prob(q.support()[i]);
    if (pi == 0.0) return kInf;
    h += qi * std::log(qi / pi);
  }
  return std::max(h, 0.0);
}

bool exp_moment_condition(const Provenance& family, double beta) {
  switch (family.family) {
    case Family::kExplicit:
    case Family::kDirac:
    case Family::kEmpirical:
    case Family::kPoisson:
      return true;
    case Family::kGeometric:
      return beta < -2.0 * std::log1p(-family.p);
  }
  throw UnsupportedFamily("unknown distribution family");
}

double tilted_tail_mass(const DegreeDistribution& dist, double beta) {
  const Provenance& prov = dist.provenance();
  switch (prov.family) {
    case Family::kPoisson:
      // The tilt of Poisson(lambda) is Poisson(lambda sqrt(cosh beta)).
      return poisson_upper_tail(prov.lambda * std::exp(0.5 * log_cosh(beta)), prov.kmax);
    case Family::kGeometric: {
      const double ratio = (1.0 - prov.p) * std::exp(0.5 * log_cosh(beta));
      if (ratio >= 1.0) return kInf;
      return std::pow(ratio, prov.kmax);
    }
    default:
      return 0.0;
  }
}

double total_variation(const DegreeDistribution& a, const DegreeDistribution& b) {
  double tv = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    tv += std::abs(a.probs()[i] - b.prob(a.support()[i]));
  for (std::size_t i = 0; i < b.size(); ++i)
    if (a.prob(b.support()[i]) == 0.0) tv += b.probs()[i];
  return 0.5 * tv;
}

DegreeSequence read_degree_sequence(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidParameter("cannot open degree sequence file '" + path + "'");
  std::vector<int> degrees;
  long long d = 0;
  while (in >> d) {
    if (d < 1 || d > std::numeric_limits<int>::max())
      throw InvalidParameter("degree out of range in '" + path + "'");
    degrees.push_back(static_cast<int>(d));
  }
  if (!in.eof()) throw InvalidParameter("non-integer token in '" + path + "'");
  return DegreeSequence(std::move(degrees));
}

}  // namespace acm
