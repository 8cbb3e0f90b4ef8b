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
#include <cstdio>
#include <fstream>
#include <random>

#include "acm/degree_model.hpp"
#include "acm/errors.hpp"

using namespace acm;

namespace {

bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

std::vector<DegreeDistribution> random_laws(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> weight(0.01, 1.0);
  std::uniform_int_distribution<int> width(2, 6);
  std::vector<DegreeDistribution> out;
  for (int c = 0; c < count; ++c) {
    std::vector<std::pair<int, double>> pairs;
    const int n = width(rng);
    for (int k = 1; k <= n; ++k) pairs.emplace_back(k + c % 3, weight(rng));
    out.push_back(make_distribution(pairs));
  }
  return out;
}

}  // namespace

TEST_CASE("make_distribution normalizes and validates") {
  const auto d = make_distribution({{3, 1.0}});
  CHECK(d.is_dirac());
  CHECK(d.support()[0] == 3);
  CHECK(d.probs()[0] == 1.0);

  const auto two = make_distribution({{2, 2.0}, {1, 2.0}});
  REQUIRE(two.size() == 2);
  CHECK(two.support()[0] == 1);
  CHECK(two.probs()[0] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(two.probs()[1] == doctest::Approx(0.5).epsilon(1e-15));

  CHECK_THROWS_AS(make_distribution({{1, 1.0}, {1, 1.0}}), InvalidDistribution);
  CHECK_THROWS_AS(make_distribution({{1, 0.0}, {2, 0.0}}), InvalidDistribution);
  CHECK_THROWS_AS(make_distribution({{1, -0.5}, {2, 1.0}}), InvalidDistribution);
  CHECK_THROWS_AS(make_distribution({{-1, 1.0}}), InvalidDistribution);
}

TEST_CASE("poisson truncation") {
  const auto p0 = poisson_truncated(1.0, 0);
  CHECK(p0.is_dirac());
  CHECK(p0.support()[0] == 0);

  const auto p30 = poisson_truncated(1.0, 30);
  CHECK(near(mean(p30), 1.0, 1e-9));
  CHECK(near(second_moment(p30), 2.0, 1e-8));

  const auto p2 = poisson_truncated(2.0, 1);
  CHECK(near(p2.prob(0), 1.0 / 3.0, 1e-15));
  CHECK(near(p2.prob(1), 2.0 / 3.0, 1e-15));

  CHECK(poisson_truncated(2.0, 10).provenance().tail_mass > 0.0);
  CHECK(poisson_truncated(2.0, 10).provenance().tail_mass < 1e-3);
  CHECK_THROWS_AS(poisson_truncated(0.0, 10), InvalidParameter);
  CHECK_THROWS_AS(poisson_truncated(-1.0, 10), InvalidParameter);
}

TEST_CASE("geometric truncation") {
  const auto g = geometric(0.5, 2);
  CHECK(near(g.prob(1), 2.0 / 3.0, 1e-15));
  CHECK(near(g.prob(2), 1.0 / 3.0, 1e-15));
  CHECK(geometric(0.999, 50).prob(1) > 0.999);
  CHECK(geometric(0.3, 1).is_dirac());
  CHECK(geometric(0.3, 1).support()[0] == 1);
  CHECK(near(geometric(0.4, 10).provenance().tail_mass, std::pow(0.6, 10), 1e-15));
  CHECK_THROWS_AS(geometric(0.0, 10), InvalidParameter);
  CHECK_THROWS_AS(geometric(1.0, 10), InvalidParameter);
}

TEST_CASE("moments and forward degree") {
  CHECK(mean(dirac(3)) == 3.0);
  CHECK(second_moment(dirac(3)) == 9.0);
  const auto half = make_distribution({{1, 0.5}, {2, 0.5}});
  CHECK(near(mean(half), 1.5, 1e-15));
  CHECK(near(second_moment(half), 2.5, 1e-15));

  CHECK(forward_degree_nu(dirac(3)) == 2.0);
  CHECK(forward_degree_nu(dirac(2)) == 1.0);
  CHECK(near(forward_degree_nu(poisson_truncated(2.0, 40)), 2.0, 1e-8));
  CHECK_THROWS_AS(forward_degree_nu(dirac(0)), DegenerateDistribution);
}

TEST_CASE("size biasing") {
  const auto sb = size_biased(dirac(4)).distribution();
  CHECK(sb.is_dirac());
  CHECK(sb.support()[0] == 4);

  const auto half = size_biased(make_distribution({{1, 0.5}, {2, 0.5}})).distribution();
  CHECK(near(half.prob(1), 1.0 / 3.0, 1e-15));
  CHECK(near(half.prob(2), 2.0 / 3.0, 1e-15));

  const auto with_zero = size_biased(make_distribution({{0, 0.5}, {2, 0.25}, {3, 0.25}})).distribution();
  CHECK(with_zero.prob(0) == 0.0);

  for (const auto& d : random_laws(11, 20)) {
    const auto s = size_biased(d).distribution();
    double total = 0.0;
    for (double q : s.probs()) total += q;
    CHECK(near(total, 1.0, 1e-14));
    CHECK(near(mean(s), forward_degree_nu(d) + 1.0, 1e-12));
  }
  CHECK_THROWS_AS(size_biased(dirac(0)), DegenerateDistribution);
}

TEST_CASE("tilting") {
  for (const auto& d : random_laws(5, 10)) {
    const auto t = tilt(d, 0.0);
    REQUIRE(t.size() == d.size());
    for (std::size_t i = 0; i < d.size(); ++i) CHECK(near(t.probs()[i], d.probs()[i], 1e-15));
  }
  CHECK(tilt(dirac(5), 1.7).is_dirac());

  // cosh(beta) = 4: weights 0.5 * 2 and 0.5 * 4.
  const double beta = std::acosh(4.0);
  const auto q = tilt(make_distribution({{1, 0.5}, {2, 0.5}}), beta);
  CHECK(near(q.prob(1), 1.0 / 3.0, 1e-14));
  CHECK(near(q.prob(2), 2.0 / 3.0, 1e-14));

  const auto geo = geometric(0.4, 30);
  CHECK(tilt(geo, 0.5).provenance().family == Family::kGeometric);
  CHECK_THROWS_AS(tilt(geo, -0.1), InvalidParameter);
}

TEST_CASE("tilting raises nu unless D* is constant") {
  for (const auto& d : random_laws(17, 15)) {
    double prev = forward_degree_nu(d);
    for (int i = 1; i <= 15; ++i) {
      const double cur = forward_degree_nu(tilt(d, 0.1 * i));
      CHECK(cur > prev);
      prev = cur;
    }
  }
  for (int i = 1; i <= 15; ++i) CHECK(forward_degree_nu(tilt(dirac(3), 0.1 * i)) == 2.0);
}

TEST_CASE("relative entropy") {
  const auto p = make_distribution({{1, 0.5}, {2, 0.5}});
  CHECK(relative_entropy(p, p) == 0.0);
  CHECK(near(relative_entropy(dirac(1), p), std::log(2.0), 1e-15));
  CHECK(std::isinf(relative_entropy(dirac(3), p)));

  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.01, 1.0);
  for (const auto& base : random_laws(23, 20)) {
    std::vector<std::pair<int, double>> pairs;
    for (int k : base.support()) pairs.emplace_back(k, u(rng));
    CHECK(relative_entropy(make_distribution(pairs), base) >= 0.0);
  }
}

TEST_CASE("exponential moment condition") {
  Provenance geo;
  geo.family = Family::kGeometric;
  geo.p = 0.5;
  CHECK(exp_moment_condition(geo, 1.0));
  CHECK_FALSE(exp_moment_condition(geo, 1.5));
  Provenance poi;
  poi.family = Family::kPoisson;
  poi.lambda = 1.0;
  CHECK(exp_moment_condition(poi, 100.0));
  Provenance dir;
  dir.family = Family::kDirac;
  CHECK(exp_moment_condition(dir, 50.0));
  CHECK(exp_moment_condition(Provenance{}, 50.0));
}

TEST_CASE("family names round-trip") {
  for (auto f : {Family::kExplicit, Family::kDirac, Family::kPoisson, Family::kGeometric, Family::kEmpirical})
    CHECK(family_from_string(family_name(f)) == f);
  CHECK_THROWS_AS(family_from_string("lognormal"), UnsupportedFamily);
}

TEST_CASE("degree sequences and empirical laws") {
  CHECK(empirical_from_sequence(DegreeSequence({3, 3, 3, 3})).is_dirac());

  const auto half = empirical_from_sequence(DegreeSequence({1, 1, 2, 2}));
  CHECK(near(half.prob(1), 0.5, 1e-15));
  CHECK(near(half.prob(2), 0.5, 1e-15));

  const DegreeSequence odd({1, 2, 2});
  CHECK(odd.parity_adjusted());
  CHECK(odd.total_degree() == 6);
  const auto third = empirical_from_sequence(odd);
  for (int k : {1, 2, 3}) CHECK(near(third.prob(k), 1.0 / 3.0, 1e-15));

  CHECK_THROWS_AS(DegreeSequence({}), InvalidParameter);
  CHECK_THROWS_AS(DegreeSequence({0, 2}), InvalidParameter);
}

TEST_CASE("reading degree sequence files") {
  const std::string path = "test_degree_model_seq.txt";
  {
    std::ofstream out(path);
    out << "3 3\n3\t3\n";
  }
  const auto seq = read_degree_sequence(path);
  CHECK(seq.n() == 4);
  CHECK(seq.total_degree() == 12);
  {
    std::ofstream out(path);
    out << "3 x 3\n";
  }
  CHECK_THROWS_AS(read_degree_sequence(path), InvalidParameter);
  std::remove(path.c_str());
  CHECK_THROWS_AS(read_degree_sequence("no_such_file.txt"), InvalidParameter);
}

TEST_CASE("tilted tail mass") {
  const auto geo = geometric(0.5, 20);
  const double ratio = 0.5 * std::sqrt(std::cosh(0.5));
  CHECK(near(tilted_tail_mass(geo, 0.5), std::pow(ratio, 20), 1e-15));
  CHECK(std::isinf(tilted_tail_mass(geo, 2.5)));
  CHECK(tilted_tail_mass(geo, 2.0) < 1.0);
  CHECK(tilted_tail_mass(dirac(3), 1.0) == 0.0);
}
