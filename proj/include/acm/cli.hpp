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

// Command-line front end. Parsing (flags and an optional JSON config, flags
// winning) produces a RunConfig; run() dispatches on the command and maps
// errors to exit codes.

#pragma once

#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "acm/annealed_deterministic.hpp"
#include "acm/degree_model.hpp"

namespace acm::cli {

enum class Command { kPressure, kMagnetization, kCritical, kScan, kVerify, kOracle };
enum class Mode { kDeterministic, kIid };

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidConfig = 1;
inline constexpr int kExitComputation = 2;
inline constexpr int kExitVerification = 3;

inline constexpr double kDefaultThreshold = 0.02;

struct Range {
  double start = 0.0;
  double stop = 0.0;
  int count = 0;

  std::vector<double> values() const;
};

// Parses "a:b:n".
Range parse_range(const std::string& text);

struct DistributionSpec {
  std::string family;  // empty when a sequence file is used instead
  int degree = 0;
  double lambda = 0.0;
  double p = 0.0;
  int kmax = kDefaultKmax;
  std::vector<std::pair<int, double>> pairs;
};

struct RunConfig {
  Command command = Command::kPressure;
  DistributionSpec model;
  std::string sequence_path;
  std::optional<double> beta;
  std::optional<Range> beta_range;
  std::optional<double> B;
  std::optional<Range> B_range;
  Mode mode = Mode::kDeterministic;
  std::string output;  // empty means stdout
  double threshold = kDefaultThreshold;
  int grid_size = 2048;
  std::vector<double> ladder = default_field_ladder();
};

// One grid point of a scan.
struct ScanRow {
  double beta = 0.0;
  double B = 0.0;
  double pressure = 0.0;
  double magnetization = 0.0;
  double w_star = 0.0;
  int n_roots = 0;
  bool converged = true;
};

// Extrapolated spontaneous magnetization at one beta.
struct TransitionPoint {
  double beta = 0.0;
  double magnetization = 0.0;
};

Command command_from_string(const std::string& name);
std::string command_name(Command command);
Mode mode_from_string(const std::string& name);

// Throws InvalidParameter on a config that violates the RunConfig rules.
void validate(const RunConfig& config);

// Builds the degree law named by the config (family parameters or sequence file).
DegreeDistribution resolve_distribution(const RunConfig& config);

// Number of worker threads: hardware concurrency capped by ANNEALED_CM_THREADS.
unsigned worker_count();

// Rows in beta-outer, B-inner order, computed concurrently.
std::vector<ScanRow> scan(const RunConfig& config);
std::string format_csv(std::span<const ScanRow> rows);

std::vector<TransitionPoint> transition_points(const DegreeDistribution& dist, Mode mode,
                                               std::span<const double> betas,
                                               std::span<const double> ladder,
                                               const SolverOptions& opts = {});

// First beta where the magnetization exceeds `threshold`, linearly
// interpolated between the bracketing points; nullopt when none does.
std::optional<double> estimate_transition(std::span<const TransitionPoint> points,
                                          double threshold = kDefaultThreshold);

// Thrown by parse_args for --help; carries the rendered help text.
class HelpRequested : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parses argv. Throws InputError on invalid flags or config files.
RunConfig parse_args(int argc, const char* const* argv);

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// parse_args + run with exit-code mapping; `--help` exits 0.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace acm::cli
