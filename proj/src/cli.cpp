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

#include "acm/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iomanip>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "acm/annealed_iid.hpp"
#include "acm/errors.hpp"
#include "acm/exact_oracle.hpp"
#include "acm/verify.hpp"

namespace acm::cli {

namespace {

using nlohmann::json;

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kTransitionStep = 0.02;

std::string g12(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

// JSON has no infinity; encode it as null.
json number_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  return parts;
}

double parse_double(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw InvalidParameter("cannot parse " + what + " from '" + text + "'");
  }
}

int parse_int(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw InvalidParameter("cannot parse " + what + " from '" + text + "'");
  }
}

std::vector<std::pair<int, double>> parse_pairs(const std::string& text) {
  std::vector<std::pair<int, double>> pairs;
  for (const auto& item : split(text, ',')) {
    const auto kv = split(item, ':');
    if (kv.size() != 2) throw InvalidParameter("pairs must look like 1:0.5,2:0.5");
    pairs.emplace_back(parse_int(kv[0], "degree"), parse_double(kv[1], "weight"));
  }
  return pairs;
}

std::vector<double> parse_ladder(const std::string& text) {
  std::vector<double> ladder;
  for (const auto& item : split(text, ',')) ladder.push_back(parse_double(item, "ladder field"));
  return ladder;
}

Range range_from_json(const json& j) {
  if (j.is_string()) return parse_range(j.get<std::string>());
  if (j.is_array() && j.size() == 3)
    return Range{j[0].get<double>(), j[1].get<double>(), j[2].get<int>()};
  throw InvalidParameter("ranges must be \"a:b:n\" or [a, b, n]");
}

void apply_model_json(const json& m, DistributionSpec& spec) {
  for (const auto& [key, value] : m.items()) {
    if (key == "family")
      spec.family = value.get<std::string>();
    else if (key == "degree")
      spec.degree = value.get<int>();
    else if (key == "lambda")
      spec.lambda = value.get<double>();
    else if (key == "p")
      spec.p = value.get<double>();
    else if (key == "kmax")
      spec.kmax = value.get<int>();
    else if (key == "pairs")
      spec.pairs = value.get<std::vector<std::pair<int, double>>>();
    else
      throw InvalidParameter("unknown model key '" + key + "'");
  }
}

void apply_config_file(const std::string& path, RunConfig& config) {
  std::ifstream in(path);
  if (!in) throw InvalidParameter("cannot open config file " + path);
  json j;
  try {
    in >> j;
    if (!j.is_object()) throw InvalidParameter("config must be a JSON object");
    for (const auto& [key, value] : j.items()) {
      if (key == "model")
        apply_model_json(value, config.model);
      else if (key == "sequence")
        config.sequence_path = value.get<std::string>();
      else if (key == "beta")
        config.beta = value.get<double>();
      else if (key == "B")
        config.B = value.get<double>();
      else if (key == "beta_range")
        config.beta_range = range_from_json(value);
      else if (key == "B_range")
        config.B_range = range_from_json(value);
      else if (key == "mode")
        config.mode = mode_from_string(value.get<std::string>());
      else if (key == "out")
        config.output = value.get<std::string>();
      else if (key == "threshold")
        config.threshold = value.get<double>();
      else if (key == "grid_size")
        config.grid_size = value.get<int>();
      else if (key == "ladder")
        config.ladder = value.get<std::vector<double>>();
      else
        throw InvalidParameter("unknown config key '" + key + "'");
    }
  } catch (const json::exception& e) {
    throw InvalidParameter("bad config file " + path + ": " + e.what());
  }
}

std::string mode_name(Mode mode) { return mode == Mode::kIid ? "iid" : "deterministic"; }

SolverOptions solver_options(const RunConfig& config) {
  SolverOptions opts;
  opts.grid_size = config.grid_size;
  return opts;
}

IidOptions iid_options(const RunConfig& config) {
  IidOptions opts;
  opts.solver = solver_options(config);
  return opts;
}

json model_json(const RunConfig& config, const DegreeDistribution& dist) {
  json m;
  m["family"] = config.sequence_path.empty() ? config.model.family : "empirical";
  if (!config.sequence_path.empty()) m["sequence"] = config.sequence_path;
  m["mean_degree"] = mean(dist);
  m["nu"] = forward_degree_nu(dist);
  m["tail_mass"] = dist.provenance().tail_mass;
  return m;
}

// Runs `body(i)` for i in [0, n) on worker_count() threads.
template <typename Body>
void parallel_for(std::size_t n, Body body) {
  const unsigned workers = std::min<unsigned>(worker_count(), static_cast<unsigned>(std::max<std::size_t>(n, 1)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < workers; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

std::vector<double> default_transition_grid(double beta_bar) {
  const double hi = std::isfinite(beta_bar) ? 1.5 * beta_bar : 2.0;
  const double lo = std::isfinite(beta_bar) ? 0.5 * beta_bar : kTransitionStep;
  std::vector<double> betas;
  for (int i = static_cast<int>(std::ceil(lo / kTransitionStep)); i * kTransitionStep <= hi + 1e-12; ++i)
    betas.push_back(i * kTransitionStep);
  return betas;
}

int run_pressure(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const auto dist = resolve_distribution(config);
  const ModelParams params{*config.beta, config.B.value_or(0.0)};
  json j;
  j["command"] = "pressure";
  j["mode"] = mode_name(config.mode);
  j["model"] = model_json(config, dist);
  j["beta"] = params.beta;
  j["B"] = params.B;
  if (config.mode == Mode::kDeterministic) {
    const auto r = pressure(params, dist, solver_options(config));
    j["pressure"] = r.pressure;
    j["magnetization"] = r.magnetization;
    j["w_star"] = r.solution.w;
    j["n_roots"] = r.n_roots;
    json roots = json::array();
    for (const auto& root : r.all_roots) roots.push_back({{"w", root.w}, {"G", root.G_value}});
    j["roots"] = roots;
  } else {
    const auto r = pressure_iid(params, dist, iid_options(config));
    j["infinite"] = r.infinite;
    j["pressure"] = number_or_null(r.pressure);
    if (r.infinite) {
      err << r.diagnostic << "\n";
    } else {
      j["magnetization"] = r.inner.magnetization;
      j["w_star"] = r.inner.solution.w;
      j["entropy_cost"] = r.entropy_cost;
      j["iterations"] = r.iterations;
      j["converged"] = r.converged;
      json q = json::array();
      for (std::size_t i = 0; i < r.optimizer_q.size(); ++i)
        q.push_back({r.optimizer_q.support()[i], r.optimizer_q.probs()[i]});
      j["optimizer_q"] = q;
    }
    if (!r.diagnostic.empty()) j["diagnostic"] = r.diagnostic;
  }
  out << j.dump(2) << "\n";
  return kExitOk;
}

int run_magnetization(const RunConfig& config, std::ostream& out, std::ostream&) {
  const auto dist = resolve_distribution(config);
  const double beta = *config.beta;
  const double B = config.B.value_or(0.0);
  json j;
  j["command"] = "magnetization";
  j["mode"] = mode_name(config.mode);
  j["model"] = model_json(config, dist);
  j["beta"] = beta;
  j["B"] = B;
  SpontaneousMagnetization sm;
  if (config.mode == Mode::kDeterministic) {
    j["magnetization"] = pressure({beta, B}, dist, solver_options(config)).magnetization;
    sm = spontaneous_magnetization(beta, dist, config.ladder, solver_options(config));
  } else {
    const auto r = pressure_iid({beta, B}, dist, iid_options(config));
    if (r.infinite) throw InvalidParameter(r.diagnostic);
    j["magnetization"] = r.inner.magnetization;
    sm = spontaneous_magnetization_iid(beta, dist, config.ladder, iid_options(config));
  }
  j["spontaneous_magnetization"] = sm.value;
  j["ladder"] = sm.fields;
  j["ladder_magnetizations"] = sm.magnetizations;
  j["monotone"] = sm.monotone;
  out << j.dump(2) << "\n";
  return kExitOk;
}

int run_critical(const RunConfig& config, std::ostream& out, std::ostream&) {
  const auto dist = resolve_distribution(config);
  if (config.mode == Mode::kDeterministic) {
    out << g12(critical_beta(dist)) << "\n";
    return kExitOk;
  }
  const auto bound = beta_bar_c(dist);
  const auto betas = config.beta_range ? config.beta_range->values() : default_transition_grid(bound.beta_bar);
  const auto points = transition_points(dist, Mode::kIid, betas, config.ladder, solver_options(config));
  const auto estimate = estimate_transition(points, config.threshold);
  out << "beta_bar_c " << g12(bound.beta_bar) << "\n";
  out << "transition_estimate " << (estimate ? g12(*estimate) : std::string("NoTransition")) << "\n";
  return kExitOk;
}

int run_scan(const RunConfig& config, std::ostream& out, std::ostream&) {
  out << format_csv(scan(config));
  return kExitOk;
}

int run_verify(std::ostream& out) {
  auto results = run_invariant_suite();
  results.push_back([] {
    CheckResult r{"scan CSV bit-identical across runs", false, {}};
    try {
      RunConfig c;
      c.command = Command::kScan;
      c.model.family = "dirac";
      c.model.degree = 3;
      c.beta_range = Range{0.3, 0.9, 7};
      c.B_range = Range{0.0, 0.2, 3};
      const auto first = format_csv(scan(c));
      const auto second = format_csv(scan(c));
      r.passed = first == second;
      r.detail = std::to_string(first.size()) + " bytes";
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    return r;
  }());
  results.push_back([] {
    CheckResult r{"subcritical range reports no transition", false, {}};
    try {
      const std::vector<double> betas{0.1, 0.2, 0.3, 0.4};
      const auto points = transition_points(dirac(3), Mode::kDeterministic, betas, default_field_ladder());
      r.passed = !estimate_transition(points).has_value();
      r.detail = r.passed ? "NoTransition" : "spurious crossing";
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    return r;
  }());

  std::size_t width = 0;
  for (const auto& r : results) width = std::max(width, r.name.size());
  int failed = 0;
  for (const auto& r : results) {
    failed += r.passed ? 0 : 1;
    out << (r.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(static_cast<int>(width)) << r.name
        << "  " << r.detail << "\n";
  }
  out << (results.size() - failed) << "/" << results.size() << " checks passed\n";
  return failed == 0 ? kExitOk : kExitVerification;
}

int run_oracle(const RunConfig& config, std::ostream& out, std::ostream&) {
  const OracleInstance inst{read_degree_sequence(config.sequence_path)};
  const ModelParams params{*config.beta, config.B.value_or(0.0)};
  json j;
  j["command"] = "oracle";
  j["sequence"] = config.sequence_path;
  j["n"] = inst.n();
  j["total_degree"] = inst.total_degree();
  j["parity_adjusted"] = inst.sequence().parity_adjusted();
  j["beta"] = params.beta;
  j["B"] = params.B;
  const double subset = log_annealed_Z(inst, params);
  j["log_annealed_Z"] = subset;
  j["psi_n"] = subset / inst.n();
  if (inst.total_degree() <= kMaxBruteForceStubs && inst.n() <= kMaxBruteForceVertices) {
    const double brute = brute_force_Z(inst, params);
    j["brute_force_Z"] = brute;
    j["difference"] = std::abs(subset - brute);
  } else {
    j["brute_force_Z"] = nullptr;
    j["brute_force_skipped"] = "needs total degree <= 12 and n <= 10";
  }
  const auto dist = empirical_from_sequence(inst.sequence());
  if (dist.min_degree() >= 1) j["phi_limit"] = pressure(params, dist, solver_options(config)).pressure;
  out << j.dump(2) << "\n";
  return kExitOk;
}

}  // namespace

std::vector<double> Range::values() const {
  std::vector<double> v(count);
  for (int i = 0; i < count; ++i)
    v[i] = i + 1 == count ? stop : start + (stop - start) * static_cast<double>(i) / (count - 1);
  return v;
}

Range parse_range(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() != 3) throw InvalidParameter("range must look like start:stop:count, got '" + text + "'");
  return Range{parse_double(parts[0], "range start"), parse_double(parts[1], "range stop"),
               parse_int(parts[2], "range count")};
}

Command command_from_string(const std::string& name) {
  static const std::pair<const char*, Command> table[] = {
      {"pressure", Command::kPressure}, {"magnetization", Command::kMagnetization},
      {"critical", Command::kCritical}, {"scan", Command::kScan},
      {"verify", Command::kVerify},     {"oracle", Command::kOracle}};
  for (const auto& [n, c] : table)
    if (name == n) return c;
  throw InvalidParameter("unknown command '" + name + "'");
}

std::string command_name(Command command) {
  switch (command) {
    case Command::kPressure: return "pressure";
    case Command::kMagnetization: return "magnetization";
    case Command::kCritical: return "critical";
    case Command::kScan: return "scan";
    case Command::kVerify: return "verify";
    case Command::kOracle: return "oracle";
  }
  return "unknown";
}

Mode mode_from_string(const std::string& name) {
  if (name == "deterministic") return Mode::kDeterministic;
  if (name == "iid") return Mode::kIid;
  throw InvalidParameter("mode must be deterministic or iid, got '" + name + "'");
}

void validate(const RunConfig& c) {
  auto check_range = [](const std::optional<Range>& r, const char* what) {
    if (!r) return;
    if (r->count < 2) throw InvalidParameter(std::string(what) + " range needs count >= 2");
    if (!(r->start < r->stop)) throw InvalidParameter(std::string(what) + " range needs start < stop");
  };
  check_range(c.beta_range, "beta");
  check_range(c.B_range, "B");
  if (c.beta && !(*c.beta >= 0.0 && std::isfinite(*c.beta)))
    throw InvalidParameter("beta must be finite and nonnegative");
  if (c.beta_range && !(c.beta_range->start >= 0.0 && std::isfinite(c.beta_range->stop)))
    throw InvalidParameter("beta range must be finite and nonnegative");
  if (c.B && !std::isfinite(*c.B)) throw InvalidParameter("B must be finite");
  if (!(c.threshold > 0.0 && c.threshold < 1.0)) throw InvalidParameter("threshold must lie in (0, 1)");
  if (c.grid_size < 2) throw InvalidParameter("grid size must be at least 2");
  if (c.ladder.empty()) throw InvalidParameter("field ladder is empty");
  for (std::size_t i = 0; i < c.ladder.size(); ++i)
    if (!(c.ladder[i] > 0.0) || (i > 0 && !(c.ladder[i] < c.ladder[i - 1])))
      throw InvalidParameter("field ladder must be positive and strictly decreasing");
  if (c.command == Command::kVerify) return;

  const bool has_family = !c.model.family.empty();
  const bool has_sequence = !c.sequence_path.empty();
  if (has_family && has_sequence) throw InvalidParameter("give either a distribution or a sequence, not both");
  if (!has_family && !has_sequence) throw InvalidParameter("a distribution (--family) or --sequence is required");
  if (c.mode == Mode::kIid && !has_family)
    throw InvalidParameter("iid mode needs a distribution spec, not a degree sequence");
  if (c.command == Command::kOracle) {
    if (!has_sequence) throw InvalidParameter("oracle needs --sequence");
    if (c.mode == Mode::kIid) throw InvalidParameter("oracle works on deterministic sequences only");
  }
  const bool needs_beta = c.command == Command::kPressure || c.command == Command::kMagnetization ||
                          c.command == Command::kOracle;
  if (needs_beta && !c.beta) throw InvalidParameter(command_name(c.command) + " needs --beta");
  if (c.command == Command::kScan && !c.beta && !c.beta_range)
    throw InvalidParameter("scan needs --beta or --beta-range");
}

DegreeDistribution resolve_distribution(const RunConfig& c) {
  if (!c.sequence_path.empty()) return empirical_from_sequence(read_degree_sequence(c.sequence_path));
  switch (family_from_string(c.model.family)) {
    case Family::kDirac: return dirac(c.model.degree);
    case Family::kPoisson: return poisson_truncated(c.model.lambda, c.model.kmax);
    case Family::kGeometric: return geometric(c.model.p, c.model.kmax);
    case Family::kExplicit: return make_distribution(c.model.pairs);
    case Family::kEmpirical: throw InvalidParameter("the empirical family is read from --sequence");
  }
  throw UnsupportedFamily(c.model.family);
}

unsigned worker_count() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("ANNEALED_CM_THREADS")) {
    try {
      const int cap = std::stoi(env);
      if (cap >= 1) n = std::min(n, static_cast<unsigned>(cap));
    } catch (const std::exception&) {
      // Unparsable values leave the default in place.
    }
  }
  return n;
}

std::vector<ScanRow> scan(const RunConfig& config) {
  const auto dist = resolve_distribution(config);
  const auto betas = config.beta_range ? config.beta_range->values() : std::vector<double>{*config.beta};
  const auto fields = config.B_range ? config.B_range->values() : std::vector<double>{config.B.value_or(0.0)};
  std::vector<ScanRow> rows(betas.size() * fields.size());
  const auto opts = solver_options(config);
  const auto iid = iid_options(config);
  parallel_for(rows.size(), [&](std::size_t idx) {
    ScanRow& row = rows[idx];
    row.beta = betas[idx / fields.size()];
    row.B = fields[idx % fields.size()];
    if (config.mode == Mode::kDeterministic) {
      const auto r = pressure({row.beta, row.B}, dist, opts);
      row.pressure = r.pressure;
      row.magnetization = r.magnetization;
      row.w_star = r.solution.w;
      row.n_roots = r.n_roots;
      row.converged = true;
    } else {
      const auto r = pressure_iid({row.beta, row.B}, dist, iid);
      row.pressure = r.pressure;
      row.converged = r.converged || r.infinite;
      if (!r.infinite) {
        row.magnetization = r.inner.magnetization;
        row.w_star = r.inner.solution.w;
        row.n_roots = r.inner.n_roots;
      } else {
        row.magnetization = std::numeric_limits<double>::quiet_NaN();
        row.w_star = std::numeric_limits<double>::quiet_NaN();
      }
    }
  });
  return rows;
}

std::string format_csv(std::span<const ScanRow> rows) {
  std::string s = "beta,B,pressure,magnetization,w_star,n_roots,converged\n";
  for (const auto& r : rows) {
    s += g12(r.beta) + "," + g12(r.B) + "," + g12(r.pressure) + "," + g12(r.magnetization) + "," +
         g12(r.w_star) + "," + std::to_string(r.n_roots) + "," + (r.converged ? "true" : "false") + "\n";
  }
  return s;
}

std::vector<TransitionPoint> transition_points(const DegreeDistribution& dist, Mode mode,
                                               std::span<const double> betas,
                                               std::span<const double> ladder,
                                               const SolverOptions& opts) {
  std::vector<double> usable;
  for (double beta : betas) {
    // Past the moment condition the i.i.d. pressure is infinite.
    if (mode == Mode::kIid && !exp_moment_condition(dist.provenance(), beta)) break;
    usable.push_back(beta);
  }
  std::vector<TransitionPoint> points(usable.size());
  IidOptions iid;
  iid.solver = opts;
  parallel_for(usable.size(), [&](std::size_t i) {
    points[i].beta = usable[i];
    points[i].magnetization = mode == Mode::kDeterministic
                                  ? spontaneous_magnetization(usable[i], dist, ladder, opts).value
                                  : spontaneous_magnetization_iid(usable[i], dist, ladder, iid).value;
  });
  return points;
}

std::optional<double> estimate_transition(std::span<const TransitionPoint> points, double threshold) {
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!(points[i].magnetization > threshold)) continue;
    if (i == 0) return points[0].beta;
    const auto& a = points[i - 1];
    const auto& b = points[i];
    return a.beta + (threshold - a.magnetization) * (b.beta - a.beta) / (b.magnetization - a.magnetization);
  }
  return std::nullopt;
}

RunConfig parse_args(int argc, const char* const* argv) {
  CLI::App app{"Annealed Ising pressure, magnetization and critical values on configuration models",
               "annealed_cm"};
  app.require_subcommand(1);

  struct Raw {
    std::string family, pairs, sequence, beta_range, B_range, mode, out, config, ladder;
    int degree = 0, kmax = kDefaultKmax, grid_size = 2048;
    double lambda = 0.0, p = 0.0, beta = 0.0, B = 0.0, threshold = kDefaultThreshold;
  } raw;

  const std::pair<const char*, const char*> commands[] = {
      {"pressure", "Annealed pressure at one (beta, B), as JSON"},
      {"magnetization", "Magnetization and its B -> 0 extrapolation, as JSON"},
      {"critical", "Critical inverse temperature (iid: upper bound and scan estimate)"},
      {"scan", "Pressure/magnetization grid over beta and B, as CSV"},
      {"verify", "Run the invariant suite"},
      {"oracle", "Exact finite-n comparison for a degree sequence file"}};
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    if (std::string(name) == "verify") continue;
    sub->add_option("--family", raw.family, "dirac | poisson | geometric | explicit");
    sub->add_option("--degree", raw.degree, "Degree of the dirac family");
    sub->add_option("--lambda", raw.lambda, "Poisson intensity");
    sub->add_option("--p", raw.p, "Geometric success probability");
    sub->add_option("--kmax", raw.kmax, "Truncation degree for infinite families (default 200)");
    sub->add_option("--pairs", raw.pairs, "Explicit law as k:w,k:w,...");
    sub->add_option("--sequence", raw.sequence, "Degree-sequence file (whitespace-separated integers)");
    sub->add_option("--beta", raw.beta, "Inverse temperature");
    sub->add_option("--B", raw.B, "External field (default 0)");
    sub->add_option("--beta-range", raw.beta_range, "Beta grid start:stop:count");
    sub->add_option("--B-range", raw.B_range, "Field grid start:stop:count");
    sub->add_option("--mode", raw.mode, "deterministic (default) | iid");
    sub->add_option("--out", raw.out, "Write output to this file instead of stdout");
    sub->add_option("--config", raw.config, "JSON config file; flags override its values");
    sub->add_option("--threshold", raw.threshold, "Magnetization threshold for the transition estimate (default 0.02)");
    sub->add_option("--grid-size", raw.grid_size, "Root-scan grid size (default 2048)");
    sub->add_option("--ladder", raw.ladder, "Decreasing fields for B -> 0 extrapolation (default 0.1,0.03,0.01,0.003,0.001)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested(app.help());
  } catch (const CLI::CallForAllHelp&) {
    throw HelpRequested(app.help("", CLI::AppFormatMode::All));
  } catch (const CLI::ParseError& e) {
    throw InvalidParameter(e.what());
  }

  const auto* sub = app.get_subcommands().front();
  RunConfig config;
  config.command = command_from_string(sub->get_name());
  auto given = [&](const char* flag) { return sub->count(flag) > 0; };
  if (config.command != Command::kVerify) {
    if (given("--config")) apply_config_file(raw.config, config);
    if (given("--family")) config.model.family = raw.family;
    if (given("--degree")) config.model.degree = raw.degree;
    if (given("--lambda")) config.model.lambda = raw.lambda;
    if (given("--p")) config.model.p = raw.p;
    if (given("--kmax")) config.model.kmax = raw.kmax;
    if (given("--pairs")) config.model.pairs = parse_pairs(raw.pairs);
    if (given("--sequence")) config.sequence_path = raw.sequence;
    if (given("--beta")) config.beta = raw.beta;
    if (given("--B")) config.B = raw.B;
    if (given("--beta-range")) config.beta_range = parse_range(raw.beta_range);
    if (given("--B-range")) config.B_range = parse_range(raw.B_range);
    if (given("--mode")) config.mode = mode_from_string(raw.mode);
    if (given("--out")) config.output = raw.out;
    if (given("--threshold")) config.threshold = raw.threshold;
    if (given("--grid-size")) config.grid_size = raw.grid_size;
    if (given("--ladder")) config.ladder = parse_ladder(raw.ladder);
  }
  validate(config);
  return config;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  validate(config);
  std::ofstream file;
  std::ostream* sink = &out;
  if (!config.output.empty()) {
    file.open(config.output);
    if (!file) throw InvalidParameter("cannot open output file " + config.output);
    sink = &file;
  }
  switch (config.command) {
    case Command::kPressure: return run_pressure(config, *sink, err);
    case Command::kMagnetization: return run_magnetization(config, *sink, err);
    case Command::kCritical: return run_critical(config, *sink, err);
    case Command::kScan: return run_scan(config, *sink, err);
    case Command::kVerify: return run_verify(*sink);
    case Command::kOracle: return run_oracle(config, *sink, err);
  }
  return kExitInvalidConfig;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  try {
    const RunConfig config = parse_args(argc, argv);
    return run(config, out, err);
  } catch (const HelpRequested& help) {
    out << help.what();
    return kExitOk;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidConfig;
  } catch (const ComputationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitComputation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitComputation;
  }
}

}  // namespace acm::cli
