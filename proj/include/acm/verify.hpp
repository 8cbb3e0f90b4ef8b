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

// Invariant suite shared by `annealed_cm verify` and the acceptance binary.
// Each check is deterministic (fixed seeds) and reports its worst observed
// deviation in `detail`.

#pragma once

#include <string>
#include <vector>

namespace acm {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

std::vector<CheckResult> degree_model_checks();
std::vector<CheckResult> kernel_checks();
std::vector<CheckResult> deterministic_checks();
std::vector<CheckResult> iid_checks();
std::vector<CheckResult> oracle_checks();

// All of the above, in module order.
std::vector<CheckResult> run_invariant_suite();

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace acm
