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

#include <cstdint>
#include <stdexcept>
#include <string>

namespace acm {

// Errors caused by bad input (mapped to CLI exit code 1).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Errors raised while computing on valid input (CLI exit code 2).
class ComputationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidDistribution : public InputError {
 public:
  using InputError::InputError;
};

class InvalidParameter : public InputError {
 public:
  using InputError::InputError;
};

class DegenerateDistribution : public InputError {
 public:
  using InputError::InputError;
};

class DomainError : public InputError {
 public:
  using InputError::InputError;
};

class UnsupportedFamily : public InputError {
 public:
  using InputError::InputError;
};

class NoRootFound : public ComputationError {
 public:
  using ComputationError::ComputationError;
};

class BudgetExceeded : public ComputationError {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t required)
      : ComputationError(what + " (required " + std::to_string(required) + ")"),
        required_(required) {}

  std::uint64_t required() const noexcept { return required_; }

 private:
  std::uint64_t required_;
};

}  // namespace acm
