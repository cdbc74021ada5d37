// Copyright 2026 The icoheat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ICOHEAT_CLI_HPP
#define ICOHEAT_CLI_HPP

#include <cstdint>
#include <ostream>
#include <span>
#include <string>

namespace icoheat {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

struct SuiteResult {
  std::string name;
  double max_deviation = 0.0;
  std::size_t trials = 0;
  bool passed = false;
};

/// Randomized cross-checks behind `verify`.
SuiteResult verify_unfolded_equivalence(std::size_t trials, std::uint64_t seed, double tol);
SuiteResult verify_cptp(std::size_t trials, std::uint64_t seed, double tol);
SuiteResult verify_closed_form(std::size_t trials, std::uint64_t seed, double tol);
SuiteResult verify_coherent_sign(std::size_t trials, std::uint64_t seed, double tol);

/// Checks behind `photonic-check`.
SuiteResult verify_rz_decomposition(std::size_t trials, std::uint64_t seed, double tol);
SuiteResult verify_branch_reconstruction(std::size_t trials, std::uint64_t seed, double tol);
SuiteResult verify_kraus_table(std::size_t trials, std::uint64_t seed, double tol);
SuiteResult verify_state_preparation(std::size_t trials, std::uint64_t seed, double tol);

/// Runs one command line. args excludes the program name.
int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace icoheat

#endif  // ICOHEAT_CLI_HPP
