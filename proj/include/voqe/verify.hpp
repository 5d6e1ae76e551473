// Copyright 2026 The VOQE Authors
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

// Randomized invariant checks behind the `voqe verify` command.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace voqe {

struct VerifyCheck {
  std::string name;
  int trials = 0;
  int failures = 0;
  double worst = 0.0;  // largest violation seen (or the offending value)
  double tol = 0.0;
  bool expect_failure = false;  // negative controls pass when every trial fails

  bool passed() const { return expect_failure ? failures == trials : failures == 0; }
};

std::vector<VerifyCheck> run_invariant_suite(std::uint64_t seed, int trials = 100);

/// Fixed-width pass/fail table, one line per check.
std::string format_verify_table(const std::vector<VerifyCheck>& checks);

}  // namespace voqe
