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

#pragma once

#include "voqe/superop.hpp"

namespace voqe {

/// Open-boundary XXZ chain driven at its ends:
///   H = sum_{i<n-1} delta Z_i Z_{i+1} + 2 s+_i s-_{i+1} + 2 s-_i s+_{i+1}
/// with jumps sigma^+ on site 0 and sigma^- on site n-1, both at rate epsilon.
/// Sites are 0-based here; site 0 is "site 1" of the usual chain notation.
LindbladModel driven_xxz(int n, double delta, double epsilon);

/// Periodic Ising chain in an imaginary transverse field:
///   H_nh = -1/2 sum_i (Z_i + lambda X_i X_{i+1} + i kappa X_i),  site n == site 0,
/// split as h = -1/2 sum (Z_i + lambda X_i X_{i+1}) and gamma = (kappa/2) sum X_i.
/// For n = 2 the wraparound bond (1,0) duplicates bond (0,1), so lambda counts twice.
NhhModel imaginary_ising(int n, double lambda, double kappa);

/// Single qubit decaying to |0> at `rate` (H = 0, F = |0><1|).
LindbladModel amplitude_damping(double rate = 1.0);

/// Single qubit with sigma^- and sigma^+ at equal rates; steady state I/2.
LindbladModel balanced_pumping(double rate = 1.0);

}  // namespace voqe
