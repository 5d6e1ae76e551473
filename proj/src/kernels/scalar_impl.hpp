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

// Private to the kernel translation units: the scalar entry points are reused
// by the SIMD variants for shapes they do not vectorize.

#pragma once

#include "voqe/kernels.hpp"

namespace voqe::kernels {

/// Spreads the bits of k so that the bit positions of `stride_a` and
/// `stride_b` (distinct powers of two) are zero.
static inline std::size_t insert_zero_bits(std::size_t k, std::size_t stride_a, std::size_t stride_b) {
  const std::size_t lo = stride_a < stride_b ? stride_a : stride_b;
  const std::size_t hi = stride_a < stride_b ? stride_b : stride_a;
  std::size_t i = ((k & ~(lo - 1)) << 1) | (k & (lo - 1));
  i = ((i & ~(hi - 1)) << 1) | (i & (hi - 1));
  return i;
}

namespace scalar {

void apply_1q(Complex* amp, std::size_t len, std::size_t stride, const Complex* m);
void apply_2q(Complex* amp, std::size_t len, std::size_t stride_hi, std::size_t stride_lo,
              const Complex* m);
void apply_diag_2q(Complex* amp, std::size_t len, std::size_t stride_hi, std::size_t stride_lo,
                   const Complex* diag);
void matvec(const Complex* a, std::size_t rows, std::size_t cols, const Complex* x, Complex* y);
void adjoint_matvec(const Complex* a, std::size_t rows, std::size_t cols, const Complex* x, Complex* y);
Complex dot(const Complex* x, const Complex* y, std::size_t len);
void pair_correlation_1q(const Complex* lam, const Complex* psi, std::size_t len, std::size_t stride,
                         Complex* out);

}  // namespace scalar

}  // namespace voqe::kernels
