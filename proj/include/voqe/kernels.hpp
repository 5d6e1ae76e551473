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

// Inner-loop kernels for amplitude vectors and dense complex matrices.
//
// Every kernel exists as a portable scalar reference and, on x86-64, as an
// AVX2/FMA variant. `active()` picks the variant once from CPUID; setting the
// environment variable VOQE_KERNELS=scalar forces the reference path. The
// unit tests run both tables side by side and require agreement to 1e-12.
//
// Amplitude layout: a gate on the qubit whose basis-index bit has value
// `stride` pairs index i (bit clear) with i + stride (bit set).

#pragma once

#include <cstddef>

#include "voqe/common.hpp"

namespace voqe::kernels {

struct KernelTable {
  const char* name;

  /// In place: [a_i, a_{i+stride}] <- m * [a_i, a_{i+stride}], m row-major 2x2.
  void (*apply_1q)(Complex* amp, std::size_t len, std::size_t stride, const Complex* m);

  /// In place 4x4 row-major `m` on the bit pair (stride_hi > stride_lo); the
  /// local gate index is (bit_hi << 1) | bit_lo.
  void (*apply_2q)(Complex* amp, std::size_t len, std::size_t stride_hi, std::size_t stride_lo,
                   const Complex* m);

  /// Diagonal 2-qubit gate: amplitude *= diag[(bit_hi << 1) | bit_lo].
  void (*apply_diag_2q)(Complex* amp, std::size_t len, std::size_t stride_hi, std::size_t stride_lo,
                        const Complex* diag);

  /// y = A x with A column-major (rows x cols); y must not alias x.
  void (*matvec)(const Complex* a, std::size_t rows, std::size_t cols, const Complex* x, Complex* y);

  /// y = A^dagger x with A column-major (rows x cols); y has `cols` entries.
  void (*adjoint_matvec)(const Complex* a, std::size_t rows, std::size_t cols, const Complex* x,
                         Complex* y);

  /// sum_i conj(x_i) y_i
  Complex (*dot)(const Complex* x, const Complex* y, std::size_t len);

  /// out[2a + b] = sum over pairs of conj(lam[a-member]) * psi[b-member].
  /// Gives <lam| G |psi> = sum_ab G_ab out[2a + b] for any 2x2 G on that qubit.
  void (*pair_correlation_1q)(const Complex* lam, const Complex* psi, std::size_t len,
                              std::size_t stride, Complex* out);
};

const KernelTable& scalar_kernels();

/// AVX2/FMA table, or nullptr when the build or the CPU lacks support.
const KernelTable* avx2_kernels();

/// The table used by the simulator and cost functions.
const KernelTable& active();

}  // namespace voqe::kernels
