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

#include "kernels/scalar_impl.hpp"

namespace voqe::kernels {

namespace scalar {

void apply_1q(Complex* amp, std::size_t len, std::size_t stride, const Complex* m) {
  const Complex m00 = m[0], m01 = m[1], m10 = m[2], m11 = m[3];
  for (std::size_t base = 0; base < len; base += 2 * stride) {
    for (std::size_t i = base; i < base + stride; ++i) {
      const Complex a0 = amp[i];
      const Complex a1 = amp[i + stride];
      amp[i] = m00 * a0 + m01 * a1;
      amp[i + stride] = m10 * a0 + m11 * a1;
    }
  }
}

void apply_2q(Complex* amp, std::size_t len, std::size_t stride_hi, std::size_t stride_lo,
              const Complex* m) {
  for (std::size_t k = 0; k < len / 4; ++k) {
    const std::size_t i = insert_zero_bits(k, stride_lo, stride_hi);
    const std::size_t idx[4] = {i, i + stride_lo, i + stride_hi, i + stride_hi + stride_lo};
    Complex in[4];
    for (int r = 0; r < 4; ++r) in[r] = amp[idx[r]];
    for (int r = 0; r < 4; ++r) {
      amp[idx[r]] = m[4 * r] * in[0] + m[4 * r + 1] * in[1] + m[4 * r + 2] * in[2] + m[4 * r + 3] * in[3];
    }
  }
}

void apply_diag_2q(Complex* amp, std::size_t len, std::size_t stride_hi, std::size_t stride_lo,
                   const Complex* diag) {
  for (std::size_t i = 0; i < len; ++i) {
    const std::size_t local = ((i & stride_hi) ? 2u : 0u) | ((i & stride_lo) ? 1u : 0u);
    amp[i] *= diag[local];
  }
}

void matvec(const Complex* a, std::size_t rows, std::size_t cols, const Complex* x, Complex* y) {
  for (std::size_t i = 0; i < rows; ++i) y[i] = 0.0;
  for (std::size_t j = 0; j < cols; ++j) {
    const Complex xj = x[j];
    const Complex* col = a + j * rows;
    for (std::size_t i = 0; i < rows; ++i) y[i] += col[i] * xj;
  }
}

void adjoint_matvec(const Complex* a, std::size_t rows, std::size_t cols, const Complex* x, Complex* y) {
  for (std::size_t j = 0; j < cols; ++j) y[j] = dot(a + j * rows, x, rows);
}

Complex dot(const Complex* x, const Complex* y, std::size_t len) {
  Complex acc = 0.0;
  for (std::size_t i = 0; i < len; ++i) acc += std::conj(x[i]) * y[i];
  return acc;
}

void pair_correlation_1q(const Complex* lam, const Complex* psi, std::size_t len, std::size_t stride,
                         Complex* out) {
  Complex r00 = 0.0, r01 = 0.0, r10 = 0.0, r11 = 0.0;
  for (std::size_t base = 0; base < len; base += 2 * stride) {
    for (std::size_t i = base; i < base + stride; ++i) {
      const Complex l0 = std::conj(lam[i]);
      const Complex l1 = std::conj(lam[i + stride]);
      const Complex p0 = psi[i];
      const Complex p1 = psi[i + stride];
      r00 += l0 * p0;
      r01 += l0 * p1;
      r10 += l1 * p0;
      r11 += l1 * p1;
    }
  }
  out[0] = r00;
  out[1] = r01;
  out[2] = r10;
  out[3] = r11;
}

}  // namespace scalar

const KernelTable& scalar_kernels() {
  static const KernelTable table{
      "scalar",           scalar::apply_1q, scalar::apply_2q, scalar::apply_diag_2q, scalar::matvec,
      scalar::adjoint_matvec, scalar::dot,  scalar::pair_correlation_1q,
  };
  return table;
}

}  // namespace voqe::kernels
