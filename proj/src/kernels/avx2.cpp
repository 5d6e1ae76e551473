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

// AVX2 + FMA kernels. This file is compiled with -mavx2 -mfma and must only be
// entered after the dispatcher has confirmed CPU support.
//
// A __m256d holds two complex doubles laid out [re0, im0, re1, im1], which is
// exactly the memory layout of std::complex<double>[2].

#include <immintrin.h>

#include "kernels/scalar_impl.hpp"

namespace voqe::kernels {

namespace {

inline __m256d load2(const Complex* p) { return _mm256_loadu_pd(reinterpret_cast<const double*>(p)); }
inline void store2(Complex* p, __m256d v) { _mm256_storeu_pd(reinterpret_cast<double*>(p), v); }

/// Broadcast coefficient in split form for repeated multiplication.
struct Coef {
  __m256d re;
  __m256d im;
  explicit Coef(Complex c) : re(_mm256_set1_pd(c.real())), im(_mm256_set1_pd(c.imag())) {}
};

/// a * c for both complex lanes of a.
inline __m256d cmul(__m256d a, const Coef& c) {
  const __m256d a_swapped = _mm256_permute_pd(a, 0x5);  // [im0, re0, im1, re1]
  return _mm256_fmaddsub_pd(a, c.re, _mm256_mul_pd(a_swapped, c.im));
}

/// acc + a * c
inline __m256d cfma(__m256d acc, __m256d a, const Coef& c) { return _mm256_add_pd(acc, cmul(a, c)); }

/// Lane-wise a * b for two vectors of complex numbers.
inline __m256d cmul_vv(__m256d a, __m256d b) {
  const __m256d b_re = _mm256_movedup_pd(b);
  const __m256d b_im = _mm256_permute_pd(b, 0xF);
  const __m256d a_swapped = _mm256_permute_pd(a, 0x5);
  return _mm256_fmaddsub_pd(a, b_re, _mm256_mul_pd(a_swapped, b_im));
}

/// Accumulates conj(x) * y in two partial sums; see finish_conj_dot.
struct ConjDotAcc {
  __m256d same = _mm256_setzero_pd();   // x.re*y.re, x.im*y.im
  __m256d cross = _mm256_setzero_pd();  // x.re*y.im, x.im*y.re
  void add(__m256d x, __m256d y) {
    same = _mm256_fmadd_pd(x, y, same);
    cross = _mm256_fmadd_pd(x, _mm256_permute_pd(y, 0x5), cross);
  }
  Complex finish() const {
    alignas(32) double s[4];
    alignas(32) double c[4];
    _mm256_store_pd(s, same);
    _mm256_store_pd(c, cross);
    return {s[0] + s[1] + s[2] + s[3], (c[0] - c[1]) + (c[2] - c[3])};
  }
};

void apply_1q(Complex* amp, std::size_t len, std::size_t stride, const Complex* m) {
  if (stride == 1) {
    // Pair members are adjacent: v = [a0, a1], swapped = [a1, a0].
    const __m256d diag = _mm256_setr_pd(m[0].real(), m[0].imag(), m[3].real(), m[3].imag());
    const __m256d off = _mm256_setr_pd(m[1].real(), m[1].imag(), m[2].real(), m[2].imag());
    for (std::size_t i = 0; i < len; i += 2) {
      const __m256d v = load2(amp + i);
      const __m256d swapped = _mm256_permute2f128_pd(v, v, 0x01);
      store2(amp + i, _mm256_add_pd(cmul_vv(v, diag), cmul_vv(swapped, off)));
    }
    return;
  }
  const Coef m00(m[0]), m01(m[1]), m10(m[2]), m11(m[3]);
  for (std::size_t base = 0; base < len; base += 2 * stride) {
    for (std::size_t i = base; i < base + stride; i += 2) {
      const __m256d a0 = load2(amp + i);
      const __m256d a1 = load2(amp + i + stride);
      store2(amp + i, cfma(cmul(a0, m00), a1, m01));
      store2(amp + i + stride, cfma(cmul(a0, m10), a1, m11));
    }
  }
}

void apply_2q(Complex* amp, std::size_t len, std::size_t stride_hi, std::size_t stride_lo,
              const Complex* m) {
  if (stride_lo == 1 || stride_hi == 1) {
    scalar::apply_2q(amp, len, stride_hi, stride_lo, m);
    return;
  }
  Coef c[16] = {Coef(m[0]),  Coef(m[1]),  Coef(m[2]),  Coef(m[3]),  Coef(m[4]),  Coef(m[5]),
                Coef(m[6]),  Coef(m[7]),  Coef(m[8]),  Coef(m[9]),  Coef(m[10]), Coef(m[11]),
                Coef(m[12]), Coef(m[13]), Coef(m[14]), Coef(m[15])};
  // Both strides >= 2, so k and k+1 map to adjacent indices i and i+1.
  for (std::size_t k = 0; k < len / 4; k += 2) {
    const std::size_t i = insert_zero_bits(k, stride_lo, stride_hi);
    Complex* p[4] = {amp + i, amp + i + stride_lo, amp + i + stride_hi, amp + i + stride_hi + stride_lo};
    const __m256d in[4] = {load2(p[0]), load2(p[1]), load2(p[2]), load2(p[3])};
    for (int r = 0; r < 4; ++r) {
      __m256d acc = cmul(in[0], c[4 * r]);
      acc = cfma(acc, in[1], c[4 * r + 1]);
      acc = cfma(acc, in[2], c[4 * r + 2]);
      acc = cfma(acc, in[3], c[4 * r + 3]);
      store2(p[r], acc);
    }
  }
}

void apply_diag_2q(Complex* amp, std::size_t len, std::size_t stride_hi, std::size_t stride_lo,
                   const Complex* diag) {
  if (stride_lo == 1 || stride_hi == 1) {
    scalar::apply_diag_2q(amp, len, stride_hi, stride_lo, diag);
    return;
  }
  const Coef d[4] = {Coef(diag[0]), Coef(diag[1]), Coef(diag[2]), Coef(diag[3])};
  for (std::size_t i = 0; i < len; i += 2) {
    const std::size_t local = ((i & stride_hi) ? 2u : 0u) | ((i & stride_lo) ? 1u : 0u);
    store2(amp + i, cmul(load2(amp + i), d[local]));
  }
}

void matvec(const Complex* a, std::size_t rows, std::size_t cols, const Complex* x, Complex* y) {
  if (rows % 2 != 0) {
    scalar::matvec(a, rows, cols, x, y);
    return;
  }
  for (std::size_t i = 0; i < rows; ++i) y[i] = 0.0;
  std::size_t j = 0;
  // Four columns per sweep over y keeps the y traffic at a quarter.
  for (; j + 4 <= cols; j += 4) {
    const Coef x0(x[j]), x1(x[j + 1]), x2(x[j + 2]), x3(x[j + 3]);
    const Complex* c0 = a + j * rows;
    const Complex* c1 = c0 + rows;
    const Complex* c2 = c1 + rows;
    const Complex* c3 = c2 + rows;
    for (std::size_t i = 0; i < rows; i += 2) {
      __m256d acc = load2(y + i);
      acc = cfma(acc, load2(c0 + i), x0);
      acc = cfma(acc, load2(c1 + i), x1);
      acc = cfma(acc, load2(c2 + i), x2);
      acc = cfma(acc, load2(c3 + i), x3);
      store2(y + i, acc);
    }
  }
  for (; j < cols; ++j) {
    const Coef xj(x[j]);
    const Complex* col = a + j * rows;
    for (std::size_t i = 0; i < rows; i += 2) store2(y + i, cfma(load2(y + i), load2(col + i), xj));
  }
}

Complex dot(const Complex* x, const Complex* y, std::size_t len) {
  ConjDotAcc acc;
  std::size_t i = 0;
  for (; i + 2 <= len; i += 2) acc.add(load2(x + i), load2(y + i));
  Complex out = acc.finish();
  for (; i < len; ++i) out += std::conj(x[i]) * y[i];
  return out;
}

void adjoint_matvec(const Complex* a, std::size_t rows, std::size_t cols, const Complex* x, Complex* y) {
  for (std::size_t j = 0; j < cols; ++j) y[j] = dot(a + j * rows, x, rows);
}

void pair_correlation_1q(const Complex* lam, const Complex* psi, std::size_t len, std::size_t stride,
                         Complex* out) {
  if (stride == 1) {
    scalar::pair_correlation_1q(lam, psi, len, stride, out);
    return;
  }
  ConjDotAcc r00, r01, r10, r11;
  for (std::size_t base = 0; base < len; base += 2 * stride) {
    for (std::size_t i = base; i < base + stride; i += 2) {
      const __m256d l0 = load2(lam + i);
      const __m256d l1 = load2(lam + i + stride);
      const __m256d p0 = load2(psi + i);
      const __m256d p1 = load2(psi + i + stride);
      r00.add(l0, p0);
      r01.add(l0, p1);
      r10.add(l1, p0);
      r11.add(l1, p1);
    }
  }
  out[0] = r00.finish();
  out[1] = r01.finish();
  out[2] = r10.finish();
  out[3] = r11.finish();
}

}  // namespace

const KernelTable& avx2_table() {
  static const KernelTable table{
      "avx2", apply_1q, apply_2q, apply_diag_2q, matvec, adjoint_matvec, dot, pair_correlation_1q,
  };
  return table;
}

}  // namespace voqe::kernels
