// Copyright 2026 The stoqcure Authors
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

// Compiled with -mavx2; only reached after the dispatcher has checked CPUID.

#include <immintrin.h>

#include <bit>
#include <cmath>

#include "stoqcure/kernels.hpp"

namespace stoqcure::kernels {

namespace {

// Parity of each 64-bit lane, left in bit 0.
inline __m256i lane_parity(__m256i v) {
    v = _mm256_xor_si256(v, _mm256_srli_epi64(v, 32));
    v = _mm256_xor_si256(v, _mm256_srli_epi64(v, 16));
    v = _mm256_xor_si256(v, _mm256_srli_epi64(v, 8));
    v = _mm256_xor_si256(v, _mm256_srli_epi64(v, 4));
    v = _mm256_xor_si256(v, _mm256_srli_epi64(v, 2));
    v = _mm256_xor_si256(v, _mm256_srli_epi64(v, 1));
    return _mm256_and_si256(v, _mm256_set1_epi64x(1));
}

void accumulate_parity_signed_avx2(double *out, std::size_t len, std::uint64_t base, std::uint64_t zmask,
                                   double coeff) {
    const __m256d c = _mm256_set1_pd(coeff);
    const __m256i mask = _mm256_set1_epi64x(static_cast<long long>(zmask));
    const __m256i step = _mm256_set1_epi64x(4);
    __m256i idx = _mm256_add_epi64(_mm256_set1_epi64x(static_cast<long long>(base)), _mm256_setr_epi64x(0, 1, 2, 3));
    std::size_t i = 0;
    for (; i + 4 <= len; i += 4) {
        const __m256i parity = lane_parity(_mm256_and_si256(idx, mask));
        const __m256d sign = _mm256_castsi256_pd(_mm256_slli_epi64(parity, 63));
        const __m256d acc = _mm256_loadu_pd(out + i);
        _mm256_storeu_pd(out + i, _mm256_add_pd(acc, _mm256_xor_pd(c, sign)));
        idx = _mm256_add_epi64(idx, step);
    }
    for (; i < len; ++i) {
        const bool odd = std::popcount((base + i) & zmask) & 1;
        out[i] += odd ? -coeff : coeff;
    }
}

std::size_t first_violation_split_avx2(const double *re, const double *im, std::size_t len, double tol) {
    const __m256d t = _mm256_set1_pd(tol);
    const __m256d abs_mask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));
    std::size_t i = 0;
    for (; i + 4 <= len; i += 4) {
        __m256d bad = _mm256_cmp_pd(_mm256_loadu_pd(re + i), t, _CMP_NLE_UQ);
        if (im != nullptr) {
            const __m256d mag = _mm256_and_pd(_mm256_loadu_pd(im + i), abs_mask);
            bad = _mm256_or_pd(bad, _mm256_cmp_pd(mag, t, _CMP_NLE_UQ));
        }
        const int bits = _mm256_movemask_pd(bad);
        if (bits != 0) return i + static_cast<std::size_t>(std::countr_zero(static_cast<unsigned>(bits)));
    }
    for (; i < len; ++i) {
        if (!(re[i] <= tol)) return i;
        if (im != nullptr && !(std::abs(im[i]) <= tol)) return i;
    }
    return len;
}

std::size_t first_violation_interleaved_avx2(const double *data, std::size_t len, double tol) {
    const __m256d t = _mm256_set1_pd(tol);
    // Clear the sign bit of the imaginary lanes only.
    const __m256d imag_abs = _mm256_castsi256_pd(
        _mm256_setr_epi64x(-1LL, 0x7fffffffffffffffLL, -1LL, 0x7fffffffffffffffLL));
    std::size_t i = 0;
    for (; i + 2 <= len; i += 2) {
        const __m256d v = _mm256_and_pd(_mm256_loadu_pd(data + 2 * i), imag_abs);
        const int bits = _mm256_movemask_pd(_mm256_cmp_pd(v, t, _CMP_NLE_UQ));
        if (bits != 0) return i + static_cast<std::size_t>(std::countr_zero(static_cast<unsigned>(bits))) / 2;
    }
    for (; i < len; ++i) {
        if (!(data[2 * i] <= tol) || !(std::abs(data[2 * i + 1]) <= tol)) return i;
    }
    return len;
}

}  // namespace

const KernelTable *avx2_table() {
    static const KernelTable table{
        accumulate_parity_signed_avx2,
        first_violation_split_avx2,
        first_violation_interleaved_avx2,
    };
    return &table;
}

}  // namespace stoqcure::kernels
