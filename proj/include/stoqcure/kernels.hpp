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

#pragma once

// Inner loops of the floating-point stoquasticity scans. Each kernel has a
// scalar reference implementation and, on x86-64, an AVX2 variant. The
// variant is picked once at startup from CPUID; setting the environment
// variable STOQCURE_SIMD=scalar forces the reference path.

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace stoqcure::kernels {

enum class Backend { Scalar, Avx2 };

std::string_view backend_name(Backend b);

struct KernelTable {
    /// out[i] += coeff * (-1)^popcount((base + i) & zmask) for i < len.
    void (*accumulate_parity_signed)(double *out, std::size_t len, std::uint64_t base, std::uint64_t zmask,
                                     double coeff);
    /// First i with !(re[i] <= tol) or !(|im[i]| <= tol); len if none.
    /// im may be null (treated as all zeros). NaN counts as a violation.
    std::size_t (*first_violation_split)(const double *re, const double *im, std::size_t len, double tol);
    /// Same test over interleaved (re, im) pairs; len counts complex entries.
    std::size_t (*first_violation_interleaved)(const double *data, std::size_t len, double tol);
};

const KernelTable &scalar_table();
/// Null when the AVX2 variant was not compiled in.
const KernelTable *avx2_table();

bool avx2_available();
Backend active_backend();
/// Throws Error(InvalidInput) when the requested backend is not available.
void set_backend(Backend b);
const KernelTable &active();

inline void accumulate_parity_signed(double *out, std::size_t len, std::uint64_t base, std::uint64_t zmask,
                                     double coeff) {
    active().accumulate_parity_signed(out, len, base, zmask, coeff);
}
inline std::size_t first_violation_split(const double *re, const double *im, std::size_t len, double tol) {
    return active().first_violation_split(re, im, len, tol);
}
inline std::size_t first_violation_interleaved(const double *data, std::size_t len, double tol) {
    return active().first_violation_interleaved(data, len, tol);
}

/// RAII override of the active backend, for tests and benchmarks.
class ScopedBackend {
   public:
    explicit ScopedBackend(Backend b) : previous_(active_backend()) { set_backend(b); }
    ~ScopedBackend() { set_backend(previous_); }
    ScopedBackend(const ScopedBackend &) = delete;
    ScopedBackend &operator=(const ScopedBackend &) = delete;

   private:
    Backend previous_;
};

}  // namespace stoqcure::kernels
