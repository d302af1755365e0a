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

#include <bit>
#include <cmath>

#include "stoqcure/kernels.hpp"

namespace stoqcure::kernels {

namespace {

void accumulate_parity_signed_scalar(double *out, std::size_t len, std::uint64_t base, std::uint64_t zmask,
                                     double coeff) {
    for (std::size_t i = 0; i < len; ++i) {
        const bool odd = std::popcount((base + i) & zmask) & 1;
        out[i] += odd ? -coeff : coeff;
    }
}

std::size_t first_violation_split_scalar(const double *re, const double *im, std::size_t len, double tol) {
    for (std::size_t i = 0; i < len; ++i) {
        if (!(re[i] <= tol)) return i;
        if (im != nullptr && !(std::abs(im[i]) <= tol)) return i;
    }
    return len;
}

std::size_t first_violation_interleaved_scalar(const double *data, std::size_t len, double tol) {
    for (std::size_t i = 0; i < len; ++i) {
        if (!(data[2 * i] <= tol) || !(std::abs(data[2 * i + 1]) <= tol)) return i;
    }
    return len;
}

}  // namespace

const KernelTable &scalar_table() {
    static const KernelTable table{
        accumulate_parity_signed_scalar,
        first_violation_split_scalar,
        first_violation_interleaved_scalar,
    };
    return table;
}

}  // namespace stoqcure::kernels
