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

#include <atomic>
#include <cstdlib>
#include <string>

#include "stoqcure/error.hpp"
#include "stoqcure/kernels.hpp"

namespace stoqcure::kernels {

#if !defined(STOQCURE_HAVE_AVX2)
const KernelTable *avx2_table() { return nullptr; }
#endif

namespace {

bool cpu_has_avx2() {
#if defined(STOQCURE_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") != 0;
#else
    return false;
#endif
}

Backend initial_backend() {
    const char *env = std::getenv("STOQCURE_SIMD");
    if (env != nullptr && std::string(env) == "scalar") return Backend::Scalar;
    return cpu_has_avx2() ? Backend::Avx2 : Backend::Scalar;
}

std::atomic<Backend> &current() {
    static std::atomic<Backend> backend{initial_backend()};
    return backend;
}

}  // namespace

std::string_view backend_name(Backend b) { return b == Backend::Avx2 ? "avx2" : "scalar"; }

bool avx2_available() { return avx2_table() != nullptr && cpu_has_avx2(); }

Backend active_backend() { return current().load(std::memory_order_relaxed); }

void set_backend(Backend b) {
    if (b == Backend::Avx2 && !avx2_available()) {
        throw Error(ErrorCode::InvalidInput, "AVX2 kernels are not available on this machine");
    }
    current().store(b, std::memory_order_relaxed);
}

const KernelTable &active() {
    if (active_backend() == Backend::Avx2) return *avx2_table();
    return scalar_table();
}

}  // namespace stoqcure::kernels
