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

#include <complex>
#include <cstddef>
#include <vector>

#include "stoqcure/pauli.hpp"

namespace stoqcure {

/// Row-major dense matrix.
template <class T>
class Matrix {
   public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    static Matrix square(std::size_t dim) { return Matrix(dim, dim); }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    T &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    T *row(std::size_t r) { return data_.data() + r * cols_; }
    const T *row(std::size_t r) const { return data_.data() + r * cols_; }
    const std::vector<T> &data() const { return data_; }
    std::vector<T> &data() { return data_; }

    bool operator==(const Matrix &) const = default;

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using ExactMatrix = Matrix<GaussRational>;
using ComplexMatrix = Matrix<std::complex<double>>;

struct DenseLimits {
    std::size_t max_qubits = 14;
};

/// Exact dense expansion. Entry (r, r ^ x) of a term c*P is
/// c * (-i)^{#Y} * (-1)^{popcount(r & z)}. Throws TooLarge past the cap.
ExactMatrix to_dense(const Hamiltonian &h, DenseLimits limits = {});
ComplexMatrix to_dense(const RealHamiltonian &h, DenseLimits limits = {});

ComplexMatrix to_complex(const ExactMatrix &m);

ExactMatrix multiply(const ExactMatrix &a, const ExactMatrix &b);
ExactMatrix adjoint(const ExactMatrix &m);
ComplexMatrix multiply(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix adjoint(const ComplexMatrix &m);

/// Trace over one qubit (qubit 0 is the most significant index bit).
ExactMatrix partial_trace(const ExactMatrix &m, std::size_t qubit);
ComplexMatrix partial_trace(const ComplexMatrix &m, std::size_t qubit);

GaussRational trace(const ExactMatrix &m);
std::complex<double> trace(const ComplexMatrix &m);

}  // namespace stoqcure
