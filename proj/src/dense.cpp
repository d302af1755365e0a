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

#include "stoqcure/dense.hpp"

#include <bit>

#include "stoqcure/error.hpp"

namespace stoqcure {

namespace {

void check_cap(std::size_t n, DenseLimits limits) {
    if (n > limits.max_qubits || n >= 63) {
        throw Error(ErrorCode::TooLarge, "dense expansion of " + std::to_string(n) + " qubits exceeds the cap of " +
                                             std::to_string(limits.max_qubits));
    }
}

std::complex<double> minus_i_pow(std::size_t k) {
    switch (k % 4) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, -1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, 1.0};
    }
}

template <class T>
Matrix<T> partial_trace_impl(const Matrix<T> &m, std::size_t qubit) {
    if (!m.is_square()) throw Error(ErrorCode::NotSquare, "partial trace of a non-square matrix");
    const std::size_t dim = m.rows();
    if (dim < 2 || !std::has_single_bit(dim)) throw Error(ErrorCode::InvalidInput, "dimension is not 2^n");
    const std::size_t n = static_cast<std::size_t>(std::countr_zero(dim));
    if (qubit >= n) throw Error(ErrorCode::InvalidInput, "qubit out of range");
    const std::size_t bit = std::size_t{1} << (n - 1 - qubit);
    const std::size_t low = bit - 1;
    auto squeeze = [&](std::size_t r) { return ((r >> 1) & ~low) | (r & low); };
    Matrix<T> out = Matrix<T>::square(dim / 2);
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            if ((r & bit) != (c & bit)) continue;
            out(squeeze(r), squeeze(c)) += m(r, c);
        }
    }
    return out;
}

template <class T>
Matrix<T> multiply_impl(const Matrix<T> &a, const Matrix<T> &b) {
    if (a.cols() != b.rows()) throw Error(ErrorCode::InvalidInput, "matrix shapes do not match");
    Matrix<T> out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const T &aik = a(i, k);
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
        }
    }
    return out;
}

}  // namespace

ExactMatrix to_dense(const Hamiltonian &h, DenseLimits limits) {
    const std::size_t n = h.num_qubits();
    check_cap(n, limits);
    const std::size_t dim = std::size_t{1} << n;
    ExactMatrix m = ExactMatrix::square(dim);
    for (const auto &t : h.terms()) {
        const std::uint64_t x = t.paulis.x_mask();
        const std::uint64_t z = t.paulis.z_mask();
        const GaussRational base = times_minus_i_pow(t.coeff, static_cast<unsigned>(t.paulis.count('Y')));
        const GaussRational negated = -base;
        for (std::size_t r = 0; r < dim; ++r) {
            const bool odd = std::popcount(static_cast<std::uint64_t>(r) & z) & 1;
            m(r, r ^ x) += odd ? negated : base;
        }
    }
    return m;
}

ComplexMatrix to_dense(const RealHamiltonian &h, DenseLimits limits) {
    const std::size_t n = h.num_qubits();
    check_cap(n, limits);
    const std::size_t dim = std::size_t{1} << n;
    ComplexMatrix m = ComplexMatrix::square(dim);
    for (const auto &t : h.terms()) {
        const std::uint64_t x = t.paulis.x_mask();
        const std::uint64_t z = t.paulis.z_mask();
        const std::complex<double> base = t.coeff * minus_i_pow(t.paulis.count('Y'));
        for (std::size_t r = 0; r < dim; ++r) {
            const bool odd = std::popcount(static_cast<std::uint64_t>(r) & z) & 1;
            m(r, r ^ x) += odd ? -base : base;
        }
    }
    return m;
}

ComplexMatrix to_complex(const ExactMatrix &m) {
    ComplexMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.data().size(); ++i) out.data()[i] = m.data()[i].to_complex();
    return out;
}

ExactMatrix multiply(const ExactMatrix &a, const ExactMatrix &b) { return multiply_impl(a, b); }
ComplexMatrix multiply(const ComplexMatrix &a, const ComplexMatrix &b) { return multiply_impl(a, b); }

ExactMatrix adjoint(const ExactMatrix &m) {
    ExactMatrix out(m.cols(), m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) out(c, r) = m(r, c).conj();
    }
    return out;
}

ComplexMatrix adjoint(const ComplexMatrix &m) {
    ComplexMatrix out(m.cols(), m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) out(c, r) = std::conj(m(r, c));
    }
    return out;
}

ExactMatrix partial_trace(const ExactMatrix &m, std::size_t qubit) { return partial_trace_impl(m, qubit); }
ComplexMatrix partial_trace(const ComplexMatrix &m, std::size_t qubit) { return partial_trace_impl(m, qubit); }

GaussRational trace(const ExactMatrix &m) {
    if (!m.is_square()) throw Error(ErrorCode::NotSquare, "trace of a non-square matrix");
    GaussRational t;
    for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
    return t;
}

std::complex<double> trace(const ComplexMatrix &m) {
    if (!m.is_square()) throw Error(ErrorCode::NotSquare, "trace of a non-square matrix");
    std::complex<double> t;
    for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
    return t;
}

}  // namespace stoqcure
