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

#include <optional>
#include <vector>

#include "stoqcure/dense.hpp"

namespace stoqcure {

/// Default tolerance for matrices produced on the floating rotation path.
inline constexpr double kFloatTolerance = 1e-9;

enum class Verdict { Stoquastic, NonStoquastic };
enum class CheckMode { PerTermGrouped, WholeMatrix };

/// A violating off-diagonal entry. For grouped checks, row and col index the
/// group's local matrix over the qubits the group touches.
struct Witness {
    std::size_t row = 0;
    std::size_t col = 0;
    GaussRational value;
    std::optional<std::size_t> group;
};

struct StoqReport {
    Verdict verdict = Verdict::Stoquastic;
    std::optional<Witness> witness;
    CheckMode mode = CheckMode::WholeMatrix;

    bool stoquastic() const { return verdict == Verdict::Stoquastic; }
};

/// Stoquastic iff every off-diagonal e has Re(e) <= tol and |Im(e)| <= tol.
/// The witness is the first violation in row-major order. Throws NotSquare.
StoqReport is_stoquastic_dense(const ExactMatrix &m, const Rational &tol = Rational(0));
StoqReport is_stoquastic_dense(const ComplexMatrix &m, double tol = kFloatTolerance);

/// Checks every group of h separately on the qubits it touches. Without
/// recorded groups every term is its own group.
StoqReport is_stoquastic_grouped(const Hamiltonian &h, const Rational &tol = Rational(0), DenseLimits limits = {});
StoqReport is_stoquastic_grouped(const RealHamiltonian &h, double tol = kFloatTolerance, DenseLimits limits = {});

/// Local check of one group (all of h treated as a single local term).
bool part_is_stoquastic(const Hamiltonian &part, const Rational &tol = Rational(0), DenseLimits limits = {});

/// Whole-matrix verdict computed from the Pauli terms without building the
/// dense matrix: terms are bucketed by X mask and each bucket's off-diagonal
/// line (r, r ^ mask) is summed in O(2^n). Gives the same verdict and witness
/// as is_stoquastic_dense(to_dense(h)).
StoqReport is_stoquastic_pauli_sum(const Hamiltonian &h, const Rational &tol = Rational(0),
                                   DenseLimits limits = {20});
/// Floating variant on the SIMD kernels. With want_witness false the scan
/// stops at the first violating bucket and the witness is left empty.
StoqReport is_stoquastic_pauli_sum(const RealHamiltonian &h, double tol = kFloatTolerance,
                                   DenseLimits limits = {24}, bool want_witness = true);

/// Off-diagonal entries as a sorted multiset. Throws NotSquare.
std::vector<GaussRational> off_diagonal_multiset(const ExactMatrix &m);
std::vector<std::complex<double>> off_diagonal_multiset(const ComplexMatrix &m);
/// Diagonal entries as a sorted multiset.
std::vector<GaussRational> diagonal_multiset(const ExactMatrix &m);

}  // namespace stoqcure
