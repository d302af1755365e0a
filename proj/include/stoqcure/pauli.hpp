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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "stoqcure/rational.hpp"

namespace stoqcure {

/// A tensor product of single-qubit Paulis written as a word over {I, X, Y, Z}.
/// Qubit 0 is the leftmost letter and the most significant bit of a dense
/// basis index, i.e. the dense matrix is kron(P_0, P_1, ..., P_{n-1}).
///
/// Letters carry no hidden phase: "Y" means the matrix [[0,-i],[i,0]].
class PauliString {
   public:
    PauliString() = default;
    explicit PauliString(std::string letters);

    static PauliString identity(std::size_t n) { return PauliString(std::string(n, 'I')); }

    std::size_t size() const { return letters_.size(); }
    char operator[](std::size_t qubit) const { return letters_[qubit]; }
    void set(std::size_t qubit, char letter);

    const std::string &str() const { return letters_; }
    std::size_t weight() const;
    std::vector<std::size_t> support() const;
    bool is_identity() const { return weight() == 0; }
    std::size_t count(char letter) const;

    /// Bit (n-1-q) set where qubit q flips the basis state (X or Y). n <= 64.
    std::uint64_t x_mask() const;
    /// Bit (n-1-q) set where qubit q contributes a Z-type sign (Z or Y). n <= 64.
    std::uint64_t z_mask() const;

    /// Letters at the given qubits, in that order.
    PauliString restricted(std::span<const std::size_t> qubits) const;

    auto operator<=>(const PauliString &) const = default;
    bool operator==(const PauliString &) const = default;

   private:
    std::string letters_;
};

inline bool is_pauli_letter(char c) { return c == 'I' || c == 'X' || c == 'Y' || c == 'Z'; }

template <class Coeff>
struct Term {
    Coeff coeff;
    PauliString paulis;
};

namespace detail {
inline bool coeff_is_zero(const GaussRational &c) { return c.is_zero(); }
inline bool coeff_is_zero(double c) { return c == 0.0; }
}  // namespace detail

using Groups = std::vector<std::vector<std::size_t>>;

/// An n-qubit operator as a list of weighted Pauli strings plus an optional
/// partition of the term indices into local terms.
///
/// Ungrouped values are kept collected: strings unique, no zero coefficients,
/// terms sorted by string. Grouped values keep each group collected on its own
/// so the same string may appear in two different groups (regrouped and
/// reduction Hamiltonians rely on that).
template <class Coeff>
class BasicHamiltonian {
   public:
    using TermType = Term<Coeff>;

    BasicHamiltonian() = default;
    explicit BasicHamiltonian(std::size_t n) : n_(n) {}

    /// Merges duplicate strings, drops zeros and sorts. Throws MixedLength.
    static BasicHamiltonian collect(std::size_t n, std::vector<TermType> terms);
    /// Same, taking n from the first term (empty input gives n = 0).
    static BasicHamiltonian collect(std::vector<TermType> terms);

    /// Concatenates the collected parts and records one group per part.
    static BasicHamiltonian from_groups(std::size_t n, const std::vector<BasicHamiltonian> &parts);

    /// Raw constructor used by deserialisation: validates lengths, the group
    /// partition and per-group uniqueness, but does not reorder anything.
    /// Without groups the terms are collected.
    static BasicHamiltonian from_terms(std::size_t n, std::vector<TermType> terms,
                                       std::optional<Groups> groups);

    std::size_t num_qubits() const { return n_; }
    const std::vector<TermType> &terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    const std::optional<Groups> &groups() const { return groups_; }
    bool has_groups() const { return groups_.has_value(); }

    /// The recorded groups, or one singleton group per term.
    Groups effective_groups() const;
    std::size_t num_groups() const { return effective_groups().size(); }
    /// Group g as an ungrouped n-qubit Hamiltonian.
    BasicHamiltonian group(std::size_t g) const;
    /// All groups, in order.
    std::vector<BasicHamiltonian> parts() const;

    /// Drops the grouping and collects all terms.
    BasicHamiltonian flattened() const;
    /// Same terms as collect(), one group holding all of them.
    BasicHamiltonian as_single_group() const;

    /// Union of the supports of the given terms, ascending.
    std::vector<std::size_t> support() const;

    /// Coefficient of a string summed over all terms (zero when absent).
    Coeff coefficient_of(const PauliString &p) const;

    /// Applies f to every term and re-collects, keeping the group structure.
    template <class OutCoeff, class Fn>
    BasicHamiltonian<OutCoeff> map_terms(Fn &&f) const;

   private:
    std::size_t n_ = 0;
    std::vector<TermType> terms_;
    std::optional<Groups> groups_;

    template <class>
    friend class BasicHamiltonian;
};

using Hamiltonian = BasicHamiltonian<GaussRational>;
using RealHamiltonian = BasicHamiltonian<double>;

/// Converts the coefficients to doubles. Throws InvalidInput if any
/// coefficient has a nonzero imaginary part.
RealHamiltonian to_real(const Hamiltonian &h);
/// Exact conversion (every double is a dyadic rational).
Hamiltonian to_exact(const RealHamiltonian &h);

/// Places an m-qubit string onto n qubits at the given positions.
PauliString embed(const PauliString &local, std::size_t n, std::span<const std::size_t> qubits);

// ---------------------------------------------------------------------------

template <class Coeff>
template <class OutCoeff, class Fn>
BasicHamiltonian<OutCoeff> BasicHamiltonian<Coeff>::map_terms(Fn &&f) const {
    if (!groups_) {
        std::vector<Term<OutCoeff>> out;
        for (const auto &t : terms_) {
            for (auto &mapped : f(t)) out.push_back(std::move(mapped));
        }
        return BasicHamiltonian<OutCoeff>::collect(n_, std::move(out));
    }
    std::vector<BasicHamiltonian<OutCoeff>> parts_out;
    parts_out.reserve(groups_->size());
    for (const auto &g : *groups_) {
        std::vector<Term<OutCoeff>> out;
        for (std::size_t idx : g) {
            for (auto &mapped : f(terms_[idx])) out.push_back(std::move(mapped));
        }
        parts_out.push_back(BasicHamiltonian<OutCoeff>::collect(n_, std::move(out)));
    }
    return BasicHamiltonian<OutCoeff>::from_groups(n_, parts_out);
}

}  // namespace stoqcure
