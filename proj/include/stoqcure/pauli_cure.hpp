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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stoqcure/clifford.hpp"

namespace stoqcure {

/// Terms of one local part that share an X component. Each term c*P is
/// written as X^x * (c * i^#Y * Z^z), using Y = iXZ on every Y site, and the
/// diagonal factors are summed into z_part.
struct XComponentGroup {
    PauliString x_pattern;
    Hamiltonian z_part;
    std::vector<std::size_t> support;
};

enum class SignClass { AlwaysNonneg, AlwaysNonpos, Mixed };

/// One equation per entry: sum of x_i over vars == parity (mod 2).
struct Gf2Equation {
    std::vector<std::size_t> vars;
    bool parity = false;
};

struct Gf2System {
    std::size_t n_vars = 0;
    std::vector<Gf2Equation> equations;
};

/// Affine solution space: particular + span(basis). The particular solution
/// has every free variable set to 0.
struct Gf2Solution {
    std::vector<std::uint8_t> particular;
    std::vector<std::vector<std::uint8_t>> basis;
    std::vector<std::size_t> free_vars;
};

/// Gaussian elimination over GF(2). Returns nullopt when inconsistent.
std::optional<Gf2Solution> solve_gf2(const Gf2System &system);

/// Every solution as a bit string, sorted. Throws BudgetExceeded when the
/// space holds more than max_solutions elements.
std::vector<std::string> enumerate_gf2(const Gf2Solution &solution, std::size_t max_solutions = 1u << 20);

/// Groups by distinct nontrivial X pattern, ordered by pattern. Patterns whose
/// diagonal factor cancels to zero are omitted, as is the all-I pattern.
std::vector<XComponentGroup> extract_x_groups(const Hamiltonian &h_a);

/// Signs of the diagonal of z_part; zeros are compatible with either class,
/// and a non-real diagonal entry counts as Mixed.
SignClass sign_constraint(const XComponentGroup &g);

enum class PauliCureStatus { Cured, Infeasible };

struct PauliCureResult {
    PauliCureStatus status = PauliCureStatus::Infeasible;
    /// Z^x assignment, qubit 0 first. Empty when infeasible.
    std::string x;
    std::string reason;
    Gf2System system;
    std::optional<Gf2Solution> solution;

    bool cured() const { return status == PauliCureStatus::Cured; }
};

/// Looks for x making every group of Z^x h Z^x stoquastic. A Hamiltonian
/// without recorded groups is treated as one local term. A cure is checked
/// against the grouped oracle before it is returned.
PauliCureResult cure_with_pauli(const Hamiltonian &h);

/// All curing Z-strings, sorted; empty when infeasible.
std::vector<std::string> all_pauli_cures(const Hamiltonian &h, std::size_t max_solutions = 1u << 20);

/// Tensor product of Z^{x_i} as a gate assignment.
std::vector<CliffordGate> z_string_gates(const std::string &x);

}  // namespace stoqcure
