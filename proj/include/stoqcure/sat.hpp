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

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "stoqcure/clifford.hpp"
#include "stoqcure/dense.hpp"

namespace stoqcure {

/// Clause over three distinct 1-based variables. It is false exactly when
/// (x[vars[0]], x[vars[1]], x[vars[2]]) == polarity.
struct Clause {
    std::array<std::size_t, 3> vars{};
    std::array<std::uint8_t, 3> polarity{};

    bool satisfied_by(const std::string &x) const;
    auto operator<=>(const Clause &) const = default;
    bool operator==(const Clause &) const = default;
};

class CnfInstance {
   public:
    CnfInstance() = default;
    /// Sorts each clause's variables (carrying the polarities along). Throws
    /// InvalidInput on repeated variables, out-of-range indices or duplicate
    /// clauses.
    CnfInstance(std::size_t n_vars, std::vector<Clause> clauses);

    std::size_t num_vars() const { return n_vars_; }
    const std::vector<Clause> &clauses() const { return clauses_; }
    std::size_t num_clauses() const { return clauses_.size(); }

    /// x[i - 1] is variable i.
    bool satisfied_by(const std::string &x) const;
    /// All satisfying assignments in lexicographic order. Throws TooLarge
    /// above 2^max_log2 assignments.
    std::vector<std::string> satisfying_set(std::size_t max_log2 = 22) const;

   private:
    std::size_t n_vars_ = 0;
    std::vector<Clause> clauses_;
};

enum class Variant { ThreeLocal, SixLocal };

struct ReductionVariant {
    Variant kind = Variant::ThreeLocal;
    /// Penalty on the driver. Unset means the variant default.
    std::optional<Rational> penalty_c;

    Rational c_for(std::size_t num_clauses) const;
    std::size_t qubits_per_var() const { return kind == Variant::ThreeLocal ? 1 : 2; }
};

/// Clause Hamiltonian on qubits_per_var * n_vars qubits: +1 triple, -3 per
/// single letter and -1 per pair, using Z on slots with polarity 1 and X on
/// slots with polarity 0. n_vars = 0 means the largest variable in the clause.
Hamiltonian encode_clause(const Clause &clause, Variant variant, std::size_t n_vars = 0);

/// Driver c*H0 restricted to one logical variable: -c(X + Z) or -c(2ZZ + XX).
Hamiltonian encode_driver_site(std::size_t var, std::size_t n_vars, Variant variant, const Rational &c);

/// Entry 4*x_i + 2*x_j + x_k tells whether the clause Hamiltonian conjugated by
/// W (or W on both qubits of a pair) on the slots with x = 1 is stoquastic.
std::array<bool, 8> clause_truth_table(const Clause &clause, Variant variant);

/// Sum of clause Hamiltonians plus c times the driver. One group per clause
/// (input order) followed by one group per variable for the driver.
Hamiltonian encode_instance(const CnfInstance &cnf, const ReductionVariant &variant);

/// Gates W^x on every qubit of each variable with x = 1.
std::vector<CliffordGate> hadamard_pattern(const std::string &x, Variant variant);

/// ThreeLocal reads Clifford entries (I or X give 0, W or XW give 1); SixLocal
/// reads rotation pairs ((0,0) or (pi/2,pi/2) give 0, (pi/4,pi/4) or
/// (-pi/4,-pi/4) give 1). Throws NotDecodable otherwise.
std::string decode_assignment(const GateAssignment &g, Variant variant);

struct ReductionReport {
    bool equal = false;
    std::vector<std::string> curing_set;
    std::vector<std::string> sat_set;
    /// Whether the whole (ungrouped) matrix was also checked for every x, and
    /// whether it agreed with the grouped verdict each time.
    bool whole_matrix_checked = false;
    bool whole_matrix_agrees = true;
    /// For every falsified clause the all-X triple term is positive and its
    /// string occurs in no other group.
    bool non_cancellation = true;
    /// Pairs of clause indices on the same variable triple.
    std::vector<std::pair<std::size_t, std::size_t>> shared_triples;
};

struct ReductionLimits {
    std::size_t max_vars_log2 = 20;
    /// Whole-matrix comparison is done up to this many qubits.
    std::size_t whole_matrix_qubits = 12;
};

ReductionReport verify_reduction(const CnfInstance &cnf, const ReductionVariant &variant,
                                 ReductionLimits limits = {});

struct DimacsFile {
    CnfInstance cnf;
    std::optional<std::string> planted;
};

/// DIMACS CNF with exactly three distinct literals per clause. A negative
/// literal means polarity 1. A "c planted <bits>" comment is picked up.
DimacsFile parse_dimacs(const std::string &text);
std::string write_dimacs(const CnfInstance &cnf, const std::optional<std::string> &planted = std::nullopt);

}  // namespace stoqcure
