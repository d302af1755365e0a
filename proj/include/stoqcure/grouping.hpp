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
#include "stoqcure/lp.hpp"

namespace stoqcure {

enum class SubsetFamily {
    AllCombinations,
    /// Only subsets containing the support of some non-identity term.
    TermSupersets,
};

struct GroupingOptions {
    SubsetFamily family = SubsetFamily::AllCombinations;
    /// Adds 0 <= w <= 1 for every weight.
    bool unit_box = false;
    DenseLimits limits{};
};

/// One unknown weight per (term, subset) pair with the term's support inside
/// the subset. Variables are ordered subset-major, then by term index.
struct WeightVar {
    std::size_t term = 0;
    std::size_t subset = 0;
};

struct GroupingProblem {
    Hamiltonian h;  // flattened
    std::size_t k_prime = 0;
    std::vector<std::vector<std::size_t>> subsets;
    std::vector<WeightVar> weight_vars;

    /// Throws UncoverableTerm if a term's support fits no subset.
    static GroupingProblem make(const Hamiltonian &h, std::size_t k_prime, const GroupingOptions &options = {});
};

/// One equality per term (its weights sum to 1) followed by, for every
/// subset, the real part <= 0 and the imaginary part == 0 of each
/// off-diagonal entry of the weighted subset Hamiltonian.
LpSystem build_lp(const GroupingProblem &p, const GroupingOptions &options = {});

struct RegroupResult {
    bool feasible = false;
    /// Groups hold the split terms, one group per subset that received weight.
    Hamiltonian regrouped;
    std::vector<Rational> weights;
    /// Subset (qubit indices) of each group in regrouped.
    std::vector<std::vector<std::size_t>> group_subsets;
};

RegroupResult regroup(const Hamiltonian &h, std::size_t k_prime, const GroupingOptions &options = {});

/// Tries k_prime, k_prime + 1, ..., n and stops at the first feasible value.
/// Returns the value used alongside the result.
std::pair<std::size_t, RegroupResult> regroup_increasing(const Hamiltonian &h, std::size_t k_start,
                                                         const GroupingOptions &options = {});

/// All k-element subsets of {0, ..., n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k);

}  // namespace stoqcure
