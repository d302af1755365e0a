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
#include <string>
#include <unordered_set>
#include <vector>

#include "stoqcure/rational.hpp"

namespace stoqcure {

enum class Relation { LessEqualZero, EqualZero };

/// coeffs . w + constant  (<= 0 | == 0)
struct LpConstraint {
    std::vector<Rational> coeffs;
    Rational constant{0};
    Relation relation = Relation::LessEqualZero;
};

/// Feasibility problem over free (sign-unrestricted) rational variables.
struct LpSystem {
    std::vector<std::string> var_names;
    std::vector<LpConstraint> constraints;

    std::size_t num_vars() const { return var_names.size(); }
    std::size_t add_var(std::string name);
    /// Appends a constraint after scaling it so its first nonzero coefficient
    /// has magnitude 1. Exact duplicates and the trivial 0 <= 0 / 0 == 0 are
    /// skipped. Returns false if it was skipped.
    bool add(LpConstraint c);

    std::vector<const LpConstraint *> equalities() const;
    std::vector<const LpConstraint *> inequalities() const;
    std::optional<std::size_t> find_var(const std::string &name) const;

   private:
    std::unordered_set<std::string> seen_;
};

struct LpResult {
    bool feasible = false;
    std::vector<Rational> point;
};

/// Phase-1 simplex in exact arithmetic with Bland's pivoting rule. Each free
/// variable is split as u - v with u, v >= 0.
LpResult solve_feasibility(const LpSystem &sys);

/// Plain-text listing, one constraint per line.
std::string format_lp(const LpSystem &sys);

}  // namespace stoqcure
