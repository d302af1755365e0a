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

enum class GateSetName { IW, CPrime1, FullC1, Custom };

struct GateSet {
    GateSetName name = GateSetName::Custom;
    /// Search order; assignments are enumerated lexicographically in it.
    std::vector<CliffordGate> elements;

    static GateSet iw();
    static GateSet cprime1();
    static GateSet full();
    static GateSet parse(const std::string &name);

    std::string name_str() const;
    bool contains(const CliffordGate &g) const;
};

/// Representative of {g, X*g}: whichever comes first in CliffordGate::all().
CliffordGate canonicalize_mod_x(const CliffordGate &g);

enum class SearchMode { First, All };

struct SearchOptions {
    /// Cap on group checks (cache hits included).
    std::uint64_t max_checks = std::uint64_t{1} << 24;
    unsigned jobs = 1;
    /// Optional per-qubit override of the gate set.
    std::optional<std::vector<GateSet>> per_site;
};

struct SearchResult {
    std::vector<std::vector<CliffordGate>> assignments;
    std::uint64_t checks = 0;
};

/// Depth-first search over one gate per qubit. A partial assignment is
/// dropped as soon as a group whose qubits are all assigned turns
/// non-stoquastic. Throws BudgetExceeded once max_checks is passed.
SearchResult brute_force_cure(const Hamiltonian &h, const GateSet &gs, SearchMode mode,
                              const SearchOptions &options = {});

/// Gates that keep the 1-local terms of h on this site stoquastic.
GateSet driver_filter(const Hamiltonian &h, std::size_t site);

/// gs intersected with driver_filter(h, q) for every qubit q.
std::vector<GateSet> driver_restricted_sets(const Hamiltonian &h, const GateSet &gs);

}  // namespace stoqcure
