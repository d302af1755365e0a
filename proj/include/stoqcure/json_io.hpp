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

#include <json.hpp>

#include "stoqcure/clifford_cure.hpp"
#include "stoqcure/grouping.hpp"
#include "stoqcure/orthogonal.hpp"
#include "stoqcure/pauli_cure.hpp"
#include "stoqcure/sat.hpp"
#include "stoqcure/scrambler.hpp"
#include "stoqcure/stoq.hpp"

namespace stoqcure {

using Json = nlohmann::json;

/// {"n": 3, "terms": [{"re": "-2", "im": "0", "paulis": "XII"}, ...], "groups": [[0, 1], [2]]}
Json to_json(const Hamiltonian &h);
/// Real coefficients printed as shortest round-trip decimals.
Json to_json(const RealHamiltonian &h);
/// Coefficients may be decimal strings, "p/q" strings or JSON integers.
/// Throws ParseError on malformed documents.
Hamiltonian hamiltonian_from_json(const Json &j);
/// Reads coefficients as nearest doubles.
RealHamiltonian real_hamiltonian_from_json(const Json &j);

Json to_json(const StoqReport &r);
Json to_json(const PauliCureResult &r);
Json to_json(const ReductionReport &r);
Json to_json(const Lemma3Constraints &c);
Json to_json(const FourPointReport &r);
Json to_json(const TriangleReport &r);
Json to_json(const SecretKey &k);
SecretKey key_from_json(const Json &j);

/// Clifford entries become labels ("I", "W", "XW", ...), rotations numbers.
Json to_json(const GateAssignment &g);
GateAssignment assignment_from_json(const Json &j);
Json to_json(const std::vector<CliffordGate> &gates);

}  // namespace stoqcure
