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
#include <random>
#include <string>

#include "stoqcure/clifford.hpp"
#include "stoqcure/dense.hpp"
#include "stoqcure/sat.hpp"

namespace stoqcure {

/// The curing transformation shared by the two parties: descrambling
/// conjugates by these gates, scrambling by their inverses.
struct SecretKey {
    std::uint64_t seed = 0;
    GateAssignment gates;
};

enum class KeyKind { IW, FullClifford, Rotation };

/// Uniform in [0, bound) by rejection, so the stream is the same on every
/// standard library.
std::uint64_t bounded_draw(std::mt19937_64 &rng, std::uint64_t bound);

SecretKey random_key(std::size_t n, std::uint64_t seed, KeyKind kind = KeyKind::IW);

struct PlantedCnf {
    CnfInstance cnf;
    std::string planted;
};

/// Draws x* and then clauses uniformly over (triple, polarity), rejecting
/// those falsified by x* and repeats. Throws UnsatisfiableParameters when m
/// exceeds 7 * C(n, 3).
PlantedCnf generate_planted(std::size_t n, std::size_t m, std::uint64_t seed);

struct ScrambleResult {
    Hamiltonian h;
    /// Grouped verdict of the output.
    bool stoquastic = false;
};

struct RotationScrambleResult {
    RealHamiltonian h;
    bool stoquastic = false;
};

/// Clifford keys. Throws NotStoquasticInput unless h passes the grouped check.
/// stoquastic set on the result means the scrambling did not hide anything.
ScrambleResult scramble(const Hamiltonian &h, const SecretKey &key);
ScrambleResult descramble(const Hamiltonian &h, const SecretKey &key);

/// Rotation keys on real {I, X, Z} Hamiltonians.
RotationScrambleResult scramble_rotation(const Hamiltonian &h, const SecretKey &key);
RotationScrambleResult descramble_rotation(const RealHamiltonian &h, const SecretKey &key);

/// Tr(exp(-beta H) A) / Tr(exp(-beta H)) by dense diagonalisation.
double thermal_average(const ComplexMatrix &h, const ComplexMatrix &a, double beta);

}  // namespace stoqcure
