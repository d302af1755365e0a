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
#include "stoqcure/sat.hpp"

namespace stoqcure {

/// One angle per qubit, each in (-pi/2, pi/2].
struct RotationAssignment {
    std::vector<double> thetas;
};

struct OrthogonalDecomposition {
    bool is_reflection = false;
    /// Rotation angle with the same curing power, in (-pi/2, pi/2].
    double theta = 0.0;
};

/// q is row-major [[q00, q01], [q10, q11]]. A rotation R(t) gives t; a
/// reflection X R(pi/2 - t) gives pi/2 - t. Throws NotOrthogonal.
OrthogonalDecomposition orthogonal_to_rotation(const std::array<double, 4> &q, double tol = 1e-9);

/// Z1Z2 (x) h_z + X1X2 (x) h_x + c (-2 Z1Z2 - X1X2) (x) I + I (x) h_i, with the
/// special pair on qubits 0 and 1 and h_z, h_x, h_i on the remaining qubits.
struct LemmaThreeInstance {
    Hamiltonian h_z;
    Hamiltonian h_x;
    Hamiltonian h_i;
    Rational c{1};

    std::size_t rest_qubits() const { return h_z.num_qubits(); }
    Hamiltonian assemble() const;

    /// Splits a Hamiltonian whose pair letters are only II, ZZ or XX. Throws
    /// InvalidInput otherwise.
    static LemmaThreeInstance decompose(const Hamiltonian &h, const Rational &c);

    /// Six-local encoding of cnf with the pair of variable var (1-based) moved
    /// to the front and every other variable u conjugated by XW on both of
    /// its qubits when rest[u - 1] == '1'.
    static LemmaThreeInstance from_sixlocal(const CnfInstance &cnf, std::size_t var, const std::string &rest,
                                            const Rational &c = Rational(1));
};

/// An assignment under which the CNF holds for both values of var, if any.
std::optional<std::string> free_rest_assignment(const CnfInstance &cnf, std::size_t var);

struct Lemma3Constraints {
    bool c1 = false;
    bool c2 = false;
    Rational trace_x;  // Tr(H_x - cI)
    Rational trace_z;  // Tr(H_z - 2cI)
    /// -Tr(H_x) / 3 and -Tr(H_z) / 3.
    Rational k;
    Rational k_prime;
    /// k and k' are non-negative integers and the two traces differ.
    bool trace_argument = false;

    bool hold() const { return c1 && c2; }
};

Lemma3Constraints check_lemma3_constraints(const LemmaThreeInstance &inst, DenseLimits limits = {});

struct AngleCluster {
    std::array<double, 2> theta{};
    double radius = 0.0;
    std::size_t size = 0;
};

struct FourPointReport {
    Lemma3Constraints constraints;
    bool precondition_failed = false;
    /// Both mixed blocks vanish exactly at every lemma point.
    bool analytic_four_points = false;
    /// Exact stoquasticity at (pi/2,pi/2), (pi/4,pi/4), (0,0), (-pi/4,-pi/4).
    std::array<bool, 4> point_stoquastic{};
    double grid_step = 0.0;
    std::size_t grid_points = 0;
    std::vector<std::array<double, 2>> curing_points;
    std::vector<AngleCluster> clusters;
    /// Every curing grid point lies within one step of a lemma point.
    bool only_near_lemma_points = true;
    /// Every curing grid point has |sin2t1 cos2t2| and |cos2t1 sin2t2| below tolerance.
    bool blocks_vanish_at_curing_points = true;
};

struct GridOptions {
    double step = 0.0;  // radians; 0 means one degree
    unsigned jobs = 1;
    bool require_constraints = true;
};

/// Throws ConstraintViolated when a constraint fails and require_constraints is set.
FourPointReport verify_four_points(const LemmaThreeInstance &inst, const GridOptions &options = {});

/// Single-linkage clusters of angle pairs, distance measured with period pi
/// on each axis.
std::vector<AngleCluster> cluster_angles(const std::vector<std::array<double, 2>> &points, double radius);

/// The four lemma points as angles, in the order (pi/2,pi/2), (pi/4,pi/4), (0,0), (-pi/4,-pi/4).
const std::array<double, 4> &lemma_angles();

/// Tries the four lemma values on every pair of a six-local encoding and keeps
/// the assignments under which every group is stoquastic.
std::vector<RotationAssignment> cure_sixlocal(const Hamiltonian &h);

struct TriangleReport {
    /// sin 2d = 0 and cos 2d = -1 on two edges forces cos 2d = +1 on the third.
    bool analytic_contradiction = false;
    /// The rotated edge equals cos2d (XX + ZZ) + sin2d (XZ - ZX) at sampled angles.
    bool edge_identity_holds = false;
    double grid_step = 0.0;
    std::size_t grid_points = 0;
    std::size_t curing_points = 0;
    bool two_edge_cured_by_z2 = false;
    /// A single edge with equal angles stays non-stoquastic; Z on its second qubit cures it.
    bool single_edge_equal_angles_stoquastic = true;
    bool single_edge_cured_by_z = false;

    bool curable() const { return curing_points > 0; }
};

/// step is in radians; 0 means three degrees.
TriangleReport triangle_incurability(double step = 0.0, unsigned jobs = 1);

}  // namespace stoqcure
