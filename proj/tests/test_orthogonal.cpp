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


#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <set>

#include "oracles.hpp"
#include "stoqcure/error.hpp"
#include "stoqcure/orthogonal.hpp"
#include "stoqcure/stoq.hpp"

namespace stoqcure {
namespace {

constexpr double kPi = std::numbers::pi;
using T = Hamiltonian::TermType;

Clause clause(std::size_t i, std::size_t j, std::size_t k, int a, int b, int c) {
    Clause cl;
    cl.vars = {i, j, k};
    cl.polarity = {static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b), static_cast<std::uint8_t>(c)};
    return cl;
}

LemmaThreeInstance single_clause_instance() {
    const CnfInstance cnf(3, {clause(1, 2, 3, 1, 1, 1)});
    const auto rest = free_rest_assignment(cnf, 1);
    EXPECT_TRUE(rest.has_value());
    return LemmaThreeInstance::from_sixlocal(cnf, 1, rest.value_or("000"));
}

// Q H Q^T for a tensor product of real 2x2 matrices.
ComplexMatrix conjugate_real(const ComplexMatrix &h, const std::vector<std::array<double, 4>> &qs) {
    ComplexMatrix q(1, 1);
    q(0, 0) = 1.0;
    for (const auto &b : qs) {
        ComplexMatrix next(q.rows() * 2, q.cols() * 2);
        for (std::size_t i = 0; i < q.rows(); ++i) {
            for (std::size_t j = 0; j < q.cols(); ++j) {
                for (std::size_t a = 0; a < 2; ++a) {
                    for (std::size_t c = 0; c < 2; ++c) next(2 * i + a, 2 * j + c) = q(i, j) * b[2 * a + c];
                }
            }
        }
        q = std::move(next);
    }
    return multiply(multiply(q, h), adjoint(q));
}

TEST(orthogonal, decomposition_examples) {
    const double r = 1 / std::sqrt(2.0);
    const auto w = orthogonal_to_rotation({r, r, r, -r});
    EXPECT_TRUE(w.is_reflection);
    EXPECT_NEAR(w.theta, kPi / 4, 1e-12);
    const auto id = orthogonal_to_rotation({1, 0, 0, 1});
    EXPECT_FALSE(id.is_reflection);
    EXPECT_EQ(id.theta, 0.0);
    const auto rot = orthogonal_to_rotation({std::cos(0.3), -std::sin(0.3), std::sin(0.3), std::cos(0.3)});
    EXPECT_FALSE(rot.is_reflection);
    EXPECT_NEAR(rot.theta, 0.3, 1e-12);
    EXPECT_THROW(orthogonal_to_rotation({1, 1, 0, 1}), Error);
}

TEST(orthogonal, reflections_cure_like_their_rotations) {
    std::mt19937_64 rng(101);
    std::uniform_real_distribution<double> angle(-kPi, kPi);
    int agree_on_stoquastic = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const auto h = oracle::random_grouped(rng, 2, 2, 2, true).flattened();
        const ComplexMatrix m = to_dense(to_real(h));
        std::vector<std::array<double, 4>> qs;
        std::vector<std::array<double, 4>> rs;
        for (int q = 0; q < 2; ++q) {
            // Snap half the angles to multiples of pi/8 so cures actually happen.
            double t = angle(rng);
            if (rng() % 2) t = std::round(t / (kPi / 8)) * (kPi / 8);
            const bool reflect = rng() % 2;
            const double c = std::cos(t);
            const double s = std::sin(t);
            qs.push_back(reflect ? std::array<double, 4>{s, c, c, -s} : std::array<double, 4>{c, -s, s, c});
            const auto d = orthogonal_to_rotation(qs.back());
            rs.push_back({std::cos(d.theta), -std::sin(d.theta), std::sin(d.theta), std::cos(d.theta)});
        }
        const bool a = oracle::stoquastic(conjugate_real(m, qs), 1e-9);
        const bool b = oracle::stoquastic(conjugate_real(m, rs), 1e-9);
        EXPECT_EQ(a, b) << trial;
        agree_on_stoquastic += a;
    }
    EXPECT_GT(agree_on_stoquastic, 0);
}

TEST(lemma3_constraints, six_local_instance_with_unit_penalty) {
    const LemmaThreeInstance inst = single_clause_instance();
    EXPECT_EQ(inst.rest_qubits(), 4u);
    const Lemma3Constraints c = check_lemma3_constraints(inst);
    EXPECT_TRUE(c.c1);
    EXPECT_TRUE(c.c2);
    EXPECT_TRUE(c.trace_argument);
    EXPECT_EQ(c.trace_x, -3 * c.k - Rational(16));
    EXPECT_EQ(c.trace_z, -3 * c.k_prime - Rational(32));
}

TEST(lemma3_constraints, empty_blocks) {
    LemmaThreeInstance zero{Hamiltonian(2), Hamiltonian(2), Hamiltonian(2), Rational(0)};
    EXPECT_FALSE(check_lemma3_constraints(zero).c2);
    LemmaThreeInstance unit{Hamiltonian(2), Hamiltonian(2), Hamiltonian(2), Rational(1)};
    const Lemma3Constraints c = check_lemma3_constraints(unit);
    EXPECT_TRUE(c.c1);
    EXPECT_TRUE(c.c2);
}

TEST(lemma3_instance, assemble_and_decompose_round_trip) {
    const LemmaThreeInstance inst = single_clause_instance();
    const Hamiltonian h = inst.assemble();
    EXPECT_EQ(h.num_qubits(), 6u);
    const LemmaThreeInstance back = LemmaThreeInstance::decompose(h, inst.c);
    EXPECT_EQ(back.assemble().flattened().terms().size(), h.flattened().terms().size());
    const auto flat = h.flattened();
    for (const auto &t : flat.terms()) EXPECT_EQ(back.assemble().coefficient_of(t.paulis), t.coeff);
    const auto bad = Hamiltonian::collect({T{GaussRational(1), PauliString("XZI")}});
    EXPECT_THROW(LemmaThreeInstance::decompose(bad, Rational(1)), Error);
}

TEST(four_points, single_clause_on_a_one_degree_grid) {
    const FourPointReport r = verify_four_points(single_clause_instance());
    EXPECT_FALSE(r.precondition_failed);
    EXPECT_TRUE(r.analytic_four_points);
    for (bool ok : r.point_stoquastic) EXPECT_TRUE(ok);
    EXPECT_EQ(r.grid_points, 180u * 180u);
    EXPECT_EQ(r.clusters.size(), 4u);
    EXPECT_TRUE(r.only_near_lemma_points);
    EXPECT_TRUE(r.blocks_vanish_at_curing_points);
}

TEST(four_points, opposite_quarter_turns_do_not_cure) {
    const Hamiltonian h = single_clause_instance().assemble();
    const std::vector<double> t{kPi / 4, -kPi / 4, 0, 0, 0, 0};
    EXPECT_FALSE(is_stoquastic_pauli_sum(conjugate_rotation(h, t)).stoquastic());
    const std::vector<double> same{kPi / 4, kPi / 4, 0, 0, 0, 0};
    EXPECT_TRUE(is_stoquastic_pauli_sum(conjugate_rotation(h, same)).stoquastic());
}

TEST(four_points, violated_first_constraint_opens_a_continuum) {
    // H_z - 2I = H_x - I = -I: the diagonal theta1 = theta2 cures everywhere.
    const auto id = Hamiltonian::collect({T{GaussRational(1), PauliString("I")}});
    LemmaThreeInstance inst{id, Hamiltonian(1), Hamiltonian(1), Rational(1)};
    EXPECT_FALSE(check_lemma3_constraints(inst).c1);
    try {
        verify_four_points(inst);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::ConstraintViolated);
    }
    GridOptions opt;
    opt.require_constraints = false;
    opt.step = kPi / 90;
    const FourPointReport r = verify_four_points(inst, opt);
    EXPECT_TRUE(r.precondition_failed);
    EXPECT_FALSE(r.only_near_lemma_points);
    EXPECT_GT(r.curing_points.size(), 4u);
}

TEST(clusters, wrap_around_the_period) {
    const double s = kPi / 180;
    const std::vector<std::array<double, 2>> pts{{kPi / 2, 0}, {-kPi / 2 + s, 0}, {0.5, 0.5}};
    const auto c = cluster_angles(pts, 1.5 * s);
    ASSERT_EQ(c.size(), 2u);
    std::multiset<std::size_t> sizes{c[0].size, c[1].size};
    EXPECT_EQ(sizes, (std::multiset<std::size_t>{1, 2}));
}

TEST(cure_sixlocal, decoded_set_equals_satisfying_set) {
    const CnfInstance cnf(3, {clause(1, 2, 3, 1, 1, 1)});
    const Hamiltonian h = encode_instance(cnf, ReductionVariant{Variant::SixLocal, std::nullopt});
    std::set<std::string> decoded;
    for (const auto &a : cure_sixlocal(h)) {
        decoded.insert(decode_assignment(GateAssignment::rotations(a.thetas), Variant::SixLocal));
    }
    const auto sat = oracle::satisfying_assignments(cnf);
    EXPECT_EQ(decoded, std::set<std::string>(sat.begin(), sat.end()));
}

TEST(cure_sixlocal, unsatisfiable_and_empty_formulas) {
    std::vector<Clause> all;
    for (int pol = 0; pol < 8; ++pol) all.push_back(clause(1, 2, 3, pol >> 2 & 1, pol >> 1 & 1, pol & 1));
    const ReductionVariant six{Variant::SixLocal, std::nullopt};
    EXPECT_TRUE(cure_sixlocal(encode_instance(CnfInstance(3, all), six)).empty());

    const auto free = cure_sixlocal(encode_instance(CnfInstance(2, {}), six));
    EXPECT_EQ(free.size(), 16u);
    std::set<std::string> decoded;
    for (const auto &a : free) decoded.insert(decode_assignment(GateAssignment::rotations(a.thetas), Variant::SixLocal));
    EXPECT_EQ(decoded, (std::set<std::string>{"00", "01", "10", "11"}));
}

TEST(triangle, cannot_be_cured_by_rotations) {
    const TriangleReport r = triangle_incurability(kPi / 30);
    EXPECT_TRUE(r.analytic_contradiction);
    EXPECT_TRUE(r.edge_identity_holds);
    EXPECT_EQ(r.grid_points, 30u * 30u * 30u);
    EXPECT_EQ(r.curing_points, 0u);
    EXPECT_FALSE(r.curable());
    EXPECT_TRUE(r.two_edge_cured_by_z2);
    EXPECT_FALSE(r.single_edge_equal_angles_stoquastic);
    EXPECT_TRUE(r.single_edge_cured_by_z);
}

}  // namespace
}  // namespace stoqcure
