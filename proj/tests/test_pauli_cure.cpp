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

#include <random>

#include "oracles.hpp"
#include "stoqcure/error.hpp"
#include "stoqcure/pauli_cure.hpp"
#include "stoqcure/stoq.hpp"

namespace stoqcure {
namespace {

using T = Hamiltonian::TermType;

T term(long c, const char *s) { return {GaussRational(c), PauliString(s)}; }

// X1 X2 (-Z1 Z2 + 3 + Z3) written out as Y1Y2 + 3 X1X2 + X1X2Z3.
Hamiltonian worked_example() {
    return Hamiltonian::collect({term(1, "YYI"), term(3, "XXI"), term(1, "XXZ")}).as_single_group();
}

XComponentGroup group_with(std::vector<T> z_terms, std::size_t n) {
    XComponentGroup g;
    g.x_pattern = PauliString::identity(n);
    g.z_part = Hamiltonian::collect(n, std::move(z_terms));
    return g;
}

TEST(x_groups, worked_example_collapses_to_one_pattern) {
    const auto groups = extract_x_groups(worked_example());
    ASSERT_EQ(groups.size(), 1u);
    EXPECT_EQ(groups[0].x_pattern.str(), "XXI");
    const Hamiltonian &z = groups[0].z_part;
    EXPECT_EQ(z.terms().size(), 3u);
    EXPECT_EQ(z.coefficient_of(PauliString("ZZI")), GaussRational(-1));
    EXPECT_EQ(z.coefficient_of(PauliString("III")), GaussRational(3));
    EXPECT_EQ(z.coefficient_of(PauliString("IIZ")), GaussRational(1));
    EXPECT_EQ(groups[0].support, (std::vector<std::size_t>{0, 1}));
}

TEST(x_groups, diagonal_only_gives_nothing) {
    EXPECT_TRUE(extract_x_groups(Hamiltonian::collect({term(1, "ZZ")})).empty());
}

TEST(x_groups, distinct_patterns_are_separate) {
    const auto groups = extract_x_groups(Hamiltonian::collect({term(1, "XI"), term(1, "ZX")}));
    ASSERT_EQ(groups.size(), 2u);
    EXPECT_EQ(groups[0].x_pattern.str(), "IX");
    EXPECT_EQ(groups[1].x_pattern.str(), "XI");
}

TEST(sign_constraint, classes) {
    EXPECT_EQ(sign_constraint(extract_x_groups(worked_example())[0]), SignClass::AlwaysNonneg);
    EXPECT_EQ(sign_constraint(group_with({term(-1, "I")}, 1)), SignClass::AlwaysNonpos);
    EXPECT_EQ(sign_constraint(group_with({term(1, "Z")}, 1)), SignClass::Mixed);
    EXPECT_EQ(sign_constraint(group_with({term(1, "I"), term(1, "Z")}, 1)), SignClass::AlwaysNonneg);
    EXPECT_EQ(sign_constraint(group_with({T{GaussRational(Rational(0), Rational(1)), PauliString("I")}}, 1)),
              SignClass::Mixed);
}

TEST(gf2, inconsistent_and_underdetermined_systems) {
    Gf2System bad{2, {{{0, 1}, true}, {{0, 1}, false}}};
    EXPECT_FALSE(solve_gf2(bad).has_value());

    Gf2System free{3, {{{0, 1}, true}}};
    const auto sol = solve_gf2(free);
    ASSERT_TRUE(sol.has_value());
    EXPECT_EQ(sol->basis.size(), 2u);
    EXPECT_EQ(enumerate_gf2(*sol), (std::vector<std::string>{"010", "011", "100", "101"}));
    EXPECT_THROW(enumerate_gf2(*sol, 3), Error);
}

TEST(cure_with_pauli, worked_example) {
    const PauliCureResult r = cure_with_pauli(worked_example());
    ASSERT_TRUE(r.cured());
    EXPECT_EQ(r.x, "100");
    ASSERT_EQ(r.system.equations.size(), 1u);
    EXPECT_EQ(r.system.equations[0].vars, (std::vector<std::size_t>{0, 1}));
    EXPECT_TRUE(r.system.equations[0].parity);
    EXPECT_EQ(all_pauli_cures(worked_example()), (std::vector<std::string>{"010", "011", "100", "101"}));
}

TEST(cure_with_pauli, stoquastic_input_needs_nothing) {
    const auto h = Hamiltonian::from_groups(2, {Hamiltonian::collect({term(-1, "XI")}),
                                                Hamiltonian::collect({term(-1, "XX"), term(-1, "ZZ")})});
    const PauliCureResult r = cure_with_pauli(h);
    ASSERT_TRUE(r.cured());
    EXPECT_EQ(r.x, "00");
}

TEST(cure_with_pauli, x1z2_cannot_be_cured) {
    const PauliCureResult r = cure_with_pauli(Hamiltonian::collect({term(1, "XZ")}).as_single_group());
    EXPECT_FALSE(r.cured());
    EXPECT_TRUE(r.x.empty());
    EXPECT_FALSE(r.reason.empty());
}

TEST(cure_with_pauli, inconsistent_parities) {
    // X1 forces x1 = 1 and X2 forces x2 = 1, but X1 X2 needs x1 + x2 odd.
    const auto h = Hamiltonian::from_groups(2, {Hamiltonian::collect({term(1, "XI")}),
                                                Hamiltonian::collect({term(1, "IX")}),
                                                Hamiltonian::collect({term(1, "XX")})});
    EXPECT_FALSE(cure_with_pauli(h).cured());
    EXPECT_TRUE(oracle::brute_force_pauli_cures(h).empty());
}

TEST(cure_with_pauli, solution_sets_match_brute_force) {
    std::mt19937_64 rng(51);
    int cured = 0;
    for (int trial = 0; trial < 80; ++trial) {
        const std::size_t n = 1 + trial % 7;
        const auto h = oracle::random_grouped(rng, n, 1 + rng() % 4, 3);
        const auto expect = oracle::brute_force_pauli_cures(h);
        EXPECT_EQ(all_pauli_cures(h), expect) << trial;
        const PauliCureResult r = cure_with_pauli(h);
        EXPECT_EQ(r.cured(), !expect.empty());
        if (r.cured()) {
            ++cured;
            EXPECT_TRUE(std::binary_search(expect.begin(), expect.end(), r.x));
            EXPECT_TRUE(oracle::grouped_stoquastic(conjugate_clifford(h, z_string_gates(r.x))));
        }
    }
    EXPECT_GT(cured, 5);
}

TEST(cure_with_pauli, any_pauli_is_as_good_as_its_z_part) {
    std::mt19937_64 rng(52);
    const char letters[] = {'I', 'X', 'Y', 'Z'};
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t n = 1 + trial % 3;
        const auto h = oracle::random_grouped(rng, n, 3, n);
        std::size_t total = 1;
        for (std::size_t i = 0; i < n; ++i) total *= 4;
        for (std::size_t code = 0; code < total; ++code) {
            std::vector<CliffordGate> gates;
            std::string zpart;
            std::size_t c = code;
            for (std::size_t q = 0; q < n; ++q, c /= 4) {
                const char l = letters[c % 4];
                gates.push_back(CliffordGate::pauli(l));
                zpart += (l == 'Z' || l == 'Y') ? '1' : '0';
            }
            EXPECT_EQ(oracle::grouped_stoquastic(conjugate_clifford(h, gates)),
                      oracle::grouped_stoquastic(conjugate_clifford(h, z_string_gates(zpart))));
        }
    }
}

}  // namespace
}  // namespace stoqcure
