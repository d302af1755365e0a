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
#include "stoqcure/stoq.hpp"

namespace stoqcure {
namespace {

using T = Hamiltonian::TermType;

T term(long c, const char *s) { return {GaussRational(c), PauliString(s)}; }

Hamiltonian example_sum(std::optional<Groups> groups) {
    return Hamiltonian::from_terms(2, {term(-2, "XI"), term(1, "XZ")}, std::move(groups));
}

ExactMatrix random_real_matrix(std::mt19937_64 &rng, std::size_t dim, bool stoquastic) {
    ExactMatrix m(dim, dim);
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = r; c < dim; ++c) {
            long v = static_cast<long>(rng() % 9) - 4;
            if (stoquastic && r != c && v > 0) v = -v;
            m(r, c) = GaussRational(v);
            m(c, r) = GaussRational(v);
        }
    }
    return m;
}

TEST(stoq_dense, diagonal_matrix_is_stoquastic) {
    ExactMatrix m(2, 2);
    m(0, 0) = GaussRational(5);
    m(1, 1) = GaussRational(-3);
    const StoqReport r = is_stoquastic_dense(m);
    EXPECT_TRUE(r.stoquastic());
    EXPECT_FALSE(r.witness.has_value());
}

TEST(stoq_dense, x1z2_has_a_positive_witness) {
    const StoqReport r = is_stoquastic_dense(to_dense(Hamiltonian::collect({term(1, "XZ")})));
    ASSERT_FALSE(r.stoquastic());
    ASSERT_TRUE(r.witness.has_value());
    EXPECT_EQ(r.witness->value, GaussRational(1));
    // First violation in row-major order: row 0 pairs with column 2 (flip of qubit 0).
    EXPECT_EQ(r.witness->row, 0u);
    EXPECT_EQ(r.witness->col, 2u);
}

TEST(stoq_dense, sum_is_stoquastic_though_a_part_is_not) {
    EXPECT_TRUE(is_stoquastic_dense(to_dense(example_sum(std::nullopt))).stoquastic());
    EXPECT_TRUE(is_stoquastic_grouped(example_sum(Groups{{0, 1}})).stoquastic());
    const StoqReport split = is_stoquastic_grouped(example_sum(Groups{{0}, {1}}));
    ASSERT_FALSE(split.stoquastic());
    EXPECT_EQ(split.mode, CheckMode::PerTermGrouped);
    EXPECT_EQ(split.witness->group, std::optional<std::size_t>(1));
}

TEST(stoq_dense, imaginary_entries_are_violations) {
    const auto y = Hamiltonian::collect({term(1, "Y")});
    const StoqReport r = is_stoquastic_dense(to_dense(y));
    ASSERT_FALSE(r.stoquastic());
    EXPECT_EQ(r.witness->value, GaussRational(Rational(0), Rational(-1)));
    // YY is real but carries both signs off the diagonal.
    for (const int c : {1, -1}) {
        const auto yy = Hamiltonian::collect({term(c, "YY")});
        EXPECT_FALSE(is_stoquastic_dense(to_dense(yy)).stoquastic());
        EXPECT_FALSE(oracle::stoquastic(oracle::dense(yy)));
    }
}

TEST(stoq_dense, clause_hamiltonian_as_one_group) {
    const auto h = Hamiltonian::collect({term(1, "ZZZ"), term(-3, "ZII"), term(-3, "IZI"), term(-3, "IIZ"),
                                         term(-1, "ZZI"), term(-1, "ZIZ"), term(-1, "IZZ")})
                       .as_single_group();
    EXPECT_TRUE(is_stoquastic_grouped(h).stoquastic());
    EXPECT_TRUE(oracle::stoquastic(oracle::dense(h)));
}

TEST(stoq_dense, not_square_and_negative_tolerance) {
    EXPECT_THROW(is_stoquastic_dense(ExactMatrix(2, 3)), Error);
    EXPECT_THROW(is_stoquastic_dense(ExactMatrix(2, 2), Rational(-1)), Error);
    EXPECT_THROW(is_stoquastic_dense(ComplexMatrix(2, 3)), Error);
}

TEST(stoq_dense, float_tolerance) {
    ComplexMatrix m(2, 2);
    m(0, 1) = m(1, 0) = 1e-12;
    EXPECT_TRUE(is_stoquastic_dense(m).stoquastic());
    EXPECT_FALSE(is_stoquastic_dense(m, 0.0).stoquastic());
    m(0, 1) = {0.0, 1e-6};
    EXPECT_FALSE(is_stoquastic_dense(m).stoquastic());
}

TEST(stoq_dense, agrees_with_oracle_on_random_hamiltonians) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + trial % 4;
        const auto h = oracle::random_grouped(rng, n, 2, n);
        EXPECT_EQ(is_stoquastic_dense(to_dense(h.flattened())).stoquastic(), oracle::stoquastic(oracle::dense(h)));
        EXPECT_EQ(is_stoquastic_grouped(h).stoquastic(), oracle::grouped_stoquastic(h));
    }
}

TEST(stoq_pauli_sum, same_verdict_and_witness_as_dense) {
    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t n = 1 + trial % 5;
        const auto h = oracle::random_grouped(rng, n, 3, n).flattened();
        const StoqReport a = is_stoquastic_dense(to_dense(h));
        const StoqReport b = is_stoquastic_pauli_sum(h);
        ASSERT_EQ(a.stoquastic(), b.stoquastic()) << trial;
        if (!a.stoquastic()) {
            EXPECT_EQ(a.witness->row, b.witness->row);
            EXPECT_EQ(a.witness->col, b.witness->col);
            EXPECT_EQ(a.witness->value, b.witness->value);
        }
    }
}

TEST(stoq_pauli_sum, real_path_matches_exact_path) {
    std::mt19937_64 rng(33);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + trial % 6;
        const auto h = oracle::random_grouped(rng, n, 3, n, true).flattened();
        const StoqReport a = is_stoquastic_pauli_sum(h);
        const StoqReport b = is_stoquastic_pauli_sum(to_real(h));
        ASSERT_EQ(a.stoquastic(), b.stoquastic()) << trial;
        if (!a.stoquastic()) {
            EXPECT_EQ(a.witness->row, b.witness->row);
            EXPECT_EQ(a.witness->col, b.witness->col);
            EXPECT_EQ(a.witness->value, b.witness->value);
        }
        EXPECT_EQ(is_stoquastic_pauli_sum(to_real(h), kFloatTolerance, {24}, false).stoquastic(), a.stoquastic());
    }
}

TEST(stoq_pauli_sum, grouped_stoquastic_implies_whole_stoquastic) {
    std::mt19937_64 rng(34);
    int grouped_passes = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const auto h = oracle::random_grouped(rng, 4, 3, 2);
        if (!is_stoquastic_grouped(h).stoquastic()) continue;
        ++grouped_passes;
        EXPECT_TRUE(is_stoquastic_pauli_sum(h.flattened()).stoquastic());
    }
    EXPECT_GT(grouped_passes, 0);
}

TEST(stoq_pauli_sum, part_check_uses_local_support) {
    // A single 2-local part inside 30 qubits must still be cheap.
    std::string s(30, 'I');
    s[3] = 'X';
    s[17] = 'Z';
    std::string t(30, 'I');
    t[3] = 'X';
    const auto part = Hamiltonian::collect({T{GaussRational(1), PauliString(s)}, T{GaussRational(-2), PauliString(t)}});
    EXPECT_TRUE(part_is_stoquastic(part));
    EXPECT_THROW(is_stoquastic_pauli_sum(part), Error);
}

TEST(multisets, definition_on_two_by_two) {
    ExactMatrix m(2, 2);
    m(0, 0) = GaussRational(1);
    m(0, 1) = GaussRational(2);
    m(1, 0) = GaussRational(3);
    m(1, 1) = GaussRational(4);
    EXPECT_EQ(off_diagonal_multiset(m), (std::vector<GaussRational>{GaussRational(2), GaussRational(3)}));
    ExactMatrix d(3, 3);
    for (const auto &e : off_diagonal_multiset(d)) EXPECT_TRUE(e.is_zero());
    EXPECT_EQ(off_diagonal_multiset(d).size(), 6u);
    EXPECT_THROW(off_diagonal_multiset(ExactMatrix(1, 2)), Error);
}

TEST(multisets, x_conjugation_only_shuffles_entries) {
    std::mt19937_64 rng(35);
    for (int trial = 0; trial < 50; ++trial) {
        const ExactMatrix b = random_real_matrix(rng, 4, false);
        const auto off = off_diagonal_multiset(b);
        const auto diag = diagonal_multiset(b);
        for (std::uint64_t a = 0; a < 4; ++a) {
            ExactMatrix u = oracle::kron(oracle::pauli((a & 2) ? 'X' : 'I'), oracle::pauli((a & 1) ? 'X' : 'I'));
            const ExactMatrix c = oracle::mul(oracle::mul(u, b), u);
            EXPECT_EQ(off_diagonal_multiset(c), off);
            EXPECT_EQ(diagonal_multiset(c), diag);
        }
    }
}

TEST(multisets, partial_trace_keeps_stoquasticity) {
    std::mt19937_64 rng(36);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 2 + trial % 4;
        const ExactMatrix b = random_real_matrix(rng, std::size_t{1} << n, true);
        ASSERT_TRUE(is_stoquastic_dense(b).stoquastic());
        for (std::size_t q = 0; q < n; ++q) EXPECT_TRUE(is_stoquastic_dense(partial_trace(b, q)).stoquastic());
    }
}

}  // namespace
}  // namespace stoqcure
