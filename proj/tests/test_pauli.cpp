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
#include "stoqcure/dense.hpp"
#include "stoqcure/error.hpp"
#include "stoqcure/pauli.hpp"

namespace stoqcure {
namespace {

using T = Hamiltonian::TermType;

T term(long c, const char *s) { return {GaussRational(c), PauliString(s)}; }

TEST(pauli_string, masks_follow_leftmost_is_most_significant) {
    const PauliString p("XYZI");
    EXPECT_EQ(p.x_mask(), 0b1100u);
    EXPECT_EQ(p.z_mask(), 0b0110u);
    EXPECT_EQ(p.weight(), 3u);
    EXPECT_EQ(p.support(), (std::vector<std::size_t>{0, 1, 2}));
    EXPECT_EQ(p.count('Y'), 1u);
    const std::vector<std::size_t> q{2, 0};
    EXPECT_EQ(p.restricted(q).str(), "ZX");
}

TEST(pauli_string, rejects_bad_letters) { EXPECT_THROW(PauliString("XQ"), Error); }

TEST(hamiltonian, collect_merges_and_cancels) {
    const auto merged = Hamiltonian::collect({term(1, "XI"), term(2, "XI")});
    ASSERT_EQ(merged.terms().size(), 1u);
    EXPECT_EQ(merged.terms()[0].coeff, GaussRational(3));
    EXPECT_EQ(merged.terms()[0].paulis.str(), "XI");

    EXPECT_TRUE(Hamiltonian::collect({term(1, "XI"), term(-1, "XI")}).empty());
}

TEST(hamiltonian, mixed_lengths_are_rejected) {
    try {
        Hamiltonian::collect({term(1, "X"), term(1, "XY")});
        FAIL() << "expected MixedLength";
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::MixedLength);
    }
}

TEST(hamiltonian, groups_keep_repeated_strings_apart) {
    const auto a = Hamiltonian::collect(2, {term(1, "XI")});
    const auto b = Hamiltonian::collect(2, {term(2, "XI"), term(1, "IZ")});
    const auto h = Hamiltonian::from_groups(2, {a, b});
    EXPECT_EQ(h.terms().size(), 3u);
    EXPECT_EQ(h.num_groups(), 2u);
    EXPECT_EQ(h.coefficient_of(PauliString("XI")), GaussRational(3));
    EXPECT_EQ(h.flattened().terms().size(), 2u);
    EXPECT_EQ(h.group(1).terms().size(), 2u);
}

TEST(hamiltonian, from_terms_checks_the_partition) {
    std::vector<T> ts{term(1, "XI"), term(1, "IZ")};
    EXPECT_THROW(Hamiltonian::from_terms(2, ts, Groups{{0}}), Error);
    EXPECT_THROW(Hamiltonian::from_terms(2, ts, Groups{{0, 1}, {1}}), Error);
    EXPECT_THROW(Hamiltonian::from_terms(2, ts, Groups{{0, 2}}), Error);
    EXPECT_NO_THROW(Hamiltonian::from_terms(2, ts, Groups{{1}, {0}}));
}

TEST(hamiltonian, ungrouped_terms_are_singleton_groups) {
    const auto h = Hamiltonian::collect({term(1, "XI"), term(1, "IZ"), term(2, "ZZ")});
    EXPECT_FALSE(h.has_groups());
    EXPECT_EQ(h.num_groups(), 3u);
    EXPECT_EQ(h.as_single_group().num_groups(), 1u);
}

TEST(hamiltonian, complex_coefficients_do_not_become_real) {
    const auto h = Hamiltonian::collect({T{GaussRational(Rational(0), Rational(1)), PauliString("X")}});
    EXPECT_THROW(to_real(h), Error);
    const auto r = to_real(Hamiltonian::collect({T{GaussRational(Rational(1, 4)), PauliString("X")}}));
    EXPECT_EQ(r.terms()[0].coeff, 0.25);
    EXPECT_EQ(to_exact(r).terms()[0].coeff, GaussRational(Rational(1, 4)));
}

TEST(dense, single_qubit_paulis) {
    const ExactMatrix z = to_dense(Hamiltonian::collect({term(1, "Z")}));
    EXPECT_EQ(z(0, 0), GaussRational(1));
    EXPECT_EQ(z(1, 1), GaussRational(-1));
    EXPECT_TRUE(z(0, 1).is_zero());
    const ExactMatrix x = to_dense(Hamiltonian::collect({term(1, "X")}));
    EXPECT_EQ(x(0, 1), GaussRational(1));
    EXPECT_EQ(x(1, 0), GaussRational(1));
    EXPECT_TRUE(x(0, 0).is_zero());
}

TEST(dense, sum_example_has_offdiagonals_minus_one_and_minus_three) {
    const ExactMatrix m = to_dense(Hamiltonian::collect({term(-2, "XI"), term(1, "XZ")}));
    std::vector<GaussRational> seen;
    for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t c = 0; c < 4; ++c) {
            if (r != c && !m(r, c).is_zero()) seen.push_back(m(r, c));
        }
    }
    ASSERT_EQ(seen.size(), 4u);
    for (const auto &e : seen) EXPECT_TRUE(e == GaussRational(-1) || e == GaussRational(-3));
}

TEST(dense, matches_kronecker_oracle) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 1 + trial % 4;
        const auto h = oracle::random_grouped(rng, n, 3, n).flattened();
        EXPECT_EQ(to_dense(h), oracle::dense(h)) << trial;
    }
}

TEST(dense, real_expansion_matches_exact) {
    std::mt19937_64 rng(12);
    const auto h = oracle::random_grouped(rng, 3, 4, 3, true).flattened();
    const ComplexMatrix a = to_dense(to_real(h));
    const ComplexMatrix b = to_complex(to_dense(h));
    EXPECT_EQ(a, b);
}

TEST(dense, refuses_past_the_cap) {
    const auto h = Hamiltonian::collect({T{GaussRational(1), PauliString::identity(5)}});
    EXPECT_THROW(to_dense(h, DenseLimits{4}), Error);
}

TEST(dense, partial_trace_of_kron) {
    // Tr_0 (Z (x) X) = 0 and Tr_1 (I (x) X) = 0 while Tr_0 (I (x) X) = 2X.
    const auto m = to_dense(Hamiltonian::collect({term(1, "IX")}));
    const ExactMatrix t0 = partial_trace(m, 0);
    EXPECT_EQ(t0(0, 1), GaussRational(2));
    const ExactMatrix t1 = partial_trace(m, 1);
    for (const auto &e : t1.data()) EXPECT_TRUE(e.is_zero());
}

}  // namespace
}  // namespace stoqcure
