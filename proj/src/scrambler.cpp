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


#include "stoqcure/scrambler.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <numbers>
#include <set>

#include "stoqcure/error.hpp"
#include "stoqcure/stoq.hpp"

namespace stoqcure {

std::uint64_t bounded_draw(std::mt19937_64 &rng, std::uint64_t bound) {
    if (bound == 0) throw Error(ErrorCode::InvalidInput, "empty range");
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t v = rng();
    while (v >= limit) v = rng();
    return v % bound;
}

SecretKey random_key(std::size_t n, std::uint64_t seed, KeyKind kind) {
    std::mt19937_64 rng(seed);
    SecretKey key;
    key.seed = seed;
    for (std::size_t q = 0; q < n; ++q) {
        switch (kind) {
            case KeyKind::IW:
                key.gates.gates.emplace_back(bounded_draw(rng, 2) ? CliffordGate::hadamard() : CliffordGate::identity());
                break;
            case KeyKind::FullClifford:
                key.gates.gates.emplace_back(CliffordGate::all()[bounded_draw(rng, 24)]);
                break;
            case KeyKind::Rotation: {
                const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
                key.gates.gates.emplace_back(canonical_angle(std::numbers::pi * (u - 0.5)));
                break;
            }
        }
    }
    return key;
}

PlantedCnf generate_planted(std::size_t n, std::size_t m, std::uint64_t seed) {
    if (n < 3 || m < 1) throw Error(ErrorCode::InvalidInput, "need n >= 3 and m >= 1");
    const std::uint64_t triples = static_cast<std::uint64_t>(n) * (n - 1) * (n - 2) / 6;
    if (m > 7 * triples) {
        throw Error(ErrorCode::UnsatisfiableParameters,
                    std::to_string(m) + " clauses requested but only " + std::to_string(7 * triples) +
                        " distinct clauses are satisfied by a fixed assignment");
    }
    std::mt19937_64 rng(seed);
    PlantedCnf out;
    for (std::size_t i = 0; i < n; ++i) out.planted.push_back(bounded_draw(rng, 2) ? '1' : '0');

    std::set<Clause> seen;
    std::vector<Clause> clauses;
    while (clauses.size() < m) {
        std::array<std::size_t, 3> v{};
        v[0] = 1 + bounded_draw(rng, n);
        do v[1] = 1 + bounded_draw(rng, n); while (v[1] == v[0]);
        do v[2] = 1 + bounded_draw(rng, n); while (v[2] == v[0] || v[2] == v[1]);
        const std::uint64_t pol = bounded_draw(rng, 8);
        Clause c;
        std::array<std::size_t, 3> order{0, 1, 2};
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
        for (std::size_t s = 0; s < 3; ++s) {
            c.vars[s] = v[order[s]];
            c.polarity[s] = (pol >> (2 - order[s])) & 1;
        }
        if (!c.satisfied_by(out.planted) || !seen.insert(c).second) continue;
        clauses.push_back(c);
    }
    out.cnf = CnfInstance(n, std::move(clauses));
    return out;
}

namespace {

std::vector<CliffordGate> inverses(const std::vector<CliffordGate> &gates) {
    std::vector<CliffordGate> out;
    for (const auto &g : gates) out.push_back(g.inverse());
    return out;
}

std::vector<double> negated(std::vector<double> thetas) {
    for (auto &t : thetas) t = -t;
    return thetas;
}

}  // namespace

ScrambleResult scramble(const Hamiltonian &h, const SecretKey &key) {
    if (!is_stoquastic_grouped(h).stoquastic()) {
        throw Error(ErrorCode::NotStoquasticInput, "only stoquastic Hamiltonians can be scrambled");
    }
    ScrambleResult r;
    r.h = conjugate_clifford(h, inverses(key.gates.clifford_gates()));
    r.stoquastic = is_stoquastic_grouped(r.h).stoquastic();
    return r;
}

ScrambleResult descramble(const Hamiltonian &h, const SecretKey &key) {
    ScrambleResult r;
    r.h = conjugate_clifford(h, key.gates.clifford_gates());
    r.stoquastic = is_stoquastic_grouped(r.h).stoquastic();
    return r;
}

RotationScrambleResult scramble_rotation(const Hamiltonian &h, const SecretKey &key) {
    if (!is_stoquastic_grouped(h).stoquastic()) {
        throw Error(ErrorCode::NotStoquasticInput, "only stoquastic Hamiltonians can be scrambled");
    }
    RotationScrambleResult r;
    const std::vector<double> back = negated(key.gates.rotation_angles());
    r.h = conjugate_rotation(h, std::span<const double>(back));
    r.stoquastic = is_stoquastic_grouped(r.h).stoquastic();
    return r;
}

RotationScrambleResult descramble_rotation(const RealHamiltonian &h, const SecretKey &key) {
    RotationScrambleResult r;
    const std::vector<double> thetas = key.gates.rotation_angles();
    r.h = conjugate_rotation(h, std::span<const double>(thetas));
    r.stoquastic = is_stoquastic_grouped(r.h).stoquastic();
    return r;
}

double thermal_average(const ComplexMatrix &h, const ComplexMatrix &a, double beta) {
    if (!h.is_square() || !a.is_square() || h.rows() != a.rows()) {
        throw Error(ErrorCode::NotSquare, "thermal average needs square matrices of equal size");
    }
    const Eigen::Index dim = static_cast<Eigen::Index>(h.rows());
    Eigen::MatrixXcd hm(dim, dim);
    Eigen::MatrixXcd am(dim, dim);
    for (Eigen::Index r = 0; r < dim; ++r) {
        for (Eigen::Index c = 0; c < dim; ++c) {
            hm(r, c) = h(r, c);
            am(r, c) = a(r, c);
        }
    }
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(hm);
    const Eigen::VectorXd &e = eig.eigenvalues();
    // Shift by the ground energy so the weights stay in range.
    const Eigen::VectorXd w = (-beta * (e.array() - e.minCoeff())).exp();
    const Eigen::MatrixXcd &v = eig.eigenvectors();
    const Eigen::MatrixXcd a_eig = v.adjoint() * am * v;
    std::complex<double> num = 0;
    for (Eigen::Index k = 0; k < dim; ++k) num += w(k) * a_eig(k, k);
    return num.real() / w.sum();
}

}  // namespace stoqcure
