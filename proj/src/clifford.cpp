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

#include "stoqcure/clifford.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "stoqcure/error.hpp"

namespace stoqcure {

namespace {

int letter_rank(char c) {
    switch (c) {
        case 'X': return 0;
        case 'Y': return 1;
        case 'Z': return 2;
        default: return 3;
    }
}

// P*Q = eps * i * R for distinct non-identity P, Q.
struct LetterProduct {
    int eps;
    char letter;
};

LetterProduct multiply_distinct(char p, char q) {
    if (p == 'X' && q == 'Y') return {1, 'Z'};
    if (p == 'Y' && q == 'Z') return {1, 'X'};
    if (p == 'Z' && q == 'X') return {1, 'Y'};
    if (p == 'Y' && q == 'X') return {-1, 'Z'};
    if (p == 'Z' && q == 'Y') return {-1, 'X'};
    return {-1, 'Y'};  // X*Z = -iY
}

std::array<CliffordGate, 24> build_all() {
    std::vector<CliffordGate> gates;
    const char letters[] = {'X', 'Y', 'Z'};
    for (char xl : letters) {
        for (int xs : {1, -1}) {
            for (char zl : letters) {
                if (zl == xl) continue;
                for (int zs : {1, -1}) gates.push_back(CliffordGate::from_images({xs, xl}, {zs, zl}));
            }
        }
    }
    auto key = [](const CliffordGate &g) {
        // Z images are ranked Z, X, Y so the identity comes first.
        return std::tuple(letter_rank(g.x_image().letter), -g.x_image().sign,
                          (letter_rank(g.z_image().letter) + 1) % 3, -g.z_image().sign);
    };
    std::sort(gates.begin(), gates.end(), [&](const auto &a, const auto &b) { return key(a) < key(b); });
    std::array<CliffordGate, 24> out;
    std::copy(gates.begin(), gates.end(), out.begin());
    return out;
}

CliffordGate generator(char c) {
    switch (c) {
        case 'I': return CliffordGate::from_images({1, 'X'}, {1, 'Z'});
        case 'X': return CliffordGate::from_images({1, 'X'}, {-1, 'Z'});
        case 'Y': return CliffordGate::from_images({-1, 'X'}, {-1, 'Z'});
        case 'Z': return CliffordGate::from_images({-1, 'X'}, {1, 'Z'});
        case 'W':
        case 'H': return CliffordGate::from_images({1, 'Z'}, {1, 'X'});
        case 'P':
        case 'S': return CliffordGate::from_images({1, 'Y'}, {1, 'Z'});
        default: throw Error(ErrorCode::ParseError, "unknown Clifford generator '" + std::string(1, c) + "'");
    }
}

std::array<std::string, 24> build_labels() {
    std::array<std::string, 24> labels;
    std::size_t found = 0;
    const std::string gens = "IXYZWP";
    std::vector<std::string> frontier = {""};
    while (found < 24) {
        std::vector<std::string> next;
        for (const auto &w : frontier) {
            for (char g : gens) {
                std::string word = w + g;
                next.push_back(word);
                const std::size_t idx = CliffordGate::parse(word).index();
                if (labels[idx].empty()) {
                    labels[idx] = word;
                    ++found;
                }
            }
        }
        frontier = std::move(next);
    }
    return labels;
}

}  // namespace

CliffordGate CliffordGate::from_images(SignedPauli x_image, SignedPauli z_image) {
    auto valid = [](const SignedPauli &s) {
        return (s.sign == 1 || s.sign == -1) && (s.letter == 'X' || s.letter == 'Y' || s.letter == 'Z');
    };
    if (!valid(x_image) || !valid(z_image) || x_image.letter == z_image.letter) {
        throw Error(ErrorCode::InvalidInput, "Clifford images of X and Z must be distinct signed Paulis");
    }
    return CliffordGate(x_image, z_image);
}

const std::array<CliffordGate, 24> &CliffordGate::all() {
    static const std::array<CliffordGate, 24> gates = build_all();
    return gates;
}

CliffordGate CliffordGate::parse(std::string_view word) {
    if (word.empty()) throw Error(ErrorCode::ParseError, "empty Clifford word");
    CliffordGate g;
    for (char c : word) g = g * generator(c);
    return g;
}

CliffordGate CliffordGate::pauli(char letter) {
    if (!is_pauli_letter(letter)) throw Error(ErrorCode::ParseError, "not a Pauli letter");
    return generator(letter);
}

SignedPauli CliffordGate::image(char letter) const {
    switch (letter) {
        case 'I': return {1, 'I'};
        case 'X': return x_;
        case 'Z': return z_;
        case 'Y': {
            // u Y u^dag = i (u X u^dag)(u Z u^dag) = i sx sz (eps i R) = -eps sx sz R
            const LetterProduct p = multiply_distinct(x_.letter, z_.letter);
            return {-p.eps * x_.sign * z_.sign, p.letter};
        }
        default: throw Error(ErrorCode::ParseError, "not a Pauli letter");
    }
}

CliffordGate operator*(const CliffordGate &a, const CliffordGate &b) {
    auto compose = [&](char letter) {
        const SignedPauli inner = b.image(letter);
        const SignedPauli outer = a.image(inner.letter);
        return SignedPauli{inner.sign * outer.sign, outer.letter};
    };
    return CliffordGate(compose('X'), compose('Z'));
}

CliffordGate CliffordGate::inverse() const {
    for (const auto &g : all()) {
        if (g * *this == CliffordGate()) return g;
    }
    throw Error(ErrorCode::InvalidInput, "Clifford element without inverse");  // unreachable
}

std::size_t CliffordGate::index() const {
    const auto &gs = all();
    return static_cast<std::size_t>(std::find(gs.begin(), gs.end(), *this) - gs.begin());
}

const std::string &CliffordGate::label() const {
    static const std::array<std::string, 24> labels = build_labels();
    return labels[index()];
}

int CliffordGate::orientation() const {
    int m[3][3] = {};
    const char basis[] = {'X', 'Y', 'Z'};
    for (int j = 0; j < 3; ++j) {
        const SignedPauli s = image(basis[j]);
        m[letter_rank(s.letter)][j] = s.sign;
    }
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

// ---------------------------------------------------------------------------

GateAssignment GateAssignment::cliffords(std::span<const CliffordGate> gs) {
    GateAssignment a;
    a.gates.assign(gs.begin(), gs.end());
    return a;
}

GateAssignment GateAssignment::rotations(std::span<const double> thetas) {
    GateAssignment a;
    for (double t : thetas) a.gates.emplace_back(canonical_angle(t));
    return a;
}

bool GateAssignment::all_clifford() const {
    return std::all_of(gates.begin(), gates.end(), [](const GateEntry &e) { return std::holds_alternative<CliffordGate>(e); });
}

bool GateAssignment::all_rotation() const {
    return std::all_of(gates.begin(), gates.end(), [](const GateEntry &e) { return std::holds_alternative<double>(e); });
}

std::vector<CliffordGate> GateAssignment::clifford_gates() const {
    std::vector<CliffordGate> out;
    for (const auto &e : gates) {
        if (!std::holds_alternative<CliffordGate>(e)) {
            throw Error(ErrorCode::InvalidInput, "assignment contains a rotation where a Clifford gate is required");
        }
        out.push_back(std::get<CliffordGate>(e));
    }
    return out;
}

std::vector<double> GateAssignment::rotation_angles() const {
    std::vector<double> out;
    for (const auto &e : gates) {
        if (!std::holds_alternative<double>(e)) {
            throw Error(ErrorCode::InvalidInput, "assignment contains a Clifford gate where an angle is required");
        }
        out.push_back(canonical_angle(std::get<double>(e)));
    }
    return out;
}

double canonical_angle(double theta) {
    constexpr double pi = std::numbers::pi;
    double r = std::fmod(theta, pi);
    if (r > pi / 2) r -= pi;
    if (r <= -pi / 2) r += pi;
    // Snap values that land a rounding error below the open end.
    if (std::abs(r + pi / 2) < 1e-15) r = pi / 2;
    return r;
}

DoubledSinCos doubled_sincos(double theta) {
    const double quarter_turns = 4.0 * theta / std::numbers::pi;  // 2theta in units of pi/2
    const double k = std::round(quarter_turns);
    if (std::abs(quarter_turns - k) < 1e-12) {
        const long m = ((static_cast<long>(k) % 4) + 4) % 4;
        static constexpr double sin_table[] = {0.0, 1.0, 0.0, -1.0};
        static constexpr double cos_table[] = {1.0, 0.0, -1.0, 0.0};
        return {sin_table[m], cos_table[m], true};
    }
    return {std::sin(2.0 * theta), std::cos(2.0 * theta), false};
}

// ---------------------------------------------------------------------------

namespace {

template <class Coeff>
BasicHamiltonian<Coeff> conjugate_clifford_impl(const BasicHamiltonian<Coeff> &h,
                                                std::span<const CliffordGate> gates) {
    if (gates.size() != h.num_qubits()) {
        throw Error(ErrorCode::InvalidInput, "gate assignment has " + std::to_string(gates.size()) +
                                                 " entries for " + std::to_string(h.num_qubits()) + " qubits");
    }
    return h.template map_terms<Coeff>([&](const Term<Coeff> &t) {
        std::string letters = t.paulis.str();
        int sign = 1;
        for (std::size_t q = 0; q < letters.size(); ++q) {
            if (letters[q] == 'I') continue;
            const SignedPauli img = gates[q].image(letters[q]);
            sign *= img.sign;
            letters[q] = img.letter;
        }
        Coeff c = t.coeff;
        if (sign < 0) c = -c;
        return std::vector<Term<Coeff>>{{std::move(c), PauliString(std::move(letters))}};
    });
}

}  // namespace

Hamiltonian conjugate_clifford(const Hamiltonian &h, std::span<const CliffordGate> gates) {
    return conjugate_clifford_impl(h, gates);
}

Hamiltonian conjugate_clifford(const Hamiltonian &h, const GateAssignment &gates) {
    const auto gs = gates.clifford_gates();
    return conjugate_clifford_impl(h, std::span<const CliffordGate>(gs));
}

RealHamiltonian conjugate_clifford(const RealHamiltonian &h, std::span<const CliffordGate> gates) {
    return conjugate_clifford_impl(h, gates);
}

RealHamiltonian conjugate_rotation(const RealHamiltonian &h, std::span<const double> thetas) {
    if (thetas.size() != h.num_qubits()) {
        throw Error(ErrorCode::InvalidInput, "angle list has " + std::to_string(thetas.size()) + " entries for " +
                                                 std::to_string(h.num_qubits()) + " qubits");
    }
    std::vector<DoubledSinCos> sc;
    sc.reserve(thetas.size());
    for (double t : thetas) sc.push_back(doubled_sincos(t));

    return h.map_terms<double>([&](const Term<double> &t) {
        std::vector<Term<double>> acc{{t.coeff, t.paulis}};
        for (std::size_t q = 0; q < t.paulis.size(); ++q) {
            const char letter = t.paulis[q];
            if (letter == 'I') continue;
            if (letter == 'Y') {
                throw Error(ErrorCode::UnsupportedLetter,
                            "rotation conjugation supports I, X, Z only; got \"" + t.paulis.str() + "\"");
            }
            const DoubledSinCos &r = sc[q];
            if (r.exact && r.sin2 == 0.0 && r.cos2 == 1.0) continue;
            // X -> cos X - sin Z ; Z -> sin X + cos Z
            const double to_x = letter == 'X' ? r.cos2 : r.sin2;
            const double to_z = letter == 'X' ? -r.sin2 : r.cos2;
            std::vector<Term<double>> next;
            next.reserve(acc.size() * 2);
            for (const auto &partial : acc) {
                if (to_x != 0.0) {
                    Term<double> a = partial;
                    a.paulis.set(q, 'X');
                    a.coeff *= to_x;
                    next.push_back(std::move(a));
                }
                if (to_z != 0.0) {
                    Term<double> b = partial;
                    b.paulis.set(q, 'Z');
                    b.coeff *= to_z;
                    next.push_back(std::move(b));
                }
            }
            acc = std::move(next);
        }
        return acc;
    });
}

RealHamiltonian conjugate_rotation(const Hamiltonian &h, std::span<const double> thetas) {
    for (const auto &t : h.terms()) {
        if (t.paulis.count('Y') > 0) {
            throw Error(ErrorCode::UnsupportedLetter,
                        "rotation conjugation supports I, X, Z only; got \"" + t.paulis.str() + "\"");
        }
    }
    return conjugate_rotation(to_real(h), thetas);
}

RealHamiltonian conjugate_rotation(const Hamiltonian &h, const GateAssignment &angles) {
    const auto thetas = angles.rotation_angles();
    return conjugate_rotation(h, std::span<const double>(thetas));
}

CliffordGate rotation_as_clifford(double theta) {
    const double t = canonical_angle(theta);
    const double quarter = 4.0 * t / std::numbers::pi;
    const double k = std::round(quarter);
    if (std::abs(quarter - k) > 1e-12) {
        throw Error(ErrorCode::InvalidInput, "angle is not a multiple of pi/4");
    }
    switch (static_cast<int>(k)) {
        case -1: return CliffordGate::parse("WX");
        case 0: return CliffordGate::identity();
        case 1: return CliffordGate::parse("XW");
        default: return CliffordGate::pauli('Y');
    }
}

}  // namespace stoqcure
