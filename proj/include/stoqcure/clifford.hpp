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
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "stoqcure/pauli.hpp"

namespace stoqcure {

struct SignedPauli {
    int sign = 1;  // +1 or -1
    char letter = 'I';
    bool operator==(const SignedPauli &) const = default;
};

/// A single-qubit Clifford element modulo global phase, stored as its
/// conjugation action u P u^dagger on X and Z. The image of Y follows from
/// Y = iXZ. There are exactly 24 of them.
class CliffordGate {
   public:
    /// Identity.
    CliffordGate() = default;

    /// Throws InvalidInput unless the images are distinct non-identity letters.
    static CliffordGate from_images(SignedPauli x_image, SignedPauli z_image);

    /// All 24 elements in canonical order (identity first). The order sorts by
    /// X image letter (X, Y, Z), X sign (+ before -), Z image letter (Z, X, Y)
    /// and Z sign.
    static const std::array<CliffordGate, 24> &all();

    /// Parses a product word over {I, X, Y, Z, W, P} (aliases H = W, S = P).
    /// "XW" is the operator product X*W, which conjugates by W first.
    static CliffordGate parse(std::string_view word);

    static CliffordGate identity() { return {}; }
    static CliffordGate hadamard() { return parse("W"); }
    static CliffordGate phase() { return parse("P"); }
    static CliffordGate pauli(char letter);

    SignedPauli image(char letter) const;
    SignedPauli x_image() const { return x_; }
    SignedPauli z_image() const { return z_; }
    SignedPauli y_image() const { return image('Y'); }

    CliffordGate inverse() const;
    /// Operator product: (a * b) conjugates by b first, then by a.
    friend CliffordGate operator*(const CliffordGate &a, const CliffordGate &b);

    /// Position in all().
    std::size_t index() const;
    /// Shortest word over I, X, Y, Z, W, P naming this element ("XW", "PW", ...).
    const std::string &label() const;

    /// Determinant of the signed 3x3 permutation matrix acting on (X, Y, Z).
    int orientation() const;

    bool operator==(const CliffordGate &) const = default;

   private:
    CliffordGate(SignedPauli x, SignedPauli z) : x_(x), z_(z) {}
    SignedPauli x_{1, 'X'};
    SignedPauli z_{1, 'Z'};
};

/// One gate per qubit: either a Clifford element or a rotation angle
/// R(theta) = [[cos, -sin], [sin, cos]].
using GateEntry = std::variant<CliffordGate, double>;

struct GateAssignment {
    std::vector<GateEntry> gates;

    static GateAssignment cliffords(std::span<const CliffordGate> gs);
    static GateAssignment rotations(std::span<const double> thetas);

    std::size_t size() const { return gates.size(); }
    bool all_clifford() const;
    bool all_rotation() const;
    /// Throws InvalidInput if some entry is a rotation.
    std::vector<CliffordGate> clifford_gates() const;
    /// Throws InvalidInput if some entry is a Clifford element. Angles come back canonical.
    std::vector<double> rotation_angles() const;
};

/// Maps theta into (-pi/2, pi/2]; conjugation by R(theta) has period pi.
double canonical_angle(double theta);

/// sin 2theta and cos 2theta. When 2theta is within 1e-12 of a multiple of
/// pi/2 the values are the exact 0/+-1 instead of the libm result.
struct DoubledSinCos {
    double sin2 = 0.0;
    double cos2 = 1.0;
    bool exact = false;
};
DoubledSinCos doubled_sincos(double theta);

/// Conjugates every term letterwise: U h U^dagger with U = (x) g_q. Exact.
Hamiltonian conjugate_clifford(const Hamiltonian &h, std::span<const CliffordGate> gates);
Hamiltonian conjugate_clifford(const Hamiltonian &h, const GateAssignment &gates);
RealHamiltonian conjugate_clifford(const RealHamiltonian &h, std::span<const CliffordGate> gates);

/// R h R^T with R = (x) R(theta_q), expanding
///   R X R^T = cos2t X - sin2t Z,  R Z R^T = sin2t X + cos2t Z.
/// Real coefficients and {I, X, Z} letters only (UnsupportedLetter on Y).
RealHamiltonian conjugate_rotation(const RealHamiltonian &h, std::span<const double> thetas);
RealHamiltonian conjugate_rotation(const Hamiltonian &h, std::span<const double> thetas);
RealHamiltonian conjugate_rotation(const Hamiltonian &h, const GateAssignment &angles);

/// Clifford element with the same conjugation action as R(theta) for theta a
/// multiple of pi/4: 0 -> I, pi/2 -> Y, pi/4 -> XW, -pi/4 -> WX.
/// Throws InvalidInput for other angles.
CliffordGate rotation_as_clifford(double theta);

}  // namespace stoqcure
