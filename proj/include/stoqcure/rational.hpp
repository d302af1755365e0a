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

#include <gmpxx.h>

#include <complex>
#include <string>
#include <string_view>

namespace stoqcure {

using Rational = mpq_class;

/// Parses "3", "-2.5", "1e-3", "0.125E2" or "p/q" into an exact rational.
/// Throws Error(ParseError) on anything else.
Rational parse_rational(std::string_view text);

/// Integers print as "p", terminating decimals as "d.ddd", everything else as "p/q".
std::string format_rational(const Rational &value);

inline double to_double(const Rational &value) { return value.get_d(); }

/// Exact complex number with rational real and imaginary parts.
struct GaussRational {
    Rational re{0};
    Rational im{0};

    GaussRational() = default;
    GaussRational(Rational real) : re(std::move(real)) {}  // NOLINT(google-explicit-constructor)
    GaussRational(Rational real, Rational imag) : re(std::move(real)), im(std::move(imag)) {}
    GaussRational(long value) : re(value) {}  // NOLINT(google-explicit-constructor)
    GaussRational(int value) : re(value) {}   // NOLINT(google-explicit-constructor)

    static GaussRational i() { return {Rational(0), Rational(1)}; }

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    bool is_real() const { return sgn(im) == 0; }
    GaussRational conj() const { return {re, -im}; }
    /// |z|^2, exact.
    Rational norm() const { return re * re + im * im; }

    GaussRational &operator+=(const GaussRational &o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussRational &operator-=(const GaussRational &o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussRational &operator*=(const GaussRational &o) {
        Rational r = re * o.re - im * o.im;
        Rational m = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(m);
        return *this;
    }
    GaussRational operator-() const { return {-re, -im}; }

    friend GaussRational operator+(GaussRational a, const GaussRational &b) { return a += b; }
    friend GaussRational operator-(GaussRational a, const GaussRational &b) { return a -= b; }
    friend GaussRational operator*(GaussRational a, const GaussRational &b) { return a *= b; }
    friend bool operator==(const GaussRational &a, const GaussRational &b) {
        return a.re == b.re && a.im == b.im;
    }
    /// Lexicographic (re, im); only used to sort multisets deterministically.
    friend bool operator<(const GaussRational &a, const GaussRational &b) {
        if (a.re != b.re) return a.re < b.re;
        return a.im < b.im;
    }

    std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }
    std::string str() const;
};

/// Multiplies by (-i)^k, k taken mod 4.
GaussRational times_minus_i_pow(GaussRational value, unsigned k);

}  // namespace stoqcure
