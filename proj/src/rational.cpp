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

#include "stoqcure/rational.hpp"

#include <cctype>
#include <regex>

#include "stoqcure/error.hpp"

namespace stoqcure {

namespace {

mpz_class pow10(unsigned long k) {
    mpz_class result;
    mpz_ui_pow_ui(result.get_mpz_t(), 10, k);
    return result;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    static const std::regex fraction(R"(^\s*([+-]?\d+)\s*/\s*(\d+)\s*$)");
    static const std::regex decimal(R"(^\s*([+-]?)(\d*)(?:\.(\d*))?(?:[eE]([+-]?\d+))?\s*$)");
    const std::string s(text);
    std::smatch m;
    if (std::regex_match(s, m, fraction)) {
        mpz_class num(m[1].str()[0] == '+' ? m[1].str().substr(1) : m[1].str(), 10);
        mpz_class den(m[2].str(), 10);
        if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + s + "'");
        Rational q(num, den);
        q.canonicalize();
        return q;
    }
    if (std::regex_match(s, m, decimal)) {
        const std::string int_part = m[2].str();
        const std::string frac_part = m[3].matched ? m[3].str() : std::string();
        if (int_part.empty() && frac_part.empty()) {
            throw Error(ErrorCode::ParseError, "not a number: '" + s + "'");
        }
        long exponent = 0;
        if (m[4].matched) {
            try {
                exponent = std::stol(m[4].str());
            } catch (const std::exception &) {
                throw Error(ErrorCode::ParseError, "exponent out of range in '" + s + "'");
            }
            if (exponent > 4096 || exponent < -4096) {
                throw Error(ErrorCode::ParseError, "exponent out of range in '" + s + "'");
            }
        }
        mpz_class digits(int_part + frac_part, 10);
        exponent -= static_cast<long>(frac_part.size());
        Rational q;
        if (exponent >= 0) {
            q = Rational(mpz_class(digits * pow10(static_cast<unsigned long>(exponent))));
        } else {
            q = Rational(digits, pow10(static_cast<unsigned long>(-exponent)));
            q.canonicalize();
        }
        if (m[1].str() == "-") q = -q;
        return q;
    }
    throw Error(ErrorCode::ParseError, "not a rational literal: '" + s + "'");
}

std::string format_rational(const Rational &value) {
    const mpz_class &num = value.get_num();
    const mpz_class &den = value.get_den();
    if (den == 1) return num.get_str();

    // Terminating decimal iff den = 2^a 5^b.
    mpz_class rest = den;
    unsigned long twos = mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), mpz_class(2).get_mpz_t());
    unsigned long fives = mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), mpz_class(5).get_mpz_t());
    if (rest != 1) return num.get_str() + "/" + den.get_str();

    const unsigned long places = std::max(twos, fives);
    mpz_class scaled = num * pow10(places) / den;
    const bool negative = scaled < 0;
    if (negative) scaled = -scaled;
    std::string digits = scaled.get_str();
    if (digits.size() <= places) digits.insert(0, places - digits.size() + 1, '0');
    digits.insert(digits.size() - places, ".");
    return (negative ? "-" : "") + digits;
}

std::string GaussRational::str() const {
    if (sgn(im) == 0) return format_rational(re);
    if (sgn(re) == 0) return format_rational(im) + "i";
    std::string imag = format_rational(im);
    if (imag[0] != '-') imag = "+" + imag;
    return format_rational(re) + imag + "i";
}

GaussRational times_minus_i_pow(GaussRational value, unsigned k) {
    switch (k % 4) {
        case 0: return value;
        case 1: return {value.im, -value.re};   // (a+bi)(-i) = b - ai
        case 2: return {-value.re, -value.im};
        default: return {-value.im, value.re};  // (a+bi)(i) = -b + ai
    }
}

}  // namespace stoqcure
