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


#include "stoqcure/pauli_cure.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

#include "stoqcure/error.hpp"
#include "stoqcure/stoq.hpp"

namespace stoqcure {

namespace {

using Row = std::vector<std::uint64_t>;

bool get_bit(const Row &row, std::size_t i) { return (row[i / 64] >> (i % 64)) & 1; }
void flip_bit(Row &row, std::size_t i) { row[i / 64] ^= std::uint64_t{1} << (i % 64); }

void xor_into(Row &dst, const Row &src) {
    for (std::size_t w = 0; w < dst.size(); ++w) dst[w] ^= src[w];
}

std::string bits_to_string(const std::vector<std::uint8_t> &bits) {
    std::string s;
    for (auto b : bits) s.push_back(b ? '1' : '0');
    return s;
}

}  // namespace

std::optional<Gf2Solution> solve_gf2(const Gf2System &system) {
    const std::size_t n = system.n_vars;
    const std::size_t words = (n + 1 + 63) / 64;
    std::vector<Row> rows;
    for (const auto &eq : system.equations) {
        Row row(words, 0);
        for (std::size_t v : eq.vars) {
            if (v >= n) throw Error(ErrorCode::InvalidInput, "equation refers to an unknown variable");
            flip_bit(row, v);
        }
        if (eq.parity) flip_bit(row, n);
        rows.push_back(std::move(row));
    }

    std::vector<std::size_t> pivot_cols;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
        std::size_t pick = rank;
        while (pick < rows.size() && !get_bit(rows[pick], col)) ++pick;
        if (pick == rows.size()) continue;
        std::swap(rows[rank], rows[pick]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r != rank && get_bit(rows[r], col)) xor_into(rows[r], rows[rank]);
        }
        pivot_cols.push_back(col);
        ++rank;
    }
    for (std::size_t r = rank; r < rows.size(); ++r) {
        if (get_bit(rows[r], n)) return std::nullopt;
    }

    Gf2Solution sol;
    sol.particular.assign(n, 0);
    std::vector<bool> is_pivot(n, false);
    for (std::size_t r = 0; r < rank; ++r) {
        is_pivot[pivot_cols[r]] = true;
        sol.particular[pivot_cols[r]] = get_bit(rows[r], n);
    }
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        sol.free_vars.push_back(f);
        std::vector<std::uint8_t> v(n, 0);
        v[f] = 1;
        for (std::size_t r = 0; r < rank; ++r) v[pivot_cols[r]] = get_bit(rows[r], f);
        sol.basis.push_back(std::move(v));
    }
    return sol;
}

std::vector<std::string> enumerate_gf2(const Gf2Solution &solution, std::size_t max_solutions) {
    const std::size_t k = solution.basis.size();
    if (k >= 63 || (std::size_t{1} << k) > max_solutions) {
        throw Error(ErrorCode::BudgetExceeded, "solution space has 2^" + std::to_string(k) + " elements");
    }
    std::vector<std::string> out;
    out.reserve(std::size_t{1} << k);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        std::vector<std::uint8_t> x = solution.particular;
        for (std::size_t b = 0; b < k; ++b) {
            if ((mask >> b) & 1) {
                for (std::size_t i = 0; i < x.size(); ++i) x[i] ^= solution.basis[b][i];
            }
        }
        out.push_back(bits_to_string(x));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<XComponentGroup> extract_x_groups(const Hamiltonian &h_a) {
    const std::size_t n = h_a.num_qubits();
    std::map<std::string, std::vector<Hamiltonian::TermType>> by_pattern;
    for (const auto &t : h_a.terms()) {
        std::string xs(n, 'I');
        std::string zs(n, 'I');
        for (std::size_t q = 0; q < n; ++q) {
            const char c = t.paulis[q];
            if (c == 'X' || c == 'Y') xs[q] = 'X';
            if (c == 'Z' || c == 'Y') zs[q] = 'Z';
        }
        if (xs.find('X') == std::string::npos) continue;
        // Y = iXZ, so the string equals i^#Y X^x Z^z.
        const unsigned y = static_cast<unsigned>(t.paulis.count('Y'));
        GaussRational c = times_minus_i_pow(t.coeff, (4 - y % 4) % 4);
        by_pattern[xs].push_back({std::move(c), PauliString(zs)});
    }
    std::vector<XComponentGroup> out;
    for (auto &[pattern, terms] : by_pattern) {
        Hamiltonian z = Hamiltonian::collect(n, std::move(terms));
        if (z.empty()) continue;
        PauliString p(pattern);
        out.push_back({p, std::move(z), p.support()});
    }
    return out;
}

SignClass sign_constraint(const XComponentGroup &g) {
    const std::vector<std::size_t> qubits = g.z_part.support();
    if (qubits.size() > 30) throw Error(ErrorCode::TooLarge, "diagonal factor acts on too many qubits");
    std::vector<GaussRational> coeffs;
    std::vector<std::uint64_t> masks;
    for (const auto &t : g.z_part.terms()) {
        coeffs.push_back(t.coeff);
        masks.push_back(t.paulis.restricted(qubits).z_mask());
    }
    bool pos = false;
    bool neg = false;
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << qubits.size()); ++b) {
        GaussRational d;
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            if (std::popcount(b & masks[k]) & 1) {
                d -= coeffs[k];
            } else {
                d += coeffs[k];
            }
        }
        if (!d.is_real()) return SignClass::Mixed;
        pos |= sgn(d.re) > 0;
        neg |= sgn(d.re) < 0;
        if (pos && neg) return SignClass::Mixed;
    }
    return pos ? SignClass::AlwaysNonneg : SignClass::AlwaysNonpos;
}

std::vector<CliffordGate> z_string_gates(const std::string &x) {
    std::vector<CliffordGate> gates;
    for (char c : x) gates.push_back(c == '1' ? CliffordGate::pauli('Z') : CliffordGate::identity());
    return gates;
}

PauliCureResult cure_with_pauli(const Hamiltonian &h) {
    const Hamiltonian local = h.has_groups() ? h : h.as_single_group();
    const std::vector<Hamiltonian> parts = local.parts();

    PauliCureResult result;
    result.system.n_vars = h.num_qubits();
    for (std::size_t a = 0; a < parts.size(); ++a) {
        for (const auto &g : extract_x_groups(parts[a])) {
            const SignClass cls = sign_constraint(g);
            if (cls == SignClass::Mixed) {
                result.reason = "group " + std::to_string(a) + ", X pattern " + g.x_pattern.str() +
                                ": diagonal factor has entries of both signs";
                return result;
            }
            result.system.equations.push_back({g.support, cls == SignClass::AlwaysNonneg});
        }
    }
    result.solution = solve_gf2(result.system);
    if (!result.solution) {
        result.reason = "sign constraints are inconsistent mod 2";
        return result;
    }
    result.status = PauliCureStatus::Cured;
    result.x = bits_to_string(result.solution->particular);

    const Hamiltonian cured = conjugate_clifford(local, z_string_gates(result.x));
    for (const auto &part : cured.parts()) {
        if (!part_is_stoquastic(part, Rational(0), DenseLimits{30})) {
            throw std::logic_error("Pauli cure failed its own verification");
        }
    }
    return result;
}

std::vector<std::string> all_pauli_cures(const Hamiltonian &h, std::size_t max_solutions) {
    const PauliCureResult r = cure_with_pauli(h);
    if (!r.cured()) return {};
    return enumerate_gf2(*r.solution, max_solutions);
}

}  // namespace stoqcure
