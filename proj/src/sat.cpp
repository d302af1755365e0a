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


#include "stoqcure/sat.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>
#include <unordered_map>

#include "stoqcure/clifford_cure.hpp"
#include "stoqcure/error.hpp"
#include "stoqcure/stoq.hpp"

namespace stoqcure {

namespace {

std::string letters_for(const Clause &clause, std::size_t slot_mask, std::size_t n_qubits, std::size_t qpv) {
    std::string s(n_qubits, 'I');
    for (std::size_t slot = 0; slot < 3; ++slot) {
        if (!((slot_mask >> slot) & 1)) continue;
        const char letter = clause.polarity[slot] ? 'Z' : 'X';
        const std::size_t first = (clause.vars[slot] - 1) * qpv;
        for (std::size_t k = 0; k < qpv; ++k) s[first + k] = letter;
    }
    return s;
}

std::string bits_of(std::uint64_t value, std::size_t n) {
    std::string s(n, '0');
    for (std::size_t i = 0; i < n; ++i) {
        if ((value >> (n - 1 - i)) & 1) s[i] = '1';
    }
    return s;
}

}  // namespace

bool Clause::satisfied_by(const std::string &x) const {
    for (std::size_t s = 0; s < 3; ++s) {
        if ((x.at(vars[s] - 1) == '1') != (polarity[s] == 1)) return true;
    }
    return false;
}

CnfInstance::CnfInstance(std::size_t n_vars, std::vector<Clause> clauses) : n_vars_(n_vars) {
    std::set<Clause> seen;
    for (auto c : clauses) {
        std::array<std::size_t, 3> order{0, 1, 2};
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return c.vars[a] < c.vars[b]; });
        Clause sorted;
        for (std::size_t s = 0; s < 3; ++s) {
            sorted.vars[s] = c.vars[order[s]];
            sorted.polarity[s] = c.polarity[order[s]] ? 1 : 0;
        }
        if (sorted.vars[0] == 0 || sorted.vars[2] > n_vars) {
            throw Error(ErrorCode::InvalidInput, "clause variable out of range 1.." + std::to_string(n_vars));
        }
        if (sorted.vars[0] == sorted.vars[1] || sorted.vars[1] == sorted.vars[2]) {
            throw Error(ErrorCode::InvalidInput, "clause needs three distinct variables");
        }
        if (!seen.insert(sorted).second) throw Error(ErrorCode::InvalidInput, "duplicate clause");
        clauses_.push_back(sorted);
    }
}

bool CnfInstance::satisfied_by(const std::string &x) const {
    if (x.size() != n_vars_) throw Error(ErrorCode::InvalidInput, "assignment length differs from variable count");
    return std::all_of(clauses_.begin(), clauses_.end(), [&](const Clause &c) { return c.satisfied_by(x); });
}

std::vector<std::string> CnfInstance::satisfying_set(std::size_t max_log2) const {
    if (n_vars_ > max_log2) throw Error(ErrorCode::TooLarge, "too many variables to enumerate");
    std::vector<std::string> out;
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << n_vars_); ++v) {
        std::string x = bits_of(v, n_vars_);
        if (satisfied_by(x)) out.push_back(std::move(x));
    }
    return out;
}

Rational ReductionVariant::c_for(std::size_t num_clauses) const {
    if (penalty_c) return *penalty_c;
    if (kind == Variant::SixLocal) return Rational(1);
    return Rational(10 * static_cast<long>(std::max<std::size_t>(num_clauses, 1)));
}

Hamiltonian encode_clause(const Clause &clause, Variant variant, std::size_t n_vars) {
    const std::size_t qpv = variant == Variant::ThreeLocal ? 1 : 2;
    if (n_vars == 0) n_vars = clause.vars[2];
    const std::size_t n = n_vars * qpv;
    std::vector<Hamiltonian::TermType> terms;
    for (std::size_t mask = 1; mask < 8; ++mask) {
        const int weight = std::popcount(mask);
        const long coeff = weight == 3 ? 1 : (weight == 1 ? -3 : -1);
        terms.push_back({GaussRational(coeff), PauliString(letters_for(clause, mask, n, qpv))});
    }
    return Hamiltonian::collect(n, std::move(terms));
}

Hamiltonian encode_driver_site(std::size_t var, std::size_t n_vars, Variant variant, const Rational &c) {
    const std::size_t qpv = variant == Variant::ThreeLocal ? 1 : 2;
    const std::size_t n = n_vars * qpv;
    std::string xs(n, 'I');
    std::string zs(n, 'I');
    for (std::size_t k = 0; k < qpv; ++k) {
        xs[(var - 1) * qpv + k] = 'X';
        zs[(var - 1) * qpv + k] = 'Z';
    }
    const Rational z_weight = variant == Variant::ThreeLocal ? Rational(1) : Rational(2);
    return Hamiltonian::collect(n, {{GaussRational(Rational(-c)), PauliString(xs)},
                                    {GaussRational(Rational(-c * z_weight)), PauliString(zs)}});
}

std::array<bool, 8> clause_truth_table(const Clause &clause, Variant variant) {
    const Clause local{{1, 2, 3}, clause.polarity};
    const Hamiltonian h = encode_clause(local, variant, 3);
    std::array<bool, 8> table{};
    for (std::uint64_t v = 0; v < 8; ++v) {
        const auto gates = hadamard_pattern(bits_of(v, 3), variant);
        const Hamiltonian conj = conjugate_clifford(h, gates);
        table[v] = is_stoquastic_dense(to_dense(conj)).stoquastic();
    }
    return table;
}

Hamiltonian encode_instance(const CnfInstance &cnf, const ReductionVariant &variant) {
    const std::size_t n = cnf.num_vars();
    const Rational c = variant.c_for(cnf.num_clauses());
    std::vector<Hamiltonian> parts;
    for (const auto &clause : cnf.clauses()) parts.push_back(encode_clause(clause, variant.kind, n));
    if (sgn(c) != 0) {
        for (std::size_t v = 1; v <= n; ++v) parts.push_back(encode_driver_site(v, n, variant.kind, c));
    }
    return Hamiltonian::from_groups(n * variant.qubits_per_var(), parts);
}

std::vector<CliffordGate> hadamard_pattern(const std::string &x, Variant variant) {
    const std::size_t qpv = variant == Variant::ThreeLocal ? 1 : 2;
    std::vector<CliffordGate> gates;
    for (char b : x) {
        for (std::size_t k = 0; k < qpv; ++k) {
            gates.push_back(b == '1' ? CliffordGate::hadamard() : CliffordGate::identity());
        }
    }
    return gates;
}

std::string decode_assignment(const GateAssignment &g, Variant variant) {
    std::string x;
    if (variant == Variant::ThreeLocal) {
        for (std::size_t q = 0; q < g.size(); ++q) {
            const auto *gate = std::get_if<CliffordGate>(&g.gates[q]);
            if (gate == nullptr) throw Error(ErrorCode::NotDecodable, "qubit " + std::to_string(q) + " has no Clifford gate");
            const CliffordGate rep = canonicalize_mod_x(*gate);
            if (rep == CliffordGate::identity()) {
                x.push_back('0');
            } else if (rep == CliffordGate::hadamard()) {
                x.push_back('1');
            } else {
                throw Error(ErrorCode::NotDecodable, "gate " + gate->label() + " is not in {I, X, W, XW}");
            }
        }
        return x;
    }

    if (g.size() % 2 != 0) throw Error(ErrorCode::NotDecodable, "six-local assignments come in qubit pairs");
    constexpr double pi = std::numbers::pi;
    const auto near = [](double a, double b) { return std::abs(a - b) < 1e-9; };
    for (std::size_t q = 0; q < g.size(); q += 2) {
        const auto *a = std::get_if<double>(&g.gates[q]);
        const auto *b = std::get_if<double>(&g.gates[q + 1]);
        if (a == nullptr || b == nullptr) {
            throw Error(ErrorCode::NotDecodable, "pair " + std::to_string(q / 2) + " is not a rotation pair");
        }
        const double ta = canonical_angle(*a);
        const double tb = canonical_angle(*b);
        if (!near(ta, tb)) throw Error(ErrorCode::NotDecodable, "pair " + std::to_string(q / 2) + " has unequal angles");
        if (near(ta, 0) || near(ta, pi / 2)) {
            x.push_back('0');
        } else if (near(ta, pi / 4) || near(ta, -pi / 4)) {
            x.push_back('1');
        } else {
            throw Error(ErrorCode::NotDecodable, "pair " + std::to_string(q / 2) + " is not one of the four admissible points");
        }
    }
    return x;
}

ReductionReport verify_reduction(const CnfInstance &cnf, const ReductionVariant &variant, ReductionLimits limits) {
    const std::size_t n = cnf.num_vars();
    if (n > limits.max_vars_log2) throw Error(ErrorCode::TooLarge, "too many variables to enumerate");
    const std::size_t qpv = variant.qubits_per_var();
    const Hamiltonian h = encode_instance(cnf, variant);
    const std::vector<Hamiltonian> parts = h.parts();
    const std::size_t m = cnf.num_clauses();

    ReductionReport report;
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = a + 1; b < m; ++b) {
            if (cnf.clauses()[a].vars == cnf.clauses()[b].vars) report.shared_triples.emplace_back(a, b);
        }
    }

    // Each group touches few variables, so its verdict is cached per local
    // assignment.
    std::vector<std::vector<std::size_t>> group_vars;
    for (const auto &p : parts) {
        std::set<std::size_t> vs;
        for (std::size_t q : p.support()) vs.insert(q / qpv);
        group_vars.emplace_back(vs.begin(), vs.end());
    }
    std::vector<std::unordered_map<std::uint64_t, bool>> cache(parts.size());

    const bool whole = h.num_qubits() <= limits.whole_matrix_qubits;
    report.whole_matrix_checked = whole;
    const RealHamiltonian flat_real = to_real(h.flattened());

    for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
        const std::string x = bits_of(v, n);
        const auto gates = hadamard_pattern(x, variant.kind);
        bool cured = true;
        for (std::size_t g = 0; g < parts.size() && cured; ++g) {
            std::uint64_t key = 0;
            for (std::size_t var : group_vars[g]) key = (key << 1) | (x[var] == '1');
            auto it = cache[g].find(key);
            if (it == cache[g].end()) {
                const bool ok = part_is_stoquastic(conjugate_clifford(parts[g], gates));
                it = cache[g].emplace(key, ok).first;
            }
            cured = it->second;
        }
        if (cured) report.curing_set.push_back(x);

        if (!whole) continue;
        const bool whole_ok = is_stoquastic_pauli_sum(conjugate_clifford(flat_real, gates), kFloatTolerance,
                                                      DenseLimits{limits.whole_matrix_qubits}, false)
                                  .stoquastic();
        if (whole_ok != cured) report.whole_matrix_agrees = false;

        const Hamiltonian conj = conjugate_clifford(h, gates);
        const auto conj_parts = conj.parts();
        for (std::size_t a = 0; a < m; ++a) {
            if (cnf.clauses()[a].satisfied_by(x)) continue;
            std::string triple(h.num_qubits(), 'I');
            for (std::size_t s = 0; s < 3; ++s) {
                for (std::size_t k = 0; k < qpv; ++k) triple[(cnf.clauses()[a].vars[s] - 1) * qpv + k] = 'X';
            }
            const PauliString p(triple);
            const GaussRational coeff = conj_parts[a].coefficient_of(p);
            bool ok = coeff.is_real() && sgn(coeff.re) > 0;
            for (std::size_t b = 0; b < conj_parts.size() && ok; ++b) {
                if (b != a && !conj_parts[b].coefficient_of(p).is_zero()) ok = false;
            }
            if (!ok) report.non_cancellation = false;
        }
    }
    report.sat_set = cnf.satisfying_set(limits.max_vars_log2);
    report.equal = report.curing_set == report.sat_set;
    return report;
}

DimacsFile parse_dimacs(const std::string &text) {
    DimacsFile out;
    std::istringstream in(text);
    std::string line;
    std::optional<std::size_t> n_vars;
    std::size_t declared = 0;
    std::vector<Clause> clauses;
    std::vector<long> pending;
    const auto fail = [](const std::string &msg) { throw Error(ErrorCode::ParseError, msg); };

    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (first == "c") {
            std::string key;
            std::string bits;
            if (ls >> key >> bits && key == "planted") out.planted = bits;
            continue;
        }
        if (first == "%") break;
        if (first == "p") {
            std::string fmt;
            long nv = -1;
            long nc = -1;
            if (!(ls >> fmt >> nv >> nc) || fmt != "cnf" || nv < 0 || nc < 0) fail("malformed problem line");
            if (n_vars) fail("repeated problem line");
            n_vars = static_cast<std::size_t>(nv);
            declared = static_cast<std::size_t>(nc);
            continue;
        }
        if (!n_vars) fail("clause before the problem line");
        std::istringstream toks(line);
        std::string tok;
        while (toks >> tok) {
            long lit = 0;
            try {
                std::size_t used = 0;
                lit = std::stol(tok, &used);
                if (used != tok.size()) fail("bad literal '" + tok + "'");
            } catch (const std::logic_error &) {
                fail("bad literal '" + tok + "'");
            }
            if (lit != 0) {
                pending.push_back(lit);
                continue;
            }
            if (pending.size() != 3) fail("clause with " + std::to_string(pending.size()) + " literals; only 3SAT is supported");
            Clause c;
            for (std::size_t s = 0; s < 3; ++s) {
                c.vars[s] = static_cast<std::size_t>(std::labs(pending[s]));
                c.polarity[s] = pending[s] < 0 ? 1 : 0;
            }
            clauses.push_back(c);
            pending.clear();
        }
    }
    if (!n_vars) fail("missing problem line");
    if (!pending.empty()) fail("unterminated clause");
    if (clauses.size() != declared) {
        fail("problem line declares " + std::to_string(declared) + " clauses, found " + std::to_string(clauses.size()));
    }
    out.cnf = CnfInstance(*n_vars, std::move(clauses));
    if (out.planted && out.planted->size() != *n_vars) fail("planted assignment has the wrong length");
    return out;
}

std::string write_dimacs(const CnfInstance &cnf, const std::optional<std::string> &planted) {
    std::ostringstream out;
    if (planted) out << "c planted " << *planted << "\n";
    out << "p cnf " << cnf.num_vars() << " " << cnf.num_clauses() << "\n";
    for (const auto &c : cnf.clauses()) {
        for (std::size_t s = 0; s < 3; ++s) {
            out << (c.polarity[s] ? "-" : "") << c.vars[s] << " ";
        }
        out << "0\n";
    }
    return out.str();
}

}  // namespace stoqcure
