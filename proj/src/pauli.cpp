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

#include "stoqcure/pauli.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "stoqcure/error.hpp"

namespace stoqcure {

PauliString::PauliString(std::string letters) : letters_(std::move(letters)) {
    for (char c : letters_) {
        if (!is_pauli_letter(c)) {
            throw Error(ErrorCode::ParseError, "invalid Pauli letter '" + std::string(1, c) + "' in \"" +
                                                   letters_ + "\"");
        }
    }
}

void PauliString::set(std::size_t qubit, char letter) {
    if (!is_pauli_letter(letter)) {
        throw Error(ErrorCode::ParseError, "invalid Pauli letter '" + std::string(1, letter) + "'");
    }
    letters_.at(qubit) = letter;
}

std::size_t PauliString::weight() const {
    return static_cast<std::size_t>(std::count_if(letters_.begin(), letters_.end(), [](char c) { return c != 'I'; }));
}

std::size_t PauliString::count(char letter) const {
    return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), letter));
}

std::vector<std::size_t> PauliString::support() const {
    std::vector<std::size_t> out;
    for (std::size_t q = 0; q < letters_.size(); ++q) {
        if (letters_[q] != 'I') out.push_back(q);
    }
    return out;
}

std::uint64_t PauliString::x_mask() const {
    if (letters_.size() > 64) throw Error(ErrorCode::TooLarge, "bit masks need n <= 64");
    std::uint64_t m = 0;
    const std::size_t n = letters_.size();
    for (std::size_t q = 0; q < n; ++q) {
        if (letters_[q] == 'X' || letters_[q] == 'Y') m |= std::uint64_t{1} << (n - 1 - q);
    }
    return m;
}

std::uint64_t PauliString::z_mask() const {
    if (letters_.size() > 64) throw Error(ErrorCode::TooLarge, "bit masks need n <= 64");
    std::uint64_t m = 0;
    const std::size_t n = letters_.size();
    for (std::size_t q = 0; q < n; ++q) {
        if (letters_[q] == 'Z' || letters_[q] == 'Y') m |= std::uint64_t{1} << (n - 1 - q);
    }
    return m;
}

PauliString PauliString::restricted(std::span<const std::size_t> qubits) const {
    std::string out;
    out.reserve(qubits.size());
    for (std::size_t q : qubits) out.push_back(letters_.at(q));
    return PauliString(std::move(out));
}

PauliString embed(const PauliString &local, std::size_t n, std::span<const std::size_t> qubits) {
    if (local.size() != qubits.size()) {
        throw Error(ErrorCode::MixedLength, "embed: string length does not match qubit list");
    }
    std::string out(n, 'I');
    for (std::size_t i = 0; i < qubits.size(); ++i) out.at(qubits[i]) = local[i];
    return PauliString(std::move(out));
}

// ---------------------------------------------------------------------------

template <class Coeff>
BasicHamiltonian<Coeff> BasicHamiltonian<Coeff>::collect(std::size_t n, std::vector<TermType> terms) {
    std::map<PauliString, Coeff> merged;
    for (auto &t : terms) {
        if (t.paulis.size() != n) {
            throw Error(ErrorCode::MixedLength, "term \"" + t.paulis.str() + "\" has length " +
                                                    std::to_string(t.paulis.size()) + ", expected " +
                                                    std::to_string(n));
        }
        auto [it, inserted] = merged.try_emplace(std::move(t.paulis), t.coeff);
        if (!inserted) it->second += t.coeff;
    }
    BasicHamiltonian h(n);
    for (auto &[p, c] : merged) {
        if (!detail::coeff_is_zero(c)) h.terms_.push_back({c, p});
    }
    return h;
}

template <class Coeff>
BasicHamiltonian<Coeff> BasicHamiltonian<Coeff>::collect(std::vector<TermType> terms) {
    const std::size_t n = terms.empty() ? 0 : terms.front().paulis.size();
    return collect(n, std::move(terms));
}

template <class Coeff>
BasicHamiltonian<Coeff> BasicHamiltonian<Coeff>::from_groups(std::size_t n,
                                                             const std::vector<BasicHamiltonian> &parts) {
    BasicHamiltonian h(n);
    Groups groups;
    groups.reserve(parts.size());
    for (const auto &part : parts) {
        if (part.num_qubits() != n) throw Error(ErrorCode::MixedLength, "group has wrong qubit count");
        BasicHamiltonian collected = part.has_groups() ? part.flattened() : part;
        std::vector<std::size_t> idx;
        for (const auto &t : collected.terms_) {
            idx.push_back(h.terms_.size());
            h.terms_.push_back(t);
        }
        groups.push_back(std::move(idx));
    }
    h.groups_ = std::move(groups);
    return h;
}

template <class Coeff>
BasicHamiltonian<Coeff> BasicHamiltonian<Coeff>::from_terms(std::size_t n, std::vector<TermType> terms,
                                                            std::optional<Groups> groups) {
    if (!groups) return collect(n, std::move(terms));
    for (const auto &t : terms) {
        if (t.paulis.size() != n) {
            throw Error(ErrorCode::MixedLength, "term \"" + t.paulis.str() + "\" does not have length " +
                                                    std::to_string(n));
        }
    }
    std::vector<int> seen(terms.size(), 0);
    for (const auto &g : *groups) {
        std::set<PauliString> strings;
        for (std::size_t idx : g) {
            if (idx >= terms.size()) {
                throw Error(ErrorCode::InvalidInput, "group references term " + std::to_string(idx) +
                                                         " but there are only " + std::to_string(terms.size()));
            }
            if (seen[idx]++) {
                throw Error(ErrorCode::InvalidInput, "term " + std::to_string(idx) + " appears in two groups");
            }
            if (!strings.insert(terms[idx].paulis).second) {
                throw Error(ErrorCode::InvalidInput,
                            "string \"" + terms[idx].paulis.str() + "\" repeated inside one group");
            }
        }
    }
    for (std::size_t i = 0; i < seen.size(); ++i) {
        if (!seen[i]) throw Error(ErrorCode::InvalidInput, "term " + std::to_string(i) + " is in no group");
    }
    BasicHamiltonian h(n);
    h.terms_ = std::move(terms);
    h.groups_ = std::move(groups);
    return h;
}

template <class Coeff>
Groups BasicHamiltonian<Coeff>::effective_groups() const {
    if (groups_) return *groups_;
    Groups g(terms_.size());
    for (std::size_t i = 0; i < terms_.size(); ++i) g[i] = {i};
    return g;
}

template <class Coeff>
BasicHamiltonian<Coeff> BasicHamiltonian<Coeff>::group(std::size_t g) const {
    BasicHamiltonian out(n_);
    if (!groups_) {
        out.terms_.push_back(terms_.at(g));
        return out;
    }
    std::vector<TermType> picked;
    for (std::size_t idx : groups_->at(g)) picked.push_back(terms_[idx]);
    return collect(n_, std::move(picked));
}

template <class Coeff>
std::vector<BasicHamiltonian<Coeff>> BasicHamiltonian<Coeff>::parts() const {
    std::vector<BasicHamiltonian> out;
    const std::size_t count = groups_ ? groups_->size() : terms_.size();
    out.reserve(count);
    for (std::size_t g = 0; g < count; ++g) out.push_back(group(g));
    return out;
}

template <class Coeff>
BasicHamiltonian<Coeff> BasicHamiltonian<Coeff>::flattened() const {
    return collect(n_, terms_);
}

template <class Coeff>
BasicHamiltonian<Coeff> BasicHamiltonian<Coeff>::as_single_group() const {
    return from_groups(n_, {flattened()});
}

template <class Coeff>
std::vector<std::size_t> BasicHamiltonian<Coeff>::support() const {
    std::vector<bool> used(n_, false);
    for (const auto &t : terms_) {
        for (std::size_t q = 0; q < n_; ++q) {
            if (t.paulis[q] != 'I') used[q] = true;
        }
    }
    std::vector<std::size_t> out;
    for (std::size_t q = 0; q < n_; ++q) {
        if (used[q]) out.push_back(q);
    }
    return out;
}

template <class Coeff>
Coeff BasicHamiltonian<Coeff>::coefficient_of(const PauliString &p) const {
    Coeff sum{};
    for (const auto &t : terms_) {
        if (t.paulis == p) sum += t.coeff;
    }
    return sum;
}

template class BasicHamiltonian<GaussRational>;
template class BasicHamiltonian<double>;

RealHamiltonian to_real(const Hamiltonian &h) {
    return h.map_terms<double>([](const Hamiltonian::TermType &t) {
        if (!t.coeff.is_real()) {
            throw Error(ErrorCode::InvalidInput, "term \"" + t.paulis.str() + "\" has a complex coefficient");
        }
        return std::vector<Term<double>>{{t.coeff.re.get_d(), t.paulis}};
    });
}

Hamiltonian to_exact(const RealHamiltonian &h) {
    return h.map_terms<GaussRational>([](const RealHamiltonian::TermType &t) {
        return std::vector<Term<GaussRational>>{{GaussRational(Rational(t.coeff)), t.paulis}};
    });
}

}  // namespace stoqcure
