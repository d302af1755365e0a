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


#include "stoqcure/grouping.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

#include "stoqcure/error.hpp"
#include "stoqcure/stoq.hpp"

namespace stoqcure {

namespace {

bool contains_all(const std::vector<std::size_t> &outer, const std::vector<std::size_t> &inner) {
    return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
}

std::string var_name(const PauliString &p, const std::vector<std::size_t> &subset) {
    std::string name = "w[" + p.str() + "|";
    for (std::size_t i = 0; i < subset.size(); ++i) {
        if (i) name += ',';
        name += std::to_string(subset[i]);
    }
    return name + "]";
}

}  // namespace

std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    if (k > n) return out;
    std::vector<std::size_t> cur(k);
    for (std::size_t i = 0; i < k; ++i) cur[i] = i;
    while (true) {
        out.push_back(cur);
        std::size_t i = k;
        while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++cur[i - 1];
        for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

GroupingProblem GroupingProblem::make(const Hamiltonian &h, std::size_t k_prime, const GroupingOptions &options) {
    GroupingProblem p;
    p.h = h.flattened();
    p.k_prime = k_prime;
    const std::size_t n = p.h.num_qubits();
    if (k_prime == 0 || k_prime > n) throw Error(ErrorCode::InvalidInput, "k' must lie in [1, n]");
    if (k_prime > options.limits.max_qubits) throw Error(ErrorCode::TooLarge, "subset dimension exceeds the cap");

    std::vector<std::vector<std::size_t>> supports;
    for (const auto &t : p.h.terms()) {
        supports.push_back(t.paulis.support());
        if (supports.back().size() > k_prime) {
            throw Error(ErrorCode::UncoverableTerm, "term " + t.paulis.str() + " acts on more than k' qubits");
        }
    }
    for (auto &s : combinations(n, k_prime)) {
        if (options.family == SubsetFamily::TermSupersets) {
            const bool useful = std::any_of(supports.begin(), supports.end(), [&](const auto &sup) {
                return !sup.empty() && contains_all(s, sup);
            });
            if (!useful) continue;
        }
        p.subsets.push_back(std::move(s));
    }
    if (p.subsets.empty()) p.subsets.push_back(combinations(n, k_prime).front());

    for (std::size_t s = 0; s < p.subsets.size(); ++s) {
        for (std::size_t t = 0; t < supports.size(); ++t) {
            if (contains_all(p.subsets[s], supports[t])) p.weight_vars.push_back({t, s});
        }
    }
    for (std::size_t t = 0; t < supports.size(); ++t) {
        const bool covered = std::any_of(p.weight_vars.begin(), p.weight_vars.end(),
                                         [&](const WeightVar &v) { return v.term == t; });
        if (!covered) {
            throw Error(ErrorCode::UncoverableTerm, "term " + p.h.terms()[t].paulis.str() + " fits no subset");
        }
    }
    return p;
}

LpSystem build_lp(const GroupingProblem &p, const GroupingOptions &options) {
    LpSystem sys;
    const auto &terms = p.h.terms();
    for (const auto &v : p.weight_vars) sys.add_var(var_name(terms[v.term].paulis, p.subsets[v.subset]));
    const std::size_t nv = sys.num_vars();

    for (std::size_t t = 0; t < terms.size(); ++t) {
        LpConstraint c{std::vector<Rational>(nv), Rational(-1), Relation::EqualZero};
        for (std::size_t j = 0; j < nv; ++j) {
            if (p.weight_vars[j].term == t) c.coeffs[j] = 1;
        }
        sys.add(std::move(c));
    }
    if (options.unit_box) {
        for (std::size_t j = 0; j < nv; ++j) {
            LpConstraint lo{std::vector<Rational>(nv), Rational(0), Relation::LessEqualZero};
            lo.coeffs[j] = -1;
            sys.add(std::move(lo));
            LpConstraint hi{std::vector<Rational>(nv), Rational(-1), Relation::LessEqualZero};
            hi.coeffs[j] = 1;
            sys.add(std::move(hi));
        }
    }

    struct LocalTerm {
        std::size_t var;
        GaussRational base;  // coeff * (-i)^#Y
        std::uint64_t z;
    };
    for (std::size_t s = 0; s < p.subsets.size(); ++s) {
        const auto &subset = p.subsets[s];
        std::map<std::uint64_t, std::vector<LocalTerm>> by_x;
        for (std::size_t j = 0; j < nv; ++j) {
            if (p.weight_vars[j].subset != s) continue;
            const auto &t = terms[p.weight_vars[j].term];
            const PauliString local = t.paulis.restricted(subset);
            if (local.x_mask() == 0) continue;
            by_x[local.x_mask()].push_back(
                {j, times_minus_i_pow(t.coeff, static_cast<unsigned>(local.count('Y'))), local.z_mask()});
        }
        const std::uint64_t dim = std::uint64_t{1} << subset.size();
        for (const auto &[x, locals] : by_x) {
            for (std::uint64_t r = 0; r < dim; ++r) {
                LpConstraint re{std::vector<Rational>(nv), Rational(0), Relation::LessEqualZero};
                LpConstraint im{std::vector<Rational>(nv), Rational(0), Relation::EqualZero};
                for (const auto &lt : locals) {
                    const bool odd = std::popcount(r & lt.z) & 1;
                    re.coeffs[lt.var] += odd ? -lt.base.re : lt.base.re;
                    im.coeffs[lt.var] += odd ? -lt.base.im : lt.base.im;
                }
                sys.add(std::move(re));
                sys.add(std::move(im));
            }
        }
    }
    return sys;
}

RegroupResult regroup(const Hamiltonian &h, std::size_t k_prime, const GroupingOptions &options) {
    const GroupingProblem p = GroupingProblem::make(h, k_prime, options);
    const LpSystem sys = build_lp(p, options);
    const LpResult lp = solve_feasibility(sys);
    RegroupResult out;
    if (!lp.feasible) return out;
    out.feasible = true;
    out.weights = lp.point;

    const std::size_t n = p.h.num_qubits();
    std::vector<Hamiltonian> parts;
    for (std::size_t s = 0; s < p.subsets.size(); ++s) {
        std::vector<Hamiltonian::TermType> split;
        for (std::size_t j = 0; j < p.weight_vars.size(); ++j) {
            if (p.weight_vars[j].subset != s || sgn(lp.point[j]) == 0) continue;
            const auto &t = p.h.terms()[p.weight_vars[j].term];
            split.push_back({t.coeff * GaussRational(lp.point[j]), t.paulis});
        }
        Hamiltonian part = Hamiltonian::collect(n, std::move(split));
        if (part.empty()) continue;
        parts.push_back(std::move(part));
        out.group_subsets.push_back(p.subsets[s]);
    }
    out.regrouped = Hamiltonian::from_groups(n, parts);

    if (out.regrouped.flattened().terms().size() != p.h.terms().size()) {
        throw std::logic_error("regrouped terms do not sum to the input");
    }
    for (const auto &t : p.h.terms()) {
        if (!(out.regrouped.coefficient_of(t.paulis) == t.coeff)) {
            throw std::logic_error("regrouped terms do not sum to the input");
        }
    }
    for (const auto &part : parts) {
        if (!part_is_stoquastic(part, Rational(0), options.limits)) {
            throw std::logic_error("regrouped part is not stoquastic");
        }
    }
    return out;
}

std::pair<std::size_t, RegroupResult> regroup_increasing(const Hamiltonian &h, std::size_t k_start,
                                                         const GroupingOptions &options) {
    const std::size_t n = h.num_qubits();
    std::size_t k = std::max<std::size_t>(k_start, 1);
    for (; k <= n; ++k) {
        try {
            RegroupResult r = regroup(h, k, options);
            if (r.feasible) return {k, std::move(r)};
        } catch (const Error &e) {
            if (e.code() != ErrorCode::UncoverableTerm) throw;
        }
    }
    return {n, RegroupResult{}};
}

}  // namespace stoqcure
