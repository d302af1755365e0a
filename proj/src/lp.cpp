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


#include "stoqcure/lp.hpp"

#include <sstream>

#include "stoqcure/error.hpp"

namespace stoqcure {

namespace {

std::string constraint_key(const LpConstraint &c) {
    std::string key = c.relation == Relation::EqualZero ? "=" : "<";
    for (const auto &a : c.coeffs) {
        key += a.get_str();
        key += ',';
    }
    key += c.constant.get_str();
    return key;
}

std::string format_term(const Rational &a, const std::string &name, bool first) {
    std::string out;
    const bool negative = sgn(a) < 0;
    if (first) {
        out += negative ? "-" : "";
    } else {
        out += negative ? " - " : " + ";
    }
    const Rational mag = abs(a);
    if (mag != 1) out += format_rational(mag) + " ";
    return out + name;
}

}  // namespace

std::size_t LpSystem::add_var(std::string name) {
    var_names.push_back(std::move(name));
    for (auto &c : constraints) c.coeffs.emplace_back(0);
    seen_.clear();
    return var_names.size() - 1;
}

bool LpSystem::add(LpConstraint c) {
    if (c.coeffs.size() != var_names.size()) {
        throw Error(ErrorCode::InvalidInput, "constraint width does not match the variable count");
    }
    std::size_t lead = 0;
    while (lead < c.coeffs.size() && sgn(c.coeffs[lead]) == 0) ++lead;
    if (lead == c.coeffs.size()) {
        const int s = sgn(c.constant);
        if (s == 0 || (s < 0 && c.relation == Relation::LessEqualZero)) return false;
    } else {
        Rational scale = c.coeffs[lead];
        if (c.relation == Relation::LessEqualZero) scale = abs(scale);
        for (auto &a : c.coeffs) a /= scale;
        c.constant /= scale;
    }
    if (seen_.size() != constraints.size()) {
        seen_.clear();
        for (const auto &existing : constraints) seen_.insert(constraint_key(existing));
    }
    if (!seen_.insert(constraint_key(c)).second) return false;
    constraints.push_back(std::move(c));
    return true;
}

std::vector<const LpConstraint *> LpSystem::equalities() const {
    std::vector<const LpConstraint *> out;
    for (const auto &c : constraints) {
        if (c.relation == Relation::EqualZero) out.push_back(&c);
    }
    return out;
}

std::vector<const LpConstraint *> LpSystem::inequalities() const {
    std::vector<const LpConstraint *> out;
    for (const auto &c : constraints) {
        if (c.relation == Relation::LessEqualZero) out.push_back(&c);
    }
    return out;
}

std::optional<std::size_t> LpSystem::find_var(const std::string &name) const {
    for (std::size_t i = 0; i < var_names.size(); ++i) {
        if (var_names[i] == name) return i;
    }
    return std::nullopt;
}

LpResult solve_feasibility(const LpSystem &sys) {
    const std::size_t n = sys.num_vars();
    const std::size_t m = sys.constraints.size();
    LpResult result;
    if (m == 0) {
        result.feasible = true;
        result.point.assign(n, Rational(0));
        return result;
    }

    // Columns: u (n), v (n), one slack per inequality, one artificial per
    // row that has no natural basic column, then the right-hand side.
    std::size_t n_slack = 0;
    for (const auto &c : sys.constraints) n_slack += c.relation == Relation::LessEqualZero;
    std::vector<std::size_t> slack_col(m, SIZE_MAX);
    std::vector<bool> needs_art(m, false);
    {
        std::size_t next = 2 * n;
        for (std::size_t r = 0; r < m; ++r) {
            const auto &c = sys.constraints[r];
            if (c.relation == Relation::LessEqualZero) slack_col[r] = next++;
            const bool rhs_negative = sgn(c.constant) > 0;  // rhs = -constant
            needs_art[r] = c.relation == Relation::EqualZero || rhs_negative;
        }
    }
    std::size_t n_art = 0;
    for (bool b : needs_art) n_art += b;
    const std::size_t art_begin = 2 * n + n_slack;
    const std::size_t cols = art_begin + n_art;
    const std::size_t rhs = cols;

    std::vector<std::vector<Rational>> t(m, std::vector<Rational>(cols + 1));
    std::vector<std::size_t> basis(m);
    std::size_t next_art = art_begin;
    for (std::size_t r = 0; r < m; ++r) {
        const auto &c = sys.constraints[r];
        Rational sign = sgn(c.constant) > 0 ? Rational(-1) : Rational(1);
        for (std::size_t j = 0; j < n; ++j) {
            t[r][j] = sign * c.coeffs[j];
            t[r][n + j] = -t[r][j];
        }
        if (slack_col[r] != SIZE_MAX) t[r][slack_col[r]] = sign;
        t[r][rhs] = -sign * c.constant;
        if (needs_art[r]) {
            t[r][next_art] = 1;
            basis[r] = next_art++;
        } else {
            basis[r] = slack_col[r];
        }
    }

    // Reduced costs for minimising the sum of artificials.
    std::vector<Rational> d(cols + 1);
    for (std::size_t j = art_begin; j < cols; ++j) d[j] = 1;
    for (std::size_t r = 0; r < m; ++r) {
        if (!needs_art[r]) continue;
        for (std::size_t j = 0; j <= cols; ++j) d[j] -= t[r][j];
    }

    while (true) {
        std::size_t enter = cols;
        for (std::size_t j = 0; j < cols; ++j) {
            if (sgn(d[j]) < 0) {
                enter = j;
                break;
            }
        }
        if (enter == cols) break;

        std::size_t leave = m;
        Rational best_ratio;
        for (std::size_t r = 0; r < m; ++r) {
            if (sgn(t[r][enter]) <= 0) continue;
            Rational ratio = t[r][rhs] / t[r][enter];
            if (leave == m || ratio < best_ratio || (ratio == best_ratio && basis[r] < basis[leave])) {
                leave = r;
                best_ratio = std::move(ratio);
            }
        }
        // The phase-1 objective is bounded below by zero, so a column with a
        // negative reduced cost always has a positive entry.
        if (leave == m) throw Error(ErrorCode::InvalidInput, "phase-1 simplex became unbounded");

        const Rational piv = t[leave][enter];
        for (auto &v : t[leave]) {
            if (sgn(v) != 0) v /= piv;
        }
        const auto &prow = t[leave];
        for (std::size_t r = 0; r < m; ++r) {
            if (r == leave || sgn(t[r][enter]) == 0) continue;
            const Rational f = t[r][enter];
            for (std::size_t j = 0; j <= cols; ++j) {
                if (sgn(prow[j]) != 0) t[r][j] -= f * prow[j];
            }
        }
        if (sgn(d[enter]) != 0) {
            const Rational f = d[enter];
            for (std::size_t j = 0; j <= cols; ++j) {
                if (sgn(prow[j]) != 0) d[j] -= f * prow[j];
            }
        }
        basis[leave] = enter;
    }

    if (sgn(d[rhs]) != 0) return result;
    std::vector<Rational> value(cols);
    for (std::size_t r = 0; r < m; ++r) value[basis[r]] = t[r][rhs];
    result.feasible = true;
    result.point.resize(n);
    for (std::size_t j = 0; j < n; ++j) result.point[j] = value[j] - value[n + j];
    return result;
}

std::string format_lp(const LpSystem &sys) {
    std::ostringstream out;
    for (const auto &c : sys.constraints) {
        bool first = true;
        for (std::size_t j = 0; j < c.coeffs.size(); ++j) {
            if (sgn(c.coeffs[j]) == 0) continue;
            out << format_term(c.coeffs[j], sys.var_names[j], first);
            first = false;
        }
        if (sgn(c.constant) != 0 || first) {
            if (first) {
                out << format_rational(c.constant);
            } else {
                out << (sgn(c.constant) < 0 ? " - " : " + ") << format_rational(abs(c.constant));
            }
        }
        out << (c.relation == Relation::EqualZero ? " = 0\n" : " <= 0\n");
    }
    return out.str();
}

}  // namespace stoqcure
