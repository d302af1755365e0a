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

#include "stoqcure/stoq.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>

#include "stoqcure/error.hpp"
#include "stoqcure/kernels.hpp"

namespace stoqcure {

namespace {

bool violates(const GaussRational &e, const Rational &tol) {
    return e.re > tol || abs(e.im) > tol;
}

StoqReport make_violation(std::size_t row, std::size_t col, GaussRational value, CheckMode mode,
                          std::optional<std::size_t> group = std::nullopt) {
    StoqReport r;
    r.verdict = Verdict::NonStoquastic;
    r.mode = mode;
    r.witness = Witness{row, col, std::move(value), group};
    return r;
}

template <class Coeff>
BasicHamiltonian<Coeff> localize(const BasicHamiltonian<Coeff> &part, std::vector<std::size_t> &qubits) {
    qubits = part.support();
    std::vector<Term<Coeff>> local;
    for (const auto &t : part.terms()) local.push_back({t.coeff, t.paulis.restricted(qubits)});
    return BasicHamiltonian<Coeff>::collect(qubits.size(), std::move(local));
}

GaussRational to_gauss(std::complex<double> v) { return {Rational(v.real()), Rational(v.imag())}; }

}  // namespace

StoqReport is_stoquastic_dense(const ExactMatrix &m, const Rational &tol) {
    if (!m.is_square()) throw Error(ErrorCode::NotSquare, "stoquasticity needs a square matrix");
    if (sgn(tol) < 0) throw Error(ErrorCode::InvalidInput, "tolerance must be non-negative");
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (r != c && violates(m(r, c), tol)) return make_violation(r, c, m(r, c), CheckMode::WholeMatrix);
        }
    }
    return {};
}

StoqReport is_stoquastic_dense(const ComplexMatrix &m, double tol) {
    if (!m.is_square()) throw Error(ErrorCode::NotSquare, "stoquasticity needs a square matrix");
    if (!(tol >= 0)) throw Error(ErrorCode::InvalidInput, "tolerance must be non-negative");
    const std::size_t dim = m.rows();
    for (std::size_t r = 0; r < dim; ++r) {
        const double *row = reinterpret_cast<const double *>(m.row(r));
        std::size_t c = kernels::first_violation_interleaved(row, r, tol);
        if (c == r) {
            const std::size_t rest = kernels::first_violation_interleaved(row + 2 * (r + 1), dim - r - 1, tol);
            c = r + 1 + rest;
        }
        if (c < dim) return make_violation(r, c, to_gauss(m(r, c)), CheckMode::WholeMatrix);
    }
    return {};
}

bool part_is_stoquastic(const Hamiltonian &part, const Rational &tol, DenseLimits limits) {
    std::vector<std::size_t> qubits;
    const Hamiltonian local = localize(part, qubits);
    if (qubits.empty()) return true;
    return is_stoquastic_pauli_sum(local, tol, limits).stoquastic();
}

StoqReport is_stoquastic_grouped(const Hamiltonian &h, const Rational &tol, DenseLimits limits) {
    const std::size_t count = h.num_groups();
    for (std::size_t g = 0; g < count; ++g) {
        std::vector<std::size_t> qubits;
        const Hamiltonian local = localize(h.group(g), qubits);
        if (qubits.empty()) continue;
        StoqReport r = is_stoquastic_dense(to_dense(local, limits), tol);
        if (!r.stoquastic()) {
            r.mode = CheckMode::PerTermGrouped;
            r.witness->group = g;
            return r;
        }
    }
    StoqReport ok;
    ok.mode = CheckMode::PerTermGrouped;
    return ok;
}

StoqReport is_stoquastic_grouped(const RealHamiltonian &h, double tol, DenseLimits limits) {
    const std::size_t count = h.num_groups();
    for (std::size_t g = 0; g < count; ++g) {
        std::vector<std::size_t> qubits;
        const RealHamiltonian local = localize(h.group(g), qubits);
        if (qubits.empty()) continue;
        StoqReport r = is_stoquastic_dense(to_dense(local, limits), tol);
        if (!r.stoquastic()) {
            r.mode = CheckMode::PerTermGrouped;
            r.witness->group = g;
            return r;
        }
    }
    StoqReport ok;
    ok.mode = CheckMode::PerTermGrouped;
    return ok;
}

StoqReport is_stoquastic_pauli_sum(const Hamiltonian &h, const Rational &tol, DenseLimits limits) {
    const std::size_t n = h.num_qubits();
    if (n > limits.max_qubits || n >= 63) throw Error(ErrorCode::TooLarge, "too many qubits for a full scan");
    if (sgn(tol) < 0) throw Error(ErrorCode::InvalidInput, "tolerance must be non-negative");
    const std::size_t dim = std::size_t{1} << n;

    std::map<std::uint64_t, std::vector<const Hamiltonian::TermType *>> buckets;
    for (const auto &t : h.terms()) {
        const std::uint64_t x = t.paulis.x_mask();
        if (x != 0) buckets[x].push_back(&t);
    }
    std::optional<Witness> best;
    for (const auto &[mask, terms] : buckets) {
        std::vector<GaussRational> bases;
        std::vector<std::uint64_t> zs;
        for (const auto *t : terms) {
            bases.push_back(times_minus_i_pow(t->coeff, static_cast<unsigned>(t->paulis.count('Y'))));
            zs.push_back(t->paulis.z_mask());
        }
        const std::size_t limit = best ? best->row + 1 : dim;
        for (std::size_t r = 0; r < limit; ++r) {
            GaussRational value;
            for (std::size_t k = 0; k < bases.size(); ++k) {
                if (std::popcount(static_cast<std::uint64_t>(r) & zs[k]) & 1) {
                    value -= bases[k];
                } else {
                    value += bases[k];
                }
            }
            if (violates(value, tol)) {
                const std::size_t col = r ^ mask;
                if (!best || r < best->row || (r == best->row && col < best->col)) {
                    best = Witness{r, col, std::move(value), std::nullopt};
                }
                break;
            }
        }
    }
    if (!best) return {};
    StoqReport report;
    report.verdict = Verdict::NonStoquastic;
    report.witness = std::move(best);
    return report;
}

StoqReport is_stoquastic_pauli_sum(const RealHamiltonian &h, double tol, DenseLimits limits, bool want_witness) {
    const std::size_t n = h.num_qubits();
    if (n > limits.max_qubits || n >= 63) throw Error(ErrorCode::TooLarge, "too many qubits for a full scan");
    if (!(tol >= 0)) throw Error(ErrorCode::InvalidInput, "tolerance must be non-negative");
    const std::size_t dim = std::size_t{1} << n;

    std::map<std::uint64_t, std::vector<const RealHamiltonian::TermType *>> buckets;
    for (const auto &t : h.terms()) {
        const std::uint64_t x = t.paulis.x_mask();
        if (x != 0) buckets[x].push_back(&t);
    }
    std::vector<double> re(dim);
    std::vector<double> im(dim);
    std::optional<Witness> best;
    for (const auto &[mask, terms] : buckets) {
        std::fill(re.begin(), re.end(), 0.0);
        bool any_imag = false;
        for (const auto *t : terms) {
            // c * (-i)^k: real for even k, imaginary for odd k.
            const std::size_t k = t->paulis.count('Y') % 4;
            const double sign = (k == 0 || k == 3) ? 1.0 : -1.0;
            if (k % 2 == 1 && !any_imag) {
                std::fill(im.begin(), im.end(), 0.0);
                any_imag = true;
            }
            double *target = (k % 2 == 0) ? re.data() : im.data();
            kernels::accumulate_parity_signed(target, dim, 0, t->paulis.z_mask(), sign * t->coeff);
        }
        const std::size_t r = kernels::first_violation_split(re.data(), any_imag ? im.data() : nullptr, dim, tol);
        if (r == dim) continue;
        const std::size_t col = r ^ mask;
        if (!want_witness) {
            StoqReport report;
            report.verdict = Verdict::NonStoquastic;
            return report;
        }
        if (!best || r < best->row || (r == best->row && col < best->col)) {
            best = Witness{r, col, to_gauss({re[r], any_imag ? im[r] : 0.0}), std::nullopt};
        }
    }
    if (!best) return {};
    StoqReport report;
    report.verdict = Verdict::NonStoquastic;
    report.witness = std::move(best);
    return report;
}

std::vector<GaussRational> off_diagonal_multiset(const ExactMatrix &m) {
    if (!m.is_square()) throw Error(ErrorCode::NotSquare, "off-diagonal multiset needs a square matrix");
    std::vector<GaussRational> out;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (r != c) out.push_back(m(r, c));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::complex<double>> off_diagonal_multiset(const ComplexMatrix &m) {
    if (!m.is_square()) throw Error(ErrorCode::NotSquare, "off-diagonal multiset needs a square matrix");
    std::vector<std::complex<double>> out;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (r != c) out.push_back(m(r, c));
        }
    }
    std::sort(out.begin(), out.end(), [](const auto &a, const auto &b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    return out;
}

std::vector<GaussRational> diagonal_multiset(const ExactMatrix &m) {
    if (!m.is_square()) throw Error(ErrorCode::NotSquare, "diagonal multiset needs a square matrix");
    std::vector<GaussRational> out;
    for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(m(r, r));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace stoqcure
