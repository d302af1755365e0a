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


#include "stoqcure/orthogonal.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <set>
#include <thread>
#include <unordered_map>

#include "stoqcure/error.hpp"
#include "stoqcure/stoq.hpp"

namespace stoqcure {

namespace {

constexpr double kPi = std::numbers::pi;

double wrapped_gap(double a, double b) {
    double d = std::fmod(std::abs(a - b), kPi);
    return std::min(d, kPi - d);
}

double wrapped_distance(const std::array<double, 2> &a, const std::array<double, 2> &b) {
    return std::hypot(wrapped_gap(a[0], b[0]), wrapped_gap(a[1], b[1]));
}

Hamiltonian identity_times(std::size_t n, const Rational &value) {
    return Hamiltonian::collect(n, {{GaussRational(value), PauliString::identity(n)}});
}

Hamiltonian add(const Hamiltonian &a, const Hamiltonian &b, const Rational &sa = Rational(1),
                const Rational &sb = Rational(1)) {
    std::vector<Hamiltonian::TermType> terms;
    for (const auto &t : a.terms()) terms.push_back({t.coeff * GaussRational(sa), t.paulis});
    for (const auto &t : b.terms()) terms.push_back({t.coeff * GaussRational(sb), t.paulis});
    return Hamiltonian::collect(a.num_qubits(), std::move(terms));
}

PauliString permuted(const PauliString &p, const std::vector<std::size_t> &order) {
    std::string s;
    for (std::size_t q : order) s.push_back(p[q]);
    return PauliString(s);
}

/// Evenly spaced angles covering (-pi/2, pi/2].
std::vector<double> angle_grid(double step) {
    const double count = kPi / step;
    const long k = std::lround(count);
    if (k <= 0 || std::abs(count - static_cast<double>(k)) > 1e-6) {
        throw Error(ErrorCode::InvalidInput, "grid step must divide pi");
    }
    std::vector<double> out;
    for (long i = 1; i <= k; ++i) out.push_back(canonical_angle(-kPi / 2 + kPi * static_cast<double>(i) / static_cast<double>(k)));
    return out;
}

/// Runs f(i) for i in [0, count) on up to jobs threads.
template <class Fn>
void parallel_for(std::size_t count, unsigned jobs, Fn &&f) {
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    if (jobs == 1) {
        for (std::size_t i = 0; i < count; ++i) f(i);
        return;
    }
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) {
        pool.emplace_back([&, t] {
            for (std::size_t i = t; i < count; i += jobs) f(i);
        });
    }
    for (auto &th : pool) th.join();
}

}  // namespace

OrthogonalDecomposition orthogonal_to_rotation(const std::array<double, 4> &q, double tol) {
    const double a = q[0], b = q[1], c = q[2], d = q[3];
    const double e00 = a * a + c * c - 1.0;
    const double e11 = b * b + d * d - 1.0;
    const double e01 = a * b + c * d;
    if (!(std::abs(e00) <= tol && std::abs(e11) <= tol && std::abs(e01) <= tol)) {
        throw Error(ErrorCode::NotOrthogonal, "matrix does not satisfy q^T q = I");
    }
    const double theta = std::atan2(c, a);
    const double det = a * d - b * c;
    if (det > 0) return {false, canonical_angle(theta)};
    return {true, canonical_angle(kPi / 2 - theta)};
}

Hamiltonian LemmaThreeInstance::assemble() const {
    const std::size_t m = rest_qubits();
    if (h_x.num_qubits() != m || h_i.num_qubits() != m) {
        throw Error(ErrorCode::MixedLength, "H_z, H_x and H_I must act on the same qubits");
    }
    std::vector<Hamiltonian::TermType> terms;
    const auto lift = [&](const Hamiltonian &part, const char *pair) {
        for (const auto &t : part.terms()) terms.push_back({t.coeff, PauliString(pair + t.paulis.str())});
    };
    lift(h_z, "ZZ");
    lift(h_x, "XX");
    lift(h_i, "II");
    const std::string rest(m, 'I');
    terms.push_back({GaussRational(Rational(-2 * c)), PauliString("ZZ" + rest)});
    terms.push_back({GaussRational(Rational(-c)), PauliString("XX" + rest)});
    return Hamiltonian::collect(m + 2, std::move(terms));
}

LemmaThreeInstance LemmaThreeInstance::decompose(const Hamiltonian &h, const Rational &c) {
    if (h.num_qubits() < 2) throw Error(ErrorCode::InvalidInput, "need at least two qubits");
    const std::size_t m = h.num_qubits() - 2;
    std::vector<Hamiltonian::TermType> z, x, i;
    const auto flat = h.flattened();
    for (const auto &t : flat.terms()) {
        const std::string pair = t.paulis.str().substr(0, 2);
        PauliString rest(t.paulis.str().substr(2));
        if (pair == "ZZ") {
            z.push_back({t.coeff, rest});
        } else if (pair == "XX") {
            x.push_back({t.coeff, rest});
        } else if (pair == "II") {
            i.push_back({t.coeff, rest});
        } else {
            throw Error(ErrorCode::InvalidInput, "term " + t.paulis.str() + " has pair letters other than II, ZZ, XX");
        }
    }
    // The driver's Z1Z2 and X1X2 parts are carried by c.
    z.push_back({GaussRational(Rational(2 * c)), PauliString::identity(m)});
    x.push_back({GaussRational(Rational(c)), PauliString::identity(m)});
    LemmaThreeInstance inst;
    inst.h_z = Hamiltonian::collect(m, std::move(z));
    inst.h_x = Hamiltonian::collect(m, std::move(x));
    inst.h_i = Hamiltonian::collect(m, std::move(i));
    inst.c = c;
    return inst;
}

LemmaThreeInstance LemmaThreeInstance::from_sixlocal(const CnfInstance &cnf, std::size_t var, const std::string &rest,
                                                     const Rational &c) {
    const std::size_t n = cnf.num_vars();
    if (var < 1 || var > n) throw Error(ErrorCode::InvalidInput, "variable out of range");
    if (rest.size() != n) throw Error(ErrorCode::InvalidInput, "rest assignment has the wrong length");
    ReductionVariant variant{Variant::SixLocal, c};
    const Hamiltonian h = encode_instance(cnf, variant);

    std::vector<CliffordGate> gates(2 * n);
    const CliffordGate r45 = CliffordGate::parse("XW");
    for (std::size_t u = 1; u <= n; ++u) {
        if (u == var || rest[u - 1] != '1') continue;
        gates[2 * (u - 1)] = r45;
        gates[2 * (u - 1) + 1] = r45;
    }
    const Hamiltonian rotated = conjugate_clifford(h.flattened(), gates);

    std::vector<std::size_t> order{2 * (var - 1), 2 * (var - 1) + 1};
    for (std::size_t q = 0; q < 2 * n; ++q) {
        if (q / 2 != var - 1) order.push_back(q);
    }
    std::vector<Hamiltonian::TermType> terms;
    for (const auto &t : rotated.terms()) terms.push_back({t.coeff, permuted(t.paulis, order)});
    return decompose(Hamiltonian::collect(2 * n, std::move(terms)), c);
}

std::optional<std::string> free_rest_assignment(const CnfInstance &cnf, std::size_t var) {
    for (const auto &x : cnf.satisfying_set()) {
        std::string flipped = x;
        flipped[var - 1] = x[var - 1] == '1' ? '0' : '1';
        if (cnf.satisfied_by(flipped)) return x;
    }
    return std::nullopt;
}

Lemma3Constraints check_lemma3_constraints(const LemmaThreeInstance &inst, DenseLimits limits) {
    const std::size_t m = inst.rest_qubits();
    if (m > limits.max_qubits || m >= 63) {
        throw Error(ErrorCode::TooLarge, "constraint check on " + std::to_string(m) + " qubits exceeds the cap of " +
                                             std::to_string(limits.max_qubits));
    }
    const Hamiltonian ax = add(inst.h_x, identity_times(m, inst.c), 1, -1);
    const Hamiltonian az = add(inst.h_z, identity_times(m, 2 * inst.c), 1, -1);

    // Entries are evaluated straight from the Pauli sums, one X pattern at a time,
    // so the blocks are never stored densely. Slot 0 holds ax, slot 1 holds az.
    struct Part {
        std::uint64_t z = 0;
        GaussRational base;
    };
    std::map<std::uint64_t, std::array<std::vector<Part>, 2>> by_pattern;
    for (int which = 0; which < 2; ++which) {
        for (const auto &t : (which == 0 ? ax : az).terms()) {
            by_pattern[t.paulis.x_mask()][which].push_back(
                {t.paulis.z_mask(), times_minus_i_pow(t.coeff, static_cast<unsigned>(t.paulis.count('Y')))});
        }
    }

    Lemma3Constraints out;
    bool neg_x = false;
    bool neg_z = false;
    GaussRational trace_x;
    GaussRational trace_z;
    const std::uint64_t dim = std::uint64_t{1} << m;
    for (const auto &[x, parts] : by_pattern) {
        for (std::uint64_t r = 0; r < dim; ++r) {
            std::array<GaussRational, 2> e;
            for (int which = 0; which < 2; ++which) {
                for (const Part &p : parts[which]) {
                    if (std::popcount(r & p.z) & 1) {
                        e[which] -= p.base;
                    } else {
                        e[which] += p.base;
                    }
                }
            }
            // Entrywise squares, exactly.
            if (!(e[0] * e[0] == e[1] * e[1])) out.c1 = true;
            neg_x |= e[0].is_real() && sgn(e[0].re) < 0;
            neg_z |= e[1].is_real() && sgn(e[1].re) < 0;
            if (x == 0) {
                trace_x += e[0];
                trace_z += e[1];
            }
        }
    }
    out.c2 = neg_x && neg_z;

    out.trace_x = trace_x.re;
    out.trace_z = trace_z.re;
    const Rational dim_q(mpz_class(1) << static_cast<mp_bitcnt_t>(m));
    out.k = -(out.trace_x + inst.c * dim_q) / 3;
    out.k_prime = -(out.trace_z + 2 * inst.c * dim_q) / 3;
    const auto natural = [](const Rational &r) { return r.get_den() == 1 && sgn(r) >= 0; };
    out.trace_argument = natural(out.k) && natural(out.k_prime) && out.trace_x != out.trace_z;
    return out;
}

const std::array<double, 4> &lemma_angles() {
    static const std::array<double, 4> a{kPi / 2, kPi / 4, 0.0, -kPi / 4};
    return a;
}

std::vector<AngleCluster> cluster_angles(const std::vector<std::array<double, 2>> &points, double radius) {
    const std::size_t n = points.size();
    std::vector<std::size_t> parent(n);
    for (std::size_t i = 0; i < n; ++i) parent[i] = i;
    const auto find = [&](std::size_t i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    };
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (wrapped_distance(points[i], points[j]) <= radius) parent[find(i)] = find(j);
        }
    }
    std::map<std::size_t, std::vector<std::size_t>> members;
    for (std::size_t i = 0; i < n; ++i) members[find(i)].push_back(i);

    std::vector<AngleCluster> out;
    for (const auto &[root, idx] : members) {
        // Medoid: the member with the smallest summed squared distance.
        std::size_t best = idx.front();
        double best_cost = INFINITY;
        for (std::size_t a : idx) {
            double cost = 0;
            for (std::size_t b : idx) cost += std::pow(wrapped_distance(points[a], points[b]), 2);
            if (cost < best_cost) {
                best_cost = cost;
                best = a;
            }
        }
        AngleCluster c;
        c.theta = points[best];
        c.size = idx.size();
        for (std::size_t b : idx) c.radius = std::max(c.radius, wrapped_distance(points[best], points[b]));
        out.push_back(c);
    }
    std::sort(out.begin(), out.end(), [](const AngleCluster &a, const AngleCluster &b) { return a.theta < b.theta; });
    return out;
}

FourPointReport verify_four_points(const LemmaThreeInstance &inst, const GridOptions &options) {
    FourPointReport report;
    report.constraints = check_lemma3_constraints(inst);
    if (!report.constraints.hold()) {
        if (options.require_constraints) {
            throw Error(ErrorCode::ConstraintViolated,
                        std::string("four-point constraints fail:") + (report.constraints.c1 ? "" : " c1") +
                            (report.constraints.c2 ? "" : " c2"));
        }
        report.precondition_failed = true;
    }

    const std::size_t m = inst.rest_qubits();
    const Hamiltonian ax = add(inst.h_x, identity_times(m, inst.c), 1, -1);
    const Hamiltonian az = add(inst.h_z, identity_times(m, 2 * inst.c), 1, -1);
    const Hamiltonian h = inst.assemble();
    const std::size_t n = h.num_qubits();

    report.analytic_four_points = true;
    for (std::size_t p = 0; p < 4; ++p) {
        const double t = lemma_angles()[p];
        const DoubledSinCos r = doubled_sincos(t);
        const Rational s(static_cast<long>(r.sin2));
        const Rational cs(static_cast<long>(r.cos2));
        const Hamiltonian b = add(az, ax, s * cs, -cs * s);
        const Hamiltonian cblock = add(az, ax, cs * s, -s * cs);
        if (!r.exact || !b.empty() || !cblock.empty()) report.analytic_four_points = false;

        std::vector<CliffordGate> gates(n);
        gates[0] = gates[1] = rotation_as_clifford(t);
        report.point_stoquastic[p] = is_stoquastic_pauli_sum(conjugate_clifford(h, gates)).stoquastic();
    }

    const double step = options.step > 0 ? options.step : kPi / 180;
    report.grid_step = step;
    const std::vector<double> grid = angle_grid(step);
    report.grid_points = grid.size() * grid.size();
    const RealHamiltonian hr = to_real(h);

    std::vector<std::vector<std::array<double, 2>>> rows(grid.size());
    parallel_for(grid.size(), options.jobs, [&](std::size_t i) {
        std::vector<double> thetas(n, 0.0);
        thetas[0] = grid[i];
        for (double t2 : grid) {
            thetas[1] = t2;
            const RealHamiltonian conj = conjugate_rotation(hr, thetas);
            if (is_stoquastic_pauli_sum(conj, kFloatTolerance, DenseLimits{24}, false).stoquastic()) {
                rows[i].push_back({grid[i], t2});
            }
        }
    });
    for (auto &row : rows) {
        for (auto &pt : row) report.curing_points.push_back(pt);
    }
    report.clusters = cluster_angles(report.curing_points, 1.5 * step);

    for (const auto &pt : report.curing_points) {
        bool near = false;
        for (double a : lemma_angles()) {
            if (wrapped_gap(pt[0], a) <= step * (1 + 1e-9) && wrapped_gap(pt[1], a) <= step * (1 + 1e-9)) near = true;
        }
        if (!near) report.only_near_lemma_points = false;
        const DoubledSinCos r1 = doubled_sincos(pt[0]);
        const DoubledSinCos r2 = doubled_sincos(pt[1]);
        if (std::abs(r1.sin2 * r2.cos2) > kFloatTolerance || std::abs(r1.cos2 * r2.sin2) > kFloatTolerance) {
            report.blocks_vanish_at_curing_points = false;
        }
    }
    return report;
}

std::vector<RotationAssignment> cure_sixlocal(const Hamiltonian &h) {
    const std::size_t nq = h.num_qubits();
    if (nq % 2 != 0) throw Error(ErrorCode::InvalidInput, "six-local Hamiltonians have an even qubit count");
    const std::size_t n = nq / 2;
    if (n > 10) throw Error(ErrorCode::TooLarge, "4^n pair values exceed the enumeration cap");

    const std::vector<Hamiltonian> parts = h.parts();
    std::vector<std::vector<std::size_t>> vars;
    for (const auto &p : parts) {
        std::set<std::size_t> vs;
        for (std::size_t q : p.support()) vs.insert(q / 2);
        vars.emplace_back(vs.begin(), vs.end());
    }
    std::array<CliffordGate, 4> equivalents;
    for (std::size_t k = 0; k < 4; ++k) equivalents[k] = rotation_as_clifford(lemma_angles()[k]);

    std::vector<std::unordered_map<std::uint64_t, bool>> cache(parts.size());
    std::vector<RotationAssignment> out;
    std::vector<std::size_t> choice(n, 0);
    const std::uint64_t total = std::uint64_t{1} << (2 * n);
    for (std::uint64_t code = 0; code < total; ++code) {
        for (std::size_t v = 0; v < n; ++v) choice[v] = (code >> (2 * (n - 1 - v))) & 3;
        std::vector<CliffordGate> gates(nq);
        for (std::size_t v = 0; v < n; ++v) gates[2 * v] = gates[2 * v + 1] = equivalents[choice[v]];
        bool ok = true;
        for (std::size_t g = 0; g < parts.size() && ok; ++g) {
            std::uint64_t key = 0;
            for (std::size_t v : vars[g]) key = key * 4 + choice[v];
            auto it = cache[g].find(key);
            if (it == cache[g].end()) {
                it = cache[g].emplace(key, part_is_stoquastic(conjugate_clifford(parts[g], gates))).first;
            }
            ok = it->second;
        }
        if (!ok) continue;
        RotationAssignment a;
        for (std::size_t v = 0; v < n; ++v) {
            a.thetas.push_back(lemma_angles()[choice[v]]);
            a.thetas.push_back(lemma_angles()[choice[v]]);
        }
        out.push_back(std::move(a));
    }
    return out;
}

TriangleReport triangle_incurability(double step, unsigned jobs) {
    TriangleReport report;

    // An edge is cured only when sin 2d = 0 and cos 2d = -1, i.e. d = pi/2
    // mod pi. Put both (1,2) and (2,3) there; the third difference is minus
    // their sum.
    const double d12 = kPi / 2;
    const double d23 = kPi / 2;
    const DoubledSinCos e12 = doubled_sincos(d12);
    const DoubledSinCos e23 = doubled_sincos(d23);
    const DoubledSinCos e31 = doubled_sincos(-(d12 + d23));
    const double forced_cos = e12.cos2 * e23.cos2 - e12.sin2 * e23.sin2;
    report.analytic_contradiction = e12.cos2 == -1 && e23.cos2 == -1 && forced_cos == 1 && e31.cos2 == 1;

    const RealHamiltonian edge =
        to_real(Hamiltonian::collect(2, {{GaussRational(1), PauliString("ZZ")}, {GaussRational(1), PauliString("XX")}}));
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> angle(-kPi / 2, kPi / 2);
    report.edge_identity_holds = true;
    for (int trial = 0; trial < 32; ++trial) {
        const std::vector<double> t{angle(rng), angle(rng)};
        const RealHamiltonian got = conjugate_rotation(edge, t);
        const double d = 2 * (t[0] - t[1]);
        const std::map<std::string, double> want{
            {"XX", std::cos(d)}, {"ZZ", std::cos(d)}, {"XZ", std::sin(d)}, {"ZX", -std::sin(d)}};
        for (const auto &[p, v] : want) {
            if (std::abs(got.coefficient_of(PauliString(p)) - v) > 1e-12) report.edge_identity_holds = false;
        }
        for (const auto &term : got.terms()) {
            if (!want.count(term.paulis.str())) report.edge_identity_holds = false;
        }
    }

    const Hamiltonian tri = Hamiltonian::collect(3, {{GaussRational(1), PauliString("ZZI")},
                                                     {GaussRational(1), PauliString("XXI")},
                                                     {GaussRational(1), PauliString("IZZ")},
                                                     {GaussRational(1), PauliString("IXX")},
                                                     {GaussRational(1), PauliString("ZIZ")},
                                                     {GaussRational(1), PauliString("XIX")}});
    const RealHamiltonian tri_r = to_real(tri);
    step = step > 0 ? step : kPi / 60;
    report.grid_step = step;
    const std::vector<double> grid = angle_grid(step);
    report.grid_points = grid.size() * grid.size() * grid.size();
    std::vector<std::size_t> hits(grid.size(), 0);
    parallel_for(grid.size(), jobs, [&](std::size_t i) {
        for (double t2 : grid) {
            for (double t3 : grid) {
                const std::vector<double> t{grid[i], t2, t3};
                if (is_stoquastic_pauli_sum(conjugate_rotation(tri_r, t), kFloatTolerance, DenseLimits{24}, false)
                        .stoquastic()) {
                    ++hits[i];
                }
            }
        }
    });
    for (std::size_t h : hits) report.curing_points += h;

    const Hamiltonian two = Hamiltonian::collect(3, {{GaussRational(1), PauliString("ZZI")},
                                                     {GaussRational(1), PauliString("XXI")},
                                                     {GaussRational(1), PauliString("IZZ")},
                                                     {GaussRational(1), PauliString("IXX")}});
    const std::vector<CliffordGate> z2{CliffordGate::identity(), CliffordGate::pauli('Z'), CliffordGate::identity()};
    report.two_edge_cured_by_z2 = is_stoquastic_pauli_sum(conjugate_clifford(two, z2)).stoquastic();

    const std::vector<double> equal{0.3, 0.3};
    report.single_edge_equal_angles_stoquastic =
        is_stoquastic_pauli_sum(conjugate_rotation(edge, equal)).stoquastic();
    const std::vector<CliffordGate> z_second{CliffordGate::identity(), CliffordGate::pauli('Z')};
    report.single_edge_cured_by_z =
        is_stoquastic_pauli_sum(conjugate_clifford(to_exact(edge), z_second)).stoquastic();
    return report;
}

}  // namespace stoqcure
