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


#include "stoqcure/clifford_cure.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <unordered_map>

#include "stoqcure/error.hpp"
#include "stoqcure/stoq.hpp"

namespace stoqcure {

GateSet GateSet::iw() { return {GateSetName::IW, {CliffordGate::identity(), CliffordGate::hadamard()}}; }

GateSet GateSet::cprime1() {
    return {GateSetName::CPrime1,
            {CliffordGate::identity(), CliffordGate::pauli('X'), CliffordGate::hadamard(), CliffordGate::parse("XW")}};
}

GateSet GateSet::full() {
    const auto &all = CliffordGate::all();
    return {GateSetName::FullC1, std::vector<CliffordGate>(all.begin(), all.end())};
}

GateSet GateSet::parse(const std::string &name) {
    if (name == "IW" || name == "iw") return iw();
    if (name == "CPrime1" || name == "cprime1") return cprime1();
    if (name == "FullC1" || name == "full") return full();
    throw Error(ErrorCode::InvalidInput, "unknown gate set '" + name + "'");
}

std::string GateSet::name_str() const {
    switch (name) {
        case GateSetName::IW: return "IW";
        case GateSetName::CPrime1: return "CPrime1";
        case GateSetName::FullC1: return "FullC1";
        case GateSetName::Custom: break;
    }
    return "Custom";
}

bool GateSet::contains(const CliffordGate &g) const {
    return std::find(elements.begin(), elements.end(), g) != elements.end();
}

CliffordGate canonicalize_mod_x(const CliffordGate &g) {
    const CliffordGate other = CliffordGate::pauli('X') * g;
    return other.index() < g.index() ? other : g;
}

namespace {

class Searcher {
   public:
    Searcher(const Hamiltonian &h, std::vector<GateSet> sets, SearchMode mode, std::uint64_t max_checks)
        : n_(h.num_qubits()), sets_(std::move(sets)), mode_(mode), max_checks_(max_checks) {
        parts_ = h.parts();
        groups_at_.resize(n_);
        for (std::size_t g = 0; g < parts_.size(); ++g) {
            supports_.push_back(parts_[g].support());
            if (supports_.back().empty()) {
                if (!part_is_stoquastic(parts_[g])) always_fails_ = true;
                continue;
            }
            groups_at_[supports_.back().back()].push_back(g);
        }
    }

    std::size_t num_branches() const { return n_ == 0 ? 1 : sets_[0].elements.size(); }
    std::uint64_t checks() const { return checks_.load(); }

    /// Runs the subtree with qubit 0 fixed to its branch-th gate.
    std::vector<std::vector<CliffordGate>> run_branch(std::size_t branch) {
        std::vector<std::vector<CliffordGate>> found;
        if (always_fails_) return found;
        std::vector<CliffordGate> gates(n_);
        std::vector<std::unordered_map<std::uint64_t, bool>> cache(parts_.size());
        if (n_ == 0) {
            found.push_back({});
            return found;
        }
        gates[0] = sets_[0].elements[branch];
        if (!groups_ok(0, gates, cache)) return found;
        descend(1, gates, cache, found);
        return found;
    }

   private:
    bool groups_ok(std::size_t q, const std::vector<CliffordGate> &gates,
                   std::vector<std::unordered_map<std::uint64_t, bool>> &cache) {
        for (std::size_t g : groups_at_[q]) {
            if (checks_.fetch_add(1) + 1 > max_checks_) {
                throw Error(ErrorCode::BudgetExceeded,
                            "search needed more than " + std::to_string(max_checks_) + " group checks");
            }
            std::uint64_t key = 0;
            for (std::size_t s : supports_[g]) key = key * 24 + gates[s].index();
            auto it = cache[g].find(key);
            if (it == cache[g].end()) {
                const bool ok = part_is_stoquastic(conjugate_clifford(parts_[g], gates));
                it = cache[g].emplace(key, ok).first;
            }
            if (!it->second) return false;
        }
        return true;
    }

    bool descend(std::size_t q, std::vector<CliffordGate> &gates,
                 std::vector<std::unordered_map<std::uint64_t, bool>> &cache,
                 std::vector<std::vector<CliffordGate>> &found) {
        if (q == n_) {
            found.push_back(gates);
            return mode_ == SearchMode::First;
        }
        for (const auto &g : sets_[q].elements) {
            gates[q] = g;
            if (groups_ok(q, gates, cache) && descend(q + 1, gates, cache, found)) return true;
        }
        gates[q] = CliffordGate::identity();
        return false;
    }

    std::size_t n_;
    std::vector<GateSet> sets_;
    SearchMode mode_;
    std::uint64_t max_checks_;
    std::vector<Hamiltonian> parts_;
    std::vector<std::vector<std::size_t>> supports_;
    std::vector<std::vector<std::size_t>> groups_at_;
    bool always_fails_ = false;
    std::atomic<std::uint64_t> checks_{0};
};

}  // namespace

SearchResult brute_force_cure(const Hamiltonian &h, const GateSet &gs, SearchMode mode, const SearchOptions &options) {
    const std::size_t n = h.num_qubits();
    std::vector<GateSet> sets = options.per_site ? *options.per_site : std::vector<GateSet>(n, gs);
    if (sets.size() != n) throw Error(ErrorCode::InvalidInput, "per-site gate sets must cover every qubit");

    Searcher searcher(h, std::move(sets), mode, options.max_checks);
    const std::size_t branches = searcher.num_branches();
    std::vector<std::vector<std::vector<CliffordGate>>> per_branch(branches);

    const unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(branches)));
    if (jobs == 1) {
        for (std::size_t b = 0; b < branches; ++b) {
            per_branch[b] = searcher.run_branch(b);
            if (mode == SearchMode::First && !per_branch[b].empty()) break;
        }
    } else {
        std::atomic<std::size_t> next{0};
        std::exception_ptr error;
        std::mutex error_mu;
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < jobs; ++t) {
            pool.emplace_back([&] {
                for (std::size_t b = next.fetch_add(1); b < branches; b = next.fetch_add(1)) {
                    try {
                        per_branch[b] = searcher.run_branch(b);
                    } catch (...) {
                        std::lock_guard<std::mutex> lock(error_mu);
                        if (!error) error = std::current_exception();
                        return;
                    }
                }
            });
        }
        for (auto &t : pool) t.join();
        if (error) std::rethrow_exception(error);
    }

    SearchResult result;
    result.checks = searcher.checks();
    for (auto &found : per_branch) {
        for (auto &a : found) {
            result.assignments.push_back(std::move(a));
            if (mode == SearchMode::First) return result;
        }
    }
    return result;
}

GateSet driver_filter(const Hamiltonian &h, std::size_t site) {
    const std::size_t n = h.num_qubits();
    if (site >= n) throw Error(ErrorCode::InvalidInput, "site out of range");
    std::vector<Hamiltonian::TermType> local;
    const auto flat = h.flattened();
    for (const auto &t : flat.terms()) {
        const auto sup = t.paulis.support();
        if (sup.size() == 1 && sup[0] == site) local.push_back({t.coeff, PauliString(std::string(1, t.paulis[site]))});
    }
    const Hamiltonian d = Hamiltonian::collect(1, std::move(local));
    GateSet out;
    for (const auto &g : CliffordGate::all()) {
        const std::vector<CliffordGate> one{g};
        if (part_is_stoquastic(conjugate_clifford(d, one))) out.elements.push_back(g);
    }
    if (out.elements == GateSet::cprime1().elements) out.name = GateSetName::CPrime1;
    return out;
}

std::vector<GateSet> driver_restricted_sets(const Hamiltonian &h, const GateSet &gs) {
    std::vector<GateSet> out;
    for (std::size_t q = 0; q < h.num_qubits(); ++q) {
        const GateSet allowed = driver_filter(h, q);
        GateSet s{GateSetName::Custom, {}};
        for (const auto &g : gs.elements) {
            if (allowed.contains(g)) s.elements.push_back(g);
        }
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace stoqcure
