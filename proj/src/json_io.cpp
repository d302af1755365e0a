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


#include "stoqcure/json_io.hpp"

#include <charconv>
#include <cmath>

#include "stoqcure/error.hpp"

namespace stoqcure {

namespace {

[[noreturn]] void bad(const std::string &msg) { throw Error(ErrorCode::ParseError, msg); }

std::string shortest(double v) {
    if (v == 0) return "0";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

Rational coefficient_part(const Json &j, const char *key) {
    if (!j.contains(key)) return Rational(0);
    const Json &v = j.at(key);
    if (v.is_string()) {
        try {
            return parse_rational(v.get<std::string>());
        } catch (const Error &e) {
            bad(std::string("bad coefficient: ") + e.what());
        }
    }
    if (v.is_number_integer()) return Rational(v.get<long>());
    bad(std::string("coefficient field '") + key + "' must be a string");
}

double real_part(const Json &j, const char *key) {
    if (!j.contains(key)) return 0.0;
    const Json &v = j.at(key);
    if (v.is_number()) return v.get<double>();
    if (!v.is_string()) bad(std::string("coefficient field '") + key + "' must be a string");
    const std::string s = v.get<std::string>();
    double out = 0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), out);
    if (res.ec == std::errc() && res.ptr == s.data() + s.size()) return out;
    return to_double(parse_rational(s));
}

struct RawDoc {
    std::size_t n = 0;
    std::vector<std::pair<const Json *, std::string>> terms;
    std::optional<Groups> groups;
};

RawDoc read_doc(const Json &j) {
    if (!j.is_object()) bad("Hamiltonian document must be an object");
    if (!j.contains("n") || !j.at("n").is_number_unsigned()) bad("missing or invalid \"n\"");
    if (!j.contains("terms") || !j.at("terms").is_array()) bad("missing \"terms\" array");
    RawDoc doc;
    doc.n = j.at("n").get<std::size_t>();
    for (const auto &t : j.at("terms")) {
        if (!t.is_object() || !t.contains("paulis") || !t.at("paulis").is_string()) bad("term needs a \"paulis\" string");
        doc.terms.emplace_back(&t, t.at("paulis").get<std::string>());
    }
    if (j.contains("groups") && !j.at("groups").is_null()) {
        Groups g;
        try {
            g = j.at("groups").get<Groups>();
        } catch (const nlohmann::json::exception &) {
            bad("\"groups\" must be a list of index lists");
        }
        doc.groups = std::move(g);
    }
    return doc;
}

template <class Coeff>
Json hamiltonian_json(const BasicHamiltonian<Coeff> &h, auto &&coeff_fields) {
    Json terms = Json::array();
    for (const auto &t : h.terms()) {
        Json term = coeff_fields(t.coeff);
        term["paulis"] = t.paulis.str();
        terms.push_back(std::move(term));
    }
    Json j{{"n", h.num_qubits()}, {"terms", std::move(terms)}};
    if (h.groups()) j["groups"] = *h.groups();
    return j;
}

Json witness_json(const std::optional<Witness> &w) {
    if (!w) return nullptr;
    Json j{{"row", w->row}, {"col", w->col}, {"re", format_rational(w->value.re)}, {"im", format_rational(w->value.im)}};
    if (w->group) j["group"] = *w->group;
    return j;
}

}  // namespace

Json to_json(const Hamiltonian &h) {
    return hamiltonian_json(h, [](const GaussRational &c) {
        return Json{{"re", format_rational(c.re)}, {"im", format_rational(c.im)}};
    });
}

Json to_json(const RealHamiltonian &h) {
    return hamiltonian_json(h, [](double c) { return Json{{"re", shortest(c)}, {"im", "0"}}; });
}

Hamiltonian hamiltonian_from_json(const Json &j) {
    const RawDoc doc = read_doc(j);
    std::vector<Hamiltonian::TermType> terms;
    for (const auto &[t, letters] : doc.terms) {
        for (char c : letters) {
            if (!is_pauli_letter(c)) bad("invalid Pauli string \"" + letters + "\"");
        }
        terms.push_back({GaussRational(coefficient_part(*t, "re"), coefficient_part(*t, "im")), PauliString(letters)});
    }
    return Hamiltonian::from_terms(doc.n, std::move(terms), doc.groups);
}

RealHamiltonian real_hamiltonian_from_json(const Json &j) {
    const RawDoc doc = read_doc(j);
    std::vector<RealHamiltonian::TermType> terms;
    for (const auto &[t, letters] : doc.terms) {
        for (char c : letters) {
            if (!is_pauli_letter(c)) bad("invalid Pauli string \"" + letters + "\"");
        }
        if (real_part(*t, "im") != 0.0) throw Error(ErrorCode::InvalidInput, "complex coefficient on the real path");
        terms.push_back({real_part(*t, "re"), PauliString(letters)});
    }
    return RealHamiltonian::from_terms(doc.n, std::move(terms), doc.groups);
}

Json to_json(const StoqReport &r) {
    return Json{{"verdict", r.stoquastic() ? "stoquastic" : "non_stoquastic"},
                {"witness", witness_json(r.witness)},
                {"mode", r.mode == CheckMode::PerTermGrouped ? "per_term_grouped" : "whole_matrix"}};
}

Json to_json(const PauliCureResult &r) {
    Json j{{"status", r.cured() ? "cured" : "infeasible"}};
    j["x"] = r.cured() ? Json(r.x) : Json(nullptr);
    j["reason"] = r.cured() ? Json(nullptr) : Json(r.reason);
    Json eqs = Json::array();
    for (const auto &e : r.system.equations) eqs.push_back(Json{{"vars", e.vars}, {"parity", e.parity ? 1 : 0}});
    j["equations"] = std::move(eqs);
    return j;
}

Json to_json(const ReductionReport &r) {
    Json shared = Json::array();
    for (const auto &[a, b] : r.shared_triples) shared.push_back({a, b});
    return Json{{"equal", r.equal},
                {"curing_set_size", r.curing_set.size()},
                {"sat_set_size", r.sat_set.size()},
                {"curing_set", r.curing_set},
                {"sat_set", r.sat_set},
                {"whole_matrix_checked", r.whole_matrix_checked},
                {"whole_matrix_agrees", r.whole_matrix_agrees},
                {"non_cancellation", r.non_cancellation},
                {"shared_triples", std::move(shared)}};
}

Json to_json(const Lemma3Constraints &c) {
    return Json{{"c1", c.c1},
                {"c2", c.c2},
                {"trace_x", format_rational(c.trace_x)},
                {"trace_z", format_rational(c.trace_z)},
                {"k", format_rational(c.k)},
                {"k_prime", format_rational(c.k_prime)},
                {"trace_argument", c.trace_argument}};
}

Json to_json(const FourPointReport &r) {
    Json clusters = Json::array();
    for (const auto &c : r.clusters) {
        clusters.push_back(Json{{"theta", {c.theta[0], c.theta[1]}}, {"radius", c.radius}, {"size", c.size}});
    }
    return Json{{"curing_clusters", std::move(clusters)},
                {"constraints", to_json(r.constraints)},
                {"precondition_failed", r.precondition_failed},
                {"analytic_four_points", r.analytic_four_points},
                {"point_stoquastic", r.point_stoquastic},
                {"grid_step", r.grid_step},
                {"grid_points", r.grid_points},
                {"curing_points", r.curing_points.size()},
                {"only_near_lemma_points", r.only_near_lemma_points},
                {"blocks_vanish_at_curing_points", r.blocks_vanish_at_curing_points}};
}

Json to_json(const TriangleReport &r) {
    return Json{{"curing_clusters", Json::array()},
                {"curable", r.curable()},
                {"analytic_contradiction", r.analytic_contradiction},
                {"edge_identity_holds", r.edge_identity_holds},
                {"grid_step", r.grid_step},
                {"grid_points", r.grid_points},
                {"curing_points", r.curing_points},
                {"two_edge_cured_by_z2", r.two_edge_cured_by_z2},
                {"single_edge_equal_angles_stoquastic", r.single_edge_equal_angles_stoquastic},
                {"single_edge_cured_by_z", r.single_edge_cured_by_z}};
}

Json to_json(const GateAssignment &g) {
    Json out = Json::array();
    for (const auto &e : g.gates) {
        if (const auto *c = std::get_if<CliffordGate>(&e)) {
            out.push_back(c->label());
        } else {
            out.push_back(std::get<double>(e));
        }
    }
    return out;
}

Json to_json(const std::vector<CliffordGate> &gates) {
    Json out = Json::array();
    for (const auto &g : gates) out.push_back(g.label());
    return out;
}

GateAssignment assignment_from_json(const Json &j) {
    if (!j.is_array()) bad("gate list must be an array");
    GateAssignment g;
    for (const auto &e : j) {
        if (e.is_string()) {
            try {
                g.gates.emplace_back(CliffordGate::parse(e.get<std::string>()));
            } catch (const Error &err) {
                bad(err.what());
            }
        } else if (e.is_number()) {
            g.gates.emplace_back(e.get<double>());
        } else {
            bad("gate entries must be labels or angles");
        }
    }
    return g;
}

Json to_json(const SecretKey &k) { return Json{{"seed", k.seed}, {"gates", to_json(k.gates)}}; }

SecretKey key_from_json(const Json &j) {
    if (!j.is_object() || !j.contains("gates")) bad("key needs a \"gates\" list");
    SecretKey k;
    if (j.contains("seed")) {
        if (!j.at("seed").is_number_unsigned()) bad("\"seed\" must be a non-negative integer");
        k.seed = j.at("seed").get<std::uint64_t>();
    }
    k.gates = assignment_from_json(j.at("gates"));
    return k;
}

}  // namespace stoqcure
