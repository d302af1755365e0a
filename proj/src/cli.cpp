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


#include "stoqcure/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>

#include "stoqcure/clifford_cure.hpp"
#include "stoqcure/error.hpp"
#include "stoqcure/grouping.hpp"
#include "stoqcure/json_io.hpp"
#include "stoqcure/orthogonal.hpp"
#include "stoqcure/pauli_cure.hpp"
#include "stoqcure/sat.hpp"
#include "stoqcure/scrambler.hpp"
#include "stoqcure/stoq.hpp"

namespace stoqcure::cli {

namespace {

struct Globals {
    bool human = false;
    std::optional<std::size_t> max_dense_qubits;
    std::uint64_t max_search = SearchOptions{}.max_checks;
    unsigned jobs = 1;
};

std::string read_text(const std::string &path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::InvalidInput, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Json read_json(const std::string &path) {
    try {
        return Json::parse(read_text(path));
    } catch (const nlohmann::json::parse_error &e) {
        throw Error(ErrorCode::ParseError, path + ": " + e.what());
    }
}

void write_text(const std::string &path, const std::string &text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error(ErrorCode::InvalidInput, "cannot write '" + path + "'");
    f << text;
}

Variant parse_variant(const std::string &s) {
    if (s == "3local") return Variant::ThreeLocal;
    if (s == "6local") return Variant::SixLocal;
    throw Error(ErrorCode::InvalidInput, "variant must be 3local or 6local");
}

std::optional<Rational> parse_c(const std::string &s) {
    if (s == "auto") return std::nullopt;
    Rational c = parse_rational(s);
    if (sgn(c) < 0) throw Error(ErrorCode::InvalidInput, "c must be non-negative");
    return c;
}

KeyKind parse_key_kind(const std::string &s) {
    if (s == "iw") return KeyKind::IW;
    if (s == "full") return KeyKind::FullClifford;
    if (s == "rotation") return KeyKind::Rotation;
    throw Error(ErrorCode::InvalidInput, "key kind must be iw, full or rotation");
}

double degrees(double deg) {
    if (!(deg >= 0)) throw Error(ErrorCode::InvalidInput, "grid step must be non-negative");
    return deg * std::numbers::pi / 180.0;
}

DenseLimits dense_limits(const Globals &g, std::size_t fallback) {
    return DenseLimits{g.max_dense_qubits.value_or(fallback)};
}

// An explicit penalty on the six-local path must keep every variable's pair a
// valid Lemma-3 instance; variables with no free completion are skipped.
void guard_sixlocal_c(const CnfInstance &cnf, const Rational &c, const Globals &g) {
    for (std::size_t v = 1; v <= cnf.num_vars(); ++v) {
        const auto rest = free_rest_assignment(cnf, v);
        if (!rest) continue;
        const auto inst = LemmaThreeInstance::from_sixlocal(cnf, v, *rest, c);
        const Lemma3Constraints k = check_lemma3_constraints(inst, dense_limits(g, DenseLimits{}.max_qubits));
        if (!k.hold()) {
            throw Error(ErrorCode::ConstraintViolated,
                        "c = " + format_rational(c) + " breaks the four-point constraints at variable " +
                            std::to_string(v));
        }
    }
}

GateAssignment read_assignment(const std::string &path) {
    const Json j = read_json(path);
    if (j.is_object() && j.contains("gates")) return assignment_from_json(j.at("gates"));
    return assignment_from_json(j);
}

struct Outcome {
    int code = kAffirmative;
    Json body;
    std::string summary;
};

Outcome do_check(const std::string &file, bool grouped, const Globals &g) {
    const Hamiltonian h = hamiltonian_from_json(read_json(file));
    const StoqReport r = grouped ? is_stoquastic_grouped(h, Rational(0), dense_limits(g, DenseLimits{}.max_qubits))
                                 : is_stoquastic_pauli_sum(h, Rational(0), dense_limits(g, 20));
    std::string summary = r.stoquastic() ? "stoquastic" : "not stoquastic";
    if (r.witness) {
        summary += ": entry (" + std::to_string(r.witness->row) + ", " + std::to_string(r.witness->col) +
                   ") = " + r.witness->value.str();
        if (r.witness->group) summary += " in group " + std::to_string(*r.witness->group);
    }
    return {r.stoquastic() ? kAffirmative : kNegative, to_json(r), summary};
}

Outcome do_cure_pauli(const std::string &file, bool all) {
    const Hamiltonian h = hamiltonian_from_json(read_json(file));
    const PauliCureResult r = cure_with_pauli(h);
    Json j = to_json(r);
    if (all) j["all"] = all_pauli_cures(h);
    return {r.cured() ? kAffirmative : kNegative, std::move(j),
            r.cured() ? "cured by Z^x with x = " + r.x : "no Pauli cure: " + r.reason};
}

Outcome do_group(const std::string &file, std::size_t k, bool supersets, bool unit_box, bool increase, bool dump_lp,
                 const Globals &g) {
    const Hamiltonian h = hamiltonian_from_json(read_json(file));
    GroupingOptions opt;
    opt.family = supersets ? SubsetFamily::TermSupersets : SubsetFamily::AllCombinations;
    opt.unit_box = unit_box;
    opt.limits = dense_limits(g, DenseLimits{}.max_qubits);

    std::size_t used = k;
    RegroupResult res;
    if (increase) {
        std::tie(used, res) = regroup_increasing(h, k, opt);
    } else {
        res = regroup(h, k, opt);
    }
    Json j{{"feasible", res.feasible}, {"k_prime", used}};
    if (res.feasible || dump_lp) {
        const GroupingProblem p = GroupingProblem::make(h, used, opt);
        const LpSystem lp = build_lp(p, opt);
        if (res.feasible) {
            j["hamiltonian"] = to_json(res.regrouped);
            j["subsets"] = res.group_subsets;
            Json w = Json::array();
            for (std::size_t i = 0; i < res.weights.size() && i < lp.var_names.size(); ++i) {
                w.push_back(Json{{"var", lp.var_names[i]}, {"value", format_rational(res.weights[i])}});
            }
            j["weights"] = std::move(w);
        }
        if (dump_lp) j["lp"] = format_lp(lp);
    }
    return {res.feasible ? kAffirmative : kNegative, std::move(j),
            res.feasible ? "stoquastic regrouping with k' = " + std::to_string(used)
                         : "no stoquastic regrouping with k' = " + std::to_string(used)};
}

Outcome do_cure_clifford(const std::string &file, const std::string &set_name, bool all, bool filter,
                         const Globals &g) {
    const Hamiltonian h = hamiltonian_from_json(read_json(file));
    const GateSet gs = GateSet::parse(set_name);
    SearchOptions opt;
    opt.max_checks = g.max_search;
    opt.jobs = g.jobs;
    if (filter) opt.per_site = driver_restricted_sets(h, gs);
    const SearchResult r = brute_force_cure(h, gs, all ? SearchMode::All : SearchMode::First, opt);
    Json assignments = Json::array();
    for (const auto &a : r.assignments) assignments.push_back(to_json(a));
    const bool cured = !r.assignments.empty();
    Json j{{"gate_set", gs.name_str()}, {"cured", cured}, {"assignments", std::move(assignments)}, {"checks", r.checks}};
    return {cured ? kAffirmative : kNegative, std::move(j),
            std::to_string(r.assignments.size()) + " curing assignment(s) over " + gs.name_str() + " after " +
                std::to_string(r.checks) + " group checks"};
}

Outcome do_encode(const std::string &file, const std::string &variant, const std::string &c_text, const Globals &g) {
    const DimacsFile d = parse_dimacs(read_text(file));
    const ReductionVariant v{parse_variant(variant), parse_c(c_text)};
    if (v.kind == Variant::SixLocal && v.penalty_c) guard_sixlocal_c(d.cnf, *v.penalty_c, g);
    const Hamiltonian h = encode_instance(d.cnf, v);
    return {kAffirmative, to_json(h),
            "encoded " + std::to_string(d.cnf.num_clauses()) + " clauses on " + std::to_string(h.num_qubits()) +
                " qubits with c = " + format_rational(v.c_for(d.cnf.num_clauses()))};
}

Outcome do_decode(const std::string &file, const std::string &variant) {
    const std::string x = decode_assignment(read_assignment(file), parse_variant(variant));
    return {kAffirmative, Json{{"x", x}}, "x = " + x};
}

Outcome do_verify_reduction(const std::string &file, const std::string &variant, const std::string &c_text,
                            const Globals &g) {
    const DimacsFile d = parse_dimacs(read_text(file));
    const ReductionVariant v{parse_variant(variant), parse_c(c_text)};
    ReductionLimits limits;
    if (g.max_dense_qubits) limits.whole_matrix_qubits = *g.max_dense_qubits;
    const ReductionReport r = verify_reduction(d.cnf, v, limits);
    Json j = to_json(r);
    if (d.planted) {
        j["planted"] = *d.planted;
        j["planted_cures"] = std::binary_search(r.curing_set.begin(), r.curing_set.end(), *d.planted);
    }
    return {r.equal ? kAffirmative : kNegative, std::move(j),
            std::string(r.equal ? "curing set equals" : "curing set differs from") + " the satisfying set (" +
                std::to_string(r.curing_set.size()) + " vs " + std::to_string(r.sat_set.size()) + ")"};
}

Outcome do_cure_rotation(const std::string &file) {
    const Hamiltonian h = hamiltonian_from_json(read_json(file));
    const std::vector<RotationAssignment> found = cure_sixlocal(h);
    Json assignments = Json::array();
    Json decoded = Json::array();
    for (const auto &a : found) {
        assignments.push_back(a.thetas);
        decoded.push_back(decode_assignment(GateAssignment::rotations(a.thetas), Variant::SixLocal));
    }
    Json j{{"cured", !found.empty()}, {"assignments", std::move(assignments)}, {"decoded", std::move(decoded)}};
    return {found.empty() ? kNegative : kAffirmative, std::move(j),
            std::to_string(found.size()) + " curing rotation assignment(s)"};
}

Outcome do_lemma3(const std::string &file, std::size_t var, const std::optional<std::string> &rest_in,
                  const std::string &c_text, double step_deg, const Globals &g) {
    const DimacsFile d = parse_dimacs(read_text(file));
    if (var < 1 || var > d.cnf.num_vars()) throw Error(ErrorCode::InvalidInput, "--var out of range");
    std::string rest;
    if (rest_in) {
        rest = *rest_in;
    } else {
        const auto free = free_rest_assignment(d.cnf, var);
        if (!free) {
            throw Error(ErrorCode::InvalidInput,
                        "no assignment satisfies the formula for both values of variable " + std::to_string(var));
        }
        rest = *free;
    }
    const Rational c = parse_c(c_text).value_or(Rational(1));
    const auto inst = LemmaThreeInstance::from_sixlocal(d.cnf, var, rest, c);
    GridOptions opt;
    opt.step = degrees(step_deg);
    opt.jobs = g.jobs;
    const FourPointReport r = verify_four_points(inst, opt);
    const bool ok = r.clusters.size() == 4 && r.analytic_four_points && r.only_near_lemma_points &&
                    r.blocks_vanish_at_curing_points;
    Json j = to_json(r);
    j["rest"] = rest;
    return {ok ? kAffirmative : kNegative, std::move(j),
            std::to_string(r.clusters.size()) + " curing cluster(s) from " + std::to_string(r.curing_points.size()) +
                " of " + std::to_string(r.grid_points) + " grid points"};
}

Outcome do_triangle(double step_deg, const Globals &g) {
    const TriangleReport r = triangle_incurability(degrees(step_deg), g.jobs);
    return {r.curable() ? kAffirmative : kNegative, to_json(r),
            std::to_string(r.curing_points) + " curing point(s) among " + std::to_string(r.grid_points)};
}

Outcome do_scramble(const std::string &file, const std::optional<std::string> &key_file,
                    const std::optional<std::uint64_t> &seed, const std::string &kind) {
    if (key_file.has_value() == seed.has_value()) {
        throw Error(ErrorCode::InvalidInput, "give exactly one of --key and --seed");
    }
    const Hamiltonian h = hamiltonian_from_json(read_json(file));
    const SecretKey key = key_file ? key_from_json(read_json(*key_file))
                                   : random_key(h.num_qubits(), *seed, parse_key_kind(kind));
    Json j;
    bool still_stoquastic = false;
    if (key.gates.all_rotation() && key.gates.size() > 0) {
        const RotationScrambleResult r = scramble_rotation(h, key);
        j["hamiltonian"] = to_json(r.h);
        still_stoquastic = r.stoquastic;
    } else {
        const ScrambleResult r = scramble(h, key);
        j["hamiltonian"] = to_json(r.h);
        still_stoquastic = r.stoquastic;
    }
    j["key"] = to_json(key);
    j["stoquastic"] = still_stoquastic;
    return {kAffirmative, std::move(j),
            still_stoquastic ? "scrambled (output is still stoquastic)" : "scrambled (output is not stoquastic)"};
}

Outcome do_descramble(const std::string &file, const std::string &key_file) {
    const SecretKey key = key_from_json(read_json(key_file));
    const Json in = read_json(file);
    Json j;
    bool stoquastic = false;
    if (key.gates.all_rotation() && key.gates.size() > 0) {
        const RotationScrambleResult r = descramble_rotation(real_hamiltonian_from_json(in), key);
        j["hamiltonian"] = to_json(r.h);
        stoquastic = r.stoquastic;
    } else {
        const ScrambleResult r = descramble(hamiltonian_from_json(in), key);
        j["hamiltonian"] = to_json(r.h);
        stoquastic = r.stoquastic;
    }
    j["stoquastic"] = stoquastic;
    return {stoquastic ? kAffirmative : kNegative, std::move(j),
            stoquastic ? "descrambled to a stoquastic Hamiltonian" : "descrambled output is not stoquastic"};
}

Outcome do_gen_planted(std::size_t n, std::size_t m, std::uint64_t seed, const std::optional<std::string> &out) {
    const PlantedCnf p = generate_planted(n, m, seed);
    const std::string text = write_dimacs(p.cnf, p.planted);
    if (out) write_text(*out, text);
    Json j{{"n", n}, {"m", m}, {"seed", seed}, {"planted", p.planted}, {"dimacs", text}};
    return {kAffirmative, std::move(j), "planted " + p.planted + " in " + std::to_string(m) + " clauses"};
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Sign-problem curing for qubit Hamiltonians", "stoqcure"};
    app.require_subcommand(1);
    Globals g;
    app.add_flag("--human", g.human, "Print a one-line summary to standard error");
    app.add_option("--max-dense-qubits", g.max_dense_qubits, "Cap on qubits for dense checks");
    app.add_option("--max-search", g.max_search, "Cap on group checks in the Clifford search");
    app.add_option("--jobs", g.jobs, "Worker threads for the parallel scans")->check(CLI::PositiveNumber);

    std::string file;
    std::string variant = "3local";
    std::string c_text = "auto";
    double step_deg = 0.0;

    auto *check = app.add_subcommand("check", "Decide stoquasticity");
    check->add_option("file", file, "Hamiltonian JSON")->required();
    bool grouped = false;
    check->add_flag("--grouped", grouped, "Check each local term on its own");

    auto *cure_pauli = app.add_subcommand("cure-pauli", "Find a Z-string that cures the Hamiltonian");
    cure_pauli->add_option("file", file, "Hamiltonian JSON")->required();
    bool all_cures = false;
    cure_pauli->add_flag("--all", all_cures, "List every curing Z-string");

    auto *group = app.add_subcommand("group", "Regroup terms into stoquastic k'-local parts");
    group->add_option("file", file, "Hamiltonian JSON")->required();
    std::size_t k = 0;
    bool supersets = false;
    bool unit_box = false;
    bool increase = false;
    bool dump_lp = false;
    group->add_option("--k", k, "Locality of the new parts")->required();
    group->add_flag("--supersets", supersets, "Only subsets that contain some term's support");
    group->add_flag("--unit-box", unit_box, "Bound every weight to [0, 1]");
    group->add_flag("--increase", increase, "Raise k' until a regrouping exists");
    group->add_flag("--dump-lp", dump_lp, "Include the linear program");

    auto *cure_clifford = app.add_subcommand("cure-clifford", "Search single-qubit Clifford cures");
    cure_clifford->add_option("file", file, "Hamiltonian JSON")->required();
    std::string gate_set = "iw";
    bool all_assignments = false;
    bool filter = false;
    cure_clifford->add_option("--gate-set", gate_set, "iw, cprime1 or full");
    cure_clifford->add_flag("--all", all_assignments, "Return every curing assignment");
    cure_clifford->add_flag("--driver-filter", filter, "Restrict each site to gates its 1-local terms allow");

    auto *encode = app.add_subcommand("encode", "Encode a 3-CNF as a Hamiltonian");
    encode->add_option("cnf", file, "DIMACS file")->required();
    encode->add_option("--variant", variant, "3local or 6local");
    encode->add_option("--c", c_text, "Driver penalty, or auto");

    auto *decode = app.add_subcommand("decode", "Read a bit string off a curing assignment");
    decode->add_option("file", file, "Assignment JSON")->required();
    decode->add_option("--variant", variant, "3local or 6local");

    auto *verify = app.add_subcommand("verify-reduction", "Compare curing and satisfying sets");
    verify->add_option("cnf", file, "DIMACS file")->required();
    verify->add_option("--variant", variant, "3local or 6local");
    verify->add_option("--c", c_text, "Driver penalty, or auto");

    auto *cure_rotation = app.add_subcommand("cure-rotation", "Rotation cures of a six-local encoding");
    cure_rotation->add_option("file", file, "Hamiltonian JSON")->required();

    auto *lemma3 = app.add_subcommand("lemma3", "Four-point analysis for one variable pair");
    lemma3->add_option("cnf", file, "DIMACS file")->required();
    std::size_t var = 0;
    std::optional<std::string> rest;
    lemma3->add_option("--var", var, "Variable whose pair is analysed (1-based)")->required();
    lemma3->add_option("--rest", rest, "Bits of the other variables");
    lemma3->add_option("--c", c_text, "Driver penalty, or auto");
    lemma3->add_option("--grid-step-deg", step_deg, "Grid step in degrees (0 for the default)");

    auto *triangle = app.add_subcommand("triangle", "Scan the frustrated triangle for rotation cures");
    triangle->add_option("--grid-step-deg", step_deg, "Grid step in degrees (0 for the default)");

    auto *scramble_cmd = app.add_subcommand("scramble", "Hide a stoquastic Hamiltonian behind a key");
    scramble_cmd->add_option("file", file, "Hamiltonian JSON")->required();
    std::optional<std::string> key_file;
    std::optional<std::uint64_t> seed;
    std::string key_kind = "iw";
    scramble_cmd->add_option("--key", key_file, "Key JSON");
    scramble_cmd->add_option("--seed", seed, "Draw a random key from this seed");
    scramble_cmd->add_option("--key-kind", key_kind, "iw, full or rotation");

    auto *descramble_cmd = app.add_subcommand("descramble", "Undo a scrambling with its key");
    descramble_cmd->add_option("file", file, "Hamiltonian JSON")->required();
    std::string key_path;
    descramble_cmd->add_option("--key", key_path, "Key JSON")->required();

    auto *gen = app.add_subcommand("gen-planted", "Generate a planted 3-CNF");
    std::size_t gen_n = 0;
    std::size_t gen_m = 0;
    std::uint64_t gen_seed = 0;
    std::optional<std::string> gen_out;
    gen->add_option("--n", gen_n, "Variables")->required();
    gen->add_option("--m", gen_m, "Clauses")->required();
    gen->add_option("--seed", gen_seed, "Seed")->required();
    gen->add_option("--out", gen_out, "Also write the DIMACS text here");

    for (auto *sub : app.get_subcommands({})) sub->fallthrough();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        if (e.get_exit_code() == 0) return app.exit(e, out, err);
        err << "error: " << e.what() << "\n";
        return kError;
    }

    try {
        Outcome o;
        if (check->parsed()) {
            o = do_check(file, grouped, g);
        } else if (cure_pauli->parsed()) {
            o = do_cure_pauli(file, all_cures);
        } else if (group->parsed()) {
            o = do_group(file, k, supersets, unit_box, increase, dump_lp, g);
        } else if (cure_clifford->parsed()) {
            o = do_cure_clifford(file, gate_set, all_assignments, filter, g);
        } else if (encode->parsed()) {
            o = do_encode(file, variant, c_text, g);
        } else if (decode->parsed()) {
            o = do_decode(file, variant);
        } else if (verify->parsed()) {
            o = do_verify_reduction(file, variant, c_text, g);
        } else if (cure_rotation->parsed()) {
            o = do_cure_rotation(file);
        } else if (lemma3->parsed()) {
            o = do_lemma3(file, var, rest, c_text, step_deg, g);
        } else if (triangle->parsed()) {
            o = do_triangle(step_deg, g);
        } else if (scramble_cmd->parsed()) {
            o = do_scramble(file, key_file, seed, key_kind);
        } else if (descramble_cmd->parsed()) {
            o = do_descramble(file, key_path);
        } else {
            o = do_gen_planted(gen_n, gen_m, gen_seed, gen_out);
        }
        out << o.body.dump(2) << "\n";
        if (g.human) err << o.summary << "\n";
        return o.code;
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
    } catch (const nlohmann::json::exception &e) {
        err << "error: ParseError: " << e.what() << "\n";
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
    }
    return kError;
}

}  // namespace stoqcure::cli
