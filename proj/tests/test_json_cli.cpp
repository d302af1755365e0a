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


#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "stoqcure/cli.hpp"
#include "stoqcure/error.hpp"
#include "stoqcure/json_io.hpp"

namespace stoqcure {
namespace {

namespace fs = std::filesystem;

struct CliRun {
    int code;
    std::string out;
    std::string err;
    Json json() const { return Json::parse(out); }
};

CliRun cli(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
   protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("stoqcure_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string write(const std::string &name, const std::string &text) {
        const fs::path p = dir_ / name;
        std::ofstream(p) << text;
        return p.string();
    }

    fs::path dir_;
};

TEST(json_io, exact_hamiltonian_round_trip) {
    const Json j = Json::parse(R"({"n": 2, "terms": [
        {"re": "1/3", "im": "0", "paulis": "XI"},
        {"re": "-2.5", "im": "0", "paulis": "ZZ"},
        {"re": 4, "paulis": "IX"}], "groups": [[1], [0, 2]]})");
    const Hamiltonian h = hamiltonian_from_json(j);
    EXPECT_EQ(h.terms()[0].coeff, GaussRational(Rational(1, 3)));
    EXPECT_EQ(h.terms()[1].coeff, GaussRational(Rational(-5, 2)));
    EXPECT_EQ(h.terms()[2].coeff, GaussRational(4));
    EXPECT_EQ(h.num_groups(), 2u);
    const Json back = to_json(h);
    EXPECT_EQ(back["terms"][0]["re"], "1/3");
    EXPECT_EQ(back["terms"][1]["re"], "-2.5");
    const Hamiltonian again = hamiltonian_from_json(back);
    EXPECT_EQ(to_json(again), back);
}

TEST(json_io, real_coefficients_round_trip_bit_for_bit) {
    const Json j = Json::parse(R"({"n": 1, "terms": [{"re": "0.1", "im": "0", "paulis": "X"},
                                                    {"re": "1/3", "im": "0", "paulis": "Z"}]})");
    const RealHamiltonian h = real_hamiltonian_from_json(j);
    EXPECT_EQ(h.coefficient_of(PauliString("X")), 0.1);
    EXPECT_EQ(h.coefficient_of(PauliString("Z")), 1.0 / 3.0);
    const RealHamiltonian back = real_hamiltonian_from_json(to_json(h));
    EXPECT_EQ(back.coefficient_of(PauliString("Z")), 1.0 / 3.0);
}

TEST(json_io, malformed_documents) {
    const char *bad[] = {
        R"([])",
        R"({"terms": []})",
        R"({"n": 1})",
        R"({"n": 1, "terms": [{"re": "1", "paulis": "Q"}]})",
        R"({"n": 1, "terms": [{"re": "x", "paulis": "X"}]})",
        R"({"n": 2, "terms": [{"re": "1", "paulis": "X"}]})",
        R"({"n": 1, "terms": [{"re": "1", "paulis": "X"}], "groups": [[3]]})",
        R"({"n": 1, "terms": [{"re": "1", "paulis": "X"}], "groups": "all"})",
    };
    for (const char *text : bad) EXPECT_THROW(hamiltonian_from_json(Json::parse(text)), Error) << text;
    EXPECT_THROW(real_hamiltonian_from_json(Json::parse(R"({"n": 1, "terms": [{"re": "1", "im": "1", "paulis": "X"}]})")),
                 Error);
}

TEST(json_io, keys_and_assignments) {
    const SecretKey k{7, GateAssignment::cliffords(std::vector<CliffordGate>{CliffordGate::hadamard(),
                                                                            CliffordGate::parse("XW")})};
    const Json j = to_json(k);
    EXPECT_EQ(j["seed"], 7);
    EXPECT_EQ(j["gates"], Json::parse(R"(["W", "XW"])"));
    const SecretKey back = key_from_json(j);
    EXPECT_EQ(back.gates.clifford_gates(), k.gates.clifford_gates());
    const GateAssignment rot = assignment_from_json(Json::parse("[0.5, -0.25]"));
    EXPECT_TRUE(rot.all_rotation());
    EXPECT_THROW(assignment_from_json(Json::parse(R"(["Q"])")), Error);
    EXPECT_THROW(key_from_json(Json::parse(R"({"seed": 1})")), Error);
}

TEST_F(CliTest, check_grouped_sum_example) {
    const std::string h = write("h.json", R"({"n": 2, "terms": [{"re": "-2", "im": "0", "paulis": "XI"},
        {"re": "1", "im": "0", "paulis": "XZ"}], "groups": [[0, 1]]})");
    const CliRun r = cli({"check", h, "--grouped"});
    EXPECT_EQ(r.code, cli::kAffirmative);
    EXPECT_EQ(r.json()["verdict"], "stoquastic");

    const std::string split = write("split.json", R"({"n": 2, "terms": [{"re": "-2", "im": "0", "paulis": "XI"},
        {"re": "1", "im": "0", "paulis": "XZ"}], "groups": [[0], [1]]})");
    const CliRun s = cli({"check", split, "--grouped", "--human"});
    EXPECT_EQ(s.code, cli::kNegative);
    EXPECT_EQ(s.json()["witness"]["group"], 1);
    EXPECT_FALSE(s.err.empty());
    EXPECT_EQ(cli({"check", split}).code, cli::kAffirmative);
}

TEST_F(CliTest, encode_then_verify_reduction) {
    const std::string cnf = write("f.cnf", "p cnf 4 3\n1 2 3 0\n-1 2 -4 0\n2 3 -4 0\n");
    const CliRun enc = cli({"encode", cnf, "--variant", "3local", "--c", "auto"});
    ASSERT_EQ(enc.code, cli::kAffirmative) << enc.err;
    EXPECT_EQ(enc.json()["n"], 4);
    const CliRun ver = cli({"verify-reduction", cnf, "--variant", "3local"});
    EXPECT_EQ(ver.code, cli::kAffirmative);
    EXPECT_EQ(ver.json()["equal"], true);

    const std::string h = write("h.json", enc.out);
    const CliRun cure = cli({"cure-clifford", h, "--all", "--jobs", "2"});
    EXPECT_EQ(cure.code, cli::kAffirmative);
    EXPECT_EQ(cure.json()["assignments"].size(), ver.json()["sat_set_size"]);

    const std::string six = write("six.json", cli({"encode", cnf, "--variant", "6local"}).out);
    const CliRun rot = cli({"cure-rotation", six});
    EXPECT_EQ(rot.code, cli::kAffirmative);
    // Each satisfying assignment has two curing angles per variable.
    EXPECT_EQ(rot.json()["decoded"].size(), (std::size_t{1} << 4) * ver.json()["sat_set_size"].get<std::size_t>());
}

TEST_F(CliTest, explicit_penalty_is_guarded_on_six_local) {
    const std::string cnf = write("f.cnf", "p cnf 3 1\n1 2 3 0\n");
    EXPECT_EQ(cli({"encode", cnf, "--variant", "6local", "--c", "1"}).code, cli::kAffirmative);
    EXPECT_EQ(cli({"encode", cnf, "--variant", "6local", "--c", "0"}).code, cli::kError);
    EXPECT_EQ(cli({"encode", cnf, "--variant", "3local", "--c", "-1"}).code, cli::kError);
}

TEST_F(CliTest, triangle_is_not_curable) {
    const CliRun r = cli({"triangle", "--grid-step-deg", "6"});
    EXPECT_EQ(r.code, cli::kNegative);
    EXPECT_TRUE(r.json()["curing_clusters"].empty());
    EXPECT_EQ(r.json()["curable"], false);
}

TEST_F(CliTest, cure_pauli_and_group) {
    const std::string h = write("h.json", R"({"n": 3, "terms": [{"re": "1", "im": "0", "paulis": "YYI"},
        {"re": "3", "im": "0", "paulis": "XXI"}, {"re": "1", "im": "0", "paulis": "XXZ"}], "groups": [[0, 1, 2]]})");
    const CliRun r = cli({"cure-pauli", h, "--all"});
    EXPECT_EQ(r.code, cli::kAffirmative);
    EXPECT_EQ(r.json()["x"], "100");
    EXPECT_EQ(r.json()["reason"], nullptr);
    EXPECT_EQ(r.json()["all"].size(), 4u);

    const std::string g = write("g.json", R"({"n": 3, "terms": [{"re": "1", "im": "0", "paulis": "ZXI"},
        {"re": "-2", "im": "0", "paulis": "IXI"}, {"re": "1", "im": "0", "paulis": "IXZ"}]})");
    const CliRun grp = cli({"group", g, "--k", "2", "--dump-lp"});
    EXPECT_EQ(grp.code, cli::kAffirmative);
    EXPECT_EQ(grp.json()["hamiltonian"]["groups"].size(), 2u);
    EXPECT_NE(grp.json()["lp"].get<std::string>().find("<= 0"), std::string::npos);
    EXPECT_EQ(cli({"group", g, "--k", "1"}).code, cli::kError);
    const CliRun inc = cli({"group", g, "--k", "1", "--increase"});
    EXPECT_EQ(inc.code, cli::kAffirmative);
    EXPECT_EQ(inc.json()["k_prime"], 2);
}

TEST_F(CliTest, scramble_descramble_and_planted) {
    const CliRun gen = cli({"gen-planted", "--n", "5", "--m", "8", "--seed", "3", "--out", (dir_ / "p.cnf").string()});
    ASSERT_EQ(gen.code, cli::kAffirmative);
    const std::string cnf = (dir_ / "p.cnf").string();
    EXPECT_TRUE(fs::exists(cnf));
    const CliRun ver = cli({"verify-reduction", cnf});
    EXPECT_EQ(ver.json()["planted_cures"], true);

    const std::string h = write("h.json", R"({"n": 2, "terms": [{"re": "2", "im": "0", "paulis": "ZZ"},
        {"re": "-3", "im": "0", "paulis": "XX"}], "groups": [[0, 1]]})");
    const std::string key = write("k.json", R"({"seed": 0, "gates": ["W", "W"]})");
    const CliRun s = cli({"scramble", h, "--key", key});
    ASSERT_EQ(s.code, cli::kAffirmative);
    EXPECT_EQ(s.json()["stoquastic"], false);
    const std::string scrambled = write("s.json", s.json()["hamiltonian"].dump());
    const CliRun d = cli({"descramble", scrambled, "--key", key});
    EXPECT_EQ(d.code, cli::kAffirmative);
    const Hamiltonian original = hamiltonian_from_json(Json::parse(std::ifstream(h)));
    const Hamiltonian recovered = hamiltonian_from_json(d.json()["hamiltonian"]);
    ASSERT_EQ(recovered.terms().size(), original.terms().size());
    for (const auto &t : original.terms()) EXPECT_EQ(recovered.coefficient_of(t.paulis), t.coeff);

    const CliRun seeded = cli({"scramble", h, "--seed", "4", "--key-kind", "full"});
    EXPECT_EQ(seeded.code, cli::kAffirmative);
    EXPECT_EQ(cli({"scramble", h}).code, cli::kError);
}

TEST_F(CliTest, decode_and_lemma3) {
    const std::string a = write("a.json", R"(["I", "W", "I"])");
    EXPECT_EQ(cli({"decode", a}).json()["x"], "010");
    const std::string bad = write("b.json", R"(["P"])");
    EXPECT_EQ(cli({"decode", bad}).code, cli::kError);

    const std::string cnf = write("f.cnf", "p cnf 3 1\n1 2 3 0\n");
    const CliRun r = cli({"lemma3", cnf, "--var", "1"});
    EXPECT_EQ(r.code, cli::kAffirmative) << r.err;
    EXPECT_EQ(r.json()["curing_clusters"].size(), 4u);
}

TEST_F(CliTest, errors_exit_with_two) {
    EXPECT_EQ(cli({}).code, cli::kError);
    EXPECT_EQ(cli({"frobnicate"}).code, cli::kError);
    EXPECT_EQ(cli({"check", (dir_ / "missing.json").string()}).code, cli::kError);
    const std::string junk = write("junk.json", "{not json");
    EXPECT_EQ(cli({"check", junk}).code, cli::kError);
    const std::string big = write("big.json", R"({"n": 40, "terms": [{"re": "1", "paulis": ")" + std::string(40, 'X') + R"("}]})");
    EXPECT_EQ(cli({"check", big}).code, cli::kError);
    EXPECT_EQ(cli({"--help"}).code, cli::kAffirmative);
}

TEST_F(CliTest, output_is_deterministic) {
    const std::string cnf = write("f.cnf", "p cnf 5 4\n1 2 3 0\n-1 2 -4 0\n2 3 -5 0\n-3 -4 -5 0\n");
    for (const auto &args : std::vector<std::vector<std::string>>{
             {"encode", cnf}, {"verify-reduction", cnf, "--variant", "6local"}, {"gen-planted", "--n", "6", "--m", "9", "--seed", "1"}}) {
        EXPECT_EQ(cli(args).out, cli(args).out);
    }
    const std::string h = write("h.json", cli({"encode", cnf}).out);
    EXPECT_EQ(cli({"cure-clifford", h, "--all", "--jobs", "1"}).out, cli({"cure-clifford", h, "--all", "--jobs", "3"}).out);
}

}  // namespace
}  // namespace stoqcure
