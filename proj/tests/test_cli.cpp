// Copyright 2026 The GateForge Authors
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

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "gateforge/report.hpp"
#include "gateforge/synthesis.hpp"

namespace gateforge {
namespace {

namespace fs = std::filesystem;

struct CliRun {
    int code = -1;
    std::string out;
};

std::string quote(const std::string &s) {
    std::string q = "'";
    for (char c : s) {
        q += c == '\'' ? std::string("'\\''") : std::string(1, c);
    }
    return q + "'";
}

CliRun run(const std::string &args, const std::string &stdin_text = {}) {
    std::string cmd = std::string(GATEFORGE_CLI) + " " + args + " 2>/dev/null";
    if (!stdin_text.empty()) {
        cmd = "printf '%s' " + quote(stdin_text) + " | " + cmd;
    }
    CliRun r;
    FILE *pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) {
        return r;
    }
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) {
        r.out.append(buf, n);
    }
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

class Cli : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("gateforge_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string path(const std::string &name) const { return (dir_ / name).string(); }

    fs::path dir_;
};

TEST_F(Cli, SynthXorZeroAnglesHasThreeTerms) {
    const CliRun r = run("synth xor " + quote(R"({"alpha": 0, "beta": 0, "gamma": 0})"));
    ASSERT_EQ(r.code, 0);
    const Json j = parse_json_text(r.out, "out");
    EXPECT_EQ(j["kind"], "hamiltonian");
    EXPECT_EQ(j["family"], "xor");
    const PauliPolynomial h = polynomial_from_json(j["terms"], 3);
    ASSERT_EQ(h.size(), 3u);
    EXPECT_NEAR(h.coefficient("ZYI"), std::sqrt(2.0) * kPi / 4.0, 1e-12);
    EXPECT_NEAR(h.coefficient("IZY"), std::sqrt(2.0) * kPi / 4.0, 1e-12);
    EXPECT_NEAR(h.coefficient("IYX"), -kPi / 4.0, 1e-12);
}

TEST_F(Cli, SynthNot1) {
    const CliRun r = run("synth not1 " + quote(R"({"N": 0, "gamma": 0})"));
    ASSERT_EQ(r.code, 0);
    const PauliPolynomial h = polynomial_from_json(parse_json_text(r.out, "out")["terms"], 1);
    EXPECT_NEAR(h.coefficient("X"), -kPi / 2.0, 1e-15);
    EXPECT_EQ(run("synth not1 " + quote(R"({"N": 0})")).code, 2);
    EXPECT_EQ(run("synth not1 " + quote(R"({"N": 0, "gamma": 0, "colour": 1})")).code, 2);
    EXPECT_EQ(run("synth nand " + quote("{}")).code, 2);
}

TEST_F(Cli, SynthXorConstraintViolationExitsThree) {
    EXPECT_EQ(run("synth xor " + quote(R"({"alpha": 0, "beta": 0, "gamma": 0, "rho": 0})")).code, 3);
    EXPECT_EQ(run("synth xor " + quote(R"({"alpha": 0, "beta": 0, "gamma": 0, "rho": 3.141592653589793})")).code,
              0);
}

TEST_F(Cli, SynthUnitaryRejectsNonUnitary) {
    EXPECT_EQ(run("synth unitary " + quote(R"({"matrix": {"real": [[1, 0], [0, 2]], "imag": [[0, 0], [0, 0]]}})"))
                  .code,
              3);
}

TEST_F(Cli, DegreesFlagConvertsAngles) {
    const CliRun deg = run("--degrees synth xor " + quote(R"({"alpha": 90, "beta": 0, "gamma": -45})"));
    const CliRun rad = run("synth xor " + quote(R"({"alpha": 1.5707963267948966, "beta": 0, "gamma": -0.7853981633974483})"));
    ASSERT_EQ(deg.code, 0);
    ASSERT_EQ(rad.code, 0);
    const PauliPolynomial a = polynomial_from_json(parse_json_text(deg.out, "deg")["terms"], 3);
    const PauliPolynomial b = polynomial_from_json(parse_json_text(rad.out, "rad")["terms"], 3);
    EXPECT_LT(max_coefficient_diff(a, b), 1e-12);
}

TEST_F(Cli, SynthThenVerifyRoundTrip) {
    const std::string file = path("h.json");
    ASSERT_EQ(run("synth xor " + quote(R"({"alpha": 0.3, "beta": -1.1, "gamma": 2.0})") + " --out " + file).code, 0);
    const PauliPolynomial h = hamiltonian_report_from_json(parse_json_text(read_text_file(file), "h")).hamiltonian;
    EXPECT_EQ(h, hamiltonian_xor(0.3, -1.1, 2.0));

    const CliRun pass = run("verify " + file + " xor");
    EXPECT_EQ(pass.code, 0);
    const Json v = parse_json_text(pass.out, "verify");
    EXPECT_TRUE(v["passed"].get<bool>());
    EXPECT_LT(v["worst_leakage"].get<double>(), 1e-9);
    EXPECT_EQ(v["rows"].size(), 4u);

    EXPECT_EQ(run("verify " + file + " not2").code, 2);
}

TEST_F(Cli, VerifyFailsOnWrongGate) {
    const std::string h = R"({"schema": "gateforge/1", "kind": "hamiltonian", "n_qubits": 1, "terms": [{"string": "Z", "coeff": 1.0}]})";
    const CliRun r = run("verify " + quote(h) + " not1");
    EXPECT_EQ(r.code, 1);
    EXPECT_FALSE(parse_json_text(r.out, "verify")["passed"].get<bool>());
}

TEST_F(Cli, VerifyWithProtocol) {
    const std::string file = path("h.json");
    ASSERT_EQ(run("synth not2 " + quote(R"({"E": 0.4, "N": 1, "gamma": 0.2})") + " --out " + file).code, 0);
    EXPECT_EQ(run("verify " + file + " not2 --protocol " + quote(R"({"kind": "raised_cosine", "params": {"cycles": 1}})"))
                  .code,
              0);
    EXPECT_EQ(run("verify " + file + " not2 --protocol " + quote(R"({"kind": "constant", "amplitude": 0.5})")).code,
              3);
}

TEST_F(Cli, ReadsFromStdin) {
    const CliRun r = run("synth not1 -", R"({"N": 1, "gamma": 0.5})");
    ASSERT_EQ(r.code, 0);
    const PauliPolynomial h = polynomial_from_json(parse_json_text(r.out, "out")["terms"], 1);
    EXPECT_LT(max_coefficient_diff(h, hamiltonian_not1(1, 0.5)), 1e-15);
}

TEST_F(Cli, OutputIsByteStable) {
    const std::string args = "synth xor " + quote(R"({"alpha": 0.7, "beta": 0.1, "gamma": -2.5})");
    const CliRun a = run(args);
    const CliRun b = run(args);
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
}

TEST_F(Cli, DecomposeAndEvolve) {
    const CliRun d = run("decompose " + quote(R"({"real": [[0, 1], [1, 0]], "imag": [[0, 0], [0, 0]]})"));
    ASSERT_EQ(d.code, 0);
    const PauliPolynomial h = hamiltonian_report_from_json(parse_json_text(d.out, "d")).hamiltonian;
    EXPECT_EQ(h, PauliPolynomial(1, {{"X", 1.0}}));
    const CliRun e = run("evolve " + quote(d.out));
    ASSERT_EQ(e.code, 0);
    const CMatrix u = matrix_from_json(parse_json_text(e.out, "e")["matrix"]);
    EXPECT_LT(max_abs_diff(u, CMatrix{{std::cos(1.0), Complex(0.0, -std::sin(1.0))},
                                      {Complex(0.0, -std::sin(1.0)), std::cos(1.0)}}),
              1e-14);
    EXPECT_EQ(run("verify " + quote(e.out) + " not1").code, 1);
    EXPECT_EQ(run("decompose " + quote(R"({"real": [[0, 1], [0, 0]], "imag": [[0, 0], [0, 0]]})")).code, 3);
}

TEST_F(Cli, SearchExitCodesHistoryAndManifest) {
    const std::string hist = path("history.csv");
    const std::string manifest = path("manifest.json");
    const CliRun ok = run("search " + quote(R"({"name": "not2-tensor", "n_qubits": 2})") + " not2 " +
                       quote(R"({"restarts": 4, "max_evaluations": 1000})") + " --history " + hist +
                       " --manifest " + manifest);
    ASSERT_EQ(ok.code, 0);
    const Json j = parse_json_text(ok.out, "search");
    EXPECT_TRUE(j["target_met"].get<bool>());
    EXPECT_LT(j["best_leakage"].get<double>(), 1e-6);
    EXPECT_EQ(read_text_file(hist).rfind("restart,evaluation,best_leakage\n", 0), 0u);
    const Json m = parse_json_text(read_text_file(manifest), "manifest");
    EXPECT_EQ(m["command"], "search");
    EXPECT_EQ(m["exit_code"], 0);

    const CliRun fail = run("search " + quote(R"({"n_qubits": 2, "terms": ["ZZ"]})") + " not2 " +
                         quote(R"({"restarts": 2, "max_evaluations": 100})"));
    EXPECT_EQ(fail.code, 1);
    EXPECT_FALSE(parse_json_text(fail.out, "search")["target_met"].get<bool>());

    EXPECT_EQ(run("search " + quote(R"({"name": "ising", "n_qubits": 3})") + " not2").code, 2);
    EXPECT_EQ(run("search " + quote(R"({"name": "ising", "n_qubits": 2})") + " not2 " +
                  quote(R"({"restarts": -1})"))
                  .code,
              2);
}

TEST_F(Cli, SearchSeedFlagAndCsvFormat) {
    const std::string base = "search " + quote(R"({"name": "xy", "n_qubits": 2, "fields": true})") + " not2 " +
                             quote(R"({"restarts": 2, "max_evaluations": 200, "target_leakage": 0})");
    const CliRun a = run(base + " --seed 5");
    const CliRun b = run(base + " --seed 5");
    const CliRun c = run(base + " --seed 6");
    EXPECT_EQ(a.out, b.out);
    EXPECT_NE(a.out, c.out);
    const CliRun csv = run(base + " --format csv");
    EXPECT_EQ(csv.out.rfind("restart,evaluation,best_leakage\n", 0), 0u);
}

TEST_F(Cli, UsageErrorsExitTwo) {
    EXPECT_EQ(run("").code, 2);
    EXPECT_EQ(run("frobnicate").code, 2);
    EXPECT_EQ(run("synth xor " + quote("{not json")).code, 2);
    EXPECT_EQ(run("verify " + path("missing.json") + " xor").code, 2);
    EXPECT_EQ(run("--help").code, 0);
    EXPECT_EQ(run("--version").code, 0);
}

} // namespace
} // namespace gateforge
