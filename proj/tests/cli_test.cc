// Copyright 2026 The pbsgate Authors
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
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Result {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path &p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

class Cli : public ::testing::Test {
   protected:
    void SetUp() override {
        const auto *info = ::testing::UnitTest::GetInstance()->current_test_info();
        dir_ = fs::temp_directory_path() /
               ("pbsgate_cli_" + std::to_string(::getpid()) + "_" + info->name());
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    Result run(const std::string &args, const std::string &env = "") {
        fs::path out = dir_ / "stdout", err = dir_ / "stderr";
        std::string cmd = env + " '" + std::string(PBSGATE_CLI) + "' " + args + " >'" + out.string() + "' 2>'" +
                          err.string() + "'";
        int status = std::system(cmd.c_str());
        Result r;
        r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
        r.out = slurp(out);
        r.err = slurp(err);
        return r;
    }

    fs::path write(const std::string &name, const std::string &text) {
        fs::path p = dir_ / name;
        std::ofstream(p) << text;
        return p;
    }

    static std::string circuit(const std::string &gate) {
        return std::string(PBSGATE_CIRCUIT_DIR) + "/" + gate + ".circ";
    }

    fs::path dir_;
};

TEST_F(Cli, CnotOnBasisInput) {
    auto r = run("run --gate cnot --two-qubit 1 0 0 0 0 0 0 0");
    ASSERT_EQ(r.exit_code, 0) << r.err;
    auto j = json::parse(r.out);
    EXPECT_EQ(j["schema"], 1);
    EXPECT_NEAR(j["success_probability"].get<double>(), 0.25, 1e-12);
    int accepted = 0;
    for (const auto &o : j["outcomes"]) {
        if (o["accepted"].get<bool>()) {
            accepted++;
            EXPECT_NEAR(o["probability"].get<double>(), 0.0625, 1e-12);
            EXPECT_NEAR(o["fidelity_to_target"].get<double>(), 1, 1e-12);
        } else {
            EXPECT_TRUE(o["fidelity_to_target"].is_null());
        }
    }
    EXPECT_EQ(accepted, 4);
}

TEST_F(Cli, ParityCheckAndPassive) {
    auto r = run("run --gate parity_check --qubit 1 0 0 0");
    ASSERT_EQ(r.exit_code, 0) << r.err;
    EXPECT_NEAR(json::parse(r.out)["success_probability"].get<double>(), 0.5, 1e-12);
    auto p = run("run --gate parity_check --qubit 1 0 0 0 --passive");
    auto j = json::parse(p.out);
    EXPECT_TRUE(j["passive"].get<bool>());
    EXPECT_NEAR(j["success_probability"].get<double>(), 0.25, 1e-12);
}

TEST_F(Cli, ReportShape) {
    auto j = json::parse(run("run --gate encoder --qubit 0.6 0 0 0.8").out);
    for (const char *key : {"schema", "engine_version", "source", "gate", "mode_map", "passive", "input", "detectors",
                            "outputs", "outcomes", "success_probability", "failure_probability"}) {
        EXPECT_TRUE(j.contains(key)) << key;
    }
    EXPECT_EQ(j["input"]["kind"], "qubit");
    const auto &term = j["outcomes"][0]["output_state"][0];
    ASSERT_EQ(term.size(), 3u);
    EXPECT_TRUE(term[0].is_array());
    EXPECT_TRUE(term[0][0].get<std::string>().find(':') != std::string::npos);
}

TEST_F(Cli, CircuitFilesMatchBuiltinGates) {
    const std::vector<std::pair<std::string, std::string>> runs{
        {"parity_check", "--qubit 0.6 0 0 0.8"},
        {"destructive_cnot", "--qubit 0.6 0 0 0.8 --control 0 0 1 0"},
        {"encoder", "--qubit 0 0.6 0.8 0"},
        {"cnot", "--two-qubit 0.5 0 0 0.5 -0.5 0 0 -0.5"},
        {"gc_cnot", "--two-qubit 0.5 0 0 0.5 -0.5 0 0 -0.5"},
        {"chi_via_cnot", ""},
    };
    for (const auto &[gate, args] : runs) {
        for (const char *mode : {"", " --passive"}) {
            auto a = run("run --gate " + gate + " " + args + mode);
            auto b = run("run --circuit '" + circuit(gate) + "' " + args + mode);
            ASSERT_EQ(a.exit_code, 0) << a.err;
            ASSERT_EQ(b.exit_code, 0) << b.err;
            auto ja = json::parse(a.out), jb = json::parse(b.out);
            EXPECT_EQ(jb["source"]["kind"], "circuit");
            ja.erase("source");
            jb.erase("source");
            EXPECT_EQ(ja.dump(2), jb.dump(2)) << gate << mode;
        }
    }
}

TEST_F(Cli, CustomCircuitHasNoTarget) {
    auto p = write("custom.circ", "mode x y u w\ninput qubit x 1 0 0 0\ninput qubit y 0 0 1 0\n"
                                  "pbs hv x y u w\ndetect hv w as w\noutput u\n");
    auto r = run("run --circuit '" + p.string() + "'");
    ASSERT_EQ(r.exit_code, 0) << r.err;
    auto j = json::parse(r.out);
    EXPECT_EQ(j["gate"], "custom");
    double total = 0;
    for (const auto &o : j["outcomes"]) {
        EXPECT_TRUE(o["fidelity_to_target"].is_null());
        total += o["probability"].get<double>();
    }
    EXPECT_NEAR(total, 1, 1e-12);
}

TEST_F(Cli, DeterministicBytes) {
    const std::string args = "run --gate gc_cnot --two-qubit 0.5 0 0 0.5 0.5 0 0 -0.5";
    auto a = run(args), b = run(args);
    EXPECT_EQ(a.exit_code, 0);
    EXPECT_EQ(a.out, b.out);
}

TEST_F(Cli, ProbabilitiesSumToOne) {
    for (const char *args : {"--gate cnot --two-qubit 0 0 1 0 0 0 0 0", "--gate gc_cnot --passive",
                             "--gate destructive_cnot --qubit 0.6 0 0.8 0 --control 0.6 0 0 0.8"}) {
        auto j = json::parse(run(std::string("run ") + args).out);
        double total = 0;
        for (const auto &o : j["outcomes"]) {
            total += o["probability"].get<double>();
        }
        EXPECT_NEAR(total, 1, 1e-12) << args;
        EXPECT_NEAR(j["success_probability"].get<double>() + j["failure_probability"].get<double>(), 1, 1e-12);
    }
}

TEST_F(Cli, WritesOutputFile) {
    auto path = dir_ / "report.json";
    auto r = run("run --gate encoder -o '" + path.string() + "'");
    ASSERT_EQ(r.exit_code, 0) << r.err;
    EXPECT_TRUE(r.out.empty());
    EXPECT_EQ(json::parse(slurp(path))["gate"], "encoder");
}

TEST_F(Cli, Normalization) {
    auto warn = run("run --gate parity_check --qubit 1 0 0.01 0");
    EXPECT_EQ(warn.exit_code, 2);
    auto small = run("run --gate parity_check --qubit 1.0000001 0 0 0");
    EXPECT_EQ(small.exit_code, 0);
    EXPECT_NE(small.err.find("warning"), std::string::npos);
    auto silent = run("run --gate parity_check --qubit 1.0000000000001 0 0 0");
    EXPECT_EQ(silent.exit_code, 0);
    EXPECT_TRUE(silent.err.empty()) << silent.err;
}

TEST_F(Cli, ValidationErrorsExitTwo) {
    EXPECT_EQ(run("run").exit_code, 2);
    EXPECT_EQ(run("run --gate cnot --circuit '" + circuit("cnot") + "'").exit_code, 2);
    EXPECT_EQ(run("run --gate toffoli").exit_code, 2);
    EXPECT_EQ(run("run --gate cnot --two-qubit 1 0").exit_code, 2);
    EXPECT_EQ(run("run --gate cnot --schema 2").exit_code, 2);
    EXPECT_EQ(run("run --circuit '" + (dir_ / "missing.circ").string() + "'").exit_code, 2);
    EXPECT_EQ(run("run --circuit '" + circuit("cnot") + "' --qubit 1 0 0 0").exit_code, 2);
    EXPECT_EQ(run("frobnicate").exit_code, 2);
}

TEST_F(Cli, PruneToleranceFromEnvironment) {
    EXPECT_EQ(run("run --gate cnot", "PBSGATE_PRUNE_TOLERANCE=banana").exit_code, 2);
    EXPECT_EQ(run("run --gate cnot", "PBSGATE_PRUNE_TOLERANCE=-1").exit_code, 2);
    auto a = run("run --gate cnot", "PBSGATE_PRUNE_TOLERANCE=1e-9");
    EXPECT_EQ(a.exit_code, 0) << a.err;
    EXPECT_NEAR(json::parse(a.out)["success_probability"].get<double>(), 0.25, 1e-12);
}

TEST_F(Cli, CheckShippedCircuits) {
    for (const char *gate : {"parity_check", "destructive_cnot", "encoder", "cnot", "gc_cnot", "chi_via_cnot"}) {
        auto r = run("check '" + circuit(gate) + "'");
        EXPECT_EQ(r.exit_code, 0) << gate << r.err;
    }
}

TEST_F(Cli, CheckReportsUndeclaredMode) {
    auto p = write("bad.circ", "mode x y\ninput qubit x 1 0 0 0\nrotate ghost 90\noutput x\n");
    auto r = run("check '" + p.string() + "'");
    EXPECT_EQ(r.exit_code, 3);
    EXPECT_NE(r.err.find("ghost"), std::string::npos) << r.err;
    EXPECT_NE(r.err.find(":3:8:"), std::string::npos) << r.err;
    EXPECT_EQ(run("run --circuit '" + p.string() + "'").exit_code, 3);
}

TEST_F(Cli, FormatAndList) {
    auto f = run("format '" + circuit("cnot") + "'");
    EXPECT_EQ(f.exit_code, 0);
    EXPECT_NE(f.out.find("pbs fs 3' b 3 d"), std::string::npos);
    auto l = run("list");
    EXPECT_EQ(l.out, "parity_check\ndestructive_cnot\nencoder\ncnot\ngc_cnot\nchi_via_cnot\n");
}

}  // namespace
