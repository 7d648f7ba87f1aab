// Copyright 2026 The Islands Authors
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

#include "cli.h"

#include <cstdlib>
#include <sstream>

#include "gtest/gtest.h"
#include "islands/classifier.h"
#include "islands/dense_oracle.h"
#include "test_util.h"

using namespace islands;
using namespace islands::testing;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "islands");
    std::vector<const char *> argv;
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out;
    std::ostringstream err;
    int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string sample(const std::string &name) {
    return std::string(ISLANDS_CIRCUITS_DIR) + "/" + name;
}

/// Reads "key=value" from a line of output.
double field(const std::string &line, const std::string &key) {
    auto pos = line.find(key + "=");
    EXPECT_NE(pos, std::string::npos) << line;
    return std::stod(line.substr(pos + key.size() + 1));
}

}  // namespace

TEST(format_rounded, half_to_even) {
    ASSERT_EQ(format_rounded(0.5, 0), "0");
    ASSERT_EQ(format_rounded(1.5, 0), "2");
    ASSERT_EQ(format_rounded(2.5, 0), "2");
    ASSERT_EQ(format_rounded(0.125, 2), "0.12");
    ASSERT_EQ(format_rounded(0.375, 2), "0.38");
    // 0.145 is stored as 0.14499999999999999..., so it rounds down.
    ASSERT_EQ(format_rounded(0.145, 2), "0.14");
    ASSERT_EQ(format_rounded(0.5, 10), "0.5");
    ASSERT_EQ(format_rounded(1.0, 10), "1");
    ASSERT_EQ(format_rounded(0.0, 10), "0");
    ASSERT_EQ(format_rounded(0.1, 10), "0.1");
    ASSERT_EQ(format_rounded(0.99999999999, 10), "1");
    ASSERT_EQ(format_rounded(0.0732233047033631, 10), "0.0732233047");
    ASSERT_EQ(format_rounded(0.1, 30), "0.100000000000000005551115123126");
}

TEST(cli_simulate, examples) {
    auto r = run({"simulate", sample("hadamard.txt")});
    ASSERT_EQ(r.code, 0) << r.err;
    ASSERT_EQ(r.out, "p0=0.5 p1=0.5 method=clifford\n");

    r = run({"simulate", sample("empty.txt")});
    ASSERT_EQ(r.code, 0) << r.err;
    ASSERT_EQ(r.out, "p0=1 p1=0 method=clifford\n");

    r = run({"simulate", sample("matchgate_distance2.txt"), "--method", "matchgate"});
    ASSERT_EQ(r.code, 3);
    ASSERT_EQ(r.err, "gate 1: matchgate on non-adjacent lines 1,3\n");
}

TEST(cli_simulate, auto_picks_each_island) {
    auto r = run({"simulate", sample("matchgate_rotations.txt")});
    ASSERT_EQ(r.code, 0) << r.err;
    ASSERT_NE(r.out.find("method=matchgate"), std::string::npos);

    r = run({"simulate", sample("controlled_sqrt_p.txt")});
    ASSERT_EQ(r.code, 0) << r.err;
    ASSERT_NE(r.out.find("method=dense"), std::string::npos);

    r = run({"simulate", sample("matchgate_rotations.txt"), "--method", "clifford"});
    ASSERT_EQ(r.code, 3);
    ASSERT_EQ(r.err.rfind("gate 1: ", 0), 0u) << r.err;
}

TEST(cli_simulate, digits_and_measure_override) {
    auto r = run({"simulate", sample("controlled_sqrt_p.txt"), "--digits", "3"});
    ASSERT_EQ(r.out, "p0=0.927 p1=0.073 method=dense\n");
    r = run({"simulate", sample("controlled_sqrt_p.txt"), "--measure", "1"});
    ASSERT_EQ(r.out, "p0=0.5 p1=0.5 method=dense\n");
    r = run({"simulate", sample("controlled_sqrt_p.txt"), "--measure", "3"});
    ASSERT_EQ(r.code, 3);
    r = run({"simulate", sample("hadamard.txt"), "--digits", "31"});
    ASSERT_EQ(r.code, 1);
    r = run({"simulate", sample("hadamard.txt"), "--method", "magic"});
    ASSERT_EQ(r.code, 1);
}

TEST(cli_simulate, dense_cap) {
    auto r = run({"simulate", sample("controlled_sqrt_p.txt"), "--cap", "1"});
    ASSERT_EQ(r.code, 3);
    ASSERT_NE(r.err.find("TooManyQubits"), std::string::npos) << r.err;

    setenv("ISLANDS_DENSE_CAP", "1", 1);
    r = run({"simulate", sample("controlled_sqrt_p.txt")});
    ASSERT_EQ(r.code, 3);
    r = run({"simulate", sample("controlled_sqrt_p.txt"), "--cap", "2"});
    ASSERT_EQ(r.code, 0) << r.err;
    unsetenv("ISLANDS_DENSE_CAP");

    r = run({"simulate", sample("controlled_sqrt_p.txt"), "--cap", "21"});
    ASSERT_EQ(r.code, 1);
}

TEST(cli_simulate, auto_agrees_with_every_applicable_method) {
    Rng rng(71);
    int forced = 0;
    for (int trial = 0; trial < 150; trial++) {
        CircuitDocument doc = random_document(rng);
        std::string path = write_temp_file("auto_" + std::to_string(trial) + ".txt", serialize_circuit(doc));
        auto a = run({"simulate", path, "--digits", "14"});
        ASSERT_EQ(a.code, 0) << a.err;
        double p0 = field(a.out, "p0");
        for (std::string method : {"clifford", "matchgate", "dense"}) {
            auto r = run({"simulate", path, "--method", method, "--digits", "14"});
            if (r.code == 0) {
                ASSERT_NEAR(field(r.out, "p0"), p0, 1e-9) << method << "\n" << serialize_circuit(doc);
                forced++;
            } else {
                ASSERT_EQ(r.code, 3) << r.err;
                ASSERT_NE(method, "dense");
            }
        }
    }
    ASSERT_GT(forced, 200);
}

TEST(cli_simulate, parse_failures) {
    auto syntax = write_temp_file("syntax.txt", "qubits 2\nX 1\n");
    auto r = run({"simulate", syntax});
    ASSERT_EQ(r.code, 2);
    ASSERT_NE(r.err.find(":2:1: "), std::string::npos) << r.err;

    auto semantic = write_temp_file("semantic.txt", "qubits 2\nH 5\n");
    r = run({"simulate", semantic});
    ASSERT_EQ(r.code, 3);

    r = run({"simulate", "/nonexistent/circuit.txt"});
    ASSERT_EQ(r.code, 1);
}

TEST(cli_classify, examples) {
    auto r = run({"classify", sample("hadamard.txt")});
    ASSERT_EQ(r.code, 0);
    ASSERT_EQ(r.out.substr(0, r.out.find('\n')), "class=Clifford");

    r = run({"classify", sample("empty.txt")});
    ASSERT_EQ(r.out, "class=Both\n");

    r = run({"classify", sample("matchgate_rotations.txt")});
    ASSERT_EQ(r.out.substr(0, r.out.find('\n')), "class=MatchgateNN");

    r = run({"classify", sample("controlled_sqrt_p.txt")});
    ASSERT_EQ(r.code, 0);
    ASSERT_EQ(
        r.out,
        "class=Neither\n"
        "gate 3: does not map Pauli products to Pauli products\n"
        "gate 1: H is a single-qubit gate, not a matchgate\n");
}

TEST(cli_classify, swap_names_the_determinant_condition) {
    auto r = run({"classify", sample("swap_generic.txt")});
    ASSERT_EQ(r.code, 0);
    ASSERT_EQ(r.out, "class=Clifford\ngate 1: not a matchgate: determinant mismatch: det B = -det A\n");
}

TEST(cli_closure, examples) {
    auto r = run({"closure", sample("matchgate_rotations.txt"), "2", "3"});
    ASSERT_EQ(r.code, 0);
    ASSERT_EQ(r.out.substr(0, 12), "closed=true ");
    ASSERT_LT(field(r.out, "residual"), 1e-9);

    r = run({"closure", sample("matchgate_distance2.txt"), "1", "3"});
    ASSERT_EQ(r.out, "closed=false residual=1\n");

    r = run({"closure", sample("matchgate_identity.txt"), "1", "3"});
    ASSERT_EQ(r.out, "closed=true residual=0\n");

    r = run({"closure", sample("swap_generic.txt"), "1", "2"});
    ASSERT_EQ(r.code, 3);
    r = run({"closure", sample("matchgate_identity.txt"), "3", "1"});
    ASSERT_EQ(r.code, 1);
    r = run({"closure", sample("matchgate_identity.txt"), "1", "4"});
    ASSERT_EQ(r.code, 1);
}

TEST(cli_bench, output_and_determinism) {
    auto a = run({"bench", "clifford", "-n", "20", "-g", "500", "--seed", "7"});
    ASSERT_EQ(a.code, 0) << a.err;
    ASSERT_EQ(a.out.rfind("n=20 gates=500 wall_ms=", 0), 0u) << a.out;
    auto b = run({"bench", "clifford", "-n", "20", "-g", "500", "--seed", "7"});
    ASSERT_EQ(a.out.substr(a.out.find(" p0=")), b.out.substr(b.out.find(" p0=")));

    auto m = run({"bench", "matchgate", "--qubits", "8", "--gates", "100", "--seed", "3"});
    ASSERT_EQ(m.code, 0) << m.err;
    double p0 = field(m.out, "p0");
    ASSERT_GE(p0, 0.0);
    ASSERT_LE(p0, 1.0);

    auto z = run({"bench", "matchgate", "-n", "4", "-g", "0"});
    ASSERT_NE(z.out.find(" p0=1 p1=0"), std::string::npos) << z.out;
    ASSERT_LT(field(z.out, "wall_ms"), 50.0);
}

TEST(cli_bench, bad_parameters) {
    ASSERT_EQ(run({"bench", "clifford", "-n", "0", "-g", "5"}).code, 1);
    ASSERT_EQ(run({"bench", "matchgate", "-n", "1", "-g", "5"}).code, 1);
    ASSERT_EQ(run({"bench", "tableau", "-n", "4", "-g", "5"}).code, 1);
    ASSERT_EQ(run({"bench", "clifford", "-n", "4"}).code, 1);
    ASSERT_EQ(run({"bench", "clifford", "-n", "-4", "-g", "5"}).code, 1);
}

TEST(cli, usage) {
    ASSERT_EQ(run({}).code, 1);
    ASSERT_EQ(run({"frobnicate"}).code, 1);
    ASSERT_EQ(run({"--help"}).code, 0);
}
