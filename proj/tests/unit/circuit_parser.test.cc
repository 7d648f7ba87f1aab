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

#include "islands/circuit_parser.h"

#include "gtest/gtest.h"
#include "islands/errors.h"
#include "test_util.h"

using namespace islands;
using namespace islands::testing;

namespace {

ParseError parse_failure(std::string_view text) {
    try {
        parse_circuit(text);
    } catch (const ParseError &e) {
        return e;
    }
    ADD_FAILURE() << "parsed without error: " << text;
    return ParseError(ErrorCode::SyntaxError, 0, 0, "");
}

}  // namespace

TEST(parse_circuit, examples) {
    auto doc = parse_circuit("qubits 2\nH 1\nCZ 1 2\nmeasure 2");
    ASSERT_EQ(doc.circuit, Circuit(2, {Gate::h(1), Gate::cz(1, 2)}));
    ASSERT_EQ(doc.measure, Line{2});
    ASSERT_FALSE(doc.state.has_value());

    auto e = parse_failure("qubits 2\nG 1 2  1 0 0 0 0 0 1 0  0 0 1 0 1 0 0 0");
    ASSERT_EQ(e.code(), ErrorCode::DeterminantMismatch);
    ASSERT_EQ(e.line(), 2u);
    ASSERT_FALSE(e.is_syntax_error());

    auto s = parse_circuit("qubits 1\nstate 1: 0.6 0 0.8 0");
    ASSERT_TRUE(s.state.has_value());
    ASSERT_EQ(s.state->factor(1).amp0(), Complex(0.6, 0));
    ASSERT_EQ(s.state->factor(1).amp1(), Complex(0.8, 0));
}

TEST(parse_circuit, matchgate_field_order) {
    // A = Z, B = -Y (det A = det B = -1).
    auto doc = parse_circuit("qubits 3\nG 2 3  1 0 0 0 0 0 -1 0   0 0 0 1 0 -1 0 0\n");
    const Gate &g = doc.circuit.gates()[0];
    ASSERT_EQ(g.kind(), GateKind::Matchgate);
    ASSERT_EQ(g.line_a(), 2u);
    ASSERT_EQ(g.line_b(), 3u);
    ASSERT_EQ(g.block_a(), mat2(1, 0, 0, -1));
    ASSERT_EQ(g.block_b(), mat2(0, Complex(0, 1), Complex(0, -1), 0));
}

TEST(parse_circuit, generic_gate_and_defaults) {
    std::string text = "qubits 3\nU 3 1";
    for (int r = 0; r < 4; r++) {
        for (int c = 0; c < 4; c++) {
            text += r == c ? " 0 1" : " 0 0";
        }
    }
    text += "\nstate 2: 0 0 0 -1\n";
    auto doc = parse_circuit(text);
    const Gate &g = doc.circuit.gates()[0];
    ASSERT_EQ(g.kind(), GateKind::Generic2Q);
    ASSERT_EQ(g.matrix4(), Matrix4::Identity() * Complex(0, 1));
    ASSERT_EQ(doc.state->factor(1), SingleQubitState::zero());
    ASSERT_EQ(doc.state->factor(2), SingleQubitState(0, Complex(0, -1)));
    ASSERT_EQ(doc.state->factor(3), SingleQubitState::zero());
    ASSERT_FALSE(doc.measure.has_value());
}

TEST(parse_circuit, comments_and_whitespace) {
    auto doc = parse_circuit("# header\n\n  qubits\t2   # two lines\r\n H 2#x\nstate 1 :1 0 0 0\n\tmeasure   1\n");
    ASSERT_EQ(doc.circuit, Circuit(2, {Gate::h(2)}));
    ASSERT_EQ(doc.measure, Line{1});
    ASSERT_EQ(doc.state->factor(1), SingleQubitState::zero());
}

TEST(parse_circuit, syntax_errors_report_position) {
    struct Case {
        std::string text;
        std::size_t line;
        std::size_t column;
    };
    std::vector<Case> cases = {
        {"", 1, 1},
        {"# only a comment\n", 2, 1},
        {"H 1\n", 1, 1},
        {"qubits two\n", 1, 8},
        {"qubits 2\nX 1\n", 2, 1},
        {"qubits 2\nh 1\n", 2, 1},
        {"qubits 2\nH\n", 2, 2},
        {"qubits 2\nH 1 2\n", 2, 5},
        {"qubits 2\nCZ 1 x\n", 2, 6},
        {"qubits 2\nG 1 2 1 0 0\n", 2, 12},
        {"qubits 2\nstate 1 0.6 0 0.8 0\n", 2, 9},
        {"qubits 2\nmeasure -1\n", 2, 9},
        {"qubits 2\nH 1.0\n", 2, 3},
    };
    for (const auto &c : cases) {
        auto e = parse_failure(c.text);
        ASSERT_TRUE(e.is_syntax_error()) << c.text << " -> " << e.what();
        ASSERT_EQ(e.line(), c.line) << c.text << " -> " << e.what();
        ASSERT_EQ(e.column(), c.column) << c.text << " -> " << e.what();
    }
}

TEST(parse_circuit, semantic_errors_carry_their_cause) {
    struct Case {
        std::string text;
        ErrorCode code;
    };
    std::vector<Case> cases = {
        {"qubits 0\n", ErrorCode::SemanticError},
        {"qubits 2\nqubits 2\n", ErrorCode::SemanticError},
        {"qubits 2\nH 3\n", ErrorCode::LineOutOfRange},
        {"qubits 2\nCZ 0 1\n", ErrorCode::LineOutOfRange},
        {"qubits 2\nCZ 1 1\n", ErrorCode::LineOutOfRange},
        {"qubits 2\nmeasure 3\n", ErrorCode::LineOutOfRange},
        {"qubits 2\nmeasure 1\nmeasure 2\n", ErrorCode::SemanticError},
        {"qubits 2\nstate 1: 1 0 0 0\nstate 1: 1 0 0 0\n", ErrorCode::SemanticError},
        {"qubits 2\nstate 1: 1 0 1 0\n", ErrorCode::NotNormalized},
        {"qubits 2\nstate 1: nan 0 1 0\n", ErrorCode::NonFinite},
        {"qubits 2\nG 1 2 2 0 0 0 0 0 0.5 0 1 0 0 0 0 0 1 0\n", ErrorCode::NotUnitary},
        {"qubits 2\nU 1 2 1 0 0 0 0 0 0 0 0 0 1 0 0 0 0 0 0 0 0 0 1 0 0 0 0 0 0 0 0 0 0 0\n", ErrorCode::NotUnitary},
    };
    for (const auto &c : cases) {
        auto e = parse_failure(c.text);
        ASSERT_EQ(e.code(), c.code) << c.text << " -> " << e.what();
        ASSERT_FALSE(e.is_syntax_error());
    }
}

TEST(serialize_circuit, examples) {
    ASSERT_EQ(serialize_circuit(Circuit(3)), "qubits 3\n");
    ASSERT_EQ(serialize_circuit(Circuit(2, {Gate::p(2)})), "qubits 2\nP 2\n");
    ASSERT_EQ(
        serialize_circuit(
            Circuit(2, {Gate::h(1), Gate::cz(2, 1)}), ProductState({SingleQubitState::one(), SingleQubitState::zero()}),
            2),
        "qubits 2\nH 1\nCZ 2 1\nstate 1: 0 0 1 0\nstate 2: 1 0 0 0\nmeasure 2\n");
}

TEST(serialize_circuit, uses_seventeen_significant_digits) {
    double third = 1.0 / 3.0;
    std::string text = serialize_circuit(
        Circuit(1), ProductState({SingleQubitState(std::sqrt(third), std::sqrt(1 - third))}), std::nullopt);
    ASSERT_NE(text.find("0.57735026918962573"), std::string::npos) << text;
}

TEST(serialize_circuit, round_trip_on_random_documents) {
    Rng rng(61);
    for (int trial = 0; trial < 1000; trial++) {
        CircuitDocument doc = random_document(rng);
        std::string text = serialize_circuit(doc);
        CircuitDocument back = parse_circuit(text);
        ASSERT_EQ(back, doc) << text;
        ASSERT_EQ(serialize_circuit(back), text);
    }
}

TEST(parse_circuit, never_crashes_on_noise) {
    Rng rng(62);
    std::string alphabet = "qubits HPCZGUstaemr:#0123456789.-+e \n\t";
    std::uniform_int_distribution<int> byte(0, 255);
    std::uniform_int_distribution<std::size_t> len(0, 80);
    for (int trial = 0; trial < 20000; trial++) {
        std::string text;
        std::size_t l = len(rng);
        bool printable = trial % 2 == 0;
        for (std::size_t i = 0; i < l; i++) {
            text.push_back(
                printable ? alphabet[static_cast<std::size_t>(byte(rng)) % alphabet.size()]
                          : static_cast<char>(byte(rng)));
        }
        if (trial % 4 == 0) {
            text = "qubits 3\n" + text;
        }
        try {
            parse_circuit(text);
        } catch (const ParseError &) {
        }
    }
}

TEST(parse_circuit, never_crashes_on_mutated_documents) {
    Rng rng(63);
    std::uniform_int_distribution<int> byte(0, 255);
    for (int trial = 0; trial < 2000; trial++) {
        std::string text = serialize_circuit(random_document(rng));
        for (int m = 0; m < 3 && !text.empty(); m++) {
            std::size_t pos = std::uniform_int_distribution<std::size_t>(0, text.size() - 1)(rng);
            switch (byte(rng) % 3) {
                case 0:
                    text[pos] = static_cast<char>(byte(rng));
                    break;
                case 1:
                    text.erase(pos, 1);
                    break;
                default:
                    text.insert(pos, 1, static_cast<char>(byte(rng)));
                    break;
            }
        }
        try {
            parse_circuit(text);
        } catch (const ParseError &) {
        }
    }
}
