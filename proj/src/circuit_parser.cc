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

#include <array>
#include <charconv>
#include <cmath>
#include <vector>

#include "islands/errors.h"

namespace islands {

namespace {

struct Token {
    std::string_view text;
    std::size_t column;
};

bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f';
}

// Splits one source line into whitespace-separated tokens; ':' is always its own token.
std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        char c = line[i];
        if (c == '#') {
            break;
        }
        if (is_space(c)) {
            i++;
            continue;
        }
        if (c == ':') {
            out.push_back({line.substr(i, 1), i + 1});
            i++;
            continue;
        }
        std::size_t start = i;
        while (i < line.size() && !is_space(line[i]) && line[i] != '#' && line[i] != ':') {
            i++;
        }
        out.push_back({line.substr(start, i - start), start + 1});
    }
    return out;
}

class LineParser {
   public:
    LineParser(std::vector<Token> tokens, std::size_t line_no) : tokens_(std::move(tokens)), line_no_(line_no) {
    }

    [[noreturn]] void fail(ErrorCode code, std::size_t column, const std::string &message) const {
        throw ParseError(code, line_no_, column, message);
    }

    [[noreturn]] void syntax(std::size_t column, const std::string &message) const {
        fail(ErrorCode::SyntaxError, column, message);
    }

    std::size_t end_column() const {
        return tokens_.empty() ? 1 : tokens_.back().column + tokens_.back().text.size();
    }

    const Token &next(const char *expected) {
        if (pos_ >= tokens_.size()) {
            syntax(end_column(), std::string("expected ") + expected);
        }
        return tokens_[pos_++];
    }

    std::uint64_t integer(const char *expected) {
        const Token &t = next(expected);
        std::uint64_t value = 0;
        auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
        if (ec != std::errc() || ptr != t.text.data() + t.text.size()) {
            syntax(t.column, std::string("expected ") + expected + ", got '" + std::string(t.text) + "'");
        }
        return value;
    }

    double real() {
        const Token &t = next("a number");
        double value = 0;
        auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
        if (ec != std::errc() || ptr != t.text.data() + t.text.size()) {
            syntax(t.column, "expected a number, got '" + std::string(t.text) + "'");
        }
        if (!std::isfinite(value)) {
            fail(ErrorCode::NonFinite, t.column, "non-finite number '" + std::string(t.text) + "'");
        }
        return value;
    }

    Complex complex() {
        double re = real();
        double im = real();
        return {re, im};
    }

    void colon() {
        const Token &t = next("':'");
        if (t.text != ":") {
            syntax(t.column, "expected ':', got '" + std::string(t.text) + "'");
        }
    }

    void finish() const {
        if (pos_ < tokens_.size()) {
            syntax(tokens_[pos_].column, "unexpected extra token '" + std::string(tokens_[pos_].text) + "'");
        }
    }

    /// Column of the most recently consumed token.
    std::size_t last_column() const {
        return pos_ == 0 ? 1 : tokens_[pos_ - 1].column;
    }

   private:
    std::vector<Token> tokens_;
    std::size_t line_no_;
    std::size_t pos_ = 0;
};

void append_real(std::string &out, double value) {
    std::array<char, 64> buf;
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::general, 17);
    out.push_back(' ');
    out.append(buf.data(), ptr);
}

void append_complex(std::string &out, Complex z) {
    append_real(out, z.real());
    append_real(out, z.imag());
}

}  // namespace

CircuitDocument parse_circuit(std::string_view text) {
    std::optional<Circuit> circuit;
    std::vector<std::optional<SingleQubitState>> factors;
    bool any_state = false;
    std::optional<Line> measure;

    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view raw = text.substr(start, end - start);
        start = end + 1;
        line_no++;

        auto tokens = tokenize(raw);
        if (tokens.empty()) {
            continue;
        }
        LineParser lp(tokens, line_no);
        const Token directive = lp.next("a directive");
        const std::string_view d = directive.text;

        if (!circuit.has_value()) {
            if (d != "qubits") {
                lp.syntax(directive.column, "the first directive must be 'qubits', got '" + std::string(d) + "'");
            }
            std::uint64_t n = lp.integer("a qubit count");
            if (n == 0 || n > kMaxParsedQubits) {
                lp.fail(ErrorCode::SemanticError, lp.last_column(), "qubit count must be in [1, 1048576]");
            }
            lp.finish();
            circuit.emplace(static_cast<std::size_t>(n));
            factors.resize(static_cast<std::size_t>(n));
            continue;
        }
        const std::size_t n = circuit->num_qubits();

        auto line_index = [&](const char *what) -> Line {
            std::uint64_t v = lp.integer(what);
            if (v == 0 || v > n) {
                lp.fail(
                    ErrorCode::LineOutOfRange, lp.last_column(),
                    "line " + std::to_string(v) + " outside [1, " + std::to_string(n) + "]");
            }
            return static_cast<Line>(v);
        };

        // Gate and state constructors validate; surface their errors at the directive.
        auto build = [&](auto &&make) {
            try {
                return make();
            } catch (const Error &e) {
                lp.fail(e.code(), directive.column, e.what());
            }
        };

        if (d == "qubits") {
            lp.fail(ErrorCode::SemanticError, directive.column, "duplicate 'qubits' directive");
        } else if (d == "H" || d == "P") {
            Line i = line_index("a line index");
            lp.finish();
            circuit->append(d == "H" ? Gate::h(i) : Gate::p(i));
        } else if (d == "CZ") {
            Line i = line_index("a line index");
            Line j = line_index("a line index");
            lp.finish();
            circuit->append(build([&] { return Gate::cz(i, j); }));
        } else if (d == "G") {
            Line i = line_index("a line index");
            Line j = line_index("a line index");
            Matrix2 a, b;
            for (int r = 0; r < 2; r++) {
                for (int c = 0; c < 2; c++) {
                    a(r, c) = lp.complex();
                }
            }
            for (int r = 0; r < 2; r++) {
                for (int c = 0; c < 2; c++) {
                    b(r, c) = lp.complex();
                }
            }
            lp.finish();
            circuit->append(build([&] { return make_matchgate(a, b, i, j); }));
        } else if (d == "U") {
            Line i = line_index("a line index");
            Line j = line_index("a line index");
            Matrix4 u;
            for (int r = 0; r < 4; r++) {
                for (int c = 0; c < 4; c++) {
                    u(r, c) = lp.complex();
                }
            }
            lp.finish();
            circuit->append(build([&] { return Gate::generic(i, j, u); }));
        } else if (d == "state") {
            Line i = line_index("a line index");
            lp.colon();
            Complex amp0 = lp.complex();
            Complex amp1 = lp.complex();
            lp.finish();
            if (factors[i - 1].has_value()) {
                lp.fail(ErrorCode::SemanticError, directive.column, "duplicate state for line " + std::to_string(i));
            }
            factors[i - 1] = build([&] { return SingleQubitState(amp0, amp1); });
            any_state = true;
        } else if (d == "measure") {
            Line k = line_index("a line index");
            lp.finish();
            if (measure.has_value()) {
                lp.fail(ErrorCode::SemanticError, directive.column, "duplicate 'measure' directive");
            }
            measure = k;
        } else {
            lp.syntax(directive.column, "unknown directive '" + std::string(d) + "'");
        }
    }

    if (!circuit.has_value()) {
        throw ParseError(ErrorCode::SyntaxError, line_no, 1, "missing 'qubits' directive");
    }
    std::optional<ProductState> state;
    if (any_state) {
        std::vector<SingleQubitState> fs;
        fs.reserve(factors.size());
        for (const auto &f : factors) {
            fs.push_back(f.value_or(SingleQubitState::zero()));
        }
        state.emplace(std::move(fs));
    }
    return {std::move(*circuit), std::move(state), measure};
}

std::string serialize_circuit(
    const Circuit &circuit, const std::optional<ProductState> &state, std::optional<Line> measure) {
    std::string out = "qubits " + std::to_string(circuit.num_qubits()) + "\n";
    for (const auto &g : circuit.gates()) {
        std::string a = std::to_string(g.line_a());
        std::string b = std::to_string(g.line_b());
        switch (g.kind()) {
            case GateKind::H:
                out += "H " + a;
                break;
            case GateKind::P:
                out += "P " + a;
                break;
            case GateKind::CZ:
                out += "CZ " + a + " " + b;
                break;
            case GateKind::Matchgate:
                out += "G " + a + " " + b;
                for (const Matrix2 *m : {&g.block_a(), &g.block_b()}) {
                    for (int r = 0; r < 2; r++) {
                        for (int c = 0; c < 2; c++) {
                            append_complex(out, (*m)(r, c));
                        }
                    }
                }
                break;
            case GateKind::Generic2Q:
                out += "U " + a + " " + b;
                for (int r = 0; r < 4; r++) {
                    for (int c = 0; c < 4; c++) {
                        append_complex(out, g.matrix4()(r, c));
                    }
                }
                break;
        }
        out += "\n";
    }
    if (state.has_value()) {
        for (std::size_t i = 0; i < state->num_qubits(); i++) {
            const auto &f = state->factors()[i];
            out += "state " + std::to_string(i + 1) + ":";
            append_complex(out, f.amp0());
            append_complex(out, f.amp1());
            out += "\n";
        }
    }
    if (measure.has_value()) {
        out += "measure " + std::to_string(*measure) + "\n";
    }
    return out;
}

std::string serialize_circuit(const CircuitDocument &doc) {
    return serialize_circuit(doc.circuit, doc.state, doc.measure);
}

}  // namespace islands
