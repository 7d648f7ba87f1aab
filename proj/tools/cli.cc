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

#include <CLI11.hpp>
#include <array>
#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "islands/bench.h"
#include "islands/circuit_parser.h"
#include "islands/classifier.h"
#include "islands/clifford_sim.h"
#include "islands/dense_oracle.h"
#include "islands/errors.h"
#include "islands/matchgate_sim.h"

namespace islands {

namespace {

struct Failure {
    int code;
    std::string message;
};

CircuitDocument load(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Failure{kExitUsage, "cannot read '" + path + "'"};
    }
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return parse_circuit(buf.str());
    } catch (const ParseError &e) {
        throw Failure{e.is_syntax_error() ? kExitParse : kExitSemantic, path + ":" + e.what()};
    }
}

std::string shortest(double value) {
    std::array<char, 64> buf;
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    return std::string(buf.data(), ptr);
}

std::string fixed3(double value) {
    std::array<char, 64> buf;
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::fixed, 3);
    return std::string(buf.data(), ptr);
}

struct SimulateArgs {
    std::string file;
    std::string method = "auto";
    int digits = 10;
    std::optional<Line> measure;
    std::size_t cap = kDefaultDenseCap;
};

int cmd_simulate(const SimulateArgs &args, std::ostream &out) {
    CircuitDocument doc = load(args.file);
    const Circuit &circuit = doc.circuit;
    Line k = args.measure.value_or(doc.measure.value_or(1));
    if (k == 0 || k > circuit.num_qubits()) {
        throw Failure{kExitSemantic, "measured line " + std::to_string(k) + " outside the circuit"};
    }
    ProductState state = doc.state.value_or(ProductState::all_zero(circuit.num_qubits()));
    ClassLabel label = classify_circuit(circuit);

    std::string method = args.method;
    if (method == "auto") {
        if (label.label == CircuitClass::Clifford || label.label == CircuitClass::Both) {
            method = "clifford";
        } else if (label.label == CircuitClass::MatchgateNN) {
            method = "matchgate";
        } else {
            method = "dense";
        }
    }
    if (method == "clifford" && label.clifford_failure) {
        throw Failure{kExitSemantic, "gate " + std::to_string(label.clifford_failure->gate_index) + ": " +
                                         label.clifford_failure->reason};
    }
    if (method == "matchgate" && label.matchgate_failure) {
        throw Failure{kExitSemantic, "gate " + std::to_string(label.matchgate_failure->gate_index) + ": " +
                                         label.matchgate_failure->reason};
    }

    MeasurementOutcome outcome{};
    try {
        if (method == "clifford") {
            outcome = simulate_clifford(circuit, state, k);
        } else if (method == "matchgate") {
            outcome = simulate_matchgate(circuit, state, k);
        } else {
            outcome = simulate_dense(circuit, state, k, args.cap);
        }
    } catch (const Error &e) {
        throw Failure{kExitSemantic, std::string(error_code_name(e.code())) + ": " + e.what()};
    }
    out << "p0=" << format_rounded(outcome.p0, args.digits) << " p1=" << format_rounded(outcome.p1, args.digits)
        << " method=" << method << "\n";
    return kExitOk;
}

int cmd_classify(const std::string &file, std::ostream &out) {
    CircuitDocument doc = load(file);
    ClassLabel label = classify_circuit(doc.circuit);
    out << "class=" << circuit_class_name(label.label) << "\n";
    for (const auto &d : label.diagnostics) {
        out << "gate " << d.gate_index << ": " << d.reason << "\n";
    }
    return kExitOk;
}

int cmd_closure(const std::string &file, Line i, Line j, std::ostream &out) {
    CircuitDocument doc = load(file);
    std::size_t n = doc.circuit.num_qubits();
    if (!(i >= 1 && i < j && j <= n)) {
        throw Failure{kExitUsage, "closure lines must satisfy 1 <= i < j <= " + std::to_string(n)};
    }
    std::optional<std::pair<Matrix2, Matrix2>> blocks;
    for (const auto &g : doc.circuit.gates()) {
        if (g.kind() == GateKind::Matchgate) {
            blocks.emplace(g.block_a(), g.block_b());
            break;
        }
        if (g.kind() == GateKind::Generic2Q) {
            MatchgateForm form = is_matchgate_form(g.matrix4());
            if (form.is_matchgate) {
                blocks.emplace(form.a, form.b);
                break;
            }
        }
    }
    if (!blocks) {
        throw Failure{kExitSemantic, "no matchgate in '" + file + "'"};
    }
    ClosureReport report = check_span_closure(blocks->first, blocks->second, i, j, n);
    out << "closed=" << (report.closed ? "true" : "false") << " residual=" << shortest(report.residual_norm) << "\n";
    return kExitOk;
}

struct BenchArgs {
    std::string suite;
    std::size_t n = 0;
    std::size_t gates = 0;
    std::uint64_t seed = 1;
    std::size_t repeat = 1;
};

int cmd_bench(const BenchArgs &args, std::ostream &out) {
    if (args.n == 0 || args.repeat == 0 || (args.suite == "matchgate" && args.n < 2)) {
        throw Failure{kExitUsage, "bench needs n >= 1 (n >= 2 for matchgate) and repeat >= 1"};
    }
    BenchSuite suite = args.suite == "clifford" ? BenchSuite::Clifford : BenchSuite::Matchgate;
    BenchResult r = run_bench(suite, args.n, args.gates, args.seed, args.repeat);
    out << "n=" << r.num_qubits << " gates=" << r.num_gates << " wall_ms=" << fixed3(r.wall_ms)
        << " p0=" << format_rounded(r.outcome.p0, 10) << " p1=" << format_rounded(r.outcome.p1, 10) << "\n";
    return kExitOk;
}

}  // namespace

std::string format_rounded(double value, int digits) {
    if (!std::isfinite(value)) {
        return shortest(value);
    }
    // Every finite double has a terminating decimal expansion of at most 1074
    // fractional digits, so this is exact.
    std::vector<char> buf(1600);
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::fixed, 1100);
    std::string exact(buf.data(), ptr);

    bool negative = !exact.empty() && exact[0] == '-';
    if (negative) {
        exact.erase(0, 1);
    }
    std::size_t dot = exact.find('.');
    std::string whole = exact.substr(0, dot);
    std::string frac = exact.substr(dot + 1);

    std::string kept = whole + frac.substr(0, digits);
    char first_dropped = frac[digits];
    bool tail_nonzero = frac.find_first_not_of('0', digits + 1) != std::string::npos;
    bool round_up = first_dropped > '5' || (first_dropped == '5' && tail_nonzero) ||
                    (first_dropped == '5' && !tail_nonzero && (kept.back() - '0') % 2 == 1);
    if (round_up) {
        std::size_t pos = kept.size();
        while (pos > 0) {
            pos--;
            if (kept[pos] == '9') {
                kept[pos] = '0';
            } else {
                kept[pos]++;
                break;
            }
            if (pos == 0) {
                kept.insert(kept.begin(), '1');
                break;
            }
        }
    }
    std::size_t whole_len = kept.size() - static_cast<std::size_t>(digits);
    std::string result = kept.substr(0, whole_len);
    std::string fraction = kept.substr(whole_len);
    while (!fraction.empty() && fraction.back() == '0') {
        fraction.pop_back();
    }
    if (!fraction.empty()) {
        result += "." + fraction;
    }
    if (negative && result.find_first_not_of("0.") != std::string::npos) {
        result.insert(result.begin(), '-');
    }
    return result;
}

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Polynomial-time simulation of Clifford and nearest-neighbour matchgate circuits", "islands"};
    app.require_subcommand(1);

    SimulateArgs sim;
    auto *simulate = app.add_subcommand("simulate", "Z-measurement probabilities of one line");
    simulate->add_option("file", sim.file, "Circuit file")->required();
    simulate->add_option("--method", sim.method, "auto|clifford|matchgate|dense")
        ->check(CLI::IsMember({"auto", "clifford", "matchgate", "dense"}));
    simulate->add_option("--digits", sim.digits, "Decimal places")->check(CLI::Range(0, 30));
    simulate->add_option("--measure", sim.measure, "Measured line (overrides the file)");
    simulate->add_option("--cap", sim.cap, "Dense-oracle qubit cap")
        ->envname("ISLANDS_DENSE_CAP")
        ->check(CLI::Range(std::size_t{1}, kMaxDenseCap));

    std::string classify_file;
    auto *classify = app.add_subcommand("classify", "Which simulatable island a circuit belongs to");
    classify->add_option("file", classify_file, "Circuit file")->required();

    std::string closure_file;
    Line closure_i = 0;
    Line closure_j = 0;
    auto *closure = app.add_subcommand("closure", "Span-closure check of the file's first matchgate at lines i j");
    closure->add_option("file", closure_file, "Circuit file")->required();
    closure->add_option("i", closure_i, "First line")->required();
    closure->add_option("j", closure_j, "Second line")->required();

    BenchArgs bench;
    auto *bench_cmd = app.add_subcommand("bench", "Time a seeded random circuit");
    bench_cmd->add_option("suite", bench.suite, "clifford|matchgate")
        ->required()
        ->check(CLI::IsMember({"clifford", "matchgate"}));
    bench_cmd->add_option("-n,--qubits", bench.n, "Qubit count")->required();
    bench_cmd->add_option("-g,--gates", bench.gates, "Gate count")->required();
    bench_cmd->add_option("--seed", bench.seed, "RNG seed");
    bench_cmd->add_option("--repeat", bench.repeat, "Repeats; the best time is reported");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int rc = app.exit(e, out, err);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*simulate) {
            return cmd_simulate(sim, out);
        }
        if (*classify) {
            return cmd_classify(classify_file, out);
        }
        if (*closure) {
            return cmd_closure(closure_file, closure_i, closure_j, out);
        }
        return cmd_bench(bench, out);
    } catch (const Failure &f) {
        err << f.message << "\n";
        return f.code;
    } catch (const Error &e) {
        err << error_code_name(e.code()) << ": " << e.what() << "\n";
        return kExitSemantic;
    }
}

}  // namespace islands
