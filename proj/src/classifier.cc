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

#include "islands/classifier.h"

#include <optional>

#include "islands/clifford_sim.h"

namespace islands {

namespace {

std::string lines_str(const Gate &gate) {
    return std::to_string(gate.line_a()) + "," + std::to_string(gate.line_b());
}

// Adjacency verdict for a gate already known to have matchgate form.
void tag_adjacency(const Gate &gate, GateClasses &out) {
    if (gate.line_b() == gate.line_a() + 1) {
        out.matchgate_nn = true;
    } else if (gate.line_a() == gate.line_b() + 1) {
        out.matchgate_reason = "matchgate lines must be written in increasing order, got " + lines_str(gate);
    } else {
        out.matchgate_non_nn = true;
        out.matchgate_reason = "matchgate on non-adjacent lines " + lines_str(gate);
    }
}

}  // namespace

MatchgateForm is_matchgate_form(const Matrix4 &u, double tol) {
    MatchgateForm out;
    static constexpr int kOffBlock[8][2] = {{0, 1}, {0, 2}, {1, 0}, {1, 3}, {2, 0}, {2, 3}, {3, 1}, {3, 2}};
    for (const auto &rc : kOffBlock) {
        if (std::abs(u(rc[0], rc[1])) > tol) {
            out.reason = "mixes even and odd parity subspaces";
            return out;
        }
    }
    Matrix2 a;
    a << u(0, 0), u(0, 3), u(3, 0), u(3, 3);
    Matrix2 b;
    b << u(1, 1), u(1, 2), u(2, 1), u(2, 2);
    Complex det_a = a.determinant();
    Complex det_b = b.determinant();
    if (std::abs(det_a - det_b) > tol) {
        out.reason = std::abs(det_a + det_b) <= tol ? "determinant mismatch: det B = -det A" : "determinant mismatch";
        return out;
    }
    out.is_matchgate = true;
    out.a = a;
    out.b = b;
    return out;
}

GateClasses classify_gate(const Gate &gate) {
    GateClasses out;
    switch (gate.kind()) {
        case GateKind::H:
            out.clifford = true;
            out.matchgate_reason = "H is a single-qubit gate, not a matchgate";
            break;
        case GateKind::P:
            out.clifford = true;
            out.matchgate_reason = "P is a single-qubit gate, not a matchgate";
            break;
        case GateKind::CZ:
            out.clifford = true;
            out.matchgate_reason = "CZ is not a matchgate: " + is_matchgate_form(gate_unitary(gate)).reason;
            break;
        case GateKind::Matchgate:
        case GateKind::Generic2Q: {
            out.clifford = derive_clifford_table(gate.matrix4()).has_value();
            if (!out.clifford) {
                out.clifford_reason = "does not map Pauli products to Pauli products";
            }
            if (gate.kind() == GateKind::Matchgate) {
                tag_adjacency(gate, out);
            } else {
                MatchgateForm form = is_matchgate_form(gate.matrix4());
                if (form.is_matchgate) {
                    tag_adjacency(gate, out);
                } else {
                    out.matchgate_reason = "not a matchgate: " + form.reason;
                }
            }
            break;
        }
    }
    return out;
}

std::string matchgate_nn_rejection(const Gate &gate) {
    switch (gate.kind()) {
        case GateKind::H:
        case GateKind::P:
        case GateKind::CZ:
            return classify_gate(gate).matchgate_reason;
        case GateKind::Matchgate:
        case GateKind::Generic2Q: {
            GateClasses out;
            if (gate.kind() == GateKind::Generic2Q) {
                MatchgateForm form = is_matchgate_form(gate.matrix4());
                if (!form.is_matchgate) {
                    return "not a matchgate: " + form.reason;
                }
            }
            tag_adjacency(gate, out);
            return out.matchgate_reason;
        }
    }
    return "unknown gate kind";
}

std::string_view circuit_class_name(CircuitClass c) {
    switch (c) {
        case CircuitClass::Clifford:
            return "Clifford";
        case CircuitClass::MatchgateNN:
            return "MatchgateNN";
        case CircuitClass::Both:
            return "Both";
        case CircuitClass::Neither:
            return "Neither";
    }
    return "Unknown";
}

ClassLabel classify_circuit(const Circuit &circuit) {
    std::optional<Diagnostic> clifford_failure;
    std::optional<Diagnostic> matchgate_failure;
    const auto &gates = circuit.gates();
    for (std::size_t g = 0; g < gates.size() && !(clifford_failure && matchgate_failure); g++) {
        GateClasses c = classify_gate(gates[g]);
        if (!c.clifford && !clifford_failure) {
            clifford_failure = Diagnostic{g + 1, c.clifford_reason};
        }
        if (!c.matchgate_nn && !matchgate_failure) {
            matchgate_failure = Diagnostic{g + 1, c.matchgate_reason};
        }
    }
    ClassLabel out;
    if (!clifford_failure && !matchgate_failure) {
        out.label = CircuitClass::Both;
    } else if (!clifford_failure) {
        out.label = CircuitClass::Clifford;
    } else if (!matchgate_failure) {
        out.label = CircuitClass::MatchgateNN;
    } else {
        out.label = CircuitClass::Neither;
    }
    out.clifford_failure = clifford_failure;
    out.matchgate_failure = matchgate_failure;
    if (clifford_failure) {
        out.diagnostics.push_back(*clifford_failure);
    }
    if (matchgate_failure) {
        out.diagnostics.push_back(*matchgate_failure);
    }
    return out;
}

}  // namespace islands
