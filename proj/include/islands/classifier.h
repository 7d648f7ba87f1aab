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

#ifndef ISLANDS_CLASSIFIER_H
#define ISLANDS_CLASSIFIER_H

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "islands/circuit.h"

namespace islands {

struct MatchgateForm {
    bool is_matchgate = false;
    /// Valid only when is_matchgate.
    Matrix2 a = Matrix2::Zero();
    Matrix2 b = Matrix2::Zero();
    /// Why the matrix was rejected; empty when accepted.
    std::string reason;
};

/// Checks the G(A,B) zero pattern, extracts the parity blocks, and compares determinants.
MatchgateForm is_matchgate_form(const Matrix4 &u, double tol = kUnitaryTolerance);

struct GateClasses {
    bool clifford = false;
    bool matchgate_nn = false;
    bool matchgate_non_nn = false;
    /// Failure explanations, empty where the gate qualifies.
    std::string clifford_reason;
    std::string matchgate_reason;
};

GateClasses classify_gate(const Gate &gate);

/// Empty when the gate may appear in a nearest-neighbour matchgate circuit
/// (matchgate form, lines written as (i, i+1)); otherwise the reason it may not.
std::string matchgate_nn_rejection(const Gate &gate);

enum class CircuitClass { Clifford, MatchgateNN, Both, Neither };

std::string_view circuit_class_name(CircuitClass c);

struct Diagnostic {
    /// 1-based.
    std::size_t gate_index;
    std::string reason;
    bool operator==(const Diagnostic &other) const = default;
};

struct ClassLabel {
    CircuitClass label;
    /// One entry for the first failing gate of each failed island.
    std::vector<Diagnostic> diagnostics;
    std::optional<Diagnostic> clifford_failure;
    std::optional<Diagnostic> matchgate_failure;
};

/// Conjunction of classify_gate over the gate list. "Both" is a per-gate notion:
/// an empty circuit, or every gate individually in both islands.
ClassLabel classify_circuit(const Circuit &circuit);

}  // namespace islands

#endif
