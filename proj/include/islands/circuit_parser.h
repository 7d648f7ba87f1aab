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

#ifndef ISLANDS_CIRCUIT_PARSER_H
#define ISLANDS_CIRCUIT_PARSER_H

#include <optional>
#include <string>
#include <string_view>

#include "islands/circuit.h"

namespace islands {

/// Largest qubit count the text format accepts.
inline constexpr std::size_t kMaxParsedQubits = std::size_t{1} << 20;

/// A parsed circuit file.
///
///     qubits <n>                      required, first directive
///     H <i> | P <i> | CZ <i> <j>
///     G <i> <j> <16 floats>           A then B, row-major, (re, im) per entry
///     U <i> <j> <32 floats>           4x4 row-major, (re, im) per entry
///     state <i>: <4 floats>           amp0 re, amp0 im, amp1 re, amp1 im
///     measure <k>                     at most once
///
/// `#` starts a comment. Lines without a `state` directive default to |0> once any
/// `state` directive is present; `state` is nullopt when none is.
struct CircuitDocument {
    Circuit circuit;
    std::optional<ProductState> state;
    std::optional<Line> measure;

    bool operator==(const CircuitDocument &other) const = default;
};

/// Throws ParseError carrying a 1-based line and column. Grammar problems use
/// ErrorCode::SyntaxError; everything else carries the semantic cause.
CircuitDocument parse_circuit(std::string_view text);

/// Canonical text: one directive per line, numbers with 17 significant digits,
/// gates first, then every state factor, then the measure line.
std::string serialize_circuit(
    const Circuit &circuit, const std::optional<ProductState> &state = std::nullopt,
    std::optional<Line> measure = std::nullopt);
std::string serialize_circuit(const CircuitDocument &doc);

}  // namespace islands

#endif
