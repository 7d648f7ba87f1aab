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

#ifndef ISLANDS_ERRORS_H
#define ISLANDS_ERRORS_H

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace islands {

enum class ErrorCode {
    NonFinite,
    NotUnitary,
    DeterminantMismatch,
    NotNormalized,
    LineOutOfRange,
    LengthMismatch,
    IndexOutOfRange,
    NotCliffordGate,
    NotCliffordCircuit,
    NotNNMatchgateCircuit,
    SpanClosureViolation,
    TooManyQubits,
    DimensionMismatch,
    SyntaxError,
    SemanticError,
};

std::string_view error_code_name(ErrorCode code);

/// Base of every error raised by the library. Carries a machine-readable code.
class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string &message) : std::runtime_error(message), code_(code) {
    }
    ErrorCode code() const {
        return code_;
    }

   private:
    ErrorCode code_;
};

/// Raised when a circuit contains a gate outside the simulator's island.
/// `gate_index` is 1-based, matching the diagnostics printed by the CLI.
class GateRejected : public Error {
   public:
    GateRejected(ErrorCode code, std::size_t gate_index, const std::string &reason)
        : Error(code, "gate " + std::to_string(gate_index) + ": " + reason), gate_index_(gate_index), reason_(reason) {
    }
    std::size_t gate_index() const {
        return gate_index_;
    }
    const std::string &reason() const {
        return reason_;
    }

   private:
    std::size_t gate_index_;
    std::string reason_;
};

/// Parser failure with a 1-based source position. `code()` is SyntaxError for
/// grammar problems, otherwise the semantic cause (e.g. DeterminantMismatch).
class ParseError : public Error {
   public:
    ParseError(ErrorCode code, std::size_t line, std::size_t column, const std::string &message)
        : Error(code, std::to_string(line) + ":" + std::to_string(column) + ": " + message),
          line_(line),
          column_(column) {
    }
    std::size_t line() const {
        return line_;
    }
    std::size_t column() const {
        return column_;
    }
    bool is_syntax_error() const {
        return code() == ErrorCode::SyntaxError;
    }

   private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace islands

#endif
