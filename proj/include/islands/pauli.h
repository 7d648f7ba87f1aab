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

#ifndef ISLANDS_PAULI_H
#define ISLANDS_PAULI_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "islands/circuit.h"

namespace islands {

enum class PauliLetter : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char pauli_letter_char(PauliLetter letter);

/// A fourth root of unity i^exponent, stored symbolically.
class Phase {
   public:
    constexpr Phase() = default;
    static constexpr Phase from_exponent(int exponent) {
        Phase p;
        p.exponent_ = static_cast<std::uint8_t>(((exponent % 4) + 4) % 4);
        return p;
    }
    static constexpr Phase plus_one() {
        return from_exponent(0);
    }
    static constexpr Phase plus_i() {
        return from_exponent(1);
    }
    static constexpr Phase minus_one() {
        return from_exponent(2);
    }
    static constexpr Phase minus_i() {
        return from_exponent(3);
    }
    /// Recognizes z within tol of one of {1, i, -1, -i}.
    static std::optional<Phase> from_complex(Complex z, double tol);

    constexpr int exponent() const {
        return exponent_;
    }
    constexpr bool is_real() const {
        return (exponent_ & 1) == 0;
    }
    Complex value() const;

    constexpr Phase operator*(Phase other) const {
        return from_exponent(exponent_ + other.exponent_);
    }
    constexpr Phase &operator*=(Phase other) {
        exponent_ = static_cast<std::uint8_t>((exponent_ + other.exponent_) & 3);
        return *this;
    }
    constexpr bool operator==(const Phase &other) const = default;

   private:
    std::uint8_t exponent_ = 0;
};

/// Product of single-letter Paulis: a - b with the accumulated phase.
struct LetterProduct {
    Phase phase;
    PauliLetter letter;
};
LetterProduct multiply_letters(PauliLetter a, PauliLetter b);

/// phase * (letters[0] (x) letters[1] (x) ...). Slot 0 is line 1.
struct PauliProduct {
    Phase phase;
    std::vector<PauliLetter> letters;

    static PauliProduct identity(std::size_t num_qubits);
    /// Z (or any letter) at a 1-based line, identity elsewhere.
    static PauliProduct single(std::size_t num_qubits, Line line, PauliLetter letter);
    /// Parses e.g. "+XZ", "-iIY", "ZZ". Phase prefixes: + - +i -i i.
    static PauliProduct from_string(std::string_view text);

    std::size_t num_qubits() const {
        return letters.size();
    }
    bool is_hermitian() const {
        return phase.is_real();
    }
    std::string str() const;

    bool operator==(const PauliProduct &other) const = default;
};

/// Throws LengthMismatch.
PauliProduct multiply_pauli_products(const PauliProduct &p, const PauliProduct &q);

/// <a|sigma|a> for one factor. Real for every Pauli letter.
double single_qubit_expectation(PauliLetter letter, const SingleQubitState &state);

/// phase * prod_k <a_k|P_k|a_k>, in O(n). Throws LengthMismatch.
Complex expectation_pauli_product(const PauliProduct &p, const ProductState &state);

}  // namespace islands

#endif
