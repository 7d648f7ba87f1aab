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

#include "islands/pauli.h"

#include <array>
#include <cmath>

#include "islands/errors.h"

namespace islands {

namespace {

// kLetterTable[a][b] = a * b.
constexpr std::array<std::array<LetterProduct, 4>, 4> kLetterTable = {{
    {{{Phase::plus_one(), PauliLetter::I},
      {Phase::plus_one(), PauliLetter::X},
      {Phase::plus_one(), PauliLetter::Y},
      {Phase::plus_one(), PauliLetter::Z}}},
    {{{Phase::plus_one(), PauliLetter::X},
      {Phase::plus_one(), PauliLetter::I},
      {Phase::plus_i(), PauliLetter::Z},
      {Phase::minus_i(), PauliLetter::Y}}},
    {{{Phase::plus_one(), PauliLetter::Y},
      {Phase::minus_i(), PauliLetter::Z},
      {Phase::plus_one(), PauliLetter::I},
      {Phase::plus_i(), PauliLetter::X}}},
    {{{Phase::plus_one(), PauliLetter::Z},
      {Phase::plus_i(), PauliLetter::Y},
      {Phase::minus_i(), PauliLetter::X},
      {Phase::plus_one(), PauliLetter::I}}},
}};

}  // namespace

char pauli_letter_char(PauliLetter letter) {
    return "IXYZ"[static_cast<int>(letter)];
}

std::optional<Phase> Phase::from_complex(Complex z, double tol) {
    for (int e = 0; e < 4; e++) {
        Phase p = from_exponent(e);
        if (std::abs(z - p.value()) <= tol) {
            return p;
        }
    }
    return std::nullopt;
}

Complex Phase::value() const {
    switch (exponent_) {
        case 0:
            return {1, 0};
        case 1:
            return {0, 1};
        case 2:
            return {-1, 0};
        default:
            return {0, -1};
    }
}

LetterProduct multiply_letters(PauliLetter a, PauliLetter b) {
    return kLetterTable[static_cast<int>(a)][static_cast<int>(b)];
}

PauliProduct PauliProduct::identity(std::size_t num_qubits) {
    return {Phase::plus_one(), std::vector<PauliLetter>(num_qubits, PauliLetter::I)};
}

PauliProduct PauliProduct::single(std::size_t num_qubits, Line line, PauliLetter letter) {
    if (line == 0 || line > num_qubits) {
        throw Error(ErrorCode::LineOutOfRange, "line " + std::to_string(line) + " outside Pauli product");
    }
    PauliProduct p = identity(num_qubits);
    p.letters[line - 1] = letter;
    return p;
}

PauliProduct PauliProduct::from_string(std::string_view text) {
    PauliProduct p;
    bool negative = false;
    if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    if (!text.empty() && text.front() == 'i') {
        p.phase = Phase::plus_i();
        text.remove_prefix(1);
    }
    if (negative) {
        p.phase *= Phase::minus_one();
    }
    for (char c : text) {
        switch (c) {
            case 'I':
            case '_':
                p.letters.push_back(PauliLetter::I);
                break;
            case 'X':
                p.letters.push_back(PauliLetter::X);
                break;
            case 'Y':
                p.letters.push_back(PauliLetter::Y);
                break;
            case 'Z':
                p.letters.push_back(PauliLetter::Z);
                break;
            default:
                throw std::invalid_argument("not a Pauli letter: '" + std::string(1, c) + "'");
        }
    }
    return p;
}

std::string PauliProduct::str() const {
    static constexpr const char *kPrefix[] = {"+", "+i", "-", "-i"};
    std::string out = kPrefix[phase.exponent()];
    for (PauliLetter l : letters) {
        out.push_back(pauli_letter_char(l));
    }
    return out;
}

PauliProduct multiply_pauli_products(const PauliProduct &p, const PauliProduct &q) {
    if (p.letters.size() != q.letters.size()) {
        throw Error(
            ErrorCode::LengthMismatch,
            "cannot multiply Pauli products of lengths " + std::to_string(p.letters.size()) + " and " +
                std::to_string(q.letters.size()));
    }
    PauliProduct out;
    out.phase = p.phase * q.phase;
    out.letters.resize(p.letters.size());
    for (std::size_t k = 0; k < p.letters.size(); k++) {
        auto lp = multiply_letters(p.letters[k], q.letters[k]);
        out.phase *= lp.phase;
        out.letters[k] = lp.letter;
    }
    return out;
}

double single_qubit_expectation(PauliLetter letter, const SingleQubitState &state) {
    Complex a0 = state.amp0();
    Complex a1 = state.amp1();
    switch (letter) {
        case PauliLetter::I:
            return 1.0;
        case PauliLetter::X:
            return 2.0 * (std::conj(a0) * a1).real();
        case PauliLetter::Y:
            return 2.0 * (std::conj(a0) * a1).imag();
        case PauliLetter::Z:
            return std::norm(a0) - std::norm(a1);
    }
    return 0.0;
}

Complex expectation_pauli_product(const PauliProduct &p, const ProductState &state) {
    if (p.letters.size() != state.num_qubits()) {
        throw Error(
            ErrorCode::LengthMismatch,
            "Pauli product has " + std::to_string(p.letters.size()) + " slots but the state has " +
                std::to_string(state.num_qubits()) + " lines");
    }
    double product = 1.0;
    auto factors = state.factors();
    for (std::size_t k = 0; k < p.letters.size(); k++) {
        if (p.letters[k] != PauliLetter::I) {
            product *= single_qubit_expectation(p.letters[k], factors[k]);
        }
    }
    return p.phase.value() * product;
}

}  // namespace islands
