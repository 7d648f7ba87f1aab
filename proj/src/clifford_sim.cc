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

#include "islands/clifford_sim.h"

#include <string>
#include <vector>

#include "islands/dense_oracle.h"
#include "islands/errors.h"

namespace islands {

namespace {

constexpr OneQubitCliffordTable kHadamard = {{
    {Phase::plus_one(), PauliLetter::I},
    {Phase::plus_one(), PauliLetter::Z},
    {Phase::minus_one(), PauliLetter::Y},
    {Phase::plus_one(), PauliLetter::X},
}};

// P = diag(1, i): P^dagger X P = -Y, P^dagger Y P = X.
constexpr OneQubitCliffordTable kPhaseGate = {{
    {Phase::plus_one(), PauliLetter::I},
    {Phase::minus_one(), PauliLetter::Y},
    {Phase::plus_one(), PauliLetter::X},
    {Phase::plus_one(), PauliLetter::Z},
}};

constexpr bool has_x(int letter) {
    return letter == 1 || letter == 2;
}
constexpr bool has_z(int letter) {
    return letter == 2 || letter == 3;
}
constexpr PauliLetter from_xz(bool x, bool z) {
    return x ? (z ? PauliLetter::Y : PauliLetter::X) : (z ? PauliLetter::Z : PauliLetter::I);
}

// CZ: each X picks up a Z on the partner line; the sign flips when both lines
// carry an X component and exactly one of them also carries Z.
constexpr TwoQubitCliffordTable make_cz_table() {
    TwoQubitCliffordTable t{};
    for (int a = 0; a < 4; a++) {
        for (int b = 0; b < 4; b++) {
            bool xa = has_x(a), za = has_z(a), xb = has_x(b), zb = has_z(b);
            bool flip = xa && xb && (za != zb);
            t[4 * a + b] = {
                flip ? Phase::minus_one() : Phase::plus_one(), from_xz(xa, za != xb), from_xz(xb, zb != xa)};
        }
    }
    return t;
}

constexpr TwoQubitCliffordTable kControlledZ = make_cz_table();

std::vector<PauliProduct> two_qubit_pauli_basis() {
    std::vector<PauliProduct> basis;
    basis.reserve(16);
    for (int a = 0; a < 4; a++) {
        for (int b = 0; b < 4; b++) {
            basis.push_back({Phase::plus_one(), {static_cast<PauliLetter>(a), static_cast<PauliLetter>(b)}});
        }
    }
    return basis;
}

void check_fits(const Gate &gate, const PauliProduct &p) {
    if (gate.line_a() > p.letters.size() || gate.line_b() > p.letters.size()) {
        throw Error(ErrorCode::LineOutOfRange, "gate does not fit inside the Pauli product");
    }
}

void apply_one(const OneQubitCliffordTable &table, Line line, PauliProduct &p) {
    auto &slot = p.letters[line - 1];
    const auto &img = table[static_cast<int>(slot)];
    p.phase *= img.phase;
    slot = img.letter;
}

void apply_two(const TwoQubitCliffordTable &table, Line line_a, Line line_b, PauliProduct &p) {
    auto &sa = p.letters[line_a - 1];
    auto &sb = p.letters[line_b - 1];
    const auto &img = table[4 * static_cast<int>(sa) + static_cast<int>(sb)];
    p.phase *= img.phase;
    sa = img.a;
    sb = img.b;
}

std::optional<TwoQubitCliffordTable> table_for_matrix_gate(const Gate &gate) {
    return derive_clifford_table(gate.matrix4());
}

}  // namespace

const OneQubitCliffordTable &hadamard_table() {
    return kHadamard;
}

const OneQubitCliffordTable &phase_gate_table() {
    return kPhaseGate;
}

const TwoQubitCliffordTable &cz_table() {
    return kControlledZ;
}

std::optional<TwoQubitCliffordTable> derive_clifford_table(const Matrix4 &u, double tol) {
    static const std::vector<PauliProduct> basis = two_qubit_pauli_basis();
    Decomposition d = conjugate_and_decompose(u, basis);
    if (d.residual_norm > tol) {
        return std::nullopt;
    }
    TwoQubitCliffordTable table{};
    for (int j = 0; j < 16; j++) {
        std::optional<TwoQubitImage> image;
        for (int k = 0; k < 16; k++) {
            Complex c = d.coefficients(j, k);
            if (std::abs(c) <= tol) {
                continue;
            }
            auto phase = Phase::from_complex(c, tol);
            if (!phase.has_value() || image.has_value()) {
                return std::nullopt;
            }
            image = TwoQubitImage{*phase, basis[k].letters[0], basis[k].letters[1]};
        }
        if (!image.has_value()) {
            return std::nullopt;
        }
        table[j] = *image;
    }
    return table;
}

PauliProduct conjugate_pauli_by_gate(const Gate &gate, PauliProduct p) {
    check_fits(gate, p);
    switch (gate.kind()) {
        case GateKind::H:
            apply_one(kHadamard, gate.line_a(), p);
            return p;
        case GateKind::P:
            apply_one(kPhaseGate, gate.line_a(), p);
            return p;
        case GateKind::CZ:
            apply_two(kControlledZ, gate.line_a(), gate.line_b(), p);
            return p;
        case GateKind::Matchgate:
        case GateKind::Generic2Q: {
            auto table = table_for_matrix_gate(gate);
            if (!table.has_value()) {
                throw Error(ErrorCode::NotCliffordGate, "gate does not map Pauli products to Pauli products");
            }
            apply_two(*table, gate.line_a(), gate.line_b(), p);
            return p;
        }
    }
    throw std::logic_error("unknown gate kind");
}

PauliProduct backpropagate_observable(const Circuit &circuit, Line k) {
    const auto &gates = circuit.gates();

    // Matrix-valued gates get their tables derived once, in circuit order, so the
    // reported gate is the first offender.
    std::vector<TwoQubitCliffordTable> derived;
    for (std::size_t g = 0; g < gates.size(); g++) {
        GateKind kind = gates[g].kind();
        if (kind != GateKind::Matchgate && kind != GateKind::Generic2Q) {
            continue;
        }
        auto table = table_for_matrix_gate(gates[g]);
        if (!table.has_value()) {
            throw GateRejected(
                ErrorCode::NotCliffordCircuit,
                g + 1,
                std::string(kind == GateKind::Matchgate ? "matchgate" : "generic gate") +
                    " is not a Clifford operation");
        }
        derived.push_back(*table);
    }

    PauliProduct p = PauliProduct::single(circuit.num_qubits(), k, PauliLetter::Z);
    std::size_t next_table = derived.size();
    for (std::size_t g = gates.size(); g-- > 0;) {
        const Gate &gate = gates[g];
        switch (gate.kind()) {
            case GateKind::H:
                apply_one(kHadamard, gate.line_a(), p);
                break;
            case GateKind::P:
                apply_one(kPhaseGate, gate.line_a(), p);
                break;
            case GateKind::CZ:
                apply_two(kControlledZ, gate.line_a(), gate.line_b(), p);
                break;
            case GateKind::Matchgate:
            case GateKind::Generic2Q:
                apply_two(derived[--next_table], gate.line_a(), gate.line_b(), p);
                break;
        }
    }
    return p;
}

MeasurementOutcome simulate_clifford(const Circuit &circuit, const ProductState &state, Line k) {
    if (state.num_qubits() != circuit.num_qubits()) {
        throw Error(ErrorCode::LengthMismatch, "input state and circuit have different qubit counts");
    }
    PauliProduct observable = backpropagate_observable(circuit, k);
    return MeasurementOutcome::from_z_expectation(expectation_pauli_product(observable, state).real());
}

}  // namespace islands
