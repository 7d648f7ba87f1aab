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

#ifndef ISLANDS_CLIFFORD_SIM_H
#define ISLANDS_CLIFFORD_SIM_H

#include <array>
#include <optional>

#include "islands/circuit.h"
#include "islands/pauli.h"
#include "islands/sim_core.h"

namespace islands {

/// Image of a single letter under g^dagger (.) g, indexed by PauliLetter.
using OneQubitCliffordTable = std::array<LetterProduct, 4>;

struct TwoQubitImage {
    Phase phase;
    PauliLetter a;
    PauliLetter b;
    bool operator==(const TwoQubitImage &other) const = default;
};

/// image[4 * a + b] = g^dagger (a (x) b) g, where a sits on the gate's line_a.
using TwoQubitCliffordTable = std::array<TwoQubitImage, 16>;

const OneQubitCliffordTable &hadamard_table();
const OneQubitCliffordTable &phase_gate_table();
const TwoQubitCliffordTable &cz_table();

/// Conjugation table of an arbitrary two-qubit unitary, or nullopt when it does
/// not map every Pauli product to a single Pauli product (within tol).
std::optional<TwoQubitCliffordTable> derive_clifford_table(const Matrix4 &u, double tol = kUnitaryTolerance);

/// g^dagger p g. H, P and CZ use the built-in tables. Matchgate and Generic2Q
/// gates are accepted when their matrix is Clifford; otherwise NotCliffordGate.
/// Throws LineOutOfRange if the gate does not fit in p.
PauliProduct conjugate_pauli_by_gate(const Gate &gate, PauliProduct p);

/// C^dagger Z_k C. Throws GateRejected(NotCliffordCircuit) naming the first
/// non-Clifford gate, or LineOutOfRange for a bad k.
PauliProduct backpropagate_observable(const Circuit &circuit, Line k);

/// Throws as backpropagate_observable, plus LengthMismatch.
MeasurementOutcome simulate_clifford(const Circuit &circuit, const ProductState &state, Line k);

/// The Pauli-group island: tracked family is the set of phased Pauli products.
struct CliffordIsland {
    using Observable = PauliProduct;
    static PauliProduct z_observable(std::size_t n, Line k) {
        return PauliProduct::single(n, k, PauliLetter::Z);
    }
    static PauliProduct conjugate(const Gate &gate, PauliProduct p) {
        return conjugate_pauli_by_gate(gate, std::move(p));
    }
    static double expectation(const PauliProduct &p, const ProductState &state) {
        return expectation_pauli_product(p, state).real();
    }
};
static_assert(SimulationIsland<CliffordIsland>);

}  // namespace islands

#endif
