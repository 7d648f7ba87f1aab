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

#ifndef ISLANDS_RANDOM_CIRCUITS_H
#define ISLANDS_RANDOM_CIRCUITS_H

#include <cstddef>
#include <random>
#include <utility>

#include "islands/circuit.h"

namespace islands {

using Rng = std::mt19937_64;

/// Haar-distributed 2x2 unitary (Gram-Schmidt on a complex Gaussian matrix).
Matrix2 random_unitary2(Rng &rng);

/// Independent Haar A and B, then B's second column is rotated by det A / det B
/// so that the determinants agree.
std::pair<Matrix2, Matrix2> random_matchgate_blocks(Rng &rng);

SingleQubitState random_single_qubit_state(Rng &rng);
ProductState random_product_state(std::size_t num_qubits, Rng &rng);

/// Gates drawn uniformly from {H, P, CZ} (just {H, P} when n == 1), lines uniform.
Circuit random_clifford_circuit(std::size_t num_qubits, std::size_t num_gates, Rng &rng);

/// Random-block matchgates on uniformly chosen (i, i+1). Requires n >= 2.
Circuit random_matchgate_circuit(std::size_t num_qubits, std::size_t num_gates, Rng &rng);

}  // namespace islands

#endif
