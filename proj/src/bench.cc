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

#include "islands/bench.h"

#include <algorithm>
#include <chrono>
#include <limits>
#include <stdexcept>

#include "islands/clifford_sim.h"
#include "islands/matchgate_sim.h"
#include "islands/random_circuits.h"

namespace islands {

BenchResult run_bench(
    BenchSuite suite, std::size_t num_qubits, std::size_t num_gates, std::uint64_t seed, std::size_t repeat) {
    if (num_qubits == 0) {
        throw std::invalid_argument("n must be positive");
    }
    if (suite == BenchSuite::Matchgate && num_qubits < 2) {
        throw std::invalid_argument("the matchgate suite needs n >= 2");
    }
    if (repeat == 0) {
        throw std::invalid_argument("repeat must be positive");
    }
    Rng rng(seed);
    Circuit circuit = suite == BenchSuite::Clifford ? random_clifford_circuit(num_qubits, num_gates, rng)
                                                    : random_matchgate_circuit(num_qubits, num_gates, rng);
    ProductState state = ProductState::all_zero(num_qubits);

    BenchResult result{num_qubits, num_gates, std::numeric_limits<double>::infinity(), {}};
    for (std::size_t r = 0; r < repeat; r++) {
        auto start = std::chrono::steady_clock::now();
        MeasurementOutcome outcome = suite == BenchSuite::Clifford ? simulate_clifford(circuit, state, 1)
                                                                   : simulate_matchgate(circuit, state, 1);
        auto stop = std::chrono::steady_clock::now();
        result.wall_ms = std::min(result.wall_ms, std::chrono::duration<double, std::milli>(stop - start).count());
        result.outcome = outcome;
    }
    return result;
}

}  // namespace islands
