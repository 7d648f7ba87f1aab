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

#ifndef ISLANDS_SIM_CORE_H
#define ISLANDS_SIM_CORE_H

#include <concepts>
#include <cstddef>
#include <utility>

#include "islands/circuit.h"

namespace islands {

/// A simulatable island is a family of observables closed under conjugation by
/// the island's gates, whose product-state expectation values are cheap.
///
///   Observable                 representation of one element of the tracked family
///   z_observable(n, k)         the family element (or simple combination) equal to Z on line k
///   conjugate(g, obs)          g^dagger obs g, still inside the family
///   expectation(obs, state)    <state|obs|state> for a product state, as a real number
///
/// Any such island gets single-line Z measurement simulation for free through
/// heisenberg_z_expectation below.
template <typename T>
concept SimulationIsland = requires(
    const Gate &gate, typename T::Observable obs, const ProductState &state, std::size_t n, Line k) {
    { T::z_observable(n, k) } -> std::same_as<typename T::Observable>;
    { T::conjugate(gate, std::move(obs)) } -> std::same_as<typename T::Observable>;
    { T::expectation(std::as_const(obs), state) } -> std::same_as<double>;
};

/// p0 - p1 for a Z measurement on line k after the circuit, computed as
/// <state| C^dagger Z_k C |state>. Gates are conjugated last-applied first.
template <SimulationIsland Island>
double heisenberg_z_expectation(const Circuit &circuit, const ProductState &state, Line k) {
    auto obs = Island::z_observable(circuit.num_qubits(), k);
    const auto &gates = circuit.gates();
    for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
        obs = Island::conjugate(*it, std::move(obs));
    }
    return Island::expectation(obs, state);
}

}  // namespace islands

#endif
