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

#include "islands/random_circuits.h"

#include <stdexcept>
#include <vector>

namespace islands {

namespace {

Complex gaussian_complex(Rng &rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    double re = normal(rng);
    double im = normal(rng);
    return {re, im};
}

Line uniform_line(std::size_t num_qubits, Rng &rng) {
    return static_cast<Line>(std::uniform_int_distribution<std::size_t>(1, num_qubits)(rng));
}

}  // namespace

Matrix2 random_unitary2(Rng &rng) {
    Matrix2 g;
    for (int r = 0; r < 2; r++) {
        for (int c = 0; c < 2; c++) {
            g(r, c) = gaussian_complex(rng);
        }
    }
    Eigen::Vector2cd c0 = g.col(0).normalized();
    Eigen::Vector2cd c1 = g.col(1) - c0.dot(g.col(1)) * c0;
    c1.normalize();
    Matrix2 u;
    u.col(0) = c0;
    u.col(1) = c1;
    return u;
}

std::pair<Matrix2, Matrix2> random_matchgate_blocks(Rng &rng) {
    Matrix2 a = random_unitary2(rng);
    Matrix2 b = random_unitary2(rng);
    Complex ratio = a.determinant() / b.determinant();
    b.col(1) *= ratio / std::abs(ratio);
    return {a, b};
}

SingleQubitState random_single_qubit_state(Rng &rng) {
    Complex a0 = gaussian_complex(rng);
    Complex a1 = gaussian_complex(rng);
    double norm = std::sqrt(std::norm(a0) + std::norm(a1));
    return {a0 / norm, a1 / norm};
}

ProductState random_product_state(std::size_t num_qubits, Rng &rng) {
    std::vector<SingleQubitState> factors;
    factors.reserve(num_qubits);
    for (std::size_t i = 0; i < num_qubits; i++) {
        factors.push_back(random_single_qubit_state(rng));
    }
    return ProductState(std::move(factors));
}

Circuit random_clifford_circuit(std::size_t num_qubits, std::size_t num_gates, Rng &rng) {
    Circuit c(num_qubits);
    int kinds = num_qubits >= 2 ? 3 : 2;
    std::vector<Gate> gates;
    gates.reserve(num_gates);
    for (std::size_t g = 0; g < num_gates; g++) {
        int kind = std::uniform_int_distribution<int>(0, kinds - 1)(rng);
        Line a = uniform_line(num_qubits, rng);
        if (kind == 0) {
            gates.push_back(Gate::h(a));
        } else if (kind == 1) {
            gates.push_back(Gate::p(a));
        } else {
            Line b = uniform_line(num_qubits - 1, rng);
            if (b >= a) {
                b++;
            }
            gates.push_back(Gate::cz(a, b));
        }
    }
    return Circuit(num_qubits, std::move(gates));
}

Circuit random_matchgate_circuit(std::size_t num_qubits, std::size_t num_gates, Rng &rng) {
    if (num_qubits < 2) {
        throw std::invalid_argument("a matchgate circuit needs at least two lines");
    }
    std::vector<Gate> gates;
    gates.reserve(num_gates);
    for (std::size_t g = 0; g < num_gates; g++) {
        Line a = uniform_line(num_qubits - 1, rng);
        auto [ma, mb] = random_matchgate_blocks(rng);
        gates.push_back(make_matchgate(ma, mb, a, a + 1));
    }
    return Circuit(num_qubits, std::move(gates));
}

}  // namespace islands
