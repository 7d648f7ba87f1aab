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

#ifndef ISLANDS_DENSE_ORACLE_H
#define ISLANDS_DENSE_ORACLE_H

#include <Eigen/Dense>
#include <cstddef>
#include <span>
#include <vector>

#include "islands/circuit.h"
#include "islands/pauli.h"

namespace islands {

inline constexpr std::size_t kDefaultDenseCap = 14;
inline constexpr std::size_t kMaxDenseCap = 20;
inline constexpr std::size_t kMaxDecomposeQubits = 10;

/// Full 2^n amplitude vector. Basis index bit (n - line) holds the value of `line`.
class StateVector {
   public:
    /// Throws DimensionMismatch if the size is not 2^n, NotNormalized if the norm is off by more than 1e-10.
    StateVector(std::size_t num_qubits, std::vector<Complex> amplitudes);

    std::size_t num_qubits() const {
        return num_qubits_;
    }
    std::span<const Complex> amplitudes() const {
        return amplitudes_;
    }
    double norm_squared() const;

   private:
    friend StateVector apply_gate(StateVector v, const Gate &gate);

    std::size_t num_qubits_;
    std::vector<Complex> amplitudes_;
};

/// Throws TooManyQubits when n exceeds cap (cap itself is limited to kMaxDenseCap).
StateVector from_product_state(const ProductState &state, std::size_t cap = kDefaultDenseCap);

/// Throws LineOutOfRange.
StateVector apply_gate(StateVector v, const Gate &gate);

/// <v|Z_k|v>.
double z_expectation(const StateVector &v, Line k);

/// <v|P|v>. Throws LengthMismatch.
Complex dense_expectation(const StateVector &v, const PauliProduct &p);

/// Exact statevector simulation followed by a Z measurement on line k.
MeasurementOutcome simulate_dense(
    const Circuit &circuit, const ProductState &state, Line k, std::size_t cap = kDefaultDenseCap);

/// Dense 2^m x 2^m matrix of a Pauli product.
Eigen::MatrixXcd pauli_matrix(const PauliProduct &p);

/// Embeds a two-qubit matrix at (line_a, line_b) of an m-line register, line_a the more significant.
Eigen::MatrixXcd embed_two_qubit(const Matrix4 &u, Line line_a, Line line_b, std::size_t num_qubits);

struct Decomposition {
    /// coefficients(j, k): U^dagger basis[j] U = sum_k coefficients(j, k) basis[k] + remainder_j.
    Eigen::MatrixXcd coefficients;
    /// Norm of remainder_j under <A,B> = tr(A^dagger B) / 2^m.
    std::vector<double> residuals;
    /// max_j residuals[j].
    double residual_norm = 0;
};

/// Conjugates each basis element by U and projects it onto the span of the basis.
/// Basis elements must be distinct Pauli letter patterns (they are then orthonormal).
/// Throws DimensionMismatch when U is not 2^m square, lengths disagree, or m > 10.
Decomposition conjugate_and_decompose(const Eigen::MatrixXcd &u, std::span<const PauliProduct> basis);

}  // namespace islands

#endif
