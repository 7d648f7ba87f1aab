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

#ifndef ISLANDS_MATCHGATE_SIM_H
#define ISLANDS_MATCHGATE_SIM_H

#include <Eigen/Dense>
#include <cstddef>

#include "islands/circuit.h"
#include "islands/pauli.h"
#include "islands/sim_core.h"

namespace islands {

/// The 2n Jordan-Wigner operators on n lines:
///   c_{2k-1} = Z..Z X I..I,  c_{2k} = Z..Z Y I..I  (X/Y on line k).
/// Mode indices j are 1-based, j in [1, 2n].
class JordanWignerBasis {
   public:
    explicit JordanWignerBasis(std::size_t num_qubits);

    std::size_t num_qubits() const {
        return num_qubits_;
    }
    std::size_t num_modes() const {
        return 2 * num_qubits_;
    }
    /// Throws IndexOutOfRange.
    PauliProduct operator[](std::size_t j) const;
    std::vector<PauliProduct> all() const;

   private:
    std::size_t num_qubits_;
};

/// Real orthogonal 2n x 2n matrix R with U^dagger c_j U = sum_k R(j-1, k-1) c_k.
/// Rows are the conjugated basis operators; the measurement reads rows 2k-1 and 2k.
class MajoranaRotation {
   public:
    using Matrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

    static MajoranaRotation identity(std::size_t num_qubits);

    std::size_t num_qubits() const {
        return num_qubits_;
    }
    const Matrix &matrix() const {
        return r_;
    }
    /// max |R R^T - I|.
    double orthogonality_error() const;

    /// Left-multiplies by a gate's local block acting on modes 2i-1 .. 2i+2.
    /// This is the update for a gate applied before everything already folded in.
    void apply_local_block(Line line, const Eigen::Matrix4d &block);

   private:
    explicit MajoranaRotation(std::size_t num_qubits);

    std::size_t num_qubits_;
    Matrix r_;
};

/// 4x4 real block B with G^dagger c_j G = sum_k B(j,k) c_k over the four modes of
/// a nearest-neighbour pair, in the order (X I, Y I, Z X, Z Y) on the two lines.
/// Derived numerically by conjugating and decomposing. Throws SpanClosureViolation
/// when the decomposition residual exceeds 1e-8 or a coefficient is not real.
Eigen::Matrix4d local_conjugation_block(const Matrix4 &gate_matrix);
Eigen::Matrix4d local_conjugation_block(const Gate &gate);

/// Throws GateRejected(NotNNMatchgateCircuit) naming the first offending gate.
MajoranaRotation circuit_rotation(const Circuit &circuit);

/// <state| c_i c_j |state>, i and j 1-based. Throws IndexOutOfRange.
Complex majorana_pair_expectation(std::size_t i, std::size_t j, const ProductState &state);

/// -i sum_{i,j} a_i b_j <state| c_i c_j |state> over the 2n modes, using per-line
/// expectation tables so each of the O(n^2) pair terms costs O(1).
/// Throws LengthMismatch.
Complex quadratic_majorana_expectation(
    const Eigen::Ref<const Eigen::VectorXd> &a, const Eigen::Ref<const Eigen::VectorXd> &b, const ProductState &state);

/// Throws GateRejected(NotNNMatchgateCircuit), LengthMismatch, LineOutOfRange.
MeasurementOutcome simulate_matchgate(const Circuit &circuit, const ProductState &state, Line k);

struct ClosureReport {
    bool closed;
    double residual_norm;
};

/// Places G(A,B) on lines (line_a, line_b) of an n-line register, conjugates every
/// c_m, and reports the largest component left outside span{c_1..c_2n}.
/// closed == (residual_norm < 1e-9).
ClosureReport check_span_closure(const Matrix2 &a, const Matrix2 &b, Line line_a, Line line_b, std::size_t n);

/// The free-fermion island: tracked family is the linear span of the c_j, and
/// Z_k is represented as -i c_{2k-1} c_{2k}.
struct MatchgateIsland {
    /// -i (sum_j a_j c_j)(sum_j b_j c_j).
    struct Observable {
        Eigen::VectorXd a;
        Eigen::VectorXd b;
    };
    static Observable z_observable(std::size_t n, Line k);
    /// Throws Error(NotNNMatchgateCircuit).
    static Observable conjugate(const Gate &gate, Observable obs);
    static double expectation(const Observable &obs, const ProductState &state);
};
static_assert(SimulationIsland<MatchgateIsland>);

}  // namespace islands

#endif
