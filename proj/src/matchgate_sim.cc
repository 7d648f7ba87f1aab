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

#include "islands/matchgate_sim.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "islands/classifier.h"
#include "islands/dense_oracle.h"
#include "islands/errors.h"

namespace islands {

namespace {

constexpr double kImaginaryTolerance = 1e-10;
constexpr double kBlockResidualLimit = 1e-8;
constexpr double kClosureThreshold = 1e-9;
constexpr double kMeasurementImaginaryTolerance = 1e-9;

const std::vector<PauliProduct> &two_line_modes() {
    static const std::vector<PauliProduct> basis = JordanWignerBasis(2).all();
    return basis;
}

void require_nn_matchgate(const Gate &gate, std::size_t gate_index) {
    std::string reason = matchgate_nn_rejection(gate);
    if (!reason.empty()) {
        throw GateRejected(ErrorCode::NotNNMatchgateCircuit, gate_index, reason);
    }
}

}  // namespace

JordanWignerBasis::JordanWignerBasis(std::size_t num_qubits) : num_qubits_(num_qubits) {
}

PauliProduct JordanWignerBasis::operator[](std::size_t j) const {
    if (j == 0 || j > num_modes()) {
        throw Error(
            ErrorCode::IndexOutOfRange,
            "Majorana index " + std::to_string(j) + " outside [1, " + std::to_string(num_modes()) + "]");
    }
    std::size_t line = (j + 1) / 2;
    PauliProduct c = PauliProduct::identity(num_qubits_);
    for (std::size_t s = 0; s + 1 < line; s++) {
        c.letters[s] = PauliLetter::Z;
    }
    c.letters[line - 1] = (j % 2 == 1) ? PauliLetter::X : PauliLetter::Y;
    return c;
}

std::vector<PauliProduct> JordanWignerBasis::all() const {
    std::vector<PauliProduct> out;
    out.reserve(num_modes());
    for (std::size_t j = 1; j <= num_modes(); j++) {
        out.push_back((*this)[j]);
    }
    return out;
}

MajoranaRotation::MajoranaRotation(std::size_t num_qubits)
    : num_qubits_(num_qubits), r_(Matrix::Identity(2 * num_qubits, 2 * num_qubits)) {
}

MajoranaRotation MajoranaRotation::identity(std::size_t num_qubits) {
    return MajoranaRotation(num_qubits);
}

double MajoranaRotation::orthogonality_error() const {
    if (r_.size() == 0) {
        return 0;
    }
    return (r_ * r_.transpose() - Eigen::MatrixXd::Identity(r_.rows(), r_.cols())).cwiseAbs().maxCoeff();
}

void MajoranaRotation::apply_local_block(Line line, const Eigen::Matrix4d &block) {
    if (line == 0 || line + 1 > num_qubits_) {
        throw Error(ErrorCode::LineOutOfRange, "local block at line " + std::to_string(line) + " does not fit");
    }
    auto rows = r_.middleRows(2 * (line - 1), 4);
    rows = (block * rows).eval();
}

Eigen::Matrix4d local_conjugation_block(const Matrix4 &gate_matrix) {
    Decomposition d = conjugate_and_decompose(gate_matrix, two_line_modes());
    if (d.residual_norm > kBlockResidualLimit) {
        throw Error(
            ErrorCode::SpanClosureViolation,
            "conjugated Majorana operator leaves the linear span (residual " + std::to_string(d.residual_norm) + ")");
    }
    if (d.coefficients.imag().cwiseAbs().maxCoeff() > kImaginaryTolerance) {
        throw Error(ErrorCode::SpanClosureViolation, "conjugation block has complex coefficients");
    }
    return d.coefficients.real();
}

Eigen::Matrix4d local_conjugation_block(const Gate &gate) {
    require_nn_matchgate(gate, 1);
    return local_conjugation_block(gate.matrix4());
}

MajoranaRotation circuit_rotation(const Circuit &circuit) {
    const auto &gates = circuit.gates();
    for (std::size_t g = 0; g < gates.size(); g++) {
        require_nn_matchgate(gates[g], g + 1);
    }
    // M = G_m ... G_1 gives M^dagger c M = G_1^dagger (... G_m^dagger c G_m ...) G_1,
    // so R = B_m ... B_1 and each newly applied gate multiplies from the left.
    MajoranaRotation r = MajoranaRotation::identity(circuit.num_qubits());
    for (const auto &gate : gates) {
        r.apply_local_block(gate.line_a(), local_conjugation_block(gate.matrix4()));
    }
    return r;
}

Complex majorana_pair_expectation(std::size_t i, std::size_t j, const ProductState &state) {
    JordanWignerBasis basis(state.num_qubits());
    return expectation_pauli_product(multiply_pauli_products(basis[i], basis[j]), state);
}

Complex quadratic_majorana_expectation(
    const Eigen::Ref<const Eigen::VectorXd> &a, const Eigen::Ref<const Eigen::VectorXd> &b, const ProductState &state) {
    const std::size_t n = state.num_qubits();
    if (static_cast<std::size_t>(a.size()) != 2 * n || static_cast<std::size_t>(b.size()) != 2 * n) {
        throw Error(ErrorCode::LengthMismatch, "coefficient vectors must have 2n entries");
    }
    const Complex i(0, 1);
    auto factors = state.factors();

    // For c_i on line p and c_j on line q, c_i c_j is
    //   p < q:  (s_i Z) on p, Z strictly between, s_j on q
    //   p > q:  (Z s_j) on q, Z strictly between, s_i on p
    //   p = q:  s_i s_j on p
    // with identity everywhere else.
    std::vector<Complex> a_sz(n), a_s(n), b_zs(n), b_s(n);
    std::vector<double> ez(n);
    Complex same_line = 0;
    for (std::size_t p = 0; p < n; p++) {
        double ex = single_qubit_expectation(PauliLetter::X, factors[p]);
        double ey = single_qubit_expectation(PauliLetter::Y, factors[p]);
        ez[p] = single_qubit_expectation(PauliLetter::Z, factors[p]);
        double ax = a[2 * p], ay = a[2 * p + 1];
        double bx = b[2 * p], by = b[2 * p + 1];
        // XZ = -iY, YZ = iX, ZX = iY, ZY = -iX, XY = iZ, YX = -iZ.
        a_sz[p] = ax * (-i * ey) + ay * (i * ex);
        a_s[p] = ax * ex + ay * ey;
        b_zs[p] = bx * (i * ey) + by * (-i * ex);
        b_s[p] = bx * ex + by * ey;
        same_line += ax * bx + ay * by + (ax * by - ay * bx) * i * ez[p];
    }

    Complex cross = 0;
    for (std::size_t lo = 0; lo < n; lo++) {
        double between = 1.0;
        Complex lo_a = a_sz[lo];
        Complex lo_b = b_zs[lo];
        for (std::size_t hi = lo + 1; hi < n; hi++) {
            cross += (lo_a * b_s[hi] + lo_b * a_s[hi]) * between;
            between *= ez[hi];
        }
    }
    return -i * (same_line + cross);
}

MeasurementOutcome simulate_matchgate(const Circuit &circuit, const ProductState &state, Line k) {
    if (state.num_qubits() != circuit.num_qubits()) {
        throw Error(ErrorCode::LengthMismatch, "input state and circuit have different qubit counts");
    }
    if (k == 0 || k > circuit.num_qubits()) {
        throw Error(ErrorCode::LineOutOfRange, "measured line " + std::to_string(k) + " outside the circuit");
    }
    MajoranaRotation r = circuit_rotation(circuit);
    // Z_k = -i c_{2k-1} c_{2k}; the conjugated pair is rows 2k-1 and 2k of R.
    Complex d = quadratic_majorana_expectation(
        r.matrix().row(2 * (k - 1)).transpose(), r.matrix().row(2 * (k - 1) + 1).transpose(), state);
    if (std::abs(d.imag()) > kMeasurementImaginaryTolerance) {
        throw Error(ErrorCode::SpanClosureViolation, "matchgate expectation has a non-negligible imaginary part");
    }
    return MeasurementOutcome::from_z_expectation(d.real());
}

ClosureReport check_span_closure(const Matrix2 &a, const Matrix2 &b, Line line_a, Line line_b, std::size_t n) {
    if (line_a == 0 || line_b == 0 || line_a > n || line_b > n || line_a == line_b) {
        throw Error(ErrorCode::LineOutOfRange, "closure check needs two distinct lines inside [1, n]");
    }
    // Modes on lines outside [lo, hi] commute with a parity-preserving gate, and the
    // prefix string is shared by every mode inside the segment, so the check reduces
    // to the segment. Lines strictly between lo and hi only tag which c_m a Z I
    // pattern came from, and the gate never touches them, so one middle line stands
    // in for all of them.
    Line lo = std::min(line_a, line_b);
    Line hi = std::max(line_a, line_b);
    std::size_t m = (hi - lo == 1) ? 2 : 3;
    Line seg_a = line_a < line_b ? 1 : static_cast<Line>(m);
    Line seg_b = line_a < line_b ? static_cast<Line>(m) : 1;
    Eigen::MatrixXcd u = embed_two_qubit(matchgate_matrix(a, b), seg_a, seg_b, m);
    Decomposition d = conjugate_and_decompose(u, JordanWignerBasis(m).all());
    return {d.residual_norm < kClosureThreshold, d.residual_norm};
}

MatchgateIsland::Observable MatchgateIsland::z_observable(std::size_t n, Line k) {
    if (k == 0 || k > n) {
        throw Error(ErrorCode::LineOutOfRange, "measured line " + std::to_string(k) + " outside the circuit");
    }
    Observable obs{Eigen::VectorXd::Zero(2 * n), Eigen::VectorXd::Zero(2 * n)};
    obs.a[2 * (k - 1)] = 1;
    obs.b[2 * (k - 1) + 1] = 1;
    return obs;
}

MatchgateIsland::Observable MatchgateIsland::conjugate(const Gate &gate, Observable obs) {
    std::string reason = matchgate_nn_rejection(gate);
    if (!reason.empty()) {
        throw Error(ErrorCode::NotNNMatchgateCircuit, reason);
    }
    if (2 * static_cast<std::size_t>(gate.line_b()) > static_cast<std::size_t>(obs.a.size())) {
        throw Error(ErrorCode::LineOutOfRange, "gate does not fit inside the observable");
    }
    Eigen::Matrix4d block = local_conjugation_block(gate.matrix4());
    Eigen::Index off = 2 * (gate.line_a() - 1);
    // sum_j a_j G^dagger c_j G = sum_k (sum_j a_j B(j,k)) c_k.
    obs.a.segment<4>(off) = (block.transpose() * obs.a.segment<4>(off)).eval();
    obs.b.segment<4>(off) = (block.transpose() * obs.b.segment<4>(off)).eval();
    return obs;
}

double MatchgateIsland::expectation(const Observable &obs, const ProductState &state) {
    return quadratic_majorana_expectation(obs.a, obs.b, state).real();
}

}  // namespace islands
