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

#include "islands/dense_oracle.h"

#include <bit>
#include <cmath>
#include <string>

#include "islands/errors.h"

namespace islands {

namespace {

std::size_t bit_of(Line line, std::size_t num_qubits) {
    return num_qubits - line;
}

// P|x> = factor(x) |x ^ flip>.
struct PauliAction {
    std::size_t flip = 0;
    std::size_t z_mask = 0;
    std::size_t y_mask = 0;
    Complex phase{1, 0};
    int y_count = 0;

    explicit PauliAction(const PauliProduct &p) {
        std::size_t m = p.letters.size();
        phase = p.phase.value();
        for (std::size_t s = 0; s < m; s++) {
            std::size_t bit = std::size_t{1} << (m - 1 - s);
            switch (p.letters[s]) {
                case PauliLetter::I:
                    break;
                case PauliLetter::X:
                    flip |= bit;
                    break;
                case PauliLetter::Y:
                    flip |= bit;
                    z_mask |= bit;
                    y_count++;
                    break;
                case PauliLetter::Z:
                    z_mask |= bit;
                    break;
            }
        }
        // Y = i X Z, so Y|b> = i (-1)^b |1-b>.
        phase *= Phase::from_exponent(y_count).value();
    }

    Complex factor(std::size_t x) const {
        return (std::popcount(x & z_mask) & 1) ? -phase : phase;
    }
};

}  // namespace

StateVector::StateVector(std::size_t num_qubits, std::vector<Complex> amplitudes)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {
    if (num_qubits_ >= 8 * sizeof(std::size_t) || amplitudes_.size() != (std::size_t{1} << num_qubits_)) {
        throw Error(ErrorCode::DimensionMismatch, "state vector size is not 2^n");
    }
    if (std::abs(norm_squared() - 1.0) > 1e-10) {
        throw Error(ErrorCode::NotNormalized, "state vector is not normalized within 1e-10");
    }
}

double StateVector::norm_squared() const {
    double total = 0;
    for (const auto &a : amplitudes_) {
        total += std::norm(a);
    }
    return total;
}

StateVector from_product_state(const ProductState &state, std::size_t cap) {
    std::size_t n = state.num_qubits();
    if (cap > kMaxDenseCap) {
        throw Error(ErrorCode::TooManyQubits, "dense cap " + std::to_string(cap) + " exceeds the hard limit 20");
    }
    if (n > cap) {
        throw Error(
            ErrorCode::TooManyQubits,
            "dense simulation of " + std::to_string(n) + " qubits exceeds the cap of " + std::to_string(cap));
    }
    std::vector<Complex> amps{Complex{1, 0}};
    amps.reserve(std::size_t{1} << n);
    for (const auto &f : state.factors()) {
        std::vector<Complex> next(amps.size() * 2);
        for (std::size_t i = 0; i < amps.size(); i++) {
            next[2 * i] = amps[i] * f.amp0();
            next[2 * i + 1] = amps[i] * f.amp1();
        }
        amps = std::move(next);
    }
    return StateVector(n, std::move(amps));
}

StateVector apply_gate(StateVector v, const Gate &gate) {
    std::size_t n = v.num_qubits_;
    for (Line line : {gate.line_a(), gate.line_b()}) {
        if (line == 0 || line > n) {
            throw Error(ErrorCode::LineOutOfRange, "gate line " + std::to_string(line) + " outside state vector");
        }
    }
    Eigen::MatrixXcd u = gate_unitary(gate);
    auto &amps = v.amplitudes_;
    if (!gate.is_two_qubit()) {
        std::size_t mask = std::size_t{1} << bit_of(gate.line_a(), n);
        for (std::size_t x = 0; x < amps.size(); x++) {
            if (x & mask) {
                continue;
            }
            Complex a0 = amps[x];
            Complex a1 = amps[x | mask];
            amps[x] = u(0, 0) * a0 + u(0, 1) * a1;
            amps[x | mask] = u(1, 0) * a0 + u(1, 1) * a1;
        }
        return v;
    }
    std::size_t ma = std::size_t{1} << bit_of(gate.line_a(), n);
    std::size_t mb = std::size_t{1} << bit_of(gate.line_b(), n);
    for (std::size_t x = 0; x < amps.size(); x++) {
        if (x & (ma | mb)) {
            continue;
        }
        std::size_t idx[4] = {x, x | mb, x | ma, x | ma | mb};
        Complex in[4];
        for (int r = 0; r < 4; r++) {
            in[r] = amps[idx[r]];
        }
        for (int r = 0; r < 4; r++) {
            Complex acc = 0;
            for (int c = 0; c < 4; c++) {
                acc += u(r, c) * in[c];
            }
            amps[idx[r]] = acc;
        }
    }
    return v;
}

double z_expectation(const StateVector &v, Line k) {
    std::size_t n = v.num_qubits();
    if (k == 0 || k > n) {
        throw Error(ErrorCode::LineOutOfRange, "measured line " + std::to_string(k) + " outside state vector");
    }
    std::size_t mask = std::size_t{1} << bit_of(k, n);
    double d = 0;
    auto amps = v.amplitudes();
    for (std::size_t x = 0; x < amps.size(); x++) {
        d += (x & mask) ? -std::norm(amps[x]) : std::norm(amps[x]);
    }
    return d;
}

Complex dense_expectation(const StateVector &v, const PauliProduct &p) {
    if (p.letters.size() != v.num_qubits()) {
        throw Error(ErrorCode::LengthMismatch, "Pauli product length differs from state vector qubit count");
    }
    PauliAction action(p);
    auto amps = v.amplitudes();
    Complex total = 0;
    for (std::size_t x = 0; x < amps.size(); x++) {
        total += std::conj(amps[x ^ action.flip]) * action.factor(x) * amps[x];
    }
    return total;
}

MeasurementOutcome simulate_dense(const Circuit &circuit, const ProductState &state, Line k, std::size_t cap) {
    if (state.num_qubits() != circuit.num_qubits()) {
        throw Error(ErrorCode::LengthMismatch, "input state and circuit have different qubit counts");
    }
    StateVector v = from_product_state(state, cap);
    for (const auto &g : circuit.gates()) {
        v = apply_gate(std::move(v), g);
    }
    return MeasurementOutcome::from_z_expectation(z_expectation(v, k));
}

Eigen::MatrixXcd pauli_matrix(const PauliProduct &p) {
    std::size_t dim = std::size_t{1} << p.letters.size();
    PauliAction action(p);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    for (std::size_t x = 0; x < dim; x++) {
        m(x ^ action.flip, x) = action.factor(x);
    }
    return m;
}

Eigen::MatrixXcd embed_two_qubit(const Matrix4 &u, Line line_a, Line line_b, std::size_t num_qubits) {
    if (line_a == 0 || line_b == 0 || line_a > num_qubits || line_b > num_qubits || line_a == line_b) {
        throw Error(ErrorCode::LineOutOfRange, "cannot embed two-qubit matrix at the requested lines");
    }
    std::size_t dim = std::size_t{1} << num_qubits;
    std::size_t ma = std::size_t{1} << bit_of(line_a, num_qubits);
    std::size_t mb = std::size_t{1} << bit_of(line_b, num_qubits);
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
    for (std::size_t x = 0; x < dim; x++) {
        if (x & (ma | mb)) {
            continue;
        }
        std::size_t idx[4] = {x, x | mb, x | ma, x | ma | mb};
        for (int r = 0; r < 4; r++) {
            for (int c = 0; c < 4; c++) {
                out(idx[r], idx[c]) = u(r, c);
            }
        }
    }
    return out;
}

Decomposition conjugate_and_decompose(const Eigen::MatrixXcd &u, std::span<const PauliProduct> basis) {
    std::size_t m = basis.empty() ? 0 : basis.front().letters.size();
    for (const auto &b : basis) {
        if (b.letters.size() != m) {
            throw Error(ErrorCode::DimensionMismatch, "basis elements have different lengths");
        }
    }
    if (m > kMaxDecomposeQubits) {
        throw Error(ErrorCode::DimensionMismatch, "decomposition is limited to 10 qubits");
    }
    std::size_t dim = std::size_t{1} << m;
    if (u.rows() != static_cast<Eigen::Index>(dim) || u.cols() != static_cast<Eigen::Index>(dim)) {
        throw Error(ErrorCode::DimensionMismatch, "unitary dimension does not match basis length");
    }

    std::vector<PauliAction> actions;
    actions.reserve(basis.size());
    for (const auto &b : basis) {
        actions.emplace_back(b);
    }

    Decomposition out;
    out.coefficients = Eigen::MatrixXcd::Zero(basis.size(), basis.size());
    out.residuals.resize(basis.size());
    Eigen::MatrixXcd u_adj = u.adjoint();
    Eigen::MatrixXcd bu(dim, dim);
    for (std::size_t j = 0; j < basis.size(); j++) {
        // b_j U: row x ^ flip of the product receives factor(x) * row x of U.
        const auto &aj = actions[j];
        for (std::size_t x = 0; x < dim; x++) {
            bu.row(x ^ aj.flip) = aj.factor(x) * u.row(x);
        }
        Eigen::MatrixXcd conj = u_adj * bu;

        // tr(b_k^dagger M) = sum_x conj(factor_k(x)) M(x ^ flip_k, x).
        for (std::size_t k = 0; k < basis.size(); k++) {
            const auto &ak = actions[k];
            Complex t = 0;
            for (std::size_t x = 0; x < dim; x++) {
                t += std::conj(ak.factor(x)) * conj(x ^ ak.flip, x);
            }
            out.coefficients(j, k) = t / static_cast<double>(dim);
        }
        for (std::size_t k = 0; k < basis.size(); k++) {
            const auto &ak = actions[k];
            Complex c = out.coefficients(j, k);
            for (std::size_t x = 0; x < dim; x++) {
                conj(x ^ ak.flip, x) -= c * ak.factor(x);
            }
        }
        out.residuals[j] = std::sqrt(conj.squaredNorm() / static_cast<double>(dim));
        out.residual_norm = std::max(out.residual_norm, out.residuals[j]);
    }
    return out;
}

}  // namespace islands
