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

#include "islands/circuit.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "islands/errors.h"

namespace islands {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::NonFinite:
            return "NonFinite";
        case ErrorCode::NotUnitary:
            return "NotUnitary";
        case ErrorCode::DeterminantMismatch:
            return "DeterminantMismatch";
        case ErrorCode::NotNormalized:
            return "NotNormalized";
        case ErrorCode::LineOutOfRange:
            return "LineOutOfRange";
        case ErrorCode::LengthMismatch:
            return "LengthMismatch";
        case ErrorCode::IndexOutOfRange:
            return "IndexOutOfRange";
        case ErrorCode::NotCliffordGate:
            return "NotCliffordGate";
        case ErrorCode::NotCliffordCircuit:
            return "NotCliffordCircuit";
        case ErrorCode::NotNNMatchgateCircuit:
            return "NotNNMatchgateCircuit";
        case ErrorCode::SpanClosureViolation:
            return "SpanClosureViolation";
        case ErrorCode::TooManyQubits:
            return "TooManyQubits";
        case ErrorCode::DimensionMismatch:
            return "DimensionMismatch";
        case ErrorCode::SyntaxError:
            return "SyntaxError";
        case ErrorCode::SemanticError:
            return "SemanticError";
    }
    return "Unknown";
}

bool is_finite(const Complex &z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

bool is_unitary(const Eigen::MatrixXcd &m, double tol) {
    if (m.rows() != m.cols()) {
        return false;
    }
    Eigen::MatrixXcd deviation = m.adjoint() * m - Eigen::MatrixXcd::Identity(m.rows(), m.cols());
    return deviation.cwiseAbs().maxCoeff() <= tol;
}

namespace {

template <typename M>
void require_finite(const M &m, const char *what) {
    for (Eigen::Index r = 0; r < m.rows(); r++) {
        for (Eigen::Index c = 0; c < m.cols(); c++) {
            if (!is_finite(m(r, c))) {
                throw Error(ErrorCode::NonFinite, std::string(what) + " has a non-finite entry");
            }
        }
    }
}

template <typename M>
void require_unitary(const M &m, const char *what) {
    require_finite(m, what);
    if (!is_unitary(m)) {
        throw Error(ErrorCode::NotUnitary, std::string(what) + " is not unitary within 1e-9");
    }
}

void require_line(Line line) {
    if (line == 0) {
        throw Error(ErrorCode::LineOutOfRange, "line indices are 1-based; got 0");
    }
}

void require_distinct(Line a, Line b) {
    require_line(a);
    require_line(b);
    if (a == b) {
        throw Error(ErrorCode::LineOutOfRange, "two-qubit gate needs distinct lines; got " + std::to_string(a) + " twice");
    }
}

}  // namespace

SingleQubitState::SingleQubitState(Complex amp0, Complex amp1) : amp0_(amp0), amp1_(amp1) {
    if (!is_finite(amp0) || !is_finite(amp1)) {
        throw Error(ErrorCode::NonFinite, "single-qubit state has a non-finite amplitude");
    }
    double norm2 = std::norm(amp0) + std::norm(amp1);
    if (std::abs(norm2 - 1.0) > kNormTolerance) {
        throw Error(ErrorCode::NotNormalized, "single-qubit state has squared norm " + std::to_string(norm2));
    }
}

SingleQubitState SingleQubitState::zero() {
    return {1.0, 0.0};
}

SingleQubitState SingleQubitState::one() {
    return {0.0, 1.0};
}

SingleQubitState SingleQubitState::plus() {
    return {M_SQRT1_2, M_SQRT1_2};
}

ProductState::ProductState(std::vector<SingleQubitState> factors) : factors_(std::move(factors)) {
    if (factors_.empty()) {
        throw Error(ErrorCode::LengthMismatch, "product state needs at least one factor");
    }
}

ProductState ProductState::all_zero(std::size_t num_qubits) {
    return ProductState(std::vector<SingleQubitState>(num_qubits, SingleQubitState::zero()));
}

const SingleQubitState &ProductState::factor(Line line) const {
    if (line == 0 || line > factors_.size()) {
        throw Error(ErrorCode::LineOutOfRange, "line " + std::to_string(line) + " outside product state");
    }
    return factors_[line - 1];
}

Gate::Gate(GateKind kind, Line line_a, Line line_b, std::shared_ptr<const Payload> payload)
    : kind_(kind), line_a_(line_a), line_b_(line_b), payload_(std::move(payload)) {
}

Gate Gate::h(Line line) {
    require_line(line);
    return Gate(GateKind::H, line, line, nullptr);
}

Gate Gate::p(Line line) {
    require_line(line);
    return Gate(GateKind::P, line, line, nullptr);
}

Gate Gate::cz(Line line_a, Line line_b) {
    require_distinct(line_a, line_b);
    return Gate(GateKind::CZ, line_a, line_b, nullptr);
}

Gate Gate::generic(Line line_a, Line line_b, const Matrix4 &unitary) {
    require_distinct(line_a, line_b);
    require_unitary(unitary, "generic two-qubit matrix");
    auto payload = std::make_shared<Payload>();
    payload->a.setZero();
    payload->b.setZero();
    payload->u = unitary;
    return Gate(GateKind::Generic2Q, line_a, line_b, std::move(payload));
}

const Matrix2 &Gate::block_a() const {
    if (kind_ != GateKind::Matchgate) {
        throw std::logic_error("block_a() on a gate that is not a Matchgate");
    }
    return payload_->a;
}

const Matrix2 &Gate::block_b() const {
    if (kind_ != GateKind::Matchgate) {
        throw std::logic_error("block_b() on a gate that is not a Matchgate");
    }
    return payload_->b;
}

const Matrix4 &Gate::matrix4() const {
    if (payload_ == nullptr) {
        throw std::logic_error("matrix4() on a gate without a matrix payload");
    }
    return payload_->u;
}

bool Gate::operator==(const Gate &other) const {
    if (kind_ != other.kind_ || line_a_ != other.line_a_ || line_b_ != other.line_b_) {
        return false;
    }
    if (payload_ == other.payload_) {
        return true;
    }
    if (payload_ == nullptr || other.payload_ == nullptr) {
        return false;
    }
    return payload_->a == other.payload_->a && payload_->b == other.payload_->b && payload_->u == other.payload_->u;
}

Matrix4 matchgate_matrix(const Matrix2 &a, const Matrix2 &b) {
    Matrix4 g = Matrix4::Zero();
    g(0, 0) = a(0, 0);
    g(0, 3) = a(0, 1);
    g(3, 0) = a(1, 0);
    g(3, 3) = a(1, 1);
    g(1, 1) = b(0, 0);
    g(1, 2) = b(0, 1);
    g(2, 1) = b(1, 0);
    g(2, 2) = b(1, 1);
    return g;
}

Gate make_matchgate(const Matrix2 &a, const Matrix2 &b, Line line_a, Line line_b) {
    require_distinct(line_a, line_b);
    require_unitary(a, "matchgate block A");
    require_unitary(b, "matchgate block B");
    Complex det_a = a.determinant();
    Complex det_b = b.determinant();
    if (std::abs(det_a - det_b) > kUnitaryTolerance) {
        throw Error(ErrorCode::DeterminantMismatch, "matchgate blocks have different determinants");
    }
    auto payload = std::make_shared<Gate::Payload>();
    payload->a = a;
    payload->b = b;
    payload->u = matchgate_matrix(a, b);
    return Gate(GateKind::Matchgate, line_a, line_b, std::move(payload));
}

Eigen::MatrixXcd gate_unitary(const Gate &gate) {
    const Complex i(0, 1);
    switch (gate.kind()) {
        case GateKind::H: {
            Eigen::MatrixXcd m(2, 2);
            m << M_SQRT1_2, M_SQRT1_2, M_SQRT1_2, -M_SQRT1_2;
            return m;
        }
        case GateKind::P: {
            Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(2, 2);
            m(0, 0) = 1;
            m(1, 1) = i;
            return m;
        }
        case GateKind::CZ: {
            Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(4, 4);
            m(3, 3) = -1;
            return m;
        }
        case GateKind::Matchgate:
        case GateKind::Generic2Q:
            return gate.matrix4();
    }
    throw std::logic_error("unknown gate kind");
}

Circuit::Circuit(std::size_t num_qubits, std::vector<Gate> gates) : num_qubits_(num_qubits), gates_(std::move(gates)) {
    if (num_qubits_ == 0) {
        throw Error(ErrorCode::LineOutOfRange, "a circuit needs at least one qubit");
    }
    for (const auto &g : gates_) {
        check_lines(g);
    }
}

void Circuit::append(Gate gate) {
    check_lines(gate);
    gates_.push_back(std::move(gate));
}

void Circuit::check_lines(const Gate &gate) const {
    for (Line line : {gate.line_a(), gate.line_b()}) {
        if (line == 0 || line > num_qubits_) {
            throw Error(
                ErrorCode::LineOutOfRange,
                "gate line " + std::to_string(line) + " outside [1, " + std::to_string(num_qubits_) + "]");
        }
    }
}

MeasurementOutcome MeasurementOutcome::from_z_expectation(double d) {
    double p0 = std::clamp((1.0 + d) / 2.0, 0.0, 1.0);
    double p1 = std::clamp((1.0 - d) / 2.0, 0.0, 1.0);
    return {p0, p1};
}

}  // namespace islands
