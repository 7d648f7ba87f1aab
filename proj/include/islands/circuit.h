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

#ifndef ISLANDS_CIRCUIT_H
#define ISLANDS_CIRCUIT_H

#include <Eigen/Dense>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace islands {

using Complex = std::complex<double>;
using Matrix2 = Eigen::Matrix2cd;
using Matrix4 = Eigen::Matrix4cd;

/// Qubit line index. Lines are 1-based; line 1 is the most significant tensor factor everywhere.
using Line = std::uint32_t;

inline constexpr double kUnitaryTolerance = 1e-9;
inline constexpr double kNormTolerance = 1e-12;

bool is_finite(const Complex &z);
bool is_unitary(const Eigen::MatrixXcd &m, double tol = kUnitaryTolerance);

/// A normalized single-qubit pure state amp0|0> + amp1|1>.
class SingleQubitState {
   public:
    /// Throws NonFinite or NotNormalized (tolerance 1e-12 on the squared norm).
    SingleQubitState(Complex amp0, Complex amp1);

    static SingleQubitState zero();
    static SingleQubitState one();
    static SingleQubitState plus();

    Complex amp0() const {
        return amp0_;
    }
    Complex amp1() const {
        return amp1_;
    }

    bool operator==(const SingleQubitState &other) const = default;

   private:
    Complex amp0_;
    Complex amp1_;
};

class ProductState {
   public:
    explicit ProductState(std::vector<SingleQubitState> factors);

    static ProductState all_zero(std::size_t num_qubits);

    std::size_t num_qubits() const {
        return factors_.size();
    }
    /// 1-based.
    const SingleQubitState &factor(Line line) const;
    std::span<const SingleQubitState> factors() const {
        return factors_;
    }

    bool operator==(const ProductState &other) const = default;

   private:
    std::vector<SingleQubitState> factors_;
};

enum class GateKind : std::uint8_t { H, P, CZ, Matchgate, Generic2Q };

/// An immutable gate. Matrix payloads are shared between copies.
class Gate {
   public:
    static Gate h(Line line);
    static Gate p(Line line);
    static Gate cz(Line line_a, Line line_b);
    /// Oracle-only two-qubit gate. Throws NonFinite or NotUnitary.
    static Gate generic(Line line_a, Line line_b, const Matrix4 &unitary);

    GateKind kind() const {
        return kind_;
    }
    bool is_two_qubit() const {
        return kind_ != GateKind::H && kind_ != GateKind::P;
    }
    Line line_a() const {
        return line_a_;
    }
    /// Equal to line_a() for single-qubit gates.
    Line line_b() const {
        return line_b_;
    }

    /// Even-parity block of a Matchgate.
    const Matrix2 &block_a() const;
    /// Odd-parity block of a Matchgate.
    const Matrix2 &block_b() const;
    /// 4x4 matrix of a Matchgate or Generic2Q gate.
    const Matrix4 &matrix4() const;

    bool operator==(const Gate &other) const;

   private:
    struct Payload {
        Matrix2 a;
        Matrix2 b;
        Matrix4 u;
    };

    Gate(GateKind kind, Line line_a, Line line_b, std::shared_ptr<const Payload> payload);

    friend Gate make_matchgate(const Matrix2 &a, const Matrix2 &b, Line line_a, Line line_b);

    GateKind kind_;
    Line line_a_;
    Line line_b_;
    std::shared_ptr<const Payload> payload_;
};

/// Assembles G(A,B): A acts on span{|00>,|11>}, B on span{|01>,|10>}.
Matrix4 matchgate_matrix(const Matrix2 &a, const Matrix2 &b);

/// Throws NotUnitary, NonFinite, or DeterminantMismatch when |det A - det B| > 1e-9.
Gate make_matchgate(const Matrix2 &a, const Matrix2 &b, Line line_a, Line line_b);

/// Computational-basis matrix of the gate, 2x2 or 4x4, with line_a the more significant factor.
Eigen::MatrixXcd gate_unitary(const Gate &gate);

class Circuit {
   public:
    /// Throws LineOutOfRange if any gate touches a line outside [1, num_qubits].
    explicit Circuit(std::size_t num_qubits, std::vector<Gate> gates = {});

    void append(Gate gate);

    std::size_t num_qubits() const {
        return num_qubits_;
    }
    const std::vector<Gate> &gates() const {
        return gates_;
    }

    bool operator==(const Circuit &other) const = default;

   private:
    void check_lines(const Gate &gate) const;

    std::size_t num_qubits_;
    std::vector<Gate> gates_;
};

/// Outcome distribution of a Z measurement on a single line.
struct MeasurementOutcome {
    double p0;
    double p1;

    /// Builds ((1+d)/2, (1-d)/2) from d = p0 - p1, clamped to [0, 1].
    static MeasurementOutcome from_z_expectation(double d);
};

}  // namespace islands

#endif
