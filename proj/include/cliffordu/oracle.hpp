// Copyright 2026 The cliffordu authors
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

#pragma once

// Brute-force dense-matrix ground truth at desk scale. Everything in here
// works directly on gate lists and 2^n x 2^n matrices and shares no code
// with the tableau/decision path it is used to cross-check.

#include <Eigen/Dense>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

#include "cliffordu/circuit.hpp"
#include "cliffordu/decision.hpp"
#include "cliffordu/rng.hpp"

namespace cliffordu::oracle {

using Mat = Eigen::MatrixXcd;
using Mat2 = Eigen::Matrix2cd;
using cplx = std::complex<double>;

inline constexpr uint32_t kMaxQubits = 12;
inline constexpr uint32_t kMaxExpansionSlots = 6;
inline constexpr uint32_t kMaxExpansionQubits = 6;

namespace dense_detail {

// Qubit 0 is the most significant bit of a basis index.
inline uint64_t qubit_mask(uint32_t num_qubits, uint32_t q) {
    return uint64_t{1} << (num_qubits - 1 - q);
}

// M <- (U on qubit q) * M, combining row pairs in place.
inline void apply_single_qubit_left(Mat& m, uint32_t num_qubits, uint32_t q, const Mat2& u) {
    const uint64_t mask = qubit_mask(num_qubits, q);
    const uint64_t dim = uint64_t{1} << num_qubits;
    for (uint64_t r = 0; r < dim; r++) {
        if (r & mask) {
            continue;
        }
        Eigen::RowVectorXcd r0 = m.row(static_cast<Eigen::Index>(r));
        Eigen::RowVectorXcd r1 = m.row(static_cast<Eigen::Index>(r | mask));
        m.row(static_cast<Eigen::Index>(r)) = u(0, 0) * r0 + u(0, 1) * r1;
        m.row(static_cast<Eigen::Index>(r | mask)) = u(1, 0) * r0 + u(1, 1) * r1;
    }
}

inline Mat2 h_matrix() {
    Mat2 h;
    h << 1, 1, 1, -1;
    return h / std::sqrt(2.0);
}

inline Mat2 pauli_matrix_1q(Pauli p) {
    Mat2 m;
    switch (p) {
        case Pauli::I: m << 1, 0, 0, 1; break;
        case Pauli::X: m << 0, 1, 1, 0; break;
        case Pauli::Y: m << 0, cplx(0, -1), cplx(0, 1), 0; break;
        case Pauli::Z: m << 1, 0, 0, -1; break;
    }
    return m;
}

// M <- G * M for one Clifford gate.
inline void apply_clifford_left(Mat& m, uint32_t num_qubits, const CliffordGate& g) {
    const uint64_t dim = uint64_t{1} << num_qubits;
    switch (g.kind) {
        case GateKind::H:
            apply_single_qubit_left(m, num_qubits, g.q0, h_matrix());
            return;
        case GateKind::S: {
            Mat2 s;
            s << 1, 0, 0, cplx(0, 1);
            apply_single_qubit_left(m, num_qubits, g.q0, s);
            return;
        }
        case GateKind::S_DAGGER: {
            Mat2 s;
            s << 1, 0, 0, cplx(0, -1);
            apply_single_qubit_left(m, num_qubits, g.q0, s);
            return;
        }
        case GateKind::X:
        case GateKind::Y:
        case GateKind::Z: {
            Pauli p = g.kind == GateKind::X ? Pauli::X : (g.kind == GateKind::Y ? Pauli::Y : Pauli::Z);
            apply_single_qubit_left(m, num_qubits, g.q0, pauli_matrix_1q(p));
            return;
        }
        case GateKind::CNOT: {
            const uint64_t cm = qubit_mask(num_qubits, g.q0);
            const uint64_t tm = qubit_mask(num_qubits, g.q1);
            for (uint64_t r = 0; r < dim; r++) {
                if ((r & cm) && !(r & tm)) {
                    m.row(static_cast<Eigen::Index>(r)).swap(m.row(static_cast<Eigen::Index>(r | tm)));
                }
            }
            return;
        }
        case GateKind::CZ: {
            const uint64_t am = qubit_mask(num_qubits, g.q0);
            const uint64_t bm = qubit_mask(num_qubits, g.q1);
            for (uint64_t r = 0; r < dim; r++) {
                if ((r & am) && (r & bm)) {
                    m.row(static_cast<Eigen::Index>(r)) *= -1.0;
                }
            }
            return;
        }
        case GateKind::SWAP: {
            const uint64_t am = qubit_mask(num_qubits, g.q0);
            const uint64_t bm = qubit_mask(num_qubits, g.q1);
            for (uint64_t r = 0; r < dim; r++) {
                if ((r & am) && !(r & bm)) {
                    m.row(static_cast<Eigen::Index>(r)).swap(m.row(static_cast<Eigen::Index>((r ^ am) | bm)));
                }
            }
            return;
        }
    }
}

}  // namespace dense_detail

/// Dense matrix of a signed Hermitian Pauli string.
inline Mat dense_pauli(const PauliString& p) {
    const uint64_t dim = uint64_t{1} << p.num_qubits;
    uint64_t xmask = 0;
    uint64_t zmask = 0;
    uint32_t y_count = 0;
    for (uint32_t q = 0; q < p.num_qubits; q++) {
        uint64_t bit = dense_detail::qubit_mask(p.num_qubits, q);
        if (p.x.get(q)) xmask |= bit;
        if (p.z.get(q)) zmask |= bit;
        if (p.x.get(q) && p.z.get(q)) y_count++;
    }
    const cplx i_pow[4] = {1.0, cplx(0, 1), -1.0, cplx(0, -1)};
    Mat m = Mat::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (uint64_t s = 0; s < dim; s++) {
        cplx amp = i_pow[y_count & 3];
        if (p.sign) amp = -amp;
        if (std::popcount(s & zmask) & 1) amp = -amp;
        m(static_cast<Eigen::Index>(s ^ xmask), static_cast<Eigen::Index>(s)) = amp;
    }
    return m;
}

/// P^(k) * M without forming the Pauli's matrix (signed row permutation).
inline Mat apply_pauli_left(const PauliString& p, const Mat& m) {
    const uint64_t dim = uint64_t{1} << p.num_qubits;
    uint64_t xmask = 0;
    uint64_t zmask = 0;
    uint32_t y_count = 0;
    for (uint32_t q = 0; q < p.num_qubits; q++) {
        uint64_t bit = dense_detail::qubit_mask(p.num_qubits, q);
        if (p.x.get(q)) xmask |= bit;
        if (p.z.get(q)) zmask |= bit;
        if (p.x.get(q) && p.z.get(q)) y_count++;
    }
    const cplx i_pow[4] = {1.0, cplx(0, 1), -1.0, cplx(0, -1)};
    Mat out(m.rows(), m.cols());
    for (uint64_t s = 0; s < dim; s++) {
        cplx amp = i_pow[y_count & 3];
        if (p.sign) amp = -amp;
        if (std::popcount(s & zmask) & 1) amp = -amp;
        out.row(static_cast<Eigen::Index>(s ^ xmask)) = amp * m.row(static_cast<Eigen::Index>(s));
    }
    return out;
}

/// Dense matrix of a Clifford gate list (first gate acts first).
inline Mat dense_of_gates(uint32_t num_qubits, const std::vector<CliffordGate>& gates) {
    const uint64_t dim = uint64_t{1} << num_qubits;
    Mat m = Mat::Identity(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (const auto& g : gates) {
        dense_detail::apply_clifford_left(m, num_qubits, g);
    }
    return m;
}

/// A 2^n x 2^n unitary with a construction-time unitarity tripwire.
struct DenseUnitary {
    uint32_t num_qubits = 0;
    Mat matrix;

    DenseUnitary(uint32_t num_qubits, Mat m) : num_qubits(num_qubits), matrix(std::move(m)) {
        const Eigen::Index dim = Eigen::Index{1} << num_qubits;
        if (matrix.rows() != dim || matrix.cols() != dim) {
            throw std::invalid_argument("DenseUnitary: matrix has wrong dimensions");
        }
        if (num_qubits <= 6) {
            double err = (matrix.adjoint() * matrix - Mat::Identity(dim, dim)).norm();
            if (err >= 1e-10) {
                throw std::logic_error("DenseUnitary: not unitary (||U'U - I|| = " + std::to_string(err) + ")");
            }
        } else {
            // Spot-check columns; a full n^3 product gets slow past n=6.
            Rng rng(0x75f17d6b3588f843ULL ^ num_qubits);
            for (int k = 0; k < 8; k++) {
                Eigen::Index j = static_cast<Eigen::Index>(rng.below(static_cast<uint64_t>(dim)));
                Eigen::VectorXcd col = matrix.col(j);
                if (std::abs(col.squaredNorm() - 1.0) >= 1e-10) {
                    throw std::logic_error("DenseUnitary: column norm check failed");
                }
            }
        }
    }
};

/// Euler angles for one slot unitary, composed as Rz(gamma) Rx(beta) Rz(alpha)
/// (alpha applied first).
struct EulerZXZ {
    double alpha = 0;
    double beta = 0;
    double gamma = 0;
};

inline Mat2 rx_matrix(double theta) {
    Mat2 m;
    m << std::cos(theta / 2), cplx(0, -std::sin(theta / 2)), cplx(0, -std::sin(theta / 2)), std::cos(theta / 2);
    return m;
}

inline Mat2 ry_matrix(double theta) {
    Mat2 m;
    m << std::cos(theta / 2), -std::sin(theta / 2), std::sin(theta / 2), std::cos(theta / 2);
    return m;
}

inline Mat2 rz_matrix(double theta) {
    Mat2 m;
    m << std::exp(cplx(0, -theta / 2)), 0, 0, std::exp(cplx(0, theta / 2));
    return m;
}

inline Mat2 u1_matrix(double lambda) {
    Mat2 m;
    m << 1, 0, 0, std::exp(cplx(0, lambda));
    return m;
}

inline Mat2 u3_matrix(double theta, double phi, double lambda) {
    Mat2 m;
    m << std::cos(theta / 2), -std::exp(cplx(0, lambda)) * std::sin(theta / 2),
        std::exp(cplx(0, phi)) * std::sin(theta / 2), std::exp(cplx(0, phi + lambda)) * std::cos(theta / 2);
    return m;
}

/// 2x2 matrix of a parsed parametric gate; throws if any angle is symbolic.
inline Mat2 parametric_gate_matrix(const ParametricGate& g) {
    for (const auto& p : g.params) {
        if (!p.value.has_value()) {
            throw std::invalid_argument("gate '" + g.name + "' has symbolic angle '" + p.text + "'");
        }
    }
    if (g.name == "rx") return rx_matrix(*g.params[0].value);
    if (g.name == "ry") return ry_matrix(*g.params[0].value);
    if (g.name == "rz") return rz_matrix(*g.params[0].value);
    if (g.name == "u1") return u1_matrix(*g.params[0].value);
    if (g.name == "u3") return u3_matrix(*g.params[0].value, *g.params[1].value, *g.params[2].value);
    throw std::invalid_argument("gate '" + g.name + "' has no concrete matrix");
}

/// One 2x2 unitary per slot label, shared between the two circuits under
/// comparison.
struct SlotAssignment {
    std::map<uint32_t, Mat2> units;  // keyed by slot label (1-based)

    void set(uint32_t label, const Mat2& u) {
        if ((u.adjoint() * u - Mat2::Identity()).norm() >= 1e-12) {
            throw std::invalid_argument("SlotAssignment: matrix for slot " + std::to_string(label) +
                                        " is not unitary");
        }
        units[label] = u;
    }

    const Mat2& at(uint32_t label) const {
        auto it = units.find(label);
        if (it == units.end()) {
            throw std::invalid_argument("SlotAssignment: no unitary for slot " + std::to_string(label));
        }
        return it->second;
    }

    static SlotAssignment from_euler(uint32_t label_count, const std::vector<EulerZXZ>& angles) {
        SlotAssignment a;
        for (uint32_t i = 0; i < label_count; i++) {
            a.set(i + 1, rz_matrix(angles[i].gamma) * rx_matrix(angles[i].beta) * rz_matrix(angles[i].alpha));
        }
        return a;
    }

    static SlotAssignment paulis(const std::vector<Pauli>& ps) {
        SlotAssignment a;
        for (uint32_t i = 0; i < ps.size(); i++) {
            a.set(i + 1, dense_detail::pauli_matrix_1q(ps[i]));
        }
        return a;
    }

    /// Random Z-X-Z rotations for labels 1..label_count, angles uniform in
    /// [0, 2pi).
    static SlotAssignment random(uint32_t label_count, uint64_t seed) {
        Rng rng = Rng::stream(seed, "oracle-angles");
        std::vector<EulerZXZ> angles(label_count);
        for (auto& e : angles) {
            e.alpha = rng.uniform01() * 2 * M_PI;
            e.beta = rng.uniform01() * 2 * M_PI;
            e.gamma = rng.uniform01() * 2 * M_PI;
        }
        return from_euler(label_count, angles);
    }

    /// Reads the concrete angles a fixed-instance circuit carries.
    static SlotAssignment from_circuit_angles(const CliffordUCircuit& c) {
        SlotAssignment a;
        for (const auto& slot : c.slots) {
            Mat2 u = Mat2::Identity();
            for (const auto& g : slot.gates) {
                u = parametric_gate_matrix(g) * u;
            }
            a.set(slot.label, u);
        }
        return a;
    }

    /// Assignment for the sigma-reordered partner circuit: position j gets
    /// the unitary of slot sigma(j).
    SlotAssignment permuted(const SlotPermutation& sigma) const {
        SlotAssignment out;
        for (uint32_t j = 0; j < sigma.size(); j++) {
            out.set(j + 1, at(sigma.sigma[j] + 1));
        }
        return out;
    }
};

/// Exact dense product of the circuit with all slots instantiated.
inline DenseUnitary evaluate(const CliffordUCircuit& c, const SlotAssignment& a) {
    if (c.num_qubits > kMaxQubits) {
        throw std::runtime_error("oracle: " + std::to_string(c.num_qubits) + " qubits exceeds the dense limit of " +
                                 std::to_string(kMaxQubits));
    }
    const uint64_t dim = uint64_t{1} << c.num_qubits;
    Mat m = Mat::Identity(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (const auto& g : c.layers[0].gates) {
        dense_detail::apply_clifford_left(m, c.num_qubits, g);
    }
    for (size_t i = 0; i < c.slots.size(); i++) {
        dense_detail::apply_single_qubit_left(m, c.num_qubits, c.slots[i].qubit, a.at(c.slots[i].label));
        for (const auto& g : c.layers[i + 1].gates) {
            dense_detail::apply_clifford_left(m, c.num_qubits, g);
        }
    }
    return DenseUnitary(c.num_qubits, std::move(m));
}

/// True iff ||u - e^{i phi} v|| < tol with phi chosen to align v's
/// largest-magnitude entry with u's corresponding entry.
inline bool equal_up_to_global_phase(const DenseUnitary& u, const DenseUnitary& v, double tol) {
    if (u.num_qubits != v.num_qubits) {
        throw std::invalid_argument("equal_up_to_global_phase: dimension mismatch");
    }
    Eigen::Index r = 0, cidx = 0;
    v.matrix.cwiseAbs().maxCoeff(&r, &cidx);
    cplx pivot = v.matrix(r, cidx);
    if (std::abs(pivot) == 0.0) {
        return false;
    }
    cplx lambda = u.matrix(r, cidx) / pivot;
    double mag = std::abs(lambda);
    if (mag == 0.0) {
        return false;
    }
    lambda /= mag;
    return (u.matrix - lambda * v.matrix).norm() < tol;
}

/// Phase-aligned Frobenius distance (same alignment rule as above). When
/// u is zero at v's pivot entry no phase can align them; the unaligned
/// distance is returned in that case.
inline double phase_aligned_distance(const DenseUnitary& u, const DenseUnitary& v) {
    if (u.num_qubits != v.num_qubits) {
        throw std::invalid_argument("phase_aligned_distance: dimension mismatch");
    }
    Eigen::Index r = 0, cidx = 0;
    v.matrix.cwiseAbs().maxCoeff(&r, &cidx);
    cplx lambda = u.matrix(r, cidx) / v.matrix(r, cidx);
    double mag = std::abs(lambda);
    if (mag == 0.0) {
        return (u.matrix - v.matrix).norm();
    }
    lambda /= mag;
    return (u.matrix - lambda * v.matrix).norm();
}

/// Evaluates the circuit by expanding every slot in the Pauli basis:
/// sum over all 4^m tuples of (product of per-slot coefficients) times the
/// Pauli-substituted circuit, sharing partial products across the
/// recursion. Returns the Frobenius distance to the direct evaluation.
inline double pauli_expansion_check(const CliffordUCircuit& c, const SlotAssignment& a) {
    const uint32_t m = c.num_slots();
    if (m > kMaxExpansionSlots) {
        throw std::runtime_error("pauli_expansion_check: " + std::to_string(m) + " slots exceeds the 4^m guard (" +
                                 std::to_string(kMaxExpansionSlots) + ")");
    }
    if (c.num_qubits > kMaxExpansionQubits) {
        throw std::runtime_error("pauli_expansion_check: " + std::to_string(c.num_qubits) +
                                 " qubits exceeds the guard (" + std::to_string(kMaxExpansionQubits) + ")");
    }
    const uint64_t dim = uint64_t{1} << c.num_qubits;

    std::vector<Mat> layer_mats;
    layer_mats.reserve(c.layers.size());
    for (const auto& layer : c.layers) {
        layer_mats.push_back(dense_of_gates(c.num_qubits, layer.gates));
    }

    // Coefficients of U = alpha I + beta X + gamma Y + delta Z per slot.
    const Pauli basis[4] = {Pauli::I, Pauli::X, Pauli::Y, Pauli::Z};
    std::vector<std::array<cplx, 4>> coeff(m);
    for (uint32_t i = 0; i < m; i++) {
        Mat2 u = a.at(c.slots[i].label);
        for (int k = 0; k < 4; k++) {
            coeff[i][k] = (dense_detail::pauli_matrix_1q(basis[k]) * u).trace() / 2.0;
        }
    }

    Mat acc = Mat::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    // Depth-first over slot tuples; `prefix` is C_i P_i ... C_1 P_1 C_0.
    auto rec = [&](auto&& self, uint32_t i, const Mat& prefix, cplx eps) -> void {
        if (i == m) {
            acc += eps * prefix;
            return;
        }
        for (int k = 0; k < 4; k++) {
            PauliString p = single_qubit_pauli(c.num_qubits, c.slots[i].qubit, basis[k]);
            Mat next = layer_mats[i + 1] * apply_pauli_left(p, prefix);
            self(self, i + 1, next, eps * coeff[i][k]);
        }
    };
    rec(rec, 0, layer_mats[0], cplx(1.0, 0.0));

    return (acc - evaluate(c, a).matrix).norm();
}

}  // namespace cliffordu::oracle
