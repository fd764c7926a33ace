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

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "cliffordu/bitvec.hpp"

namespace cliffordu {

enum class Pauli : uint8_t { I, X, Y, Z };

inline char pauli_to_char(Pauli p) {
    switch (p) {
        case Pauli::I: return 'I';
        case Pauli::X: return 'X';
        case Pauli::Y: return 'Y';
        case Pauli::Z: return 'Z';
    }
    throw std::logic_error("unreachable");
}

/// Signed Hermitian n-qubit Pauli operator in binary symplectic form.
///
/// The represented operator is (-1)^sign * P_1 x ... x P_n, where qubit q
/// (0-based internally; qubit 1 of user-facing text is index 0) carries
/// the letter encoded by (z_q, x_q): I=(0,0), X=(0,1), Y=(1,1), Z=(1,0).
/// Imaginary phases are never stored here; products that pick up +-i go
/// through PhasedPauli.
struct PauliString {
    uint32_t num_qubits = 0;
    BitVec z;
    BitVec x;
    bool sign = false;

    PauliString() = default;
    explicit PauliString(uint32_t n) : num_qubits(n), z(n), x(n) {}

    Pauli pauli_at(uint32_t q) const {
        bool zq = z.get(q);
        bool xq = x.get(q);
        if (zq) {
            return xq ? Pauli::Y : Pauli::Z;
        }
        return xq ? Pauli::X : Pauli::I;
    }

    void set_pauli(uint32_t q, Pauli p) {
        z.set(q, p == Pauli::Z || p == Pauli::Y);
        x.set(q, p == Pauli::X || p == Pauli::Y);
    }

    bool is_identity_body() const {
        return !z.any() && !x.any();
    }

    static PauliString from_paulis(const std::vector<Pauli>& ps, bool sign = false) {
        PauliString out(static_cast<uint32_t>(ps.size()));
        for (uint32_t q = 0; q < out.num_qubits; q++) {
            out.set_pauli(q, ps[q]);
        }
        out.sign = sign;
        return out;
    }

    std::vector<Pauli> to_paulis() const {
        std::vector<Pauli> out(num_qubits);
        for (uint32_t q = 0; q < num_qubits; q++) {
            out[q] = pauli_at(q);
        }
        return out;
    }

    /// Renders e.g. "-XIZY" (qubit 1 leftmost, explicit sign prefix).
    std::string str() const {
        std::string out;
        out.reserve(num_qubits + 1);
        out.push_back(sign ? '-' : '+');
        for (uint32_t q = 0; q < num_qubits; q++) {
            out.push_back(pauli_to_char(pauli_at(q)));
        }
        return out;
    }

    /// Inverse of str(); also accepts an unsigned body like "XZ".
    static PauliString from_str(const std::string& s) {
        size_t start = 0;
        bool sign = false;
        if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
            sign = s[0] == '-';
            start = 1;
        }
        PauliString out(static_cast<uint32_t>(s.size() - start));
        out.sign = sign;
        for (uint32_t q = 0; q < out.num_qubits; q++) {
            switch (s[start + q]) {
                case 'I': break;
                case 'X': out.x.set(q, true); break;
                case 'Y': out.x.set(q, true); out.z.set(q, true); break;
                case 'Z': out.z.set(q, true); break;
                default:
                    throw std::invalid_argument("invalid Pauli letter in \"" + s + "\"");
            }
        }
        return out;
    }

    bool operator==(const PauliString& other) const = default;
};

/// P^(q): the given letter on one qubit, identity elsewhere, sign +1.
/// `q` is 0-based.
inline PauliString single_qubit_pauli(uint32_t num_qubits, uint32_t q, Pauli p) {
    if (q >= num_qubits) {
        throw std::out_of_range(
            "qubit " + std::to_string(q + 1) + " out of range for " + std::to_string(num_qubits) + " qubits");
    }
    PauliString out(num_qubits);
    out.set_pauli(q, p);
    return out;
}

/// Symplectic inner product over F2: 0 iff the operators commute.
/// Signs are ignored.
inline bool symplectic_inner_product(const PauliString& a, const PauliString& b) {
    if (a.num_qubits != b.num_qubits) {
        throw std::invalid_argument("symplectic_inner_product: mismatched qubit counts");
    }
    uint64_t acc = 0;
    for (size_t w = 0; w < a.z.words.size(); w++) {
        acc ^= (a.z.words[w] & b.x.words[w]) ^ (a.x.words[w] & b.z.words[w]);
    }
    return std::popcount(acc) & 1;
}

/// Pauli operator with an i^quarter prefactor, quarter mod 4. The sign of
/// the source PauliString is folded into `quarter`, so the operator is
/// exactly i^quarter * (body letters). Intermediate products of Hermitian
/// Paulis live here; decision matrices never do.
struct PhasedPauli {
    uint32_t num_qubits = 0;
    BitVec z;
    BitVec x;
    uint8_t quarter = 0;

    PhasedPauli() = default;
    explicit PhasedPauli(uint32_t n) : num_qubits(n), z(n), x(n) {}

    static PhasedPauli from_hermitian(const PauliString& p) {
        PhasedPauli out(p.num_qubits);
        out.z = p.z;
        out.x = p.x;
        out.quarter = p.sign ? 2 : 0;
        return out;
    }

    bool is_hermitian() const {
        return (quarter & 1) == 0;
    }

    PauliString to_hermitian() const {
        if (!is_hermitian()) {
            throw std::logic_error("PhasedPauli with odd quarter phase is not Hermitian");
        }
        PauliString out(num_qubits);
        out.z = z;
        out.x = x;
        out.sign = quarter == 2;
        return out;
    }

    bool operator==(const PhasedPauli& other) const = default;
};

namespace detail {

// Exponent of i in the product of the letter bodies of a and b, i.e.
// body(a)*body(b) = i^e * body(a xor b). Word-parallel: cyclically ordered
// letter pairs (XY, YZ, ZX) contribute +1, the reversed pairs -1.
inline uint8_t body_product_i_exponent(const PhasedPauli& a, const PhasedPauli& b) {
    uint64_t plus = 0;
    uint64_t minus = 0;
    for (size_t w = 0; w < a.z.words.size(); w++) {
        uint64_t za = a.z.words[w], xa = a.x.words[w];
        uint64_t zb = b.z.words[w], xb = b.x.words[w];
        uint64_t cyc = (~za & xa & zb & xb) | (za & xa & zb & ~xb) | (za & ~xa & ~zb & xb);
        uint64_t anti = ((za & xb) ^ (xa & zb)) & ~cyc;
        plus += std::popcount(cyc);
        minus += std::popcount(anti);
    }
    return static_cast<uint8_t>((plus + 3 * minus) & 3);
}

}  // namespace detail

/// Exact operator product with the i-power tracked mod 4.
inline PhasedPauli multiply(const PhasedPauli& a, const PhasedPauli& b) {
    if (a.num_qubits != b.num_qubits) {
        throw std::invalid_argument("multiply: mismatched qubit counts");
    }
    PhasedPauli out(a.num_qubits);
    out.quarter = static_cast<uint8_t>((a.quarter + b.quarter + detail::body_product_i_exponent(a, b)) & 3);
    out.z = a.z;
    out.z ^= b.z;
    out.x = a.x;
    out.x ^= b.x;
    return out;
}

inline PhasedPauli multiply(const PauliString& a, const PauliString& b) {
    return multiply(PhasedPauli::from_hermitian(a), PhasedPauli::from_hermitian(b));
}

/// i * vx * vz, which is Hermitian whenever vx, vz are the conjugated images
/// of X and Z on a common qubit. A non-Hermitian result means the tableau
/// that produced the inputs is corrupted, and is reported as a logic error.
inline PauliString derive_y_column(const PauliString& vx, const PauliString& vz) {
    PhasedPauli prod = multiply(vx, vz);
    prod.quarter = static_cast<uint8_t>((prod.quarter + 1) & 3);
    if (!prod.is_hermitian()) {
        throw std::logic_error("derive_y_column: i*vx*vz is not Hermitian (corrupted tableau)");
    }
    return prod.to_hermitian();
}

}  // namespace cliffordu
