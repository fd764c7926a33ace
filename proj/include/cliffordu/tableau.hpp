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

#include "cliffordu/pauli.hpp"

namespace cliffordu {

enum class GateKind : uint8_t { H, S, S_DAGGER, X, Y, Z, CNOT, CZ, SWAP };

inline const char* gate_kind_name(GateKind k) {
    switch (k) {
        case GateKind::H: return "h";
        case GateKind::S: return "s";
        case GateKind::S_DAGGER: return "sdg";
        case GateKind::X: return "x";
        case GateKind::Y: return "y";
        case GateKind::Z: return "z";
        case GateKind::CNOT: return "cx";
        case GateKind::CZ: return "cz";
        case GateKind::SWAP: return "swap";
    }
    throw std::logic_error("unreachable");
}

inline bool gate_is_two_qubit(GateKind k) {
    return k == GateKind::CNOT || k == GateKind::CZ || k == GateKind::SWAP;
}

/// One Clifford gate. q0 is the control for CNOT; q1 is unused for
/// single-qubit kinds. Qubit indices are 0-based.
struct CliffordGate {
    GateKind kind;
    uint32_t q0 = 0;
    uint32_t q1 = 0;

    CliffordGate(GateKind kind, uint32_t q0) : kind(kind), q0(q0) {}
    CliffordGate(GateKind kind, uint32_t q0, uint32_t q1) : kind(kind), q0(q0), q1(q1) {}

    void validate(uint32_t num_qubits) const {
        bool two = gate_is_two_qubit(kind);
        if (q0 >= num_qubits || (two && q1 >= num_qubits)) {
            throw std::out_of_range(
                std::string(gate_kind_name(kind)) + ": qubit out of range for " + std::to_string(num_qubits) +
                " qubits");
        }
        if (two && q0 == q1) {
            throw std::invalid_argument(std::string(gate_kind_name(kind)) + ": targets must be distinct");
        }
    }

    bool operator==(const CliffordGate& other) const = default;
};

/// Expands a gate into the primitive set {H, S, CNOT} and feeds each
/// primitive to `fn(kind, a, b)` in conjugation order (innermost first).
/// Every consumer of gate semantics goes through here, so the three
/// primitive update rules are the single source of truth.
template <typename Fn>
inline void for_each_primitive(const CliffordGate& g, Fn&& fn) {
    const uint32_t a = g.q0;
    const uint32_t b = g.q1;
    switch (g.kind) {
        case GateKind::H:
            fn(GateKind::H, a, a);
            break;
        case GateKind::S:
            fn(GateKind::S, a, a);
            break;
        case GateKind::S_DAGGER:
            fn(GateKind::S, a, a);
            fn(GateKind::S, a, a);
            fn(GateKind::S, a, a);
            break;
        case GateKind::Z:
            fn(GateKind::S, a, a);
            fn(GateKind::S, a, a);
            break;
        case GateKind::X:  // H Z H
            fn(GateKind::H, a, a);
            fn(GateKind::S, a, a);
            fn(GateKind::S, a, a);
            fn(GateKind::H, a, a);
            break;
        case GateKind::Y:  // Z then X; the global phase of Y = iXZ cancels in conjugation
            fn(GateKind::S, a, a);
            fn(GateKind::S, a, a);
            fn(GateKind::H, a, a);
            fn(GateKind::S, a, a);
            fn(GateKind::S, a, a);
            fn(GateKind::H, a, a);
            break;
        case GateKind::CNOT:
            fn(GateKind::CNOT, a, b);
            break;
        case GateKind::CZ:  // H on target sandwiching a CNOT
            fn(GateKind::H, b, b);
            fn(GateKind::CNOT, a, b);
            fn(GateKind::H, b, b);
            break;
        case GateKind::SWAP:
            fn(GateKind::CNOT, a, b);
            fn(GateKind::CNOT, b, a);
            fn(GateKind::CNOT, a, b);
            break;
    }
}

// Primitive conjugation rules, applied in place to one Pauli row.
// All bit reads use pre-update values.

inline void row_apply_h(PauliString& p, uint32_t q) {
    bool zq = p.z.get(q);
    bool xq = p.x.get(q);
    p.sign ^= zq && xq;
    p.z.set(q, xq);
    p.x.set(q, zq);
}

inline void row_apply_s(PauliString& p, uint32_t q) {
    bool zq = p.z.get(q);
    bool xq = p.x.get(q);
    p.sign ^= zq && xq;
    p.z.set(q, zq ^ xq);
}

inline void row_apply_cnot(PauliString& p, uint32_t c, uint32_t t) {
    bool xc = p.x.get(c);
    bool zc = p.z.get(c);
    bool xt = p.x.get(t);
    bool zt = p.z.get(t);
    p.sign ^= xc && zt && (xt == zc);
    p.x.set(t, xt ^ xc);
    p.z.set(c, zc ^ zt);
}

/// Conjugates a single Pauli by one gate: p -> g p g^dagger.
inline void row_apply_gate(PauliString& p, const CliffordGate& g) {
    for_each_primitive(g, [&](GateKind k, uint32_t a, uint32_t b) {
        switch (k) {
            case GateKind::H: row_apply_h(p, a); break;
            case GateKind::S: row_apply_s(p, a); break;
            default: row_apply_cnot(p, a, b); break;
        }
    });
}

/// An n-qubit Clifford element, represented by its conjugation action on
/// the 2n Pauli generators with exact sign bits: row q of x_images is
/// U X_q U^dagger and row q of z_images is U Z_q U^dagger.
struct CliffordTableau {
    uint32_t num_qubits = 0;
    std::vector<PauliString> x_images;
    std::vector<PauliString> z_images;

    CliffordTableau() = default;

    static CliffordTableau identity(uint32_t n) {
        CliffordTableau t;
        t.num_qubits = n;
        t.x_images.reserve(n);
        t.z_images.reserve(n);
        for (uint32_t q = 0; q < n; q++) {
            t.x_images.push_back(single_qubit_pauli(n, q, Pauli::X));
            t.z_images.push_back(single_qubit_pauli(n, q, Pauli::Z));
        }
        return t;
    }

    bool operator==(const CliffordTableau& other) const = default;
};

/// Appends a gate after the circuit the tableau represents (g after t).
inline void apply_gate_inplace(CliffordTableau& t, const CliffordGate& g) {
    g.validate(t.num_qubits);
    for_each_primitive(g, [&](GateKind k, uint32_t a, uint32_t b) {
        switch (k) {
            case GateKind::H:
                for (auto& row : t.x_images) row_apply_h(row, a);
                for (auto& row : t.z_images) row_apply_h(row, a);
                break;
            case GateKind::S:
                for (auto& row : t.x_images) row_apply_s(row, a);
                for (auto& row : t.z_images) row_apply_s(row, a);
                break;
            default:
                for (auto& row : t.x_images) row_apply_cnot(row, a, b);
                for (auto& row : t.z_images) row_apply_cnot(row, a, b);
                break;
        }
    });
}

inline CliffordTableau apply_gate(const CliffordTableau& t, const CliffordGate& g) {
    CliffordTableau out = t;
    apply_gate_inplace(out, g);
    return out;
}

inline CliffordTableau tableau_of_gate(uint32_t num_qubits, const CliffordGate& g) {
    CliffordTableau t = CliffordTableau::identity(num_qubits);
    apply_gate_inplace(t, g);
    return t;
}

inline CliffordTableau tableau_of_gates(uint32_t num_qubits, const std::vector<CliffordGate>& gates) {
    CliffordTableau t = CliffordTableau::identity(num_qubits);
    for (const auto& g : gates) {
        apply_gate_inplace(t, g);
    }
    return t;
}

/// t p t^dagger as a signed Pauli. The result is assembled as a product of
/// generator images (Y rows via derive_y_column), with quarter phases
/// accumulated exactly; an odd final phase is impossible for a valid
/// tableau and throws.
inline PauliString conjugate(const CliffordTableau& t, const PauliString& p) {
    if (t.num_qubits != p.num_qubits) {
        throw std::invalid_argument("conjugate: mismatched qubit counts");
    }
    PhasedPauli acc(t.num_qubits);
    acc.quarter = p.sign ? 2 : 0;
    for (uint32_t q = 0; q < t.num_qubits; q++) {
        bool zq = p.z.get(q);
        bool xq = p.x.get(q);
        if (!zq && !xq) {
            continue;
        }
        if (zq && xq) {
            acc = multiply(acc, PhasedPauli::from_hermitian(derive_y_column(t.x_images[q], t.z_images[q])));
        } else if (xq) {
            acc = multiply(acc, PhasedPauli::from_hermitian(t.x_images[q]));
        } else {
            acc = multiply(acc, PhasedPauli::from_hermitian(t.z_images[q]));
        }
    }
    return acc.to_hermitian();
}

/// Tableau of the operator product a*b (b acts first).
inline CliffordTableau compose(const CliffordTableau& a, const CliffordTableau& b) {
    if (a.num_qubits != b.num_qubits) {
        throw std::invalid_argument("compose: mismatched qubit counts");
    }
    CliffordTableau out;
    out.num_qubits = a.num_qubits;
    out.x_images.reserve(a.num_qubits);
    out.z_images.reserve(a.num_qubits);
    for (uint32_t q = 0; q < a.num_qubits; q++) {
        out.x_images.push_back(conjugate(a, b.x_images[q]));
        out.z_images.push_back(conjugate(a, b.z_images[q]));
    }
    return out;
}

/// True iff all 2n generator images agree, sign bits included. Two Clifford
/// unitaries satisfy this iff they are equal up to a global phase.
inline bool equal_up_to_phase(const CliffordTableau& a, const CliffordTableau& b) {
    if (a.num_qubits != b.num_qubits) {
        throw std::invalid_argument("equal_up_to_phase: mismatched qubit counts");
    }
    return a.x_images == b.x_images && a.z_images == b.z_images;
}

/// Exact inverse: compose(inverse(t), t) is the identity tableau, signs
/// included. The body map is the symplectic transpose; signs are then fixed
/// by conjugating each candidate row through t.
inline CliffordTableau inverse(const CliffordTableau& t) {
    const uint32_t n = t.num_qubits;
    // Body of the linear map as rows over the basis (z_1..z_n, x_1..x_n):
    // row v (v < n: Z_v, else X_{v-n}) holds the (z|x) bits of its image.
    auto row_of = [&](uint32_t v) -> const PauliString& {
        return v < n ? t.z_images[v] : t.x_images[v - n];
    };
    auto omega = [&](uint32_t v) { return v < n ? v + n : v - n; };
    // M^{-1}[r][c] = M[omega(c)][omega(r)].
    CliffordTableau out;
    out.num_qubits = n;
    out.x_images.assign(n, PauliString(n));
    out.z_images.assign(n, PauliString(n));
    for (uint32_t r = 0; r < 2 * n; r++) {
        PauliString body(n);
        for (uint32_t c = 0; c < 2 * n; c++) {
            const PauliString& src = row_of(omega(c));
            uint32_t or_ = omega(r);
            bool bit = or_ < n ? src.z.get(or_) : src.x.get(or_ - n);
            if (bit) {
                if (c < n) {
                    body.z.set(c, true);
                } else {
                    body.x.set(c - n, true);
                }
            }
        }
        PauliString image = conjugate(t, body);
        uint32_t q = r < n ? r : r - n;
        Pauli expected = r < n ? Pauli::Z : Pauli::X;
        PauliString target = single_qubit_pauli(n, q, expected);
        if (image.z != target.z || image.x != target.x) {
            throw std::logic_error("inverse: tableau is not a valid Clifford element");
        }
        body.sign = image.sign;
        if (r < n) {
            out.z_images[q] = body;
        } else {
            out.x_images[q] = body;
        }
    }
    return out;
}

/// Checks the symplectic-basis invariant: X_q/Z_q images anticommute on
/// matching q and commute otherwise. Used by tests and debugging.
inline bool is_valid_symplectic_basis(const CliffordTableau& t) {
    const uint32_t n = t.num_qubits;
    for (uint32_t a = 0; a < n; a++) {
        for (uint32_t b = 0; b < n; b++) {
            if (symplectic_inner_product(t.x_images[a], t.x_images[b])) return false;
            if (symplectic_inner_product(t.z_images[a], t.z_images[b])) return false;
            if (symplectic_inner_product(t.x_images[a], t.z_images[b]) != (a == b)) return false;
        }
    }
    return true;
}

}  // namespace cliffordu
