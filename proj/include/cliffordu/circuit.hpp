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
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "cliffordu/tableau.hpp"

namespace cliffordu {

/// An angle argument kept as exact source text plus a parsed value when the
/// text is numeric. Only the oracle ever reads `value`; the checker is
/// angle-independent.
struct AngleExpr {
    std::string text;
    std::optional<double> value;

    bool operator==(const AngleExpr& other) const {
        return text == other.text;
    }
};

/// A single-qubit non-Clifford gate as parsed: rx/ry/rz/u1/u3 with angle
/// expressions, or an opaque slot marker like "param_u3" with no params.
struct ParametricGate {
    std::string name;
    std::vector<AngleExpr> params;
    uint32_t qubit = 0;

    /// True when every angle evaluated to a number, so the gate denotes one
    /// concrete 2x2 unitary rather than a symbolic placeholder.
    bool has_fixed_angles() const {
        if (params.empty()) {
            return false;  // opaque marker, symbolic by definition
        }
        for (const auto& p : params) {
            if (!p.value.has_value()) {
                return false;
            }
        }
        return true;
    }
};

using RawOp = std::variant<CliffordGate, ParametricGate>;

/// Parser output: the flat gate list before normalization.
struct RawCircuit {
    uint32_t num_qubits = 0;
    std::vector<RawOp> ops;
};

/// A slot: placeholder for an arbitrary single-qubit unitary. `label` is
/// shared across the two compared circuits (1-based, program order);
/// `qubit` is where it acts in this circuit (0-based). `gates` records the
/// parametric gates the slot absorbed, for the oracle and for fixed-angle
/// detection.
struct Slot {
    uint32_t label = 0;
    uint32_t qubit = 0;
    std::vector<ParametricGate> gates;

    bool has_fixed_angles() const {
        if (gates.empty()) {
            return false;
        }
        for (const auto& g : gates) {
            if (!g.has_fixed_angles()) {
                return false;
            }
        }
        return true;
    }
};

/// One Clifford stretch: the exact tableau plus the gates that built it
/// (kept for emission and for dense-oracle evaluation).
struct CliffordLayer {
    CliffordTableau tableau;
    std::vector<CliffordGate> gates;

    static CliffordLayer from_gates(uint32_t num_qubits, std::vector<CliffordGate> gates) {
        CliffordLayer layer;
        layer.tableau = tableau_of_gates(num_qubits, gates);
        layer.gates = std::move(gates);
        return layer;
    }
};

/// Alternating circuit C_m U_m ... C_1 U_1 C_0: layers[i] is C_i and
/// slots[i] (0-based) sits between layers[i] and layers[i+1].
/// Invariant: layers.size() == slots.size() + 1.
struct CliffordUCircuit {
    uint32_t num_qubits = 0;
    std::vector<CliffordLayer> layers;
    std::vector<Slot> slots;

    uint32_t num_slots() const {
        return static_cast<uint32_t>(slots.size());
    }

    bool has_fixed_angles() const {
        for (const auto& s : slots) {
            if (s.has_fixed_angles()) {
                return true;
            }
        }
        return false;
    }

    void validate() const {
        if (layers.size() != slots.size() + 1) {
            throw std::logic_error("CliffordUCircuit: layer/slot count mismatch");
        }
        for (const auto& layer : layers) {
            if (layer.tableau.num_qubits != num_qubits) {
                throw std::logic_error("CliffordUCircuit: layer qubit count mismatch");
            }
        }
        for (const auto& s : slots) {
            if (s.qubit >= num_qubits) {
                throw std::logic_error("CliffordUCircuit: slot qubit out of range");
            }
        }
    }
};

enum class FusePolicy : uint8_t { Off, On };

namespace detail {

// Opaque slot markers never fuse; they are already one slot each.
inline bool parametric_is_fusable(const ParametricGate& g) {
    return !g.params.empty() || g.name.rfind("param_u", 0) != 0;
}

}  // namespace detail

/// Folds a raw gate list into the alternating layer/slot form. Consecutive
/// Clifford gates merge into one layer. With fuse=On, a maximal run of
/// parametric gates on one qubit with no other gate of any kind between
/// them collapses into a single slot; any intervening gate (even on another
/// qubit) breaks the run. Slot labels are assigned 1..m in program order.
inline CliffordUCircuit normalize(const RawCircuit& raw, FusePolicy fuse = FusePolicy::On) {
    CliffordUCircuit out;
    out.num_qubits = raw.num_qubits;
    std::vector<CliffordGate> pending;
    const ParametricGate* prev_parametric = nullptr;  // non-null only when the run is still open

    for (const auto& op : raw.ops) {
        if (std::holds_alternative<CliffordGate>(op)) {
            pending.push_back(std::get<CliffordGate>(op));
            prev_parametric = nullptr;
            continue;
        }
        const ParametricGate& g = std::get<ParametricGate>(op);
        bool fused = fuse == FusePolicy::On && prev_parametric != nullptr &&
                     prev_parametric->qubit == g.qubit && detail::parametric_is_fusable(*prev_parametric) &&
                     detail::parametric_is_fusable(g);
        if (fused) {
            out.slots.back().gates.push_back(g);
        } else {
            out.layers.push_back(CliffordLayer::from_gates(raw.num_qubits, std::move(pending)));
            pending.clear();
            Slot s;
            s.label = static_cast<uint32_t>(out.slots.size()) + 1;
            s.qubit = g.qubit;
            s.gates.push_back(g);
            out.slots.push_back(std::move(s));
        }
        prev_parametric = &std::get<ParametricGate>(op);
    }
    out.layers.push_back(CliffordLayer::from_gates(raw.num_qubits, std::move(pending)));
    return out;
}

/// Structural equality used by the round-trip tests: same slots (label and
/// wire) and layer-for-layer equal tableaux.
inline bool circuits_equal(const CliffordUCircuit& a, const CliffordUCircuit& b) {
    if (a.num_qubits != b.num_qubits || a.layers.size() != b.layers.size() || a.slots.size() != b.slots.size()) {
        return false;
    }
    for (size_t i = 0; i < a.slots.size(); i++) {
        if (a.slots[i].label != b.slots[i].label || a.slots[i].qubit != b.slots[i].qubit) {
            return false;
        }
    }
    for (size_t i = 0; i < a.layers.size(); i++) {
        if (!equal_up_to_phase(a.layers[i].tableau, b.layers[i].tableau)) {
            return false;
        }
    }
    return true;
}

}  // namespace cliffordu
