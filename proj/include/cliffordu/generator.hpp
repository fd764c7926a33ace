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

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "cliffordu/circuit.hpp"
#include "cliffordu/rng.hpp"

namespace cliffordu {

/// Random-instance shape: m+1 Clifford layers of `clifford_depth` gates
/// each, drawn CNOT/H/S with the given fractions, plus m slots on uniform
/// random wires. Fully determined by (config, seed).
struct GeneratorConfig {
    uint32_t num_qubits = 2;
    uint32_t num_slots = 1;
    uint32_t clifford_depth = 10;
    std::array<double, 3> gate_mix = {0.2, 0.4, 0.4};  // CNOT, H, S
    uint64_t seed = 0;

    void validate() const {
        if (num_qubits == 0) {
            throw std::invalid_argument("generator: need at least one qubit");
        }
        if (clifford_depth < 1) {
            throw std::invalid_argument("generator: clifford_depth must be at least 1");
        }
        double total = gate_mix[0] + gate_mix[1] + gate_mix[2];
        if (std::abs(total - 1.0) > 1e-9) {
            throw std::invalid_argument("generator: gate mix fractions must sum to 1");
        }
    }
};

namespace gen_detail {

inline std::vector<CliffordGate> random_layer(const GeneratorConfig& cfg, Rng& rng) {
    std::vector<CliffordGate> gates;
    gates.reserve(cfg.clifford_depth);
    // With one qubit a CNOT is unrealizable; fold its share into H/S.
    double p_cnot = cfg.num_qubits >= 2 ? cfg.gate_mix[0] : 0.0;
    double p_h = cfg.gate_mix[1];
    if (cfg.num_qubits < 2) {
        p_h = cfg.gate_mix[1] / (cfg.gate_mix[1] + cfg.gate_mix[2]);
    }
    for (uint32_t d = 0; d < cfg.clifford_depth; d++) {
        double u = rng.uniform01();
        if (u < p_cnot) {
            uint32_t c = static_cast<uint32_t>(rng.below(cfg.num_qubits));
            uint32_t t = static_cast<uint32_t>(rng.below(cfg.num_qubits - 1));
            if (t >= c) t++;
            gates.emplace_back(GateKind::CNOT, c, t);
        } else if (u < p_cnot + p_h) {
            gates.emplace_back(GateKind::H, static_cast<uint32_t>(rng.below(cfg.num_qubits)));
        } else {
            gates.emplace_back(GateKind::S, static_cast<uint32_t>(rng.below(cfg.num_qubits)));
        }
    }
    return gates;
}

inline CliffordUCircuit random_circuit(const GeneratorConfig& cfg, const char* gate_tag, const char* wire_tag) {
    cfg.validate();
    Rng rng_gates = Rng::stream(cfg.seed, gate_tag);
    Rng rng_wires = Rng::stream(cfg.seed, wire_tag);
    CliffordUCircuit c;
    c.num_qubits = cfg.num_qubits;
    c.layers.reserve(cfg.num_slots + 1);
    for (uint32_t i = 0; i <= cfg.num_slots; i++) {
        c.layers.push_back(CliffordLayer::from_gates(cfg.num_qubits, random_layer(cfg, rng_gates)));
    }
    c.slots.reserve(cfg.num_slots);
    for (uint32_t i = 0; i < cfg.num_slots; i++) {
        Slot s;
        s.label = i + 1;
        s.qubit = static_cast<uint32_t>(rng_wires.below(cfg.num_qubits));
        c.slots.push_back(std::move(s));
    }
    return c;
}

}  // namespace gen_detail

/// The benchmark circuit F: random Clifford layers, random slot wires.
inline CliffordUCircuit generate_base(const GeneratorConfig& cfg) {
    return gen_detail::random_circuit(cfg, "layer-gates", "slot-wires");
}

/// An independently generated circuit with the same shape and slot labels
/// (fresh layers, fresh wires) - non-equivalent to the base except with
/// probability zero.
inline CliffordUCircuit generate_independent(const GeneratorConfig& cfg) {
    return gen_detail::random_circuit(cfg, "indep-layer-gates", "indep-slot-wires");
}

/// Equivalent-by-construction partner: each slot is moved to a fresh wire
/// l_i, and the wire relabeling is undone by SWAPs threaded through the
/// neighbouring layers. Writing T_i for the transposition (k_i l_i), the
/// new layers are
///     C'_0 = [C_0, T_1],  C'_i = [T_i, C_i, T_{i+1}],  C'_m = [T_m, C_m],
/// so the product telescopes: every T_i cancels, the end-to-end backbone is
/// exactly C_m...C_0, and the propagated image of a slot substitution is
/// unchanged. F'(U) = F(U) for every assignment, by construction.
inline CliffordUCircuit derive_equivalent(const CliffordUCircuit& base, uint64_t seed) {
    Rng rng = Rng::stream(seed, "equiv-wires");
    const uint32_t n = base.num_qubits;
    const uint32_t m = base.num_slots();
    std::vector<uint32_t> new_wires(m);
    for (uint32_t i = 0; i < m; i++) {
        new_wires[i] = static_cast<uint32_t>(rng.below(n));
    }

    auto transposition = [&](uint32_t i) -> std::vector<CliffordGate> {
        if (base.slots[i].qubit == new_wires[i]) {
            return {};
        }
        return {CliffordGate(GateKind::SWAP, base.slots[i].qubit, new_wires[i])};
    };

    CliffordUCircuit out;
    out.num_qubits = n;
    out.layers.reserve(m + 1);
    for (uint32_t i = 0; i <= m; i++) {
        std::vector<CliffordGate> gates;
        if (i > 0) {
            auto t = transposition(i - 1);
            gates.insert(gates.end(), t.begin(), t.end());
        }
        const auto& orig = base.layers[i].gates;
        gates.insert(gates.end(), orig.begin(), orig.end());
        if (i < m) {
            auto t = transposition(i);
            gates.insert(gates.end(), t.begin(), t.end());
        }
        out.layers.push_back(CliffordLayer::from_gates(n, std::move(gates)));
    }
    out.slots.reserve(m);
    for (uint32_t i = 0; i < m; i++) {
        Slot s = base.slots[i];
        s.qubit = new_wires[i];
        out.slots.push_back(std::move(s));
    }
    return out;
}

struct PauliInjection {
    uint32_t layer = 0;  // 0..m
    uint32_t qubit = 0;
    GateKind kind = GateKind::X;  // X or Z
};

/// Appends one uniformly random X or Z at the end of a uniformly chosen
/// layer (emulating a compilation error). Returns the modified copy and
/// the injection site.
inline std::pair<CliffordUCircuit, PauliInjection> inject_pauli_error(const CliffordUCircuit& c, uint64_t seed) {
    Rng rng = Rng::stream(seed, "inject-site");
    PauliInjection site;
    site.layer = static_cast<uint32_t>(rng.below(c.layers.size()));
    site.qubit = static_cast<uint32_t>(rng.below(c.num_qubits));
    site.kind = rng.coin() ? GateKind::X : GateKind::Z;
    CliffordUCircuit out = c;
    out.layers[site.layer].gates.emplace_back(site.kind, site.qubit);
    out.layers[site.layer].tableau = tableau_of_gates(c.num_qubits, out.layers[site.layer].gates);
    return {std::move(out), site};
}

}  // namespace cliffordu
