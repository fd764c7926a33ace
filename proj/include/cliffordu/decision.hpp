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

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cliffordu/circuit.hpp"

namespace cliffordu {

/// The (2n+1) x 2m decision matrix: columns are the binary symplectic
/// vectors of the propagated slot substitutions, ordered
/// [v_1(Z) .. v_m(Z), v_1(X) .. v_m(X)]  (Z block first).
struct DecisionMatrix {
    uint32_t num_qubits = 0;
    uint32_t num_slots = 0;
    std::vector<PauliString> columns;

    const PauliString& z_column(uint32_t slot) const { return columns[slot]; }
    const PauliString& x_column(uint32_t slot) const { return columns[num_slots + slot]; }
};

/// v_i(p): the seed Pauli p on the slot's wire, conjugated forward through
/// layers C_{i+1}..C_m gate by gate (the cumulative Clifford is never
/// materialized). `slot_index` is 0-based; p must be X or Z.
inline PauliString propagate_column(const CliffordUCircuit& c, uint32_t slot_index, Pauli p) {
    if (slot_index >= c.num_slots()) {
        throw std::out_of_range("slot index " + std::to_string(slot_index + 1) + " out of range (circuit has " +
                                std::to_string(c.num_slots()) + " slots)");
    }
    if (p != Pauli::X && p != Pauli::Z) {
        throw std::invalid_argument("propagate_column: seed must be X or Z");
    }
    PauliString v = single_qubit_pauli(c.num_qubits, c.slots[slot_index].qubit, p);
    for (size_t layer = slot_index + 1; layer < c.layers.size(); layer++) {
        for (const auto& g : c.layers[layer].gates) {
            row_apply_gate(v, g);
        }
    }
    return v;
}

namespace detail {

/// All 2m seed Paulis held as a bit matrix over columns (working order
/// interleaves the blocks: column 2i is slot i's Z seed, 2i+1 its X seed,
/// so the live columns are always a prefix). Every gate of layer C_i is
/// applied once, word-parallel, to all columns seeded at or before slot i;
/// columns seeded later are still all-zero and unaffected.
struct ColumnFrontier {
    uint32_t num_qubits = 0;
    uint32_t num_slots = 0;
    std::vector<BitVec> zrow;
    std::vector<BitVec> xrow;
    BitVec sign;
    size_t live_words = 0;

    ColumnFrontier(uint32_t n, uint32_t m)
        : num_qubits(n),
          num_slots(m),
          zrow(n, BitVec(2 * uint64_t{m})),
          xrow(n, BitVec(2 * uint64_t{m})),
          sign(2 * uint64_t{m}) {}

    void apply_h(uint32_t q) {
        auto& z = zrow[q].words;
        auto& x = xrow[q].words;
        for (size_t w = 0; w < live_words; w++) {
            sign.words[w] ^= z[w] & x[w];
        }
        std::swap(zrow[q], xrow[q]);
    }

    void apply_s(uint32_t q) {
        auto& z = zrow[q].words;
        auto& x = xrow[q].words;
        for (size_t w = 0; w < live_words; w++) {
            sign.words[w] ^= z[w] & x[w];
            z[w] ^= x[w];
        }
    }

    void apply_cnot(uint32_t c, uint32_t t) {
        auto& xc = xrow[c].words;
        auto& zc = zrow[c].words;
        auto& xt = xrow[t].words;
        auto& zt = zrow[t].words;
        for (size_t w = 0; w < live_words; w++) {
            sign.words[w] ^= xc[w] & zt[w] & ~(xt[w] ^ zc[w]);
            xt[w] ^= xc[w];
            zc[w] ^= zt[w];
        }
    }

    void apply_gates(const std::vector<CliffordGate>& gates) {
        for (const auto& g : gates) {
            for_each_primitive(g, [&](GateKind k, uint32_t a, uint32_t b) {
                switch (k) {
                    case GateKind::H: apply_h(a); break;
                    case GateKind::S: apply_s(a); break;
                    default: apply_cnot(a, b); break;
                }
            });
        }
    }

    void run(const CliffordUCircuit& c) {
        for (uint32_t i = 0; i < num_slots; i++) {
            uint32_t wire = c.slots[i].qubit;
            zrow[wire].set(2 * uint64_t{i}, true);
            xrow[wire].set(2 * uint64_t{i} + 1, true);
            live_words = (2 * (uint64_t{i} + 1) + 63) / 64;
            apply_gates(c.layers[i + 1].gates);
        }
    }

    PauliString column(Pauli which, uint32_t slot) const {
        uint64_t col = 2 * uint64_t{slot} + (which == Pauli::X ? 1 : 0);
        PauliString p(num_qubits);
        for (uint32_t q = 0; q < num_qubits; q++) {
            p.z.set(q, zrow[q].get(col));
            p.x.set(q, xrow[q].get(col));
        }
        p.sign = sign.get(col);
        return p;
    }

    // Bitwise column comparison, no materialization.
    bool column_equal(Pauli which, uint32_t slot, const ColumnFrontier& other, uint32_t other_slot) const {
        uint64_t ca = 2 * uint64_t{slot} + (which == Pauli::X ? 1 : 0);
        uint64_t cb = 2 * uint64_t{other_slot} + (which == Pauli::X ? 1 : 0);
        if (sign.get(ca) != other.sign.get(cb)) {
            return false;
        }
        for (uint32_t q = 0; q < num_qubits; q++) {
            if (zrow[q].get(ca) != other.zrow[q].get(cb) || xrow[q].get(ca) != other.xrow[q].get(cb)) {
                return false;
            }
        }
        return true;
    }
};

}  // namespace detail

/// Builds the full decision matrix via the batched frontier schedule.
inline DecisionMatrix build_decision_matrix(const CliffordUCircuit& c) {
    detail::ColumnFrontier frontier(c.num_qubits, c.num_slots());
    frontier.run(c);
    DecisionMatrix out;
    out.num_qubits = c.num_qubits;
    out.num_slots = c.num_slots();
    out.columns.reserve(2 * size_t{out.num_slots});
    for (uint32_t i = 0; i < out.num_slots; i++) {
        out.columns.push_back(frontier.column(Pauli::Z, i));
    }
    for (uint32_t i = 0; i < out.num_slots; i++) {
        out.columns.push_back(frontier.column(Pauli::X, i));
    }
    return out;
}

/// The slotless Clifford product C_m ... C_1 C_0 as one tableau, built by
/// folding every gate in order (no tableau-tableau composition).
inline CliffordTableau backbone_tableau(const CliffordUCircuit& c) {
    CliffordTableau t = CliffordTableau::identity(c.num_qubits);
    for (const auto& layer : c.layers) {
        for (const auto& g : layer.gates) {
            apply_gate_inplace(t, g);
        }
    }
    return t;
}

/// T(sigma) as a free function: all label pairs (r, r'), r < r' (0-based),
/// whose relative order differs between the two circuits. Its size is the
/// inversion number of sigma, the minimum adjacent-transposition count.
inline std::vector<std::pair<uint32_t, uint32_t>> inversion_pairs(const std::vector<uint32_t>& sigma) {
    const uint32_t m = static_cast<uint32_t>(sigma.size());
    std::vector<uint32_t> position_in_b(m, UINT32_MAX);
    for (uint32_t j = 0; j < m; j++) {
        if (sigma[j] >= m || position_in_b[sigma[j]] != UINT32_MAX) {
            throw std::invalid_argument("inversion_pairs: sigma is not a permutation");
        }
        position_in_b[sigma[j]] = j;
    }
    std::vector<std::pair<uint32_t, uint32_t>> out;
    for (uint32_t r = 0; r < m; r++) {
        for (uint32_t r2 = r + 1; r2 < m; r2++) {
            if (position_in_b[r] > position_in_b[r2]) {
                out.emplace_back(r, r2);
            }
        }
    }
    return out;
}

/// A permutation of slot labels: sigma[j] = i means slot at position j of
/// the second circuit carries the first circuit's slot i (all 0-based
/// internally; files and JSON use 1-based labels). Carries the derived
/// correspondence set and the inversion-pair set T(sigma).
struct SlotPermutation {
    std::vector<uint32_t> sigma;
    std::vector<std::pair<uint32_t, uint32_t>> inversions;

    static SlotPermutation from_sigma(std::vector<uint32_t> sigma) {
        SlotPermutation p;
        p.inversions = inversion_pairs(sigma);  // also validates bijectivity
        p.sigma = std::move(sigma);
        return p;
    }

    static SlotPermutation identity(uint32_t m) {
        std::vector<uint32_t> s(m);
        std::iota(s.begin(), s.end(), 0u);
        return from_sigma(std::move(s));
    }

    uint32_t size() const { return static_cast<uint32_t>(sigma.size()); }

    bool is_identity() const {
        for (uint32_t j = 0; j < size(); j++) {
            if (sigma[j] != j) {
                return false;
            }
        }
        return true;
    }

    /// Pairs (i, j) with sigma(j) = i.
    std::vector<std::pair<uint32_t, uint32_t>> correspondence() const {
        std::vector<std::pair<uint32_t, uint32_t>> out;
        out.reserve(sigma.size());
        for (uint32_t j = 0; j < sigma.size(); j++) {
            out.emplace_back(sigma[j], j);
        }
        return out;
    }
};

enum class CheckMode : uint8_t { AllParams, FixedInstance };

enum class Outcome : uint8_t { EquivalentAllParams, NotEquivalent, Inconclusive };

struct SlotCountWitness {
    uint32_t lhs_slots = 0;
    uint32_t rhs_slots = 0;

    bool operator==(const SlotCountWitness&) const = default;
};

/// First differing decision-matrix column, indexed in the second
/// circuit's column order (Z block before X block), both values rendered
/// as signed Pauli strings.
struct ColumnWitness {
    uint32_t column_index = 0;  // 0-based position in B' ordering
    std::string lhs_column;
    std::string rhs_column;

    bool operator==(const ColumnWitness&) const = default;
};

/// A reordered pair whose propagated substitutions fail to commute.
struct TranspositionWitness {
    uint32_t slot_r = 0;  // 0-based labels, r < r2
    uint32_t slot_r2 = 0;
    Pauli pauli_r = Pauli::I;
    Pauli pauli_r2 = Pauli::I;
    std::string column_r;
    std::string column_r2;

    bool operator==(const TranspositionWitness&) const = default;
};

/// Backbone tableaux differ: the first generator image that disagrees.
struct BackboneWitness {
    uint32_t generator_index = 0;  // 0..2n-1, Z images then X images
    std::string lhs_image;
    std::string rhs_image;

    bool operator==(const BackboneWitness&) const = default;
};

using Witness = std::variant<SlotCountWitness, ColumnWitness, TranspositionWitness, BackboneWitness>;

struct CheckStats {
    uint64_t columns_compared = 0;
    uint64_t wall_time_ns = 0;
};

struct Verdict {
    Outcome outcome = Outcome::Inconclusive;
    std::optional<Witness> witness;
    CheckStats stats;
};

namespace detail {

inline Verdict check_impl(const CliffordUCircuit& a, const CliffordUCircuit& b,
                          const std::optional<SlotPermutation>& perm, CheckMode mode) {
    auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    auto finish = [&](Outcome outcome, std::optional<Witness> witness) -> Verdict {
        // A failed structural check on fixed-angle circuits is only
        // inconclusive: the criterion is sufficient, not necessary, there.
        if (outcome == Outcome::NotEquivalent && mode == CheckMode::FixedInstance &&
            (a.has_fixed_angles() || b.has_fixed_angles())) {
            outcome = Outcome::Inconclusive;
        }
        v.outcome = outcome;
        v.witness = std::move(witness);
        v.stats.wall_time_ns = static_cast<uint64_t>(
            std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - t0).count());
        return v;
    };

    if (a.num_qubits != b.num_qubits) {
        throw std::invalid_argument("check_equivalence: circuits have different qubit counts (" +
                                    std::to_string(a.num_qubits) + " vs " + std::to_string(b.num_qubits) + ")");
    }
    const uint32_t m = a.num_slots();
    if (perm && (perm->size() != m || perm->size() != b.num_slots())) {
        throw std::invalid_argument("check_equivalence_permuted: permutation length " +
                                    std::to_string(perm->size()) + " does not match slot counts");
    }
    if (m != b.num_slots()) {
        return finish(Outcome::NotEquivalent, SlotCountWitness{m, b.num_slots()});
    }

    // Decision-matrix columns, compared incrementally in column order
    // (Z block then X block of B'), stopping at the first mismatch.
    detail::ColumnFrontier fa(a.num_qubits, m);
    fa.run(a);
    detail::ColumnFrontier fb(b.num_qubits, m);
    fb.run(b);
    const bool permuted = perm.has_value() && !perm->is_identity();
    for (uint64_t idx = 0; idx < 2 * uint64_t{m}; idx++) {
        Pauli block = idx < m ? Pauli::Z : Pauli::X;
        uint32_t j = static_cast<uint32_t>(idx < m ? idx : idx - m);
        uint32_t i = perm ? perm->sigma[j] : j;
        v.stats.columns_compared++;
        if (!fa.column_equal(block, i, fb, j)) {
            return finish(Outcome::NotEquivalent, ColumnWitness{static_cast<uint32_t>(idx),
                                                                fa.column(block, i).str(),
                                                                fb.column(block, j).str()});
        }
    }

    // Reordered slots must commute after propagation; X/Z pairs suffice
    // since Y columns are i*(X column)*(Z column) and the symplectic form
    // is bilinear over F2.
    if (permuted) {
        for (const auto& [r, r2] : perm->inversions) {
            for (Pauli pr : {Pauli::X, Pauli::Z}) {
                for (Pauli pr2 : {Pauli::X, Pauli::Z}) {
                    PauliString cr = fa.column(pr, r);
                    PauliString cr2 = fa.column(pr2, r2);
                    if (symplectic_inner_product(cr, cr2)) {
                        return finish(Outcome::NotEquivalent,
                                      TranspositionWitness{r, r2, pr, pr2, cr.str(), cr2.str()});
                    }
                }
            }
        }
    }

    CliffordTableau ba = backbone_tableau(a);
    CliffordTableau bb = backbone_tableau(b);
    for (uint32_t q = 0; q < a.num_qubits; q++) {
        if (!(ba.z_images[q] == bb.z_images[q])) {
            return finish(Outcome::NotEquivalent,
                          BackboneWitness{q, ba.z_images[q].str(), bb.z_images[q].str()});
        }
        if (!(ba.x_images[q] == bb.x_images[q])) {
            return finish(Outcome::NotEquivalent,
                          BackboneWitness{a.num_qubits + q, ba.x_images[q].str(), bb.x_images[q].str()});
        }
    }

    return finish(Outcome::EquivalentAllParams, std::nullopt);
}

}  // namespace detail

/// Decides whether the two circuit functions agree for every slot
/// assignment (AllParams), or runs the same structural test as a sound
/// no-false-positive heuristic for concrete circuits (FixedInstance).
inline Verdict check_equivalence(const CliffordUCircuit& a, const CliffordUCircuit& b,
                                 CheckMode mode = CheckMode::AllParams) {
    return detail::check_impl(a, b, std::nullopt, mode);
}

/// The reordered-slot variant: slot at position j of `b` corresponds to
/// slot sigma(j) of `a`. With the identity permutation this is exactly
/// check_equivalence.
inline Verdict check_equivalence_permuted(const CliffordUCircuit& a, const CliffordUCircuit& b,
                                          const SlotPermutation& sigma, CheckMode mode = CheckMode::AllParams) {
    return detail::check_impl(a, b, sigma, mode);
}

}  // namespace cliffordu
