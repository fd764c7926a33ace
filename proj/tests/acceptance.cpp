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

// Acceptance suite: one self-contained scenario per criterion, one
// PASS/FAIL line each. Exit code is the number of failed criteria.

#include <algorithm>
#include <cstring>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "cliffordu/bench.hpp"
#include "cliffordu/decision.hpp"
#include "cliffordu/generator.hpp"
#include "cliffordu/oracle.hpp"
#include "cliffordu/qasm.hpp"

using namespace cliffordu;

namespace {

struct Outcome1 {
    bool pass;
    std::string detail;
};

CliffordUCircuit reorder_slots(const CliffordUCircuit& f, const std::vector<uint32_t>& sigma) {
    CliffordUCircuit out;
    out.num_qubits = f.num_qubits;
    out.layers.push_back(f.layers.front());
    for (size_t j = 1; j + 1 < f.layers.size(); j++) {
        out.layers.push_back(CliffordLayer::from_gates(f.num_qubits, {}));
    }
    if (f.layers.size() > 1) {
        out.layers.push_back(f.layers.back());
    }
    for (uint32_t j = 0; j < sigma.size(); j++) {
        out.slots.push_back(Slot{j + 1, f.slots[sigma[j]].qubit, {}});
    }
    return out;
}

// --- Criterion 1: soundness vs the dense oracle ---------------------------
Outcome1 criterion_soundness() {
    Rng rng(0xC1);
    const int kInstances = 300;
    int equivalents = 0;
    for (int k = 0; k < kInstances; k++) {
        GeneratorConfig cfg;
        cfg.num_qubits = 2 + rng.below(4);      // n in [2,5]
        cfg.num_slots = 1 + rng.below(6);       // m in [1,6]
        cfg.clifford_depth = 1 + rng.below(10); // depth in [1,10]
        cfg.seed = rng.next_u64();
        CliffordUCircuit f = generate_base(cfg);
        CliffordUCircuit g;
        switch (k % 3) {
            case 0: g = derive_equivalent(f, rng.next_u64()); break;
            case 1: g = inject_pauli_error(derive_equivalent(f, rng.next_u64()), rng.next_u64()).first; break;
            default: g = generate_independent(cfg); break;
        }
        Verdict v = check_equivalence(f, g);
        if (v.outcome == Outcome::EquivalentAllParams) {
            equivalents++;
            for (int trial = 0; trial < 3; trial++) {
                auto a = oracle::SlotAssignment::random(f.num_slots(), rng.next_u64());
                double dist = oracle::phase_aligned_distance(oracle::evaluate(f, a), oracle::evaluate(g, a));
                if (!(dist < 1e-9)) {
                    return {false, "false positive: instance " + std::to_string(k) + " has oracle distance " +
                                       std::to_string(dist)};
                }
            }
        }
    }
    if (equivalents == 0) {
        return {false, "no EquivalentAllParams verdicts were exercised"};
    }
    return {true, std::to_string(kInstances) + " instances, " + std::to_string(equivalents) +
                      " equivalent verdicts all oracle-confirmed at 3 assignments (<1e-9)"};
}

// --- Criterion 2: completeness on constructed-equivalent pairs ------------
Outcome1 criterion_completeness() {
    Rng rng(0xC2);
    const int kPairs = 100;
    for (int k = 0; k < kPairs; k++) {
        GeneratorConfig cfg;
        cfg.num_qubits = 2 + rng.below(5);
        cfg.num_slots = 1 + rng.below(8);
        cfg.clifford_depth = 1 + rng.below(10);
        cfg.seed = rng.next_u64();
        CliffordUCircuit f = generate_base(cfg);
        Verdict v = check_equivalence(f, derive_equivalent(f, rng.next_u64()));
        if (v.outcome != Outcome::EquivalentAllParams) {
            return {false, "pair " + std::to_string(k) + " got outcome " + outcome_name(v.outcome)};
        }
    }
    return {true, std::to_string(kPairs) + "/100 derived pairs equivalent, zero Inconclusive"};
}

// --- Criterion 3: error sensitivity ----------------------------------------
Outcome1 criterion_error_sensitivity() {
    Rng rng(0xC3);
    const int kPairs = 100;
    for (int k = 0; k < kPairs; k++) {
        GeneratorConfig cfg;
        cfg.num_qubits = 2 + rng.below(4);  // n <= 5
        cfg.num_slots = 1 + rng.below(6);
        cfg.clifford_depth = 1 + rng.below(10);
        cfg.seed = rng.next_u64();
        CliffordUCircuit f = generate_base(cfg);
        CliffordUCircuit fp = derive_equivalent(f, rng.next_u64());
        auto [bad, site] = inject_pauli_error(fp, rng.next_u64());
        Verdict v = check_equivalence(f, bad);
        if (v.outcome != Outcome::NotEquivalent) {
            return {false, "injected pair " + std::to_string(k) + " not rejected"};
        }
        if (!v.witness.has_value()) {
            return {false, "injected pair " + std::to_string(k) + " lacks a witness"};
        }
        bool concrete = false;
        if (const auto* col = std::get_if<ColumnWitness>(&*v.witness)) {
            concrete = !col->lhs_column.empty() && col->lhs_column != col->rhs_column;
        } else if (const auto* bb = std::get_if<BackboneWitness>(&*v.witness)) {
            concrete = !bb->lhs_image.empty() && bb->lhs_image != bb->rhs_image;
        }
        if (!concrete) {
            return {false, "injected pair " + std::to_string(k) + " has no concrete witness column"};
        }
        auto a = oracle::SlotAssignment::random(f.num_slots(), rng.next_u64());
        double dist = oracle::phase_aligned_distance(oracle::evaluate(f, a), oracle::evaluate(bad, a));
        if (!(dist > 1e-6)) {
            return {false, "oracle does not confirm inequivalence for pair " + std::to_string(k)};
        }
    }
    return {true, "100/100 injected pairs rejected with concrete witnesses, oracle-confirmed"};
}

// --- Criterion 4: independent-pair fast rejection ---------------------------
Outcome1 criterion_fast_rejection() {
    Rng rng(0xC4);
    std::vector<uint64_t> compared;
    for (int k = 0; k < 100; k++) {
        GeneratorConfig cfg;
        cfg.num_qubits = 20;
        cfg.num_slots = 50;
        cfg.clifford_depth = 10;
        cfg.seed = rng.next_u64();
        CliffordUCircuit f = generate_base(cfg);
        CliffordUCircuit g = generate_independent(cfg);
        Verdict v = check_equivalence(f, g);
        if (v.outcome != Outcome::NotEquivalent) {
            return {false, "independent pair " + std::to_string(k) + " not rejected"};
        }
        compared.push_back(v.stats.columns_compared);
    }
    std::sort(compared.begin(), compared.end());
    uint64_t median = compared[compared.size() / 2];
    if (median > 2) {
        return {false, "median columns_compared = " + std::to_string(median) + " > 2"};
    }
    return {true, "median columns_compared = " + std::to_string(median) + " over 100 pairs at n=20, m=50"};
}

// --- Criterion 5: permuted-order correctness --------------------------------
Outcome1 criterion_permuted() {
    Rng rng(0xC5);
    // (a) identity-sigma regression.
    for (int k = 0; k < 100; k++) {
        GeneratorConfig cfg;
        cfg.num_qubits = 2 + rng.below(3);
        cfg.num_slots = 1 + rng.below(5);
        cfg.clifford_depth = 1 + rng.below(8);
        cfg.seed = rng.next_u64();
        CliffordUCircuit f = generate_base(cfg);
        CliffordUCircuit g = rng.coin()
                                 ? derive_equivalent(f, rng.next_u64())
                                 : inject_pauli_error(derive_equivalent(f, rng.next_u64()), rng.next_u64()).first;
        Verdict v1 = check_equivalence(f, g);
        Verdict v2 = check_equivalence_permuted(f, g, SlotPermutation::identity(f.num_slots()));
        bool same = v1.outcome == v2.outcome && v1.stats.columns_compared == v2.stats.columns_compared &&
                    v1.witness.has_value() == v2.witness.has_value();
        if (same && v1.witness.has_value()) {
            same = *v1.witness == *v2.witness;
        }
        if (!same) {
            return {false, "identity-sigma verdict differs on instance " + std::to_string(k)};
        }
    }
    // (b) commuting reorders: disjoint wires, random sigma, oracle-confirmed.
    for (int k = 0; k < 30; k++) {
        uint32_t n = 2 + rng.below(3);  // n <= 4
        uint32_t m = 2 + rng.below(n - 1);
        GeneratorConfig cfg;
        cfg.num_qubits = n;
        cfg.num_slots = m;
        cfg.clifford_depth = 5;
        cfg.seed = rng.next_u64();
        CliffordUCircuit f = generate_base(cfg);
        for (size_t i = 1; i + 1 < f.layers.size(); i++) {
            f.layers[i] = CliffordLayer::from_gates(n, {});
        }
        for (uint32_t i = 0; i < m; i++) {
            f.slots[i].qubit = i;  // distinct wires
        }
        std::vector<uint32_t> sig(m);
        std::iota(sig.begin(), sig.end(), 0u);
        for (uint32_t i = m; i > 1; i--) {
            std::swap(sig[i - 1], sig[rng.below(i)]);
        }
        CliffordUCircuit fp = reorder_slots(f, sig);
        SlotPermutation perm = SlotPermutation::from_sigma(sig);
        Verdict v = check_equivalence_permuted(f, fp, perm);
        if (v.outcome != Outcome::EquivalentAllParams) {
            return {false, "commuting reorder " + std::to_string(k) + " rejected"};
        }
        auto a = oracle::SlotAssignment::random(m, rng.next_u64());
        if (!oracle::equal_up_to_global_phase(oracle::evaluate(f, a), oracle::evaluate(fp, a.permuted(perm)),
                                              1e-9)) {
            return {false, "oracle rejects commuting reorder " + std::to_string(k)};
        }
    }
    // (c) anticommuting reorders: same-wire adjacent slots swapped.
    for (int k = 0; k < 30; k++) {
        uint32_t n = 2 + rng.below(3);
        GeneratorConfig cfg;
        cfg.num_qubits = n;
        cfg.num_slots = 2;
        cfg.clifford_depth = 5;
        cfg.seed = rng.next_u64();
        CliffordUCircuit f = generate_base(cfg);
        f.layers[1] = CliffordLayer::from_gates(n, {});
        uint32_t wire = rng.below(n);
        f.slots[0].qubit = wire;
        f.slots[1].qubit = wire;
        CliffordUCircuit fp = reorder_slots(f, {1, 0});
        SlotPermutation perm = SlotPermutation::from_sigma({1, 0});
        Verdict v = check_equivalence_permuted(f, fp, perm);
        if (v.outcome != Outcome::NotEquivalent || !v.witness.has_value() ||
            !std::holds_alternative<TranspositionWitness>(*v.witness)) {
            return {false, "same-wire swap " + std::to_string(k) + " not rejected with a transposition witness"};
        }
        auto a = oracle::SlotAssignment::random(2, rng.next_u64());
        double dist =
            oracle::phase_aligned_distance(oracle::evaluate(f, a), oracle::evaluate(fp, a.permuted(perm)));
        if (!(dist > 1e-6)) {
            return {false, "oracle does not confirm same-wire swap " + std::to_string(k)};
        }
    }
    return {true, "identity regression (100), commuting reorders (30), anticommuting reorders (30)"};
}

// --- Criterion 6: Pauli-expansion identity ----------------------------------
Outcome1 criterion_expansion() {
    Rng rng(0xC6);
    double worst = 0;
    for (int k = 0; k < 50; k++) {
        GeneratorConfig cfg;
        cfg.num_qubits = 2 + rng.below(3);  // n <= 4
        cfg.num_slots = 1 + rng.below(5);   // m <= 5
        cfg.clifford_depth = 1 + rng.below(10);
        cfg.seed = rng.next_u64();
        CliffordUCircuit c = generate_base(cfg);
        auto a = oracle::SlotAssignment::random(c.num_slots(), rng.next_u64());
        double residual = oracle::pauli_expansion_check(c, a);
        worst = std::max(worst, residual);
        if (!(residual < 1e-9)) {
            return {false, "instance " + std::to_string(k) + " residual " + std::to_string(residual)};
        }
    }
    std::ostringstream os;
    os << "50/50 instances, worst residual " << worst;
    return {true, os.str()};
}

// --- Criterion 7: scaling exponents -----------------------------------------
Outcome1 criterion_scaling() {
    SweepSpec spec;
    spec.reps = 15;
    spec.seed = 0xC7;
    spec.m_sweep = Sweep{{100, 200, 400, 800, 1600}, 50, 10};
    spec.n_sweep = Sweep{{64, 128, 256, 512}, 100, 10};
    BenchReport r = run_scaling_bench(spec);
    for (const auto& rec : r.records) {
        if (rec.outcome != "equivalent_all_params") {
            return {false, "sweep instance (n=" + std::to_string(rec.num_qubits) + ", m=" +
                               std::to_string(rec.num_slots) + ") was not verified equivalent"};
        }
    }
    std::ostringstream os;
    os << "m-slope " << (r.m_slope ? *r.m_slope : -1) << " (need [0.9, 1.15]), n-slope "
       << (r.n_slope ? *r.n_slope : -1) << " (need <= 2.5)";
    if (!r.m_slope || *r.m_slope < 0.9 || *r.m_slope > 1.15) {
        return {false, os.str()};
    }
    if (!r.n_slope || *r.n_slope > 2.5) {
        return {false, os.str()};
    }
    return {true, os.str()};
}

// --- Criterion 8: tableau engine exactness ----------------------------------
Outcome1 criterion_tableau_exactness() {
    Rng rng(0xC8);
    const Pauli kAll[] = {Pauli::I, Pauli::X, Pauli::Y, Pauli::Z};
    for (int k = 0; k < 1000; k++) {
        uint32_t n = 1 + rng.below(3);
        GeneratorConfig cfg;
        cfg.num_qubits = n;
        cfg.num_slots = 0;
        cfg.clifford_depth = 1 + rng.below(20);
        cfg.seed = rng.next_u64();
        auto gates = generate_base(cfg).layers[0].gates;
        CliffordTableau t = tableau_of_gates(n, gates);
        PauliString p(n);
        for (uint32_t q = 0; q < n; q++) {
            p.set_pauli(q, kAll[rng.below(4)]);
        }
        p.sign = rng.coin();
        PauliString img = conjugate(t, p);
        oracle::Mat u = oracle::dense_of_gates(n, gates);
        oracle::Mat expected = u * oracle::dense_pauli(p) * u.adjoint();
        // A wrong sign would put the distance at 2*2^(n/2); this threshold
        // admits only float rounding, so sign equality is exact.
        if ((expected - oracle::dense_pauli(img)).norm() > 1e-9) {
            return {false, "conjugation mismatch on pair " + std::to_string(k) + " (" + p.str() + " -> " +
                               img.str() + ")"};
        }
    }
    return {true, "1000/1000 random (tableau, Pauli) pairs conjugate exactly, signs included"};
}

// --- Criterion 9: parse/normalize/emit round trip ---------------------------
Outcome1 criterion_round_trip() {
    Rng rng(0xC9);
    for (int k = 0; k < 100; k++) {
        GeneratorConfig cfg;
        cfg.num_qubits = 1 + rng.below(5);
        cfg.num_slots = rng.below(8);
        cfg.clifford_depth = 1 + rng.below(10);
        cfg.seed = rng.next_u64();
        CliffordUCircuit c1 = normalize(parse_qasm(emit_qasm(generate_base(cfg))));
        CliffordUCircuit c2 = normalize(parse_qasm(emit_qasm(c1)));
        if (!circuits_equal(c1, c2) || emit_qasm(c1) != emit_qasm(c2)) {
            return {false, "round trip moved on instance " + std::to_string(k)};
        }
    }
    return {true, "100/100 circuits are fixed points of parse -> normalize -> emit"};
}

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; i++) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
            only = std::atoi(argv[i + 1]);
        }
    }

    struct Criterion {
        int id;
        const char* title;
        std::function<Outcome1()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "soundness vs oracle", criterion_soundness},
        {2, "completeness on constructed-equivalent pairs", criterion_completeness},
        {3, "error sensitivity", criterion_error_sensitivity},
        {4, "independent-pair fast rejection", criterion_fast_rejection},
        {5, "permuted-order correctness", criterion_permuted},
        {6, "Pauli-expansion identity", criterion_expansion},
        {7, "scaling exponents", criterion_scaling},
        {8, "tableau engine exactness", criterion_tableau_exactness},
        {9, "round-trip fixed point", criterion_round_trip},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        if (only != 0 && c.id != only) {
            continue;
        }
        Outcome1 result{false, "exception"};
        try {
            result = c.run();
        } catch (const std::exception& e) {
            result = {false, std::string("exception: ") + e.what()};
        }
        std::cout << (result.pass ? "[PASS]" : "[FAIL]") << " criterion " << c.id << ": " << c.title << " — "
                  << result.detail << "\n";
        if (!result.pass) {
            failures++;
        }
    }
    return failures;
}
