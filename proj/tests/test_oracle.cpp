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

#include <catch2/catch_amalgamated.hpp>

#include "cliffordu/generator.hpp"
#include "cliffordu/oracle.hpp"
#include "cliffordu/qasm.hpp"

using namespace cliffordu;
using oracle::Mat;
using oracle::Mat2;

namespace {

CliffordUCircuit one_slot_circuit(uint32_t n, uint32_t wire, std::vector<CliffordGate> before,
                                  std::vector<CliffordGate> after) {
    CliffordUCircuit c;
    c.num_qubits = n;
    c.layers.push_back(CliffordLayer::from_gates(n, std::move(before)));
    c.layers.push_back(CliffordLayer::from_gates(n, std::move(after)));
    c.slots.push_back(Slot{1, wire, {}});
    return c;
}

}  // namespace

TEST_CASE("evaluate: trivial embeddings") {
    auto c = one_slot_circuit(1, 0, {}, {});
    oracle::SlotAssignment ident = oracle::SlotAssignment::paulis({Pauli::I});
    REQUIRE((oracle::evaluate(c, ident).matrix - Mat::Identity(2, 2)).norm() < 1e-12);

    oracle::SlotAssignment x = oracle::SlotAssignment::paulis({Pauli::X});
    REQUIRE((oracle::evaluate(c, x).matrix - oracle::dense_pauli(single_qubit_pauli(1, 0, Pauli::X))).norm() < 1e-12);
}

TEST_CASE("evaluate: H after a Z slot equals X before an H") {
    auto c = one_slot_circuit(1, 0, {}, {{GateKind::H, 0}});
    oracle::SlotAssignment z = oracle::SlotAssignment::paulis({Pauli::Z});
    Mat hz = oracle::evaluate(c, z).matrix;
    Mat h = oracle::dense_of_gates(1, {{GateKind::H, 0}});
    Mat xh = oracle::dense_pauli(single_qubit_pauli(1, 0, Pauli::X)) * h;
    REQUIRE((hz - h * oracle::dense_pauli(single_qubit_pauli(1, 0, Pauli::Z))).norm() < 1e-12);
    REQUIRE((hz - xh).norm() < 1e-12);
}

TEST_CASE("evaluate: slot embedding respects the wire") {
    auto c = one_slot_circuit(2, 1, {}, {});
    oracle::SlotAssignment x = oracle::SlotAssignment::paulis({Pauli::X});
    REQUIRE((oracle::evaluate(c, x).matrix - oracle::dense_pauli(single_qubit_pauli(2, 1, Pauli::X))).norm() <
            1e-12);
}

TEST_CASE("evaluate distributes over Clifford composition") {
    Rng rng(41);
    for (int trial = 0; trial < 20; trial++) {
        uint32_t n = 1 + rng.below(3);
        GeneratorConfig cfg;
        cfg.num_qubits = n;
        cfg.num_slots = 0;
        cfg.clifford_depth = 10;
        cfg.seed = rng.next_u64();
        CliffordUCircuit c = generate_base(cfg);
        Mat direct = oracle::evaluate(c, {}).matrix;
        const uint64_t dim = uint64_t{1} << n;
        Mat product = Mat::Identity(dim, dim);
        for (const auto& g : c.layers[0].gates) {
            product = oracle::dense_of_gates(n, {g}) * product;
        }
        REQUIRE((direct - product).norm() < 1e-10);
    }
}

TEST_CASE("evaluate guards") {
    CliffordUCircuit big;
    big.num_qubits = 13;
    big.layers.push_back(CliffordLayer{CliffordTableau::identity(13), {}});
    REQUIRE_THROWS_WITH(oracle::evaluate(big, {}), Catch::Matchers::ContainsSubstring("dense limit"));

    auto c = one_slot_circuit(1, 0, {}, {});
    REQUIRE_THROWS_AS(oracle::evaluate(c, {}), std::invalid_argument);  // missing slot unitary
}

TEST_CASE("SlotAssignment validation") {
    oracle::SlotAssignment a;
    Mat2 not_unitary;
    not_unitary << 1, 1, 0, 1;
    REQUIRE_THROWS_AS(a.set(1, not_unitary), std::invalid_argument);

    REQUIRE_THROWS_AS(oracle::SlotAssignment{}.at(3), std::invalid_argument);
}

TEST_CASE("DenseUnitary rejects non-unitary input") {
    Mat bad = Mat::Zero(2, 2);
    REQUIRE_THROWS_AS(oracle::DenseUnitary(1, bad), std::logic_error);
}

TEST_CASE("equal_up_to_global_phase") {
    Rng rng(42);
    GeneratorConfig cfg;
    cfg.num_qubits = 2;
    cfg.num_slots = 0;
    cfg.clifford_depth = 8;
    cfg.seed = rng.next_u64();
    Mat u = oracle::dense_of_gates(2, generate_base(cfg).layers[0].gates);
    oracle::DenseUnitary a(2, u);
    oracle::DenseUnitary b(2, std::exp(std::complex<double>(0, M_PI / 7)) * u);
    REQUIRE(oracle::equal_up_to_global_phase(a, b, 1e-9));

    oracle::DenseUnitary id(1, Mat::Identity(2, 2));
    oracle::DenseUnitary z(1, oracle::dense_pauli(single_qubit_pauli(1, 0, Pauli::Z)));
    REQUIRE_FALSE(oracle::equal_up_to_global_phase(id, z, 1e-9));

    Mat h = oracle::dense_of_gates(1, {{GateKind::H, 0}});
    Mat zm = oracle::dense_pauli(single_qubit_pauli(1, 0, Pauli::Z));
    Mat xm = oracle::dense_pauli(single_qubit_pauli(1, 0, Pauli::X));
    REQUIRE(oracle::equal_up_to_global_phase(oracle::DenseUnitary(1, h * zm), oracle::DenseUnitary(1, xm * h),
                                             1e-9));

    REQUIRE_THROWS_AS(oracle::equal_up_to_global_phase(id, a, 1e-9), std::invalid_argument);

    // Disjoint supports: u is zero at v's pivot; the distance must stay
    // finite and clearly nonzero, never NaN.
    oracle::DenseUnitary x(1, oracle::dense_pauli(single_qubit_pauli(1, 0, Pauli::X)));
    double d = oracle::phase_aligned_distance(id, x);
    REQUIRE(std::isfinite(d));
    REQUIRE(d > 1.0);
    REQUIRE_FALSE(oracle::equal_up_to_global_phase(id, x, 1e-9));
}

TEST_CASE("pauli_expansion_check") {
    SECTION("a Hadamard-valued slot") {
        auto c = one_slot_circuit(1, 0, {}, {});
        oracle::SlotAssignment a;
        a.set(1, oracle::dense_detail::h_matrix());
        REQUIRE(oracle::pauli_expansion_check(c, a) < 1e-10);
    }
    SECTION("a Pauli-valued slot expands to a single term") {
        auto c = one_slot_circuit(1, 0, {}, {});
        oracle::SlotAssignment a = oracle::SlotAssignment::paulis({Pauli::X});
        REQUIRE(oracle::pauli_expansion_check(c, a) < 1e-12);
    }
    SECTION("random instances inside the guards") {
        Rng rng(43);
        for (int trial = 0; trial < 12; trial++) {
            GeneratorConfig cfg;
            cfg.num_qubits = 1 + rng.below(2);
            cfg.num_slots = 1 + rng.below(2);
            cfg.clifford_depth = 1 + rng.below(6);
            cfg.seed = rng.next_u64();
            CliffordUCircuit c = generate_base(cfg);
            auto a = oracle::SlotAssignment::random(c.num_slots(), rng.next_u64());
            REQUIRE(oracle::pauli_expansion_check(c, a) < 1e-9);
        }
    }
    SECTION("guards are hard errors") {
        GeneratorConfig cfg;
        cfg.num_qubits = 2;
        cfg.num_slots = 7;
        cfg.seed = 1;
        CliffordUCircuit c = generate_base(cfg);
        auto a = oracle::SlotAssignment::random(7, 2);
        REQUIRE_THROWS_WITH(oracle::pauli_expansion_check(c, a), Catch::Matchers::ContainsSubstring("4^m"));

        cfg.num_qubits = 7;
        cfg.num_slots = 1;
        CliffordUCircuit big = generate_base(cfg);
        auto a1 = oracle::SlotAssignment::random(1, 2);
        REQUIRE_THROWS_WITH(oracle::pauli_expansion_check(big, a1), Catch::Matchers::ContainsSubstring("guard"));
    }
}

TEST_CASE("from_circuit_angles reads concrete slots") {
    CliffordUCircuit c = normalize(parse_qasm("qreg q[1]; rz(0.5) q[0]; rx(0.25) q[0];"));
    REQUIRE(c.num_slots() == 1);
    oracle::SlotAssignment a = oracle::SlotAssignment::from_circuit_angles(c);
    Mat2 expected = oracle::rx_matrix(0.25) * oracle::rz_matrix(0.5);
    REQUIRE((a.at(1) - expected).norm() < 1e-12);

    CliffordUCircuit sym = normalize(parse_qasm("qreg q[1]; rz(theta) q[0];"));
    REQUIRE_THROWS_AS(oracle::SlotAssignment::from_circuit_angles(sym), std::invalid_argument);
}

TEST_CASE("checker verdicts agree with the oracle at n = 6..7") {
    Rng rng(49);
    for (int trial = 0; trial < 12; trial++) {
        GeneratorConfig cfg;
        cfg.num_qubits = 6 + rng.below(2);
        cfg.num_slots = 1 + rng.below(5);
        cfg.clifford_depth = 1 + rng.below(10);
        cfg.seed = rng.next_u64();
        CliffordUCircuit f = generate_base(cfg);
        CliffordUCircuit g;
        switch (trial % 3) {
            case 0: g = derive_equivalent(f, rng.next_u64()); break;
            case 1: g = inject_pauli_error(derive_equivalent(f, rng.next_u64()), rng.next_u64()).first; break;
            default: g = generate_independent(cfg); break;
        }
        Verdict v = check_equivalence(f, g);
        auto a = oracle::SlotAssignment::random(f.num_slots(), rng.next_u64());
        double dist = oracle::phase_aligned_distance(oracle::evaluate(f, a), oracle::evaluate(g, a));
        if (v.outcome == Outcome::EquivalentAllParams) {
            REQUIRE(dist < 1e-9);
        } else {
            REQUIRE(dist > 1e-6);
        }
    }
}

TEST_CASE("random tableaux conjugate exactly like their dense counterparts") {
    Rng rng(44);
    const Pauli kAll[] = {Pauli::I, Pauli::X, Pauli::Y, Pauli::Z};
    for (int trial = 0; trial < 100; trial++) {
        uint32_t n = 1 + rng.below(3);
        GeneratorConfig cfg;
        cfg.num_qubits = n;
        cfg.num_slots = 0;
        cfg.clifford_depth = 1 + rng.below(20);
        cfg.seed = rng.next_u64();
        auto gates = generate_base(cfg).layers[0].gates;
        CliffordTableau t = tableau_of_gates(n, gates);
        Mat u = oracle::dense_of_gates(n, gates);
        PauliString p(n);
        for (uint32_t q = 0; q < n; q++) {
            p.set_pauli(q, kAll[rng.below(4)]);
        }
        p.sign = rng.coin();
        REQUIRE((u * oracle::dense_pauli(p) * u.adjoint() - oracle::dense_pauli(conjugate(t, p))).norm() < 1e-9);
    }
}
