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

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "cliffordu/bench.hpp"
#include "cliffordu/generator.hpp"
#include "cliffordu/oracle.hpp"
#include "cliffordu/qasm.hpp"
#include "cliffordu/report.hpp"

using namespace cliffordu;

namespace {

// Exit codes: 0 equivalent, 1 not equivalent, 2 inconclusive, 3 error
// (CLI11 usage errors are >= 100).
constexpr int kExitError = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write '" + path + "'");
    }
    out << content;
}

CliffordUCircuit load_circuit(const std::string& path, FusePolicy fuse, bool admit_t) {
    QasmOptions opt;
    opt.admit_t_gates = admit_t;
    return normalize(parse_qasm(read_file(path), opt), fuse);
}

std::string describe_witness(const Witness& w) {
    std::ostringstream os;
    if (const auto* sc = std::get_if<SlotCountWitness>(&w)) {
        os << "slot counts differ: " << sc->lhs_slots << " vs " << sc->rhs_slots;
    } else if (const auto* col = std::get_if<ColumnWitness>(&w)) {
        os << "decision-matrix column " << col->column_index + 1 << " differs: " << col->lhs_column << " vs "
           << col->rhs_column;
    } else if (const auto* tr = std::get_if<TranspositionWitness>(&w)) {
        os << "reordered slots " << tr->slot_r + 1 << " and " << tr->slot_r2 + 1 << " do not commute: <"
           << pauli_to_char(tr->pauli_r) << " column " << tr->column_r << ", " << pauli_to_char(tr->pauli_r2)
           << " column " << tr->column_r2 << "> = 1";
    } else if (const auto* bb = std::get_if<BackboneWitness>(&w)) {
        os << "backbone generator " << bb->generator_index + 1 << " differs: " << bb->lhs_image << " vs "
           << bb->rhs_image;
    }
    return os.str();
}

int run_check(const std::string& path_a, const std::string& path_b, const std::string& perm_path,
              const std::string& mode_name, const std::string& json_path, bool fuse_off, bool admit_t) {
    FusePolicy fuse = fuse_off ? FusePolicy::Off : FusePolicy::On;
    CliffordUCircuit a = load_circuit(path_a, fuse, admit_t);
    CliffordUCircuit b = load_circuit(path_b, fuse, admit_t);
    CheckMode mode = mode_name == "fixed" ? CheckMode::FixedInstance : CheckMode::AllParams;

    Verdict v;
    if (!perm_path.empty()) {
        v = check_equivalence_permuted(a, b, parse_permutation_text(read_file(perm_path)), mode);
    } else {
        v = check_equivalence(a, b, mode);
    }

    switch (v.outcome) {
        case Outcome::EquivalentAllParams:
            if (mode == CheckMode::FixedInstance) {
                std::cout << "equivalent (sound certificate; holds for these and all other slot angles)\n";
            } else {
                std::cout << "equivalent for every assignment of the slot unitaries\n";
            }
            break;
        case Outcome::NotEquivalent:
            std::cout << "not equivalent: " << (v.witness ? describe_witness(*v.witness) : "") << "\n";
            break;
        case Outcome::Inconclusive:
            std::cout << "inconclusive: structural check failed on fixed-angle circuits"
                      << (v.witness ? " (" + describe_witness(*v.witness) + ")" : "") << "\n";
            break;
    }
    std::cout << "columns compared: " << v.stats.columns_compared << ", wall time: " << v.stats.wall_time_ns
              << " ns\n";

    if (!json_path.empty()) {
        write_file(json_path,
                   check_report_json(v, a.num_qubits, a.num_slots(), mode_name).dump(2) + "\n");
    }
    switch (v.outcome) {
        case Outcome::EquivalentAllParams: return 0;
        case Outcome::NotEquivalent: return 1;
        case Outcome::Inconclusive: return 2;
    }
    return kExitError;
}

int run_gen(const std::string& kind, uint32_t n, uint32_t m, uint32_t depth, const std::vector<double>& mix,
            uint64_t seed, const std::string& out_path) {
    GeneratorConfig cfg;
    cfg.num_qubits = n;
    cfg.num_slots = m;
    cfg.clifford_depth = depth;
    if (!mix.empty()) {
        if (mix.size() != 3) {
            throw std::runtime_error("--mix needs exactly three fractions (cnot,h,s)");
        }
        cfg.gate_mix = {mix[0], mix[1], mix[2]};
    }
    cfg.seed = seed;

    CliffordUCircuit c;
    if (kind == "base") {
        c = generate_base(cfg);
    } else if (kind == "equivalent") {
        c = derive_equivalent(generate_base(cfg), rng_detail::splitmix64(seed ^ 0x65717569));
    } else if (kind == "error") {
        CliffordUCircuit eq = derive_equivalent(generate_base(cfg), rng_detail::splitmix64(seed ^ 0x65717569));
        auto [bad, site] = inject_pauli_error(eq, rng_detail::splitmix64(seed ^ 0x657272));
        std::cerr << "injected " << gate_kind_name(site.kind) << " on qubit " << site.qubit + 1 << " at the end of layer "
                  << site.layer << "\n";
        c = std::move(bad);
    } else if (kind == "independent") {
        c = generate_independent(cfg);
    } else {
        throw std::runtime_error("unknown --kind '" + kind + "'");
    }
    write_file(out_path, emit_qasm(c));
    return 0;
}

int run_bench(const std::string& sweep_path, const std::string& report_path) {
    SweepSpec spec = sweep_spec_from_json(nlohmann::json::parse(read_file(sweep_path)));
    BenchReport report = run_scaling_bench(spec);
    write_file(report_path, bench_report_to_json(report).dump(2) + "\n");
    std::cout << report.records.size() << " measurement points written to " << report_path << "\n";
    if (report.m_slope) {
        std::cout << "m-sweep log-log slope: " << *report.m_slope << "\n";
    }
    if (report.n_slope) {
        std::cout << "n-sweep log-log slope: " << *report.n_slope << "\n";
    }
    return 0;
}

int run_oracle_check(const std::string& path_a, const std::string& path_b, uint64_t angle_seed, uint32_t trials,
                     bool fuse_off, bool admit_t) {
    FusePolicy fuse = fuse_off ? FusePolicy::Off : FusePolicy::On;
    CliffordUCircuit a = load_circuit(path_a, fuse, admit_t);
    CliffordUCircuit b = load_circuit(path_b, fuse, admit_t);
    if (a.num_slots() != b.num_slots()) {
        throw std::runtime_error("circuits have different slot counts (" + std::to_string(a.num_slots()) + " vs " +
                                 std::to_string(b.num_slots()) + "); the oracle shares angles by slot label");
    }
    bool all_equal = true;
    for (uint32_t t = 0; t < trials; t++) {
        auto assignment = oracle::SlotAssignment::random(a.num_slots(), angle_seed + t);
        double dist =
            oracle::phase_aligned_distance(oracle::evaluate(a, assignment), oracle::evaluate(b, assignment));
        std::cout << "assignment " << t + 1 << ": phase-aligned distance " << dist << "\n";
        all_equal = all_equal && dist < 1e-9;
    }
    std::cout << (all_equal ? "dense evaluation agrees at every sampled assignment\n"
                            : "dense evaluation differs\n");
    return all_equal ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cliffordu: equivalence checking for circuits of Clifford layers and shared single-qubit unitaries"};
    app.require_subcommand(1);

    // check
    std::string check_a, check_b, check_perm, check_mode = "all", check_json;
    bool check_fuse_off = false, check_admit_t = false;
    auto* check = app.add_subcommand("check", "decide equivalence of two .qasm circuits");
    check->add_option("A", check_a, "first circuit (.qasm)")->required();
    check->add_option("B", check_b, "second circuit (.qasm)")->required();
    check->add_option("--perm", check_perm, "slot permutation map file (\"i -> j\" lines or JSON array)");
    check->add_option("--mode", check_mode, "all: for every slot assignment; fixed: sound heuristic for concrete angles")
        ->check(CLI::IsMember({"all", "fixed"}));
    check->add_option("--json", check_json, "write a JSON report here");
    check->add_flag("--no-fuse", check_fuse_off, "keep each parametric gate as its own slot");
    check->add_flag("--admit-t", check_admit_t, "accept t/tdg as fixed-angle slots");

    // gen
    std::string gen_kind = "base", gen_out;
    uint32_t gen_n = 5, gen_m = 10, gen_depth = 10;
    std::vector<double> gen_mix;
    uint64_t gen_seed = 0;
    auto* gen = app.add_subcommand("gen", "generate benchmark instances");
    gen->add_option("--kind", gen_kind, "base | equivalent | error | independent")
        ->check(CLI::IsMember({"base", "equivalent", "error", "independent"}));
    gen->add_option("--n", gen_n, "qubits")->required();
    gen->add_option("--m", gen_m, "slots")->required();
    gen->add_option("--depth", gen_depth, "gates per Clifford layer (default 10)");
    gen->add_option("--mix", gen_mix, "cnot,h,s fractions (default 0.2 0.4 0.4)")->expected(3);
    gen->add_option("--seed", gen_seed, "64-bit seed")->required();
    gen->add_option("--out", gen_out, "output .qasm path")->required();

    // bench
    std::string bench_sweep, bench_report;
    auto* bench = app.add_subcommand("bench", "run the scaling harness");
    bench->add_option("--sweep", bench_sweep, "sweep spec JSON")->required();
    bench->add_option("--report", bench_report, "report JSON output path")->required();

    // oracle check
    std::string oracle_a, oracle_b;
    uint64_t oracle_seed = 0;
    uint32_t oracle_trials = 3;
    bool oracle_fuse_off = false, oracle_admit_t = false;
    auto* orc = app.add_subcommand("oracle", "dense-matrix debugging utilities");
    auto* orc_check = orc->add_subcommand("check", "compare two circuits at random slot angles (n <= 12)");
    orc_check->add_option("A", oracle_a, "first circuit (.qasm)")->required();
    orc_check->add_option("B", oracle_b, "second circuit (.qasm)")->required();
    orc_check->add_option("--angles", oracle_seed, "seed for the random angle assignments")->required();
    orc_check->add_option("--trials", oracle_trials, "number of assignments (default 3)");
    orc_check->add_flag("--no-fuse", oracle_fuse_off, "keep each parametric gate as its own slot");
    orc_check->add_flag("--admit-t", oracle_admit_t, "accept t/tdg as fixed-angle slots");
    orc->require_subcommand(1);

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) {
            return run_check(check_a, check_b, check_perm, check_mode, check_json, check_fuse_off, check_admit_t);
        }
        if (gen->parsed()) {
            return run_gen(gen_kind, gen_n, gen_m, gen_depth, gen_mix, gen_seed, gen_out);
        }
        if (bench->parsed()) {
            return run_bench(bench_sweep, bench_report);
        }
        if (orc->parsed()) {
            return run_oracle_check(oracle_a, oracle_b, oracle_seed, oracle_trials, oracle_fuse_off, oracle_admit_t);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
