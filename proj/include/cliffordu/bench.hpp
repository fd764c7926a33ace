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
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cliffordu/decision.hpp"
#include "cliffordu/generator.hpp"

namespace cliffordu {

/// One sweep axis: hold everything fixed except the swept parameter.
struct Sweep {
    std::vector<uint32_t> values;  // swept m (or n) values
    uint32_t fixed = 0;            // the other parameter
    uint32_t depth = 10;
};

struct SweepSpec {
    std::optional<Sweep> m_sweep;  // values = slot counts, fixed = qubit count
    std::optional<Sweep> n_sweep;  // values = qubit counts, fixed = slot count
    uint32_t reps = 5;
    uint64_t seed = 0;
};

struct BenchRecord {
    std::string sweep;  // "m" or "n"
    uint32_t num_qubits = 0;
    uint32_t num_slots = 0;
    uint32_t depth = 0;
    uint64_t seed = 0;  // regenerates this instance pair exactly
    std::string outcome;
    uint64_t columns_compared = 0;
    uint64_t median_wall_time_ns = 0;
    std::vector<uint64_t> rep_times_ns;
};

struct BenchReport {
    std::vector<BenchRecord> records;
    std::optional<double> m_slope;  // log-log slope of median time vs m
    std::optional<double> n_slope;
};

inline const char* outcome_name(Outcome o) {
    switch (o) {
        case Outcome::EquivalentAllParams: return "equivalent_all_params";
        case Outcome::NotEquivalent: return "not_equivalent";
        case Outcome::Inconclusive: return "inconclusive";
    }
    return "?";
}

namespace bench_detail {

inline double fit_loglog_slope(const std::vector<std::pair<double, double>>& points) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (auto [x, y] : points) {
        double lx = std::log(x);
        double ly = std::log(y);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    double k = static_cast<double>(points.size());
    return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

}  // namespace bench_detail

/// Runs the configured sweeps on equivalent pairs (worst case: every column
/// gets compared), timing check_equivalence only. Per point: one discarded
/// warm-up run, then `reps` measured runs with the repetitions interleaved
/// round-robin across the sweep's points (so load drift cannot bias one end
/// of the fit), median taken. Slopes come from least squares on the log-log
/// points.
inline BenchReport run_scaling_bench(const SweepSpec& spec) {
    BenchReport report;
    uint64_t point_index = 0;
    auto run_axis = [&](const Sweep& sweep, const char* name, bool sweep_is_m) -> double {
        struct Instance {
            CliffordUCircuit base;
            CliffordUCircuit other;
        };
        std::vector<Instance> instances;
        std::vector<BenchRecord> records;
        for (uint32_t value : sweep.values) {
            GeneratorConfig cfg;
            cfg.num_qubits = sweep_is_m ? sweep.fixed : value;
            cfg.num_slots = sweep_is_m ? value : sweep.fixed;
            cfg.clifford_depth = sweep.depth;
            cfg.seed = rng_detail::splitmix64(spec.seed ^ (0xb5ad4eceda1ce2a9ULL + point_index++));
            Instance inst{generate_base(cfg), {}};
            inst.other = derive_equivalent(inst.base, cfg.seed);

            BenchRecord rec;
            rec.sweep = name;
            rec.num_qubits = cfg.num_qubits;
            rec.num_slots = cfg.num_slots;
            rec.depth = cfg.clifford_depth;
            rec.seed = cfg.seed;
            Verdict warmup = check_equivalence(inst.base, inst.other);
            rec.outcome = outcome_name(warmup.outcome);
            rec.columns_compared = warmup.stats.columns_compared;
            records.push_back(std::move(rec));
            instances.push_back(std::move(inst));
        }
        for (uint32_t r = 0; r < spec.reps; r++) {
            for (size_t p = 0; p < instances.size(); p++) {
                Verdict v = check_equivalence(instances[p].base, instances[p].other);
                records[p].rep_times_ns.push_back(v.stats.wall_time_ns);
            }
        }
        std::vector<std::pair<double, double>> points;
        for (size_t p = 0; p < records.size(); p++) {
            std::vector<uint64_t> sorted = records[p].rep_times_ns;
            std::sort(sorted.begin(), sorted.end());
            records[p].median_wall_time_ns = sorted.empty() ? 0 : sorted[sorted.size() / 2];
            points.emplace_back(static_cast<double>(sweep.values[p]),
                                static_cast<double>(records[p].median_wall_time_ns));
            report.records.push_back(std::move(records[p]));
        }
        return points.size() >= 2 ? bench_detail::fit_loglog_slope(points) : 0.0;
    };
    if (spec.m_sweep && !spec.m_sweep->values.empty()) {
        report.m_slope = run_axis(*spec.m_sweep, "m", true);
    }
    if (spec.n_sweep && !spec.n_sweep->values.empty()) {
        report.n_slope = run_axis(*spec.n_sweep, "n", false);
    }
    return report;
}

}  // namespace cliffordu
