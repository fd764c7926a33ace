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

// JSON report schema (version 1) and the slot-permutation file format.
// All indices in serialized output are 1-based; the C++ API is 0-based.

#include <json.hpp>
#include <sstream>
#include <string>

#include "cliffordu/bench.hpp"
#include "cliffordu/decision.hpp"

namespace cliffordu {

inline constexpr int kReportSchemaVersion = 1;
inline constexpr const char* kToolVersion = "0.1.0";

inline nlohmann::json witness_to_json(const Witness& w) {
    using nlohmann::json;
    json out;
    if (const auto* sc = std::get_if<SlotCountWitness>(&w)) {
        out["kind"] = "slot_count_mismatch";
        out["lhs_slots"] = sc->lhs_slots;
        out["rhs_slots"] = sc->rhs_slots;
    } else if (const auto* col = std::get_if<ColumnWitness>(&w)) {
        out["kind"] = "decision_column";
        out["column_index"] = col->column_index + 1;
        out["lhs_column"] = col->lhs_column;
        out["rhs_column"] = col->rhs_column;
    } else if (const auto* tr = std::get_if<TranspositionWitness>(&w)) {
        out["kind"] = "transposition_pair";
        out["slot_r"] = tr->slot_r + 1;
        out["slot_r2"] = tr->slot_r2 + 1;
        out["pauli_r"] = std::string(1, pauli_to_char(tr->pauli_r));
        out["pauli_r2"] = std::string(1, pauli_to_char(tr->pauli_r2));
        out["column_r"] = tr->column_r;
        out["column_r2"] = tr->column_r2;
        out["inner_product"] = 1;
    } else if (const auto* bb = std::get_if<BackboneWitness>(&w)) {
        out["kind"] = "backbone_generator";
        out["generator_index"] = bb->generator_index + 1;  // Z images 1..n, then X images
        out["lhs_image"] = bb->lhs_image;
        out["rhs_image"] = bb->rhs_image;
    }
    return out;
}

inline nlohmann::json verdict_to_json(const Verdict& v) {
    nlohmann::json out;
    out["outcome"] = outcome_name(v.outcome);
    out["witness"] = v.witness ? witness_to_json(*v.witness) : nlohmann::json(nullptr);
    out["stats"] = {{"columns_compared", v.stats.columns_compared}, {"wall_time_ns", v.stats.wall_time_ns}};
    return out;
}

inline nlohmann::json environment_fingerprint() {
    nlohmann::json env;
    env["tool_version"] = kToolVersion;
#if defined(__clang__)
    env["compiler"] = "clang " + std::to_string(__clang_major__) + "." + std::to_string(__clang_minor__);
#elif defined(__GNUC__)
    env["compiler"] = "gcc " + std::to_string(__GNUC__) + "." + std::to_string(__GNUC_MINOR__);
#else
    env["compiler"] = "unknown";
#endif
    env["pointer_bits"] = sizeof(void*) * 8;
#ifdef NDEBUG
    env["assertions"] = false;
#else
    env["assertions"] = true;
#endif
    return env;
}

/// The full `check` report written by the CLI.
inline nlohmann::json check_report_json(const Verdict& v, uint32_t num_qubits, uint32_t num_slots,
                                        const std::string& mode) {
    nlohmann::json out = verdict_to_json(v);
    out["schema_version"] = kReportSchemaVersion;
    out["mode"] = mode;
    out["num_qubits"] = num_qubits;
    out["num_slots"] = num_slots;
    out["environment"] = environment_fingerprint();
    return out;
}

inline nlohmann::json bench_report_to_json(const BenchReport& r) {
    nlohmann::json out;
    out["schema_version"] = kReportSchemaVersion;
    out["environment"] = environment_fingerprint();
    out["records"] = nlohmann::json::array();
    for (const auto& rec : r.records) {
        out["records"].push_back({{"sweep", rec.sweep},
                                  {"n", rec.num_qubits},
                                  {"m", rec.num_slots},
                                  {"depth", rec.depth},
                                  {"seed", rec.seed},
                                  {"outcome", rec.outcome},
                                  {"columns_compared", rec.columns_compared},
                                  {"median_wall_time_ns", rec.median_wall_time_ns},
                                  {"rep_times_ns", rec.rep_times_ns}});
    }
    out["m_slope"] = r.m_slope ? nlohmann::json(*r.m_slope) : nlohmann::json(nullptr);
    out["n_slope"] = r.n_slope ? nlohmann::json(*r.n_slope) : nlohmann::json(nullptr);
    return out;
}

/// Sweep spec, e.g.
///   {"reps": 5, "seed": 1,
///    "m_sweep": {"n": 50, "depth": 10, "m": [100, 200, 400]},
///    "n_sweep": {"m": 100, "depth": 10, "n": [64, 128, 256]}}
inline SweepSpec sweep_spec_from_json(const nlohmann::json& j) {
    SweepSpec spec;
    spec.reps = j.value("reps", 5u);
    spec.seed = j.value("seed", uint64_t{0});
    if (j.contains("m_sweep")) {
        Sweep s;
        s.fixed = j["m_sweep"].at("n").get<uint32_t>();
        s.depth = j["m_sweep"].value("depth", 10u);
        s.values = j["m_sweep"].at("m").get<std::vector<uint32_t>>();
        spec.m_sweep = std::move(s);
    }
    if (j.contains("n_sweep")) {
        Sweep s;
        s.fixed = j["n_sweep"].at("m").get<uint32_t>();
        s.depth = j["n_sweep"].value("depth", 10u);
        s.values = j["n_sweep"].at("n").get<std::vector<uint32_t>>();
        spec.n_sweep = std::move(s);
    }
    return spec;
}

/// Slot-permutation map: either a JSON array [sigma(1), ..., sigma(m)]
/// (1-based labels), or plain text with one "i -> j" line per pair meaning
/// sigma(j) = i, i.e. slot i of the first circuit sits at position j of the
/// second.
inline SlotPermutation parse_permutation_text(const std::string& text) {
    size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) {
        throw std::invalid_argument("permutation map: empty input");
    }
    std::vector<uint32_t> sigma_1based;
    if (text[first] == '[') {
        auto j = nlohmann::json::parse(text);
        sigma_1based = j.get<std::vector<uint32_t>>();
    } else {
        std::istringstream in(text);
        std::string line;
        std::vector<std::pair<uint32_t, uint32_t>> pairs;  // (i, j)
        while (std::getline(in, line)) {
            size_t a = line.find_first_not_of(" \t\r");
            if (a == std::string::npos || line.compare(a, 2, "//") == 0 || line[a] == '#') {
                continue;
            }
            size_t arrow = line.find("->");
            if (arrow == std::string::npos) {
                throw std::invalid_argument("permutation map: expected \"i -> j\", got \"" + line + "\"");
            }
            uint32_t i = static_cast<uint32_t>(std::stoul(line.substr(0, arrow)));
            uint32_t j = static_cast<uint32_t>(std::stoul(line.substr(arrow + 2)));
            pairs.emplace_back(i, j);
        }
        sigma_1based.assign(pairs.size(), 0);
        for (auto [i, j] : pairs) {
            if (j == 0 || j > pairs.size() || sigma_1based[j - 1] != 0) {
                throw std::invalid_argument("permutation map: positions must cover 1.." +
                                            std::to_string(pairs.size()) + " exactly once");
            }
            sigma_1based[j - 1] = i;
        }
    }
    std::vector<uint32_t> sigma(sigma_1based.size());
    for (size_t j = 0; j < sigma.size(); j++) {
        if (sigma_1based[j] == 0 || sigma_1based[j] > sigma.size()) {
            throw std::invalid_argument("permutation map: labels must lie in 1.." + std::to_string(sigma.size()));
        }
        sigma[j] = sigma_1based[j] - 1;
    }
    return SlotPermutation::from_sigma(std::move(sigma));
}

}  // namespace cliffordu
