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

#include <cctype>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>

#include "cliffordu/circuit.hpp"

namespace cliffordu {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg), line(line) {}
};

struct QasmOptions {
    /// When set, t/tdg parse as fixed-angle slots (u1(pi/4) / u1(-pi/4));
    /// by default they are rejected as unsupported gates.
    bool admit_t_gates = false;
};

namespace qasm_detail {

// Minimal arithmetic over angle text: numbers, pi, + - * /, parentheses,
// unary sign. Anything else (free symbols like "theta") yields nullopt and
// the angle stays symbolic.
class ExprEval {
  public:
    explicit ExprEval(std::string_view s) : s_(s) {}

    std::optional<double> run() {
        auto v = expr();
        skip_ws();
        if (!v || pos_ != s_.size()) {
            return std::nullopt;
        }
        return v;
    }

  private:
    std::string_view s_;
    size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) pos_++;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            pos_++;
            return true;
        }
        return false;
    }

    std::optional<double> expr() {
        auto v = term();
        while (v) {
            if (eat('+')) {
                auto r = term();
                if (!r) return std::nullopt;
                v = *v + *r;
            } else if (eat('-')) {
                auto r = term();
                if (!r) return std::nullopt;
                v = *v - *r;
            } else {
                break;
            }
        }
        return v;
    }

    std::optional<double> term() {
        auto v = factor();
        while (v) {
            if (eat('*')) {
                auto r = factor();
                if (!r) return std::nullopt;
                v = *v * *r;
            } else if (eat('/')) {
                auto r = factor();
                if (!r || *r == 0.0) return std::nullopt;
                v = *v / *r;
            } else {
                break;
            }
        }
        return v;
    }

    std::optional<double> factor() {
        skip_ws();
        if (eat('-')) {
            auto v = factor();
            if (!v) return std::nullopt;
            return -*v;
        }
        if (eat('+')) {
            return factor();
        }
        if (eat('(')) {
            auto v = expr();
            if (!v || !eat(')')) return std::nullopt;
            return v;
        }
        if (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) {
            size_t end;
            double v;
            try {
                v = std::stod(std::string(s_.substr(pos_)), &end);
            } catch (const std::exception&) {
                return std::nullopt;
            }
            pos_ += end;
            return v;
        }
        if (s_.substr(pos_, 2) == "pi" || s_.substr(pos_, 2) == "PI") {
            pos_ += 2;
            return M_PI;
        }
        return std::nullopt;
    }
};

inline AngleExpr make_angle(std::string text) {
    // Trim surrounding whitespace so round-tripped text stays tidy.
    size_t a = text.find_first_not_of(" \t\r\n");
    size_t b = text.find_last_not_of(" \t\r\n");
    std::string trimmed = a == std::string::npos ? std::string() : text.substr(a, b - a + 1);
    return AngleExpr{trimmed, ExprEval(trimmed).run()};
}

struct Cursor {
    std::string_view text;
    size_t pos = 0;
    int line = 1;

    bool done() {
        skip();
        return pos >= text.size();
    }

    void skip() {
        while (pos < text.size()) {
            char c = text[pos];
            if (c == '\n') {
                line++;
                pos++;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                pos++;
            } else if (c == '/' && pos + 1 < text.size() && text[pos + 1] == '/') {
                while (pos < text.size() && text[pos] != '\n') pos++;
            } else {
                break;
            }
        }
    }

    char peek() {
        skip();
        return pos < text.size() ? text[pos] : '\0';
    }

    bool eat(char c) {
        if (peek() == c) {
            pos++;
            return true;
        }
        return false;
    }

    void expect(char c, const char* what) {
        if (!eat(c)) {
            throw ParseError(line, std::string("expected '") + c + "' " + what);
        }
    }

    std::string ident() {
        skip();
        size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
            pos++;
        }
        return std::string(text.substr(start, pos - start));
    }

    uint64_t integer() {
        skip();
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
            throw ParseError(line, "expected an integer");
        }
        uint64_t v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + (text[pos] - '0');
            pos++;
        }
        return v;
    }

    // Raw text up to the matching ')' or a top-level ','.
    std::string balanced_arg() {
        skip();
        std::string out;
        int depth = 0;
        while (pos < text.size()) {
            char c = text[pos];
            if (c == '(') depth++;
            if (c == ')') {
                if (depth == 0) break;
                depth--;
            }
            if (c == ',' && depth == 0) break;
            if (c == '\n') line++;
            out.push_back(c);
            pos++;
        }
        return out;
    }
};

inline std::optional<GateKind> clifford_gate_by_name(const std::string& name) {
    if (name == "h") return GateKind::H;
    if (name == "s") return GateKind::S;
    if (name == "sdg") return GateKind::S_DAGGER;
    if (name == "x") return GateKind::X;
    if (name == "y") return GateKind::Y;
    if (name == "z") return GateKind::Z;
    if (name == "cx") return GateKind::CNOT;
    if (name == "cz") return GateKind::CZ;
    if (name == "swap") return GateKind::SWAP;
    return std::nullopt;
}

inline bool is_opaque_slot_name(const std::string& name) {
    if (name.rfind("param_u", 0) != 0 || name.size() == 7) {
        return false;
    }
    for (size_t i = 7; i < name.size(); i++) {
        if (!std::isdigit(static_cast<unsigned char>(name[i]))) {
            return false;
        }
    }
    return true;
}

}  // namespace qasm_detail

/// Parses the supported OpenQASM 2.0 subset: one quantum register; Clifford
/// gates h, s, sdg, x, y, z, cx, cz, swap; parametric gates rx, ry, rz, u1,
/// u3 (symbolic or numeric angles) and opaque param_u<k> markers. Comments
/// and include lines are ignored. Errors carry the offending line.
inline RawCircuit parse_qasm(std::string_view text, const QasmOptions& options = {}) {
    using namespace qasm_detail;
    Cursor cur{text};
    RawCircuit out;
    std::string reg_name;
    bool have_reg = false;

    while (!cur.done()) {
        int stmt_line = cur.line;
        std::string word = cur.ident();
        if (word.empty()) {
            throw ParseError(cur.line, "unexpected character '" + std::string(1, cur.peek()) + "'");
        }
        if (word == "OPENQASM") {
            cur.skip();
            while (cur.peek() != ';' && !cur.done()) cur.pos++;
            cur.expect(';', "after OPENQASM version");
            continue;
        }
        if (word == "include") {
            while (cur.peek() != ';' && !cur.done()) cur.pos++;
            cur.expect(';', "after include");
            continue;
        }
        if (word == "qreg") {
            if (have_reg) {
                throw ParseError(stmt_line, "unsupported feature: multiple quantum registers");
            }
            reg_name = cur.ident();
            if (reg_name.empty()) {
                throw ParseError(cur.line, "expected register name");
            }
            cur.expect('[', "in qreg declaration");
            uint64_t n = cur.integer();
            cur.expect(']', "in qreg declaration");
            cur.expect(';', "after qreg declaration");
            if (n == 0) {
                throw ParseError(stmt_line, "quantum register must have at least one qubit");
            }
            out.num_qubits = static_cast<uint32_t>(n);
            have_reg = true;
            continue;
        }
        if (word == "creg" || word == "measure" || word == "barrier" || word == "reset" || word == "gate" ||
            word == "opaque" || word == "if") {
            throw ParseError(stmt_line, "unsupported feature: '" + word + "'");
        }

        // Gate application.
        if (!have_reg) {
            throw ParseError(stmt_line, "gate '" + word + "' before qreg declaration");
        }
        std::vector<AngleExpr> params;
        if (cur.eat('(')) {
            while (true) {
                AngleExpr angle = make_angle(cur.balanced_arg());
                if (angle.text.empty()) {
                    throw ParseError(cur.line, "empty gate parameter");
                }
                params.push_back(std::move(angle));
                if (cur.eat(',')) continue;
                cur.expect(')', "after gate parameters");
                break;
            }
        }
        auto operand = [&]() -> uint32_t {
            std::string rn = cur.ident();
            if (rn != reg_name) {
                throw ParseError(cur.line, "unknown register '" + rn + "'");
            }
            cur.expect('[', "in operand");
            uint64_t idx = cur.integer();
            cur.expect(']', "in operand");
            if (idx >= out.num_qubits) {
                throw ParseError(cur.line, "qubit index " + std::to_string(idx) + " out of range (register has " +
                                               std::to_string(out.num_qubits) + " qubits)");
            }
            return static_cast<uint32_t>(idx);
        };

        std::string name = word;
        if (options.admit_t_gates && (name == "t" || name == "tdg")) {
            // t = u1(pi/4) and tdg = u1(-pi/4), exactly.
            params = {make_angle(name == "t" ? "pi/4" : "-pi/4")};
            name = "u1";
        }

        if (auto kind = clifford_gate_by_name(name)) {
            if (!params.empty()) {
                throw ParseError(stmt_line, "gate '" + name + "' takes no parameters");
            }
            uint32_t a = operand();
            if (gate_is_two_qubit(*kind)) {
                cur.expect(',', "between operands");
                uint32_t b = operand();
                if (a == b) {
                    throw ParseError(stmt_line, "gate '" + name + "' needs two distinct qubits");
                }
                out.ops.emplace_back(CliffordGate(*kind, a, b));
            } else {
                out.ops.emplace_back(CliffordGate(*kind, a));
            }
            cur.expect(';', "after gate");
            continue;
        }

        size_t want_params = 0;
        bool parametric = false;
        if (name == "rx" || name == "ry" || name == "rz" || name == "u1") {
            parametric = true;
            want_params = 1;
        } else if (name == "u3") {
            parametric = true;
            want_params = 3;
        } else if (is_opaque_slot_name(name)) {
            parametric = true;
            want_params = 0;
        }
        if (!parametric) {
            throw ParseError(stmt_line, "unsupported gate '" + name + "'");
        }
        if (params.size() != want_params) {
            throw ParseError(stmt_line, "gate '" + name + "' expects " + std::to_string(want_params) +
                                            " parameter(s), got " + std::to_string(params.size()));
        }
        ParametricGate g;
        g.name = name;
        g.params = std::move(params);
        g.qubit = operand();
        cur.expect(';', "after gate");
        out.ops.emplace_back(std::move(g));
    }

    if (!have_reg) {
        throw ParseError(cur.line, "missing qreg declaration");
    }
    return out;
}

/// Writes a circuit back out. Clifford layers are emitted from their stored
/// gate lists; slots become opaque one-qubit gates named param_u<label>
/// unless `slot_names` overrides a label. The output re-parses to a circuit
/// that normalizes back to `c` (slot-for-slot, layer tableaux equal).
inline std::string emit_qasm(const CliffordUCircuit& c,
                             const std::map<uint32_t, std::string>& slot_names = {}) {
    std::ostringstream out;
    out << "OPENQASM 2.0;\n";
    out << "include \"qelib1.inc\";\n";
    out << "qreg q[" << c.num_qubits << "];\n";
    auto emit_layer = [&](const CliffordLayer& layer) {
        for (const auto& g : layer.gates) {
            out << gate_kind_name(g.kind) << " q[" << g.q0 << "]";
            if (gate_is_two_qubit(g.kind)) {
                out << ",q[" << g.q1 << "]";
            }
            out << ";\n";
        }
    };
    for (size_t i = 0; i < c.slots.size(); i++) {
        emit_layer(c.layers[i]);
        const Slot& s = c.slots[i];
        auto it = slot_names.find(s.label);
        std::string name = it != slot_names.end() ? it->second : "param_u" + std::to_string(s.label);
        out << name << " q[" << s.qubit << "];\n";
    }
    emit_layer(c.layers.back());
    return out.str();
}

}  // namespace cliffordu
