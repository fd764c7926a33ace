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

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace cliffordu {

/// Fixed-width vector over F2, packed 64 bits per word. Bits beyond
/// `num_bits` in the last word are kept zero at all times.
struct BitVec {
    uint64_t num_bits = 0;
    std::vector<uint64_t> words;

    BitVec() = default;
    explicit BitVec(uint64_t num_bits) : num_bits(num_bits), words((num_bits + 63) / 64, 0) {}

    static constexpr uint64_t word_bits = 64;

    bool get(uint64_t i) const {
        return (words[i >> 6] >> (i & 63)) & 1;
    }

    void set(uint64_t i, bool v) {
        uint64_t& w = words[i >> 6];
        w = (w & ~(uint64_t{1} << (i & 63))) | (uint64_t{v} << (i & 63));
    }

    void toggle(uint64_t i) {
        words[i >> 6] ^= uint64_t{1} << (i & 63);
    }

    void clear() {
        for (auto& w : words) {
            w = 0;
        }
    }

    uint64_t popcount() const {
        uint64_t total = 0;
        for (uint64_t w : words) {
            total += std::popcount(w);
        }
        return total;
    }

    bool any() const {
        for (uint64_t w : words) {
            if (w) {
                return true;
            }
        }
        return false;
    }

    BitVec& operator^=(const BitVec& other) {
        if (num_bits != other.num_bits) {
            throw std::invalid_argument("BitVec xor: mismatched widths");
        }
        for (size_t i = 0; i < words.size(); i++) {
            words[i] ^= other.words[i];
        }
        return *this;
    }

    bool operator==(const BitVec& other) const = default;
};

}  // namespace cliffordu
