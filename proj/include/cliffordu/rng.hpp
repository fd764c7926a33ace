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
#include <random>
#include <string_view>

namespace cliffordu {

namespace rng_detail {

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline uint64_t fnv1a(std::string_view s) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : s) {
        h ^= static_cast<uint8_t>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace rng_detail

/// Seedable generator with named substreams. Substream `tag` of a seed is
/// mt19937_64 seeded with splitmix64(seed ^ fnv1a(tag)), so e.g. layer
/// content and slot wires never share a stream. Bounded draws avoid
/// std::uniform_int_distribution to keep instances byte-reproducible
/// across standard libraries.
struct Rng {
    std::mt19937_64 engine;

    explicit Rng(uint64_t seed) : engine(seed) {}

    static Rng stream(uint64_t seed, std::string_view tag) {
        return Rng(rng_detail::splitmix64(seed ^ rng_detail::fnv1a(tag)));
    }

    uint64_t next_u64() {
        return engine();
    }

    /// Uniform in [0, bound). Lemire multiply-shift with rejection.
    uint64_t below(uint64_t bound) {
        while (true) {
            uint64_t x = next_u64();
            __uint128_t m = static_cast<__uint128_t>(x) * bound;
            uint64_t low = static_cast<uint64_t>(m);
            if (low >= bound || low >= (-bound) % bound) {
                return static_cast<uint64_t>(m >> 64);
            }
        }
    }

    /// Uniform in [0, 1) with 53 random bits.
    double uniform01() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    bool coin() {
        return next_u64() & 1;
    }
};

}  // namespace cliffordu
