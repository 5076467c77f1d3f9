// Copyright 2026 The lindff Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// rng.hpp: splittable deterministic random streams (xoshiro256++ / splitmix64)

#pragma once

#include <cmath>
#include <cstdint>

namespace lindff {

// --------------------------- seed mixing ------------------------------------

// splitmix64 finalizer; bijective on 64-bit words.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D4A769394B9C8Full;
    return z ^ (z >> 31);
}

// Independent stream seed for sample `index` under a master seed. Constant
// time in the index, so parallel ensemble members are order-insensitive.
inline std::uint64_t subseed(std::uint64_t master, std::uint64_t index) {
    return mix64(master ^ mix64(index * 0xA0761D6478BD642Full + 0xE7037ED1A0B428DBull));
}

// ------------------------------ generator -----------------------------------

// xoshiro256++ seeded through splitmix64 expansion of a single 64-bit word.
class Xoshiro256pp {
public:
    using result_type = std::uint64_t;

    explicit Xoshiro256pp(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& word : s_) {
            sm += 0x9E3779B97F4A7C15ull;
            std::uint64_t z = sm;
            z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
            z = (z ^ (z >> 27)) * 0x94D4A769394B9C8Full;
            word = z ^ (z >> 31);
        }
    }

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return ~result_type(0); }

    result_type operator()() {
        const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // Uniform on [0, 1): 53 significant bits.
    double uniform() { return double((*this)() >> 11) * 0x1.0p-53; }

    // Uniform on (0, 1]: safe as a log argument.
    double uniform_pos() { return double(((*this)() >> 11) + 1) * 0x1.0p-53; }

    // Standard normal pair by Box-Muller; one pair per two uniforms.
    void normal_pair(double& a, double& b) {
        const double r = std::sqrt(-2.0 * std::log(uniform_pos()));
        const double phi = 6.283185307179586476925286766559 * uniform();
        a = r * std::cos(phi);
        b = r * std::sin(phi);
    }

    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double a, b;
        normal_pair(a, b);
        spare_ = b;
        have_spare_ = true;
        return a;
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    std::uint64_t s_[4];
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace lindff
