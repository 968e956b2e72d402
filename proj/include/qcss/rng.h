// Copyright 2026 The qcss Authors
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

#ifndef QCSS_RNG_H
#define QCSS_RNG_H

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>

namespace qcss {

/// SplitMix64 finalizer; used to derive independent stream seeds.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t stream) {
    return splitmix64(splitmix64(seed) ^ splitmix64(stream + 0x632be59bd9b4e019ULL));
}

/// mt19937_64 with draws defined bit-for-bit here rather than by the standard
/// library's distributions, whose outputs vary between implementations.
class Rng {
   public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {
    }

    std::uint64_t next() {
        return engine_();
    }
    /// Uniform in [0, 1) with 53 random bits.
    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }
    /// Uniform in [0, n), n >= 1, by rejection.
    std::uint64_t below(std::uint64_t n) {
        std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % n;
    }
    bool bernoulli(double p) {
        return uniform01() < p;
    }
    /// Number of failures before the first success of a Bernoulli(p) process.
    std::uint64_t geometric(double p) {
        if (p >= 1.0) {
            return 0;
        }
        if (p <= 0.0) {
            return std::numeric_limits<std::uint64_t>::max();
        }
        double u = 1.0 - uniform01();  // (0, 1]
        double g = std::floor(std::log(u) / std::log1p(-p));
        return g >= 1.8e19 ? std::numeric_limits<std::uint64_t>::max() : static_cast<std::uint64_t>(g);
    }

   private:
    std::mt19937_64 engine_;
};

}  // namespace qcss

#endif
