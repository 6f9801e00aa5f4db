// Copyright 2026 The gaugedrift Authors
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

#ifndef GAUGEDRIFT_RNG_H
#define GAUGEDRIFT_RNG_H

#include <cstdint>
#include <initializer_list>
#include <random>

namespace gaugedrift {

/// Mixes a list of 64-bit words into a single seed (splitmix64 chained).
/// Used to derive independent per-trajectory streams from a master seed
/// and a counter, so results do not depend on scheduling.
uint64_t derive_seed(std::initializer_list<uint64_t> words);

/// Seeded random stream. Wraps mt19937_64 with distribution code that is
/// fully specified here, so output is identical across standard libraries.
class Rng {
   public:
    explicit Rng(uint64_t seed) : engine_(seed) {
    }

    /// Stream for (master seed, stream index, purpose tag).
    static Rng for_stream(uint64_t master_seed, uint64_t stream, uint64_t purpose = 0) {
        return Rng(derive_seed({master_seed, stream, purpose}));
    }

    uint64_t next_u64() {
        return engine_();
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi) {
        return lo + (hi - lo) * uniform01();
    }

    /// Uniform integer in [0, n). Rejection sampling; n must be positive.
    uint64_t below(uint64_t n);

   private:
    std::mt19937_64 engine_;
};

}  // namespace gaugedrift

#endif
