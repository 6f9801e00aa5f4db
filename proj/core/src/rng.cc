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

#include "gaugedrift/rng.h"

#include <stdexcept>

namespace gaugedrift {

namespace {

uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

}  // namespace

uint64_t derive_seed(std::initializer_list<uint64_t> words) {
    uint64_t h = 0x6A09E667F3BCC909ULL;
    for (uint64_t w : words) {
        h = splitmix64(h ^ splitmix64(w));
    }
    return h;
}

uint64_t Rng::below(uint64_t n) {
    if (n == 0) {
        throw std::invalid_argument("Rng::below requires a positive bound");
    }
    // Largest multiple of n that fits; draws above it are rejected.
    uint64_t limit = UINT64_MAX - (UINT64_MAX % n + 1) % n;
    while (true) {
        uint64_t x = engine_();
        if (x <= limit) {
            return x % n;
        }
    }
}

}  // namespace gaugedrift
