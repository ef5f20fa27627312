/*
   Copyright 2026 The tdlab Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef TDLAB_RNG_HPP
#define TDLAB_RNG_HPP

#include <array>
#include <cstdint>

namespace tdlab {

class SplitMix64 {
   public:
    explicit SplitMix64(std::uint64_t state) noexcept : state_(state) {}
    std::uint64_t next() noexcept {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

   private:
    std::uint64_t state_;
};

// xoshiro256**, state filled from SplitMix64(seed).
class Xoshiro256 {
   public:
    explicit Xoshiro256(std::uint64_t seed) noexcept {
        SplitMix64 sm(seed);
        for (auto& w : s_) w = sm.next();
    }
    std::uint64_t next() noexcept {
        const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }
    // uniform integer in [0, 2^53)
    std::uint64_t next53() noexcept { return next() >> 11; }

   private:
    static std::uint64_t rotl(std::uint64_t x, int k) noexcept { return (x << k) | (x >> (64 - k)); }
    std::array<std::uint64_t, 4> s_{};
};

// Seed of sample `index` under `master_seed`.
inline std::uint64_t stream_seed(std::uint64_t master_seed, std::uint64_t index) noexcept {
    return SplitMix64(master_seed ^ ((index + 1) * 0x9E3779B97F4A7C15ULL)).next();
}

}  // namespace tdlab

#endif  // TDLAB_RNG_HPP
