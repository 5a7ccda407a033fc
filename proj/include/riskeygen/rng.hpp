// SPDX-License-Identifier: Apache-2.0
//
// riskeygen - RIS-induced channel randomness and key-rate simulator
// Copyright (C) 2026 riskeygen contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef RISKEYGEN_RNG_HPP
#define RISKEYGEN_RNG_HPP

#include <array>
#include <cstdint>

namespace riskeygen
{
    // Philox4x32-10 counter-based block function (Salmon et al., Random123).
    // Stateless: output depends only on (counter, key), which is what makes
    // trial-sharded Monte Carlo reproducible independent of execution order.
    std::array<std::uint32_t, 4> philox4x32_10(const std::array<std::uint32_t, 4> &counter,
                                               const std::array<std::uint32_t, 2> &key);

    // Substream labels. Each (seed, trial, stream) tuple addresses an
    // independent random stream; new purposes get new labels.
    enum class Stream : std::uint32_t
    {
        weights = 1,
        noise = 2,
        jitter = 3,
    };

    // Sequential view over one Philox substream. Draw i of a given
    // (seed, trial, stream) is a pure function of those values, so any trial
    // can be regenerated in isolation and shards can run in parallel.
    class CounterRng
    {
    public:
        CounterRng(std::uint64_t seed, std::uint64_t trial, Stream stream);

        std::uint32_t next_u32();
        std::uint64_t next_u64();

        // Uniform on [0, 1) with 53-bit resolution.
        double next_double();

        // Uniform on [0, 2*pi).
        double uniform_angle();

        // Standard normal via Box-Muller; the second draw of each pair is cached.
        double normal();

    private:
        void refill();

        std::array<std::uint32_t, 2> key_;
        std::array<std::uint32_t, 4> counter_;
        std::array<std::uint32_t, 4> block_{};
        int pos_ = 4;
        bool has_cached_normal_ = false;
        double cached_normal_ = 0.0;
    };

} // namespace riskeygen

#endif
