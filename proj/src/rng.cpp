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

#include "riskeygen/rng.hpp"

#include <cmath>
#include <numbers>

namespace riskeygen
{
    namespace
    {
        constexpr std::uint32_t kMul0 = 0xD2511F53u;
        constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
        constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
        constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

        inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t &hi, std::uint32_t &lo)
        {
            std::uint64_t p = static_cast<std::uint64_t>(a) * b;
            hi = static_cast<std::uint32_t>(p >> 32);
            lo = static_cast<std::uint32_t>(p);
        }

        inline std::array<std::uint32_t, 4> round_once(const std::array<std::uint32_t, 4> &c,
                                                       const std::array<std::uint32_t, 2> &k)
        {
            std::uint32_t hi0, lo0, hi1, lo1;
            mulhilo(kMul0, c[0], hi0, lo0);
            mulhilo(kMul1, c[2], hi1, lo1);
            return {hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
        }
    } // namespace

    std::array<std::uint32_t, 4> philox4x32_10(const std::array<std::uint32_t, 4> &counter,
                                               const std::array<std::uint32_t, 2> &key)
    {
        std::array<std::uint32_t, 4> c = counter;
        std::array<std::uint32_t, 2> k = key;
        for (int r = 0; r < 10; ++r)
        {
            if (r)
            {
                k[0] += kWeyl0;
                k[1] += kWeyl1;
            }
            c = round_once(c, k);
        }
        return c;
    }

    CounterRng::CounterRng(std::uint64_t seed, std::uint64_t trial, Stream stream)
    {
        key_ = {static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
        counter_ = {0u,
                    static_cast<std::uint32_t>(trial),
                    static_cast<std::uint32_t>(trial >> 32),
                    static_cast<std::uint32_t>(stream)};
    }

    void CounterRng::refill()
    {
        block_ = philox4x32_10(counter_, key_);
        ++counter_[0]; // 2^32 blocks per (seed, trial, stream) substream
        pos_ = 0;
    }

    std::uint32_t CounterRng::next_u32()
    {
        if (pos_ >= 4)
            refill();
        return block_[static_cast<std::size_t>(pos_++)];
    }

    std::uint64_t CounterRng::next_u64()
    {
        std::uint64_t lo = next_u32();
        std::uint64_t hi = next_u32();
        return (hi << 32) | lo;
    }

    double CounterRng::next_double()
    {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double CounterRng::uniform_angle()
    {
        return next_double() * 2.0 * std::numbers::pi;
    }

    double CounterRng::normal()
    {
        if (has_cached_normal_)
        {
            has_cached_normal_ = false;
            return cached_normal_;
        }
        double u1 = 1.0 - next_double(); // (0, 1], keeps the log finite
        double u2 = next_double();
        double r = std::sqrt(-2.0 * std::log(u1));
        double t = 2.0 * std::numbers::pi * u2;
        cached_normal_ = r * std::sin(t);
        has_cached_normal_ = true;
        return r * std::cos(t);
    }

} // namespace riskeygen
