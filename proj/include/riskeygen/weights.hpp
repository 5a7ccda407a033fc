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

#ifndef RISKEYGEN_WEIGHTS_HPP
#define RISKEYGEN_WEIGHTS_HPP

#include <string>
#include <variant>
#include <vector>

#include "riskeygen/geometry.hpp"
#include "riskeygen/rng.hpp"

namespace riskeygen
{
    // Continuous individual phase shifts: each element phase iid U(0, 2*pi).
    struct Cips
    {
    };

    // Continuous group phase shifts: MRT compensation plus one shared uniform
    // phase per group of q elements. Strict mode requires q | M; with
    // allow_remainder the leftover M - N*q elements form one partial group.
    struct Cgps
    {
        int group_size = 1;
        bool allow_remainder = false;
    };

    // Discrete individual phase shifts on the 2^bits-point grid.
    struct Dips
    {
        int bits = 1;
    };

    using PhaseScheme = std::variant<Cips, Cgps, Dips>;

    std::string scheme_name(const PhaseScheme &scheme);

    // Throws ModelError (NotDivisibleError for strict CGPS) on invalid parameters.
    void validate_scheme(const PhaseScheme &scheme, const RisGeometry &geom);

    // Element phases phi_m in [0, 2*pi), row-major element order.
    struct WeightVector
    {
        std::vector<double> phases;
        PhaseScheme scheme;
    };

    // Element -> group assignment for CGPS, contiguous row-major blocks.
    struct GroupPartition
    {
        std::vector<int> group_of; // 0-based element index -> 0-based group index
        int group_size = 1;        // q
        int group_count = 0;       // N = M / q full groups
        int remainder = 0;         // elements in the trailing partial group (0 in strict mode)

        int total_groups() const { return group_count + (remainder > 0 ? 1 : 0); }
    };

    GroupPartition partition_groups(const RisGeometry &geom, int q, bool allow_remainder = false);

    WeightVector sample_cips(const RisGeometry &geom, CounterRng &rng);

    WeightVector sample_dips(const RisGeometry &geom, int bits, CounterRng &rng);

    // Phase conjugation of the steering product: phi = (-alpha_m) mod 2*pi, so
    // every compensated element contributes exactly 1 to the channel sum.
    WeightVector mrt_phases(const RisGeometry &geom, const AnglePair &angles);

    WeightVector sample_cgps(const RisGeometry &geom, const AnglePair &angles, int q,
                             CounterRng &rng, bool allow_remainder = false);

    // Dispatch on the scheme tag.
    WeightVector sample_weights(const RisGeometry &geom, const AnglePair &angles,
                                const PhaseScheme &scheme, CounterRng &rng);

} // namespace riskeygen

#endif
