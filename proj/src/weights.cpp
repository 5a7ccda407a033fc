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

#include "riskeygen/weights.hpp"

#include <cmath>
#include <numbers>

#include "riskeygen/errors.hpp"

namespace riskeygen
{
    namespace
    {
        constexpr double kTwoPi = 2.0 * std::numbers::pi;

        inline double mod_2pi(double x)
        {
            double r = std::fmod(x, kTwoPi);
            if (r < 0.0)
                r += kTwoPi; // may round up to exactly 2*pi for tiny negatives
            if (r >= kTwoPi)
                r = 0.0;
            return r;
        }
    } // namespace

    std::string scheme_name(const PhaseScheme &scheme)
    {
        if (std::holds_alternative<Cips>(scheme))
            return "cips";
        if (std::holds_alternative<Cgps>(scheme))
            return "cgps";
        return "dips";
    }

    void validate_scheme(const PhaseScheme &scheme, const RisGeometry &geom)
    {
        if (const Cgps *g = std::get_if<Cgps>(&scheme))
        {
            partition_groups(geom, g->group_size, g->allow_remainder);
        }
        else if (const Dips *d = std::get_if<Dips>(&scheme))
        {
            if (d->bits < 1)
                throw ModelError("quantization bits must be >= 1, got " + std::to_string(d->bits));
            if (d->bits > 31)
                throw ModelError("quantization bits must be <= 31, got " + std::to_string(d->bits));
        }
    }

    GroupPartition partition_groups(const RisGeometry &geom, int q, bool allow_remainder)
    {
        int m = geom.element_count();
        if (q < 1 || q > m)
            throw ModelError("group size must be in [1, M=" + std::to_string(m) + "], got " + std::to_string(q));

        GroupPartition part;
        part.group_size = q;
        part.group_count = m / q;
        part.remainder = m - part.group_count * q;
        if (part.remainder != 0 && !allow_remainder)
            throw NotDivisibleError("group size " + std::to_string(q) + " does not divide M = " +
                                    std::to_string(m) + " (" + std::to_string(part.remainder) +
                                    " elements left over)");

        // Contiguous row-major blocks; leftover elements land in group N.
        part.group_of.resize(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i)
            part.group_of[static_cast<std::size_t>(i)] = i / q;
        return part;
    }

    WeightVector sample_cips(const RisGeometry &geom, CounterRng &rng)
    {
        WeightVector w;
        w.scheme = Cips{};
        w.phases.resize(static_cast<std::size_t>(geom.element_count()));
        for (double &p : w.phases)
            p = rng.uniform_angle();
        return w;
    }

    WeightVector sample_dips(const RisGeometry &geom, int bits, CounterRng &rng)
    {
        if (bits < 1)
            throw ModelError("quantization bits must be >= 1, got " + std::to_string(bits));
        if (bits > 31)
            throw ModelError("quantization bits must be <= 31, got " + std::to_string(bits));

        // 2^bits divides 2^32, so masking the top draw is exactly uniform.
        std::uint32_t levels = 1u << bits;
        double step = kTwoPi / static_cast<double>(levels);

        WeightVector w;
        w.scheme = Dips{bits};
        w.phases.resize(static_cast<std::size_t>(geom.element_count()));
        for (double &p : w.phases)
            p = step * static_cast<double>(rng.next_u32() >> (32 - bits));
        return w;
    }

    WeightVector mrt_phases(const RisGeometry &geom, const AnglePair &angles)
    {
        SteeringProduct sp = steering_product(geom, angles);
        WeightVector w;
        w.scheme = Cgps{geom.element_count()};
        w.phases.resize(sp.phases.size());
        for (std::size_t i = 0; i < sp.phases.size(); ++i)
            w.phases[i] = mod_2pi(-sp.phases[i]);
        return w;
    }

    WeightVector sample_cgps(const RisGeometry &geom, const AnglePair &angles, int q,
                             CounterRng &rng, bool allow_remainder)
    {
        GroupPartition part = partition_groups(geom, q, allow_remainder);
        WeightVector mrt = mrt_phases(geom, angles);

        std::vector<double> group_phase(static_cast<std::size_t>(part.total_groups()));
        for (double &p : group_phase)
            p = rng.uniform_angle();

        WeightVector w;
        w.scheme = Cgps{q, allow_remainder};
        w.phases.resize(mrt.phases.size());
        for (std::size_t i = 0; i < w.phases.size(); ++i)
            w.phases[i] = mod_2pi(mrt.phases[i] + group_phase[static_cast<std::size_t>(part.group_of[i])]);
        return w;
    }

    WeightVector sample_weights(const RisGeometry &geom, const AnglePair &angles,
                                const PhaseScheme &scheme, CounterRng &rng)
    {
        if (std::holds_alternative<Cips>(scheme))
            return sample_cips(geom, rng);
        if (const Cgps *g = std::get_if<Cgps>(&scheme))
            return sample_cgps(geom, angles, g->group_size, rng, g->allow_remainder);
        return sample_dips(geom, std::get<Dips>(scheme).bits, rng);
    }

} // namespace riskeygen
