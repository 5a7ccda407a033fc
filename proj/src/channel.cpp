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

#include "riskeygen/channel.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <string>
#include <thread>

#include "riskeygen/errors.hpp"

namespace riskeygen
{
    void ChannelModel::validate() const
    {
        legit_angles.validate();
        validate_scheme(scheme, geometry);
        if (!(noise_var_per_quadrature >= 0.0) || !std::isfinite(noise_var_per_quadrature))
            throw ModelError("noise variance must be finite and >= 0");
        if (!std::isfinite(direct_gain.real()) || !std::isfinite(direct_gain.imag()))
            throw ModelError("direct gain must be finite");
    }

    std::complex<double> reflection_channel(const WeightVector &weights, const SteeringProduct &steering)
    {
        if (weights.phases.size() != steering.phases.size())
            throw ModelError("weight vector length " + std::to_string(weights.phases.size()) +
                             " does not match steering product length " +
                             std::to_string(steering.phases.size()));
        double re = 0.0, im = 0.0;
        for (std::size_t i = 0; i < weights.phases.size(); ++i)
        {
            double p = weights.phases[i] + steering.phases[i];
            re += std::cos(p);
            im += std::sin(p);
        }
        return {re, im};
    }

    std::complex<double> sample_trial(const ChannelModel &model, const SteeringProduct &steering,
                                      std::uint64_t seed, std::uint64_t trial)
    {
        CounterRng rng(seed, trial, Stream::weights);
        WeightVector w = sample_weights(model.geometry, model.legit_angles, model.scheme, rng);
        return reflection_channel(w, steering) + model.direct_gain;
    }

    SampleBatch sample_batch_range(const ChannelModel &model, std::uint64_t trial_begin,
                                   std::uint64_t trial_end, std::uint64_t seed)
    {
        model.validate();
        SteeringProduct steering = steering_product(model.geometry, model.legit_angles);
        SampleBatch batch;
        batch.seed = seed;
        batch.samples.reserve(static_cast<std::size_t>(trial_end - trial_begin));
        for (std::uint64_t t = trial_begin; t < trial_end; ++t)
            batch.samples.push_back(sample_trial(model, steering, seed, t));
        return batch;
    }

    SampleBatch sample_batch(const ChannelModel &model, std::uint64_t trials, std::uint64_t seed,
                             int shards)
    {
        if (trials < 1)
            throw ModelError("trial count must be >= 1");
        if (shards < 1)
            throw ModelError("shard count must be >= 1");
        model.validate();

        SampleBatch batch;
        batch.seed = seed;
        batch.samples.resize(static_cast<std::size_t>(trials));

        SteeringProduct steering = steering_product(model.geometry, model.legit_angles);
        auto worker = [&](std::uint64_t begin, std::uint64_t end) {
            for (std::uint64_t t = begin; t < end; ++t)
                batch.samples[static_cast<std::size_t>(t)] = sample_trial(model, steering, seed, t);
        };

        if (shards == 1)
        {
            worker(0, trials);
            return batch;
        }

        std::vector<std::thread> threads;
        threads.reserve(static_cast<std::size_t>(shards));
        for (int s = 0; s < shards; ++s)
        {
            std::uint64_t begin = trials * static_cast<std::uint64_t>(s) / static_cast<std::uint64_t>(shards);
            std::uint64_t end = trials * static_cast<std::uint64_t>(s + 1) / static_cast<std::uint64_t>(shards);
            threads.emplace_back(worker, begin, end);
        }
        for (std::thread &t : threads)
            t.join();
        return batch;
    }

    ObservationPair observation_pair(std::complex<double> h, double noise_var_per_quadrature,
                                     CounterRng &rng)
    {
        if (!(noise_var_per_quadrature >= 0.0))
            throw ModelError("noise variance must be >= 0");
        double sd = std::sqrt(noise_var_per_quadrature);
        ObservationPair p;
        p.y_a = h + std::complex<double>(sd * rng.normal(), sd * rng.normal());
        p.y_b = h + std::complex<double>(sd * rng.normal(), sd * rng.normal());
        return p;
    }

    std::vector<ObservationPair> observation_batch(const ChannelModel &model, const SampleBatch &batch)
    {
        std::vector<ObservationPair> pairs;
        pairs.reserve(batch.samples.size());
        for (std::uint64_t t = 0; t < batch.samples.size(); ++t)
        {
            CounterRng rng(batch.seed, t, Stream::noise);
            pairs.push_back(observation_pair(batch.samples[static_cast<std::size_t>(t)],
                                             model.noise_var_per_quadrature, rng));
        }
        return pairs;
    }

    std::complex<double> cross_angle_channel(const WeightVector &weights, const RisGeometry &geom,
                                             const AnglePair &eval_angles)
    {
        return reflection_channel(weights, steering_product(geom, eval_angles));
    }

    double phase_in_2pi(std::complex<double> z)
    {
        double p = std::arg(z);
        if (p < 0.0)
            p += 2.0 * std::numbers::pi;
        // arg() can return exactly -0.0 phases that fold onto 2*pi
        if (p >= 2.0 * std::numbers::pi)
            p = 0.0;
        return p;
    }

    std::string format_double(double v)
    {
        char buf[40];
        std::snprintf(buf, sizeof(buf), "%.17g", v);
        return buf;
    }

    void write_samples_csv(std::ostream &os, const SampleBatch &batch)
    {
        os << "trial,re,im,mag,phase\n";
        for (std::size_t t = 0; t < batch.samples.size(); ++t)
        {
            const std::complex<double> &z = batch.samples[t];
            os << t << ',' << format_double(z.real()) << ',' << format_double(z.imag()) << ','
               << format_double(std::abs(z)) << ',' << format_double(phase_in_2pi(z)) << '\n';
        }
    }

    void write_pairs_csv(std::ostream &os, const std::vector<ObservationPair> &pairs)
    {
        os << "trial,ya_re,ya_im,yb_re,yb_im\n";
        for (std::size_t t = 0; t < pairs.size(); ++t)
        {
            const ObservationPair &p = pairs[t];
            os << t << ',' << format_double(p.y_a.real()) << ',' << format_double(p.y_a.imag()) << ','
               << format_double(p.y_b.real()) << ',' << format_double(p.y_b.imag()) << '\n';
        }
    }

} // namespace riskeygen
