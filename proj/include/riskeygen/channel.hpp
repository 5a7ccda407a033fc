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

#ifndef RISKEYGEN_CHANNEL_HPP
#define RISKEYGEN_CHANNEL_HPP

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "riskeygen/geometry.hpp"
#include "riskeygen/weights.hpp"

namespace riskeygen
{
    // Everything needed to synthesize reflection-channel realizations.
    // noise_var_per_quadrature is the variance of each real noise quadrature;
    // the total complex noise power is twice that.
    struct ChannelModel
    {
        RisGeometry geometry;
        AnglePair legit_angles;
        PhaseScheme scheme;
        std::complex<double> direct_gain{0.0, 0.0};
        double noise_var_per_quadrature = 0.0;

        void validate() const; // throws ModelError
    };

    // Reflection-channel realizations, reproducible bit-exact from
    // (model, seed): sample t depends only on (seed, trial index t).
    struct SampleBatch
    {
        std::vector<std::complex<double>> samples;
        std::uint64_t seed = 0;

        std::size_t trial_count() const { return samples.size(); }
    };

    // Reciprocal noisy estimates of the same channel value at Alice and Bob.
    struct ObservationPair
    {
        std::complex<double> y_a;
        std::complex<double> y_b;
    };

    // H = sum_m exp(j*(phi_m + alpha_m)). Lengths must match.
    std::complex<double> reflection_channel(const WeightVector &weights, const SteeringProduct &steering);

    // One trial of the full model: fresh weights for this (seed, trial), summed
    // against the legitimate steering product, plus the direct gain.
    std::complex<double> sample_trial(const ChannelModel &model, const SteeringProduct &steering,
                                      std::uint64_t seed, std::uint64_t trial);

    // Trials [trial_begin, trial_end) of the batch; used by shard workers.
    SampleBatch sample_batch_range(const ChannelModel &model, std::uint64_t trial_begin,
                                   std::uint64_t trial_end, std::uint64_t seed);

    // T trials, optionally generated by `shards` parallel workers. The output
    // is identical for every shard count.
    SampleBatch sample_batch(const ChannelModel &model, std::uint64_t trials, std::uint64_t seed,
                             int shards = 1);

    ObservationPair observation_pair(std::complex<double> h, double noise_var_per_quadrature,
                                     CounterRng &rng);

    // Observation pairs aligned with sample_batch: pair t adds noise from the
    // dedicated noise substream of trial t to sample t.
    std::vector<ObservationPair> observation_batch(const ChannelModel &model, const SampleBatch &batch);

    // Evaluates the same weights against a different angle pair's steering
    // product; models what an observer away from the legitimate angles sees.
    std::complex<double> cross_angle_channel(const WeightVector &weights, const RisGeometry &geom,
                                             const AnglePair &eval_angles);

    // Phase of z folded into [0, 2*pi).
    double phase_in_2pi(std::complex<double> z);

    // CSV exports: "trial,re,im,mag,phase" and "trial,ya_re,ya_im,yb_re,yb_im".
    void write_samples_csv(std::ostream &os, const SampleBatch &batch);
    void write_pairs_csv(std::ostream &os, const std::vector<ObservationPair> &pairs);

    // %.17g formatting, shared by every writer so outputs stay byte-stable.
    std::string format_double(double v);

} // namespace riskeygen

#endif
