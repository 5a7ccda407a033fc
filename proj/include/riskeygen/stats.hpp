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

#ifndef RISKEYGEN_STATS_HPP
#define RISKEYGEN_STATS_HPP

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "riskeygen/channel.hpp"

namespace riskeygen
{
    struct MagnitudeMoments
    {
        double mean = 0.0;
        double variance = 0.0;
        double mean_square = 0.0;
    };

    struct HistogramBin
    {
        double center = 0.0;
        double density = 0.0;
    };

    // Fixed phase binning used inside DistributionSummary so that summaries
    // from different shards can be merged without re-touching samples.
    inline constexpr int kPhaseHistogramBins = 36;

    struct DistributionSummary
    {
        std::size_t n = 0;
        double mean_re = 0.0;
        double mean_im = 0.0;
        double var_re = 0.0; // unbiased (n - 1)
        double var_im = 0.0;
        double covariance = 0.0;
        double var_total = 0.0;
        MagnitudeMoments magnitude;
        std::vector<HistogramBin> phase_histogram; // kPhaseHistogramBins over [0, 2*pi)
    };

    // Two-pass unbiased moments of a batch; requires n >= 2.
    DistributionSummary empirical_summary(const SampleBatch &batch);

    // Exact merged moments of two summaries, as if computed over the
    // concatenated batches. Enables trial-sharded aggregation.
    DistributionSummary merge_summaries(const DistributionSummary &a, const DistributionSummary &b);

    struct GofResult
    {
        double statistic = 0.0;
        double critical_value = 0.0;
        double alpha = 0.0;
        bool pass = false;
    };

    // One-sample Kolmogorov-Smirnov statistic sup|F_hat - F| for any n >= 1.
    // Input must be sorted ascending.
    double ks_statistic(const std::vector<double> &sorted_samples,
                        const std::function<double(double)> &reference_cdf);

    // KS test with asymptotic critical value c(alpha)/sqrt(n); requires
    // n >= 10 and alpha in {0.05, 0.01}.
    GofResult ks_test(const std::vector<double> &sorted_samples,
                      const std::function<double(double)> &reference_cdf, double alpha);

    struct MiEstimate
    {
        double bits = 0.0;
        int k_neighbors = 0;
        std::size_t n = 0;
    };

    // KSG (variant 1) mutual information between two real vector variables
    // given as flattened row-major arrays, max-norm neighborhoods, result in
    // bits. Near-duplicate points get deterministic jitter of amplitude 1e-10.
    double mi_ksg(const std::vector<double> &x, std::size_t dim_x,
                  const std::vector<double> &y, std::size_t dim_y, int k);

    // KSG estimate between the complex observations y_a and y_b (2+2 real
    // dimensions). Throws ZeroNoiseDegenerateError when every pair is
    // identical, i.e. the observations are noise-free.
    MiEstimate mi_knn(const std::vector<ObservationPair> &pairs, int k = 5);

    // Normalized histogram over `range`; densities integrate to 1 over the
    // range. Samples outside the range are dropped; the right edge is closed.
    std::vector<HistogramBin> histogram_pdf(const std::vector<double> &samples, int bin_count,
                                            std::pair<double, double> range);

    double digamma(double x);

} // namespace riskeygen

#endif
