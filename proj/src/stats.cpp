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

#include "riskeygen/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>

#include "riskeygen/errors.hpp"
#include "riskeygen/rng.hpp"

namespace riskeygen
{
    namespace
    {
        constexpr double kTwoPi = 2.0 * std::numbers::pi;

        std::vector<HistogramBin> phase_histogram_of(const SampleBatch &batch)
        {
            std::vector<double> phases;
            phases.reserve(batch.samples.size());
            for (const std::complex<double> &z : batch.samples)
                phases.push_back(phase_in_2pi(z));
            return histogram_pdf(phases, kPhaseHistogramBins, {0.0, kTwoPi});
        }
    } // namespace

    DistributionSummary empirical_summary(const SampleBatch &batch)
    {
        std::size_t n = batch.samples.size();
        if (n < 2)
            throw ModelError("summary requires at least 2 samples, got " + std::to_string(n));

        double sum_re = 0.0, sum_im = 0.0, sum_mag = 0.0, sum_msq = 0.0;
        for (const std::complex<double> &z : batch.samples)
        {
            sum_re += z.real();
            sum_im += z.imag();
            double m = std::abs(z);
            sum_mag += m;
            sum_msq += m * m;
        }

        DistributionSummary s;
        s.n = n;
        double dn = static_cast<double>(n);
        s.mean_re = sum_re / dn;
        s.mean_im = sum_im / dn;
        s.magnitude.mean = sum_mag / dn;
        s.magnitude.mean_square = sum_msq / dn;

        double m2_re = 0.0, m2_im = 0.0, c = 0.0, m2_mag = 0.0;
        for (const std::complex<double> &z : batch.samples)
        {
            double dre = z.real() - s.mean_re;
            double dim = z.imag() - s.mean_im;
            m2_re += dre * dre;
            m2_im += dim * dim;
            c += dre * dim;
            double dm = std::abs(z) - s.magnitude.mean;
            m2_mag += dm * dm;
        }
        s.var_re = m2_re / (dn - 1.0);
        s.var_im = m2_im / (dn - 1.0);
        s.covariance = c / (dn - 1.0);
        s.var_total = s.var_re + s.var_im;
        s.magnitude.variance = m2_mag / (dn - 1.0);
        s.phase_histogram = phase_histogram_of(batch);
        return s;
    }

    DistributionSummary merge_summaries(const DistributionSummary &a, const DistributionSummary &b)
    {
        if (a.n < 2 || b.n < 2)
            throw ModelError("cannot merge summaries with fewer than 2 samples");
        if (a.phase_histogram.size() != b.phase_histogram.size())
            throw ModelError("cannot merge summaries with different phase binning");

        double na = static_cast<double>(a.n), nb = static_cast<double>(b.n);
        double n = na + nb;

        auto merge_moment = [&](double mean_a, double m2n_a, double mean_b, double m2n_b,
                                double &mean_out, double &var_out) {
            double delta = mean_b - mean_a;
            mean_out = mean_a + delta * nb / n;
            double m2 = m2n_a + m2n_b + delta * delta * na * nb / n;
            var_out = m2 / (n - 1.0);
        };

        DistributionSummary s;
        s.n = a.n + b.n;
        merge_moment(a.mean_re, a.var_re * (na - 1.0), b.mean_re, b.var_re * (nb - 1.0), s.mean_re, s.var_re);
        merge_moment(a.mean_im, a.var_im * (na - 1.0), b.mean_im, b.var_im * (nb - 1.0), s.mean_im, s.var_im);
        merge_moment(a.magnitude.mean, a.magnitude.variance * (na - 1.0), b.magnitude.mean,
                     b.magnitude.variance * (nb - 1.0), s.magnitude.mean, s.magnitude.variance);

        double delta_re = b.mean_re - a.mean_re;
        double delta_im = b.mean_im - a.mean_im;
        double c = a.covariance * (na - 1.0) + b.covariance * (nb - 1.0) +
                   delta_re * delta_im * na * nb / n;
        s.covariance = c / (n - 1.0);
        s.var_total = s.var_re + s.var_im;
        s.magnitude.mean_square = (a.magnitude.mean_square * na + b.magnitude.mean_square * nb) / n;

        // phases always lie in [0, 2*pi), so bin densities merge by count
        s.phase_histogram.resize(a.phase_histogram.size());
        for (std::size_t i = 0; i < s.phase_histogram.size(); ++i)
        {
            s.phase_histogram[i].center = a.phase_histogram[i].center;
            s.phase_histogram[i].density =
                (a.phase_histogram[i].density * na + b.phase_histogram[i].density * nb) / n;
        }
        return s;
    }

    double ks_statistic(const std::vector<double> &sorted_samples,
                        const std::function<double(double)> &reference_cdf)
    {
        std::size_t n = sorted_samples.size();
        if (n == 0)
            throw ModelError("ks statistic requires at least one sample");
        if (!std::is_sorted(sorted_samples.begin(), sorted_samples.end()))
            throw ModelError("ks statistic requires sorted samples");

        double dn = static_cast<double>(n);
        double d = 0.0;
        for (std::size_t i = 0; i < n; ++i)
        {
            double f = reference_cdf(sorted_samples[i]);
            double hi = (static_cast<double>(i) + 1.0) / dn - f;
            double lo = f - static_cast<double>(i) / dn;
            d = std::max(d, std::max(hi, lo));
        }
        return d;
    }

    GofResult ks_test(const std::vector<double> &sorted_samples,
                      const std::function<double(double)> &reference_cdf, double alpha)
    {
        if (sorted_samples.size() < 10)
            throw ModelError("ks test requires n >= 10");

        double c;
        if (std::abs(alpha - 0.05) < 1e-12)
            c = 1.358;
        else if (std::abs(alpha - 0.01) < 1e-12)
            c = 1.628;
        else
            throw ModelError("ks test supports alpha in {0.05, 0.01}");

        GofResult r;
        r.alpha = alpha;
        r.statistic = ks_statistic(sorted_samples, reference_cdf);
        r.critical_value = c / std::sqrt(static_cast<double>(sorted_samples.size()));
        r.pass = r.statistic < r.critical_value;
        return r;
    }

    double digamma(double x)
    {
        if (!(x > 0.0))
            throw ModelError("digamma defined for positive arguments only");
        double result = 0.0;
        while (x < 10.0)
        {
            result -= 1.0 / x;
            x += 1.0;
        }
        double inv = 1.0 / x;
        double inv2 = inv * inv;
        result += std::log(x) - 0.5 * inv -
                  inv2 * (1.0 / 12.0 -
                          inv2 * (1.0 / 120.0 -
                                  inv2 * (1.0 / 252.0 - inv2 * (1.0 / 240.0 - inv2 / 132.0))));
        return result;
    }

    namespace
    {
        // max-norm distance between rows i and j of a flattened array
        inline double row_dist(const std::vector<double> &a, std::size_t dim, std::size_t i, std::size_t j)
        {
            double d = 0.0;
            for (std::size_t c = 0; c < dim; ++c)
                d = std::max(d, std::abs(a[i * dim + c] - a[j * dim + c]));
            return d;
        }

        // Deterministic jitter for points that coincide in the joint space:
        // KSG needs distinct distances.
        void jitter_duplicates(std::vector<double> &x, std::size_t dim_x,
                               std::vector<double> &y, std::size_t dim_y, std::size_t n)
        {
            std::vector<std::size_t> order(n);
            std::iota(order.begin(), order.end(), 0);
            auto joint_less = [&](std::size_t a, std::size_t b) {
                for (std::size_t c = 0; c < dim_x; ++c)
                    if (x[a * dim_x + c] != x[b * dim_x + c])
                        return x[a * dim_x + c] < x[b * dim_x + c];
                for (std::size_t c = 0; c < dim_y; ++c)
                    if (y[a * dim_y + c] != y[b * dim_y + c])
                        return y[a * dim_y + c] < y[b * dim_y + c];
                return false;
            };
            std::sort(order.begin(), order.end(), joint_less);

            constexpr double kDupTol = 1e-12;
            constexpr double kAmplitude = 1e-10;
            for (std::size_t s = 1; s < n; ++s)
            {
                std::size_t i = order[s - 1], j = order[s];
                double d = std::max(row_dist(x, dim_x, i, j), row_dist(y, dim_y, i, j));
                if (d < kDupTol)
                {
                    CounterRng rng(0x6b736731u, j, Stream::jitter);
                    for (std::size_t c = 0; c < dim_x; ++c)
                        x[j * dim_x + c] += kAmplitude * (2.0 * rng.next_double() - 1.0);
                    for (std::size_t c = 0; c < dim_y; ++c)
                        y[j * dim_y + c] += kAmplitude * (2.0 * rng.next_double() - 1.0);
                }
            }
        }
    } // namespace

    double mi_ksg(const std::vector<double> &x_in, std::size_t dim_x,
                  const std::vector<double> &y_in, std::size_t dim_y, int k)
    {
        if (dim_x == 0 || dim_y == 0)
            throw ModelError("mi estimator requires nonzero dimensions");
        if (x_in.size() % dim_x != 0 || y_in.size() % dim_y != 0)
            throw ModelError("flattened array size not divisible by dimension");
        std::size_t n = x_in.size() / dim_x;
        if (n != y_in.size() / dim_y)
            throw ModelError("x and y sample counts differ");
        if (k < 1)
            throw ModelError("k must be >= 1");
        if (n <= static_cast<std::size_t>(k))
            throw ModelError("sample count must exceed k");

        std::vector<double> x = x_in, y = y_in;
        jitter_duplicates(x, dim_x, y, dim_y, n);

        std::vector<double> dx(n), dy(n), dj(n);
        double acc = 0.0;
        for (std::size_t i = 0; i < n; ++i)
        {
            for (std::size_t j = 0; j < n; ++j)
            {
                dx[j] = row_dist(x, dim_x, i, j);
                dy[j] = row_dist(y, dim_y, i, j);
                dj[j] = std::max(dx[j], dy[j]);
            }
            dj[i] = std::numeric_limits<double>::infinity();

            std::vector<double> tmp(dj);
            std::nth_element(tmp.begin(), tmp.begin() + (k - 1), tmp.end());
            double eps = tmp[static_cast<std::size_t>(k - 1)];

            std::size_t nx = 0, ny = 0;
            for (std::size_t j = 0; j < n; ++j)
            {
                if (j == i)
                    continue;
                if (dx[j] < eps)
                    ++nx;
                if (dy[j] < eps)
                    ++ny;
            }
            acc += digamma(static_cast<double>(nx) + 1.0) + digamma(static_cast<double>(ny) + 1.0);
        }

        double nats = digamma(static_cast<double>(k)) + digamma(static_cast<double>(n)) -
                      acc / static_cast<double>(n);
        return nats / std::numbers::ln2;
    }

    MiEstimate mi_knn(const std::vector<ObservationPair> &pairs, int k)
    {
        std::size_t n = pairs.size();
        if (n <= static_cast<std::size_t>(std::max(k, 1)))
            throw ModelError("need more pairs than k");

        bool all_identical = true;
        for (const ObservationPair &p : pairs)
            if (p.y_a != p.y_b)
            {
                all_identical = false;
                break;
            }
        if (all_identical)
            throw ZeroNoiseDegenerateError("all observation pairs identical; mutual information unbounded");

        std::vector<double> x(2 * n), y(2 * n);
        for (std::size_t i = 0; i < n; ++i)
        {
            x[2 * i] = pairs[i].y_a.real();
            x[2 * i + 1] = pairs[i].y_a.imag();
            y[2 * i] = pairs[i].y_b.real();
            y[2 * i + 1] = pairs[i].y_b.imag();
        }

        MiEstimate e;
        e.bits = mi_ksg(x, 2, y, 2, k);
        e.k_neighbors = k;
        e.n = n;
        return e;
    }

    std::vector<HistogramBin> histogram_pdf(const std::vector<double> &samples, int bin_count,
                                            std::pair<double, double> range)
    {
        if (samples.empty())
            throw ModelError("histogram requires at least one sample");
        if (bin_count < 2)
            throw ModelError("histogram requires at least 2 bins");
        double lo = range.first, hi = range.second;
        if (!(hi > lo))
            throw ModelError("histogram range must have positive width");

        double width = (hi - lo) / static_cast<double>(bin_count);
        std::vector<std::size_t> counts(static_cast<std::size_t>(bin_count), 0);
        std::size_t in_range = 0;
        for (double v : samples)
        {
            if (v < lo || v > hi)
                continue;
            std::size_t b = (v >= hi) ? static_cast<std::size_t>(bin_count - 1)
                                      : static_cast<std::size_t>((v - lo) / width);
            if (b >= counts.size())
                b = counts.size() - 1;
            ++counts[b];
            ++in_range;
        }
        if (in_range == 0)
            throw ModelError("no samples inside histogram range");

        std::vector<HistogramBin> bins(static_cast<std::size_t>(bin_count));
        double norm = 1.0 / (static_cast<double>(in_range) * width);
        for (std::size_t b = 0; b < bins.size(); ++b)
        {
            bins[b].center = lo + (static_cast<double>(b) + 0.5) * width;
            bins[b].density = static_cast<double>(counts[b]) * norm;
        }
        return bins;
    }

} // namespace riskeygen
