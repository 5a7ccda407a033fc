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
//
// End-to-end acceptance suite. Each check prints one [PASS]/[FAIL] line;
// the process exits nonzero when any check fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "riskeygen/analytic.hpp"
#include "riskeygen/harness.hpp"

using namespace riskeygen;

namespace
{
    int g_failures = 0;

    void check(const std::string &id, bool pass, const std::string &detail)
    {
        std::printf("[%s] %s: %s\n", pass ? "PASS" : "FAIL", id.c_str(), detail.c_str());
        std::fflush(stdout);
        if (!pass)
            ++g_failures;
    }

    double seconds_since(std::chrono::steady_clock::time_point t0)
    {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }

    const AnglePair kCase1 = AnglePair::from_degrees(30.0, 30.0, 150.0, 60.0);
    const AnglePair kCase2 = AnglePair::from_degrees(110.0, 50.0, 310.0, 20.0);
    constexpr std::uint64_t kTrials = 100000;
    constexpr std::uint64_t kSeed = 2026;

    ChannelModel make_model(int side, const PhaseScheme &scheme, const AnglePair &angles,
                            double noise_var = 0.0)
    {
        ChannelModel m;
        m.geometry = RisGeometry(side, side, 0.5, 0.5);
        m.legit_angles = angles;
        m.scheme = scheme;
        m.noise_var_per_quadrature = noise_var;
        return m;
    }

    DistributionSummary summarize(const ChannelModel &m, std::uint64_t trials, std::uint64_t seed)
    {
        return empirical_summary(sample_batch(m, trials, seed, 4));
    }

    std::string fmt(double v)
    {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.4g", v);
        return buf;
    }

    // ---- criteria ------------------------------------------------------

    void criterion_1_variance_linearity()
    {
        auto t0 = std::chrono::steady_clock::now();
        bool ok = true;
        std::string detail;
        for (int side : {4, 6, 8, 10, 12})
        {
            double m = side * side;
            for (const PhaseScheme scheme : {PhaseScheme(Cips{}), PhaseScheme(Dips{3})})
            {
                DistributionSummary s = summarize(make_model(side, scheme, kCase1), kTrials, kSeed);
                bool point_ok = std::abs(s.var_total - m) <= 0.03 * m;
                if (!point_ok)
                    detail += " " + scheme_name(scheme) + "@M=" + fmt(m) + " var=" + fmt(s.var_total);
                ok = ok && point_ok;
            }
        }
        double dt = seconds_since(t0);
        ok = ok && dt < 30.0;
        check("criterion 1 (variance linearity, individual shifts)", ok,
              detail.empty() ? "all points within 3% of M, " + fmt(dt) + " s" : "off:" + detail);
    }

    void criterion_2_cgps_variance()
    {
        auto t0 = std::chrono::steady_clock::now();
        bool ok = true;
        std::string detail;
        for (int side : {4, 6, 8, 10, 12})
        {
            double m = side * side;
            for (int q : {2, 4})
            {
                DistributionSummary s = summarize(make_model(side, Cgps{q}, kCase1), kTrials, kSeed);
                double target = q * m;
                bool point_ok = std::abs(s.var_total - target) <= 0.03 * target;
                if (!point_ok)
                    detail += " q=" + std::to_string(q) + "@M=" + fmt(m) + " var=" + fmt(s.var_total);
                ok = ok && point_ok;
            }
        }
        double dt = seconds_since(t0);
        ok = ok && dt < 30.0;
        check("criterion 2 (group-shift variance N*q^2)", ok,
              detail.empty() ? "q=2 within 3% of 2M, q=4 within 3% of 4M, " + fmt(dt) + " s"
                             : "off:" + detail);
    }

    void criterion_3_and_4_magnitude_phase_laws()
    {
        bool ok_mag = true, ok_phase = true;
        std::string detail_mag, detail_phase;
        for (const PhaseScheme scheme : {PhaseScheme(Cips{}), PhaseScheme(Dips{3})})
        {
            ChannelModel m = make_model(8, scheme, kCase1);
            SampleBatch batch = sample_batch(m, 10000, kSeed + 1);
            AnalyticPrediction pred = predict_distribution(scheme, m.geometry, m.legit_angles);
            ReferenceCdfs cdfs = reference_cdfs(pred);

            std::vector<double> mags, phases;
            for (const std::complex<double> &z : batch.samples)
            {
                mags.push_back(std::abs(z));
                phases.push_back(phase_in_2pi(z));
            }
            std::sort(mags.begin(), mags.end());
            std::sort(phases.begin(), phases.end());

            GofResult mag = ks_test(mags, cdfs.magnitude_cdf, 0.01);
            GofResult ph = ks_test(phases, cdfs.phase_cdf, 0.01);
            detail_mag += scheme_name(scheme) + " D=" + fmt(mag.statistic) + " crit=" + fmt(mag.critical_value) + "  ";
            detail_phase += scheme_name(scheme) + " D=" + fmt(ph.statistic) + " crit=" + fmt(ph.critical_value) + "  ";
            ok_mag = ok_mag && mag.pass;
            ok_phase = ok_phase && ph.pass;
        }
        check("criterion 3 (Rayleigh magnitude law)", ok_mag, detail_mag);
        check("criterion 4 (uniform phase law)", ok_phase, detail_phase);
    }

    void criterion_5_one_bit_quadratures()
    {
        bool ok = true;
        std::string detail;
        int case_id = 1;
        for (const AnglePair &angles : {kCase1, kCase2})
        {
            ChannelModel m = make_model(8, Dips{1}, angles);
            DistributionSummary s = summarize(m, kTrials, kSeed + 2);
            AnalyticPrediction pred = predict_distribution(Dips{1}, m.geometry, angles);

            bool re_ok = std::abs(s.var_re - pred.var_re) <= 0.03 * pred.var_re;
            bool im_ok = std::abs(s.var_im - pred.var_im) <= 0.03 * pred.var_im;
            bool cov_ok = std::abs(s.covariance - pred.covariance) <= 0.05 * 64.0;
            detail += "case" + std::to_string(case_id) + " var_re=" + fmt(s.var_re) + "/" + fmt(pred.var_re) +
                      " var_im=" + fmt(s.var_im) + "/" + fmt(pred.var_im) + " cov=" + fmt(s.covariance) +
                      "/" + fmt(pred.covariance) + "  ";
            ok = ok && re_ok && im_ok && cov_ok;
            ++case_id;
        }
        check("criterion 5 (1-bit quadrature moments)", ok, detail);
    }

    void criterion_6_independence_condition()
    {
        AnglePair angles = AnglePair::from_degrees(30.0, 30.0, 210.0, 30.0); // gamma = 0
        RisGeometry geom(8, 8, 0.5, 0.5);
        IndependenceCheck cond = independence_condition(geom, angles);

        ChannelModel m = make_model(8, Dips{1}, angles);
        DistributionSummary s = summarize(m, kTrials, kSeed + 3);

        bool ok = cond.satisfied && std::abs(s.covariance) < 1.3 &&
                  std::abs(s.var_total - 64.0) <= 0.03 * 64.0;
        check("criterion 6 (independence condition at gamma = 0)", ok,
              "gamma=" + fmt(cond.gamma) + " b=" + std::to_string(cond.nearest_b) +
                  " |cov|=" + fmt(std::abs(s.covariance)) + " var_total=" + fmt(s.var_total));
    }

    void criterion_7_angle_invariance()
    {
        DistributionSummary s1 = summarize(make_model(8, Cips{}, kCase1), kTrials, kSeed + 4);
        DistributionSummary s2 = summarize(make_model(8, Cips{}, kCase2), kTrials, kSeed + 5);
        double rel = std::abs(s1.var_total - s2.var_total) / (0.5 * (s1.var_total + s2.var_total));
        check("criterion 7 (angle invariance of individual shifts)", rel < 0.02,
              "var case1=" + fmt(s1.var_total) + " case2=" + fmt(s2.var_total) + " rel diff=" + fmt(rel));
    }

    struct MiPoint
    {
        double snr_db;
        double mi;
        double rs;
    };

    std::vector<MiPoint> mi_curve(const PhaseScheme &scheme, std::uint64_t seed)
    {
        std::vector<MiPoint> points;
        for (double snr : {-10.0, -5.0, 0.0, 5.0, 10.0})
        {
            double nv = noise_var_for_snr_db(snr, 64);
            ChannelModel m = make_model(8, scheme, kCase1, nv);
            SampleBatch batch = sample_batch(m, 5000, seed, 4);
            std::vector<ObservationPair> pairs = observation_batch(m, batch);
            MiEstimate mi = mi_knn(pairs, 5);
            SkrResult rs = skr_closed_form(scheme, m.geometry, m.legit_angles, nv);
            points.push_back({snr, mi.bits, rs.rate_bits_per_sample});
        }
        return points;
    }

    void criterion_8_and_9_skr()
    {
        auto t0 = std::chrono::steady_clock::now();
        bool ok8 = true;
        std::string detail8;
        double mi_b2_at_10 = 0.0, rs_b2_at_10 = 0.0;

        for (const PhaseScheme scheme : {PhaseScheme(Cips{}), PhaseScheme(Dips{2})})
        {
            std::vector<MiPoint> curve = mi_curve(scheme, kSeed + 6);
            for (const MiPoint &p : curve)
            {
                bool point_ok = std::abs(p.mi - p.rs) <= 0.2;
                if (!point_ok)
                    detail8 += " " + scheme_name(scheme) + "@" + fmt(p.snr_db) + "dB mi=" + fmt(p.mi) +
                               " rs=" + fmt(p.rs);
                ok8 = ok8 && point_ok;
                if (std::holds_alternative<Dips>(scheme) && p.snr_db == 10.0)
                {
                    mi_b2_at_10 = p.mi;
                    rs_b2_at_10 = p.rs;
                }
            }
        }

        // group-shift analytic curve must dominate the individual one
        RisGeometry geom(8, 8, 0.5, 0.5);
        for (double snr : {-10.0, -5.0, 0.0, 5.0, 10.0})
        {
            double nv = noise_var_for_snr_db(snr, 64);
            double ci = skr_closed_form(Cips{}, geom, kCase1, nv).rate_bits_per_sample;
            double cg = skr_closed_form(Cgps{2}, geom, kCase1, nv).rate_bits_per_sample;
            ok8 = ok8 && (cg > ci);
        }
        double dt = seconds_since(t0);
        ok8 = ok8 && dt < 120.0;
        check("criterion 8 (estimated vs closed-form rate)", ok8,
              detail8.empty() ? "all points within 0.2 bits; group curve dominates; " + fmt(dt) + " s"
                              : "off:" + detail8);

        bool ok9 = std::abs(mi_b2_at_10 - rs_b2_at_10) <= 0.2 &&
                   std::abs(mi_b2_at_10 - 2.0 * rs_b2_at_10) > 1.0;
        check("criterion 9 (half-log vs full-log rate adjudication)", ok9,
              "mi=" + fmt(mi_b2_at_10) + " closed=" + fmt(rs_b2_at_10) + " doubled=" + fmt(2.0 * rs_b2_at_10));
    }

    void criterion_10_oracle_equivalence()
    {
        CounterRng pick(424242, 0, Stream::weights);
        bool ok = true;
        std::string detail;
        for (int rep = 0; rep < 100; ++rep)
        {
            int mx = 1 + static_cast<int>(pick.next_u32() % 8);
            int my = 1 + static_cast<int>(pick.next_u32() % 8);
            RisGeometry g(mx, my, 0.25 + pick.next_double(), 0.25 + pick.next_double());
            AnglePair a{pick.uniform_angle(), pick.uniform_angle(), pick.uniform_angle(),
                        pick.uniform_angle()};

            CounterRng rng(kSeed + 7, static_cast<std::uint64_t>(rep), Stream::weights);
            WeightVector w;
            if (rep % 3 == 0)
                w = sample_cips(g, rng);
            else if (rep % 3 == 1)
                w = sample_cgps(g, a, 1, rng);
            else
                w = sample_dips(g, 1 + rep % 8, rng);

            SteeringProduct sp = steering_product(g, a);
            std::complex<double> fast = reflection_channel(w, sp);

            double re = 0.0, im = 0.0;
            for (int y = 1; y <= my; ++y)
                for (int x = 1; x <= mx; ++x)
                {
                    double phase = w.phases[static_cast<std::size_t>(element_index(x, y, g) - 1)] +
                                   element_alpha(g, a, x, y);
                    re += std::cos(phase);
                    im += std::sin(phase);
                }
            if (std::abs(fast - std::complex<double>(re, im)) > 1e-12)
            {
                ok = false;
                detail += " mismatch@rep" + std::to_string(rep);
            }

            WeightVector mrt = mrt_phases(g, a);
            double mag = std::abs(reflection_channel(mrt, sp));
            if (std::abs(mag - g.element_count()) > 1e-9 * g.element_count())
            {
                ok = false;
                detail += " mrt@rep" + std::to_string(rep);
            }
        }
        check("criterion 10 (vectorized vs naive summation)", ok,
              detail.empty() ? "100 instances at 1e-12; compensated magnitude exact" : detail);
    }

    std::string read_file(const std::filesystem::path &p)
    {
        std::ifstream in(p, std::ios::binary);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }

    void criterion_11_determinism()
    {
        std::filesystem::path base = std::filesystem::temp_directory_path() / "riskeygen_acceptance";
        std::filesystem::remove_all(base);

        ExperimentConfig c;
        c.scheme = "cips";
        c.mx = 8;
        c.my = 8;
        c.trials = 10000;
        c.seed = 31415;
        c.noise_var = 1.0;

        std::vector<std::string> reports, samples, pairs;
        for (int shards : {1, 1, 4, 16}) // first shard count twice: rerun stability
        {
            static int run = 0;
            ExperimentConfig cc = c;
            cc.shards = shards;
            cc.out_dir = (base / ("run" + std::to_string(run++))).string();
            run_and_write(cc);
            reports.push_back(read_file(std::filesystem::path(cc.out_dir) / "report.json"));
            samples.push_back(read_file(std::filesystem::path(cc.out_dir) / "samples.csv"));
            pairs.push_back(read_file(std::filesystem::path(cc.out_dir) / "pairs.csv"));
        }

        bool ok = !reports[0].empty() && !samples[0].empty() && !pairs[0].empty();
        for (std::size_t i = 1; i < reports.size(); ++i)
            ok = ok && reports[i] == reports[0] && samples[i] == samples[0] && pairs[i] == pairs[0];
        std::filesystem::remove_all(base);
        check("criterion 11 (byte-identical outputs across runs and shard counts)", ok,
              ok ? "reruns and shard counts {1,4,16} byte-identical" : "outputs differ");
    }
} // namespace

int main()
{
    std::printf("riskeygen acceptance suite (seed %llu, %llu trials per distribution check)\n",
                static_cast<unsigned long long>(kSeed), static_cast<unsigned long long>(kTrials));

    criterion_1_variance_linearity();
    criterion_2_cgps_variance();
    criterion_3_and_4_magnitude_phase_laws();
    criterion_5_one_bit_quadratures();
    criterion_6_independence_condition();
    criterion_7_angle_invariance();
    criterion_8_and_9_skr();
    criterion_10_oracle_equivalence();
    criterion_11_determinism();

    if (g_failures)
    {
        std::printf("%d criterion(s) FAILED\n", g_failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
