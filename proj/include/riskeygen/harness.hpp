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

#ifndef RISKEYGEN_HARNESS_HPP
#define RISKEYGEN_HARNESS_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "riskeygen/analytic.hpp"
#include "riskeygen/config.hpp"
#include "riskeygen/stats.hpp"

namespace riskeygen
{
    inline constexpr int kReportSchemaVersion = 1;
    inline constexpr const char *kVersion = "0.1.0";

    // One empirical-vs-analytic check with the tolerance it was judged by.
    struct Verdict
    {
        std::string name;
        double value = 0.0;
        double reference = 0.0;
        double tolerance = 0.0;
        bool pass = false;
        std::string note;
    };

    struct Report
    {
        ExperimentConfig config;
        AnalyticPrediction analytic;
        std::optional<SkrResult> skr;
        DistributionSummary empirical;
        std::vector<std::pair<std::string, GofResult>> gof;
        std::optional<MiEstimate> mi;
        std::vector<Verdict> verdicts;

        bool all_pass() const;
    };

    // Generates the batch, computes summaries and predictions, runs the
    // verdict suite. Pure function of (config) including the seed.
    Report run_experiment(const ExperimentConfig &config);

    nlohmann::json report_to_json(const Report &report);

    // Writes report.json, config_echo.toml, samples.csv and (when noise_var
    // is positive) pairs.csv into dir. Creates the directory if needed.
    void write_report_files(const Report &report, const SampleBatch &batch,
                            const std::vector<ObservationPair> &pairs, const std::string &dir);

    // Convenience wrapper: run + regenerate outputs + write files.
    Report run_and_write(const ExperimentConfig &config);

    struct SweepRow
    {
        double x = 0.0;
        double empirical = 0.0;
        double analytic = 0.0;
        double tolerance = 0.0;
        bool pass = false;
    };

    // Varies config.sweep->parameter over its values. For M/q/bits the
    // tracked quantity is var_total; for snr_db it is the MI estimate vs the
    // closed-form rate.
    std::vector<SweepRow> run_sweep(const ExperimentConfig &config);

    void write_sweep_csv(std::ostream &os, const std::vector<SweepRow> &rows);

    // Noise variance per quadrature for an SNR given in dB, referenced to the
    // baseline individual-shift channel variance M (common noise floor across
    // schemes, so group-shift curves are comparable at the same x).
    double noise_var_for_snr_db(double snr_db, int element_count);

    // Emits plot-ready columnar data for one known figure id into outdir.
    // Returns the list of files written.
    std::vector<std::string> reproduce_figure(const std::string &fig_id, const std::string &outdir,
                                              std::uint64_t trials = 0, std::uint64_t seed = 1);

    // CLI exit codes: 0 ok, 1 verdict failure, 2 config, 3 model, 4 I/O.
    int classify_exit_code(const std::exception &e);

} // namespace riskeygen

#endif
