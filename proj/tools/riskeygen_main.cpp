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

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "riskeygen/errors.hpp"
#include "riskeygen/harness.hpp"

namespace
{
    using riskeygen::ExperimentConfig;

    // Model/experiment flags shared by the subcommands. Flags override config
    // file values; only flags the user actually passed are applied.
    struct ModelFlags
    {
        std::string config_path;
        std::string scheme;
        int mx = 0, my = 0;
        double spacing_x = 0.0, spacing_y = 0.0;
        int q = 0, bits = 0;
        bool allow_remainder = false;
        std::vector<double> angles;
        std::uint64_t trials = 0, seed = 0;
        double noise_var = 0.0;
        std::vector<double> direct_gain;
        int shards = 0;
        std::string out_dir;

        CLI::Option *opt_config = nullptr;
        CLI::Option *opt_scheme = nullptr;
        CLI::Option *opt_mx = nullptr;
        CLI::Option *opt_my = nullptr;
        CLI::Option *opt_spacing_x = nullptr;
        CLI::Option *opt_spacing_y = nullptr;
        CLI::Option *opt_q = nullptr;
        CLI::Option *opt_bits = nullptr;
        CLI::Option *opt_allow_remainder = nullptr;
        CLI::Option *opt_angles = nullptr;
        CLI::Option *opt_trials = nullptr;
        CLI::Option *opt_seed = nullptr;
        CLI::Option *opt_noise_var = nullptr;
        CLI::Option *opt_direct_gain = nullptr;
        CLI::Option *opt_shards = nullptr;
        CLI::Option *opt_out = nullptr;

        void attach(CLI::App *cmd)
        {
            opt_config = cmd->add_option("--config", config_path, "Config file (flat TOML); flags override it");
            opt_scheme = cmd->add_option("--scheme", scheme, "Phase-shift scheme: cips, cgps or dips");
            opt_mx = cmd->add_option("--mx", mx, "Elements along x");
            opt_my = cmd->add_option("--my", my, "Elements along y");
            opt_spacing_x = cmd->add_option("--spacing-x", spacing_x, "Element spacing along x in wavelengths");
            opt_spacing_y = cmd->add_option("--spacing-y", spacing_y, "Element spacing along y in wavelengths");
            opt_q = cmd->add_option("--q", q, "CGPS group size");
            opt_bits = cmd->add_option("--bits", bits, "DIPS quantization bits");
            opt_allow_remainder = cmd->add_flag("--allow-remainder", allow_remainder,
                                                "Put leftover elements into one partial CGPS group");
            opt_angles = cmd->add_option("--angles", angles,
                                         "Angles in degrees: psi_i,theta_i,psi_o,theta_o")
                             ->delimiter(',')
                             ->expected(4);
            opt_trials = cmd->add_option("--trials", trials, "Monte Carlo trial count");
            opt_seed = cmd->add_option("--seed", seed, "Global RNG seed");
            opt_noise_var = cmd->add_option("--noise-var", noise_var,
                                            "Estimation noise variance per quadrature");
            opt_direct_gain = cmd->add_option("--direct-gain", direct_gain, "Direct channel gain: re,im")
                                  ->delimiter(',')
                                  ->expected(2);
            opt_shards = cmd->add_option("--shards", shards, "Parallel generation shards (output-invariant)");
            opt_out = cmd->add_option("--out", out_dir, "Output directory");
        }

        ExperimentConfig build() const
        {
            ExperimentConfig c;
            if (opt_config->count())
                c = riskeygen::load_config(config_path);
            if (opt_scheme->count())
                c.scheme = scheme;
            if (opt_mx->count())
                c.mx = mx;
            if (opt_my->count())
                c.my = my;
            if (opt_spacing_x->count())
                c.spacing_x = spacing_x;
            if (opt_spacing_y->count())
                c.spacing_y = spacing_y;
            if (opt_q->count())
                c.q = q;
            if (opt_bits->count())
                c.bits = bits;
            if (opt_allow_remainder->count())
                c.allow_remainder = allow_remainder;
            if (opt_angles->count())
                std::copy(angles.begin(), angles.end(), c.angles_deg.begin());
            if (opt_trials->count())
                c.trials = trials;
            if (opt_seed->count())
                c.seed = seed;
            if (opt_noise_var->count())
                c.noise_var = noise_var;
            if (opt_direct_gain->count())
                c.direct_gain = {direct_gain[0], direct_gain[1]};
            if (opt_shards->count())
                c.shards = shards;
            if (opt_out->count())
                c.out_dir = out_dir;
            return c;
        }
    };

    std::vector<double> parse_snr_range(const std::string &text)
    {
        std::vector<std::string> parts;
        std::istringstream ss(text);
        std::string tok;
        while (std::getline(ss, tok, ':'))
            parts.push_back(tok);

        auto to_num = [&](const std::string &s) {
            try
            {
                std::size_t used = 0;
                double v = std::stod(s, &used);
                if (used != s.size())
                    throw riskeygen::ConfigError("bad number in --snr-db: " + s);
                return v;
            }
            catch (const riskeygen::ConfigError &)
            {
                throw;
            }
            catch (const std::exception &)
            {
                throw riskeygen::ConfigError("bad number in --snr-db: " + s);
            }
        };

        if (parts.size() == 1)
            return {to_num(parts[0])};
        if (parts.size() != 3)
            throw riskeygen::ConfigError("--snr-db expects VALUE or START:STEP:END, got: " + text);

        double start = to_num(parts[0]), step = to_num(parts[1]), end = to_num(parts[2]);
        if (step == 0.0)
            throw riskeygen::ConfigError("--snr-db step must be nonzero");
        std::vector<double> values;
        if (step > 0.0)
            for (double v = start; v <= end + 1e-9; v += step)
                values.push_back(v);
        else
            for (double v = start; v >= end - 1e-9; v += step)
                values.push_back(v);
        if (values.empty())
            throw riskeygen::ConfigError("--snr-db range is empty: " + text);
        return values;
    }

    void print_verdicts(const riskeygen::Report &report)
    {
        for (const riskeygen::Verdict &v : report.verdicts)
            std::cout << (v.pass ? "[PASS] " : "[FAIL] ") << v.name
                      << "  value=" << riskeygen::format_double(v.value)
                      << " reference=" << riskeygen::format_double(v.reference)
                      << " tolerance=" << riskeygen::format_double(v.tolerance) << "\n";
        std::cout << (report.all_pass() ? "all verdicts passed" : "some verdicts FAILED") << "\n";
    }

    int run_report_command(const ExperimentConfig &config)
    {
        riskeygen::Report report = riskeygen::run_and_write(config);
        print_verdicts(report);
        if (!config.out_dir.empty())
            std::cout << "outputs written to " << config.out_dir << "\n";
        return report.all_pass() ? 0 : 1;
    }
} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"riskeygen: RIS-induced channel randomness and secret-key-rate simulator"};
    app.require_subcommand(1);

    // simulate
    CLI::App *simulate = app.add_subcommand("simulate", "Generate channel samples, write CSV/JSON outputs");
    ModelFlags sim_flags;
    sim_flags.attach(simulate);

    // verify
    CLI::App *verify = app.add_subcommand("verify", "Run the verdict suite for a config");
    ModelFlags ver_flags;
    ver_flags.attach(verify);

    // skr
    CLI::App *skr = app.add_subcommand("skr", "Closed-form secret key rate, optionally with a KSG estimate");
    ModelFlags skr_flags;
    skr_flags.attach(skr);
    std::string snr_spec = "0";
    bool estimate = false;
    bool eq29_verbatim = false;
    std::uint64_t skr_pairs = 5000;
    int skr_k = 5;
    skr->add_option("--snr-db", snr_spec, "SNR grid in dB: VALUE or START:STEP:END");
    skr->add_flag("--estimate", estimate, "Also estimate the rate with the KSG estimator");
    skr->add_flag("--skr-eq29-verbatim", eq29_verbatim,
                  "Evaluate the full-log 1-bit rate variant (twice the per-quadrature form)");
    skr->add_option("--pairs", skr_pairs, "Observation pairs per estimated point");
    skr->add_option("--k", skr_k, "KSG neighbor count");

    // reproduce
    CLI::App *reproduce = app.add_subcommand("reproduce", "Emit plot-ready data for a known figure id");
    std::string fig_id;
    std::string rep_out;
    std::uint64_t rep_trials = 0;
    std::uint64_t rep_seed = 1;
    reproduce->add_option("figure", fig_id, "One of fig2a, fig2b, fig2c, fig3a, fig3b, fig3c, fig5")
        ->required();
    reproduce->add_option("--out", rep_out, "Output directory")->required();
    reproduce->add_option("--trials", rep_trials, "Override the default trial count");
    reproduce->add_option("--seed", rep_seed, "Global RNG seed");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2; // bad flags are config errors
    }

    try
    {
        if (simulate->parsed())
        {
            ExperimentConfig config = sim_flags.build();
            if (config.out_dir.empty())
                throw riskeygen::ConfigError("simulate requires --out (or out_dir in the config)");
            return run_report_command(config);
        }
        if (verify->parsed())
        {
            if (!ver_flags.opt_config->count())
                throw riskeygen::ConfigError("verify requires --config");
            return run_report_command(ver_flags.build());
        }
        if (skr->parsed())
        {
            ExperimentConfig config = skr_flags.build();
            config.mi_pairs = skr_pairs;
            config.mi_k = skr_k;
            config.skr_eq29_verbatim = eq29_verbatim;
            config.sweep = riskeygen::SweepSpec{"snr_db", parse_snr_range(snr_spec)};

            if (estimate)
            {
                if (config.trials < config.mi_pairs)
                    config.trials = config.mi_pairs;
                std::vector<riskeygen::SweepRow> rows = riskeygen::run_sweep(config);
                std::ostream *os = &std::cout;
                std::ofstream file;
                if (!config.out_dir.empty())
                {
                    std::filesystem::create_directories(config.out_dir);
                    file.open(std::filesystem::path(config.out_dir) / "skr_sweep.csv", std::ios::binary);
                    if (!file)
                        throw riskeygen::IoError("cannot write skr_sweep.csv");
                    os = &file;
                }
                riskeygen::write_sweep_csv(*os, rows);
                bool all = std::all_of(rows.begin(), rows.end(),
                                       [](const riskeygen::SweepRow &r) { return r.pass; });
                return all ? 0 : 1;
            }

            riskeygen::ChannelModel model = config.to_model();
            std::cout << "snr_db,rate_bits_per_sample,is_upper_bound\n";
            for (double snr : config.sweep->values)
            {
                double nv = riskeygen::noise_var_for_snr_db(snr, model.geometry.element_count());
                riskeygen::SkrResult r = riskeygen::skr_closed_form(
                    model.scheme, model.geometry, model.legit_angles, nv, config.skr_eq29_verbatim);
                std::cout << riskeygen::format_double(snr) << ','
                          << riskeygen::format_double(r.rate_bits_per_sample) << ','
                          << (r.is_upper_bound ? 1 : 0) << '\n';
            }
            return 0;
        }
        if (reproduce->parsed())
        {
            std::vector<std::string> files = riskeygen::reproduce_figure(fig_id, rep_out, rep_trials, rep_seed);
            for (const std::string &f : files)
                std::cout << "wrote " << f << "\n";
            return 0;
        }
    }
    catch (const riskeygen::Error &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return riskeygen::classify_exit_code(e);
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
