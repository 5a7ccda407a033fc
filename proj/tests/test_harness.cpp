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

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "riskeygen/errors.hpp"
#include "riskeygen/harness.hpp"

using namespace riskeygen;
using Catch::Matchers::WithinAbs;

namespace
{
    std::string read_file(const std::filesystem::path &p)
    {
        std::ifstream in(p, std::ios::binary);
        REQUIRE(in);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }

    std::filesystem::path temp_dir(const std::string &name)
    {
        std::filesystem::path p = std::filesystem::temp_directory_path() / ("riskeygen_test_" + name);
        std::filesystem::remove_all(p);
        return p;
    }
} // namespace

TEST_CASE("config file parsing")
{
    const std::string toml = R"(
# experiment
scheme = "cgps"
mx = 8
my = 8
q = 4
angles = [30.0, 30.0, 150.0, 60.0]
trials = 5000
seed = 99
noise_var = 1.5
estimate_mi = true

[sweep]
parameter = "M"
values = [16, 36, 64]

[tolerances]
variance_rel = 0.05
ks_alpha = 0.05
)";
    ExperimentConfig c = config_from_keyvalues(KeyValueFile::parse_string(toml));
    CHECK(c.scheme == "cgps");
    CHECK(c.q == 4);
    CHECK(c.trials == 5000);
    CHECK(c.seed == 99);
    CHECK(c.noise_var == 1.5);
    CHECK(c.estimate_mi);
    REQUIRE(c.sweep.has_value());
    CHECK(c.sweep->parameter == "M");
    CHECK(c.sweep->values == std::vector<double>{16, 36, 64});
    CHECK(c.tol.variance_rel == 0.05);
    CHECK(c.tol.ks_alpha == 0.05);

    CHECK_THROWS_AS(KeyValueFile::parse_string("not a key value line"), ConfigError);
    CHECK_THROWS_AS(config_from_keyvalues(KeyValueFile::parse_string("angles = [1, 2]")), ConfigError);
    CHECK_THROWS_AS(config_from_keyvalues(KeyValueFile::parse_string("trials = 0")), ConfigError);
    CHECK_THROWS_AS(config_from_keyvalues(KeyValueFile::parse_string("sweep.parameter = \"X\"\nsweep.values = [1]")),
                    ConfigError);
    CHECK_THROWS_AS(load_config("/nonexistent/path/config.toml"), IoError);
}

TEST_CASE("config echo round-trips")
{
    ExperimentConfig c;
    c.scheme = "dips";
    c.bits = 3;
    c.trials = 1234;
    c.seed = 77;
    c.noise_var = 0.25;
    c.sweep = SweepSpec{"snr_db", {-10, 0, 10}};

    ExperimentConfig back = config_from_keyvalues(KeyValueFile::parse_string(c.to_toml()));
    CHECK(back.scheme == c.scheme);
    CHECK(back.bits == c.bits);
    CHECK(back.trials == c.trials);
    CHECK(back.seed == c.seed);
    CHECK(back.noise_var == c.noise_var);
    REQUIRE(back.sweep.has_value());
    CHECK(back.sweep->values == c.sweep->values);
    CHECK(back.to_toml() == c.to_toml());
}

TEST_CASE("scheme and model construction errors carry the right exit codes")
{
    ExperimentConfig c;
    c.scheme = "bogus";
    CHECK_THROWS_AS(c.to_scheme(), ModelError);

    c.scheme = "cgps";
    c.q = 3; // 3 does not divide 64
    try
    {
        c.to_model();
        FAIL("expected NotDivisibleError");
    }
    catch (const Error &e)
    {
        CHECK(std::string(e.what()).find("NotDivisible") != std::string::npos);
        CHECK(classify_exit_code(e) == 3);
    }

    CHECK(classify_exit_code(ConfigError("x")) == 2);
    CHECK(classify_exit_code(IoError("x")) == 4);
    CHECK(classify_exit_code(NonSquareGeometryError("x")) == 3);
    CHECK(classify_exit_code(std::runtime_error("x")) == 1);
}

TEST_CASE("minimal experiment report is fully populated and deterministic")
{
    ExperimentConfig c;
    c.scheme = "cips";
    c.trials = 1000;
    c.seed = 5;

    Report r1 = run_experiment(c);
    CHECK(r1.empirical.n == 1000);
    CHECK(r1.analytic.var_total == 64.0);
    CHECK_FALSE(r1.skr.has_value());
    CHECK_FALSE(r1.mi.has_value());
    CHECK_FALSE(r1.gof.empty());
    CHECK_FALSE(r1.verdicts.empty());

    Report r2 = run_experiment(c);
    CHECK(report_to_json(r1).dump() == report_to_json(r2).dump());
}

TEST_CASE("noisy experiment attaches rate and MI estimate")
{
    ExperimentConfig c;
    c.scheme = "cips";
    c.trials = 600;
    c.seed = 6;
    c.noise_var = 32.0; // snr 0 dB
    c.estimate_mi = true;
    c.mi_pairs = 500;

    Report r = run_experiment(c);
    REQUIRE(r.skr.has_value());
    CHECK_THAT(r.skr->rate_bits_per_sample, WithinAbs(0.41503749927884376, 1e-12));
    REQUIRE(r.mi.has_value());
    CHECK(r.mi->n == 500);
    CHECK(std::isfinite(r.mi->bits));

    nlohmann::json j = report_to_json(r);
    CHECK(j["schema_version"] == 1);
    CHECK(j.contains("conventions"));
    CHECK(j["mi"]["n"] == 500);
    CHECK(j["analytic"]["skr"]["is_upper_bound"] == false);
}

TEST_CASE("variance sweep over the element grid")
{
    ExperimentConfig c;
    c.scheme = "cips";
    c.trials = 20000;
    c.seed = 8;
    c.sweep = SweepSpec{"M", {16, 36, 64, 100, 144}};

    std::vector<SweepRow> rows = run_sweep(c);
    REQUIRE(rows.size() == 5);
    for (const SweepRow &row : rows)
    {
        CHECK(row.analytic == row.x);
        CHECK(std::abs(row.empirical - row.analytic) < 0.03 * row.analytic);
        CHECK(row.pass);
    }

    std::ostringstream os;
    write_sweep_csv(os, rows);
    std::string first_line = os.str().substr(0, os.str().find('\n'));
    CHECK(first_line == "x,empirical,analytic,tolerance,pass");

    ExperimentConfig bad = c;
    bad.sweep = SweepSpec{"M", {17}};
    CHECK_THROWS_AS(run_sweep(bad), ConfigError);
    bad.sweep.reset();
    CHECK_THROWS_AS(run_sweep(bad), ConfigError);
}

TEST_CASE("snr mapping uses the baseline element count")
{
    CHECK_THAT(noise_var_for_snr_db(10.0, 64), WithinAbs(3.2, 1e-12));
    CHECK_THAT(noise_var_for_snr_db(0.0, 64), WithinAbs(32.0, 1e-12));
    CHECK_THAT(noise_var_for_snr_db(-10.0, 64), WithinAbs(320.0, 1e-12));
}

TEST_CASE("report files are written and regenerate bit-exactly from the echo")
{
    std::filesystem::path dir = temp_dir("report");
    ExperimentConfig c;
    c.scheme = "cips";
    c.trials = 500;
    c.seed = 12;
    c.noise_var = 1.0;
    c.out_dir = dir.string();

    Report r = run_and_write(c);
    CHECK(std::filesystem::exists(dir / "report.json"));
    CHECK(std::filesystem::exists(dir / "config_echo.toml"));
    CHECK(std::filesystem::exists(dir / "samples.csv"));
    CHECK(std::filesystem::exists(dir / "pairs.csv"));

    std::string report1 = read_file(dir / "report.json");
    std::string samples1 = read_file(dir / "samples.csv");

    // regenerate from the echoed config into a second directory
    ExperimentConfig echoed = load_config((dir / "config_echo.toml").string());
    std::filesystem::path dir2 = temp_dir("report2");
    echoed.out_dir = dir2.string();
    run_and_write(echoed);
    CHECK(read_file(dir2 / "report.json") == report1);
    CHECK(read_file(dir2 / "samples.csv") == samples1);

    std::filesystem::remove_all(dir);
    std::filesystem::remove_all(dir2);
}

namespace
{
    // pulls the named column out of a sweep/histogram csv
    std::vector<double> csv_column(const std::string &body, std::size_t index)
    {
        std::vector<double> out;
        std::istringstream in(body);
        std::string line;
        std::getline(in, line); // header
        while (std::getline(in, line))
        {
            std::istringstream row(line);
            std::string cell;
            for (std::size_t i = 0; i <= index; ++i)
                REQUIRE(std::getline(row, cell, ','));
            out.push_back(std::stod(cell));
        }
        return out;
    }
} // namespace

TEST_CASE("figure reproduction writes the documented series")
{
    std::filesystem::path dir = temp_dir("figs");

    std::vector<std::string> files = reproduce_figure("fig2a", dir.string(), 20000, 3);
    REQUIRE(files.size() == 4);
    for (const std::string &f : files)
    {
        REQUIRE(std::filesystem::exists(f));
        std::string body = read_file(f);
        CHECK(body.rfind("x,empirical,analytic,tolerance,pass\n", 0) == 0);
        CHECK(std::count(body.begin(), body.end(), '\n') == 6); // header + 5 grid points
    }

    // the 3-bit discrete series coincides with the continuous one
    std::vector<double> m_grid = csv_column(read_file(files[0]), 0);
    std::vector<double> cips = csv_column(read_file(files[0]), 1);
    std::vector<double> dips3 = csv_column(read_file(files[3]), 1);
    REQUIRE(cips.size() == 5);
    REQUIRE(dips3.size() == 5);
    for (std::size_t i = 0; i < cips.size(); ++i)
        CHECK(std::abs(cips[i] - dips3[i]) < 0.03 * m_grid[i]);

    std::vector<std::string> hist = reproduce_figure("fig3b", dir.string(), 2000, 3);
    REQUIRE(hist.size() == 2);
    CHECK(read_file(hist[0]).rfind("x,empirical,analytic\n", 0) == 0);

    CHECK_THROWS_AS(reproduce_figure("fig9", dir.string()), ConfigError);
    std::filesystem::remove_all(dir);
}
