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

#ifndef RISKEYGEN_CONFIG_HPP
#define RISKEYGEN_CONFIG_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "riskeygen/channel.hpp"

namespace riskeygen
{
    // Flat TOML-style key/value file: strings, numbers, booleans and
    // one-dimensional arrays, with '#' comments. Section headers [name]
    // prefix keys as "name.key".
    class KeyValueFile
    {
    public:
        static KeyValueFile parse_file(const std::string &path); // IoError / ConfigError
        static KeyValueFile parse_string(const std::string &text);

        bool has(const std::string &key) const;
        std::string get_string(const std::string &key) const;
        double get_number(const std::string &key) const;
        std::int64_t get_integer(const std::string &key) const;
        bool get_bool(const std::string &key) const;
        std::vector<double> get_number_array(const std::string &key) const;

        const std::map<std::string, std::string> &raw() const { return values_; }

    private:
        const std::string &lookup(const std::string &key) const;
        std::map<std::string, std::string> values_; // key -> raw token
    };

    struct SweepSpec
    {
        std::string parameter; // "M" | "snr_db" | "q" | "bits"
        std::vector<double> values;
    };

    struct ToleranceConfig
    {
        double variance_rel = 0.03; // relative tolerance on variances
        double ks_alpha = 0.01;     // KS significance level
        double mi_bits = 0.2;       // absolute tolerance on MI vs closed form
    };

    // One experiment, loadable from file and overridable by CLI flags.
    // Angles are degrees here and become radians at the model boundary.
    struct ExperimentConfig
    {
        std::string scheme = "cips"; // cips | cgps | dips
        int mx = 8;
        int my = 8;
        double spacing_x = 0.5; // wavelengths
        double spacing_y = 0.5;
        double wavelength = 1.0;
        int q = 2;
        int bits = 3;
        bool allow_remainder = false;
        std::array<double, 4> angles_deg{30.0, 30.0, 150.0, 60.0}; // psi_i, theta_i, psi_o, theta_o
        std::uint64_t trials = 100000;
        std::uint64_t seed = 1;
        double noise_var = 0.0; // per quadrature
        std::array<double, 2> direct_gain{0.0, 0.0};
        bool estimate_mi = false;
        int mi_k = 5;
        std::uint64_t mi_pairs = 5000;
        bool skr_eq29_verbatim = false;
        std::optional<SweepSpec> sweep;
        ToleranceConfig tol;

        // Execution details, not part of the experiment identity: excluded
        // from the report echo so outputs are byte-stable across shard counts.
        int shards = 1;
        std::string out_dir;

        PhaseScheme to_scheme() const;     // ModelError on bad scheme fields
        ChannelModel to_model() const;     // full validation
        std::string to_toml() const;       // echo, regenerates this run
    };

    ExperimentConfig load_config(const std::string &path);
    ExperimentConfig config_from_keyvalues(const KeyValueFile &kv);

} // namespace riskeygen

#endif
