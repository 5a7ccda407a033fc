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

#include "riskeygen/config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

#include "riskeygen/errors.hpp"

namespace riskeygen
{
    namespace
    {
        std::string trim(const std::string &s)
        {
            std::size_t b = s.find_first_not_of(" \t\r");
            if (b == std::string::npos)
                return "";
            std::size_t e = s.find_last_not_of(" \t\r");
            return s.substr(b, e - b + 1);
        }

        // strips a trailing comment that is not inside a quoted string
        std::string strip_comment(const std::string &s)
        {
            bool quoted = false;
            for (std::size_t i = 0; i < s.size(); ++i)
            {
                if (s[i] == '"')
                    quoted = !quoted;
                else if (s[i] == '#' && !quoted)
                    return s.substr(0, i);
            }
            return s;
        }

        double parse_number_token(const std::string &tok, const std::string &key)
        {
            try
            {
                std::size_t used = 0;
                double v = std::stod(tok, &used);
                if (used != tok.size())
                    throw ConfigError("trailing characters after number in '" + key + "': " + tok);
                return v;
            }
            catch (const ConfigError &)
            {
                throw;
            }
            catch (const std::exception &)
            {
                throw ConfigError("expected a number for '" + key + "', got: " + tok);
            }
        }
    } // namespace

    KeyValueFile KeyValueFile::parse_file(const std::string &path)
    {
        std::ifstream in(path);
        if (!in)
            throw IoError("cannot open config file: " + path);
        std::stringstream ss;
        ss << in.rdbuf();
        return parse_string(ss.str());
    }

    KeyValueFile KeyValueFile::parse_string(const std::string &text)
    {
        KeyValueFile kv;
        std::istringstream in(text);
        std::string line;
        std::string section;
        int lineno = 0;
        while (std::getline(in, line))
        {
            ++lineno;
            std::string t = trim(strip_comment(line));
            if (t.empty())
                continue;
            if (t.front() == '[')
            {
                if (t.back() != ']')
                    throw ConfigError("malformed section header at line " + std::to_string(lineno));
                section = trim(t.substr(1, t.size() - 2));
                continue;
            }
            std::size_t eq = t.find('=');
            if (eq == std::string::npos)
                throw ConfigError("expected key = value at line " + std::to_string(lineno) + ": " + t);
            std::string key = trim(t.substr(0, eq));
            std::string val = trim(t.substr(eq + 1));
            if (key.empty() || val.empty())
                throw ConfigError("empty key or value at line " + std::to_string(lineno));
            if (!section.empty())
                key = section + "." + key;
            kv.values_[key] = val;
        }
        return kv;
    }

    bool KeyValueFile::has(const std::string &key) const
    {
        return values_.count(key) != 0;
    }

    const std::string &KeyValueFile::lookup(const std::string &key) const
    {
        auto it = values_.find(key);
        if (it == values_.end())
            throw ConfigError("missing config key: " + key);
        return it->second;
    }

    std::string KeyValueFile::get_string(const std::string &key) const
    {
        const std::string &v = lookup(key);
        if (v.size() >= 2 && v.front() == '"' && v.back() == '"')
            return v.substr(1, v.size() - 2);
        return v;
    }

    double KeyValueFile::get_number(const std::string &key) const
    {
        return parse_number_token(lookup(key), key);
    }

    std::int64_t KeyValueFile::get_integer(const std::string &key) const
    {
        double v = get_number(key);
        double r = std::round(v);
        if (std::abs(v - r) > 1e-9)
            throw ConfigError("expected an integer for '" + key + "'");
        return static_cast<std::int64_t>(r);
    }

    bool KeyValueFile::get_bool(const std::string &key) const
    {
        const std::string &v = lookup(key);
        if (v == "true")
            return true;
        if (v == "false")
            return false;
        throw ConfigError("expected true/false for '" + key + "', got: " + v);
    }

    std::vector<double> KeyValueFile::get_number_array(const std::string &key) const
    {
        const std::string &v = lookup(key);
        if (v.size() < 2 || v.front() != '[' || v.back() != ']')
            throw ConfigError("expected [a, b, ...] for '" + key + "', got: " + v);
        std::vector<double> out;
        std::string inner = v.substr(1, v.size() - 2);
        std::istringstream ss(inner);
        std::string tok;
        while (std::getline(ss, tok, ','))
        {
            tok = trim(tok);
            if (tok.empty())
                continue;
            out.push_back(parse_number_token(tok, key));
        }
        return out;
    }

    PhaseScheme ExperimentConfig::to_scheme() const
    {
        if (scheme == "cips")
            return Cips{};
        if (scheme == "cgps")
            return Cgps{q, allow_remainder};
        if (scheme == "dips")
            return Dips{bits};
        throw ModelError("unknown scheme: " + scheme + " (expected cips, cgps or dips)");
    }

    ChannelModel ExperimentConfig::to_model() const
    {
        ChannelModel m;
        m.geometry = RisGeometry(mx, my, spacing_x, spacing_y, wavelength);
        m.legit_angles = AnglePair::from_degrees(angles_deg[0], angles_deg[1], angles_deg[2], angles_deg[3]);
        m.scheme = to_scheme();
        m.direct_gain = {direct_gain[0], direct_gain[1]};
        m.noise_var_per_quadrature = noise_var;
        m.validate();
        return m;
    }

    namespace
    {
        void apply_keyvalues(ExperimentConfig &c, const KeyValueFile &kv)
        {
            if (kv.has("scheme"))
                c.scheme = kv.get_string("scheme");
            if (kv.has("mx"))
                c.mx = static_cast<int>(kv.get_integer("mx"));
            if (kv.has("my"))
                c.my = static_cast<int>(kv.get_integer("my"));
            if (kv.has("spacing_x"))
                c.spacing_x = kv.get_number("spacing_x");
            if (kv.has("spacing_y"))
                c.spacing_y = kv.get_number("spacing_y");
            if (kv.has("wavelength"))
                c.wavelength = kv.get_number("wavelength");
            if (kv.has("q"))
                c.q = static_cast<int>(kv.get_integer("q"));
            if (kv.has("bits"))
                c.bits = static_cast<int>(kv.get_integer("bits"));
            if (kv.has("allow_remainder"))
                c.allow_remainder = kv.get_bool("allow_remainder");
            if (kv.has("angles"))
            {
                std::vector<double> a = kv.get_number_array("angles");
                if (a.size() != 4)
                    throw ConfigError("angles must have 4 entries: psi_i, theta_i, psi_o, theta_o");
                std::copy(a.begin(), a.end(), c.angles_deg.begin());
            }
            if (kv.has("trials"))
            {
                std::int64_t t = kv.get_integer("trials");
                if (t < 1)
                    throw ConfigError("trials must be >= 1");
                c.trials = static_cast<std::uint64_t>(t);
            }
            if (kv.has("seed"))
                c.seed = static_cast<std::uint64_t>(kv.get_integer("seed"));
            if (kv.has("noise_var"))
                c.noise_var = kv.get_number("noise_var");
            if (kv.has("direct_gain"))
            {
                std::vector<double> g = kv.get_number_array("direct_gain");
                if (g.size() != 2)
                    throw ConfigError("direct_gain must have 2 entries: re, im");
                c.direct_gain = {g[0], g[1]};
            }
            if (kv.has("estimate_mi"))
                c.estimate_mi = kv.get_bool("estimate_mi");
            if (kv.has("mi_k"))
                c.mi_k = static_cast<int>(kv.get_integer("mi_k"));
            if (kv.has("mi_pairs"))
                c.mi_pairs = static_cast<std::uint64_t>(kv.get_integer("mi_pairs"));
            if (kv.has("skr_eq29_verbatim"))
                c.skr_eq29_verbatim = kv.get_bool("skr_eq29_verbatim");
            if (kv.has("shards"))
                c.shards = static_cast<int>(kv.get_integer("shards"));
            if (kv.has("out_dir"))
                c.out_dir = kv.get_string("out_dir");

            if (kv.has("sweep.parameter"))
            {
                SweepSpec s;
                s.parameter = kv.get_string("sweep.parameter");
                s.values = kv.get_number_array("sweep.values");
                if (s.values.empty())
                    throw ConfigError("sweep.values must be nonempty");
                if (s.parameter != "M" && s.parameter != "snr_db" && s.parameter != "q" &&
                    s.parameter != "bits")
                    throw ConfigError("sweep.parameter must be one of M, snr_db, q, bits");
                c.sweep = s;
            }

            if (kv.has("tolerances.variance_rel"))
                c.tol.variance_rel = kv.get_number("tolerances.variance_rel");
            if (kv.has("tolerances.ks_alpha"))
                c.tol.ks_alpha = kv.get_number("tolerances.ks_alpha");
            if (kv.has("tolerances.mi_bits"))
                c.tol.mi_bits = kv.get_number("tolerances.mi_bits");
            if (c.tol.variance_rel <= 0.0 || c.tol.mi_bits <= 0.0)
                throw ConfigError("tolerances must be positive");
            if (std::abs(c.tol.ks_alpha - 0.05) > 1e-12 && std::abs(c.tol.ks_alpha - 0.01) > 1e-12)
                throw ConfigError("tolerances.ks_alpha must be 0.05 or 0.01");
        }
    } // namespace

    ExperimentConfig config_from_keyvalues(const KeyValueFile &kv)
    {
        ExperimentConfig c;
        apply_keyvalues(c, kv);
        return c;
    }

    ExperimentConfig load_config(const std::string &path)
    {
        return config_from_keyvalues(KeyValueFile::parse_file(path));
    }

    std::string ExperimentConfig::to_toml() const
    {
        std::ostringstream os;
        os << "scheme = \"" << scheme << "\"\n";
        os << "mx = " << mx << "\n";
        os << "my = " << my << "\n";
        os << "spacing_x = " << format_double(spacing_x) << "\n";
        os << "spacing_y = " << format_double(spacing_y) << "\n";
        os << "wavelength = " << format_double(wavelength) << "\n";
        os << "q = " << q << "\n";
        os << "bits = " << bits << "\n";
        os << "allow_remainder = " << (allow_remainder ? "true" : "false") << "\n";
        os << "angles = [" << format_double(angles_deg[0]) << ", " << format_double(angles_deg[1])
           << ", " << format_double(angles_deg[2]) << ", " << format_double(angles_deg[3]) << "]\n";
        os << "trials = " << trials << "\n";
        os << "seed = " << seed << "\n";
        os << "noise_var = " << format_double(noise_var) << "\n";
        os << "direct_gain = [" << format_double(direct_gain[0]) << ", "
           << format_double(direct_gain[1]) << "]\n";
        os << "estimate_mi = " << (estimate_mi ? "true" : "false") << "\n";
        os << "mi_k = " << mi_k << "\n";
        os << "mi_pairs = " << mi_pairs << "\n";
        os << "skr_eq29_verbatim = " << (skr_eq29_verbatim ? "true" : "false") << "\n";
        if (sweep)
        {
            os << "\n[sweep]\n";
            os << "parameter = \"" << sweep->parameter << "\"\n";
            os << "values = [";
            for (std::size_t i = 0; i < sweep->values.size(); ++i)
                os << (i ? ", " : "") << format_double(sweep->values[i]);
            os << "]\n";
        }
        os << "\n[tolerances]\n";
        os << "variance_rel = " << format_double(tol.variance_rel) << "\n";
        os << "ks_alpha = " << format_double(tol.ks_alpha) << "\n";
        os << "mi_bits = " << format_double(tol.mi_bits) << "\n";
        return os.str();
    }

} // namespace riskeygen
