// Copyright 2026 The holoqed Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "holoqed/config.hpp"

#include <fstream>
#include <sstream>

namespace holoqed {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_number(const std::string& value, int line) {
    try {
        std::size_t used = 0;
        const double v = std::stod(value, &used);
        if (used != value.size())
            throw ConfigError("trailing characters after number '" + value +
                                  "'",
                              line);
        return v;
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception&) {
        throw ConfigError("expected a number, got '" + value + "'", line);
    }
}

int parse_int(const std::string& value, int line) {
    const double v = parse_number(value, line);
    const int i = static_cast<int>(v);
    if (static_cast<double>(i) != v)
        throw ConfigError("expected an integer, got '" + value + "'", line);
    return i;
}

double parse_frequency_mhz(const std::string& key, const std::string& value,
                           int line) {
    const double v = parse_number(value, line);
    if (v < 0.0)
        throw ConfigError("'" + key + "' must be a non-negative frequency",
                          line);
    return mhz(v);
}

std::vector<double> parse_list(const std::string& value, int line) {
    std::vector<double> out;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(parse_number(trim(item), line));
    if (out.empty()) throw ConfigError("expected a comma-separated list", line);
    return out;
}

DriveSpec parse_tone(const std::string& value, int line) {
    const auto fields = parse_list(value, line);
    if (fields.size() != 4)
        throw ConfigError(
            "tone needs 4 fields: qubit, g_MHz, detuning_MHz, phase_rad",
            line);
    DriveSpec d;
    d.qubit = static_cast<int>(fields[0]);
    if (static_cast<double>(d.qubit) != fields[0] || d.qubit < 1)
        throw ConfigError("tone qubit must be a positive integer", line);
    if (fields[1] < 0.0)
        throw ConfigError("tone coupling must be non-negative", line);
    d.g = mhz(fields[1]);
    d.detuning = mhz(fields[2]);
    d.phase = fields[3];
    return d;
}

}  // namespace

RunConfig parse_config_stream(std::istream& in) {
    RunConfig cfg;
    std::string section;
    std::string raw;
    int line = 0;
    int dt_line = 0;

    while (std::getline(in, raw)) {
        ++line;
        std::string text = raw;
        const auto hash = text.find('#');
        if (hash != std::string::npos) text.erase(hash);
        text = trim(text);
        if (text.empty()) continue;

        if (text.front() == '[') {
            if (text.back() != ']')
                throw ConfigError("unterminated section header", line);
            section = trim(text.substr(1, text.size() - 2));
            if (section != "system" && section != "drives" &&
                section != "decoherence" && section != "simulation" &&
                section != "output")
                throw ConfigError("unknown section [" + section + "]", line);
            continue;
        }

        const auto eq = text.find('=');
        if (eq == std::string::npos)
            throw ConfigError("expected 'key = value'", line);
        const std::string key = trim(text.substr(0, eq));
        const std::string value = trim(text.substr(eq + 1));
        if (key.empty()) throw ConfigError("empty key", line);
        if (value.empty())
            throw ConfigError("empty value for key '" + key + "'", line);
        if (section.empty())
            throw ConfigError("key '" + key + "' outside any section", line);

        if (section == "system") {
            if (key == "G")
                cfg.params.G = parse_frequency_mhz(key, value, line);
            else if (key == "Omega_L")
                cfg.params.Omega_L = parse_frequency_mhz(key, value, line);
            else if (key == "Delta")
                cfg.params.Delta = parse_frequency_mhz(key, value, line);
            else if (key == "delta")
                cfg.params.delta = parse_frequency_mhz(key, value, line);
            else if (key == "g")
                cfg.params.g = parse_frequency_mhz(key, value, line);
            else if (key == "kappa")
                cfg.params.kappa = parse_frequency_mhz(key, value, line);
            else if (key == "gamma")
                cfg.params.gamma = parse_frequency_mhz(key, value, line);
            else if (key == "gamma_phi")
                cfg.params.gamma_phi = parse_frequency_mhz(key, value, line);
            else if (key == "rate_multipliers") {
                cfg.params.rate_multipliers = parse_list(value, line);
                for (double m : cfg.params.rate_multipliers)
                    if (m < 0.0)
                        throw ConfigError(
                            "rate multipliers must be non-negative", line);
            } else
                throw ConfigError("unknown key '" + key + "' in [system]",
                                  line);
        } else if (section == "drives") {
            if (key == "kind") {
                if (value != "u1" && value != "u2" && value != "tones")
                    throw ConfigError("kind must be u1, u2 or tones", line);
                cfg.drives.kind = value;
            } else if (key == "theta")
                cfg.drives.theta = parse_number(value, line);
            else if (key == "phi")
                cfg.drives.phi = parse_number(value, line);
            else if (key == "tone")
                cfg.drives.tones.push_back(parse_tone(value, line));
            else
                throw ConfigError("unknown key '" + key + "' in [drives]",
                                  line);
        } else if (section == "decoherence") {
            if (key == "mode") {
                if (value == "collective")
                    cfg.decoherence.mode = DecoherenceMode::Collective;
                else if (value == "individual")
                    cfg.decoherence.mode = DecoherenceMode::Individual;
                else
                    throw ConfigError("mode must be collective or individual",
                                      line);
            } else
                throw ConfigError("unknown key '" + key + "' in [decoherence]",
                                  line);
        } else if (section == "simulation") {
            if (key == "dt") {
                cfg.simulation.dt = parse_number(value, line);
                dt_line = line;
                if (cfg.simulation.dt <= 0.0)
                    throw ConfigError("dt must be positive", line);
            } else if (key == "t_end")
                cfg.simulation.t_end = parse_number(value, line);
            else if (key == "sample_stride") {
                cfg.simulation.sample_stride = parse_int(value, line);
                if (cfg.simulation.sample_stride < 1)
                    throw ConfigError("sample_stride must be >= 1", line);
            } else if (key == "n_max") {
                cfg.simulation.n_max = parse_int(value, line);
                if (cfg.simulation.n_max < 1)
                    throw ConfigError("n_max must be >= 1", line);
            } else if (key == "max_excitation")
                cfg.simulation.max_excitation = parse_int(value, line);
            else
                throw ConfigError("unknown key '" + key + "' in [simulation]",
                                  line);
        } else {  // output
            if (key == "directory")
                cfg.output.directory = value;
            else
                throw ConfigError("unknown key '" + key + "' in [output]",
                                  line);
        }
    }

    try {
        cfg.params.validate();
    } catch (const ParameterError& e) {
        throw ConfigError(e.what());
    }
    try {
        cfg.simulation.validate(cfg.params.delta);
    } catch (const ParameterError& e) {
        throw ConfigError(e.what(), dt_line);
    }
    if (cfg.drives.kind == "tones" && cfg.drives.tones.empty())
        throw ConfigError("kind = tones requires at least one tone entry");
    return cfg;
}

RunConfig parse_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    return parse_config_stream(in);
}

}  // namespace holoqed
