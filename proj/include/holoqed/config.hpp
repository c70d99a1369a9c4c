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

#ifndef HOLOQED_CONFIG_HPP
#define HOLOQED_CONFIG_HPP

#include <iosfwd>
#include <numbers>
#include <string>
#include <vector>

#include "holoqed/analysis.hpp"

namespace holoqed {

// Validated run configuration. The file format is flat sectioned
// key = value text with '#' comments; frequencies are given in MHz as
// ordinary frequencies (converted to angular rad/ns on load), times in ns,
// angles in radians. Unknown sections or keys are rejected with their line
// number. Omitted keys fall back to the defaults of PhysicalParams and
// IntegrationConfig.
struct RunConfig {
    PhysicalParams params;

    struct Drives {
        std::string kind = "u1";  // u1 | u2 | tones
        double theta = std::numbers::pi / 2.0;
        double phi = 0.0;
        std::vector<DriveSpec> tones;  // used when kind == "tones"
    } drives;

    struct Decoherence {
        DecoherenceMode mode = DecoherenceMode::Collective;
    } decoherence;

    IntegrationConfig simulation;

    struct Output {
        std::string directory = ".";
    } output;
};

RunConfig parse_config(const std::string& path);
RunConfig parse_config_stream(std::istream& in);

}  // namespace holoqed

#endif  // HOLOQED_CONFIG_HPP
