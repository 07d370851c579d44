// SPDX-License-Identifier: Apache-2.0
//
// irscf: two-timescale beamforming for IRS-assisted cell-free MIMO
// Copyright (C) 2026 The irscf authors
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

#ifndef IRSCF_CONFIG_HPP
#define IRSCF_CONFIG_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "irscf/scenario.hpp"
#include "irscf/sdp.hpp"

namespace irscf {

enum class Scheme { proposed, no_irs, random_passive };

std::string_view to_string(Scheme scheme);
// Accepts "proposed", "no-irs", "random-passive". Throws ConfigError otherwise.
Scheme parse_scheme(std::string_view name);
std::vector<Scheme> all_schemes();

struct SimulationConfig {
    int drops = 200;
    int realizations = 200;    // T, channel draws behind every expectation
    int randomizations = 200;  // Gaussian randomization candidates
    std::uint64_t seed = 1;
    std::vector<Scheme> schemes = all_schemes();
    int jobs = 1;
    bool export_theta = false;
    SdpTolerances sdp;

    void validate() const;
};

enum class SweepAxis { none, N, M, R, d, P_bar };

std::string_view to_string(SweepAxis axis);
SweepAxis parse_axis(std::string_view name);

// A labelled variant of the base config, given as dotted-key overrides.
struct SweepSeries {
    std::string label;
    std::vector<std::string> set;
};

// Campaigns along one axis, repeated for every series (or once when there are
// none). With axis R the surface counts may come with a matching element count
// in `pairs` (R, N) so the product R*N can be held fixed.
struct SweepConfig {
    SweepAxis axis = SweepAxis::none;
    std::vector<double> values;
    std::vector<std::pair<int, int>> pairs;
    std::vector<SweepSeries> series;

    std::size_t size() const { return pairs.empty() ? values.size() : pairs.size(); }
    void validate() const;
};

struct ExperimentConfig {
    std::string name = "default";
    ScenarioConfig scenario;
    SimulationConfig simulation;
    SweepConfig sweep;

    void validate() const;
};

// Canonical JSON text (sorted keys, two-space indent) of the full config.
std::string to_json_text(const ExperimentConfig& config);

// Strict parse: unknown keys and mistyped values throw ConfigError naming the
// offending dotted key. Missing keys keep their defaults.
ExperimentConfig parse_config(std::string_view json_text);
ExperimentConfig load_config(const std::filesystem::path& path);

// Applies "dotted.key=value". The value is type-checked against the field it
// targets; arrays are written as JSON ("[32,64]", "[\"proposed\"]").
void apply_override(ExperimentConfig& config, std::string_view assignment);

// FNV-1a 64 of the canonical JSON text, as 16 hex digits.
std::string config_hash(const ExperimentConfig& config);

} // namespace irscf

#endif
