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

#ifndef IRSCF_SIM_HPP
#define IRSCF_SIM_HPP

#include <armadillo>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "irscf/config.hpp"
#include "irscf/sdp.hpp"

namespace irscf {

// Per-drop random streams. Each is derive_seed(drop_seed, stream id) and
// drop_seed = derive_seed(campaign_seed, drop index), so a drop's numbers do
// not depend on scheduling or on which schemes run.
struct DropSeeds {
    std::uint64_t drop = 0;
    std::uint64_t placement = 0;      // UE positions
    std::uint64_t estimation = 0;     // realizations behind the precoder power
    std::uint64_t evaluation = 0;     // independent realizations for the power check
    std::uint64_t randomization = 0;  // Gaussian randomization candidates
    std::uint64_t random_theta = 0;   // phases of the random-passive scheme

    static DropSeeds derive(std::uint64_t campaign_seed, int drop_index);
};

struct SchemeOutcome {
    Scheme scheme = Scheme::proposed;
    double min_rate = 0.0;           // bits/s/Hz
    double p_opt = 0.0;              // watts
    int binding_ap = -1;
    double average_gain = 0.0;       // min_k of the statistical gain at the chosen theta
    double power_utilization = 0.0;  // max_l realized power / budget on evaluation draws
    std::optional<arma::cx_vec> theta;
};

struct DropResult {
    int drop = 0;
    bool ok = false;
    std::string error;
    std::vector<SchemeOutcome> schemes;  // in config order
    // Relaxation diagnostics of the proposed scheme.
    std::optional<SdpSolution> relaxation;
    bool rank_one = false;

    const SchemeOutcome& outcome(Scheme scheme) const;
};

// Runs every configured scheme on one UE drop with paired seeds. Errors are
// caught and recorded in the result, tagged with the drop index.
DropResult run_drop(const ExperimentConfig& config, int drop_index);

struct CdfPoint {
    double rate = 0.0;
    double probability = 0.0;  // i / n for the i-th smallest sample
};

struct SchemeSummary {
    Scheme scheme = Scheme::proposed;
    std::vector<double> min_rate;  // per successful drop, in drop order
    double mean = 0.0;
    double median = 0.0;
    std::vector<CdfPoint> cdf;
};

struct SimulationResult {
    ExperimentConfig config;
    std::string config_hash;
    std::vector<DropResult> drops;
    std::vector<SchemeSummary> summaries;  // in config order
    int failed_drops = 0;

    const SchemeSummary& summary(Scheme scheme) const;
};

std::vector<CdfPoint> empirical_cdf(std::vector<double> samples);
double median(std::vector<double> samples);

// Runs config.simulation.drops drops on config.simulation.jobs workers.
// Throws NumericalError when more than 1% of the drops fail.
SimulationResult run_campaign(const ExperimentConfig& config);

struct SweepPoint {
    std::string series;  // empty without series
    double value = 0.0;
    std::optional<std::pair<int, int>> pair;  // (R, N) for fixed-product sweeps
    SimulationResult result;
};

// Returns config with the axis set to value (and N for an (R, N) pair), validated.
ExperimentConfig apply_axis(const ExperimentConfig& config, SweepAxis axis, double value,
                            std::optional<std::pair<int, int>> pair = std::nullopt);

// One paired campaign per series and sweep value, same campaign seed each.
std::vector<SweepPoint> run_sweep(const ExperimentConfig& config);

} // namespace irscf

#endif
