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

#ifndef IRSCF_VALIDATE_HPP
#define IRSCF_VALIDATE_HPP

#include <armadillo>
#include <cstdint>
#include <string>
#include <vector>

#include "irscf/channel.hpp"
#include "irscf/config.hpp"
#include "irscf/rng.hpp"

namespace irscf {

// Sample mean of ||h_{l,k}||^2 over draws realizations, L x K.
arma::mat monte_carlo_link_gain(const ChannelStatistics& stats, const arma::cx_vec& theta, int draws, Rng& rng);

struct PropertyResult {
    std::string name;
    bool passed = false;
    double measured = 0.0;
    double threshold = 0.0;
    bool upper_bound = true;  // measured must stay below threshold, else above
    std::string detail;

    // Distance to the threshold on the passing side; negative when failing.
    double margin() const { return upper_bound ? threshold - measured : measured - threshold; }
};

struct ValidateOptions {
    std::uint64_t seed = 1;
    int monte_carlo_draws = 50000;
    int toy_instances = 20;
    // Test hook: scales every A_k before the closed-form check so that check fails.
    bool corrupt_quadratic = false;
};

std::vector<PropertyResult> run_property_suite(const ExperimentConfig& config, const ValidateOptions& options);

} // namespace irscf

#endif
