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

#ifndef IRSCF_RESULTS_IO_HPP
#define IRSCF_RESULTS_IO_HPP

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include "irscf/sim.hpp"

namespace irscf {

// %.17g: round-trips every double, so equal results give equal bytes.
std::string format_double(double value);

// Columns scheme,drop,min_rate; one row per scheme and successful drop.
void write_rates_csv(const SimulationResult& result, std::ostream& out);
// Columns scheme,min_rate,probability.
void write_cdf_csv(const SimulationResult& result, std::ostream& out);
// Medians, means, per-scheme diagnostics, seed, config hash and the full config echo.
std::string summary_json(const SimulationResult& result);

struct CampaignFiles {
    std::filesystem::path rates_csv;
    std::filesystem::path cdf_csv;
    std::filesystem::path summary_json;
    std::vector<std::filesystem::path> theta_files;
};

// Writes <stem>_rates.csv, <stem>_cdf.csv, <stem>_summary.json and, with
// export_theta, <stem>_theta/drop_<i>.json. Creates out_dir if needed.
CampaignFiles write_campaign(const SimulationResult& result, const std::filesystem::path& out_dir,
                             const std::string& stem);

// Every point as a campaign named <stem>_[<series>_]<axis><value> plus
// <stem>_table.csv with columns series,axis,value,R,N,scheme,drops,mean,median.
std::vector<CampaignFiles> write_sweep(const std::vector<SweepPoint>& points, SweepAxis axis,
                                       const std::filesystem::path& out_dir, const std::string& stem);

} // namespace irscf

#endif
