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

#ifndef IRSCF_DERIVED_HPP
#define IRSCF_DERIVED_HPP

#include <filesystem>
#include <string>
#include <vector>

namespace irscf {

// One frozen oracle result.
//   kind "value":       |regenerated - value| <= tolerance
//   kind "upper_bound": regenerated <= tolerance
//   kind "lower_bound": regenerated >= tolerance
// Deterministic bound records must also reproduce `value` to 1e-9 relative.
struct DerivedRecord {
    std::string id;
    std::string command;
    double value = 0.0;
    double tolerance = 0.0;
    std::string kind = "value";
    bool deterministic = true;
    std::string date;
    std::string config_hash;
    std::string description;
};

struct DerivedCheck {
    DerivedRecord record;
    double regenerated = 0.0;
    bool passed = false;
    std::string reason;
};

// Every registered oracle with a freshly computed value and today's date.
std::vector<std::string> derived_ids();
DerivedRecord generate_derived(const std::string& id);

std::vector<DerivedRecord> load_ledger(const std::filesystem::path& path);
void save_ledger(const std::vector<DerivedRecord>& records, const std::filesystem::path& path);

DerivedCheck check_record(const DerivedRecord& record);

} // namespace irscf

#endif
