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

#ifndef IRSCF_ORACLE_HPP
#define IRSCF_ORACLE_HPP

#include <cstdint>
#include <vector>

#include "irscf/passive.hpp"
#include "irscf/scsi.hpp"

namespace irscf {

inline constexpr int kMaxGridElements = 6;
inline constexpr int kMaxGridLevels = 16;

struct GridSearchResult {
    PassiveBeamformer best;
    double objective = 0.0;  // min_k gain at best
    std::uint64_t evaluations = 0;
    int levels = 0;
};

// Exhaustive search of min_k gain over theta_i in {exp(j 2 pi q / levels)}.
// Throws std::invalid_argument beyond kMaxGridElements elements or
// kMaxGridLevels levels.
GridSearchResult grid_search(const std::vector<QuadraticForm>& forms, int levels);

} // namespace irscf

#endif
