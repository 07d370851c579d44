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

#ifndef IRSCF_ACTIVE_HPP
#define IRSCF_ACTIVE_HPP

#include <armadillo>
#include <optional>
#include <vector>

#include "irscf/channel.hpp"
#include "irscf/rng.hpp"

namespace irscf {

// Zero-forcing precoder W = H (H^H H)^{-1}, rows grouped by AP.
struct Precoder {
    arma::cx_mat w;           // (L*M) x K
    int antennas_per_ap = 0;  // M

    int num_aps() const { return static_cast<int>(w.n_rows) / antennas_per_ap; }
    arma::cx_mat ap_block(int l) const;
    // ||w_{l,k}||^2 for every AP l and UE k.
    arma::mat block_power() const;
};

// antennas_per_ap = 0 treats the whole array as a single AP. Throws
// RankDeficientError with the Gram condition number for rank-deficient H.
Precoder zf_precoder(const arma::cx_mat& h, int antennas_per_ap = 0);

struct PowerEstimate {
    arma::mat mean_power;  // L x K sample mean of ||w_{l,k}||^2
    int samples = 0;       // T
    int redraws = 0;       // rank-deficient realizations that were replaced
};

// A reflection vector, or nullopt for the scheme without surfaces (h = d).
using ThetaChoice = std::optional<arma::cx_vec>;

// Sample mean over T realizations drawn from stats. Every scheme sees the
// same realizations; a realization that is rank deficient for any scheme is
// redrawn for all of them. Throws NumericalError when more than 1% of T
// realizations had to be redrawn.
std::vector<PowerEstimate> estimate_precoder_power(const ChannelStatistics& stats,
                                                   const std::vector<ThetaChoice>& schemes, int realizations,
                                                   Rng& rng);

PowerEstimate estimate_precoder_power(const ChannelStatistics& stats, const ThetaChoice& theta, int realizations,
                                      Rng& rng);

struct PowerAllocation {
    arma::vec p;         // K equal entries, watts
    double p_opt = 0.0;
    int binding_ap = -1; // AP whose budget is active
};

// p_opt = min over APs with nonzero demand of P_bar / sum_k E[l][k]. Throws
// std::invalid_argument when every row is zero or an entry is negative or
// non-finite.
PowerAllocation allocate_power(const PowerEstimate& estimate, double max_power_w);

// log2(1 + p_opt / sigma^2): every UE's rate under ZF with equal power.
double min_rate(const PowerAllocation& allocation, double noise_power_w);
double min_rate(double p_opt, double noise_power_w);

} // namespace irscf

#endif
