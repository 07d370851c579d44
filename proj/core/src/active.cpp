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

#include "irscf/active.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "irscf/errors.hpp"
#include "irscf/linalg.hpp"

namespace irscf {

arma::cx_mat Precoder::ap_block(int l) const {
    if (l < 0 || l >= num_aps()) throw std::out_of_range("Precoder::ap_block: AP index out of range");
    return w.rows(l * antennas_per_ap, (l + 1) * antennas_per_ap - 1);
}

arma::mat Precoder::block_power() const {
    const int aps = num_aps();
    arma::mat out(aps, w.n_cols);
    const arma::mat mag = arma::square(arma::abs(w));
    for (int l = 0; l < aps; ++l)
        out.row(l) = arma::sum(mag.rows(l * antennas_per_ap, (l + 1) * antennas_per_ap - 1), 0);
    return out;
}

Precoder zf_precoder(const arma::cx_mat& h, int antennas_per_ap) {
    if (antennas_per_ap == 0) antennas_per_ap = static_cast<int>(h.n_rows);
    if (antennas_per_ap < 0 || h.n_rows % antennas_per_ap != 0)
        throw std::invalid_argument("zf_precoder: row count is not a multiple of the per-AP antenna count");
    Precoder out;
    out.antennas_per_ap = antennas_per_ap;
    out.w = h * linalg::solve_gram(h);
    return out;
}

std::vector<PowerEstimate> estimate_precoder_power(const ChannelStatistics& stats,
                                                   const std::vector<ThetaChoice>& schemes, int realizations,
                                                   Rng& rng) {
    if (realizations < 1) throw std::invalid_argument("estimate_precoder_power: need at least one realization");
    const int aps = stats.dims.aps;
    const int ues = stats.dims.ues;
    const int m = stats.dims.antennas;

    std::vector<PowerEstimate> out(schemes.size());
    for (auto& e : out) {
        e.mean_power.zeros(aps, ues);
        e.samples = realizations;
    }
    int redraws = 0;
    const double max_redraws = 0.01 * realizations;
    std::vector<arma::mat> sample(schemes.size());

    for (int t = 0; t < realizations;) {
        const ChannelRealization real = draw_realization(stats, rng);
        try {
            for (std::size_t s = 0; s < schemes.size(); ++s) {
                const arma::cx_mat h = schemes[s] ? assemble_overall(real, *schemes[s]) : assemble_direct(real);
                sample[s] = zf_precoder(h, m).block_power();
            }
        } catch (const RankDeficientError& e) {
            if (++redraws > max_redraws) {
                std::ostringstream msg;
                msg << "estimate_precoder_power: " << redraws << " of " << realizations
                    << " realizations rank deficient (last condition number " << e.condition_number() << ")";
                throw NumericalError(msg.str());
            }
            continue;
        }
        for (std::size_t s = 0; s < schemes.size(); ++s) out[s].mean_power += sample[s];
        ++t;
    }
    for (auto& e : out) {
        e.mean_power /= static_cast<double>(realizations);
        e.redraws = redraws;
    }
    return out;
}

PowerEstimate estimate_precoder_power(const ChannelStatistics& stats, const ThetaChoice& theta, int realizations,
                                      Rng& rng) {
    return estimate_precoder_power(stats, std::vector<ThetaChoice>{theta}, realizations, rng).front();
}

PowerAllocation allocate_power(const PowerEstimate& estimate, double max_power_w) {
    const arma::mat& e = estimate.mean_power;
    if (e.is_empty()) throw std::invalid_argument("allocate_power: empty estimate");
    if (!e.is_finite() || e.min() < 0.0) throw std::invalid_argument("allocate_power: estimate must be finite and nonnegative");
    const arma::vec demand = arma::sum(e, 1);
    PowerAllocation out;
    double best = arma::datum::inf;
    for (arma::uword l = 0; l < demand.n_elem; ++l) {
        if (demand[l] <= 0.0) continue;
        const double p = max_power_w / demand[l];
        if (p < best) {
            best = p;
            out.binding_ap = static_cast<int>(l);
        }
    }
    if (out.binding_ap < 0) throw std::invalid_argument("allocate_power: every AP has zero precoder power");
    out.p_opt = best;
    out.p.set_size(e.n_cols);
    out.p.fill(best);
    return out;
}

double min_rate(double p_opt, double noise_power_w) { return std::log2(1.0 + p_opt / noise_power_w); }

double min_rate(const PowerAllocation& allocation, double noise_power_w) {
    return min_rate(allocation.p_opt, noise_power_w);
}

} // namespace irscf
