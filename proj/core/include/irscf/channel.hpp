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

#ifndef IRSCF_CHANNEL_HPP
#define IRSCF_CHANNEL_HPP

#include <armadillo>
#include <utility>

#include "irscf/rng.hpp"
#include "irscf/scenario.hpp"

namespace irscf {

struct Dimensions {
    int aps = 0;       // L
    int irs = 0;       // R
    int ues = 0;       // K
    int antennas = 0;  // M
    int elements = 0;  // N

    int reflecting() const { return irs * elements; }
    int stacked_antennas() const { return aps * antennas; }
    bool operator==(const Dimensions&) const = default;
};

// Statistical CSI: LoS components (path loss and Rician scaling included),
// linear path losses and Rician factors of every link.
struct ChannelStatistics {
    Dimensions dims;
    arma::field<arma::cx_vec> d_bar;  // (L, K), M-vectors
    arma::field<arma::cx_mat> g_bar;  // (L, R), N x M
    arma::field<arma::cx_vec> v_bar;  // (R, K), N-vectors
    arma::mat xi_d;                   // L x K
    arma::mat xi_g;                   // L x R, geometric path loss
    arma::mat xi_v;                   // R x K
    arma::umat blockage;              // L x R
    double beta_d = 1.0;
    double beta_g = 1.0;
    double beta_v = 1.0;

    // AP-IRS path loss seen by the channel: zero on blocked links.
    double xi_g_effective(int l, int r) const { return blockage(l, r) ? 0.0 : xi_g(l, r); }

    // G_l = [G_{l,1}; ...; G_{l,R}], (R*N) x M.
    arma::cx_mat stacked_g_bar(int l) const;
    // v_k = [v_{1,k}; ...; v_{R,k}], length R*N.
    arma::cx_vec stacked_v_bar(int k) const;
};

// One instantaneous draw of every link. Blocked AP-IRS links are exactly zero.
struct ChannelRealization {
    Dimensions dims;
    arma::field<arma::cx_vec> d;  // (L, K)
    arma::field<arma::cx_mat> g;  // (L, R)
    arma::field<arma::cx_vec> v;  // (R, K)
};

// Entry m = exp(j 2 pi spacing m sin(angle)), m = 0..M-1.
arma::cx_vec steering_ula(int antennas, double angle, double spacing);

// kron(a_vertical, a_horizontal) for a rows x cols panel; azimuth is measured
// from the panel normal, elevation from the horizontal plane.
arma::cx_vec steering_upa(int rows, int cols, double azimuth, double elevation, double spacing);

// N = rows * cols with rows = 2^floor(log2(N) / 2). Throws std::invalid_argument
// when rows does not divide N.
std::pair<int, int> upa_shape(int elements);

ChannelStatistics build_statistics(const ScenarioConfig& config, const NetworkGeometry& geometry);

ChannelRealization draw_realization(const ChannelStatistics& stats, Rng& rng);

// H = [h_1, ..., h_K], (L*M) x K, with h_{l,k} = d_{l,k} + sum_r G_{l,r}^H (theta_r o v_{r,k}).
// theta is the stacked vector Theta^H 1, so IRS r applies diag(conj(theta_r)).
arma::cx_mat assemble_overall(const ChannelRealization& real, const arma::cx_vec& theta);

// Direct links only (no surfaces present).
arma::cx_mat assemble_direct(const ChannelRealization& real);

// Synthetic statistics with comparable direct and reflected power; used by
// oracle checks where the physical scenario would hide reflection terms.
struct RandomStatisticsOptions {
    double path_loss_min = 0.5;
    double path_loss_max = 2.0;
    double kfactor_db_min = -5.0;
    double kfactor_db_max = 10.0;
    double blockage_probability = 0.0;
};
ChannelStatistics random_statistics(const Dimensions& dims, Rng& rng, const RandomStatisticsOptions& options = {});

} // namespace irscf

#endif
