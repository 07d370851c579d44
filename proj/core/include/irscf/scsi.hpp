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

#ifndef IRSCF_SCSI_HPP
#define IRSCF_SCSI_HPP

#include <armadillo>
#include <vector>

#include "irscf/channel.hpp"

namespace irscf {

// Average channel gain as a quadratic function of the stacked phase vector:
//   gain(theta) = theta^H A theta + 2 Re(theta^H b) + c.
struct QuadraticForm {
    arma::cx_mat a;  // (R*N) x (R*N), Hermitian PSD
    arma::cx_vec b;
    double c = 0.0;
    // Part of `a` that is diagonal by construction (NLoS contributions). It is
    // already included in `a`; kept separately because it is constant on the
    // unit-modulus set.
    arma::vec a_diagonal;

    double value(const arma::cx_vec& theta) const;
    arma::uword size() const { return b.n_elem; }
};

// Per-AP term A_{l,k}, b_{l,k}, c_{l,k}.
QuadraticForm build_quadratic_link(const ChannelStatistics& stats, int l, int k);

// Sum of the per-AP terms over all APs for UE k.
QuadraticForm build_quadratic_ue(const ChannelStatistics& stats, int k);

// build_quadratic_ue for every UE, sharing the per-AP G_l G_l^H products.
std::vector<QuadraticForm> build_quadratic_forms(const ChannelStatistics& stats);

double min_average_gain(const std::vector<QuadraticForm>& forms, const arma::cx_vec& theta);

} // namespace irscf

#endif
