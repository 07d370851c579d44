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

// General hardening-bound SINR estimator, used only to confirm that under
// zero forcing with equal power it collapses to p / sigma^2.
#include <gtest/gtest.h>

#include "irscf/active.hpp"
#include "irscf/channel.hpp"
#include "test_support.hpp"

namespace irscf {
namespace {

// SINR_k = p_k |E{h_k^H w_k}|^2 / (sum_j p_j E{|h_k^H w_j|^2} - p_k |E{h_k^H w_k}|^2 + sigma^2)
// with expectations replaced by sample means over the supplied draws.
arma::vec hardening_sinr(const std::vector<arma::cx_mat>& channels, const std::vector<arma::cx_mat>& precoders,
                         const arma::vec& p, double sigma2) {
    const arma::uword k_count = p.n_elem;
    arma::cx_vec mean_gain(k_count, arma::fill::zeros);
    arma::mat second(k_count, k_count, arma::fill::zeros);
    for (std::size_t t = 0; t < channels.size(); ++t) {
        const arma::cx_mat g = channels[t].t() * precoders[t];  // g(k, j) = h_k^H w_j
        mean_gain += g.diag();
        second += arma::square(arma::abs(g));
    }
    const double n = static_cast<double>(channels.size());
    mean_gain /= n;
    second /= n;
    arma::vec sinr(k_count);
    for (arma::uword k = 0; k < k_count; ++k) {
        const double signal = p[k] * std::norm(mean_gain[k]);
        const double total = arma::dot(p, second.row(k).t());
        sinr[k] = signal / (total - signal + sigma2);
    }
    return sinr;
}

TEST(HardeningBound, ZeroForcingReducesToPowerOverNoise) {
    Rng rng(90);
    const Dimensions dims{3, 2, 3, 2, 2};
    const auto stats = random_statistics(dims, rng);
    const arma::cx_vec theta = test::random_unit_modulus(dims.reflecting(), rng);
    std::vector<arma::cx_mat> h, w;
    for (int t = 0; t < 500; ++t) {
        h.push_back(assemble_overall(draw_realization(stats, rng), theta));
        w.push_back(zf_precoder(h.back(), dims.antennas).w);
    }
    const double p = 0.7, sigma2 = 0.05;
    const arma::vec sinr = hardening_sinr(h, w, arma::vec(dims.ues, arma::fill::value(p)), sigma2);
    EXPECT_LT(arma::abs(sinr / (p / sigma2) - 1.0).max(), 1e-9);
    EXPECT_NEAR(std::log2(1.0 + sinr.min()), min_rate(p, sigma2), 1e-9);
}

} // namespace
} // namespace irscf
