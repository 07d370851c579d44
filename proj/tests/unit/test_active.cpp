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

#include <gtest/gtest.h>

#include "irscf/active.hpp"
#include "irscf/errors.hpp"
#include "irscf/passive.hpp"
#include "irscf/scsi.hpp"
#include "test_support.hpp"

namespace irscf {
namespace {

PowerEstimate estimate_from(const arma::mat& e) {
    PowerEstimate out;
    out.mean_power = e;
    out.samples = 1;
    return out;
}

TEST(ZeroForcing, IdentityChannelGivesIdentityPrecoder) {
    const auto p = zf_precoder(arma::eye<arma::cx_mat>(4, 4), 2);
    EXPECT_LT(test::max_abs(p.w - arma::eye<arma::cx_mat>(4, 4)), 1e-15);
    EXPECT_EQ(p.num_aps(), 2);
}

TEST(ZeroForcing, CancelsInterferenceOnRandomChannels) {
    Rng rng(71);
    for (int trial = 0; trial < 100; ++trial) {
        const int k = 1 + trial % 8;
        const arma::cx_mat h = test::random_complex(8 * ((k + 7) / 8) + 8, k, rng);
        const auto p = zf_precoder(h);
        EXPECT_LT(test::max_abs(h.t() * p.w - arma::eye<arma::cx_mat>(k, k)), 1e-9);
    }
}

TEST(ZeroForcing, SingleUserIsScaledMatchedFilter) {
    Rng rng(72);
    const arma::cx_mat h = test::random_complex(6, 1, rng);
    const auto p = zf_precoder(h, 3);
    EXPECT_LT(test::max_abs(p.w - h / std::pow(arma::norm(h), 2)) * std::pow(arma::norm(h), 2), 1e-12);
}

TEST(ZeroForcing, BlocksAndBlockPowers) {
    Rng rng(73);
    const arma::cx_mat h = test::random_complex(6, 2, rng);
    const auto p = zf_precoder(h, 2);
    ASSERT_EQ(p.num_aps(), 3);
    const arma::mat power = p.block_power();
    for (int l = 0; l < 3; ++l) {
        EXPECT_EQ(test::max_abs(p.ap_block(l) - p.w.rows(2 * l, 2 * l + 1)), 0.0);
        for (int k = 0; k < 2; ++k)
            EXPECT_NEAR(power(l, k), std::pow(arma::norm(p.w.col(k).subvec(2 * l, 2 * l + 1)), 2), 1e-15);
    }
    EXPECT_THROW(p.ap_block(3), std::out_of_range);
    EXPECT_THROW(zf_precoder(h, 4), std::invalid_argument);
}

TEST(ZeroForcing, RankDeficientChannelIsReported) {
    Rng rng(74);
    arma::cx_mat h = test::random_complex(4, 2, rng);
    h.col(1) = 3.0 * h.col(0);
    EXPECT_THROW(zf_precoder(h), RankDeficientError);
}

TEST(PrecoderPower, SingleRealizationEqualsItsBlockNorms) {
    Rng stats_rng(75);
    const auto s = random_statistics({2, 2, 2, 2, 2}, stats_rng);
    const arma::cx_vec theta = test::random_unit_modulus(4, stats_rng);
    Rng a(76), b(76);
    const auto e = estimate_precoder_power(s, ThetaChoice{theta}, 1, a);
    const auto real = draw_realization(s, b);
    const arma::mat expected = zf_precoder(assemble_overall(real, theta), 2).block_power();
    EXPECT_EQ(e.samples, 1);
    EXPECT_LT(arma::abs(e.mean_power - expected).max(), 1e-15 * arma::abs(expected).max());
}

TEST(PrecoderPower, NoIrsUsesDirectLinksOnly) {
    Rng stats_rng(77);
    const auto s = random_statistics({2, 2, 2, 2, 2}, stats_rng);
    Rng a(78), b(78);
    const auto e = estimate_precoder_power(s, ThetaChoice{}, 1, a);
    const arma::mat expected = zf_precoder(assemble_direct(draw_realization(s, b)), 2).block_power();
    EXPECT_LT(arma::abs(e.mean_power - expected).max(), 1e-15 * arma::abs(expected).max());
}

TEST(PrecoderPower, SampleMeanConvergesWithRealizations) {
    Rng stats_rng(79);
    const auto s = random_statistics({2, 1, 2, 3, 2}, stats_rng);
    const ThetaChoice theta = test::random_unit_modulus(2, stats_rng);
    Rng a(80), b(81);
    const arma::mat small = estimate_precoder_power(s, theta, 1000, a).mean_power;
    const arma::mat large = estimate_precoder_power(s, theta, 10000, b).mean_power;
    EXPECT_LT(arma::abs(small / large - 1.0).max(), 0.05);
}

TEST(PrecoderPower, DoublingEveryChannelQuartersThePower) {
    Rng stats_rng(82);
    const auto s = random_statistics({2, 2, 2, 2, 2}, stats_rng);
    auto doubled = s;
    for (auto& d : doubled.d_bar) d *= 2.0;
    for (auto& g : doubled.g_bar) g *= 2.0;
    doubled.xi_d *= 4.0;
    doubled.xi_g *= 4.0;
    const ThetaChoice theta = test::random_unit_modulus(4, stats_rng);
    Rng a(83), b(83);
    const arma::mat base = estimate_precoder_power(s, theta, 50, a).mean_power;
    const arma::mat scaled = estimate_precoder_power(doubled, theta, 50, b).mean_power;
    EXPECT_LT(arma::abs(scaled * 4.0 / base - 1.0).max(), 1e-10);
}

TEST(PrecoderPower, SchemesShareRealizations) {
    Rng stats_rng(84);
    const auto s = random_statistics({2, 2, 2, 2, 2}, stats_rng);
    const ThetaChoice theta = test::random_unit_modulus(4, stats_rng);
    Rng joint(85), alone(85);
    const auto both = estimate_precoder_power(s, {ThetaChoice{}, theta}, 40, joint);
    const auto single = estimate_precoder_power(s, theta, 40, alone);
    ASSERT_EQ(both.size(), 2u);
    EXPECT_LT(arma::abs(both[1].mean_power - single.mean_power).max(), 1e-15 * single.mean_power.max());
}

TEST(PrecoderPower, PersistentRankDeficiencyAborts) {
    Rng stats_rng(86);
    RandomStatisticsOptions opt;
    opt.blockage_probability = 1.0;
    auto s = random_statistics({1, 1, 2, 2, 2}, stats_rng, opt);
    // Both UEs see the same deterministic direct channel: rank one every draw.
    s.beta_d = std::numeric_limits<double>::infinity();
    s.d_bar(0, 1) = s.d_bar(0, 0);
    Rng rng(87);
    EXPECT_THROW(estimate_precoder_power(s, ThetaChoice{}, 100, rng), NumericalError);
    EXPECT_THROW(estimate_precoder_power(s, ThetaChoice{}, 0, rng), std::invalid_argument);
}

TEST(AllocatePower, TwoApsHandEvaluated) {
    // min(1 / 0.5, 1 / 1.0) = 1, set by the second AP.
    const auto a = allocate_power(estimate_from(arma::mat{{0.2, 0.3}, {0.4, 0.6}}), 1.0);
    EXPECT_NEAR(a.p_opt, 1.0, 1e-12);
    EXPECT_EQ(a.binding_ap, 1);
    ASSERT_EQ(a.p.n_elem, 2u);
    EXPECT_TRUE(arma::all(a.p == a.p_opt));
}

TEST(AllocatePower, UniformDemandAndLinearity) {
    for (int aps : {1, 3, 6}) {
        const arma::mat e(aps, 4, arma::fill::value(0.125));
        EXPECT_NEAR(allocate_power(estimate_from(e), 2.0).p_opt, 2.0 / 0.5, 1e-12);
    }
    const arma::mat e{{0.1, 0.7}, {0.3, 0.2}};
    EXPECT_NEAR(allocate_power(estimate_from(e), 4.0).p_opt, 2.0 * allocate_power(estimate_from(e), 2.0).p_opt,
                1e-12);
}

TEST(AllocatePower, BindingApMeetsItsBudgetOthersStayBelow) {
    Rng rng(88);
    const arma::mat e = arma::randu<arma::mat>(5, 3);
    const double budget = 0.1;
    const auto a = allocate_power(estimate_from(e), budget);
    const arma::vec used = a.p_opt * arma::sum(e, 1);
    EXPECT_TRUE(arma::all(used <= budget + 1e-9));
    EXPECT_NEAR(used[a.binding_ap], budget, 1e-12);
}

TEST(AllocatePower, ZeroRowsAreIgnoredAndAllZeroRejected) {
    const auto a = allocate_power(estimate_from(arma::mat{{0.0, 0.0}, {0.25, 0.25}}), 1.0);
    EXPECT_NEAR(a.p_opt, 2.0, 1e-12);
    EXPECT_EQ(a.binding_ap, 1);
    EXPECT_THROW(allocate_power(estimate_from(arma::zeros<arma::mat>(2, 2)), 1.0), std::invalid_argument);
    EXPECT_THROW(allocate_power(estimate_from(arma::mat{{-1.0, 1.0}}), 1.0), std::invalid_argument);
    EXPECT_THROW(allocate_power(estimate_from(arma::mat{{arma::datum::nan, 1.0}}), 1.0), std::invalid_argument);
}

TEST(MinRate, LogOfOnePlusSnr) {
    EXPECT_DOUBLE_EQ(min_rate(1e-9, 1e-9), 1.0);
    EXPECT_DOUBLE_EQ(min_rate(0.0, 1e-9), 0.0);
    EXPECT_DOUBLE_EQ(min_rate(3e-9, 1e-9), 2.0);
    PowerAllocation a;
    a.p_opt = 3.0;
    EXPECT_DOUBLE_EQ(min_rate(a, 1.0), 2.0);
}

// Long-term power follows the passive design: optimised phases should let the
// APs afford more power per UE than random phases in almost every drop.
TEST(AllocatePower, OptimisedPhasesRaiseTheAllocationOverRandom) {
    ScenarioConfig c;
    c.irs_elements = 4;
    c.ap_antennas = 4;
    int wins = 0;
    const int drops = 50;
    for (int seed = 0; seed < drops; ++seed) {
        const auto stats = build_statistics(c, build_geometry(c, 500 + seed));
        Rng rng(seed);
        const auto design = design_passive(build_quadratic_forms(stats), {}, rng);
        const ThetaChoice random = random_theta(stats.dims.reflecting(), rng).theta;
        const auto e = estimate_precoder_power(stats, {design.extraction.beamformer.theta, random}, 100, rng);
        if (allocate_power(e[0], c.max_power_w()).p_opt >= allocate_power(e[1], c.max_power_w()).p_opt) ++wins;
    }
    EXPECT_GE(wins, 45);
}

} // namespace
} // namespace irscf
