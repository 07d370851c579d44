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

#include "irscf/scsi.hpp"
#include "irscf/validate.hpp"
#include "test_support.hpp"

namespace irscf {
namespace {

ValidateOptions quick() {
    ValidateOptions o;
    o.monte_carlo_draws = 20000;
    o.toy_instances = 5;
    return o;
}

TEST(MonteCarloLinkGain, AgreesWithClosedForm) {
    Rng rng(111);
    const auto s = random_statistics({2, 1, 2, 2, 2}, rng);
    const arma::cx_vec theta = test::random_unit_modulus(2, rng);
    const arma::mat mc = monte_carlo_link_gain(s, theta, 50000, rng);
    ASSERT_EQ(mc.n_rows, 2u);
    for (int l = 0; l < 2; ++l)
        for (int k = 0; k < 2; ++k) EXPECT_NEAR(mc(l, k) / build_quadratic_link(s, l, k).value(theta), 1.0, 0.03);
}

TEST(PropertySuite, SmallScenarioPassesWithMargins) {
    const auto results = run_property_suite(test::small_experiment(), quick());
    ASSERT_GE(results.size(), 8u);
    for (const auto& r : results) {
        EXPECT_TRUE(r.passed) << r.name << " measured " << r.measured << " threshold " << r.threshold;
        EXPECT_GE(r.margin(), 0.0) << r.name;
        EXPECT_FALSE(r.name.empty());
    }
}

TEST(PropertySuite, CorruptedQuadraticFailsTheClosedFormCheck) {
    ValidateOptions o = quick();
    o.corrupt_quadratic = true;
    const auto results = run_property_suite(test::small_experiment(), o);
    bool found = false;
    for (const auto& r : results)
        if (r.name == "gain-closed-form") {
            found = true;
            EXPECT_FALSE(r.passed);
            EXPECT_LT(r.margin(), 0.0);
        }
    EXPECT_TRUE(found);
}

} // namespace
} // namespace irscf
