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

#include <set>

#include "irscf/rng.hpp"

namespace irscf {
namespace {

TEST(DeriveSeed, DependsOnlyOnParentAndStream) {
    EXPECT_EQ(derive_seed(1, 2), derive_seed(1, 2));
    std::set<std::uint64_t> seen;
    for (std::uint64_t parent = 0; parent < 20; ++parent)
        for (std::uint64_t stream = 0; stream < 20; ++stream) seen.insert(derive_seed(parent, stream));
    EXPECT_EQ(seen.size(), 400u);
}

TEST(ComplexNormal, UnitPowerZeroMeanCircular) {
    Rng rng(3);
    ComplexNormal cn;
    const int n = 200000;
    std::complex<double> mean = 0.0, pseudo = 0.0;
    double power = 0.0;
    for (int i = 0; i < n; ++i) {
        const auto z = cn(rng);
        mean += z;
        pseudo += z * z;
        power += std::norm(z);
    }
    EXPECT_NEAR(power / n, 1.0, 0.01);
    EXPECT_LT(std::abs(mean / double(n)), 0.01);
    // E{z^2} = 0 for a circularly-symmetric variable.
    EXPECT_LT(std::abs(pseudo / double(n)), 0.01);
}

} // namespace
} // namespace irscf
