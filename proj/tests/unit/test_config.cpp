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

#include <filesystem>
#include <fstream>

#include "irscf/config.hpp"
#include "irscf/errors.hpp"

namespace irscf {
namespace {

const std::filesystem::path kConfigs = std::filesystem::path(IRSCF_SOURCE_DIR) / "configs";

TEST(Config, DefaultsRoundTripThroughJson) {
    const ExperimentConfig c;
    const ExperimentConfig back = parse_config(to_json_text(c));
    EXPECT_EQ(to_json_text(back), to_json_text(c));
    EXPECT_EQ(config_hash(back), config_hash(c));
}

TEST(Config, HashIsSixteenHexDigitsAndTracksContent) {
    ExperimentConfig c;
    const std::string h = config_hash(c);
    EXPECT_EQ(h.size(), 16u);
    EXPECT_EQ(h.find_first_not_of("0123456789abcdef"), std::string::npos);
    c.simulation.seed = 2;
    EXPECT_NE(config_hash(c), h);
}

TEST(Config, MissingKeysKeepDefaults) {
    const auto c = parse_config(R"({"scenario": {"irs_elements": 32}})");
    EXPECT_EQ(c.scenario.irs_elements, 32);
    EXPECT_EQ(c.scenario.num_aps, 4);
    EXPECT_EQ(c.simulation.drops, 200);
}

TEST(Config, UnknownKeysAreRejectedWithTheirPath) {
    try {
        (void)parse_config(R"({"scenario": {"num_apps": 4}})");
        FAIL() << "unknown key accepted";
    } catch (const ConfigError& e) {
        EXPECT_NE(std::string(e.what()).find("scenario.num_apps"), std::string::npos);
    }
    EXPECT_THROW(parse_config(R"({"extra": 1})"), ConfigError);
}

TEST(Config, MistypedValuesAreRejected) {
    EXPECT_THROW(parse_config(R"({"scenario": {"num_aps": "four"}})"), ConfigError);
    EXPECT_THROW(parse_config(R"({"scenario": {"num_aps": 2.5}})"), ConfigError);
    EXPECT_THROW(parse_config(R"({"simulation": {"schemes": "proposed"}})"), ConfigError);
    EXPECT_THROW(parse_config(R"({"simulation": {"schemes": ["best"]}})"), ConfigError);
    EXPECT_THROW(parse_config("{not json"), ConfigError);
}

TEST(Config, InvariantsAreCheckedAfterParsing) {
    EXPECT_THROW(parse_config(R"({"scenario": {"num_ues": 64}})"), ConfigError);
    EXPECT_THROW(parse_config(R"({"simulation": {"drops": 0}})"), ConfigError);
}

TEST(Config, OverridesAreTypeChecked) {
    ExperimentConfig c;
    apply_override(c, "scenario.irs_elements=16");
    apply_override(c, "scenario.max_power_dbm=30.5");
    apply_override(c, "simulation.export_theta=true");
    apply_override(c, "simulation.schemes=[\"proposed\",\"no-irs\"]");
    apply_override(c, "simulation.seed=12345678901");
    EXPECT_EQ(c.scenario.irs_elements, 16);
    EXPECT_DOUBLE_EQ(c.scenario.max_power_dbm, 30.5);
    EXPECT_TRUE(c.simulation.export_theta);
    EXPECT_EQ(c.simulation.schemes, (std::vector<Scheme>{Scheme::proposed, Scheme::no_irs}));
    EXPECT_EQ(c.simulation.seed, 12345678901u);
    EXPECT_THROW(apply_override(c, "scenario.irs_elements=many"), ConfigError);
    EXPECT_THROW(apply_override(c, "scenario.irs_elements=4.5"), ConfigError);
    EXPECT_THROW(apply_override(c, "scenario.unknown=1"), ConfigError);
    EXPECT_THROW(apply_override(c, "scenario=1"), ConfigError);
    EXPECT_THROW(apply_override(c, "no_equals_sign"), ConfigError);
}

TEST(Config, LoadReportsTheMissingPath) {
    try {
        (void)load_config(kConfigs / "no_such_file.json");
        FAIL() << "missing file accepted";
    } catch (const ConfigError& e) {
        EXPECT_NE(std::string(e.what()).find("no_such_file.json"), std::string::npos);
    }
}

TEST(Config, ShippedConfigsLoad) {
    int count = 0;
    for (const auto& entry : std::filesystem::directory_iterator(kConfigs)) {
        if (entry.path().extension() != ".json") continue;
        const auto c = load_config(entry.path());
        EXPECT_NO_THROW(c.validate()) << entry.path();
        EXPECT_NE(c.sweep.axis, SweepAxis::none) << entry.path();
        ++count;
    }
    EXPECT_EQ(count, 4);
}

TEST(Config, SchemesAndAxesParse) {
    EXPECT_EQ(parse_scheme("no-irs"), Scheme::no_irs);
    EXPECT_EQ(to_string(Scheme::random_passive), "random-passive");
    EXPECT_THROW(parse_scheme("no_irs"), ConfigError);
    EXPECT_EQ(parse_axis("P_bar"), SweepAxis::P_bar);
    EXPECT_THROW(parse_axis("K"), ConfigError);
    EXPECT_EQ(all_schemes().size(), 3u);
}

TEST(Config, SweepValidation) {
    SweepConfig s;
    EXPECT_NO_THROW(s.validate());
    s.values = {1.0};
    EXPECT_THROW(s.validate(), ConfigError);
    s.axis = SweepAxis::N;
    s.values = {16.5};
    EXPECT_THROW(s.validate(), ConfigError);
    s.values = {16, 32};
    EXPECT_NO_THROW(s.validate());
    s.pairs = {{2, 8}};
    EXPECT_THROW(s.validate(), ConfigError);
    s.values.clear();
    s.axis = SweepAxis::R;
    EXPECT_NO_THROW(s.validate());
    EXPECT_EQ(s.size(), 1u);
}

} // namespace
} // namespace irscf
