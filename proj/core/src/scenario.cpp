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

#include "irscf/scenario.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "irscf/channel.hpp"
#include "irscf/errors.hpp"
#include "irscf/rng.hpp"

namespace irscf {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw ConfigError("invalid scenario: " + what);
}

} // namespace

void ScenarioConfig::validate() const {
    require(num_aps > 0 && num_irs > 0 && num_ues > 0 && ap_antennas > 0 && irs_elements > 0,
            "all node and array counts must be positive");
    require(irs_slots >= num_irs, "irs_slots must be at least the number of active surfaces");
    require(irs_slots == num_irs || (irs_slots == 8 && (num_irs == 2 || num_irs == 4)),
            "surface subsets are only defined for 2 or 4 active out of 8 slots");
    require(num_aps * ap_antennas >= num_ues, "zero forcing needs L*M >= K");
    require(hotspot_radius_m > 0.0, "hotspot radius must be positive");
    require(hotspot_radius_m < hotspot_center_m, "hotspot radius must be smaller than its centre coordinate");
    require(hotspot_center_m + hotspot_radius_m <= area_side_m, "hotspot must lie inside the service area");
    require(element_spacing > 0.0, "element spacing must be positive");
    require(std::isfinite(ap_height_m) && std::isfinite(irs_height_m) && std::isfinite(ue_height_m),
            "heights must be finite");
    require(std::isfinite(max_power_dbm) && std::isfinite(noise_power_dbm), "powers must be finite");
    require(exponent_direct > 0.0 && exponent_ap_irs > 0.0 && exponent_irs_ue > 0.0,
            "path-loss exponents must be positive");
    try {
        (void)upa_shape(irs_elements);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("invalid scenario: ") + e.what());
    }
}

double ScenarioConfig::max_power_w() const { return dbm_to_watt(max_power_dbm); }
double ScenarioConfig::noise_power_w() const { return dbm_to_watt(noise_power_dbm); }

double dbm_to_watt(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }
double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

double path_loss(double xi0_db, double alpha, double d_link) {
    if (!(d_link > 0.0)) throw std::invalid_argument("path_loss: link distance must be positive");
    return db_to_linear(xi0_db) * std::pow(d_link, -alpha);
}

bool is_blocked(const arma::vec3& ap, const arma::vec3& irs, const arma::vec3& normal) {
    const double side = (ap[0] - irs[0]) * normal[0] + (ap[1] - irs[1]) * normal[1];
    return side < 0.0;
}

arma::vec3 perimeter_position(int l, int num_aps, double side) {
    const double s = 4.0 * side * static_cast<double>(l) / static_cast<double>(num_aps);
    const int edge = std::min(3, static_cast<int>(s / side));
    const double t = s - edge * side;
    switch (edge) {
    case 0: return {t, 0.0, 0.0};
    case 1: return {side, t, 0.0};
    case 2: return {side - t, side, 0.0};
    default: return {0.0, side - t, 0.0};
    }
}

arma::vec3 perimeter_axis(int l, int num_aps, double side) {
    const double s = 4.0 * side * static_cast<double>(l) / static_cast<double>(num_aps);
    switch (std::min(3, static_cast<int>(s / side))) {
    case 0: return {1.0, 0.0, 0.0};
    case 1: return {0.0, 1.0, 0.0};
    case 2: return {-1.0, 0.0, 0.0};
    default: return {0.0, -1.0, 0.0};
    }
}

NetworkGeometry place_nodes(const ScenarioConfig& config, std::uint64_t rng_seed) {
    ScenarioConfig check = config;
    check.irs_slots = config.num_irs;
    check.validate();

    NetworkGeometry g;
    const double c = config.hotspot_center_m;
    for (int l = 0; l < config.num_aps; ++l) {
        arma::vec3 p = perimeter_position(l, config.num_aps, config.area_side_m);
        p[2] = config.ap_height_m;
        g.ap_positions.push_back(p);
    }

    const double start = config.irs_start_angle_deg * std::numbers::pi / 180.0;
    for (int r = 0; r < config.num_irs; ++r) {
        const double phi = start + 2.0 * std::numbers::pi * r / config.num_irs;
        const double cx = std::cos(phi), sy = std::sin(phi);
        g.irs_positions.push_back({c + config.hotspot_radius_m * cx, c + config.hotspot_radius_m * sy,
                                   config.irs_height_m});
        g.irs_normals.push_back({-cx, -sy, 0.0});
        g.irs_slot_ids.push_back(r + 1);
    }

    Rng rng(rng_seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int k = 0; k < config.num_ues; ++k) {
        const double rho = config.hotspot_radius_m * std::sqrt(unit(rng));
        const double phi = 2.0 * std::numbers::pi * unit(rng);
        g.ue_positions.push_back({c + rho * std::cos(phi), c + rho * std::sin(phi), config.ue_height_m});
    }

    g.blockage.zeros(config.num_aps, config.num_irs);
    for (int l = 0; l < config.num_aps; ++l)
        for (int r = 0; r < config.num_irs; ++r)
            g.blockage(l, r) = is_blocked(g.ap_positions[l], g.irs_positions[r], g.irs_normals[r]) ? 1 : 0;
    return g;
}

NetworkGeometry irs_subset(const NetworkGeometry& geometry, int active) {
    if (geometry.num_irs() != 8) throw std::invalid_argument("irs_subset: layout must have 8 surfaces");
    std::vector<arma::uword> keep;
    switch (active) {
    case 2: keep = {0, 4}; break;
    case 4: keep = {0, 2, 4, 6}; break;
    case 8: keep = {0, 1, 2, 3, 4, 5, 6, 7}; break;
    default: {
        std::ostringstream msg;
        msg << "irs_subset: unsupported number of active surfaces " << active << " (expected 2, 4 or 8)";
        throw std::invalid_argument(msg.str());
    }
    }
    NetworkGeometry out;
    out.ap_positions = geometry.ap_positions;
    out.ue_positions = geometry.ue_positions;
    for (arma::uword r : keep) {
        out.irs_positions.push_back(geometry.irs_positions[r]);
        out.irs_normals.push_back(geometry.irs_normals[r]);
        out.irs_slot_ids.push_back(geometry.irs_slot_ids[r]);
    }
    out.blockage = geometry.blockage.cols(arma::uvec(keep));
    return out;
}

NetworkGeometry build_geometry(const ScenarioConfig& config, std::uint64_t rng_seed) {
    config.validate();
    if (config.irs_slots == config.num_irs) return place_nodes(config, rng_seed);
    ScenarioConfig full = config;
    full.num_irs = config.irs_slots;
    return irs_subset(place_nodes(full, rng_seed), config.num_irs);
}

} // namespace irscf
