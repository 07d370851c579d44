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

#ifndef IRSCF_SCENARIO_HPP
#define IRSCF_SCENARIO_HPP

#include <armadillo>
#include <cstdint>
#include <vector>

namespace irscf {

// Geometry, array sizes and propagation constants of one experiment.
// Defaults reproduce the hotspot deployment with d = 40 m, M = 8, R = 4, N = 64
// and 20 dBm per AP.
struct ScenarioConfig {
    int num_aps = 4;          // L
    int num_irs = 4;          // R (active surfaces)
    int irs_slots = 8;        // surfaces laid out on the circle before subsetting
    int num_ues = 4;          // K
    int ap_antennas = 8;      // M
    int irs_elements = 64;    // N

    double area_side_m = 300.0;        // D
    double hotspot_center_m = 40.0;    // d, hotspot centred at (d, d)
    double hotspot_radius_m = 30.0;    // r
    // Azimuth of IRS slot 1 on the hotspot circle; slots proceed counterclockwise.
    double irs_start_angle_deg = 225.0;

    double ap_height_m = 10.0;
    double irs_height_m = 5.0;
    double ue_height_m = 1.5;
    double element_spacing = 0.5;  // wavelengths, ULA and UPA

    double max_power_dbm = 20.0;      // per-AP budget, identical for all APs
    double noise_power_dbm = -97.0;
    double ref_path_loss_db = -30.0;  // at 1 m
    double exponent_direct = 3.4;
    double exponent_ap_irs = 2.2;
    double exponent_irs_ue = 2.2;
    double kfactor_direct_db = -5.0;
    double kfactor_ap_irs_db = 5.0;
    double kfactor_irs_ue_db = 5.0;

    // Throws ConfigError naming the first violated invariant.
    void validate() const;

    int reflecting_elements() const { return num_irs * irs_elements; }
    double max_power_w() const;
    double noise_power_w() const;
};

struct NetworkGeometry {
    std::vector<arma::vec3> ap_positions;
    std::vector<arma::vec3> irs_positions;
    std::vector<arma::vec3> irs_normals;  // horizontal unit vectors, facing the hotspot
    std::vector<arma::vec3> ue_positions;
    std::vector<int> irs_slot_ids;        // 1-based slot number of each surface
    arma::umat blockage;                  // L x R, 1 = AP->IRS link blocked

    int num_aps() const { return static_cast<int>(ap_positions.size()); }
    int num_irs() const { return static_cast<int>(irs_positions.size()); }
    int num_ues() const { return static_cast<int>(ue_positions.size()); }
};

double dbm_to_watt(double dbm);
double db_to_linear(double db);

// xi0 * d^-alpha with xi0 given in dB. Throws std::invalid_argument for d <= 0.
double path_loss(double xi0_db, double alpha, double d_link);

// True when the AP lies strictly behind the vertical plane through the IRS
// with the given facing normal. APs on the plane are not blocked.
bool is_blocked(const arma::vec3& ap, const arma::vec3& irs, const arma::vec3& normal);

// Position of AP l among L spread evenly over the square perimeter starting
// at (0, 0) and walking counterclockwise. Height is not applied.
arma::vec3 perimeter_position(int l, int num_aps, double side);

// Unit direction of the perimeter edge leaving AP l counterclockwise; the AP's
// ULA lies along this axis.
arma::vec3 perimeter_axis(int l, int num_aps, double side);

// Places config.num_irs surfaces evenly on the hotspot circle, APs on the
// square perimeter and config.num_ues UEs uniformly inside the hotspot disc.
NetworkGeometry place_nodes(const ScenarioConfig& config, std::uint64_t rng_seed);

// Restricts an 8-slot layout to slots {1,5} (R=2), the odd slots (R=4) or all (R=8).
NetworkGeometry irs_subset(const NetworkGeometry& geometry, int active);

// place_nodes over config.irs_slots followed by irs_subset when fewer surfaces
// are active. This is the layout every simulation uses.
NetworkGeometry build_geometry(const ScenarioConfig& config, std::uint64_t rng_seed);

} // namespace irscf

#endif
