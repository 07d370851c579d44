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

#include "irscf/channel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace irscf {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double rician_los(double beta) { return std::isinf(beta) ? 1.0 : std::sqrt(beta / (1.0 + beta)); }
double rician_nlos(double beta) { return std::isinf(beta) ? 0.0 : std::sqrt(1.0 / (1.0 + beta)); }

arma::vec3 unit(const arma::vec3& v) {
    const double n = arma::norm(v);
    if (!(n > 0.0)) throw std::invalid_argument("coincident nodes: zero-length link");
    return v / n;
}

double clamp_unit(double x) { return std::clamp(x, -1.0, 1.0); }

// Direction cosine along the ULA axis, expressed as the steering angle.
arma::cx_vec ap_steering(const arma::vec3& axis, const arma::vec3& dir, int antennas, double spacing) {
    return steering_ula(antennas, std::asin(clamp_unit(arma::dot(axis, dir))), spacing);
}

arma::cx_vec irs_steering(const arma::vec3& normal, const arma::vec3& dir, int elements, double spacing) {
    const auto [rows, cols] = upa_shape(elements);
    const arma::vec3 horizontal{-normal[1], normal[0], 0.0};
    const double azimuth = std::atan2(arma::dot(dir, horizontal), arma::dot(dir, normal));
    const double elevation = std::asin(clamp_unit(dir[2]));
    return steering_upa(rows, cols, azimuth, elevation, spacing);
}

arma::cx_vec random_phases(Rng& rng, arma::uword n) {
    std::uniform_real_distribution<double> phase(0.0, kTwoPi);
    arma::cx_vec out(n);
    for (arma::uword i = 0; i < n; ++i) out[i] = std::polar(1.0, phase(rng));
    return out;
}

void check_theta(const ChannelRealization& real, const arma::cx_vec& theta) {
    if (theta.n_elem != static_cast<arma::uword>(real.dims.reflecting())) {
        std::ostringstream msg;
        msg << "assemble_overall: theta has length " << theta.n_elem << ", expected "
            << real.dims.reflecting();
        throw std::invalid_argument(msg.str());
    }
}

} // namespace

arma::cx_mat ChannelStatistics::stacked_g_bar(int l) const {
    arma::cx_mat out(dims.reflecting(), dims.antennas);
    for (int r = 0; r < dims.irs; ++r)
        out.rows(r * dims.elements, (r + 1) * dims.elements - 1) = g_bar(l, r);
    return out;
}

arma::cx_vec ChannelStatistics::stacked_v_bar(int k) const {
    arma::cx_vec out(dims.reflecting());
    for (int r = 0; r < dims.irs; ++r)
        out.subvec(r * dims.elements, (r + 1) * dims.elements - 1) = v_bar(r, k);
    return out;
}

arma::cx_vec steering_ula(int antennas, double angle, double spacing) {
    if (antennas < 1) throw std::invalid_argument("steering_ula: need at least one antenna");
    const double step = kTwoPi * spacing * std::sin(angle);
    arma::cx_vec a(antennas);
    for (int m = 0; m < antennas; ++m) a[m] = std::polar(1.0, step * m);
    return a;
}

arma::cx_vec steering_upa(int rows, int cols, double azimuth, double elevation, double spacing) {
    const arma::cx_vec vertical = steering_ula(rows, elevation, spacing);
    const double horizontal_cos = std::cos(elevation) * std::sin(azimuth);
    const arma::cx_vec horizontal = steering_ula(cols, std::asin(clamp_unit(horizontal_cos)), spacing);
    return arma::kron(vertical, horizontal);
}

std::pair<int, int> upa_shape(int elements) {
    if (elements < 1) throw std::invalid_argument("upa_shape: element count must be positive");
    const int exponent = static_cast<int>(std::floor(std::log2(static_cast<double>(elements)) / 2.0));
    const int rows = 1 << exponent;
    if (elements % rows != 0) {
        std::ostringstream msg;
        msg << "upa_shape: " << elements << " elements cannot be arranged with " << rows << " rows";
        throw std::invalid_argument(msg.str());
    }
    return {rows, elements / rows};
}

ChannelStatistics build_statistics(const ScenarioConfig& config, const NetworkGeometry& geometry) {
    ChannelStatistics s;
    s.dims = {geometry.num_aps(), geometry.num_irs(), geometry.num_ues(), config.ap_antennas, config.irs_elements};
    const auto& dims = s.dims;
    if (dims.aps != config.num_aps || dims.irs != config.num_irs || dims.ues != config.num_ues)
        throw std::invalid_argument("build_statistics: geometry does not match configuration");

    s.beta_d = db_to_linear(config.kfactor_direct_db);
    s.beta_g = db_to_linear(config.kfactor_ap_irs_db);
    s.beta_v = db_to_linear(config.kfactor_irs_ue_db);
    s.blockage = geometry.blockage;

    s.d_bar.set_size(dims.aps, dims.ues);
    s.g_bar.set_size(dims.aps, dims.irs);
    s.v_bar.set_size(dims.irs, dims.ues);
    s.xi_d.set_size(dims.aps, dims.ues);
    s.xi_g.set_size(dims.aps, dims.irs);
    s.xi_v.set_size(dims.irs, dims.ues);

    const double sp = config.element_spacing;
    for (int l = 0; l < dims.aps; ++l) {
        const arma::vec3& ap = geometry.ap_positions[l];
        const arma::vec3 axis = perimeter_axis(l, config.num_aps, config.area_side_m);
        for (int k = 0; k < dims.ues; ++k) {
            const arma::vec3 link = geometry.ue_positions[k] - ap;
            s.xi_d(l, k) = path_loss(config.ref_path_loss_db, config.exponent_direct, arma::norm(link));
            s.d_bar(l, k) = std::sqrt(s.xi_d(l, k)) * rician_los(s.beta_d) *
                            ap_steering(axis, unit(link), dims.antennas, sp);
        }
        for (int r = 0; r < dims.irs; ++r) {
            const arma::vec3 link = geometry.irs_positions[r] - ap;
            s.xi_g(l, r) = path_loss(config.ref_path_loss_db, config.exponent_ap_irs, arma::norm(link));
            if (s.blockage(l, r)) {
                s.g_bar(l, r).zeros(dims.elements, dims.antennas);
                continue;
            }
            const arma::cx_vec at_ap = ap_steering(axis, unit(link), dims.antennas, sp);
            const arma::cx_vec at_irs = irs_steering(geometry.irs_normals[r], unit(-link), dims.elements, sp);
            s.g_bar(l, r) = std::sqrt(s.xi_g(l, r)) * rician_los(s.beta_g) * (arma::conj(at_irs) * at_ap.t());
        }
    }
    for (int r = 0; r < dims.irs; ++r) {
        for (int k = 0; k < dims.ues; ++k) {
            const arma::vec3 link = geometry.ue_positions[k] - geometry.irs_positions[r];
            s.xi_v(r, k) = path_loss(config.ref_path_loss_db, config.exponent_irs_ue, arma::norm(link));
            s.v_bar(r, k) = std::sqrt(s.xi_v(r, k)) * rician_los(s.beta_v) *
                            irs_steering(geometry.irs_normals[r], unit(link), dims.elements, sp);
        }
    }
    return s;
}

ChannelRealization draw_realization(const ChannelStatistics& stats, Rng& rng) {
    const auto& dims = stats.dims;
    ComplexNormal cn;
    ChannelRealization real;
    real.dims = dims;
    real.d.set_size(dims.aps, dims.ues);
    real.g.set_size(dims.aps, dims.irs);
    real.v.set_size(dims.irs, dims.ues);

    const double nd = rician_nlos(stats.beta_d), ng = rician_nlos(stats.beta_g), nv = rician_nlos(stats.beta_v);
    for (int l = 0; l < dims.aps; ++l) {
        for (int k = 0; k < dims.ues; ++k)
            real.d(l, k) = stats.d_bar(l, k) + (std::sqrt(stats.xi_d(l, k)) * nd) * cn.vec(rng, dims.antennas);
        for (int r = 0; r < dims.irs; ++r) {
            if (stats.blockage(l, r)) {
                real.g(l, r).zeros(dims.elements, dims.antennas);
                continue;
            }
            real.g(l, r) = stats.g_bar(l, r) +
                           (std::sqrt(stats.xi_g(l, r)) * ng) * cn.mat(rng, dims.elements, dims.antennas);
        }
    }
    for (int r = 0; r < dims.irs; ++r)
        for (int k = 0; k < dims.ues; ++k)
            real.v(r, k) = stats.v_bar(r, k) + (std::sqrt(stats.xi_v(r, k)) * nv) * cn.vec(rng, dims.elements);
    return real;
}

arma::cx_mat assemble_overall(const ChannelRealization& real, const arma::cx_vec& theta) {
    check_theta(real, theta);
    const auto& dims = real.dims;
    arma::cx_mat h = assemble_direct(real);
    for (int k = 0; k < dims.ues; ++k) {
        for (int r = 0; r < dims.irs; ++r) {
            const arma::cx_vec reflected =
                theta.subvec(r * dims.elements, (r + 1) * dims.elements - 1) % real.v(r, k);
            for (int l = 0; l < dims.aps; ++l)
                h.col(k).subvec(l * dims.antennas, (l + 1) * dims.antennas - 1) += real.g(l, r).t() * reflected;
        }
    }
    return h;
}

arma::cx_mat assemble_direct(const ChannelRealization& real) {
    const auto& dims = real.dims;
    arma::cx_mat h(dims.stacked_antennas(), dims.ues);
    for (int k = 0; k < dims.ues; ++k)
        for (int l = 0; l < dims.aps; ++l)
            h.col(k).subvec(l * dims.antennas, (l + 1) * dims.antennas - 1) = real.d(l, k);
    return h;
}

ChannelStatistics random_statistics(const Dimensions& dims, Rng& rng, const RandomStatisticsOptions& opt) {
    if (dims.aps < 1 || dims.irs < 1 || dims.ues < 1 || dims.antennas < 1 || dims.elements < 1)
        throw std::invalid_argument("random_statistics: all dimensions must be positive");
    std::uniform_real_distribution<double> log_xi(std::log(opt.path_loss_min), std::log(opt.path_loss_max));
    std::uniform_real_distribution<double> kf(opt.kfactor_db_min, opt.kfactor_db_max);
    std::bernoulli_distribution blocked(opt.blockage_probability);

    ChannelStatistics s;
    s.dims = dims;
    s.beta_d = db_to_linear(kf(rng));
    s.beta_g = db_to_linear(kf(rng));
    s.beta_v = db_to_linear(kf(rng));
    s.d_bar.set_size(dims.aps, dims.ues);
    s.g_bar.set_size(dims.aps, dims.irs);
    s.v_bar.set_size(dims.irs, dims.ues);
    s.xi_d.set_size(dims.aps, dims.ues);
    s.xi_g.set_size(dims.aps, dims.irs);
    s.xi_v.set_size(dims.irs, dims.ues);
    s.blockage.zeros(dims.aps, dims.irs);

    for (int l = 0; l < dims.aps; ++l) {
        for (int k = 0; k < dims.ues; ++k) {
            s.xi_d(l, k) = std::exp(log_xi(rng));
            s.d_bar(l, k) = std::sqrt(s.xi_d(l, k)) * rician_los(s.beta_d) * random_phases(rng, dims.antennas);
        }
        for (int r = 0; r < dims.irs; ++r) {
            s.xi_g(l, r) = std::exp(log_xi(rng));
            s.blockage(l, r) = blocked(rng) ? 1 : 0;
            const arma::cx_vec a = random_phases(rng, dims.elements);
            const arma::cx_vec b = random_phases(rng, dims.antennas);
            if (s.blockage(l, r))
                s.g_bar(l, r).zeros(dims.elements, dims.antennas);
            else
                s.g_bar(l, r) = std::sqrt(s.xi_g(l, r)) * rician_los(s.beta_g) * (a * b.t());
        }
    }
    for (int r = 0; r < dims.irs; ++r)
        for (int k = 0; k < dims.ues; ++k) {
            s.xi_v(r, k) = std::exp(log_xi(rng));
            s.v_bar(r, k) = std::sqrt(s.xi_v(r, k)) * rician_los(s.beta_v) * random_phases(rng, dims.elements);
        }
    return s;
}

} // namespace irscf
