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

#include "irscf/scsi.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace irscf {

namespace {

double nlos_share(double beta) { return std::isinf(beta) ? 0.0 : 1.0 / (1.0 + beta); }

void check_indices(const ChannelStatistics& stats, int l, int k) {
    if (l < 0 || l >= stats.dims.aps || k < 0 || k >= stats.dims.ues)
        throw std::out_of_range("quadratic form: AP or UE index out of range");
}

// A_{l,k}, b_{l,k}, c_{l,k} given G_l G_l^H for this AP.
QuadraticForm link_form(const ChannelStatistics& s, const arma::cx_mat& g_stacked, const arma::cx_mat& gram,
                        int l, int k) {
    const auto& dims = s.dims;
    const double m = dims.antennas;
    const double share_g = nlos_share(s.beta_g);
    const double share_v = nlos_share(s.beta_v);
    const arma::cx_vec v = s.stacked_v_bar(k);

    QuadraticForm f;
    // V^H (G G^H) V with V = diag(v).
    f.a = gram % (arma::conj(v) * v.st());
    f.a_diagonal.zeros(dims.reflecting());
    for (int r = 0; r < dims.irs; ++r) {
        const double xi_g = s.xi_g_effective(l, r);
        const double xi_v = s.xi_v(r, k);
        for (int n = 0; n < dims.elements; ++n) {
            const arma::uword i = r * dims.elements + n;
            f.a_diagonal[i] = std::norm(v[i]) * m * share_g * xi_g           // LoS v, NLoS G
                              + share_v * xi_v * std::real(gram(i, i))       // NLoS v, LoS G (Hadamard mask)
                              + share_v * m * share_g * xi_v * xi_g;         // NLoS v, NLoS G
        }
    }
    f.a.diag() += arma::conv_to<arma::cx_vec>::from(f.a_diagonal);
    f.b = arma::conj(v) % (g_stacked * s.d_bar(l, k));
    f.c = std::pow(arma::norm(s.d_bar(l, k)), 2) + m * s.xi_d(l, k) * nlos_share(s.beta_d);
    return f;
}

void accumulate(QuadraticForm& into, const QuadraticForm& term) {
    if (into.b.is_empty()) {
        into = term;
        return;
    }
    into.a += term.a;
    into.b += term.b;
    into.c += term.c;
    into.a_diagonal += term.a_diagonal;
}

} // namespace

double QuadraticForm::value(const arma::cx_vec& theta) const {
    if (theta.n_elem != b.n_elem) throw std::invalid_argument("QuadraticForm::value: dimension mismatch");
    return std::real(arma::cdot(theta, a * theta)) + 2.0 * std::real(arma::cdot(theta, b)) + c;
}

QuadraticForm build_quadratic_link(const ChannelStatistics& stats, int l, int k) {
    check_indices(stats, l, k);
    const arma::cx_mat g = stats.stacked_g_bar(l);
    return link_form(stats, g, g * g.t(), l, k);
}

QuadraticForm build_quadratic_ue(const ChannelStatistics& stats, int k) {
    check_indices(stats, 0, k);
    QuadraticForm sum;
    for (int l = 0; l < stats.dims.aps; ++l) accumulate(sum, build_quadratic_link(stats, l, k));
    return sum;
}

std::vector<QuadraticForm> build_quadratic_forms(const ChannelStatistics& stats) {
    std::vector<QuadraticForm> forms(stats.dims.ues);
    for (int l = 0; l < stats.dims.aps; ++l) {
        const arma::cx_mat g = stats.stacked_g_bar(l);
        const arma::cx_mat gram = g * g.t();
        for (int k = 0; k < stats.dims.ues; ++k) accumulate(forms[k], link_form(stats, g, gram, l, k));
    }
    return forms;
}

double min_average_gain(const std::vector<QuadraticForm>& forms, const arma::cx_vec& theta) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& f : forms) best = std::min(best, f.value(theta));
    return best;
}

} // namespace irscf
