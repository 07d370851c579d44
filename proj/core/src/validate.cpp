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

#include "irscf/validate.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "irscf/active.hpp"
#include "irscf/oracle.hpp"
#include "irscf/passive.hpp"
#include "irscf/scenario.hpp"
#include "irscf/scsi.hpp"
#include "irscf/sim.hpp"

namespace irscf {

namespace {

PropertyResult upper(std::string name, double measured, double threshold, std::string detail) {
    return {std::move(name), measured <= threshold, measured, threshold, true, std::move(detail)};
}

PropertyResult lower(std::string name, double measured, double threshold, std::string detail) {
    return {std::move(name), measured >= threshold, measured, threshold, false, std::move(detail)};
}

const Dimensions kToyGainDims{2, 2, 2, 2, 4};  // L, R, K, M, N
const Dimensions kToyGridDims{2, 1, 2, 2, 4};

PropertyResult check_zf(Rng& rng) {
    ComplexNormal cn;
    std::uniform_int_distribution<int> k_dist(1, 8);
    std::uniform_int_distribution<int> extra(0, 24);
    double worst = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
        const int k = k_dist(rng);
        const int rows = std::min(64, k + extra(rng));
        const arma::cx_mat h = cn.mat(rng, rows, k);
        const Precoder p = zf_precoder(h);
        worst = std::max(worst, arma::abs(h.t() * p.w - arma::eye<arma::cx_mat>(k, k)).max());
    }
    return upper("zf-identity", worst, 1e-9, "max |H^H W - I| over 200 random channels, K <= 8, LM <= 64");
}

PropertyResult check_gain(const ValidateOptions& opt, Rng& rng) {
    double worst = 0.0;
    for (int inst = 0; inst < 5; ++inst) {
        const ChannelStatistics stats = random_statistics(kToyGainDims, rng);
        const arma::cx_vec theta = random_theta(kToyGainDims.reflecting(), rng).theta;
        const arma::mat mc = monte_carlo_link_gain(stats, theta, opt.monte_carlo_draws, rng);
        for (int l = 0; l < stats.dims.aps; ++l)
            for (int k = 0; k < stats.dims.ues; ++k) {
                QuadraticForm f = build_quadratic_link(stats, l, k);
                if (opt.corrupt_quadratic) f.a *= 1.25;
                worst = std::max(worst, std::abs(f.value(theta) - mc(l, k)) / mc(l, k));
            }
    }
    std::ostringstream d;
    d << "closed-form average gain vs Monte Carlo (" << opt.monte_carlo_draws
      << " draws), max relative error over 5 instances";
    return upper("gain-closed-form", worst, 0.02, d.str());
}

} // namespace

arma::mat monte_carlo_link_gain(const ChannelStatistics& stats, const arma::cx_vec& theta, int draws, Rng& rng) {
    const int m = stats.dims.antennas;
    arma::mat acc(stats.dims.aps, stats.dims.ues, arma::fill::zeros);
    for (int t = 0; t < draws; ++t) {
        const arma::cx_mat h = assemble_overall(draw_realization(stats, rng), theta);
        for (int l = 0; l < stats.dims.aps; ++l)
            acc.row(l) += arma::sum(arma::square(arma::abs(h.rows(l * m, (l + 1) * m - 1))), 0);
    }
    return acc / static_cast<double>(draws);
}

std::vector<PropertyResult> run_property_suite(const ExperimentConfig& config, const ValidateOptions& opt) {
    std::vector<PropertyResult> out;
    Rng rng(derive_seed(opt.seed, 101));
    out.push_back(check_zf(rng));
    out.push_back(check_gain(opt, rng));

    // Toy relaxations against the exhaustive grid.
    double worst_bound = 0.0;
    int good = 0;
    double worst_ratio = 1.0;
    for (int i = 0; i < opt.toy_instances; ++i) {
        const ChannelStatistics stats = random_statistics(kToyGridDims, rng);
        const auto forms = build_quadratic_forms(stats);
        const GridSearchResult grid = grid_search(forms, 16);
        PassiveOptions popt;
        popt.num_randomizations = config.simulation.randomizations;
        const PassiveDesign design = design_passive(forms, popt, rng);
        worst_bound = std::max(worst_bound, (grid.objective - design.relaxation.objective) / std::abs(grid.objective));
        const double ratio = design.extraction.objective / grid.objective;
        worst_ratio = std::min(worst_ratio, ratio);
        good += ratio >= 0.9;
    }
    out.push_back(upper("sdr-upper-bound", worst_bound, 1e-6,
                        "max (grid optimum - relaxation) / |grid optimum|, 16 levels, R*N = 4"));
    std::ostringstream d;
    d << "fraction of toy instances where extraction reaches 90% of the grid optimum (worst ratio " << worst_ratio
      << ")";
    out.push_back(lower("extraction-vs-grid", static_cast<double>(good) / opt.toy_instances, 0.9, d.str()));

    // Full pipeline on drop 0 of the configured scenario.
    const DropSeeds seeds = DropSeeds::derive(config.simulation.seed, 0);
    const ScenarioConfig& sc = config.scenario;
    const ChannelStatistics stats = build_statistics(sc, build_geometry(sc, seeds.placement));
    const auto forms = build_quadratic_forms(stats);
    Rng prng(seeds.randomization);
    PassiveOptions popt;
    popt.num_randomizations = config.simulation.randomizations;
    popt.tolerances = config.simulation.sdp;
    const PassiveDesign design = design_passive(forms, popt, prng);
    const arma::cx_mat& xb = design.relaxation.theta_bar;
    const double diag_err = arma::abs(arma::real(xb.diag()) - 1.0).max();
    const double min_eig = arma::eig_sym(0.5 * (xb + xb.t())).min();
    out.push_back(upper("relaxation-feasibility", std::max(diag_err, -min_eig), 1e-6,
                        "max(|diag - 1|, -lambda_min) of the relaxed solution on drop 0"));
    out.push_back(upper("extraction-below-relaxation",
                        (design.extraction.objective - design.relaxation.objective) /
                            std::abs(design.relaxation.objective),
                        1e-6, "relative excess of the extracted objective over the relaxation on drop 0"));
    const arma::cx_vec& theta = design.extraction.beamformer.theta;
    out.push_back(upper("unit-modulus", arma::abs(arma::abs(theta) - 1.0).max(), 1e-9,
                        "max ||theta_i| - 1| of the extracted beamformer on drop 0"));

    Rng erng(seeds.estimation);
    const PowerEstimate est = estimate_precoder_power(stats, ThetaChoice{theta}, config.simulation.realizations, erng);
    const PowerAllocation alloc = allocate_power(est, sc.max_power_w());
    const double used = alloc.p_opt * arma::sum(est.mean_power, 1).max() / sc.max_power_w();
    out.push_back(upper("power-feasibility", std::abs(used - 1.0), 1e-9,
                        "|max_l p sum_k E||w_lk||^2 / P_bar - 1| on drop 0 (binding AP at equality)"));
    return out;
}

} // namespace irscf
