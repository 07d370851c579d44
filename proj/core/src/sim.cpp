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

#include "irscf/sim.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "irscf/active.hpp"
#include "irscf/channel.hpp"
#include "irscf/errors.hpp"
#include "irscf/passive.hpp"
#include "irscf/rng.hpp"
#include "irscf/scenario.hpp"
#include "irscf/scsi.hpp"

namespace irscf {

namespace {

enum Stream : std::uint64_t { kPlacement = 1, kEstimation, kEvaluation, kRandomization, kRandomTheta };

} // namespace

DropSeeds DropSeeds::derive(std::uint64_t campaign_seed, int drop_index) {
    DropSeeds s;
    s.drop = derive_seed(campaign_seed, static_cast<std::uint64_t>(drop_index));
    s.placement = derive_seed(s.drop, kPlacement);
    s.estimation = derive_seed(s.drop, kEstimation);
    s.evaluation = derive_seed(s.drop, kEvaluation);
    s.randomization = derive_seed(s.drop, kRandomization);
    s.random_theta = derive_seed(s.drop, kRandomTheta);
    return s;
}

const SchemeOutcome& DropResult::outcome(Scheme scheme) const {
    for (const auto& o : schemes)
        if (o.scheme == scheme) return o;
    throw std::out_of_range("DropResult: scheme not part of this run");
}

const SchemeSummary& SimulationResult::summary(Scheme scheme) const {
    for (const auto& s : summaries)
        if (s.scheme == scheme) return s;
    throw std::out_of_range("SimulationResult: scheme not part of this run");
}

DropResult run_drop(const ExperimentConfig& config, int drop_index) {
    DropResult out;
    out.drop = drop_index;
    try {
        const DropSeeds seeds = DropSeeds::derive(config.simulation.seed, drop_index);
        const ScenarioConfig& sc = config.scenario;
        const NetworkGeometry geometry = build_geometry(sc, seeds.placement);
        const ChannelStatistics stats = build_statistics(sc, geometry);
        const std::vector<QuadraticForm> forms = build_quadratic_forms(stats);

        std::vector<ThetaChoice> thetas;
        for (Scheme s : config.simulation.schemes) {
            SchemeOutcome o;
            o.scheme = s;
            switch (s) {
            case Scheme::proposed: {
                Rng rng(seeds.randomization);
                PassiveOptions options;
                options.num_randomizations = config.simulation.randomizations;
                options.tolerances = config.simulation.sdp;
                PassiveDesign design = design_passive(forms, options, rng);
                o.theta = design.extraction.beamformer.theta;
                o.average_gain = design.extraction.objective;
                out.rank_one = design.extraction.rank_one;
                design.relaxation.theta_bar.reset();
                out.relaxation = std::move(design.relaxation);
                break;
            }
            case Scheme::random_passive: {
                Rng rng(seeds.random_theta);
                o.theta = random_theta(stats.dims.reflecting(), rng).theta;
                o.average_gain = min_average_gain(forms, *o.theta);
                break;
            }
            case Scheme::no_irs: {
                o.average_gain = arma::datum::inf;
                for (const auto& f : forms) o.average_gain = std::min(o.average_gain, f.c);
                break;
            }
            }
            thetas.push_back(o.theta);
            out.schemes.push_back(std::move(o));
        }

        Rng est_rng(seeds.estimation);
        const auto estimates = estimate_precoder_power(stats, thetas, config.simulation.realizations, est_rng);
        Rng eval_rng(seeds.evaluation);
        const auto checks = estimate_precoder_power(stats, thetas, config.simulation.realizations, eval_rng);
        const double budget = sc.max_power_w();
        for (std::size_t i = 0; i < out.schemes.size(); ++i) {
            SchemeOutcome& o = out.schemes[i];
            const PowerAllocation alloc = allocate_power(estimates[i], budget);
            o.p_opt = alloc.p_opt;
            o.binding_ap = alloc.binding_ap;
            o.min_rate = min_rate(alloc, sc.noise_power_w());
            o.power_utilization = alloc.p_opt * arma::sum(checks[i].mean_power, 1).max() / budget;
            if (!config.simulation.export_theta) o.theta.reset();
        }
        out.ok = true;
    } catch (const std::exception& e) {
        out.ok = false;
        out.schemes.clear();
        out.relaxation.reset();
        out.error = "drop " + std::to_string(drop_index) + ": " + e.what();
    }
    return out;
}

std::vector<CdfPoint> empirical_cdf(std::vector<double> samples) {
    std::sort(samples.begin(), samples.end());
    std::vector<CdfPoint> cdf(samples.size());
    const double n = static_cast<double>(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) cdf[i] = {samples[i], static_cast<double>(i + 1) / n};
    return cdf;
}

double median(std::vector<double> samples) {
    if (samples.empty()) return std::nan("");
    std::sort(samples.begin(), samples.end());
    const std::size_t n = samples.size();
    return n % 2 ? samples[n / 2] : 0.5 * (samples[n / 2 - 1] + samples[n / 2]);
}

SimulationResult run_campaign(const ExperimentConfig& config) {
    config.validate();
    SimulationResult result;
    result.config = config;
    result.config_hash = config_hash(config);
    const int drops = config.simulation.drops;
    result.drops.resize(drops);

    std::atomic<int> next{0};
    auto worker = [&] {
        for (int i = next++; i < drops; i = next++) result.drops[i] = run_drop(config, i);
    };
    const int jobs = std::min(config.simulation.jobs, drops);
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    }

    std::string first_error;
    for (const auto& d : result.drops) {
        if (d.ok) continue;
        ++result.failed_drops;
        if (first_error.empty()) first_error = d.error;
    }
    if (result.failed_drops > 0.01 * drops) {
        std::ostringstream msg;
        msg << "campaign failed: " << result.failed_drops << " of " << drops << " drops errored; first: " << first_error;
        throw NumericalError(msg.str());
    }

    for (Scheme s : config.simulation.schemes) {
        SchemeSummary summary;
        summary.scheme = s;
        for (const auto& d : result.drops)
            if (d.ok) summary.min_rate.push_back(d.outcome(s).min_rate);
        summary.mean = summary.min_rate.empty()
                           ? std::nan("")
                           : std::accumulate(summary.min_rate.begin(), summary.min_rate.end(), 0.0) /
                                 static_cast<double>(summary.min_rate.size());
        summary.median = median(summary.min_rate);
        summary.cdf = empirical_cdf(summary.min_rate);
        result.summaries.push_back(std::move(summary));
    }
    return result;
}

ExperimentConfig apply_axis(const ExperimentConfig& config, SweepAxis axis, double value,
                            std::optional<std::pair<int, int>> pair) {
    ExperimentConfig c = config;
    c.sweep = SweepConfig{};
    ScenarioConfig& s = c.scenario;
    switch (axis) {
    case SweepAxis::none: break;
    case SweepAxis::N: s.irs_elements = static_cast<int>(value); break;
    case SweepAxis::M: s.ap_antennas = static_cast<int>(value); break;
    case SweepAxis::R:
        s.num_irs = pair ? pair->first : static_cast<int>(value);
        if (pair) s.irs_elements = pair->second;
        break;
    case SweepAxis::d: s.hotspot_center_m = value; break;
    case SweepAxis::P_bar: s.max_power_dbm = value; break;
    }
    c.validate();
    return c;
}

std::vector<SweepPoint> run_sweep(const ExperimentConfig& config) {
    config.validate();
    const SweepConfig& sw = config.sweep;
    if (sw.axis == SweepAxis::none) throw ConfigError("sweep: no axis configured");
    std::vector<SweepSeries> series = sw.series;
    if (series.empty()) series.push_back({});
    std::vector<SweepPoint> points;
    for (const auto& ser : series) {
        ExperimentConfig base = config;
        for (const auto& o : ser.set) apply_override(base, o);
        for (std::size_t i = 0; i < sw.size(); ++i) {
            SweepPoint p;
            p.series = ser.label;
            if (!sw.pairs.empty()) {
                p.pair = sw.pairs[i];
                p.value = p.pair->first;
            } else {
                p.value = sw.values[i];
            }
            p.result = run_campaign(apply_axis(base, sw.axis, p.value, p.pair));
            points.push_back(std::move(p));
        }
    }
    return points;
}

} // namespace irscf
