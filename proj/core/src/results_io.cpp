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

#include "irscf/results_io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "irscf/passive.hpp"

namespace irscf {

using nlohmann::ordered_json;

namespace {

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
    return out;
}

std::string point_label(const SweepPoint& p, SweepAxis axis) {
    std::string label = p.series.empty() ? std::string(to_string(axis)) : p.series + "_" + std::string(to_string(axis));
    if (p.pair) return label + std::to_string(p.pair->first) + "_N" + std::to_string(p.pair->second);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%g", p.value);
    return label + buf;
}

} // namespace

std::string format_double(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

void write_rates_csv(const SimulationResult& result, std::ostream& out) {
    out << "scheme,drop,min_rate\n";
    for (const auto& s : result.summaries) {
        for (const auto& d : result.drops) {
            if (!d.ok) continue;
            out << to_string(s.scheme) << ',' << d.drop << ',' << format_double(d.outcome(s.scheme).min_rate) << '\n';
        }
    }
}

void write_cdf_csv(const SimulationResult& result, std::ostream& out) {
    out << "scheme,min_rate,probability\n";
    for (const auto& s : result.summaries)
        for (const auto& p : s.cdf)
            out << to_string(s.scheme) << ',' << format_double(p.rate) << ',' << format_double(p.probability) << '\n';
}

std::string summary_json(const SimulationResult& result) {
    ordered_json j;
    j["config_hash"] = result.config_hash;
    j["seed"] = result.config.simulation.seed;
    j["drops"] = result.config.simulation.drops;
    j["realizations"] = result.config.simulation.realizations;
    j["failed_drops"] = result.failed_drops;
    ordered_json schemes = ordered_json::object();
    for (const auto& s : result.summaries) {
        double max_util = 0.0, mean_gain = 0.0;
        int n = 0;
        for (const auto& d : result.drops) {
            if (!d.ok) continue;
            const auto& o = d.outcome(s.scheme);
            max_util = std::max(max_util, o.power_utilization);
            mean_gain += o.average_gain;
            ++n;
        }
        ordered_json e;
        e["samples"] = s.min_rate.size();
        e["mean_min_rate"] = s.mean;
        e["median_min_rate"] = s.median;
        e["mean_average_gain"] = n ? mean_gain / n : 0.0;
        e["max_power_utilization"] = max_util;
        schemes[std::string(to_string(s.scheme))] = e;
    }
    j["schemes"] = schemes;

    int solved = 0, rank_one = 0, optimal = 0;
    double iterations = 0.0;
    for (const auto& d : result.drops) {
        if (!d.ok || !d.relaxation) continue;
        ++solved;
        rank_one += d.rank_one;
        optimal += d.relaxation->status == SdpStatus::optimal;
        iterations += d.relaxation->iterations;
    }
    if (solved) {
        j["relaxation"]["solved"] = solved;
        j["relaxation"]["optimal"] = optimal;
        j["relaxation"]["rank_one"] = rank_one;
        j["relaxation"]["mean_iterations"] = iterations / solved;
    }
    ordered_json errors = ordered_json::array();
    for (const auto& d : result.drops)
        if (!d.ok) errors.push_back(d.error);
    j["errors"] = errors;
    j["config"] = ordered_json::parse(to_json_text(result.config));
    return j.dump(2) + "\n";
}

CampaignFiles write_campaign(const SimulationResult& result, const std::filesystem::path& out_dir,
                             const std::string& stem) {
    std::filesystem::create_directories(out_dir);
    CampaignFiles files;
    files.rates_csv = out_dir / (stem + "_rates.csv");
    files.cdf_csv = out_dir / (stem + "_cdf.csv");
    files.summary_json = out_dir / (stem + "_summary.json");
    {
        auto out = open_out(files.rates_csv);
        write_rates_csv(result, out);
    }
    {
        auto out = open_out(files.cdf_csv);
        write_cdf_csv(result, out);
    }
    {
        auto out = open_out(files.summary_json);
        out << summary_json(result);
    }
    if (result.config.simulation.export_theta) {
        const auto dir = out_dir / (stem + "_theta");
        std::filesystem::create_directories(dir);
        for (const auto& d : result.drops) {
            if (!d.ok) continue;
            for (const auto& o : d.schemes) {
                if (!o.theta) continue;
                const auto path = dir / (std::string(to_string(o.scheme)) + "_drop_" + std::to_string(d.drop) + ".json");
                save_theta(PassiveBeamformer{*o.theta}, path);
                files.theta_files.push_back(path);
            }
        }
    }
    return files;
}

std::vector<CampaignFiles> write_sweep(const std::vector<SweepPoint>& points, SweepAxis axis,
                                       const std::filesystem::path& out_dir, const std::string& stem) {
    std::filesystem::create_directories(out_dir);
    std::vector<CampaignFiles> files;
    auto table = open_out(out_dir / (stem + "_table.csv"));
    table << "series,axis,value,R,N,scheme,drops,mean,median\n";
    for (const auto& p : points) {
        files.push_back(write_campaign(p.result, out_dir, stem + "_" + point_label(p, axis)));
        const auto& sc = p.result.config.scenario;
        for (const auto& s : p.result.summaries)
            table << p.series << ',' << to_string(axis) << ',' << format_double(p.value) << ',' << sc.num_irs << ',' << sc.irs_elements
                  << ',' << to_string(s.scheme) << ',' << s.min_rate.size() << ',' << format_double(s.mean) << ','
                  << format_double(s.median) << '\n';
    }
    return files;
}

} // namespace irscf
