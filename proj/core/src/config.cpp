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

#include "irscf/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "irscf/errors.hpp"

namespace irscf {

using nlohmann::json;

namespace {

#define IRSCF_SCENARIO_FIELDS(X)                                                                              \
    X(num_aps) X(num_irs) X(irs_slots) X(num_ues) X(ap_antennas) X(irs_elements) X(area_side_m)              \
    X(hotspot_center_m) X(hotspot_radius_m) X(irs_start_angle_deg) X(ap_height_m) X(irs_height_m)           \
    X(ue_height_m) X(element_spacing) X(max_power_dbm) X(noise_power_dbm) X(ref_path_loss_db)               \
    X(exponent_direct) X(exponent_ap_irs) X(exponent_irs_ue) X(kfactor_direct_db) X(kfactor_ap_irs_db)      \
    X(kfactor_irs_ue_db)

json to_json(const ExperimentConfig& c) {
    json j;
    j["name"] = c.name;

    json& s = j["scenario"];
#define X(f) s[#f] = c.scenario.f;
    IRSCF_SCENARIO_FIELDS(X)
#undef X

    json& sim = j["simulation"];
    sim["drops"] = c.simulation.drops;
    sim["realizations"] = c.simulation.realizations;
    sim["randomizations"] = c.simulation.randomizations;
    sim["seed"] = c.simulation.seed;
    sim["jobs"] = c.simulation.jobs;
    sim["export_theta"] = c.simulation.export_theta;
    sim["schemes"] = json::array();
    for (Scheme scheme : c.simulation.schemes) sim["schemes"].push_back(std::string(to_string(scheme)));
    sim["sdp"]["relative_gap"] = c.simulation.sdp.relative_gap;
    sim["sdp"]["feasibility"] = c.simulation.sdp.feasibility;
    sim["sdp"]["max_iterations"] = c.simulation.sdp.max_iterations;

    json& sw = j["sweep"];
    sw["axis"] = std::string(to_string(c.sweep.axis));
    sw["values"] = c.sweep.values;
    sw["pairs"] = json::array();
    for (const auto& [r, n] : c.sweep.pairs) sw["pairs"].push_back(json::array({r, n}));
    sw["series"] = json::array();
    for (const auto& s : c.sweep.series) sw["series"].push_back({{"label", s.label}, {"set", s.set}});
    return j;
}

ExperimentConfig from_json(const json& j) {
    ExperimentConfig c;
    c.name = j.at("name").get<std::string>();
    const json& s = j.at("scenario");
#define X(f) s.at(#f).get_to(c.scenario.f);
    IRSCF_SCENARIO_FIELDS(X)
#undef X
    const json& sim = j.at("simulation");
    sim.at("drops").get_to(c.simulation.drops);
    sim.at("realizations").get_to(c.simulation.realizations);
    sim.at("randomizations").get_to(c.simulation.randomizations);
    sim.at("seed").get_to(c.simulation.seed);
    sim.at("jobs").get_to(c.simulation.jobs);
    sim.at("export_theta").get_to(c.simulation.export_theta);
    c.simulation.schemes.clear();
    for (const auto& name : sim.at("schemes")) c.simulation.schemes.push_back(parse_scheme(name.get<std::string>()));
    sim.at("sdp").at("relative_gap").get_to(c.simulation.sdp.relative_gap);
    sim.at("sdp").at("feasibility").get_to(c.simulation.sdp.feasibility);
    sim.at("sdp").at("max_iterations").get_to(c.simulation.sdp.max_iterations);
    const json& sw = j.at("sweep");
    c.sweep.axis = parse_axis(sw.at("axis").get<std::string>());
    c.sweep.values = sw.at("values").get<std::vector<double>>();
    c.sweep.pairs.clear();
    for (const auto& p : sw.at("pairs")) {
        if (!p.is_array() || p.size() != 2) throw ConfigError("sweep.pairs: each entry must be [R, N]");
        c.sweep.pairs.emplace_back(p[0].get<int>(), p[1].get<int>());
    }
    c.sweep.series.clear();
    for (const auto& e : sw.at("series")) {
        if (!e.is_object()) throw ConfigError("sweep.series: each entry must be a table with label and set");
        for (const auto& [key, value] : e.items())
            if (key != "label" && key != "set") throw ConfigError("unknown config key 'sweep.series." + key + "'");
        c.sweep.series.push_back({e.at("label").get<std::string>(), e.value("set", std::vector<std::string>{})});
    }
    return c;
}

std::string join(const std::string& prefix, const std::string& key) { return prefix.empty() ? key : prefix + "." + key; }

// Checks `input` against the shape of the default config `schema`.
void check_shape(const json& input, const json& schema, const std::string& path) {
    auto fail = [&](const std::string& why) { throw ConfigError("config key '" + path + "': " + why); };
    switch (schema.type()) {
    case json::value_t::object:
        if (!input.is_object()) fail("expected a table");
        for (const auto& [key, value] : input.items()) {
            if (!schema.contains(key)) throw ConfigError("unknown config key '" + join(path, key) + "'");
            check_shape(value, schema.at(key), join(path, key));
        }
        break;
    case json::value_t::number_float:
        if (!input.is_number()) fail("expected a number");
        break;
    case json::value_t::number_integer:
        if (!input.is_number_integer()) fail("expected an integer");
        break;
    case json::value_t::number_unsigned:
        if (!input.is_number_unsigned()) fail("expected a nonnegative integer");
        break;
    case json::value_t::boolean:
        if (!input.is_boolean()) fail("expected true or false");
        break;
    case json::value_t::string:
        if (!input.is_string()) fail("expected a string");
        break;
    case json::value_t::array:
        if (!input.is_array()) fail("expected an array");
        break;
    default:
        break;
    }
}

ExperimentConfig build(const json& input) {
    json merged = to_json(ExperimentConfig{});
    check_shape(input, merged, "");
    merged.merge_patch(input);
    try {
        ExperimentConfig c = from_json(merged);
        c.validate();
        return c;
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
}

const json* find_path(const json& root, const std::vector<std::string>& parts) {
    const json* node = &root;
    for (const auto& p : parts) {
        if (!node->is_object() || !node->contains(p)) return nullptr;
        node = &node->at(p);
    }
    return node;
}

json parse_scalar(const json& schema, const std::string& key, const std::string& text) {
    auto fail = [&](const std::string& what) {
        throw ConfigError("override '" + key + "': cannot parse '" + text + "' as " + what);
    };
    switch (schema.type()) {
    case json::value_t::string: return text;
    case json::value_t::boolean:
        if (text == "true") return true;
        if (text == "false") return false;
        fail("a boolean");
        break;
    case json::value_t::number_integer: {
        long long v = 0;
        const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
        if (ec != std::errc{} || ptr != text.data() + text.size()) fail("an integer");
        return v;
    }
    case json::value_t::number_unsigned: {
        unsigned long long v = 0;
        const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
        if (ec != std::errc{} || ptr != text.data() + text.size()) fail("a nonnegative integer");
        return v;
    }
    case json::value_t::number_float: {
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
        if (ec != std::errc{} || ptr != text.data() + text.size()) fail("a number");
        return v;
    }
    case json::value_t::array: {
        json v = json::parse(text, nullptr, false);
        if (v.is_discarded() || !v.is_array()) fail("a JSON array");
        return v;
    }
    default:
        break;
    }
    fail("a value of this key");
    return {};
}

} // namespace

std::string_view to_string(Scheme scheme) {
    switch (scheme) {
    case Scheme::proposed: return "proposed";
    case Scheme::no_irs: return "no-irs";
    case Scheme::random_passive: return "random-passive";
    }
    return "unknown";
}

Scheme parse_scheme(std::string_view name) {
    for (Scheme s : all_schemes())
        if (to_string(s) == name) return s;
    throw ConfigError("unknown scheme '" + std::string(name) + "' (expected proposed, no-irs or random-passive)");
}

std::vector<Scheme> all_schemes() { return {Scheme::proposed, Scheme::no_irs, Scheme::random_passive}; }

std::string_view to_string(SweepAxis axis) {
    switch (axis) {
    case SweepAxis::none: return "none";
    case SweepAxis::N: return "N";
    case SweepAxis::M: return "M";
    case SweepAxis::R: return "R";
    case SweepAxis::d: return "d";
    case SweepAxis::P_bar: return "P_bar";
    }
    return "unknown";
}

SweepAxis parse_axis(std::string_view name) {
    for (SweepAxis a : {SweepAxis::none, SweepAxis::N, SweepAxis::M, SweepAxis::R, SweepAxis::d, SweepAxis::P_bar})
        if (to_string(a) == name) return a;
    throw ConfigError("unknown sweep axis '" + std::string(name) + "' (expected N, M, R, d or P_bar)");
}

void SimulationConfig::validate() const {
    if (drops < 1) throw ConfigError("simulation.drops must be >= 1");
    if (realizations < 1) throw ConfigError("simulation.realizations must be >= 1");
    if (randomizations < 1) throw ConfigError("simulation.randomizations must be >= 1");
    if (jobs < 1) throw ConfigError("simulation.jobs must be >= 1");
    if (schemes.empty()) throw ConfigError("simulation.schemes must name at least one scheme");
    if (std::set<Scheme>(schemes.begin(), schemes.end()).size() != schemes.size())
        throw ConfigError("simulation.schemes contains duplicates");
    if (!(sdp.relative_gap > 0.0) || !(sdp.feasibility > 0.0) || sdp.max_iterations < 1)
        throw ConfigError("simulation.sdp tolerances must be positive");
}

void SweepConfig::validate() const {
    std::set<std::string> labels;
    for (const auto& s : series)
        if (s.label.empty() || !labels.insert(s.label).second)
            throw ConfigError("sweep.series labels must be unique and nonempty");
    if (axis == SweepAxis::none) {
        if (!values.empty() || !pairs.empty() || !series.empty())
            throw ConfigError("sweep section given without sweep.axis");
        return;
    }
    if (!values.empty() && !pairs.empty()) throw ConfigError("sweep: give either values or pairs, not both");
    if (!pairs.empty() && axis != SweepAxis::R) throw ConfigError("sweep.pairs requires axis R");
    if (size() == 0) throw ConfigError("sweep: no values for axis " + std::string(to_string(axis)));
    const bool integral = axis == SweepAxis::N || axis == SweepAxis::M || axis == SweepAxis::R;
    for (double v : values)
        if (integral && (v != std::floor(v) || v < 1.0))
            throw ConfigError("sweep.values: axis " + std::string(to_string(axis)) + " needs positive integers");
}

void ExperimentConfig::validate() const {
    scenario.validate();
    simulation.validate();
    sweep.validate();
}

std::string to_json_text(const ExperimentConfig& config) { return to_json(config).dump(2); }

ExperimentConfig parse_config(std::string_view json_text) {
    json input = json::parse(json_text, nullptr, false);
    if (input.is_discarded()) throw ConfigError("config: not valid JSON");
    return build(input);
}

ExperimentConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file '" + path.string() + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return parse_config(buf.str());
    } catch (const ConfigError& e) {
        throw ConfigError(path.string() + ": " + e.what());
    }
}

void apply_override(ExperimentConfig& config, std::string_view assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string_view::npos || eq == 0)
        throw ConfigError("override '" + std::string(assignment) + "' must look like key=value");
    const std::string key(assignment.substr(0, eq));
    const std::string value(assignment.substr(eq + 1));

    std::vector<std::string> parts;
    std::stringstream ss(key);
    for (std::string part; std::getline(ss, part, '.');) parts.push_back(part);

    json current = to_json(config);
    const json defaults = to_json(ExperimentConfig{});
    const json* schema = find_path(defaults, parts);
    if (!schema || schema->is_object()) throw ConfigError("unknown config key '" + key + "'");
    json patch = parse_scalar(*schema, key, value);
    json* node = &current;
    for (const auto& p : parts) node = &(*node)[p];
    *node = std::move(patch);
    config = build(current);
}

std::string config_hash(const ExperimentConfig& config) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char ch : to_json_text(config)) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    char out[17];
    std::snprintf(out, sizeof out, "%016llx", static_cast<unsigned long long>(h));
    return out;
}

} // namespace irscf
