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

// irscf: run campaigns and sweeps, check properties, search phase grids.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "irscf/channel.hpp"
#include "irscf/config.hpp"
#include "irscf/errors.hpp"
#include "irscf/oracle.hpp"
#include "irscf/passive.hpp"
#include "irscf/results_io.hpp"
#include "irscf/scsi.hpp"
#include "irscf/sim.hpp"
#include "irscf/validate.hpp"

namespace {

using namespace irscf;

enum ExitCode { kOk = 0, kUsage = 1, kConfig = 2, kNumerical = 3 };

int report_error(ExitCode code, const std::string& kind, const std::string& message) {
    nlohmann::ordered_json j;
    j["error"]["kind"] = kind;
    j["error"]["exit_code"] = static_cast<int>(code);
    j["error"]["message"] = message;
    std::cerr << j.dump() << '\n';
    return code;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, sep);)
        if (!item.empty()) out.push_back(item);
    return out;
}

// Options shared by run, sweep and validate.
struct CommonArgs {
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::optional<int> drops;
    std::optional<int> realizations;
    std::optional<int> randomizations;
    std::optional<int> jobs;
    std::string schemes;
    std::string output_dir;
    std::vector<std::string> overrides;
    bool export_theta = false;

    void attach(CLI::App& app, bool campaign) {
        app.add_option("-c,--config", config_path, "JSON experiment config (defaults apply when omitted)");
        app.add_option("--seed", seed, "campaign seed");
        app.add_option("--set", overrides, "override a config key, e.g. --set scenario.irs_elements=32")
            ->type_name("KEY=VALUE");
        if (!campaign) return;
        app.add_option("--drops", drops, "number of UE drops");
        app.add_option("--realizations", realizations, "channel realizations per expectation (T)");
        app.add_option("--randomizations", randomizations, "Gaussian randomization candidates");
        app.add_option("--schemes", schemes, "comma list of proposed, no-irs, random-passive");
        app.add_option("--jobs", jobs, "worker threads for drops");
        app.add_option("-o,--output-dir", output_dir, "output directory (env IRSCF_OUTPUT_DIR, default ./results)");
        app.add_flag("--export-theta", export_theta, "write the reflection phases of every drop");
    }

    ExperimentConfig load() const {
        ExperimentConfig c = config_path.empty() ? ExperimentConfig{} : load_config(config_path);
        for (const auto& o : overrides) apply_override(c, o);
        if (seed) c.simulation.seed = *seed;
        if (drops) c.simulation.drops = *drops;
        if (realizations) c.simulation.realizations = *realizations;
        if (randomizations) c.simulation.randomizations = *randomizations;
        if (jobs) c.simulation.jobs = *jobs;
        if (export_theta) c.simulation.export_theta = true;
        if (!schemes.empty()) {
            c.simulation.schemes.clear();
            for (const auto& s : split(schemes, ',')) c.simulation.schemes.push_back(parse_scheme(s));
        }
        c.validate();
        return c;
    }

    std::filesystem::path out_dir() const {
        if (!output_dir.empty()) return output_dir;
        if (const char* env = std::getenv("IRSCF_OUTPUT_DIR"); env && *env) return env;
        return "results";
    }
};

void print_summary(const SimulationResult& r, const std::string& label) {
    std::cout << label << " (" << r.config.simulation.drops - r.failed_drops << " drops, config " << r.config_hash
              << ")\n";
    for (const auto& s : r.summaries)
        std::cout << "  " << to_string(s.scheme) << ": mean " << s.mean << " median " << s.median << " bits/s/Hz\n";
}

int cmd_run(const CommonArgs& args) {
    const ExperimentConfig c = args.load();
    const SimulationResult r = run_campaign(c);
    const CampaignFiles files = write_campaign(r, args.out_dir(), c.name);
    print_summary(r, c.name);
    std::cout << "wrote " << files.rates_csv.string() << ", " << files.cdf_csv.string() << ", "
              << files.summary_json.string() << '\n';
    return kOk;
}

int cmd_sweep(const CommonArgs& args, const std::string& axis, const std::string& values,
              const std::string& fixed_product) {
    ExperimentConfig c = args.load();
    if (!axis.empty() || !values.empty() || !fixed_product.empty()) {
        SweepConfig sw;
        sw.series = c.sweep.series;
        sw.axis = axis.empty() ? c.sweep.axis : parse_axis(axis);
        if (sw.axis == SweepAxis::none && !fixed_product.empty()) sw.axis = SweepAxis::R;
        if (sw.axis == SweepAxis::none) throw CLI::ValidationError("--axis", "no axis given and none in the config");
        for (const auto& v : split(values, ',')) {
            try {
                sw.values.push_back(std::stod(v));
            } catch (const std::exception&) {
                throw CLI::ValidationError("--values", "'" + v + "' is not a number");
            }
        }
        for (const auto& p : split(fixed_product, ',')) {
            const auto parts = split(p, 'x');
            if (parts.size() != 2) throw CLI::ValidationError("--fixed-product", "expected RxN items, got '" + p + "'");
            sw.pairs.emplace_back(std::stoi(parts[0]), std::stoi(parts[1]));
        }
        c.sweep = sw;
        c.validate();
    }
    const auto points = run_sweep(c);
    const auto out = args.out_dir();
    write_sweep(points, c.sweep.axis, out, c.name);
    for (const auto& p : points) {
        std::ostringstream label;
        label << c.name << " " << to_string(c.sweep.axis) << "=" << p.value;
        if (p.pair) label << " N=" << p.pair->second;
        print_summary(p.result, label.str());
    }
    std::cout << "wrote " << (out / (c.name + "_table.csv")).string() << '\n';
    return kOk;
}

int cmd_validate(const CommonArgs& args, const ValidateOptions& options) {
    const ExperimentConfig c = args.load();
    ValidateOptions opt = options;
    opt.seed = c.simulation.seed;
    const auto results = run_property_suite(c, opt);
    bool all = true;
    for (const auto& r : results) {
        all = all && r.passed;
        std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << " measured=" << r.measured
                  << (r.upper_bound ? " max=" : " min=") << r.threshold << " margin=" << r.margin() << "  ("
                  << r.detail << ")\n";
    }
    std::cout << (all ? "all properties passed" : "property failures") << '\n';
    return all ? kOk : kNumerical;
}

struct OracleArgs {
    int aps = 2, irs = 1, elements = 4, antennas = 2, ues = 2, levels = 16, randomizations = 200;
    std::uint64_t seed = 1;
    std::string output_dir;
};

int cmd_oracle(const OracleArgs& a) {
    const Dimensions dims{a.aps, a.irs, a.ues, a.antennas, a.elements};
    if (dims.reflecting() > kMaxGridElements)
        return report_error(kUsage, "usage",
                            "instance too large: R*N = " + std::to_string(dims.reflecting()) + " exceeds " +
                                std::to_string(kMaxGridElements));
    if (a.levels < 1 || a.levels > kMaxGridLevels)
        return report_error(kUsage, "usage", "--levels must be in [1, " + std::to_string(kMaxGridLevels) + "]");
    Rng rng(a.seed);
    const auto forms = build_quadratic_forms(random_statistics(dims, rng));
    const auto t0 = std::chrono::steady_clock::now();
    const GridSearchResult grid = grid_search(forms, a.levels);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    PassiveOptions opt;
    opt.num_randomizations = a.randomizations;
    const PassiveDesign design = design_passive(forms, opt, rng);

    nlohmann::ordered_json j;
    j["seed"] = a.seed;
    j["reflecting_elements"] = dims.reflecting();
    j["levels"] = a.levels;
    j["evaluations"] = grid.evaluations;
    j["grid_seconds"] = seconds;
    j["grid_objective"] = grid.objective;
    j["grid_phases_rad"] = arma::conv_to<std::vector<double>>::from(grid.best.phases());
    j["relaxation_objective"] = design.relaxation.objective;
    j["relaxation_dual_bound"] = design.relaxation.dual_bound;
    j["extraction_objective"] = design.extraction.objective;
    j["extraction_over_grid"] = design.extraction.objective / grid.objective;
    j["relaxation_bounds_grid"] = design.relaxation.objective >= grid.objective * (1.0 - 1e-9);
    const std::string text = j.dump(2);
    std::cout << text << '\n';
    if (!a.output_dir.empty()) {
        std::filesystem::create_directories(a.output_dir);
        std::ofstream(std::filesystem::path(a.output_dir) / "oracle.json") << text << '\n';
    }
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-timescale beamforming simulator for surface-assisted cell-free MIMO"};
    app.require_subcommand(1);

    CommonArgs run_args, sweep_args, validate_args;
    auto* run = app.add_subcommand("run", "run one Monte Carlo campaign");
    run_args.attach(*run, true);

    auto* sweep = app.add_subcommand("sweep", "run paired campaigns along one axis");
    sweep_args.attach(*sweep, true);
    std::string axis, values, fixed_product;
    sweep->add_option("--axis", axis, "N, M, R, d or P_bar (default: the config's sweep section)");
    sweep->add_option("--values", values, "comma list of axis values");
    sweep->add_option("--fixed-product", fixed_product, "comma list of RxN pairs, e.g. 2x64,4x32,8x16");

    auto* validate = app.add_subcommand("validate", "run the property suites and report pass/fail");
    validate_args.attach(*validate, false);
    ValidateOptions vopt;
    validate->add_option("--draws", vopt.monte_carlo_draws, "Monte Carlo draws for the closed-form check");
    validate->add_flag("--corrupt-quadratic", vopt.corrupt_quadratic, "negative control")->group("");

    auto* oracle = app.add_subcommand("oracle", "exhaustive phase-grid search on a tiny random instance");
    OracleArgs oargs;
    oracle->add_option("--aps", oargs.aps, "L")->capture_default_str();
    oracle->add_option("--irs", oargs.irs, "R")->capture_default_str();
    oracle->add_option("--elements", oargs.elements, "N")->capture_default_str();
    oracle->add_option("--antennas", oargs.antennas, "M")->capture_default_str();
    oracle->add_option("--ues", oargs.ues, "K")->capture_default_str();
    oracle->add_option("--levels", oargs.levels, "phase levels per element")->capture_default_str();
    oracle->add_option("--randomizations", oargs.randomizations, "Gaussian randomization candidates")
        ->capture_default_str();
    oracle->add_option("--seed", oargs.seed, "instance seed")->capture_default_str();
    oracle->add_option("-o,--output-dir", oargs.output_dir, "also write oracle.json here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return report_error(kUsage, "usage", e.what());
    }

    try {
        if (*run) return cmd_run(run_args);
        if (*sweep) return cmd_sweep(sweep_args, axis, values, fixed_product);
        if (*validate) return cmd_validate(validate_args, vopt);
        if (*oracle) return cmd_oracle(oargs);
    } catch (const CLI::ParseError& e) {
        return report_error(kUsage, "usage", e.what());
    } catch (const ConfigError& e) {
        return report_error(kConfig, "config", e.what());
    } catch (const NumericalError& e) {
        return report_error(kNumerical, "numerical", e.what());
    } catch (const std::invalid_argument& e) {
        return report_error(kConfig, "config", e.what());
    } catch (const std::exception& e) {
        return report_error(kNumerical, "runtime", e.what());
    }
    return kUsage;
}
