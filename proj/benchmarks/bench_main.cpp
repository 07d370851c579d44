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

#include <benchmark/benchmark.h>

#include <armadillo>

#include "irscf/active.hpp"
#include "irscf/channel.hpp"
#include "irscf/passive.hpp"
#include "irscf/rng.hpp"
#include "irscf/scenario.hpp"
#include "irscf/scsi.hpp"
#include "irscf/sdp.hpp"

namespace {

// Default hotspot deployment with N elements per surface, drop seed fixed so
// every benchmark run solves the same problem.
irscf::ChannelStatistics hotspot_statistics(int elements) {
    irscf::ScenarioConfig config;
    config.irs_elements = elements;
    return irscf::build_statistics(config, irscf::build_geometry(config, 11));
}

void BM_SolveRelaxation(benchmark::State& state) {
    const auto forms = irscf::build_quadratic_forms(hotspot_statistics(static_cast<int>(state.range(0))));
    const auto problem = irscf::build_p2_folded(forms);
    for (auto _ : state) {
        auto solution = irscf::solve_sdp(problem);
        benchmark::DoNotOptimize(solution.objective);
    }
    state.SetLabel("n=" + std::to_string(problem.dimension()));
}
BENCHMARK(BM_SolveRelaxation)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_QuadraticForms(benchmark::State& state) {
    const auto stats = hotspot_statistics(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(irscf::build_quadratic_forms(stats));
}
BENCHMARK(BM_QuadraticForms)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_DrawRealization(benchmark::State& state) {
    const auto stats = hotspot_statistics(static_cast<int>(state.range(0)));
    irscf::Rng rng(5);
    for (auto _ : state) benchmark::DoNotOptimize(irscf::draw_realization(stats, rng));
}
BENCHMARK(BM_DrawRealization)->Arg(16)->Arg(64)->Arg(128);

void BM_ZeroForcing(benchmark::State& state) {
    const auto stats = hotspot_statistics(64);
    irscf::Rng rng(6);
    const auto real = irscf::draw_realization(stats, rng);
    const arma::cx_vec theta = irscf::random_theta(stats.dims.reflecting(), rng).theta;
    const arma::cx_mat h = irscf::assemble_overall(real, theta);
    for (auto _ : state) benchmark::DoNotOptimize(irscf::zf_precoder(h, stats.dims.antennas).w);
}
BENCHMARK(BM_ZeroForcing);

void BM_PowerEstimate(benchmark::State& state) {
    const auto stats = hotspot_statistics(64);
    irscf::Rng theta_rng(7);
    const irscf::ThetaChoice theta = irscf::random_theta(stats.dims.reflecting(), theta_rng).theta;
    for (auto _ : state) {
        irscf::Rng rng(8);
        benchmark::DoNotOptimize(irscf::estimate_precoder_power(stats, theta, static_cast<int>(state.range(0)), rng));
    }
}
BENCHMARK(BM_PowerEstimate)->Arg(200)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
