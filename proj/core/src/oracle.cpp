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

#include "irscf/oracle.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace irscf {

GridSearchResult grid_search(const std::vector<QuadraticForm>& forms, int levels) {
    if (forms.empty()) throw std::invalid_argument("grid_search: no quadratic forms");
    const int n = static_cast<int>(forms.front().size());
    if (n < 1 || n > kMaxGridElements)
        throw std::invalid_argument("grid_search: instance too large (at most " + std::to_string(kMaxGridElements) +
                                    " reflecting elements)");
    if (levels < 1 || levels > kMaxGridLevels)
        throw std::invalid_argument("grid_search: levels must be in [1, " + std::to_string(kMaxGridLevels) + "]");
    for (const auto& f : forms)
        if (static_cast<int>(f.size()) != n) throw std::invalid_argument("grid_search: mismatched forms");

    std::vector<std::complex<double>> alphabet(levels);
    for (int q = 0; q < levels; ++q) alphabet[q] = std::polar(1.0, 2.0 * std::numbers::pi * q / levels);

    std::array<int, kMaxGridElements> digits{};
    arma::cx_vec theta(n);
    GridSearchResult out;
    out.levels = levels;
    out.objective = -std::numeric_limits<double>::infinity();
    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i) total *= static_cast<std::uint64_t>(levels);

    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::uint64_t rest = idx;
        for (int i = 0; i < n; ++i) {
            digits[i] = static_cast<int>(rest % levels);
            rest /= levels;
            theta[i] = alphabet[digits[i]];
        }
        double value = std::numeric_limits<double>::infinity();
        for (const auto& f : forms) {
            double v = f.c;
            for (int i = 0; i < n; ++i) {
                std::complex<double> row = 0.0;
                for (int j = 0; j < n; ++j) row += f.a(i, j) * theta[j];
                v += std::real(std::conj(theta[i]) * row) + 2.0 * std::real(std::conj(theta[i]) * f.b[i]);
            }
            value = std::min(value, v);
            if (value <= out.objective) break;
        }
        ++out.evaluations;
        if (value > out.objective) {
            out.objective = value;
            out.best.theta = theta;
        }
    }
    return out;
}

} // namespace irscf
