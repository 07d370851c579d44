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

#ifndef IRSCF_RNG_HPP
#define IRSCF_RNG_HPP

#include <armadillo>
#include <complex>
#include <cstdint>
#include <random>

namespace irscf {

using Rng = std::mt19937_64;

// Counter-based seed split: the child seed depends only on (parent, stream),
// never on how many values were drawn elsewhere.
std::uint64_t derive_seed(std::uint64_t parent, std::uint64_t stream);

// Circularly-symmetric complex Gaussian with unit variance, CN(0, 1).
class ComplexNormal {
public:
    std::complex<double> operator()(Rng& rng) {
        return {normal_(rng) * kInvSqrt2, normal_(rng) * kInvSqrt2};
    }

    arma::cx_vec vec(Rng& rng, arma::uword n);
    arma::cx_mat mat(Rng& rng, arma::uword rows, arma::uword cols);

private:
    static constexpr double kInvSqrt2 = 0.70710678118654752440;
    std::normal_distribution<double> normal_{0.0, 1.0};
};

} // namespace irscf

#endif
