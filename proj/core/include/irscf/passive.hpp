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

#ifndef IRSCF_PASSIVE_HPP
#define IRSCF_PASSIVE_HPP

#include <armadillo>
#include <filesystem>
#include <vector>

#include "irscf/rng.hpp"
#include "irscf/scsi.hpp"
#include "irscf/sdp.hpp"

namespace irscf {

// Stacked unit-modulus reflection vector of all surfaces.
struct PassiveBeamformer {
    arma::cx_vec theta;

    static PassiveBeamformer from_phases(const arma::vec& phases);
    arma::vec phases() const;  // in [-pi, pi]
    // Throws std::invalid_argument if any |theta_i| deviates from 1 by more than tol.
    void validate(double tol = 1e-9) const;
};

// Psi_k = [[A_k, b_k], [b_k^H, 0]], c = c_k. Throws std::invalid_argument on
// empty input or mismatched dimensions.
MaxMinSdpProblem build_p2(const std::vector<QuadraticForm>& forms);

// Same maximiser and optimum as build_p2: the diagonal-by-construction part of
// A_k is constant under diag(X) = 1, so it moves into c_k. The remaining Psi_k
// have low rank, which the solver exploits.
MaxMinSdpProblem build_p2_folded(const std::vector<QuadraticForm>& forms);

// theta_i = exp(j angle(x_i / x_last)) over the first x.n_elem - 1 entries.
// When x_last is numerically zero the phases are aligned against the
// largest-magnitude entry instead.
PassiveBeamformer recover_theta(const arma::cx_vec& lifted);

inline constexpr double kRankOneRatio = 1e-6;

struct Extraction {
    PassiveBeamformer beamformer;
    bool rank_one = false;
    double eigen_ratio = 0.0;    // lambda_2 / lambda_1
    double objective = 0.0;      // min_k gain at the returned theta
    int selected_candidate = -1; // -1 for the principal eigenvector
};

// Principal eigenvector when Theta_bar is numerically rank one; otherwise the
// best of num_randomizations candidates drawn from CN(0, Theta_bar), scored by
// min_k gain, ties to the lowest index.
Extraction extract_theta(const arma::cx_mat& theta_bar, const std::vector<QuadraticForm>& forms,
                         int num_randomizations, Rng& rng);

PassiveBeamformer random_theta(int length, Rng& rng);

struct PassiveOptions {
    int num_randomizations = 200;
    SdpTolerances tolerances;
};

struct PassiveDesign {
    Extraction extraction;
    SdpSolution relaxation;
};

// Build P2, solve the relaxation, extract a feasible theta.
PassiveDesign design_passive(const std::vector<QuadraticForm>& forms, const PassiveOptions& options, Rng& rng);

// JSON file {"phases_rad": [...]}.
void save_theta(const PassiveBeamformer& beamformer, const std::filesystem::path& path);
PassiveBeamformer load_theta(const std::filesystem::path& path);

} // namespace irscf

#endif
