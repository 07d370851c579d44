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

#ifndef IRSCF_SDP_HPP
#define IRSCF_SDP_HPP

#include <armadillo>
#include <string_view>
#include <vector>

namespace irscf {

// maximize_X  min_k tr(Psi_k X) + c_k   s.t.  X_ii = 1,  X >= 0  (X Hermitian n x n).
// Psi_k only has to be Hermitian; positive semidefiniteness is not required.
struct MaxMinSdpProblem {
    std::vector<arma::cx_mat> psi;
    std::vector<double> c;

    arma::uword dimension() const { return psi.empty() ? 0 : psi.front().n_rows; }
    // Throws std::invalid_argument on empty, non-square, non-Hermitian or
    // inconsistently sized data.
    void validate() const;
    double objective(const arma::cx_mat& x) const;
};

struct SdpTolerances {
    double relative_gap = 1e-6;
    double feasibility = 1e-7;
    int max_iterations = 500;
};

enum class SdpStatus { optimal, max_iterations, infeasible_numerics };
std::string_view to_string(SdpStatus status);

struct SdpSolution {
    arma::cx_mat theta_bar;   // unit diagonal, PSD
    double objective = 0.0;   // min_k tr(Psi_k theta_bar) + c_k
    double dual_bound = 0.0;  // certified upper bound on the optimum
    SdpStatus status = SdpStatus::infeasible_numerics;
    int iterations = 0;
    double primal_residual = 0.0;
    double dual_residual = 0.0;
    double relative_gap = 0.0;
};

// Primal-dual interior-point method (HKM direction, Mehrotra predictor-
// corrector) on the epigraph form with slack t:
//   max t  s.t.  tr(Psi_k X) + c_k - s_k = t,  s >= 0,  diag(X) = 1,  X >= 0.
// Low-rank Psi_k are detected and exploited. Reentrant; no shared state.
SdpSolution solve_sdp(const MaxMinSdpProblem& problem, const SdpTolerances& tolerances = {});

} // namespace irscf

#endif
