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

#ifndef IRSCF_LINALG_HPP
#define IRSCF_LINALG_HPP

#include <armadillo>

#include "irscf/rng.hpp"

// Dense complex linear algebra used by the beamforming modules. Backed by
// Armadillo/LAPACK; every routine here has its own tests so the backend can
// be swapped.
namespace irscf::linalg {

struct HermitianEig {
    arma::vec values;      // ascending
    arma::cx_mat vectors;  // orthonormal columns, matching order
};

// Relative Hermitian-ness tolerance accepted by the routines below.
inline constexpr double kHermitianTol = 1e-10;

bool is_hermitian(const arma::cx_mat& a, double rel_tol = kHermitianTol);

// Returns (A + A^H) / 2.
arma::cx_mat hermitian_part(const arma::cx_mat& a);

// Full eigendecomposition. Throws std::invalid_argument on non-Hermitian input.
HermitianEig hermitian_eig(const arma::cx_mat& a);

// Condition number above which a Gram matrix is treated as singular.
inline constexpr double kMaxGramCondition = 1e12;

// (H^H H)^{-1} via a Cholesky factorization of the Gram matrix. Throws
// RankDeficientError carrying the condition number when H is (numerically)
// rank deficient.
arma::cx_mat solve_gram(const arma::cx_mat& h);

// Zero-mean circularly-symmetric Gaussian sampler with a fixed covariance.
// The square-root factor is computed once from an eigendecomposition.
class GaussianSampler {
public:
    // Throws std::invalid_argument when the covariance has an eigenvalue below
    // -psd_tol * max(1, lambda_max).
    explicit GaussianSampler(const arma::cx_mat& cov, double psd_tol = 1e-8);

    arma::cx_vec draw(Rng& rng) const;
    // One sample per column.
    arma::cx_mat draw(Rng& rng, arma::uword count) const;

    const arma::cx_mat& factor() const { return factor_; }

private:
    arma::cx_mat factor_;  // cov = factor * factor^H
};

arma::cx_vec sample_gaussian(const arma::cx_mat& cov, Rng& rng);

// Block-diagonal inflation diag(x_1 I_n, ..., x_m I_n), returned as its diagonal.
arma::vec kron_identity_diag(const arma::vec& x, arma::uword n);

} // namespace irscf::linalg

#endif
