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

#include "irscf/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "irscf/errors.hpp"

namespace irscf::linalg {

bool is_hermitian(const arma::cx_mat& a, double rel_tol) {
    if (!a.is_square()) return false;
    const double scale = std::max(1.0, arma::abs(a).max());
    return arma::abs(a - a.t()).max() <= rel_tol * scale;
}

arma::cx_mat hermitian_part(const arma::cx_mat& a) {
    return 0.5 * (a + a.t());
}

HermitianEig hermitian_eig(const arma::cx_mat& a) {
    if (!is_hermitian(a)) throw std::invalid_argument("hermitian_eig: input is not Hermitian");
    HermitianEig out;
    if (!arma::eig_sym(out.values, out.vectors, hermitian_part(a)))
        throw NumericalError("hermitian_eig: LAPACK eigendecomposition failed");
    return out;
}

arma::cx_mat solve_gram(const arma::cx_mat& h) {
    if (h.n_cols == 0 || h.n_rows < h.n_cols) {
        std::ostringstream msg;
        msg << "solve_gram: " << h.n_rows << "x" << h.n_cols << " channel cannot have full column rank";
        throw RankDeficientError(msg.str(), arma::datum::inf);
    }
    const arma::cx_mat gram = hermitian_part(h.t() * h);
    const double rc = arma::rcond(gram);
    const double cond = rc > 0.0 ? 1.0 / rc : arma::datum::inf;
    if (!(cond <= kMaxGramCondition)) {
        std::ostringstream msg;
        msg << "solve_gram: Gram matrix condition number " << cond << " exceeds " << kMaxGramCondition;
        throw RankDeficientError(msg.str(), cond);
    }
    arma::cx_mat r;
    if (!arma::chol(r, gram)) throw RankDeficientError("solve_gram: Cholesky factorization failed", cond);
    // gram = R^H R  =>  gram^{-1} = R^{-1} R^{-H}
    const arma::cx_mat r_inv = arma::solve(arma::trimatu(r), arma::eye<arma::cx_mat>(r.n_rows, r.n_cols));
    return hermitian_part(r_inv * r_inv.t());
}

GaussianSampler::GaussianSampler(const arma::cx_mat& cov, double psd_tol) {
    const HermitianEig eig = hermitian_eig(cov);
    const double top = eig.values.is_empty() ? 0.0 : eig.values.max();
    if (!eig.values.is_empty() && eig.values.min() < -psd_tol * std::max(1.0, top))
        throw std::invalid_argument("GaussianSampler: covariance is not positive semidefinite");
    // Eigenvalues at round-off level are exact zeros of the covariance; keeping
    // them would leak sqrt(eps) noise outside its support.
    const double floor = static_cast<double>(cov.n_rows) * std::numeric_limits<double>::epsilon() * top;
    arma::vec clipped = eig.values;
    clipped.elem(arma::find(clipped <= floor)).zeros();
    const arma::vec roots = arma::sqrt(clipped);
    factor_ = eig.vectors * arma::diagmat(arma::conv_to<arma::cx_vec>::from(roots));
}

arma::cx_vec GaussianSampler::draw(Rng& rng) const {
    ComplexNormal cn;
    return factor_ * cn.vec(rng, factor_.n_cols);
}

arma::cx_mat GaussianSampler::draw(Rng& rng, arma::uword count) const {
    ComplexNormal cn;
    arma::cx_mat z(factor_.n_cols, count);
    // Column-major fill keeps sample i independent of the total count.
    for (arma::uword j = 0; j < count; ++j)
        for (arma::uword i = 0; i < z.n_rows; ++i) z(i, j) = cn(rng);
    return factor_ * z;
}

arma::cx_vec sample_gaussian(const arma::cx_mat& cov, Rng& rng) {
    return GaussianSampler(cov).draw(rng);
}

arma::vec kron_identity_diag(const arma::vec& x, arma::uword n) {
    return arma::kron(x, arma::ones<arma::vec>(n));
}

} // namespace irscf::linalg
