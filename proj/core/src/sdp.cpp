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

#include "irscf/sdp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace irscf {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Objective matrix in factored form Psi = U diag(s) U^H, keeping only the
// eigenpairs that are not numerically zero (at least one).
struct Term {
    arma::cx_mat u;
    arma::vec s;
    arma::cx_mat us;  // U diag(s)
};

arma::cx_mat herm(const arma::cx_mat& a) { return 0.5 * (a + a.t()); }

Term make_term(const arma::cx_mat& psi) {
    arma::vec ev;
    arma::cx_mat vecs;
    if (!arma::eig_sym(ev, vecs, psi)) throw std::runtime_error("solve_sdp: eigendecomposition of Psi failed");
    const double top = arma::abs(ev).max();
    arma::uvec keep = arma::find(arma::abs(ev) > 1e-14 * top);
    if (keep.is_empty()) keep = arma::uvec{arma::abs(ev).index_max()};
    Term t;
    t.u = vecs.cols(keep);
    t.s = ev(keep);
    t.us = t.u * arma::diagmat(arma::conv_to<arma::cx_vec>::from(t.s));
    return t;
}

// sum_k w_k Psi_k
arma::cx_mat weighted_sum(const std::vector<Term>& terms, const arma::vec& w, arma::uword n) {
    arma::cx_mat out(n, n, arma::fill::zeros);
    for (std::size_t k = 0; k < terms.size(); ++k)
        if (w[k] != 0.0) out += (w[k] * terms[k].us) * terms[k].u.t();
    return out;
}

// Re tr(Psi A) given AU = A * U.
double trace_with(const Term& t, const arma::cx_mat& au) {
    double acc = 0.0;
    for (arma::uword r = 0; r < t.u.n_cols; ++r) acc += t.s[r] * std::real(arma::cdot(t.u.col(r), au.col(r)));
    return acc;
}

double trace_product(const Term& t, const arma::cx_mat& a) { return trace_with(t, a * t.u); }

// Re tr(A B) for Hermitian A, B.
double inner(const arma::cx_mat& a, const arma::cx_mat& b) { return std::real(arma::accu(a % arma::conj(b))); }

arma::vec lp_upper(const arma::vec& v, const arma::vec& dv) {
    double best = kInf;
    for (arma::uword i = 0; i < v.n_elem; ++i)
        if (dv[i] < 0.0) best = std::min(best, -v[i] / dv[i]);
    return arma::vec{best};
}

// Smallest eigenvalue of L^{-1} D L^{-H} given L^{-1}; a lower estimate for large n.
double scaled_min_eig(const arma::cx_mat& linv, const arma::cx_mat& dir) {
    const arma::uword n = dir.n_rows;
    if (n <= 96) {
        arma::vec ev;
        if (!arma::eig_sym(ev, herm(linv * dir * linv.t()))) return -kInf;
        return ev.min();
    }

    // Lanczos with full reorthogonalisation; the Ritz residual turns the
    // smallest Ritz value into a lower estimate.
    const arma::cx_mat linv_h = linv.t();
    auto op = [&](const arma::cx_vec& x) { return arma::cx_vec(linv * (dir * (linv_h * x))); };
    const arma::uword steps = std::min<arma::uword>(n, 30);
    arma::cx_mat q(n, steps + 1, arma::fill::zeros);
    arma::vec alpha(steps, arma::fill::zeros), beta(steps, arma::fill::zeros);
    arma::cx_vec v(n);
    for (arma::uword i = 0; i < n; ++i) v[i] = {1.0 + 0.5 * std::sin(1.7 * i), 0.3 * std::cos(0.9 * i)};
    q.col(0) = v / arma::norm(v);
    arma::uword m = 0;
    for (; m < steps; ++m) {
        arma::cx_vec w = op(q.col(m));
        alpha[m] = std::real(arma::cdot(q.col(m), w));
        for (int pass = 0; pass < 2; ++pass) w -= q.cols(0, m) * (q.cols(0, m).t() * w);
        beta[m] = arma::norm(w);
        if (beta[m] < 1e-12 * (1.0 + std::abs(alpha[m]))) {
            ++m;
            break;
        }
        q.col(m + 1) = w / beta[m];
    }
    arma::mat tri(m, m, arma::fill::zeros);
    for (arma::uword i = 0; i < m; ++i) {
        tri(i, i) = alpha[i];
        if (i + 1 < m) tri(i, i + 1) = tri(i + 1, i) = beta[i];
    }
    arma::vec ritz;
    arma::mat y;
    if (!arma::eig_sym(ritz, y, tri)) return -kInf;
    const double residual = std::abs(beta[m - 1] * y(m - 1, 0));
    return ritz[0] - residual;
}

// Step keeping base + alpha*dir positive definite: alpha = min(cap, gamma*alpha_max),
// confirmed by a Cholesky factorisation and shrunk until it succeeds.
double psd_step(const arma::cx_mat& base, const arma::cx_mat& linv, const arma::cx_mat& dir, double cap,
                double gamma, bool verify) {
    const double lam = scaled_min_eig(linv, dir);
    double alpha = cap;
    if (lam < 0.0) alpha = std::min(cap, gamma * (-1.0 / lam));
    if (!verify) return alpha;
    arma::cx_mat r;
    for (int tries = 0; tries < 60; ++tries) {
        if (arma::chol(r, herm(base + alpha * dir), "lower")) return alpha;
        alpha *= 0.8;
    }
    return 0.0;
}

struct Direction {
    arma::cx_mat dx, dz;
    arma::vec dy, dmu, ds;
    double dt = 0.0;
};

} // namespace

void MaxMinSdpProblem::validate() const {
    if (psi.empty()) throw std::invalid_argument("MaxMinSdpProblem: at least one objective matrix required");
    if (psi.size() != c.size()) throw std::invalid_argument("MaxMinSdpProblem: psi and c sizes differ");
    const arma::uword n = psi.front().n_rows;
    if (n == 0) throw std::invalid_argument("MaxMinSdpProblem: empty matrices");
    for (std::size_t k = 0; k < psi.size(); ++k) {
        const auto& p = psi[k];
        if (p.n_rows != n || p.n_cols != n) {
            std::ostringstream msg;
            msg << "MaxMinSdpProblem: Psi_" << k << " is " << p.n_rows << "x" << p.n_cols << ", expected " << n
                << "x" << n;
            throw std::invalid_argument(msg.str());
        }
        const double scale = std::max(1e-300, arma::abs(p).max());
        if (arma::abs(p - p.t()).max() > 1e-10 * scale)
            throw std::invalid_argument("MaxMinSdpProblem: objective matrix is not Hermitian");
        if (!p.is_finite() || !std::isfinite(c[k])) throw std::invalid_argument("MaxMinSdpProblem: non-finite data");
    }
}

double MaxMinSdpProblem::objective(const arma::cx_mat& x) const {
    double best = kInf;
    for (std::size_t k = 0; k < psi.size(); ++k)
        best = std::min(best, std::real(arma::accu(psi[k] % x.st())) + c[k]);
    return best;
}

std::string_view to_string(SdpStatus status) {
    switch (status) {
    case SdpStatus::optimal: return "optimal";
    case SdpStatus::max_iterations: return "max-iterations";
    case SdpStatus::infeasible_numerics: return "infeasible-numerics";
    }
    return "unknown";
}

SdpSolution solve_sdp(const MaxMinSdpProblem& problem, const SdpTolerances& tol) {
    problem.validate();
    const arma::uword n = problem.dimension();
    const arma::uword nk = problem.psi.size();

    // Shift so the smallest offset is zero and scale so max |Psi| = 1; both
    // leave the maximiser unchanged.
    const double c0 = *std::min_element(problem.c.begin(), problem.c.end());
    double scale = 0.0;
    for (const auto& p : problem.psi) scale = std::max(scale, arma::abs(p).max());
    if (!(scale > 0.0)) {
        for (double ck : problem.c) scale = std::max(scale, std::abs(ck - c0));
        if (!(scale > 0.0)) scale = 1.0;
    }

    std::vector<Term> terms;
    arma::vec chat(nk);
    double gersh = 0.0;
    for (arma::uword k = 0; k < nk; ++k) {
        const arma::cx_mat p = herm(problem.psi[k]) / scale;
        gersh = std::max(gersh, arma::sum(arma::abs(p), 1).max());
        terms.push_back(make_term(p));
        chat[k] = (problem.c[k] - c0) / scale;
    }

    // Strictly feasible start: X = I, Z = (rho + 1) I - sum mu Psi.
    arma::cx_mat x = arma::eye<arma::cx_mat>(n, n);
    arma::vec tr_x(nk);
    for (arma::uword k = 0; k < nk; ++k) tr_x[k] = trace_product(terms[k], x);
    const double rho = gersh + 1.0;
    double t = arma::min(tr_x + chat) - static_cast<double>(nk) * rho;
    arma::vec s = tr_x + chat - t;
    arma::vec mu = (1.0 / s) / arma::accu(1.0 / s);
    arma::vec y(n, arma::fill::value(rho));

    SdpSolution sol;
    sol.status = SdpStatus::max_iterations;
    double rel_gap = kInf, pinf = kInf, dinf = kInf;
    const double chat_scale = 1.0 + arma::abs(chat).max();

    int it = 0;
    for (; it <= tol.max_iterations; ++it) {
        const arma::cx_mat z = herm(arma::diagmat(arma::conv_to<arma::cx_vec>::from(y)) - weighted_sum(terms, mu, n));
        arma::cx_mat lz, lx;
        if (!arma::chol(lz, z, "lower") || !arma::chol(lx, herm(x), "lower")) {
            sol.status = SdpStatus::infeasible_numerics;
            break;
        }
        const arma::cx_mat lz_inv = arma::inv(arma::trimatl(lz));
        const arma::cx_mat lx_inv = arma::inv(arma::trimatl(lx));
        for (arma::uword k = 0; k < nk; ++k) tr_x[k] = trace_product(terms[k], x);
        const arma::vec r1 = 1.0 - arma::real(x.diag());
        const arma::vec r2 = -chat - tr_x + t + s;
        const double r3 = 1.0 - arma::accu(mu);

        const double gap = inner(x, z) + arma::dot(mu, s);
        const double pobj = t;
        const double dobj = arma::accu(y) + arma::dot(chat, mu);
        rel_gap = gap / (1.0 + std::abs(pobj) + std::abs(dobj));
        pinf = std::max(arma::abs(r1).max(), arma::abs(r2).max() / (chat_scale + std::abs(t)));
        dinf = std::abs(r3);
        if (rel_gap < tol.relative_gap && pinf < tol.feasibility && dinf < tol.feasibility) {
            sol.status = SdpStatus::optimal;
            break;
        }
        if (it == tol.max_iterations) break;
        const double nu = gap / static_cast<double>(n + nk);

        const arma::cx_mat w = herm(lz_inv.t() * lz_inv);
        // P_k = X Psi_k W = (X U_k S_k)(W U_k)^H is kept factored.
        std::vector<arma::cx_mat> xus(nk), wu(nk);
        arma::mat u(n, nk);
        for (arma::uword k = 0; k < nk; ++k) {
            xus[k] = x * terms[k].us;
            wu[k] = w * terms[k].u;
            u.col(k) = arma::real(arma::sum(xus[k] % arma::conj(wu[k]), 1));
        }
        // Q_mk = Re tr(Psi_m P_k) = Re sum((S_m U_m^H X U_k S_k) o conj(U_m^H W U_k))
        arma::mat q(nk, nk);
        for (arma::uword m = 0; m < nk; ++m)
            for (arma::uword k = 0; k < nk; ++k)
                q(m, k) = std::real(arma::accu((terms[m].us.t() * xus[k]) % arma::conj(terms[m].u.t() * wu[k])));
        q = 0.5 * (q + q.t());

        arma::mat schur(n + nk, n + nk);
        schur.submat(0, 0, n - 1, n - 1) = arma::real(x % arma::conj(w));
        schur.submat(0, n, n - 1, n + nk - 1) = -u;
        schur.submat(n, 0, n + nk - 1, n - 1) = -u.t();
        schur.submat(n, n, n + nk - 1, n + nk - 1) = q + arma::diagmat(s / mu);
        schur = 0.5 * (schur + schur.t());
        arma::mat rs;
        bool factored = arma::chol(rs, schur);
        for (int bump = 0; !factored && bump < 6; ++bump) {
            schur.diag() += std::pow(10.0, -14 + 2 * bump) * arma::abs(schur.diag()).max();
            factored = arma::chol(rs, schur);
        }
        if (!factored) {
            sol.status = SdpStatus::infeasible_numerics;
            break;
        }
        auto schur_solve = [&](const arma::vec& rhs) {
            return arma::vec(arma::solve(arma::trimatu(rs), arma::solve(arma::trimatl(rs.t()), rhs)));
        };
        arma::vec e_mu(n + nk, arma::fill::zeros);
        e_mu.tail(nk).ones();
        const arma::vec g = schur_solve(e_mu);

        auto direction = [&](const arma::cx_mat& rc_x, const arma::vec& rc_s) {
            arma::vec f(n + nk);
            f.head(n) = arma::real(rc_x.diag()) - r1;
            for (arma::uword m = 0; m < nk; ++m)
                f[n + m] = r2[m] - trace_product(terms[m], rc_x) + rc_s[m] / mu[m];
            const arma::vec z0 = schur_solve(f);
            Direction d;
            d.dt = (r3 - arma::accu(z0.tail(nk))) / arma::accu(g.tail(nk));
            const arma::vec zz = z0 + d.dt * g;
            d.dy = zz.head(n);
            d.dmu = zz.tail(nk);
            d.dz = herm(arma::diagmat(arma::conv_to<arma::cx_vec>::from(d.dy)) - weighted_sum(terms, d.dmu, n));
            arma::cx_mat gz = (x.each_row() % arma::conv_to<arma::cx_rowvec>::from(d.dy.t())) * w;
            for (arma::uword k = 0; k < nk; ++k) gz -= (d.dmu[k] * xus[k]) * wu[k].t();
            d.dx = rc_x - herm(gz);
            d.ds = (rc_s - s % d.dmu) / mu;
            return d;
        };
        auto steps = [&](const Direction& d, double gamma, bool verify) {
            const double lp_p = lp_upper(s, d.ds)[0];
            const double lp_d = lp_upper(mu, d.dmu)[0];
            const double cap_p = std::min(1.0, gamma * lp_p);
            const double cap_d = std::min(1.0, gamma * lp_d);
            return std::pair{psd_step(x, lx_inv, d.dx, cap_p, gamma, verify),
                             psd_step(z, lz_inv, d.dz, cap_d, gamma, verify)};
        };

        // Predictor.
        const Direction aff = direction(-x, -(mu % s));
        const auto [ap_aff, ad_aff] = steps(aff, 1.0, false);
        const double nu_aff = (inner(x + ap_aff * aff.dx, z + ad_aff * aff.dz) +
                               arma::dot(mu + ad_aff * aff.dmu, s + ap_aff * aff.ds)) /
                              static_cast<double>(n + nk);
        const double sigma = std::clamp(std::pow(std::max(nu_aff, 0.0) / nu, 3.0), 0.0, 1.0);

        // Corrector with the second-order term.
        const arma::cx_mat rc_x = sigma * nu * w - x - herm(aff.dx * (aff.dz * w));
        const arma::vec rc_s = sigma * nu - mu % s - aff.dmu % aff.ds;
        const Direction dir = direction(rc_x, rc_s);
        const double gamma = 0.9 + 0.09 * std::min(ap_aff, ad_aff);
        const auto [ap, ad] = steps(dir, gamma, true);
        if (ap < 1e-12 && ad < 1e-12) {
            sol.status = SdpStatus::infeasible_numerics;
            break;
        }
        x = herm(x + ap * dir.dx);
        s += ap * dir.ds;
        t += ap * dir.dt;
        y += ad * dir.dy;
        mu += ad * dir.dmu;
    }

    sol.iterations = it;
    sol.relative_gap = rel_gap;
    sol.primal_residual = pinf;
    sol.dual_residual = dinf;

    // Rescale to an exactly unit diagonal; congruence keeps X PSD.
    const arma::vec d = arma::sqrt(arma::clamp(arma::real(x.diag()), 1e-300, kInf));
    arma::cx_mat xn = x;
    xn.each_col() /= arma::conv_to<arma::cx_vec>::from(d);
    xn.each_row() /= arma::conv_to<arma::cx_rowvec>::from(d.t());
    xn = herm(xn);
    xn.diag().ones();
    sol.theta_bar = std::move(xn);
    sol.objective = problem.objective(sol.theta_bar);
    sol.dual_bound = scale * (arma::accu(y) + arma::dot(chat, mu)) + c0;
    return sol;
}

} // namespace irscf
