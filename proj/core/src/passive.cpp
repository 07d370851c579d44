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

#include "irscf/passive.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

#include <json.hpp>

#include "irscf/errors.hpp"
#include "irscf/linalg.hpp"

namespace irscf {

namespace {

void check_forms(const std::vector<QuadraticForm>& forms) {
    if (forms.empty()) throw std::invalid_argument("build_p2: at least one quadratic form required");
    const arma::uword n = forms.front().size();
    for (const auto& f : forms) {
        if (f.size() != n || f.a.n_rows != n || f.a.n_cols != n)
            throw std::invalid_argument("build_p2: quadratic forms have mismatched dimensions");
    }
}

arma::cx_mat lift(const arma::cx_mat& a, const arma::cx_vec& b) {
    const arma::uword n = b.n_elem;
    arma::cx_mat psi(n + 1, n + 1, arma::fill::zeros);
    psi.submat(0, 0, n - 1, n - 1) = a;
    psi.submat(0, n, n - 1, n) = b;
    psi.submat(n, 0, n, n - 1) = b.t();
    return psi;
}

} // namespace

PassiveBeamformer PassiveBeamformer::from_phases(const arma::vec& phases) {
    PassiveBeamformer out;
    out.theta.set_size(phases.n_elem);
    for (arma::uword i = 0; i < phases.n_elem; ++i) out.theta[i] = std::polar(1.0, phases[i]);
    return out;
}

arma::vec PassiveBeamformer::phases() const { return arma::arg(theta); }

void PassiveBeamformer::validate(double tol) const {
    for (arma::uword i = 0; i < theta.n_elem; ++i)
        if (!(std::abs(std::abs(theta[i]) - 1.0) <= tol))
            throw std::invalid_argument("PassiveBeamformer: entry is not unit-modulus");
}

MaxMinSdpProblem build_p2(const std::vector<QuadraticForm>& forms) {
    check_forms(forms);
    MaxMinSdpProblem p;
    for (const auto& f : forms) {
        p.psi.push_back(lift(f.a, f.b));
        p.c.push_back(f.c);
    }
    return p;
}

MaxMinSdpProblem build_p2_folded(const std::vector<QuadraticForm>& forms) {
    check_forms(forms);
    MaxMinSdpProblem p;
    for (const auto& f : forms) {
        arma::cx_mat a = f.a;
        double shift = 0.0;
        if (f.a_diagonal.n_elem == f.size()) {
            a.diag() -= arma::conv_to<arma::cx_vec>::from(f.a_diagonal);
            shift = arma::accu(f.a_diagonal);
        }
        p.psi.push_back(lift(a, f.b));
        p.c.push_back(f.c + shift);
    }
    return p;
}

PassiveBeamformer recover_theta(const arma::cx_vec& lifted) {
    if (lifted.n_elem < 2) throw std::invalid_argument("recover_theta: lifted vector needs at least two entries");
    const arma::uword n = lifted.n_elem - 1;
    const double peak = arma::abs(lifted).max();
    std::complex<double> ref = lifted[n];
    if (!(std::abs(ref) > 1e-12 * peak)) ref = lifted[arma::abs(lifted).index_max()];
    PassiveBeamformer out;
    out.theta.set_size(n);
    const double ref_angle = std::arg(ref);
    for (arma::uword i = 0; i < n; ++i) out.theta[i] = std::polar(1.0, std::arg(lifted[i]) - ref_angle);
    return out;
}

Extraction extract_theta(const arma::cx_mat& theta_bar, const std::vector<QuadraticForm>& forms,
                         int num_randomizations, Rng& rng) {
    check_forms(forms);
    if (theta_bar.n_rows != forms.front().size() + 1)
        throw std::invalid_argument("extract_theta: relaxation dimension does not match the forms");
    if (num_randomizations < 1) throw std::invalid_argument("extract_theta: num_randomizations must be >= 1");

    const linalg::HermitianEig eig = linalg::hermitian_eig(linalg::hermitian_part(theta_bar));
    const arma::uword n = eig.values.n_elem;
    const double top = eig.values[n - 1];
    if (!(top > 0.0)) throw NumericalError("extract_theta: relaxation has no positive eigenvalue");

    Extraction out;
    out.eigen_ratio = std::max(0.0, eig.values[n - 2]) / top;
    if (out.eigen_ratio < kRankOneRatio) {
        out.rank_one = true;
        out.beamformer = recover_theta(std::sqrt(top) * eig.vectors.col(n - 1));
        out.objective = min_average_gain(forms, out.beamformer.theta);
        return out;
    }

    const linalg::GaussianSampler sampler(linalg::hermitian_part(theta_bar), 1e-6);
    out.objective = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < num_randomizations; ++i) {
        PassiveBeamformer candidate = recover_theta(sampler.draw(rng));
        const double score = min_average_gain(forms, candidate.theta);
        if (score > out.objective) {
            out.objective = score;
            out.selected_candidate = i;
            out.beamformer = std::move(candidate);
        }
    }
    return out;
}

PassiveBeamformer random_theta(int length, Rng& rng) {
    if (length < 0) throw std::invalid_argument("random_theta: negative length");
    std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
    arma::vec phases(length);
    for (auto& p : phases) p = phase(rng);
    return PassiveBeamformer::from_phases(phases);
}

PassiveDesign design_passive(const std::vector<QuadraticForm>& forms, const PassiveOptions& options, Rng& rng) {
    PassiveDesign design;
    design.relaxation = solve_sdp(build_p2_folded(forms), options.tolerances);
    if (design.relaxation.status == SdpStatus::infeasible_numerics)
        throw NumericalError("design_passive: SDP solver broke down after " +
                             std::to_string(design.relaxation.iterations) + " iterations");
    design.extraction = extract_theta(design.relaxation.theta_bar, forms, options.num_randomizations, rng);
    return design;
}

void save_theta(const PassiveBeamformer& beamformer, const std::filesystem::path& path) {
    nlohmann::json doc;
    doc["phases_rad"] = arma::conv_to<std::vector<double>>::from(beamformer.phases());
    std::ofstream out(path);
    if (!out) throw std::runtime_error("save_theta: cannot write " + path.string());
    out << doc.dump(2) << '\n';
}

PassiveBeamformer load_theta(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("load_theta: cannot read " + path.string());
    nlohmann::json doc;
    try {
        in >> doc;
        return PassiveBeamformer::from_phases(arma::vec(doc.at("phases_rad").get<std::vector<double>>()));
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("load_theta: " + path.string() + ": " + e.what());
    }
}

} // namespace irscf
