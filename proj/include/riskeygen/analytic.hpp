// SPDX-License-Identifier: Apache-2.0
//
// riskeygen - RIS-induced channel randomness and key-rate simulator
// Copyright (C) 2026 riskeygen contributors
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

#ifndef RISKEYGEN_ANALYTIC_HPP
#define RISKEYGEN_ANALYTIC_HPP

#include <complex>
#include <functional>
#include <variant>

#include "riskeygen/geometry.hpp"
#include "riskeygen/weights.hpp"

namespace riskeygen
{
    // Magnitude laws. sigma2 is the per-quadrature Gaussian variance, nu the
    // deterministic direct-path magnitude.
    struct RayleighLaw
    {
        double sigma2 = 1.0;
    };
    struct RicianLaw
    {
        double nu = 0.0;
        double sigma2 = 1.0;
    };
    struct EmpiricalLaw
    {
    };
    using MagnitudeLaw = std::variant<RayleighLaw, RicianLaw, EmpiricalLaw>;

    struct UniformPhaseLaw
    {
    };
    using PhaseLaw = std::variant<UniformPhaseLaw, EmpiricalLaw>;

    // Closed-form quadrature moments plus the magnitude/phase laws they imply.
    struct AnalyticPrediction
    {
        double mean_re = 0.0;
        double mean_im = 0.0;
        double var_re = 0.0;
        double var_im = 0.0;
        double covariance = 0.0;
        double var_total = 0.0;
        MagnitudeLaw magnitude_law;
        PhaseLaw phase_law;
    };

    struct SkrResult
    {
        double rate_bits_per_sample = 0.0;
        PhaseScheme scheme;
        double noise_var_per_quadrature = 0.0;
        bool is_upper_bound = false; // set when correlated quadratures make the rate a bound
    };

    struct IndependenceCheck
    {
        double gamma = 0.0;
        bool satisfied = false;
        long long nearest_b = 0;
    };

    AnalyticPrediction predict_distribution(const PhaseScheme &scheme, const RisGeometry &geom,
                                            const AnglePair &angles,
                                            std::complex<double> direct_gain = {0.0, 0.0});

    // Quadrature-independence condition for 1-bit weights. Requires a square
    // geometry with equal spacings; throws NonSquareGeometryError otherwise.
    IndependenceCheck independence_condition(const RisGeometry &geom, const AnglePair &angles);

    // Closed-form secret key rate in bits per channel sample. For 1-bit
    // weights with correlated quadratures the result is an upper bound; the
    // default uses the self-consistent per-quadrature half-log form, while
    // eq29_verbatim evaluates the full-log variant (exactly twice as large).
    SkrResult skr_closed_form(const PhaseScheme &scheme, const RisGeometry &geom,
                              const AnglePair &angles, double noise_var_per_quadrature,
                              bool eq29_verbatim = false);

    struct ReferenceCdfs
    {
        std::function<double(double)> magnitude_cdf;
        std::function<double(double)> phase_cdf;
        std::function<double(double)> quadrature_re_cdf;
        std::function<double(double)> quadrature_im_cdf;
    };

    // Exact reference cdfs for a prediction with analytic laws; throws
    // NoClosedFormError when the magnitude or phase law is empirical.
    ReferenceCdfs reference_cdfs(const AnalyticPrediction &prediction);

    double gaussian_cdf(double x, double mean, double var);
    double rayleigh_cdf(double x, double sigma2);

    // Rician cdf by adaptive quadrature of the density, absolute error <= 1e-9.
    double rician_cdf(double x, double nu, double sigma2);

    // log(I0(x)) without overflow for large arguments.
    double log_bessel_i0(double x);

} // namespace riskeygen

#endif
