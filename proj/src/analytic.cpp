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

#include "riskeygen/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "riskeygen/errors.hpp"

namespace riskeygen
{
    namespace
    {
        constexpr double kTwoPi = 2.0 * std::numbers::pi;

        // sum of cos(2*alpha_m) and sin(2*alpha_m) over the full array
        void double_angle_sums(const RisGeometry &geom, const AnglePair &angles,
                               double &sum_cos, double &sum_sin)
        {
            XiComponents xi = xi_components(geom, angles);
            sum_cos = 0.0;
            sum_sin = 0.0;
            for (int my = 0; my < geom.m_y_count; ++my)
                for (int mx = 0; mx < geom.m_x_count; ++mx)
                {
                    double a2 = 2.0 * (mx * xi.xi_x + my * xi.xi_y);
                    sum_cos += std::cos(a2);
                    sum_sin += std::sin(a2);
                }
        }

        // Rate of a complex Gaussian channel of total variance sigma2 observed
        // twice with per-quadrature noise variance nv.
        double gaussian_rate(double sigma2, double nv)
        {
            return std::log2(1.0 + (sigma2 / 2.0) / (2.0 * nv + 2.0 * nv * nv / sigma2));
        }

        // Per-quadrature mutual information, half-log form.
        double quadrature_rate(double var_q, double nv)
        {
            if (var_q <= 0.0)
                return 0.0;
            return 0.5 * std::log2(1.0 + var_q / (2.0 * nv + nv * nv / var_q));
        }

        double cgps_total_variance(const Cgps &g, const RisGeometry &geom)
        {
            GroupPartition part = partition_groups(geom, g.group_size, g.allow_remainder);
            double q = static_cast<double>(part.group_size);
            double var = static_cast<double>(part.group_count) * q * q;
            var += static_cast<double>(part.remainder) * static_cast<double>(part.remainder);
            return var;
        }

        // Adaptive Simpson on [a, b] with absolute tolerance eps.
        double adaptive_simpson(const std::function<double(double)> &f, double a, double b,
                                double fa, double fm, double fb, double whole, double eps, int depth)
        {
            double m = 0.5 * (a + b);
            double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
            double flm = f(lm), frm = f(rm);
            double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
            double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
            double delta = left + right - whole;
            if (depth <= 0 || std::abs(delta) <= 15.0 * eps)
                return left + right + delta / 15.0;
            return adaptive_simpson(f, a, m, fa, flm, fm, left, eps / 2.0, depth - 1) +
                   adaptive_simpson(f, m, b, fm, frm, fb, right, eps / 2.0, depth - 1);
        }

        double integrate(const std::function<double(double)> &f, double a, double b, double eps)
        {
            if (b <= a)
                return 0.0;
            double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
            double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
            return adaptive_simpson(f, a, b, fa, fm, fb, whole, eps, 48);
        }
    } // namespace

    AnalyticPrediction predict_distribution(const PhaseScheme &scheme, const RisGeometry &geom,
                                            const AnglePair &angles, std::complex<double> direct_gain)
    {
        validate_scheme(scheme, geom);
        if (!std::isfinite(direct_gain.real()) || !std::isfinite(direct_gain.imag()))
            throw ModelError("direct gain must be finite");

        double m = static_cast<double>(geom.element_count());
        bool has_direct = std::abs(direct_gain) > 0.0;

        AnalyticPrediction p;
        p.mean_re = direct_gain.real();
        p.mean_im = direct_gain.imag();

        if (const Dips *d = std::get_if<Dips>(&scheme); d != nullptr && d->bits == 1)
        {
            double sum_cos = 0.0, sum_sin = 0.0;
            double_angle_sums(geom, angles, sum_cos, sum_sin);
            p.var_re = std::max(0.0, m / 2.0 + 0.5 * sum_cos);
            p.var_im = std::max(0.0, m / 2.0 - 0.5 * sum_cos);
            p.covariance = 0.5 * sum_sin;
            p.var_total = p.var_re + p.var_im;
            p.magnitude_law = EmpiricalLaw{};
            p.phase_law = EmpiricalLaw{};
            return p;
        }

        double var_total = m;
        if (const Cgps *g = std::get_if<Cgps>(&scheme))
            var_total = cgps_total_variance(*g, geom);

        p.var_re = var_total / 2.0;
        p.var_im = var_total / 2.0;
        p.covariance = 0.0;
        p.var_total = var_total;
        if (has_direct)
        {
            p.magnitude_law = RicianLaw{std::abs(direct_gain), var_total / 2.0};
            p.phase_law = EmpiricalLaw{}; // nonzero mean breaks phase uniformity
        }
        else
        {
            p.magnitude_law = RayleighLaw{var_total / 2.0};
            p.phase_law = UniformPhaseLaw{};
        }
        return p;
    }

    IndependenceCheck independence_condition(const RisGeometry &geom, const AnglePair &angles)
    {
        if (geom.m_x_count != geom.m_y_count)
            throw NonSquareGeometryError("element counts differ: " + std::to_string(geom.m_x_count) +
                                         " vs " + std::to_string(geom.m_y_count));
        if (std::abs(geom.spacing_x - geom.spacing_y) >
            1e-12 * std::max(geom.spacing_x, geom.spacing_y))
            throw NonSquareGeometryError("spacings differ");

        angles.validate();
        IndependenceCheck c;
        c.gamma = std::cos(angles.psi_in) * std::sin(angles.theta_in) +
                  std::cos(angles.psi_out) * std::sin(angles.theta_out) +
                  std::sin(angles.psi_in) * std::sin(angles.theta_in) +
                  std::sin(angles.psi_out) * std::sin(angles.theta_out);

        // gamma == b*pi / (2*k*d_x) for some integer b
        double b_projection = c.gamma * 2.0 * geom.kd_x() / std::numbers::pi;
        c.nearest_b = std::llround(b_projection);
        c.satisfied = std::abs(b_projection - static_cast<double>(c.nearest_b)) <= 1e-9;
        return c;
    }

    SkrResult skr_closed_form(const PhaseScheme &scheme, const RisGeometry &geom,
                              const AnglePair &angles, double noise_var_per_quadrature,
                              bool eq29_verbatim)
    {
        if (!(noise_var_per_quadrature > 0.0) || !std::isfinite(noise_var_per_quadrature))
            throw ModelError("noise variance must be strictly positive for a finite rate");

        AnalyticPrediction pred = predict_distribution(scheme, geom, angles);
        double nv = noise_var_per_quadrature;

        SkrResult r;
        r.scheme = scheme;
        r.noise_var_per_quadrature = nv;

        if (const Dips *d = std::get_if<Dips>(&scheme); d != nullptr && d->bits == 1)
        {
            double rate = quadrature_rate(pred.var_re, nv) + quadrature_rate(pred.var_im, nv);
            if (eq29_verbatim)
                rate *= 2.0;
            r.rate_bits_per_sample = rate;
            r.is_upper_bound = std::abs(pred.covariance) > 1e-12 * std::max(1.0, pred.var_total);
            return r;
        }

        r.rate_bits_per_sample = gaussian_rate(pred.var_total, nv);
        r.is_upper_bound = false;
        return r;
    }

    double gaussian_cdf(double x, double mean, double var)
    {
        if (var <= 0.0)
            return x < mean ? 0.0 : 1.0;
        return 0.5 * std::erfc((mean - x) / std::sqrt(2.0 * var));
    }

    double rayleigh_cdf(double x, double sigma2)
    {
        if (x <= 0.0)
            return 0.0;
        return 1.0 - std::exp(-x * x / (2.0 * sigma2));
    }

    double log_bessel_i0(double x)
    {
        x = std::abs(x);
        if (x < 50.0)
        {
            // power series sum_k (x^2/4)^k / (k!)^2
            double q = 0.25 * x * x;
            double term = 1.0, sum = 1.0;
            for (int k = 1; k < 300; ++k)
            {
                term *= q / (static_cast<double>(k) * static_cast<double>(k));
                sum += term;
                if (term < sum * 1e-18)
                    break;
            }
            return std::log(sum);
        }
        // asymptotic: I0(x) ~ e^x / sqrt(2*pi*x) * (1 + 1/(8x) + 9/(128x^2) + ...)
        double inv = 1.0 / x;
        double series = 1.0 + inv * (0.125 + inv * (0.0703125 + inv * (0.0732421875 +
                        inv * (0.112152099609375 + inv * 0.22710800170898438))));
        return x - 0.5 * std::log(kTwoPi * x) + std::log(series);
    }

    double rician_cdf(double x, double nu, double sigma2)
    {
        if (!(sigma2 > 0.0))
            throw ModelError("Rician scale must be strictly positive");
        if (nu < 0.0)
            throw ModelError("Rician direct component must be >= 0");
        if (x <= 0.0)
            return 0.0;

        double sigma = std::sqrt(sigma2);
        auto pdf = [nu, sigma2](double t) {
            if (t <= 0.0)
                return 0.0;
            double log_p = std::log(t / sigma2) + log_bessel_i0(t * nu / sigma2) -
                           (t * t + nu * nu) / (2.0 * sigma2);
            return std::exp(log_p);
        };

        // mass beyond nu + 12*sigma is far below the 1e-9 target
        double upper = std::min(x, nu + 12.0 * sigma);
        double cdf = integrate(pdf, 0.0, upper, 1e-11);
        return std::clamp(cdf, 0.0, 1.0);
    }

    ReferenceCdfs reference_cdfs(const AnalyticPrediction &prediction)
    {
        if (std::holds_alternative<EmpiricalLaw>(prediction.magnitude_law))
            throw NoClosedFormError("magnitude law is empirical");
        if (std::holds_alternative<EmpiricalLaw>(prediction.phase_law))
            throw NoClosedFormError("phase law is empirical");

        ReferenceCdfs cdfs;
        if (const RayleighLaw *ray = std::get_if<RayleighLaw>(&prediction.magnitude_law))
        {
            double s2 = ray->sigma2;
            cdfs.magnitude_cdf = [s2](double x) { return rayleigh_cdf(x, s2); };
        }
        else
        {
            RicianLaw rice = std::get<RicianLaw>(prediction.magnitude_law);
            cdfs.magnitude_cdf = [rice](double x) { return rician_cdf(x, rice.nu, rice.sigma2); };
        }

        cdfs.phase_cdf = [](double x) { return std::clamp(x / kTwoPi, 0.0, 1.0); };

        double mean_re = prediction.mean_re, var_re = prediction.var_re;
        double mean_im = prediction.mean_im, var_im = prediction.var_im;
        cdfs.quadrature_re_cdf = [mean_re, var_re](double x) { return gaussian_cdf(x, mean_re, var_re); };
        cdfs.quadrature_im_cdf = [mean_im, var_im](double x) { return gaussian_cdf(x, mean_im, var_im); };
        return cdfs;
    }

} // namespace riskeygen
