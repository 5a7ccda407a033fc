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

#include "riskeygen/geometry.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "riskeygen/errors.hpp"

namespace riskeygen
{
    RisGeometry::RisGeometry(int mx, int my, double dx, double dy, double lambda)
        : m_x_count(mx), m_y_count(my), spacing_x(dx), spacing_y(dy), wavelength(lambda)
    {
        if (mx < 1 || my < 1)
            throw ModelError("element counts must be >= 1, got " + std::to_string(mx) + "x" + std::to_string(my));
        if (!(dx > 0.0) || !(dy > 0.0))
            throw ModelError("element spacings must be strictly positive");
        if (!(lambda > 0.0) || !std::isfinite(lambda))
            throw ModelError("wavelength must be strictly positive and finite");
    }

    double RisGeometry::wave_number() const
    {
        return 2.0 * std::numbers::pi / wavelength;
    }

    double RisGeometry::kd_x() const
    {
        // spacing is in wavelengths: k * d = (2*pi/lambda) * (spacing * lambda)
        return 2.0 * std::numbers::pi * spacing_x;
    }

    double RisGeometry::kd_y() const
    {
        return 2.0 * std::numbers::pi * spacing_y;
    }

    AnglePair AnglePair::from_degrees(double psi_in_deg, double theta_in_deg,
                                      double psi_out_deg, double theta_out_deg)
    {
        constexpr double rad = std::numbers::pi / 180.0;
        AnglePair a{psi_in_deg * rad, theta_in_deg * rad, psi_out_deg * rad, theta_out_deg * rad};
        a.validate();
        return a;
    }

    void AnglePair::validate() const
    {
        if (!std::isfinite(psi_in) || !std::isfinite(theta_in) ||
            !std::isfinite(psi_out) || !std::isfinite(theta_out))
            throw ModelError("angles must be finite");
    }

    XiComponents xi_components(const RisGeometry &geom, const AnglePair &angles)
    {
        angles.validate();
        XiComponents xi;
        xi.xi_x = geom.kd_x() * (std::cos(angles.psi_in) * std::sin(angles.theta_in) +
                                 std::cos(angles.psi_out) * std::sin(angles.theta_out));
        xi.xi_y = geom.kd_y() * (std::sin(angles.psi_in) * std::sin(angles.theta_in) +
                                 std::sin(angles.psi_out) * std::sin(angles.theta_out));
        return xi;
    }

    int element_index(int m_x, int m_y, const RisGeometry &geom)
    {
        if (m_x < 1 || m_x > geom.m_x_count || m_y < 1 || m_y > geom.m_y_count)
            throw ModelError("element index (" + std::to_string(m_x) + "," + std::to_string(m_y) +
                             ") out of range for " + std::to_string(geom.m_x_count) + "x" +
                             std::to_string(geom.m_y_count) + " array");
        return (m_y - 1) * geom.m_x_count + m_x;
    }

    double element_alpha(const RisGeometry &geom, const AnglePair &angles, int m_x, int m_y)
    {
        element_index(m_x, m_y, geom); // range check
        XiComponents xi = xi_components(geom, angles);
        return (m_x - 1) * xi.xi_x + (m_y - 1) * xi.xi_y;
    }

    SteeringProduct steering_product(const RisGeometry &geom, const AnglePair &angles)
    {
        XiComponents xi = xi_components(geom, angles);
        SteeringProduct sp;
        sp.phases.resize(static_cast<std::size_t>(geom.element_count()));
        std::size_t m = 0;
        for (int my = 0; my < geom.m_y_count; ++my)
            for (int mx = 0; mx < geom.m_x_count; ++mx)
                sp.phases[m++] = mx * xi.xi_x + my * xi.xi_y;
        return sp;
    }

} // namespace riskeygen
