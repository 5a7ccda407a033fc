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

#ifndef RISKEYGEN_GEOMETRY_HPP
#define RISKEYGEN_GEOMETRY_HPP

#include <vector>

namespace riskeygen
{
    // Uniform rectangular array layout. Element spacings are given in
    // wavelengths, so all k*d products are independent of the absolute
    // wavelength (which defaults to 1 and only has to be positive).
    struct RisGeometry
    {
        int m_x_count = 1;       // elements along x
        int m_y_count = 1;       // elements along y
        double spacing_x = 0.5;  // in wavelengths
        double spacing_y = 0.5;  // in wavelengths
        double wavelength = 1.0; // meters

        RisGeometry() = default;
        RisGeometry(int mx, int my, double dx, double dy, double lambda = 1.0);

        int element_count() const { return m_x_count * m_y_count; }
        double wave_number() const; // 2*pi / wavelength

        // k * d products; these are what every phase formula consumes.
        double kd_x() const;
        double kd_y() const;
    };

    // Incident and reflected azimuth/elevation, stored in radians. Any finite
    // angle is accepted; interface boundaries convert from degrees.
    struct AnglePair
    {
        double psi_in = 0.0;
        double theta_in = 0.0;
        double psi_out = 0.0;
        double theta_out = 0.0;

        static AnglePair from_degrees(double psi_in_deg, double theta_in_deg,
                                      double psi_out_deg, double theta_out_deg);
        void validate() const; // throws ModelError on non-finite entries
    };

    // Spatial-frequency terms per axis.
    struct XiComponents
    {
        double xi_x = 0.0;
        double xi_y = 0.0;
    };

    // Per-element phases alpha_m of the steering-vector product, row-major.
    // The complex entries are exp(j*alpha_m), all unit magnitude.
    struct SteeringProduct
    {
        std::vector<double> phases;
    };

    XiComponents xi_components(const RisGeometry &geom, const AnglePair &angles);

    // Row-major linear index, 1-based: m = (m_y - 1) * M_x + m_x.
    int element_index(int m_x, int m_y, const RisGeometry &geom);

    // alpha = (m_x - 1) * xi_x + (m_y - 1) * xi_y for 1-based element indices.
    double element_alpha(const RisGeometry &geom, const AnglePair &angles, int m_x, int m_y);

    SteeringProduct steering_product(const RisGeometry &geom, const AnglePair &angles);

} // namespace riskeygen

#endif
