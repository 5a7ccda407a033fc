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

#ifndef RISKEYGEN_ERRORS_HPP
#define RISKEYGEN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace riskeygen
{
    // Root of all library errors.
    class Error : public std::runtime_error
    {
    public:
        explicit Error(const std::string &msg) : std::runtime_error(msg) {}
    };

    // Invalid model parameters or scheme/geometry mismatches (CLI exit code 3).
    class ModelError : public Error
    {
    public:
        explicit ModelError(const std::string &msg) : Error(msg) {}
    };

    // Group size does not divide the element count in strict mode.
    class NotDivisibleError : public ModelError
    {
    public:
        explicit NotDivisibleError(const std::string &msg) : ModelError("NotDivisible: " + msg) {}
    };

    // Operation requires m_x_count == m_y_count and spacing_x == spacing_y.
    class NonSquareGeometryError : public ModelError
    {
    public:
        explicit NonSquareGeometryError(const std::string &msg) : ModelError("NonSquareGeometry: " + msg) {}
    };

    // Mutual information is unbounded for noise-free identical observations.
    class ZeroNoiseDegenerateError : public ModelError
    {
    public:
        explicit ZeroNoiseDegenerateError(const std::string &msg) : ModelError("ZeroNoiseDegenerate: " + msg) {}
    };

    // Requested a reference distribution that has no analytic form.
    class NoClosedFormError : public ModelError
    {
    public:
        explicit NoClosedFormError(const std::string &msg) : ModelError("NoClosedForm: " + msg) {}
    };

    // Configuration file / flag parsing problems (CLI exit code 2).
    class ConfigError : public Error
    {
    public:
        explicit ConfigError(const std::string &msg) : Error(msg) {}
    };

    // Filesystem problems (CLI exit code 4).
    class IoError : public Error
    {
    public:
        explicit IoError(const std::string &msg) : Error(msg) {}
    };

} // namespace riskeygen

#endif
