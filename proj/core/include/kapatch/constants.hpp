// SPDX-License-Identifier: Apache-2.0
//
// kapatch - Ka-band rectangular microstrip patch and planar array design toolkit
// Copyright (C) 2026 kapatch contributors
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

#ifndef KAPATCH_CONSTANTS_HPP
#define KAPATCH_CONSTANTS_HPP

#include <numbers>

namespace kapatch {

/// Exact SI speed of light in vacuum, m/s. The only physical constant the
/// models depend on; all other numbers are derived from it.
inline constexpr double speed_of_light_m_s = 299792458.0;

/// Unit convention used throughout: lengths in millimeters, frequencies in Hz.
inline constexpr double mm_per_m = 1000.0;

/// Free-space wavelength in millimeters at frequency f_hz.
inline constexpr double wavelength_mm(double f_hz) {
    return speed_of_light_m_s / f_hz * mm_per_m;
}

/// Free-space wavenumber k0 = 2*pi/lambda0 in rad/mm at frequency f_hz.
inline constexpr double wavenumber_per_mm(double f_hz) {
    return 2.0 * std::numbers::pi / wavelength_mm(f_hz);
}

inline constexpr double deg_to_rad(double deg) { return deg * (std::numbers::pi / 180.0); }
inline constexpr double rad_to_deg(double rad) { return rad * (180.0 / std::numbers::pi); }

}  // namespace kapatch

#endif  // KAPATCH_CONSTANTS_HPP
