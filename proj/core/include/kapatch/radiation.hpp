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

#ifndef KAPATCH_RADIATION_HPP
#define KAPATCH_RADIATION_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "kapatch/geometry.hpp"

namespace kapatch {

/// Uniform spherical sampling of the upper hemisphere: theta in [0, 90] deg
/// inclusive of both ends, phi in [0, 360) deg starting at 0 with periodic
/// wrap. Each step must divide its span exactly.
class AngularGrid {
  public:
    AngularGrid() : AngularGrid(0.5, 0.5) {}
    explicit AngularGrid(double step_deg) : AngularGrid(step_deg, step_deg) {}
    AngularGrid(double theta_step_deg, double phi_step_deg);

    double theta_step_deg() const { return theta_step_; }
    double phi_step_deg() const { return phi_step_; }
    std::size_t n_theta() const { return n_theta_; }
    std::size_t n_phi() const { return n_phi_; }

    double theta_deg(std::size_t i) const { return static_cast<double>(i) * theta_step_; }
    double phi_deg(std::size_t j) const { return static_cast<double>(j) * phi_step_; }
    double theta_rad(std::size_t i) const;
    double phi_rad(std::size_t j) const;

  private:
    double theta_step_;
    double phi_step_;
    std::size_t n_theta_;
    std::size_t n_phi_;
};

/// Location and value of the grid argmax of a sampled pattern.
struct PatternPeak {
    double u_max = 0.0;
    double theta_deg = 0.0;
    double phi_deg = 0.0;
    std::size_t i_theta = 0;
    std::size_t j_phi = 0;
};

/// Radiation intensity U(theta, phi) sampled on an AngularGrid, together with
/// its hemispherical quadrature power. U is unnormalized and >= 0.
struct FarFieldPattern {
    AngularGrid grid;
    /// Row-major, theta-outer: intensity[i * n_phi + j].
    std::vector<double> intensity;
    double f_hz = 0.0;  ///< 0 for injected analytic patterns
    double prad = 0.0;  ///< integral of U sin(theta) over the hemisphere
    PatternPeak peak;

    double at(std::size_t i_theta, std::size_t j_phi) const {
        return intensity[i_theta * grid.n_phi() + j_phi];
    }
};

/// Principal planes: E is the phi = 0 cut (through the resonant length axis),
/// H is the phi = 90 deg cut (through the radiating width axis).
enum class Cut { E, H };

/// One principal-plane slice of a sampled pattern, theta = i * step_deg.
struct PatternCut {
    Cut plane = Cut::E;
    double step_deg = 0.5;
    std::vector<double> u;
};

/// Sentinel returned by hpbw() when the cut never falls to half power.
inline constexpr double hpbw_no_crossing_deg = 180.0;

/// Two-slot cavity radiation intensity of the patch (angles in radians):
/// U = [sinc(k0 W/2 uy) sinc(k0 h/2 ux) cos(k0 Leff/2 ux)]^2 with
/// ux = sin(theta) cos(phi), uy = sin(theta) sin(phi). When obliquity is set
/// the aperture amplitude is additionally multiplied by cos(theta).
double element_intensity(const PatchGeometry& geo, double theta_rad, double phi_rad,
                         bool obliquity = false);

/// Samples an arbitrary nonnegative intensity function (radian arguments) on
/// a grid and integrates it. Theta uses composite Simpson weights (with a 3/8
/// tail when the interval count is odd); the periodic phi direction uses the
/// rectangle rule, which is spectrally accurate there.
FarFieldPattern sample_function(const AngularGrid& grid,
                                const std::function<double(double, double)>& intensity,
                                double f_hz = 0.0);

/// Samples element_intensity() for the given patch.
FarFieldPattern sample_pattern(const PatchGeometry& geo, const AngularGrid& grid = AngularGrid(),
                               bool obliquity = false);

/// D = 10 log10(4 pi U_max / prad). Throws ZeroPattern when the pattern holds
/// no power.
double directivity_dbi(const FarFieldPattern& pattern);

/// Directivity reduced by a radiation efficiency in (0, 1].
double gain_dbi(const FarFieldPattern& pattern, double efficiency = 1.0);

/// Extracts a principal plane. The H cut requires phi = 90 deg to be a grid
/// node; otherwise InvalidInput is thrown.
PatternCut principal_cut(const FarFieldPattern& pattern, Cut cut);

/// Half-power beamwidth of a principal cut, by linear interpolation between
/// the samples bracketing each half-power crossing. A peak at theta = 0 is
/// mirrored (width = 2 * theta_3dB). Returns hpbw_no_crossing_deg when either
/// flank never reaches half power.
double hpbw(const FarFieldPattern& pattern, Cut cut);

/// Highest sidelobe relative to the cut maximum, in dB. The main lobe is
/// delimited by the first local minima below u_max / 100 on each side; when
/// no sidelobe exists (monotone decay to the horizon) returns nullopt.
std::optional<double> sidelobe_level_db(const FarFieldPattern& pattern, Cut cut);

}  // namespace kapatch

#endif  // KAPATCH_RADIATION_HPP
