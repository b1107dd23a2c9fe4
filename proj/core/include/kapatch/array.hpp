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

#ifndef KAPATCH_ARRAY_HPP
#define KAPATCH_ARRAY_HPP

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "kapatch/radiation.hpp"

namespace kapatch {

/// Rectangular planar array of identical patches in the ground plane.
/// Element (m, n) sits at (m * dx, n * dy) in free-space wavelengths,
/// m = 0..nx-1 along the E-plane axis, n = 0..ny-1 along the H-plane axis.
struct ArrayLayout {
    int nx = 1;  ///< elements along x, >= 1
    int ny = 1;  ///< elements along y, >= 1
    double dx_lambda = 0.5;  ///< spacing along x in wavelengths, > 0
    double dy_lambda = 0.5;  ///< spacing along y in wavelengths, > 0
    /// Complex excitations, row-major [n * nx + m]. Empty means uniform 1+0j.
    std::vector<std::complex<double>> excitations;

    void validate() const;
    std::complex<double> excitation(int m, int n) const;
};

/// Uniformly excited nx-by-ny array.
ArrayLayout uniform_layout(int nx, int ny, double dx_lambda = 0.5, double dy_lambda = 0.5);

/// Progressive phase weights exp(-j 2 pi (m dx u0x + n dy u0y)) that steer the
/// main beam to (theta0, phi0), both in degrees, 0 <= theta0 <= 90.
std::vector<std::complex<double>> steering_phases(const ArrayLayout& layout, double theta0_deg,
                                                  double phi0_deg);

/// Planar array factor at (theta, phi) in radians:
/// AF = sum_mn a_mn exp(j 2 pi (m dx ux + n dy uy)), evaluated with per-axis
/// phasor recurrences (one complex multiply per element).
std::complex<double> array_factor(const ArrayLayout& layout, double theta_rad, double phi_rad);

/// Pattern-multiplication intensity U_elem * |AF|^2 sampled on a grid.
FarFieldPattern total_pattern(const PatchGeometry& geo, const ArrayLayout& layout,
                              const AngularGrid& grid = AngularGrid(), bool obliquity = false);

/// Summary figures of a sampled array pattern.
struct ArrayMetrics {
    double gain_dbi = 0.0;
    double hpbw_e_deg = 0.0;
    double hpbw_h_deg = 0.0;
    /// Worst (largest) principal-cut sidelobe level; empty when neither cut
    /// has a sidelobe.
    std::optional<double> sll_db;
    double peak_theta_deg = 0.0;
    double peak_phi_deg = 0.0;
};

/// Metrics of an already sampled pattern.
ArrayMetrics pattern_metrics(const FarFieldPattern& pattern, double efficiency = 1.0);

/// Samples the total pattern and summarizes it.
ArrayMetrics array_metrics(const PatchGeometry& geo, const ArrayLayout& layout,
                           const AngularGrid& grid = AngularGrid(), double efficiency = 1.0,
                           bool obliquity = false);

/// Spacing headroom before a grating lobe enters visible space when steering
/// to theta0 (degrees): 1 / (1 + sin(theta0)) - max(dx, dy). Negative means a
/// grating lobe is already visible.
double grating_lobe_margin(const ArrayLayout& layout, double theta0_deg);

/// One row of the reference design progression table.
struct ProgressionRow {
    std::string config;          ///< "element", "2x2", "4x4", "8x8"
    double model_gain_dbi = 0.0; ///< this toolkit's figure
    double paper_gain_db = 0.0;  ///< reference gain from the original published design
    double delta_db = 0.0;       ///< model - reference
    double model_s11_min_db = 0.0; ///< sweep minimum of the matched element
};

/// Reproduces the reference design progression (single element, 2x2, 4x4,
/// 8x8 at uniform spacing) and tabulates model gains against the published
/// reference gains 7.046 / 12.9 / 18.7 / 21 dB.
std::vector<ProgressionRow> paper_progression(const PatchGeometry& geo, double efficiency = 1.0,
                                              double resonator_q = 30.0,
                                              const AngularGrid& grid = AngularGrid(),
                                              double spacing_lambda = 0.5);

}  // namespace kapatch

#endif  // KAPATCH_ARRAY_HPP
