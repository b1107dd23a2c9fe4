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

#ifndef KAPATCH_GEOMETRY_HPP
#define KAPATCH_GEOMETRY_HPP

#include <string>

#include "kapatch/errors.hpp"

namespace kapatch {

/// Closed form used to size the radiating width of the patch.
enum class WidthFormula {
    /// W = (c / 2 f0) * sqrt(2 / (eps_r + 1)). The usual transmission-line
    /// sizing rule; reproduces published Ka-band patch widths.
    Standard,
    /// W = c / (2 f0 sqrt(eps_r)). A literal variant that appears in print;
    /// kept selectable so both designs can be generated and compared.
    PaperLiteral,
};

const char* to_string(WidthFormula formula);
WidthFormula width_formula_from_string(const std::string& text);

/// Dielectric board the patch is printed on.
struct Substrate {
    double epsilon_r = 2.2;     ///< relative permittivity, >= 1
    double height_mm = 0.784;   ///< board thickness, > 0
    double loss_tangent = 0.0;  ///< dissipation factor, >= 0
    std::string label = "RT-duroid-5880";

    /// Throws InvalidInput when a member violates its bound.
    void validate() const;
};

/// Designer's request: operating frequency, width rule, port impedance.
struct DesignSpec {
    double f0_hz = 29e9;  ///< design (resonant) frequency, > 0
    WidthFormula width_formula = WidthFormula::Standard;
    double z0_ohm = 50.0;  ///< reference port impedance used downstream, > 0

    void validate() const;
};

/// Fully sized rectangular patch, produced by design_patch(). Lengths in mm.
///
/// Invariants (checked by validate()):
///   - all lengths positive and finite
///   - length_mm == eff_length_mm - 2 * length_extension_mm (to fp precision)
///   - 1 <= eff_permittivity <= substrate.epsilon_r
///   - ground_length_mm == 6 * h + length_mm, ground_width_mm == 6 * h + width_mm
struct PatchGeometry {
    double width_mm = 0.0;             ///< radiating width W
    double length_mm = 0.0;            ///< physical resonant length L
    double eff_permittivity = 1.0;     ///< quasi-static effective permittivity
    double length_extension_mm = 0.0;  ///< fringing extension dL at one edge
    double eff_length_mm = 0.0;        ///< electrical length L + 2 dL
    double ground_length_mm = 0.0;     ///< finite ground plane, 6 h + L
    double ground_width_mm = 0.0;      ///< finite ground plane, 6 h + W
    Substrate substrate;
    double f0_hz = 0.0;  ///< frequency the patch was designed for
    WidthFormula width_formula = WidthFormula::Standard;

    void validate() const;
};

/// Radiating width W in mm for the requested sizing rule.
double effective_width(const DesignSpec& spec, const Substrate& sub);

/// Quasi-static effective permittivity of a microstrip line of width W:
/// eps_eff = (eps_r + 1)/2 + (eps_r - 1)/2 * (1 + 12 h / W)^(-1/2).
double effective_permittivity(const Substrate& sub, double width_mm);

/// Electrical half-wavelength in the effective medium, mm:
/// L_eff = c / (2 f0 sqrt(eps_eff)).
double effective_length(double f0_hz, double eff_permittivity);

/// Hammerstad fringing extension of one radiating edge, mm:
/// dL = 0.412 h (eps_eff + 0.3)(W/h + 0.264) / ((eps_eff - 0.258)(W/h + 0.8)).
/// Throws DegenerateInput at and below the eps_eff = 0.258 pole.
double length_extension(const Substrate& sub, double width_mm, double eff_permittivity);

/// Runs the whole sizing chain (width -> eps_eff -> electrical length ->
/// fringing correction -> ground plane). Throws NonPhysicalGeometry when the
/// fringing correction consumes the entire electrical length.
PatchGeometry design_patch(const DesignSpec& spec, const Substrate& sub);

/// Exact model inverse of design_patch: the frequency at which the patch as
/// built resonates, f = c / (2 (L + 2 dL) sqrt(eps_eff)). For a geometry
/// produced by design_patch this returns f0_hz to floating precision.
double resonant_frequency(const PatchGeometry& geo);

}  // namespace kapatch

#endif  // KAPATCH_GEOMETRY_HPP
