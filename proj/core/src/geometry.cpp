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

#include "kapatch/geometry.hpp"

#include <cmath>
#include <string>

#include "kapatch/constants.hpp"

namespace kapatch {

namespace {

void require_positive(double value, const char* name) {
    if (!std::isfinite(value) || value <= 0.0)
        throw InvalidInput(std::string(name) + " must be positive and finite");
}

}  // namespace

const char* to_string(WidthFormula formula) {
    return formula == WidthFormula::Standard ? "standard" : "paper-literal";
}

WidthFormula width_formula_from_string(const std::string& text) {
    if (text == "standard") return WidthFormula::Standard;
    if (text == "paper-literal") return WidthFormula::PaperLiteral;
    throw InvalidInput("unknown width formula '" + text +
                       "' (expected 'standard' or 'paper-literal')");
}

void Substrate::validate() const {
    if (!std::isfinite(epsilon_r) || epsilon_r < 1.0)
        throw InvalidInput("substrate epsilon_r must be >= 1");
    require_positive(height_mm, "substrate height_mm");
    if (!std::isfinite(loss_tangent) || loss_tangent < 0.0)
        throw InvalidInput("substrate loss_tangent must be >= 0");
}

void DesignSpec::validate() const {
    require_positive(f0_hz, "design f0_hz");
    require_positive(z0_ohm, "design z0_ohm");
}

void PatchGeometry::validate() const {
    substrate.validate();
    require_positive(f0_hz, "geometry f0_hz");
    require_positive(width_mm, "geometry width_mm");
    require_positive(length_mm, "geometry length_mm");
    require_positive(length_extension_mm, "geometry length_extension_mm");
    require_positive(eff_length_mm, "geometry eff_length_mm");
    require_positive(ground_length_mm, "geometry ground_length_mm");
    require_positive(ground_width_mm, "geometry ground_width_mm");
    if (!std::isfinite(eff_permittivity) || eff_permittivity < 1.0 ||
        eff_permittivity > substrate.epsilon_r)
        throw InvalidInput("geometry eff_permittivity must lie in [1, epsilon_r]");
    const double tol = 1e-9;
    if (std::abs(eff_length_mm - (length_mm + 2.0 * length_extension_mm)) > tol * eff_length_mm)
        throw InvalidInput("geometry eff_length_mm != length_mm + 2 * length_extension_mm");
    if (std::abs(ground_length_mm - (6.0 * substrate.height_mm + length_mm)) >
        tol * ground_length_mm)
        throw InvalidInput("geometry ground_length_mm != 6 h + length_mm");
    if (std::abs(ground_width_mm - (6.0 * substrate.height_mm + width_mm)) >
        tol * ground_width_mm)
        throw InvalidInput("geometry ground_width_mm != 6 h + width_mm");
}

double effective_width(const DesignSpec& spec, const Substrate& sub) {
    spec.validate();
    sub.validate();
    const double half_wave_mm = speed_of_light_m_s / (2.0 * spec.f0_hz) * mm_per_m;
    if (spec.width_formula == WidthFormula::PaperLiteral)
        return half_wave_mm / std::sqrt(sub.epsilon_r);
    return half_wave_mm * std::sqrt(2.0 / (sub.epsilon_r + 1.0));
}

double effective_permittivity(const Substrate& sub, double width_mm) {
    sub.validate();
    require_positive(width_mm, "width_mm");
    const double er = sub.epsilon_r;
    return 0.5 * (er + 1.0) +
           0.5 * (er - 1.0) / std::sqrt(1.0 + 12.0 * sub.height_mm / width_mm);
}

double effective_length(double f0_hz, double eff_permittivity) {
    require_positive(f0_hz, "f0_hz");
    if (!std::isfinite(eff_permittivity) || eff_permittivity < 1.0)
        throw InvalidInput("eff_permittivity must be >= 1");
    return speed_of_light_m_s / (2.0 * f0_hz * std::sqrt(eff_permittivity)) * mm_per_m;
}

double length_extension(const Substrate& sub, double width_mm, double eff_permittivity) {
    sub.validate();
    require_positive(width_mm, "width_mm");
    if (!std::isfinite(eff_permittivity)) throw InvalidInput("eff_permittivity must be finite");
    if (eff_permittivity <= 0.258)
        throw DegenerateInput("length extension undefined for eff_permittivity <= 0.258");
    if (eff_permittivity < 1.0) throw InvalidInput("eff_permittivity must be >= 1");
    const double ratio = width_mm / sub.height_mm;
    return 0.412 * sub.height_mm * ((eff_permittivity + 0.3) * (ratio + 0.264)) /
           ((eff_permittivity - 0.258) * (ratio + 0.8));
}

PatchGeometry design_patch(const DesignSpec& spec, const Substrate& sub) {
    const double width = effective_width(spec, sub);  // validates spec and sub
    const double eps_eff = effective_permittivity(sub, width);
    const double eff_length = effective_length(spec.f0_hz, eps_eff);
    const double extension = length_extension(sub, width, eps_eff);
    const double length = eff_length - 2.0 * extension;
    if (!(length > 0.0))
        throw NonPhysicalGeometry(
            "fringing correction consumes the entire electrical length; the substrate is too "
            "thick for this frequency");

    PatchGeometry geo;
    geo.width_mm = width;
    geo.length_mm = length;
    geo.eff_permittivity = eps_eff;
    geo.length_extension_mm = extension;
    geo.eff_length_mm = eff_length;
    geo.ground_length_mm = 6.0 * sub.height_mm + length;
    geo.ground_width_mm = 6.0 * sub.height_mm + width;
    geo.substrate = sub;
    geo.f0_hz = spec.f0_hz;
    geo.width_formula = spec.width_formula;
    return geo;
}

double resonant_frequency(const PatchGeometry& geo) {
    geo.validate();
    const double electrical_mm = geo.length_mm + 2.0 * geo.length_extension_mm;
    return speed_of_light_m_s / (2.0 * electrical_mm * std::sqrt(geo.eff_permittivity)) *
           mm_per_m;
}

}  // namespace kapatch
