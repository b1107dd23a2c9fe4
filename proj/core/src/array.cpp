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

#include "kapatch/array.hpp"

#include <cmath>
#include <numbers>

#include "kapatch/circuit.hpp"
#include "kapatch/constants.hpp"

namespace kapatch {

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;
}

void ArrayLayout::validate() const {
    if (nx < 1 || ny < 1) throw InvalidInput("array layout needs nx >= 1 and ny >= 1");
    if (!std::isfinite(dx_lambda) || dx_lambda <= 0.0 || !std::isfinite(dy_lambda) ||
        dy_lambda <= 0.0)
        throw InvalidInput("array spacings must be positive and finite");
    if (!excitations.empty()) {
        if (excitations.size() != static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny))
            throw InvalidInput("excitation vector must hold nx * ny entries (or be empty)");
        for (const auto& a : excitations)
            if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
                throw InvalidInput("excitations must be finite");
    }
}

std::complex<double> ArrayLayout::excitation(int m, int n) const {
    if (m < 0 || m >= nx || n < 0 || n >= ny)
        throw InvalidInput("element index outside the array");
    if (excitations.empty()) return {1.0, 0.0};
    return excitations[static_cast<std::size_t>(n) * static_cast<std::size_t>(nx) +
                       static_cast<std::size_t>(m)];
}

ArrayLayout uniform_layout(int nx, int ny, double dx_lambda, double dy_lambda) {
    ArrayLayout layout{nx, ny, dx_lambda, dy_lambda, {}};
    layout.validate();
    return layout;
}

std::vector<std::complex<double>> steering_phases(const ArrayLayout& layout, double theta0_deg,
                                                  double phi0_deg) {
    layout.validate();
    if (!std::isfinite(theta0_deg) || theta0_deg < 0.0 || theta0_deg > 90.0)
        throw InvalidInput("steering theta0 must lie in [0, 90] degrees");
    if (!std::isfinite(phi0_deg)) throw InvalidInput("steering phi0 must be finite");
    const double st = std::sin(deg_to_rad(theta0_deg));
    const double u0x = st * std::cos(deg_to_rad(phi0_deg));
    const double u0y = st * std::sin(deg_to_rad(phi0_deg));
    std::vector<std::complex<double>> phases;
    phases.reserve(static_cast<std::size_t>(layout.nx) * static_cast<std::size_t>(layout.ny));
    for (int n = 0; n < layout.ny; ++n)
        for (int m = 0; m < layout.nx; ++m)
            phases.push_back(std::polar(
                1.0, -two_pi * (static_cast<double>(m) * layout.dx_lambda * u0x +
                                static_cast<double>(n) * layout.dy_lambda * u0y)));
    return phases;
}

std::complex<double> array_factor(const ArrayLayout& layout, double theta_rad, double phi_rad) {
    const double st = std::sin(theta_rad);
    const double ux = st * std::cos(phi_rad);
    const double uy = st * std::sin(phi_rad);
    const std::complex<double> step_x = std::polar(1.0, two_pi * layout.dx_lambda * ux);
    const std::complex<double> step_y = std::polar(1.0, two_pi * layout.dy_lambda * uy);
    const bool uniform = layout.excitations.empty();

    std::complex<double> af{0.0, 0.0};
    std::complex<double> row_phasor{1.0, 0.0};  // step_y^n
    for (int n = 0; n < layout.ny; ++n) {
        std::complex<double> phasor = row_phasor;  // step_y^n * step_x^m
        for (int m = 0; m < layout.nx; ++m) {
            if (uniform)
                af += phasor;
            else
                af += layout.excitations[static_cast<std::size_t>(n) *
                                             static_cast<std::size_t>(layout.nx) +
                                         static_cast<std::size_t>(m)] *
                      phasor;
            phasor *= step_x;
        }
        row_phasor *= step_y;
    }
    return af;
}

FarFieldPattern total_pattern(const PatchGeometry& geo, const ArrayLayout& layout,
                              const AngularGrid& grid, bool obliquity) {
    geo.validate();
    layout.validate();
    return sample_function(
        grid,
        [&](double theta, double phi) {
            return element_intensity(geo, theta, phi, obliquity) *
                   std::norm(array_factor(layout, theta, phi));
        },
        geo.f0_hz);
}

ArrayMetrics pattern_metrics(const FarFieldPattern& pattern, double efficiency) {
    ArrayMetrics metrics;
    metrics.gain_dbi = gain_dbi(pattern, efficiency);
    metrics.hpbw_e_deg = hpbw(pattern, Cut::E);
    metrics.hpbw_h_deg = hpbw(pattern, Cut::H);
    const auto sll_e = sidelobe_level_db(pattern, Cut::E);
    const auto sll_h = sidelobe_level_db(pattern, Cut::H);
    if (sll_e && sll_h)
        metrics.sll_db = std::max(*sll_e, *sll_h);
    else if (sll_e)
        metrics.sll_db = *sll_e;
    else if (sll_h)
        metrics.sll_db = *sll_h;
    metrics.peak_theta_deg = pattern.peak.theta_deg;
    metrics.peak_phi_deg = pattern.peak.phi_deg;
    return metrics;
}

ArrayMetrics array_metrics(const PatchGeometry& geo, const ArrayLayout& layout,
                           const AngularGrid& grid, double efficiency, bool obliquity) {
    return pattern_metrics(total_pattern(geo, layout, grid, obliquity), efficiency);
}

double grating_lobe_margin(const ArrayLayout& layout, double theta0_deg) {
    layout.validate();
    if (!std::isfinite(theta0_deg) || theta0_deg < 0.0 || theta0_deg > 90.0)
        throw InvalidInput("theta0 must lie in [0, 90] degrees");
    const double limit = 1.0 / (1.0 + std::sin(deg_to_rad(theta0_deg)));
    return limit - std::max(layout.dx_lambda, layout.dy_lambda);
}

std::vector<ProgressionRow> paper_progression(const PatchGeometry& geo, double efficiency,
                                              double resonator_q, const AngularGrid& grid,
                                              double spacing_lambda) {
    geo.validate();
    if (!std::isfinite(spacing_lambda) || spacing_lambda <= 0.0)
        throw InvalidInput("spacing_lambda must be positive");

    // Matched-element reflection minimum, shared by every configuration built
    // from this element. Swept over +/- 7 % around resonance.
    const FeedModel feed = match_feed(geo, 50.0, resonator_q);
    const double f0 = resonant_frequency(geo);
    const FrequencyResponse sweep = s11_sweep(feed, geo, 0.93 * f0, 1.07 * f0, 401);
    const double s11_min = s11_db(min_s11(sweep).s11);

    struct Config {
        const char* name;
        int n;
        double reference_gain_db;
    };
    // Published reference gains for the element and its 2x2 / 4x4 / 8x8
    // uniform half-wave progressions.
    constexpr Config configs[] = {
        {"element", 1, 7.046}, {"2x2", 2, 12.9}, {"4x4", 4, 18.7}, {"8x8", 8, 21.0}};

    std::vector<ProgressionRow> rows;
    rows.reserve(4);
    for (const Config& cfg : configs) {
        const FarFieldPattern pattern =
            (cfg.n == 1)
                ? sample_pattern(geo, grid)
                : total_pattern(geo, uniform_layout(cfg.n, cfg.n, spacing_lambda, spacing_lambda),
                                grid);
        ProgressionRow row;
        row.config = cfg.name;
        row.model_gain_dbi = gain_dbi(pattern, efficiency);
        row.paper_gain_db = cfg.reference_gain_db;
        row.delta_db = row.model_gain_dbi - row.paper_gain_db;
        row.model_s11_min_db = s11_min;
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace kapatch
