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

#include "kapatch/circuit.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "kapatch/constants.hpp"

namespace kapatch {

const char* to_string(FeedKind kind) { return kind == FeedKind::Edge ? "edge" : "inset"; }

FeedKind feed_kind_from_string(const std::string& text) {
    if (text == "edge") return FeedKind::Edge;
    if (text == "inset") return FeedKind::Inset;
    throw InvalidInput("unknown feed kind '" + text + "' (expected 'edge' or 'inset')");
}

void FeedModel::validate(double length_mm) const {
    if (!std::isfinite(length_mm) || length_mm <= 0.0)
        throw InvalidInput("feed validation needs a positive patch length");
    if (!std::isfinite(inset_depth_mm) || inset_depth_mm < 0.0 || inset_depth_mm >= length_mm)
        throw InvalidInput("feed inset_depth_mm must lie in [0, patch length)");
    if (kind == FeedKind::Edge && inset_depth_mm != 0.0)
        throw InvalidInput("an edge feed must have zero inset depth");
    if (!std::isfinite(resonator_q) || resonator_q <= 0.0)
        throw InvalidInput("feed resonator_q must be positive");
    if (!std::isfinite(edge_resistance_ohm) || edge_resistance_ohm <= 0.0)
        throw InvalidInput("feed edge_resistance_ohm must be positive");
}

double slot_conductance(const PatchGeometry& geo) {
    geo.validate();
    const double lambda0 = wavelength_mm(geo.f0_hz);
    const double k0h = wavenumber_per_mm(geo.f0_hz) * geo.substrate.height_mm;
    return geo.width_mm / (120.0 * lambda0) * (1.0 - k0h * k0h / 24.0);
}

bool electrically_thick(const PatchGeometry& geo) {
    geo.validate();
    return geo.substrate.height_mm / wavelength_mm(geo.f0_hz) >= 0.1;
}

double edge_resistance(const PatchGeometry& geo) {
    const double g1 = slot_conductance(geo);
    if (!(g1 > 0.0))
        throw DegenerateInput(
            "slot conductance is non-positive; the substrate is far too thick for the "
            "thin-substrate slot model");
    return 1.0 / (2.0 * g1);
}

double inset_impedance(double edge_resistance_ohm, double inset_depth_mm, double length_mm) {
    if (!std::isfinite(edge_resistance_ohm) || edge_resistance_ohm <= 0.0)
        throw InvalidInput("edge_resistance_ohm must be positive");
    if (!std::isfinite(length_mm) || length_mm <= 0.0)
        throw InvalidInput("length_mm must be positive");
    if (!std::isfinite(inset_depth_mm) || inset_depth_mm < 0.0)
        throw InvalidInput("inset_depth_mm must be >= 0");
    if (inset_depth_mm >= 0.5 * length_mm)
        throw DegenerateInput(
            "inset depth at or beyond the patch midline; the cos^2 taper is no longer "
            "monotone there");
    const double c = std::cos(std::numbers::pi * inset_depth_mm / length_mm);
    return edge_resistance_ohm * c * c;
}

FeedModel edge_feed(const PatchGeometry& geo, double resonator_q) {
    FeedModel feed{FeedKind::Edge, 0.0, resonator_q, edge_resistance(geo)};
    feed.validate(geo.length_mm);
    return feed;
}

FeedModel match_feed(const PatchGeometry& geo, double target_z_ohm, double resonator_q) {
    if (!std::isfinite(target_z_ohm) || target_z_ohm <= 0.0)
        throw InvalidInput("match target impedance must be positive");
    if (!std::isfinite(resonator_q) || resonator_q <= 0.0)
        throw InvalidInput("resonator_q must be positive");
    const double redge = edge_resistance(geo);  // validates geo
    if (target_z_ohm > redge)
        throw Unmatchable("target impedance exceeds the resonant edge resistance of " +
                          std::to_string(redge) + " ohm; an inset can only reduce it");
    if (target_z_ohm == redge) return FeedModel{FeedKind::Edge, 0.0, resonator_q, redge};

    // R(y0) falls monotonically from redge at y0 = 0 toward 0 at the midline,
    // so bisection on [0, L/2) always brackets the target.
    double lo = 0.0;
    double hi = 0.5 * geo.length_mm;
    double y0 = 0.0;
    for (int iteration = 0; iteration < 200; ++iteration) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;  // interval exhausted at double precision
        const double rin = inset_impedance(redge, mid, geo.length_mm);
        y0 = mid;
        if (std::abs(rin - target_z_ohm) < 1e-9) break;
        if (rin > target_z_ohm)
            lo = mid;
        else
            hi = mid;
    }
    return FeedModel{FeedKind::Inset, y0, resonator_q, redge};
}

std::complex<double> input_impedance(const FeedModel& feed, const PatchGeometry& geo,
                                     double f_hz) {
    geo.validate();
    feed.validate(geo.length_mm);
    if (!std::isfinite(f_hz) || f_hz <= 0.0) throw InvalidInput("f_hz must be positive");
    const double rin = inset_impedance(feed.edge_resistance_ohm, feed.inset_depth_mm,
                                       geo.length_mm);
    const double f0 = resonant_frequency(geo);
    const double detuning = f_hz / f0 - f0 / f_hz;
    return rin / std::complex<double>(1.0, feed.resonator_q * detuning);
}

std::complex<double> reflection(std::complex<double> zin_ohm, double z0_ohm) {
    if (!std::isfinite(z0_ohm) || z0_ohm <= 0.0)
        throw InvalidInput("reference impedance must be positive");
    if (!std::isfinite(zin_ohm.real()) || !std::isfinite(zin_ohm.imag()))
        throw InvalidInput("input impedance must be finite");
    return (zin_ohm - z0_ohm) / (zin_ohm + z0_ohm);
}

double s11_db(const std::complex<double>& gamma) {
    const double magnitude = std::abs(gamma);
    if (!(magnitude > 0.0)) return s11_floor_db;
    return std::max(20.0 * std::log10(magnitude), s11_floor_db);
}

FrequencyResponse s11_sweep(const FeedModel& feed, const PatchGeometry& geo, double f_start_hz,
                            double f_stop_hz, int n_points, double z0_ohm) {
    if (!std::isfinite(f_start_hz) || f_start_hz <= 0.0)
        throw InvalidInput("sweep f_start_hz must be positive");
    if (!std::isfinite(f_stop_hz) || f_stop_hz <= 0.0)
        throw InvalidInput("sweep f_stop_hz must be positive");
    if (f_start_hz >= f_stop_hz) throw InvalidRange("sweep requires f_start < f_stop");
    if (n_points < 2) throw InvalidRange("sweep requires at least 2 points");

    FrequencyResponse response;
    response.ref_impedance_ohm = z0_ohm;
    response.points.reserve(static_cast<std::size_t>(n_points));
    const double df = (f_stop_hz - f_start_hz) / static_cast<double>(n_points - 1);
    for (int i = 0; i < n_points; ++i) {
        const double f = (i == n_points - 1) ? f_stop_hz
                                             : f_start_hz + static_cast<double>(i) * df;
        response.points.push_back({f, reflection(input_impedance(feed, geo, f), z0_ohm)});
    }
    return response;
}

const SweepPoint& min_s11(const FrequencyResponse& response) {
    if (response.points.empty()) throw InvalidInput("cannot take the minimum of an empty sweep");
    std::size_t best = 0;
    double best_mag = std::abs(response.points[0].s11);
    for (std::size_t i = 1; i < response.points.size(); ++i) {
        const double mag = std::abs(response.points[i].s11);
        if (mag < best_mag) {
            best_mag = mag;
            best = i;
        }
    }
    return response.points[best];
}

}  // namespace kapatch
