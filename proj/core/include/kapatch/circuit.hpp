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

#ifndef KAPATCH_CIRCUIT_HPP
#define KAPATCH_CIRCUIT_HPP

#include <complex>
#include <vector>

#include "kapatch/geometry.hpp"

namespace kapatch {

enum class FeedKind { Edge, Inset };

const char* to_string(FeedKind kind);
FeedKind feed_kind_from_string(const std::string& text);

/// Lumped one-port feed attached to a patch: where the line taps the cavity
/// and how sharp the resonance is.
struct FeedModel {
    FeedKind kind = FeedKind::Edge;
    double inset_depth_mm = 0.0;        ///< y0, distance from the radiating edge; 0 for edge feed
    double resonator_q = 30.0;          ///< loaded quality factor of the parallel resonance, > 0
    double edge_resistance_ohm = 0.0;   ///< resonant resistance seen at the edge (y0 = 0), > 0

    /// Throws InvalidInput unless 0 <= inset_depth_mm < length_mm, q > 0 and
    /// edge_resistance_ohm > 0; an Edge feed must have zero inset depth.
    void validate(double length_mm) const;
};

/// One sampled reflection coefficient.
struct SweepPoint {
    double f_hz = 0.0;
    std::complex<double> s11;
};

/// One-port reflection data referenced to a fixed real impedance.
/// Invariants: points strictly ascending in frequency, |s11| <= 1.
struct FrequencyResponse {
    double ref_impedance_ohm = 50.0;
    std::vector<SweepPoint> points;
};

/// Reported S11 magnitudes are floored here so perfect matches stay finite.
inline constexpr double s11_floor_db = -100.0;

/// Self-conductance of one radiating slot,
/// G1 = (W / (120 lambda0)) * (1 - (k0 h)^2 / 24), in siemens.
double slot_conductance(const PatchGeometry& geo);

/// True when h / lambda0 >= 0.1: the thin-substrate circuit models degrade.
bool electrically_thick(const PatchGeometry& geo);

/// Resonant input resistance at the radiating edge, R = 1 / (2 G1). Mutual
/// conductance between the two slots is neglected.
double edge_resistance(const PatchGeometry& geo);

/// Resonant resistance seen by a feed inset y0 from the edge:
/// R(y0) = R_edge cos^2(pi y0 / L). Throws DegenerateInput for y0 >= L/2
/// where the law loses monotonicity.
double inset_impedance(double edge_resistance_ohm, double inset_depth_mm, double length_mm);

/// Feed placed directly at the radiating edge (y0 = 0).
FeedModel edge_feed(const PatchGeometry& geo, double resonator_q = 30.0);

/// Finds the inset depth whose resonant resistance equals target_z_ohm by
/// bisection on [0, L/2). Throws Unmatchable when the target exceeds the edge
/// resistance; a target exactly equal to it yields an Edge feed.
FeedModel match_feed(const PatchGeometry& geo, double target_z_ohm, double resonator_q = 30.0);

/// Narrowband parallel-resonator input impedance
/// Zin(f) = R / (1 + j Q (f/f0 - f0/f)) with f0 = resonant_frequency(geo).
std::complex<double> input_impedance(const FeedModel& feed, const PatchGeometry& geo, double f_hz);

/// Reflection coefficient against a real reference: (Zin - Z0) / (Zin + Z0).
std::complex<double> reflection(std::complex<double> zin_ohm, double z0_ohm);

/// 20 log10 |gamma|, floored at s11_floor_db.
double s11_db(const std::complex<double>& gamma);

/// Uniform frequency sweep of the reflection coefficient, n_points >= 2,
/// f_start < f_stop. The first and last points land exactly on the bounds.
FrequencyResponse s11_sweep(const FeedModel& feed, const PatchGeometry& geo, double f_start_hz,
                            double f_stop_hz, int n_points, double z0_ohm = 50.0);

/// Point of smallest |s11| (first such point on ties).
const SweepPoint& min_s11(const FrequencyResponse& response);

}  // namespace kapatch

#endif  // KAPATCH_CIRCUIT_HPP
