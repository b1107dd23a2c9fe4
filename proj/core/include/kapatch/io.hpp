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

#ifndef KAPATCH_IO_HPP
#define KAPATCH_IO_HPP

#include <string>
#include <vector>

#include "kapatch/array.hpp"
#include "kapatch/circuit.hpp"
#include "kapatch/geometry.hpp"
#include "kapatch/radiation.hpp"

// Serialization layer. Every writer produces text whose numbers are the
// shortest decimal representation that parses back to the identical double
// (or a fixed 17-significant-digit form for Touchstone), so each format
// round-trips losslessly through its reader. Readers validate what they
// parse and throw InvalidInput on malformed or inconsistent documents.

namespace kapatch {

/// Shortest decimal text that round-trips to exactly the same double.
std::string format_double(double value);

/// dB floor used in pattern/cut CSV columns so exact nulls stay finite.
inline constexpr double pattern_floor_db = -300.0;

// --- patch geometry, JSON -------------------------------------------------

std::string geometry_to_json(const PatchGeometry& geo);
PatchGeometry geometry_from_json(const std::string& text);

// --- feed model, JSON -----------------------------------------------------

std::string feed_to_json(const FeedModel& feed);
FeedModel feed_from_json(const std::string& text);

// --- array layout, JSON ---------------------------------------------------

std::string layout_to_json(const ArrayLayout& layout);
ArrayLayout layout_from_json(const std::string& text);

// --- array metrics, JSON --------------------------------------------------

std::string metrics_to_json(const ArrayMetrics& metrics);
ArrayMetrics metrics_from_json(const std::string& text);

// --- one-port sweep, Touchstone and CSV -------------------------------------

/// Touchstone v1 one-port file: "# HZ S RI R <z0>" then "f re im" lines in
/// ascending frequency, 17 significant digits.
std::string sweep_to_touchstone(const FrequencyResponse& response);
FrequencyResponse sweep_from_touchstone(const std::string& text);

/// CSV with header "f_hz,s11_db,s11_re,s11_im". The dB column is derived
/// (floored at s11_floor_db); the reference impedance is not carried and the
/// reader assumes 50 ohm.
std::string sweep_to_csv(const FrequencyResponse& response);
FrequencyResponse sweep_from_csv(const std::string& text);

// --- sampled patterns, CSV --------------------------------------------------

struct PatternCsvRow {
    double theta_deg = 0.0;
    double phi_deg = 0.0;
    double u_linear = 0.0;  ///< intensity normalized to the pattern maximum
    double gain_dbi = 0.0;  ///< 10 log10(4 pi U e / prad), floored
};

/// CSV with header "theta_deg,phi_deg,u_linear,gain_dbi", row-major with
/// theta as the outer loop.
std::string pattern_to_csv(const FarFieldPattern& pattern, double efficiency = 1.0);
std::vector<PatternCsvRow> pattern_rows_from_csv(const std::string& text);

struct CutCsvRow {
    double angle_deg = 0.0;
    double gain_dbi = 0.0;
    double normalized_db = 0.0;  ///< 10 log10(U / U_max-of-pattern), floored
};

/// CSV with header "angle_deg,gain_dbi,normalized_db" along one principal cut.
std::string cut_to_csv(const FarFieldPattern& pattern, Cut cut, double efficiency = 1.0);
std::vector<CutCsvRow> cut_rows_from_csv(const std::string& text);

// --- design progression -----------------------------------------------------

/// Aligned fixed-point text table (for eyes), one line per configuration.
std::string progression_table(const std::vector<ProgressionRow>& rows);

/// Lossless JSON list of rows.
std::string progression_to_json(const std::vector<ProgressionRow>& rows);
std::vector<ProgressionRow> progression_from_json(const std::string& text);

}  // namespace kapatch

#endif  // KAPATCH_IO_HPP
