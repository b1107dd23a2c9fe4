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

#include "kapatch/io.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <string_view>

#include "json.hpp"

namespace kapatch {

namespace {

using ordered_json = nlohmann::ordered_json;

/// Parses one strict double (whole token must be consumed).
double parse_double(std::string_view token, const char* what) {
    double value = 0.0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
        throw InvalidInput(std::string("cannot parse ") + what + " from '" +
                           std::string(token) + "'");
    return value;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(sep, start);
        if (pos == std::string_view::npos) {
            parts.push_back(line.substr(start));
            return parts;
        }
        parts.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
}

/// Iterates non-empty lines; strips one trailing '\r' for tolerance.
std::vector<std::string_view> lines_of(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t pos = text.find('\n', start);
        if (pos == std::string_view::npos) pos = text.size();
        std::string_view line = text.substr(start, pos - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (!line.empty()) lines.push_back(line);
        start = pos + 1;
    }
    return lines;
}

ordered_json parse_json(const std::string& text, const char* what) {
    try {
        return ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("malformed ") + what + " JSON: " + e.what());
    }
}

double json_number(const ordered_json& j, const char* key, const char* what) {
    try {
        return j.at(key).get<double>();
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string(what) + ": bad or missing key '" + key + "': " + e.what());
    }
}

std::string json_string(const ordered_json& j, const char* key, const char* what) {
    try {
        return j.at(key).get<std::string>();
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string(what) + ": bad or missing key '" + key + "': " + e.what());
    }
}

double floored_db(double linear) {
    if (!(linear > 0.0)) return pattern_floor_db;
    return std::max(10.0 * std::log10(linear), pattern_floor_db);
}

void check_response(const FrequencyResponse& response, const char* what) {
    if (response.points.empty()) throw InvalidInput(std::string(what) + ": no data points");
    double previous = 0.0;
    for (const SweepPoint& p : response.points) {
        if (!std::isfinite(p.f_hz) || p.f_hz <= previous)
            throw InvalidInput(std::string(what) + ": frequencies must be strictly ascending");
        if (std::abs(p.s11) > 1.0 + 1e-9)
            throw InvalidInput(std::string(what) + ": |s11| exceeds 1 (non-passive data)");
        previous = p.f_hz;
    }
}

}  // namespace

std::string format_double(double value) {
    std::array<char, 32> buffer{};
    const auto [ptr, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
    return std::string(buffer.data(), ptr);
}

// --- patch geometry ---------------------------------------------------------

std::string geometry_to_json(const PatchGeometry& geo) {
    geo.validate();
    ordered_json j;
    j["f0_hz"] = geo.f0_hz;
    j["w_mm"] = geo.width_mm;
    j["l_mm"] = geo.length_mm;
    j["eps_eff"] = geo.eff_permittivity;
    j["dl_mm"] = geo.length_extension_mm;
    j["leff_mm"] = geo.eff_length_mm;
    j["lg_mm"] = geo.ground_length_mm;
    j["wg_mm"] = geo.ground_width_mm;
    j["substrate"] = ordered_json{{"eps_r", geo.substrate.epsilon_r},
                                  {"h_mm", geo.substrate.height_mm},
                                  {"tan_d", geo.substrate.loss_tangent},
                                  {"label", geo.substrate.label}};
    j["width_formula"] = to_string(geo.width_formula);
    return j.dump(2) + "\n";
}

PatchGeometry geometry_from_json(const std::string& text) {
    const ordered_json j = parse_json(text, "geometry");
    PatchGeometry geo;
    geo.f0_hz = json_number(j, "f0_hz", "geometry");
    geo.width_mm = json_number(j, "w_mm", "geometry");
    geo.length_mm = json_number(j, "l_mm", "geometry");
    geo.eff_permittivity = json_number(j, "eps_eff", "geometry");
    geo.length_extension_mm = json_number(j, "dl_mm", "geometry");
    geo.eff_length_mm = json_number(j, "leff_mm", "geometry");
    geo.ground_length_mm = json_number(j, "lg_mm", "geometry");
    geo.ground_width_mm = json_number(j, "wg_mm", "geometry");
    if (!j.contains("substrate") || !j["substrate"].is_object())
        throw InvalidInput("geometry: bad or missing key 'substrate'");
    const ordered_json& s = j["substrate"];
    geo.substrate.epsilon_r = json_number(s, "eps_r", "geometry substrate");
    geo.substrate.height_mm = json_number(s, "h_mm", "geometry substrate");
    geo.substrate.loss_tangent = json_number(s, "tan_d", "geometry substrate");
    geo.substrate.label = json_string(s, "label", "geometry substrate");
    geo.width_formula = width_formula_from_string(json_string(j, "width_formula", "geometry"));
    geo.validate();
    return geo;
}

// --- feed model ---------------------------------------------------------------

std::string feed_to_json(const FeedModel& feed) {
    ordered_json j;
    j["kind"] = to_string(feed.kind);
    j["y0_mm"] = feed.inset_depth_mm;
    j["q"] = feed.resonator_q;
    j["edge_resistance_ohm"] = feed.edge_resistance_ohm;
    return j.dump(2) + "\n";
}

FeedModel feed_from_json(const std::string& text) {
    const ordered_json j = parse_json(text, "feed");
    FeedModel feed;
    feed.kind = feed_kind_from_string(json_string(j, "kind", "feed"));
    feed.inset_depth_mm = json_number(j, "y0_mm", "feed");
    feed.resonator_q = json_number(j, "q", "feed");
    feed.edge_resistance_ohm = json_number(j, "edge_resistance_ohm", "feed");
    return feed;
}

// --- array layout ---------------------------------------------------------------

std::string layout_to_json(const ArrayLayout& layout) {
    layout.validate();
    ordered_json j;
    j["nx"] = layout.nx;
    j["ny"] = layout.ny;
    j["dx_lambda"] = layout.dx_lambda;
    j["dy_lambda"] = layout.dy_lambda;
    if (!layout.excitations.empty()) {
        ordered_json arr = ordered_json::array();
        for (const auto& a : layout.excitations)
            arr.push_back(ordered_json{{"re", a.real()}, {"im", a.imag()}});
        j["excitations"] = std::move(arr);
    }
    return j.dump(2) + "\n";
}

ArrayLayout layout_from_json(const std::string& text) {
    const ordered_json j = parse_json(text, "layout");
    ArrayLayout layout;
    try {
        layout.nx = j.at("nx").get<int>();
        layout.ny = j.at("ny").get<int>();
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("layout: bad or missing nx/ny: ") + e.what());
    }
    layout.dx_lambda = json_number(j, "dx_lambda", "layout");
    layout.dy_lambda = json_number(j, "dy_lambda", "layout");
    if (j.contains("excitations")) {
        if (!j["excitations"].is_array())
            throw InvalidInput("layout: 'excitations' must be an array");
        for (const auto& entry : j["excitations"])
            layout.excitations.emplace_back(json_number(entry, "re", "layout excitation"),
                                            json_number(entry, "im", "layout excitation"));
    }
    layout.validate();
    return layout;
}

// --- array metrics ---------------------------------------------------------------

std::string metrics_to_json(const ArrayMetrics& metrics) {
    ordered_json j;
    j["gain_dbi"] = metrics.gain_dbi;
    j["hpbw_e_deg"] = metrics.hpbw_e_deg;
    j["hpbw_h_deg"] = metrics.hpbw_h_deg;
    if (metrics.sll_db)
        j["sll_db"] = *metrics.sll_db;
    else
        j["sll_db"] = nullptr;
    j["peak_theta_deg"] = metrics.peak_theta_deg;
    j["peak_phi_deg"] = metrics.peak_phi_deg;
    return j.dump(2) + "\n";
}

ArrayMetrics metrics_from_json(const std::string& text) {
    const ordered_json j = parse_json(text, "metrics");
    ArrayMetrics metrics;
    metrics.gain_dbi = json_number(j, "gain_dbi", "metrics");
    metrics.hpbw_e_deg = json_number(j, "hpbw_e_deg", "metrics");
    metrics.hpbw_h_deg = json_number(j, "hpbw_h_deg", "metrics");
    if (!j.contains("sll_db"))
        throw InvalidInput("metrics: missing key 'sll_db'");
    if (!j["sll_db"].is_null()) metrics.sll_db = json_number(j, "sll_db", "metrics");
    metrics.peak_theta_deg = json_number(j, "peak_theta_deg", "metrics");
    metrics.peak_phi_deg = json_number(j, "peak_phi_deg", "metrics");
    return metrics;
}

// --- Touchstone ---------------------------------------------------------------

std::string sweep_to_touchstone(const FrequencyResponse& response) {
    check_response(response, "touchstone writer");
    std::string out = "# HZ S RI R " + format_double(response.ref_impedance_ohm) + "\n";
    char line[128];
    for (const SweepPoint& p : response.points) {
        std::snprintf(line, sizeof line, "%.16e %.16e %.16e\n", p.f_hz, p.s11.real(),
                      p.s11.imag());
        out += line;
    }
    return out;
}

FrequencyResponse sweep_from_touchstone(const std::string& text) {
    FrequencyResponse response;
    bool have_header = false;
    for (std::string_view line : lines_of(text)) {
        if (line.front() == '!') continue;  // comment
        if (line.front() == '#') {
            if (have_header) throw InvalidInput("touchstone: duplicate option line");
            std::istringstream iss{std::string(line)};
            std::string hash, unit, param, fmt, r, z0;
            iss >> hash >> unit >> param >> fmt >> r >> z0;
            auto upper = [](std::string s) {
                std::transform(s.begin(), s.end(), s.begin(),
                               [](unsigned char c) { return std::toupper(c); });
                return s;
            };
            if (upper(unit) != "HZ" || upper(param) != "S" || upper(fmt) != "RI" ||
                upper(r) != "R" || z0.empty())
                throw InvalidInput("touchstone: expected option line '# HZ S RI R <z0>'");
            response.ref_impedance_ohm = parse_double(z0, "touchstone reference impedance");
            have_header = true;
            continue;
        }
        std::istringstream iss{std::string(line)};
        std::string f, re, im, extra;
        iss >> f >> re >> im;
        if (iss >> extra) throw InvalidInput("touchstone: expected 'f re im' data lines");
        if (f.empty() || re.empty() || im.empty())
            throw InvalidInput("touchstone: expected 'f re im' data lines");
        response.points.push_back({parse_double(f, "touchstone frequency"),
                                   {parse_double(re, "touchstone real part"),
                                    parse_double(im, "touchstone imaginary part")}});
    }
    if (!have_header) throw InvalidInput("touchstone: missing '#' option line");
    check_response(response, "touchstone");
    return response;
}

// --- sweep CSV ---------------------------------------------------------------

namespace {
constexpr const char* sweep_csv_header = "f_hz,s11_db,s11_re,s11_im";
constexpr const char* pattern_csv_header = "theta_deg,phi_deg,u_linear,gain_dbi";
constexpr const char* cut_csv_header = "angle_deg,gain_dbi,normalized_db";
}  // namespace

std::string sweep_to_csv(const FrequencyResponse& response) {
    check_response(response, "sweep CSV writer");
    std::string out = std::string(sweep_csv_header) + "\n";
    for (const SweepPoint& p : response.points) {
        out += format_double(p.f_hz);
        out += ',';
        out += format_double(s11_db(p.s11));
        out += ',';
        out += format_double(p.s11.real());
        out += ',';
        out += format_double(p.s11.imag());
        out += '\n';
    }
    return out;
}

FrequencyResponse sweep_from_csv(const std::string& text) {
    const auto lines = lines_of(text);
    if (lines.empty() || lines[0] != sweep_csv_header)
        throw InvalidInput(std::string("sweep CSV: first line must be '") + sweep_csv_header +
                           "'");
    FrequencyResponse response;  // the CSV does not carry z0; 50 ohm assumed
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto cols = split(lines[i], ',');
        if (cols.size() != 4) throw InvalidInput("sweep CSV: expected 4 columns per row");
        SweepPoint p;
        p.f_hz = parse_double(cols[0], "sweep CSV f_hz");
        parse_double(cols[1], "sweep CSV s11_db");  // derived column, validated only
        p.s11 = {parse_double(cols[2], "sweep CSV s11_re"),
                 parse_double(cols[3], "sweep CSV s11_im")};
        response.points.push_back(p);
    }
    check_response(response, "sweep CSV");
    return response;
}

// --- pattern CSV ---------------------------------------------------------------

std::string pattern_to_csv(const FarFieldPattern& pattern, double efficiency) {
    if (!std::isfinite(efficiency) || efficiency <= 0.0 || efficiency > 1.0)
        throw InvalidEfficiency("radiation efficiency must lie in (0, 1]");
    if (!(pattern.peak.u_max > 0.0) || !(pattern.prad > 0.0))
        throw ZeroPattern("cannot serialize a pattern with no power");
    const double gain_scale = 4.0 * std::numbers::pi * efficiency / pattern.prad;
    std::string out = std::string(pattern_csv_header) + "\n";
    for (std::size_t i = 0; i < pattern.grid.n_theta(); ++i) {
        for (std::size_t j = 0; j < pattern.grid.n_phi(); ++j) {
            const double u = pattern.at(i, j);
            out += format_double(pattern.grid.theta_deg(i));
            out += ',';
            out += format_double(pattern.grid.phi_deg(j));
            out += ',';
            out += format_double(u / pattern.peak.u_max);
            out += ',';
            out += format_double(floored_db(u * gain_scale));
            out += '\n';
        }
    }
    return out;
}

std::vector<PatternCsvRow> pattern_rows_from_csv(const std::string& text) {
    const auto lines = lines_of(text);
    if (lines.empty() || lines[0] != pattern_csv_header)
        throw InvalidInput(std::string("pattern CSV: first line must be '") +
                           pattern_csv_header + "'");
    std::vector<PatternCsvRow> rows;
    rows.reserve(lines.size() - 1);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto cols = split(lines[i], ',');
        if (cols.size() != 4) throw InvalidInput("pattern CSV: expected 4 columns per row");
        rows.push_back({parse_double(cols[0], "pattern CSV theta_deg"),
                        parse_double(cols[1], "pattern CSV phi_deg"),
                        parse_double(cols[2], "pattern CSV u_linear"),
                        parse_double(cols[3], "pattern CSV gain_dbi")});
    }
    return rows;
}

// --- cut CSV ---------------------------------------------------------------

std::string cut_to_csv(const FarFieldPattern& pattern, Cut cut, double efficiency) {
    if (!std::isfinite(efficiency) || efficiency <= 0.0 || efficiency > 1.0)
        throw InvalidEfficiency("radiation efficiency must lie in (0, 1]");
    if (!(pattern.peak.u_max > 0.0) || !(pattern.prad > 0.0))
        throw ZeroPattern("cannot serialize a pattern with no power");
    const PatternCut slice = principal_cut(pattern, cut);
    const double gain_scale = 4.0 * std::numbers::pi * efficiency / pattern.prad;
    std::string out = std::string(cut_csv_header) + "\n";
    for (std::size_t i = 0; i < slice.u.size(); ++i) {
        out += format_double(static_cast<double>(i) * slice.step_deg);
        out += ',';
        out += format_double(floored_db(slice.u[i] * gain_scale));
        out += ',';
        out += format_double(floored_db(slice.u[i] / pattern.peak.u_max));
        out += '\n';
    }
    return out;
}

std::vector<CutCsvRow> cut_rows_from_csv(const std::string& text) {
    const auto lines = lines_of(text);
    if (lines.empty() || lines[0] != cut_csv_header)
        throw InvalidInput(std::string("cut CSV: first line must be '") + cut_csv_header + "'");
    std::vector<CutCsvRow> rows;
    rows.reserve(lines.size() - 1);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto cols = split(lines[i], ',');
        if (cols.size() != 3) throw InvalidInput("cut CSV: expected 3 columns per row");
        rows.push_back({parse_double(cols[0], "cut CSV angle_deg"),
                        parse_double(cols[1], "cut CSV gain_dbi"),
                        parse_double(cols[2], "cut CSV normalized_db")});
    }
    return rows;
}

// --- design progression ---------------------------------------------------------

std::string progression_table(const std::vector<ProgressionRow>& rows) {
    char line[160];
    std::snprintf(line, sizeof line, "%-9s%14s%15s%10s%18s\n", "config", "model_gain_dbi",
                  "paper_gain_db", "delta_db", "model_s11_min_db");
    std::string out = line;
    for (const ProgressionRow& row : rows) {
        std::snprintf(line, sizeof line, "%-9s%14.3f%15.3f%10.3f%18.3f\n", row.config.c_str(),
                      row.model_gain_dbi, row.paper_gain_db, row.delta_db, row.model_s11_min_db);
        out += line;
    }
    return out;
}

std::string progression_to_json(const std::vector<ProgressionRow>& rows) {
    ordered_json arr = ordered_json::array();
    for (const ProgressionRow& row : rows) {
        ordered_json j;
        j["config"] = row.config;
        j["model_gain_dbi"] = row.model_gain_dbi;
        j["paper_gain_db"] = row.paper_gain_db;
        j["delta_db"] = row.delta_db;
        j["model_s11_min_db"] = row.model_s11_min_db;
        arr.push_back(std::move(j));
    }
    return arr.dump(2) + "\n";
}

std::vector<ProgressionRow> progression_from_json(const std::string& text) {
    const ordered_json arr = parse_json(text, "progression");
    if (!arr.is_array()) throw InvalidInput("progression: expected a JSON array");
    std::vector<ProgressionRow> rows;
    rows.reserve(arr.size());
    for (const auto& j : arr) {
        ProgressionRow row;
        row.config = json_string(j, "config", "progression");
        row.model_gain_dbi = json_number(j, "model_gain_dbi", "progression");
        row.paper_gain_db = json_number(j, "paper_gain_db", "progression");
        row.delta_db = json_number(j, "delta_db", "progression");
        row.model_s11_min_db = json_number(j, "model_s11_min_db", "progression");
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace kapatch
