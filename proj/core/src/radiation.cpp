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

#include "kapatch/radiation.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "kapatch/constants.hpp"

namespace kapatch {

namespace {

double sinc(double x) {
    if (x == 0.0) return 1.0;
    return std::sin(x) / x;
}

std::size_t intervals_in(double span_deg, double step_deg, const char* axis) {
    if (!std::isfinite(step_deg) || step_deg <= 0.0)
        throw InvalidInput(std::string(axis) + " step must be positive and finite");
    const auto n = static_cast<std::size_t>(std::llround(span_deg / step_deg));
    if (n < 1 || std::abs(static_cast<double>(n) * step_deg - span_deg) > 1e-9 * span_deg)
        throw InvalidInput(std::string(axis) + " step must divide the span exactly");
    return n;
}

/// Composite Simpson weights for n_intervals uniform intervals (n+1 nodes,
/// unit spacing). Odd interval counts blend Simpson with a 3/8-rule tail so
/// the scheme keeps fourth-order accuracy; a single interval degrades to the
/// trapezoid, the best available there.
std::vector<double> simpson_weights(std::size_t n_intervals) {
    std::vector<double> w(n_intervals + 1, 0.0);
    if (n_intervals == 1) {
        w[0] = w[1] = 0.5;
        return w;
    }
    const std::size_t m = (n_intervals % 2 == 0) ? n_intervals : n_intervals - 3;
    if (m >= 2) {
        w[0] += 1.0 / 3.0;
        w[m] += 1.0 / 3.0;
        for (std::size_t k = 1; k < m; k += 2) w[k] += 4.0 / 3.0;
        for (std::size_t k = 2; k < m; k += 2) w[k] += 2.0 / 3.0;
    }
    if (m != n_intervals) {
        w[m] += 3.0 / 8.0;
        w[m + 1] += 9.0 / 8.0;
        w[m + 2] += 9.0 / 8.0;
        w[m + 3] += 3.0 / 8.0;
    }
    return w;
}

/// Hemisphere integral of U sin(theta): Simpson in theta, rectangle rule in
/// the periodic phi direction. Fixed summation order keeps results
/// byte-reproducible across runs.
double integrate_intensity(const FarFieldPattern& p) {
    const std::size_t nt = p.grid.n_theta();
    const std::size_t np = p.grid.n_phi();
    const std::vector<double> wt = simpson_weights(nt - 1);
    double total = 0.0;
    for (std::size_t i = 0; i < nt; ++i) {
        double ring = 0.0;
        for (std::size_t j = 0; j < np; ++j) ring += p.intensity[i * np + j];
        total += wt[i] * std::sin(p.grid.theta_rad(i)) * ring;
    }
    return total * deg_to_rad(p.grid.theta_step_deg()) * deg_to_rad(p.grid.phi_step_deg());
}

std::size_t argmax(const std::vector<double>& values) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < values.size(); ++i)
        if (values[i] > values[best]) best = i;
    return best;
}

double hpbw_of_cut(const PatternCut& cut) {
    const std::vector<double>& u = cut.u;
    const std::size_t peak = argmax(u);
    const double half = 0.5 * u[peak];

    double right = std::numeric_limits<double>::quiet_NaN();
    for (std::size_t k = peak + 1; k < u.size(); ++k) {
        if (u[k] < half) {
            const double t = (u[k - 1] - half) / (u[k - 1] - u[k]);
            right = (static_cast<double>(k - 1) + t) * cut.step_deg;
            break;
        }
    }
    if (std::isnan(right)) return hpbw_no_crossing_deg;
    if (peak == 0) return 2.0 * right;  // broadside peak: symmetric main lobe

    double left = std::numeric_limits<double>::quiet_NaN();
    for (std::size_t k = peak; k-- > 0;) {
        if (u[k] < half) {
            const double t = (u[k + 1] - half) / (u[k + 1] - u[k]);
            left = (static_cast<double>(k + 1) - t) * cut.step_deg;
            break;
        }
    }
    if (std::isnan(left)) return hpbw_no_crossing_deg;
    return right - left;
}

}  // namespace

AngularGrid::AngularGrid(double theta_step_deg, double phi_step_deg)
    : theta_step_(theta_step_deg),
      phi_step_(phi_step_deg),
      n_theta_(intervals_in(90.0, theta_step_deg, "theta") + 1),
      n_phi_(intervals_in(360.0, phi_step_deg, "phi")) {}

double AngularGrid::theta_rad(std::size_t i) const { return deg_to_rad(theta_deg(i)); }
double AngularGrid::phi_rad(std::size_t j) const { return deg_to_rad(phi_deg(j)); }

double element_intensity(const PatchGeometry& geo, double theta_rad, double phi_rad,
                         bool obliquity) {
    const double k0 = wavenumber_per_mm(geo.f0_hz);
    const double st = std::sin(theta_rad);
    const double ux = st * std::cos(phi_rad);
    const double uy = st * std::sin(phi_rad);
    double amplitude = sinc(0.5 * k0 * geo.width_mm * uy) *
                       sinc(0.5 * k0 * geo.substrate.height_mm * ux) *
                       std::cos(0.5 * k0 * geo.eff_length_mm * ux);
    if (obliquity) amplitude *= std::cos(theta_rad);
    return amplitude * amplitude;
}

FarFieldPattern sample_function(const AngularGrid& grid,
                                const std::function<double(double, double)>& intensity,
                                double f_hz) {
    FarFieldPattern p;
    p.grid = grid;
    p.f_hz = f_hz;
    const std::size_t nt = grid.n_theta();
    const std::size_t np = grid.n_phi();
    p.intensity.resize(nt * np);
    p.peak = PatternPeak{-1.0, 0.0, 0.0, 0, 0};
    for (std::size_t i = 0; i < nt; ++i) {
        const double theta = grid.theta_rad(i);
        for (std::size_t j = 0; j < np; ++j) {
            const double u = intensity(theta, grid.phi_rad(j));
            if (!std::isfinite(u) || u < 0.0)
                throw InvalidInput("intensity samples must be finite and >= 0");
            p.intensity[i * np + j] = u;
            if (u > p.peak.u_max) p.peak = PatternPeak{u, grid.theta_deg(i), grid.phi_deg(j), i, j};
        }
    }
    p.prad = integrate_intensity(p);
    return p;
}

FarFieldPattern sample_pattern(const PatchGeometry& geo, const AngularGrid& grid,
                               bool obliquity) {
    geo.validate();
    return sample_function(
        grid,
        [&geo, obliquity](double theta, double phi) {
            return element_intensity(geo, theta, phi, obliquity);
        },
        geo.f0_hz);
}

double directivity_dbi(const FarFieldPattern& pattern) {
    if (!(pattern.peak.u_max > 0.0) || !(pattern.prad > 0.0))
        throw ZeroPattern("pattern holds no radiated power; directivity is undefined");
    return 10.0 * std::log10(4.0 * std::numbers::pi * pattern.peak.u_max / pattern.prad);
}

double gain_dbi(const FarFieldPattern& pattern, double efficiency) {
    if (!std::isfinite(efficiency) || efficiency <= 0.0 || efficiency > 1.0)
        throw InvalidEfficiency("radiation efficiency must lie in (0, 1]");
    return directivity_dbi(pattern) + 10.0 * std::log10(efficiency);
}

PatternCut principal_cut(const FarFieldPattern& pattern, Cut cut) {
    std::size_t j = 0;
    if (cut == Cut::H) {
        const double steps = 90.0 / pattern.grid.phi_step_deg();
        const auto jj = static_cast<std::size_t>(std::llround(steps));
        if (std::abs(static_cast<double>(jj) * pattern.grid.phi_step_deg() - 90.0) > 1e-9)
            throw InvalidInput("H cut requires phi = 90 deg to be a grid node");
        j = jj;
    }
    PatternCut result;
    result.plane = cut;
    result.step_deg = pattern.grid.theta_step_deg();
    result.u.reserve(pattern.grid.n_theta());
    for (std::size_t i = 0; i < pattern.grid.n_theta(); ++i) result.u.push_back(pattern.at(i, j));
    return result;
}

double hpbw(const FarFieldPattern& pattern, Cut cut) {
    return hpbw_of_cut(principal_cut(pattern, cut));
}

std::optional<double> sidelobe_level_db(const FarFieldPattern& pattern, Cut cut) {
    const PatternCut c = principal_cut(pattern, cut);
    const std::vector<double>& u = c.u;
    const std::size_t n = u.size();
    const std::size_t peak = argmax(u);
    const double u_max = u[peak];
    if (!(u_max > 0.0)) return std::nullopt;
    const double threshold = u_max / 100.0;

    // First local minima below threshold on each side delimit the main lobe.
    auto first_null_right = [&]() -> std::optional<std::size_t> {
        for (std::size_t k = peak + 1; k + 1 < n; ++k)
            if (u[k] < threshold && u[k] <= u[k - 1] && u[k] <= u[k + 1]) return k;
        return std::nullopt;
    };
    auto first_null_left = [&]() -> std::optional<std::size_t> {
        for (std::size_t k = peak; k-- > 1;)
            if (u[k] < threshold && u[k] <= u[k + 1] && u[k] <= u[k - 1]) return k;
        return std::nullopt;
    };

    double best = 0.0;
    bool found = false;
    if (const auto right = first_null_right()) {
        for (std::size_t k = *right + 1; k < n; ++k) {
            best = std::max(best, u[k]);
            found = true;
        }
    }
    if (peak > 0) {
        if (const auto left = first_null_left()) {
            for (std::size_t k = 0; k < *left; ++k) {
                best = std::max(best, u[k]);
                found = true;
            }
        }
    }
    if (!found || !(best > 0.0)) return std::nullopt;
    return 10.0 * std::log10(best / u_max);
}

}  // namespace kapatch
