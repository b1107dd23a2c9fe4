// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "doctest.h"
#include "kapatch/circuit.hpp"
#include "kapatch/geometry.hpp"
#include "test_helpers.hpp"

using namespace kapatch;
using kapatch_test::design29;

namespace {

// Linearly interpolated fractional -10 dB bandwidth of a sweep around its minimum.
double fractional_bandwidth(const FrequencyResponse& resp, double f0_hz) {
    const double threshold = -10.0;
    std::vector<double> db(resp.points.size());
    for (std::size_t i = 0; i < resp.points.size(); ++i) db[i] = s11_db(resp.points[i].s11);
    std::size_t best = 0;
    for (std::size_t i = 1; i < db.size(); ++i)
        if (db[i] < db[best]) best = i;
    auto cross = [&](std::size_t from, int direction) {
        for (std::size_t k = from; k > 0 && k + 1 < db.size();
             k = static_cast<std::size_t>(static_cast<long long>(k) + direction)) {
            const std::size_t a = (direction < 0) ? k - 1 : k;
            const std::size_t b = a + 1;
            const bool brackets = (db[a] - threshold) * (db[b] - threshold) <= 0.0 && db[a] != db[b];
            if (brackets) {
                const double t = (threshold - db[a]) / (db[b] - db[a]);
                return resp.points[a].f_hz + t * (resp.points[b].f_hz - resp.points[a].f_hz);
            }
        }
        return -1.0;
    };
    const double f_lo = cross(best, -1);
    const double f_hi = cross(best, +1);
    REQUIRE(f_lo > 0.0);
    REQUIRE(f_hi > f_lo);
    return (f_hi - f_lo) / f0_hz;
}

}  // namespace

TEST_SUITE("circuit") {

TEST_CASE("slot conductance and edge resistance of the 29 GHz patch") {
    const PatchGeometry geo = design29();
    CHECK(slot_conductance(geo) == doctest::Approx(0.00326287445566904).epsilon(1e-12));
    CHECK(edge_resistance(geo) == doctest::Approx(153.239116856391).epsilon(1e-12));
    // Consistency: the two are exact reciprocals up to the factor 2.
    CHECK(edge_resistance(geo) * 2.0 * slot_conductance(geo) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("inset impedance follows the cosine-squared taper") {
    const double redge = 153.239116856391;
    const double length = 2.93566538070796;
    CHECK(inset_impedance(redge, 0.0, length) == redge);
    CHECK(inset_impedance(redge, 0.25 * length, length) ==
          doctest::Approx(0.5 * redge).epsilon(1e-12));
    CHECK_THROWS_AS(inset_impedance(redge, 0.5 * length, length), DegenerateInput);
    CHECK_THROWS_AS(inset_impedance(redge, length, length), DegenerateInput);
    CHECK_THROWS_AS(inset_impedance(-1.0, 0.1, length), InvalidInput);
    CHECK_THROWS_AS(inset_impedance(redge, -0.1, length), InvalidInput);
    CHECK_THROWS_AS(inset_impedance(redge, 0.1, 0.0), InvalidInput);
}

TEST_CASE("match_feed places the 50 ohm inset at the known depth") {
    const PatchGeometry geo = design29();
    const FeedModel feed = match_feed(geo, 50.0);
    CHECK(feed.kind == FeedKind::Inset);
    CHECK(feed.inset_depth_mm == doctest::Approx(0.899699109344212).epsilon(1e-9));
    CHECK(feed.inset_depth_mm / geo.length_mm == doctest::Approx(0.30647195530413).epsilon(1e-9));
    CHECK(feed.edge_resistance_ohm == doctest::Approx(153.239116856391).epsilon(1e-12));
    CHECK(feed.resonator_q == 30.0);
    // The bisection result reproduces the target to the stated tolerance.
    CHECK(std::abs(inset_impedance(feed.edge_resistance_ohm, feed.inset_depth_mm, geo.length_mm) -
                   50.0) < 1e-9);
}

TEST_CASE("match_feed edge cases: exact edge target, unmatchable, bad inputs") {
    const PatchGeometry geo = design29();
    const double redge = edge_resistance(geo);
    const FeedModel at_edge = match_feed(geo, redge);
    CHECK(at_edge.kind == FeedKind::Edge);
    CHECK(at_edge.inset_depth_mm == 0.0);
    CHECK_THROWS_AS(match_feed(geo, redge + 1.0), Unmatchable);
    CHECK_THROWS_AS(match_feed(geo, 0.0), InvalidInput);
    CHECK_THROWS_AS(match_feed(geo, -50.0), InvalidInput);
    CHECK_THROWS_AS(match_feed(geo, 50.0, 0.0), InvalidInput);
}

TEST_CASE("property: match_feed hits arbitrary reachable targets") {
    const PatchGeometry geo = design29();
    const double redge = edge_resistance(geo);
    std::mt19937 rng(0x5eed2u);
    std::uniform_real_distribution<double> target(1.0, redge - 1.0);
    for (int i = 0; i < 50; ++i) {
        const double z = target(rng);
        CAPTURE(z);
        const FeedModel feed = match_feed(geo, z);
        CHECK(std::abs(inset_impedance(redge, feed.inset_depth_mm, geo.length_mm) - z) < 1e-9);
    }
}

TEST_CASE("input impedance is purely resistive on tune and rotates off tune") {
    const PatchGeometry geo = design29();
    const FeedModel feed = match_feed(geo, 50.0);
    const double f0 = resonant_frequency(geo);
    const std::complex<double> on_tune = input_impedance(feed, geo, f0);
    CHECK(on_tune.real() == doctest::Approx(50.0).epsilon(1e-9));
    CHECK(std::abs(on_tune.imag()) < 1e-9);
    // At the detuning where Q * (f/f0 - f0/f) = 1 the impedance is R (1 - j) / 2.
    const double q = feed.resonator_q;
    const double ratio = 0.5 / q + std::sqrt(0.25 / (q * q) + 1.0);
    const std::complex<double> detuned = input_impedance(feed, geo, ratio * f0);
    CHECK(detuned.real() == doctest::Approx(25.0).epsilon(1e-9));
    CHECK(detuned.imag() == doctest::Approx(-25.0).epsilon(1e-9));
    CHECK_THROWS_AS(input_impedance(feed, geo, 0.0), InvalidInput);
}

TEST_CASE("reflection coefficient and dB conversion") {
    CHECK(std::abs(reflection({50.0, 0.0}, 50.0)) == 0.0);
    CHECK(reflection({0.0, 0.0}, 50.0) == std::complex<double>(-1.0, 0.0));
    CHECK(reflection({150.0, 0.0}, 50.0) == std::complex<double>(0.5, 0.0));
    CHECK(s11_db({0.5, 0.0}) == doctest::Approx(20.0 * std::log10(0.5)).epsilon(1e-15));
    CHECK(s11_db({1.0, 0.0}) == 0.0);
    CHECK(s11_db({0.0, 0.0}) == s11_floor_db);
    CHECK(s11_db({1e-9, 0.0}) == s11_floor_db);  // clamped, not -180
    CHECK_THROWS_AS(reflection({50.0, 0.0}, 0.0), InvalidInput);
}

TEST_CASE("edge-fed patch is visibly mismatched at 50 ohm") {
    const PatchGeometry geo = design29();
    const FeedModel feed = edge_feed(geo);
    const double f0 = resonant_frequency(geo);
    const std::complex<double> gamma = reflection(input_impedance(feed, geo, f0), 50.0);
    CHECK(std::abs(gamma) == doctest::Approx(0.507968733840443).epsilon(1e-12));
    CHECK(s11_db(gamma) == doctest::Approx(-5.88326036607168).epsilon(1e-12));
}

TEST_CASE("sweep grid, endpoint exactness, and minimum location") {
    const PatchGeometry geo = design29();
    const FeedModel feed = match_feed(geo, 50.0);
    const double f0 = resonant_frequency(geo);
    const FrequencyResponse resp = s11_sweep(feed, geo, 0.93 * f0, 1.07 * f0, 401);
    CHECK(resp.points.size() == 401);
    CHECK(resp.ref_impedance_ohm == 50.0);
    CHECK(resp.points.front().f_hz == 0.93 * f0);
    CHECK(resp.points.back().f_hz == 1.07 * f0);
    const SweepPoint& best = min_s11(resp);
    CHECK(best.f_hz == doctest::Approx(f0).epsilon(1e-12));
    CHECK(s11_db(best.s11) == s11_floor_db);
    CHECK_THROWS_AS(s11_sweep(feed, geo, 1.07 * f0, 0.93 * f0, 401), InvalidRange);
    CHECK_THROWS_AS(s11_sweep(feed, geo, 0.93 * f0, 1.07 * f0, 1), InvalidRange);
    CHECK_THROWS_AS(s11_sweep(feed, geo, 0.0, 1.07 * f0, 11), InvalidInput);
    CHECK_THROWS_AS(min_s11(FrequencyResponse{}), InvalidInput);
}

TEST_CASE("property: the sweep minimum sits at resonance for random Q and depth") {
    const PatchGeometry geo = design29();
    const double f0 = resonant_frequency(geo);
    std::mt19937 rng(0x5eed3u);
    std::uniform_real_distribution<double> q_draw(10.0, 100.0);
    std::uniform_real_distribution<double> depth(0.0, 0.49 * geo.length_mm);
    for (int i = 0; i < 25; ++i) {
        FeedModel feed{FeedKind::Inset, depth(rng), q_draw(rng), edge_resistance(geo)};
        if (feed.inset_depth_mm == 0.0) feed.kind = FeedKind::Edge;
        CAPTURE(feed.inset_depth_mm);
        CAPTURE(feed.resonator_q);
        const FrequencyResponse resp = s11_sweep(feed, geo, 0.93 * f0, 1.07 * f0, 401);
        // 401 points over a symmetric span put index 200 exactly at f0.
        CHECK(min_s11(resp).f_hz == doctest::Approx(f0).epsilon(1e-12));
    }
}

TEST_CASE("-10 dB bandwidth follows 2/(3Q) and halves when Q doubles") {
    const PatchGeometry geo = design29();
    const double f0 = resonant_frequency(geo);
    const FrequencyResponse at_q30 = s11_sweep(match_feed(geo, 50.0, 30.0), geo, 0.9 * f0,
                                               1.1 * f0, 4001);
    const FrequencyResponse at_q60 = s11_sweep(match_feed(geo, 50.0, 60.0), geo, 0.9 * f0,
                                               1.1 * f0, 4001);
    const double bw30 = fractional_bandwidth(at_q30, f0);
    const double bw60 = fractional_bandwidth(at_q60, f0);
    CHECK(bw30 == doctest::Approx(2.0 / (3.0 * 30.0)).epsilon(0.01));
    CHECK(bw60 == doctest::Approx(2.0 / (3.0 * 60.0)).epsilon(0.01));
    CHECK(bw60 / bw30 == doctest::Approx(0.5).epsilon(0.01));
}

TEST_CASE("electrical thickness classification") {
    CHECK_FALSE(electrically_thick(design29()));  // 0.784 mm is 7.6% of a wavelength
    const PatchGeometry thick = design_patch(DesignSpec{29e9, WidthFormula::Standard, 50.0},
                                             Substrate{2.2, 1.2, 0.0, ""});
    CHECK(electrically_thick(thick));  // 1.2 mm is 11.6% of a wavelength
}

TEST_CASE("feed model validation rejects inconsistent states") {
    const PatchGeometry geo = design29();
    FeedModel feed = match_feed(geo, 50.0);
    CHECK_NOTHROW(feed.validate(geo.length_mm));
    FeedModel bad = feed;
    bad.inset_depth_mm = geo.length_mm;  // at the far edge
    CHECK_THROWS_AS(bad.validate(geo.length_mm), InvalidInput);
    bad = feed;
    bad.kind = FeedKind::Edge;  // edge kind with nonzero depth
    CHECK_THROWS_AS(bad.validate(geo.length_mm), InvalidInput);
    bad = feed;
    bad.resonator_q = 0.0;
    CHECK_THROWS_AS(bad.validate(geo.length_mm), InvalidInput);
    bad = feed;
    bad.edge_resistance_ohm = -3.0;
    CHECK_THROWS_AS(bad.validate(geo.length_mm), InvalidInput);
    CHECK_THROWS_AS(feed_kind_from_string("coax"), InvalidInput);
    CHECK(feed_kind_from_string("edge") == FeedKind::Edge);
    CHECK(feed_kind_from_string("inset") == FeedKind::Inset);
}

}  // TEST_SUITE
