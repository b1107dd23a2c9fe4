// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <random>

#include "doctest.h"
#include "kapatch/constants.hpp"
#include "kapatch/geometry.hpp"
#include "test_helpers.hpp"

using namespace kapatch;
using kapatch_test::design29;

TEST_SUITE("geometry") {

TEST_CASE("standard width matches its closed form at the 29 GHz design") {
    const Substrate sub{2.2, 0.784, 0.0, "RT-duroid-5880"};
    const DesignSpec spec{29e9, WidthFormula::Standard, 50.0};
    const double w = effective_width(spec, sub);
    // Independent evaluation of (c / 2 f0) sqrt(2 / (eps_r + 1)) in mm.
    const double by_hand =
        speed_of_light_m_s / (2.0 * 29e9) * 1000.0 * std::sqrt(2.0 / (2.2 + 1.0));
    CHECK(w == doctest::Approx(by_hand).epsilon(1e-15));
    CHECK(w == doctest::Approx(4.08632324405331).epsilon(1e-12));
}

TEST_CASE("literal width variant and agreement of both rules in vacuum") {
    const DesignSpec literal{29e9, WidthFormula::PaperLiteral, 50.0};
    const DesignSpec standard{29e9, WidthFormula::Standard, 50.0};
    CHECK(effective_width(literal, Substrate{2.2, 0.784, 0.0, ""}) ==
          doctest::Approx(3.48482817157099).epsilon(1e-12));
    // At eps_r = 1 both rules give the free-space half wavelength.
    const Substrate vacuum{1.0, 0.784, 0.0, ""};
    const double half_wave = 5.16883548275862;
    CHECK(effective_width(literal, vacuum) == doctest::Approx(half_wave).epsilon(1e-12));
    CHECK(effective_width(standard, vacuum) == doctest::Approx(half_wave).epsilon(1e-12));
}

TEST_CASE("effective permittivity closed form and limits") {
    const Substrate sub{2.2, 0.784, 0.0, ""};
    const double w = 4.08632324405331;
    const double eps = effective_permittivity(sub, w);
    const double by_hand = 0.5 * 3.2 + 0.5 * 1.2 / std::sqrt(1.0 + 12.0 * 0.784 / w);
    CHECK(eps == doctest::Approx(by_hand).epsilon(1e-15));
    CHECK(eps == doctest::Approx(1.93017337940856).epsilon(1e-12));
    // eps_r = 1 collapses to exactly 1; a vanishing substrate approaches eps_r.
    CHECK(effective_permittivity(Substrate{1.0, 0.784, 0.0, ""}, w) == 1.0);
    CHECK(effective_permittivity(Substrate{2.2, 1e-12, 0.0, ""}, w) ==
          doctest::Approx(2.2).epsilon(1e-6));
}

TEST_CASE("effective length halves the in-medium wavelength") {
    CHECK(effective_length(29e9, 1.9303) == doctest::Approx(3.72032006070751).epsilon(1e-12));
    CHECK(effective_length(29e9, 1.0) == doctest::Approx(5.16883548275862).epsilon(1e-12));
    // Scaling: halving the frequency doubles the length exactly.
    CHECK(effective_length(14.5e9, 1.9303) ==
          doctest::Approx(2.0 * effective_length(29e9, 1.9303)).epsilon(1e-15));
}

TEST_CASE("fringing extension values, h -> 0 limit, and pole") {
    const Substrate sub{2.2, 0.784, 0.0, ""};
    CHECK(length_extension(sub, 4.08632324405331, 1.93017337940856) ==
          doctest::Approx(0.392388352834956).epsilon(1e-12));
    // W/h = 1, eps_eff = 2 evaluates the grouped factors at simple points.
    CHECK(length_extension(Substrate{2.2, 0.784, 0.0, ""}, 0.784, 2.0) ==
          doctest::Approx(0.299479798953948).epsilon(1e-12));
    // The extension vanishes with the substrate.
    CHECK(length_extension(Substrate{2.2, 1e-9, 0.0, ""}, 4.0, 1.9) < 1e-8);
    CHECK_THROWS_AS(length_extension(sub, 4.0, 0.2), DegenerateInput);
    CHECK_THROWS_AS(length_extension(sub, 4.0, 0.258), DegenerateInput);
    CHECK_THROWS_AS(length_extension(sub, 4.0, 0.5), InvalidInput);
}

TEST_CASE("design_patch composes the full sizing chain") {
    const PatchGeometry geo = design29();
    CHECK(geo.width_mm == doctest::Approx(4.08632324405331).epsilon(1e-12));
    CHECK(geo.eff_permittivity == doctest::Approx(1.93017337940856).epsilon(1e-12));
    CHECK(geo.eff_length_mm == doctest::Approx(3.72044208637787).epsilon(1e-12));
    CHECK(geo.length_extension_mm == doctest::Approx(0.392388352834956).epsilon(1e-12));
    CHECK(geo.length_mm == doctest::Approx(2.93566538070796).epsilon(1e-12));
    CHECK(geo.ground_length_mm == doctest::Approx(7.63966538070796).epsilon(1e-12));
    CHECK(geo.ground_width_mm == doctest::Approx(8.79032324405331).epsilon(1e-12));
    // Structural identities hold exactly as stored.
    CHECK(geo.length_mm == geo.eff_length_mm - 2.0 * geo.length_extension_mm);
    CHECK(geo.ground_length_mm == 6.0 * geo.substrate.height_mm + geo.length_mm);
    CHECK(geo.ground_width_mm == 6.0 * geo.substrate.height_mm + geo.width_mm);
    CHECK(geo.f0_hz == 29e9);
    CHECK(geo.width_formula == WidthFormula::Standard);
    CHECK(geo.substrate.epsilon_r == 2.2);
    CHECK_NOTHROW(geo.validate());
}

TEST_CASE("high-permittivity design and exact inversion") {
    const Substrate sub{10.2, 0.635, 0.0023, "RT-duroid-6010"};
    const DesignSpec spec{29e9, WidthFormula::Standard, 50.0};
    const PatchGeometry geo = design_patch(spec, sub);
    CHECK(geo.width_mm == doctest::Approx(2.18423165012259).epsilon(1e-12));
    CHECK(geo.eff_permittivity == doctest::Approx(7.77120283607417).epsilon(1e-12));
    CHECK(geo.length_mm == doctest::Approx(1.36312769179459).epsilon(1e-12));
    CHECK(resonant_frequency(geo) == doctest::Approx(29e9).epsilon(1e-12));
}

TEST_CASE("vacuum thin-substrate design degenerates to a square half-wave patch") {
    const PatchGeometry geo =
        design_patch(DesignSpec{29e9, WidthFormula::Standard, 50.0}, Substrate{1.0, 1e-9, 0.0, ""});
    CHECK(geo.width_mm == doctest::Approx(5.16883548275862).epsilon(1e-12));
    CHECK(geo.length_mm == doctest::Approx(geo.width_mm).epsilon(1e-8));
    CHECK(resonant_frequency(geo) == doctest::Approx(29e9).epsilon(1e-9));
}

TEST_CASE("resonant_frequency inverts design_patch at other frequencies") {
    const Substrate sub{2.2, 0.784, 0.0, ""};
    for (const double f0 : {14.5e9, 29e9, 38e9}) {
        const PatchGeometry geo = design_patch(DesignSpec{f0, WidthFormula::Standard, 50.0}, sub);
        CHECK(resonant_frequency(geo) == doctest::Approx(f0).epsilon(1e-12));
    }
}

TEST_CASE("invalid inputs are rejected") {
    const Substrate good{2.2, 0.784, 0.0, ""};
    CHECK_THROWS_AS(effective_width(DesignSpec{0.0, WidthFormula::Standard, 50.0}, good),
                    InvalidInput);
    CHECK_THROWS_AS(effective_width(DesignSpec{-1e9, WidthFormula::Standard, 50.0}, good),
                    InvalidInput);
    CHECK_THROWS_AS(
        effective_width(DesignSpec{29e9, WidthFormula::Standard, 50.0}, Substrate{0.5, 0.784}),
        InvalidInput);
    CHECK_THROWS_AS(
        effective_width(DesignSpec{29e9, WidthFormula::Standard, 50.0}, Substrate{2.2, 0.0}),
        InvalidInput);
    CHECK_THROWS_AS(
        effective_width(DesignSpec{29e9, WidthFormula::Standard, 50.0}, Substrate{2.2, 0.784, -0.1}),
        InvalidInput);
    CHECK_THROWS_AS(effective_permittivity(good, 0.0), InvalidInput);
    CHECK_THROWS_AS(effective_length(29e9, 0.99), InvalidInput);
    CHECK_THROWS_AS(width_formula_from_string("bogus"), InvalidInput);
}

TEST_CASE("a substrate too thick for the frequency is non-physical") {
    CHECK_THROWS_AS(
        design_patch(DesignSpec{29e9, WidthFormula::Standard, 50.0}, Substrate{2.2, 6.0, 0.0, ""}),
        NonPhysicalGeometry);
    // A merely thick board still designs fine.
    CHECK_NOTHROW(
        design_patch(DesignSpec{29e9, WidthFormula::Standard, 50.0}, Substrate{2.2, 1.2, 0.0, ""}));
}

TEST_CASE("property: design round-trips through resonant_frequency over random draws") {
    std::mt19937 rng(0x5eed1u);
    std::uniform_real_distribution<double> freq(10e9, 40e9);
    std::uniform_real_distribution<double> permittivity(1.05, 10.2);
    std::uniform_real_distribution<double> rel_height(0.01, 0.08);
    for (int i = 0; i < 100; ++i) {
        const double f0 = freq(rng);
        const Substrate sub{permittivity(rng), rel_height(rng) * wavelength_mm(f0), 0.0, ""};
        CAPTURE(f0);
        CAPTURE(sub.epsilon_r);
        CAPTURE(sub.height_mm);
        const PatchGeometry geo = design_patch(DesignSpec{f0, WidthFormula::Standard, 50.0}, sub);
        CHECK(std::abs(resonant_frequency(geo) - f0) <= 1e-9 * f0);
        CHECK(geo.eff_permittivity >= 1.0);
        CHECK(geo.eff_permittivity <= sub.epsilon_r);
        CHECK(geo.length_extension_mm > 0.0);
    }
}

TEST_CASE("property: every dimension shrinks strictly with frequency") {
    const Substrate boards[] = {{2.2, 0.784, 0.0, ""},
                                {10.2, 0.635, 0.0, ""},
                                {4.4, 1.0, 0.0, ""},
                                {6.15, 0.64, 0.0, ""},
                                {1.0, 0.1, 0.0, ""}};
    for (const Substrate& sub : boards) {
        PatchGeometry previous =
            design_patch(DesignSpec{10e9, WidthFormula::Standard, 50.0}, sub);
        for (double f_ghz = 11.0; f_ghz <= 40.0; f_ghz += 1.0) {
            const PatchGeometry geo =
                design_patch(DesignSpec{f_ghz * 1e9, WidthFormula::Standard, 50.0}, sub);
            CAPTURE(sub.epsilon_r);
            CAPTURE(f_ghz);
            CHECK(geo.width_mm < previous.width_mm);
            CHECK(geo.length_mm < previous.length_mm);
            CHECK(geo.ground_length_mm < previous.ground_length_mm);
            CHECK(geo.ground_width_mm < previous.ground_width_mm);
            previous = geo;
        }
    }
}

TEST_CASE("width formula string names round-trip") {
    CHECK(width_formula_from_string(to_string(WidthFormula::Standard)) == WidthFormula::Standard);
    CHECK(width_formula_from_string(to_string(WidthFormula::PaperLiteral)) ==
          WidthFormula::PaperLiteral);
}

}  // TEST_SUITE
