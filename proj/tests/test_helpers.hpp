// SPDX-License-Identifier: Apache-2.0

#ifndef KAPATCH_TEST_HELPERS_HPP
#define KAPATCH_TEST_HELPERS_HPP

#include <cmath>

#include "kapatch/geometry.hpp"

namespace kapatch_test {

/// The reference design every suite leans on: 29 GHz patch on 0.784 mm
/// RT/duroid 5880 (eps_r 2.2), standard width rule.
inline kapatch::PatchGeometry design29() {
    const kapatch::Substrate substrate{2.2, 0.784, 0.0009, "RT-duroid-5880"};
    const kapatch::DesignSpec spec{29e9, kapatch::WidthFormula::Standard, 50.0};
    return kapatch::design_patch(spec, substrate);
}

/// Relative closeness with an absolute floor of `tol` near zero.
inline bool near_rel(double a, double b, double tol) {
    return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace kapatch_test

#endif  // KAPATCH_TEST_HELPERS_HPP
