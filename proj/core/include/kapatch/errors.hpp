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

#ifndef KAPATCH_ERRORS_HPP
#define KAPATCH_ERRORS_HPP

#include <stdexcept>

namespace kapatch {

// Error taxonomy: subclasses of std::invalid_argument flag inputs the caller
// should never have passed (the CLI maps them to exit code 2); subclasses of
// std::domain_error flag parameter combinations where the model itself breaks
// down (exit code 3).

/// An argument violates a documented precondition (negative length, malformed
/// file, step that does not divide its angular range, ...).
class InvalidInput : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// A numeric range is empty, reversed, or has too few points.
class InvalidRange : public InvalidInput {
  public:
    using InvalidInput::InvalidInput;
};

/// A radiation efficiency outside (0, 1].
class InvalidEfficiency : public InvalidInput {
  public:
    using InvalidInput::InvalidInput;
};

/// The model was evaluated at a point where it is mathematically undefined
/// (fringing-extension pole, feed placed at or beyond the patch midline, ...).
class DegenerateInput : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// A requested design collapses: the fringing correction consumes the whole
/// resonant length, leaving a non-positive patch.
class NonPhysicalGeometry : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// The requested input resistance exceeds what the inset-feed law can reach.
class Unmatchable : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// A pattern with no radiated power; directivity is undefined.
class ZeroPattern : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

}  // namespace kapatch

#endif  // KAPATCH_ERRORS_HPP
