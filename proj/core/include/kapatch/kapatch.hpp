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

#ifndef KAPATCH_KAPATCH_HPP
#define KAPATCH_KAPATCH_HPP

/// Umbrella header pulling in the whole public API.

#include "kapatch/array.hpp"
#include "kapatch/circuit.hpp"
#include "kapatch/constants.hpp"
#include "kapatch/errors.hpp"
#include "kapatch/geometry.hpp"
#include "kapatch/io.hpp"
#include "kapatch/radiation.hpp"

#endif  // KAPATCH_KAPATCH_HPP
