// SPDX-License-Identifier: Apache-2.0
//
// swarmsec: secure two-way aerial links between UAV virtual antenna arrays
// Copyright (C) 2026 The swarmsec authors
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

#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "swarmsec/geometry.hpp"

namespace swarmsec {

// Decision variables X = {P, Omega, u} for both swarms.
//
// receivers[0] indexes the UAV in swarm 2 that receives from swarm 1's
// array, receivers[1] the UAV in swarm 1 that receives from swarm 2's array.
// Indices are 0-based.
struct Solution {
  std::array<std::vector<Vec3>, 2> positions;
  std::array<std::vector<double>, 2> weights;
  std::array<std::size_t, 2> receivers{0, 0};

  friend bool operator==(const Solution&, const Solution&) = default;
};

}  // namespace swarmsec
