// Copyright 2026 The thins Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file poset.hpp
 * @brief Hasse diagram of the thins ordering over all pers on one carrier.
 */

#pragma once

#include <cstddef>
#include <string>

namespace thins {

/// Renders the cover relation of thins on all pers of an n point carrier.
/// Nodes are labelled with pair lists; minimal pers carry a "min"
/// annotation and maximal pers a "max" annotation.  The only supported
/// format is "dot" (edges point from the thinner per upward).  Throws
/// CapacityError when n exceeds the cap and std::invalid_argument for an
/// unknown format.
std::string export_thins_poset(std::size_t n, const std::string& format = "dot",
                               std::size_t cap = 4);

}  // namespace thins
