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
 * @file enumerate.hpp
 * @brief Exhaustive enumeration of relations and pers over small carriers.
 */

#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "thins/per.hpp"
#include "thins/rel.hpp"

namespace thins {

/// Thrown when an enumeration would exceed its configured cap.
struct CapacityError : std::length_error {
  using std::length_error::length_error;
};

/// Caps on enumeration size.  Defaults keep a full run cheap; callers may
/// raise them, they are bounds on acceptable work, not hard limits of the
/// representation.
struct EnumerationLimits {
  std::size_t max_per_carrier = 6;
  std::size_t max_rel_cells = 16;
};

/// All relations of the sig in lexicographic order, bottom first and top
/// last.  Throws CapacityError when the cell count exceeds the cap.
std::vector<Rel> enumerate_relations(const TypeSig& sig,
                                     const EnumerationLimits& limits = {});

/// All pers on the carrier in lexicographic order.  A per is a choice of a
/// domain subset plus a partition of it, so the count is a Bell number.
/// Throws CapacityError when the carrier exceeds the cap.
PerUniverse enumerate_pers(const Carrier& carrier,
                           const EnumerationLimits& limits = {});

/// Census of one carrier size.
struct Counts {
  std::size_t pers = 0;
  std::size_t coreflexives = 0;
  std::size_t minimal = 0;
  std::size_t maximal = 0;
  std::size_t equivalences = 0;
};

/// Counts pers, coreflexives, thins-minimal and thins-maximal pers, and
/// equivalence relations on a carrier of n points.  Throws CapacityError
/// when n exceeds the cap.
Counts counts(std::size_t n, std::size_t cap = 5);

}  // namespace thins
