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

// Small builders shared by the test files.

#ifndef THINS_TESTS_HELPERS_HPP
#define THINS_TESTS_HELPERS_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "thins/rel.hpp"

namespace thins_tests {

inline thins::TypeSig sq(std::size_t n) {
  thins::Carrier a{"A", n};
  return thins::TypeSig{a, a};
}

inline thins::TypeSig ab(std::size_t rows, std::size_t cols) {
  return thins::TypeSig{thins::Carrier{"A", rows}, thins::Carrier{"B", cols}};
}

// Square relation on carrier A(n) holding exactly the given pairs.
inline thins::Rel rp(
    std::size_t n,
    const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  return thins::Rel::from_pairs(sq(n), pairs);
}

// Heterogeneous relation on A(rows)~B(cols).
inline thins::Rel rp2(
    std::size_t rows, std::size_t cols,
    const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  return thins::Rel::from_pairs(ab(rows, cols), pairs);
}

}  // namespace thins_tests

#endif  // THINS_TESTS_HELPERS_HPP
