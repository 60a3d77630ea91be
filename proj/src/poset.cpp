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

#include "thins/poset.hpp"

#include <stdexcept>
#include <vector>

#include "thins/enumerate.hpp"
#include "thins/per.hpp"
#include "thins/rel.hpp"

namespace thins {

std::string export_thins_poset(std::size_t n, const std::string& format,
                               std::size_t cap) {
  if (format != "dot")
    throw std::invalid_argument("export_thins_poset: unknown format '" +
                                format + "'");
  if (n > cap)
    throw CapacityError("export_thins_poset: carrier of " + std::to_string(n) +
                        " exceeds cap " + std::to_string(cap));
  EnumerationLimits limits;
  limits.max_per_carrier = std::max(limits.max_per_carrier, cap);
  PerUniverse u = enumerate_pers(Carrier{"A", n}, limits);
  std::size_t count = u.pers.size();
  std::vector<std::vector<bool>> below(count, std::vector<bool>(count, false));
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < count; ++j)
      below[i][j] = thins_per(u.pers[i], u.pers[j]);

  std::string out = "digraph thins {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < count; ++i) {
    bool minimal = true, maximal = true;
    for (std::size_t j = 0; j < count; ++j) {
      if (j == i) continue;
      if (below[j][i]) minimal = false;
      if (below[i][j]) maximal = false;
    }
    std::string label = pair_list(u.pers[i].rel());
    if (minimal) label += "\\nmin";
    if (maximal) label += "\\nmax";
    out += "  p" + std::to_string(i) + " [label=\"" + label + "\"];\n";
  }
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < count; ++j) {
      if (i == j || !below[i][j]) continue;
      bool cover = true;
      for (std::size_t k = 0; k < count && cover; ++k)
        if (k != i && k != j && below[i][k] && below[k][j]) cover = false;
      if (cover)
        out += "  p" + std::to_string(i) + " -> p" + std::to_string(j) + ";\n";
    }
  return out + "}\n";
}

}  // namespace thins
