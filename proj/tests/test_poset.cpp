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

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "thins/enumerate.hpp"
#include "thins/per.hpp"
#include "thins/poset.hpp"

using namespace thins;

namespace {

std::size_t occurrences(const std::string& text, const std::string& needle) {
  std::size_t count = 0;
  for (std::size_t pos = text.find(needle); pos != std::string::npos;
       pos = text.find(needle, pos + needle.size()))
    ++count;
  return count;
}

}  // namespace

TEST_CASE("one point poset has two isolated pers") {
  std::string dot = export_thins_poset(1);
  CHECK(occurrences(dot, "label=") == 2);
  CHECK(occurrences(dot, "->") == 0);
}

TEST_CASE("two point poset renders exactly") {
  std::string expected =
      "digraph thins {\n"
      "  rankdir=BT;\n"
      "  node [shape=box];\n"
      "  p0 [label=\"{}\\nmin\\nmax\"];\n"
      "  p1 [label=\"{(1,1)}\\nmin\"];\n"
      "  p2 [label=\"{(0,0)}\\nmin\"];\n"
      "  p3 [label=\"{(0,0),(1,1)}\\nmin\\nmax\"];\n"
      "  p4 [label=\"{(0,0),(0,1),(1,0),(1,1)}\\nmax\"];\n"
      "  p1 -> p4;\n"
      "  p2 -> p4;\n"
      "}\n";
  CHECK(export_thins_poset(2) == expected);
}

TEST_CASE("three point poset matches a recomputed cover relation") {
  std::string dot = export_thins_poset(3);
  CHECK(occurrences(dot, "label=") == 15);
  CHECK(occurrences(dot, "\\nmin") == 8);
  CHECK(occurrences(dot, "\\nmax") == 6);

  PerUniverse u = enumerate_pers(Carrier{"A", 3});
  std::size_t covers = 0;
  for (std::size_t i = 0; i < u.pers.size(); ++i)
    for (std::size_t j = 0; j < u.pers.size(); ++j) {
      if (i == j || !thins_per(u.pers[i], u.pers[j])) continue;
      bool direct = true;
      for (std::size_t k = 0; k < u.pers.size() && direct; ++k)
        if (k != i && k != j && thins_per(u.pers[i], u.pers[k]) &&
            thins_per(u.pers[k], u.pers[j]))
          direct = false;
      if (direct) ++covers;
    }
  CHECK(occurrences(dot, "->") == covers);
}

TEST_CASE("poset export validates its arguments") {
  CHECK_THROWS_AS(export_thins_poset(5, "dot", 4), CapacityError);
  CHECK_THROWS_AS(export_thins_poset(2, "svg"), std::invalid_argument);
  CHECK_NOTHROW(export_thins_poset(4));
}
