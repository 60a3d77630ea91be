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
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "thins/enumerate.hpp"
#include "thins/rel.hpp"

using namespace thins;
using thins_tests::ab;
using thins_tests::rp;
using thins_tests::sq;

TEST_CASE("relation enumeration is complete and lex ordered") {
  std::vector<Rel> rels = enumerate_relations(sq(2));
  REQUIRE(rels.size() == 16);
  CHECK(rels.front() == bottom(sq(2)));
  CHECK(rels.back() == top(sq(2)));
  CHECK(rels[1] == rp(2, {{1, 1}}));
  for (std::size_t k = 1; k < rels.size(); ++k)
    CHECK(lex_less(rels[k - 1], rels[k]));

  CHECK(enumerate_relations(TypeSig{Carrier{"A", 1}, Carrier{"A", 1}}).size() ==
        2);
  CHECK(enumerate_relations(sq(3)).size() == 512);
  CHECK(enumerate_relations(ab(2, 3)).size() == 64);
}

TEST_CASE("per enumeration matches Bell numbers") {
  const std::size_t bell[] = {1, 2, 5, 15, 52};
  for (std::size_t n = 0; n <= 4; ++n) {
    PerUniverse u = enumerate_pers(Carrier{"A", n});
    CHECK(u.pers.size() == bell[n]);
    CHECK(u.carrier.size() == n);
  }
  CHECK(enumerate_pers(Carrier{"A", 6}).pers.size() == 877);
}

TEST_CASE("per enumeration equals the filtered relation enumeration") {
  for (std::size_t n = 0; n <= 3; ++n) {
    std::vector<Rel> expected;
    for (const Rel& r : enumerate_relations(sq(n)))
      if (is_per(r)) expected.push_back(r);
    PerUniverse u = enumerate_pers(Carrier{"A", n});
    std::vector<Rel> got;
    for (const Per& p : u.pers) got.push_back(p.rel());
    CHECK(got == expected);
    for (std::size_t k = 1; k < got.size(); ++k)
      CHECK(lex_less(got[k - 1], got[k]));
  }
}

TEST_CASE("enumeration respects its caps") {
  CHECK_THROWS_AS(enumerate_pers(Carrier{"A", 7}), CapacityError);
  CHECK_THROWS_AS(enumerate_relations(ab(5, 4)), CapacityError);
  EnumerationLimits loose{8, 20};
  CHECK(enumerate_pers(Carrier{"A", 7}, loose).pers.size() == 4140);
}

TEST_CASE("census of small carriers") {
  Counts c2 = counts(2);
  CHECK(c2.pers == 5);
  CHECK(c2.coreflexives == 4);
  CHECK(c2.minimal == 4);
  CHECK(c2.maximal == 3);
  CHECK(c2.equivalences == 2);

  Counts c3 = counts(3);
  CHECK(c3.pers == 15);
  CHECK(c3.coreflexives == 8);
  CHECK(c3.minimal == 8);
  CHECK(c3.maximal == 6);
  CHECK(c3.equivalences == 5);

  Counts c4 = counts(4);
  CHECK(c4.pers == 52);
  CHECK(c4.coreflexives == 16);
  CHECK(c4.minimal == 16);
  CHECK(c4.maximal == 16);
  CHECK(c4.equivalences == 15);

  Counts c5 = counts(5);
  CHECK(c5.pers == 203);
  CHECK(c5.coreflexives == 32);
  CHECK(c5.minimal == 32);
  CHECK(c5.maximal == 53);
  CHECK(c5.equivalences == 52);

  CHECK_THROWS_AS(counts(6), CapacityError);
  CHECK_THROWS_AS(counts(6, 5), CapacityError);
}
