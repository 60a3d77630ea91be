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
#include "thins/general.hpp"
#include "thins/per.hpp"
#include "thins/rel.hpp"

using namespace thins;
using thins_tests::ab;
using thins_tests::rp;
using thins_tests::rp2;
using thins_tests::sq;

namespace {

// The general thins order written out definitionally.
bool thins_oracle(const Rel& r, const Rel& s) {
  return thins_per(per_left_domain(r), per_left_domain(s)) &&
         thins_per(per_right_domain(r), per_right_domain(s)) &&
         r == compose(compose(left_domain(r), s), right_domain(r));
}

// Distinct nonempty rows and distinct nonempty columns, checked cellwise.
bool core_oracle(const Rel& r) {
  for (std::size_t a = 0; a < r.rows(); ++a) {
    if (r.row_bits(a) == 0) continue;
    for (std::size_t a2 = a + 1; a2 < r.rows(); ++a2)
      if (r.row_bits(a) == r.row_bits(a2)) return false;
  }
  Rel c = converse(r);
  for (std::size_t b = 0; b < c.rows(); ++b) {
    if (c.row_bits(b) == 0) continue;
    for (std::size_t b2 = b + 1; b2 < c.rows(); ++b2)
      if (c.row_bits(b) == c.row_bits(b2)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("general thins on frozen examples") {
  Rel wide = rp2(1, 2, {{0, 0}, {0, 1}});
  CHECK(thins_rel(rp2(1, 2, {{0, 0}}), wide));
  CHECK_FALSE(thins_rel(bottom(ab(1, 2)), wide));
  CHECK(thins_rel(wide, wide));
  CHECK_THROWS_AS(thins_rel(wide, bottom(ab(2, 2))), TypeError);
}

TEST_CASE("general thins agrees with its definition") {
  std::vector<Rel> rels = enumerate_relations(sq(2));
  for (const Rel& r : rels)
    for (const Rel& s : rels) CHECK(thins_rel(r, s) == thins_oracle(r, s));
}

TEST_CASE("general thins is reflexive and implies containment") {
  for (const Rel& r : enumerate_relations(ab(2, 3))) {
    CHECK(thins_rel(r, r));
    for (const Rel& s : enumerate_relations(ab(2, 3)))
      if (thins_rel(r, s)) CHECK(is_subset(r, s));
  }
}

TEST_CASE("core recognition") {
  CHECK(is_core(bottom(sq(2))));
  CHECK(is_core(rp(2, {{0, 0}, {1, 1}})));
  CHECK_FALSE(is_core(rp(2, {{0, 0}, {1, 0}})));
  for (const Rel& r : enumerate_relations(ab(2, 3)))
    CHECK(is_core(r) == core_oracle(r));
}

TEST_CASE("general index membership on frozen examples") {
  CHECK(is_rel_index(bottom(sq(2)), bottom(sq(2))));
  CHECK(is_rel_index(rp(2, {{0, 0}}), top(sq(2))));
  CHECK_FALSE(is_rel_index(top(sq(2)), top(sq(2))));
  CHECK_THROWS_AS(is_rel_index(bottom(sq(2)), bottom(ab(2, 2))), TypeError);
}

TEST_CASE("find_rel_index produces a core index") {
  CHECK(find_rel_index(bottom(sq(2))) == bottom(sq(2)));
  CHECK(find_rel_index(top(sq(2))) == rp(2, {{0, 0}}));
  for (const Rel& c : enumerate_relations(ab(2, 3))) {
    if (!is_core(c)) continue;
    CHECK(find_rel_index(c) == c);
  }
  for (const Rel& r : enumerate_relations(ab(2, 3))) {
    Rel j = find_rel_index(r);
    CHECK(is_core(j));
    CHECK(is_rel_index(j, r));
    CHECK(thins_rel(j, r));
  }
}

TEST_CASE("enumerate_rel_indexes agrees with a brute filter") {
  for (const TypeSig& sig : {sq(2), ab(2, 3)}) {
    std::vector<Rel> rels = enumerate_relations(sig);
    for (const Rel& r : rels) {
      std::vector<Rel> brute;
      for (const Rel& j : rels)
        if (is_rel_index(j, r)) brute.push_back(j);
      std::vector<Rel> got = enumerate_rel_indexes(r);
      CHECK(got == brute);
      for (std::size_t k = 1; k < got.size(); ++k)
        CHECK(lex_less(got[k - 1], got[k]));
    }
  }
}

TEST_CASE("minimal relations are exactly the cores") {
  std::vector<Rel> universe = enumerate_relations(sq(2));
  CHECK(is_minimal_rel(rp(2, {{0, 0}, {1, 1}}), universe));
  CHECK_FALSE(is_minimal_rel(rp(2, {{0, 0}, {1, 0}}), universe));
  CHECK(is_minimal_rel(bottom(sq(2)), universe));
  for (const Rel& s : universe) CHECK(is_minimal_rel(s, universe) == is_core(s));
}
