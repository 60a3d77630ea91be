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

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "thins/enumerate.hpp"
#include "thins/per.hpp"
#include "thins/rel.hpp"

using namespace thins;
using thins_tests::rp;
using thins_tests::sq;

namespace {

Per per(const Rel& r) { return Per{r}; }

// The thins order written out definitionally, with d = domain(p).
bool thins_oracle(const Per& p, const Per& q) {
  Rel d = domain(p).rel();
  return p.rel() == compose(compose(d, q), d) &&
         q.rel() == compose(compose(q, d), q);
}

// Equivalence classes of p as sorted member lists, ordered by least member.
std::vector<std::vector<std::size_t>> classes_of(const Per& p) {
  std::vector<std::vector<std::size_t>> classes;
  std::vector<bool> seen(p.carrier().size(), false);
  for (std::size_t a = 0; a < p.carrier().size(); ++a) {
    if (seen[a] || !p.rel().at(a, a)) continue;
    std::vector<std::size_t> cls;
    for (std::size_t b = 0; b < p.carrier().size(); ++b)
      if (p.rel().at(a, b)) {
        cls.push_back(b);
        seen[b] = true;
      }
    classes.push_back(cls);
  }
  return classes;
}

}  // namespace

TEST_CASE("thins on small frozen pers") {
  Per p00 = per(rp(2, {{0, 0}}));
  Per full2 = per(top(sq(2)));
  Per id2 = per(identity(Carrier{"A", 2}));
  CHECK(thins_per(p00, full2));
  CHECK_FALSE(thins_per(p00, id2));
  CHECK(thins_per(id2, id2));
  CHECK_THROWS_AS(thins_per(p00, per(top(sq(3)))), TypeError);
}

TEST_CASE("thins agrees with its defining equations") {
  PerUniverse u = enumerate_pers(Carrier{"A", 3});
  REQUIRE(u.pers.size() == 15);
  for (const Per& p : u.pers)
    for (const Per& q : u.pers) CHECK(thins_per(p, q) == thins_oracle(p, q));
}

TEST_CASE("per index membership on frozen examples") {
  Per empty2 = per(bottom(sq(2)));
  Per full2 = per(top(sq(2)));
  CHECK(is_per_index(bottom(sq(2)), empty2));
  CHECK(is_per_index(rp(2, {{0, 0}}), full2));
  CHECK_FALSE(is_per_index(identity(Carrier{"A", 2}), full2));
  CHECK_THROWS_AS(is_per_index(bottom(sq(3)), full2), TypeError);
}

TEST_CASE("per index membership agrees with its three clauses") {
  PerUniverse u = enumerate_pers(Carrier{"A", 3});
  for (const Rel& j : enumerate_relations(sq(3)))
    for (const Per& p : u.pers) {
      bool want = is_subset(j, domain(p)) &&
                  compose(compose(j, p), j) == j &&
                  compose(compose(p, j), p) == p;
      CHECK(is_per_index(j, p) == want);
    }
}

TEST_CASE("find_per_index picks least representatives") {
  CHECK(find_per_index(per(bottom(sq(3)))).rel() == bottom(sq(3)));
  CHECK(find_per_index(per(top(sq(2)))).rel() == rp(2, {{0, 0}}));
  Per two_classes = per(rp(3, {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 2}}));
  CHECK(find_per_index(two_classes).rel() == rp(3, {{0, 0}, {2, 2}}));
}

TEST_CASE("enumerate_per_indexes lists every index") {
  std::vector<Coreflexive> full2 = enumerate_per_indexes(per(top(sq(2))));
  REQUIRE(full2.size() == 2);
  CHECK(full2[0].rel() == rp(2, {{0, 0}}));
  CHECK(full2[1].rel() == rp(2, {{1, 1}}));

  Per id2 = per(identity(Carrier{"A", 2}));
  std::vector<Coreflexive> of_id = enumerate_per_indexes(id2);
  REQUIRE(of_id.size() == 1);
  CHECK(of_id[0].rel() == id2.rel());

  std::vector<Coreflexive> of_bot = enumerate_per_indexes(per(bottom(sq(2))));
  REQUIRE(of_bot.size() == 1);
  CHECK(of_bot[0].rel() == bottom(sq(2)));
}

TEST_CASE("enumerate_per_indexes agrees with a brute filter") {
  PerUniverse u = enumerate_pers(Carrier{"A", 3});
  std::vector<Rel> rels = enumerate_relations(sq(3));
  for (const Per& p : u.pers) {
    std::vector<Rel> brute;
    for (const Rel& j : rels)
      if (is_coreflexive(j) && is_per_index(j, p)) brute.push_back(j);

    std::vector<Rel> got;
    for (const Coreflexive& j : enumerate_per_indexes(p)) got.push_back(j.rel());

    std::size_t expected = 1;
    for (const auto& cls : classes_of(p)) expected *= cls.size();
    CHECK(got.size() == expected);
    CHECK(got.front() == find_per_index(p).rel());

    std::sort(got.begin(), got.end(), lex_less);
    std::sort(brute.begin(), brute.end(), lex_less);
    CHECK(got == brute);
  }
}

TEST_CASE("minimality and maximality on the two point carrier") {
  PerUniverse u = enumerate_pers(Carrier{"A", 2});
  REQUIRE(u.pers.size() == 5);
  CHECK(is_minimal_per(per(rp(2, {{0, 0}})), u));
  CHECK(is_maximal_per(per(top(sq(2))), u));
  CHECK_FALSE(is_maximal_per(per(rp(2, {{0, 0}})), u));
  CHECK(maximality_condition(per(bottom(sq(2)))));
  CHECK(maximality_condition(per(top(sq(2)))));
  CHECK_FALSE(maximality_condition(per(rp(2, {{0, 0}}))));
}

TEST_CASE("completion of frozen pers") {
  CompletionTrace empty = maximal_completion(per(bottom(sq(3))));
  CHECK(empty.support.rel() == bottom(sq(3)));
  CHECK(empty.choice.rel() == bottom(sq(3)));
  CHECK(empty.link.rel() == bottom(sq(3)));
  CHECK(empty.completed.rel() == bottom(sq(3)));

  CompletionTrace of_id = maximal_completion(per(identity(Carrier{"A", 2})));
  CHECK(of_id.support.rel() == identity(Carrier{"A", 2}));
  CHECK(of_id.choice.rel() == rp(2, {{0, 0}}));
  CHECK(of_id.link.rel() == rp(2, {{0, 0}}));
  CHECK(of_id.completed.rel() == identity(Carrier{"A", 2}));

  Per block = per(rp(3, {{0, 0}, {0, 1}, {1, 0}, {1, 1}}));
  CompletionTrace of_block = maximal_completion(block);
  CHECK(of_block.support.rel() == identity(Carrier{"A", 3}));
  CHECK(of_block.choice.rel() == rp(3, {{0, 0}, {2, 2}}));
  CHECK(of_block.link.rel() == rp(3, {{0, 0}, {0, 2}, {2, 0}, {2, 2}}));
  CHECK(of_block.completed.rel() == top(sq(3)));
}

TEST_CASE("completion stages match their defining formulas") {
  PerUniverse u = enumerate_pers(Carrier{"A", 2});
  Rel t = top(sq(2));
  Rel i = identity(Carrier{"A", 2});
  for (const Per& p : u.pers) {
    CompletionTrace trace = maximal_completion(p);
    Rel q = meet(i, compose(compose(t, p), t));
    CHECK(trace.support.rel() == q);
    Rel target = join(compose(compose(p, t), p), q);
    CHECK(trace.choice.rel() == find_per_index(Per{target}).rel());
    Rel j = trace.choice.rel();
    Rel r = compose(compose(j, t), j);
    CHECK(trace.link.rel() == r);
    Rel big = join(join(p, r), join(compose(p, r), compose(r, p)));
    CHECK(trace.completed.rel() == big);
    CHECK(thins_per(p, trace.completed));
    CHECK(maximality_condition(trace.completed));
    CHECK(trace.completed.rel() == transitive_closure(join(p, r)));
  }
}

TEST_CASE("completion rejects a non index choice") {
  CHECK_THROWS_AS(
      completion_with_choice(per(top(sq(2))),
                             Coreflexive{identity(Carrier{"A", 2})}),
      std::invalid_argument);
}

TEST_CASE("thins is an order on the four point carrier") {
  PerUniverse u = enumerate_pers(Carrier{"A", 4});
  REQUIRE(u.pers.size() == 52);

  // Antisymmetry and containment over every pair.
  for (const Per& a : u.pers)
    for (const Per& b : u.pers) {
      if (thins_per(a, b) && thins_per(b, a)) CHECK(a.rel() == b.rel());
      if (thins_per(a, b)) CHECK(is_subset(a, b));
    }

  // Transitivity over a fixed-seed sample of triples.
  std::mt19937_64 gen(20260821);
  for (std::size_t k = 0; k < 600; ++k) {
    const Per& a = u.pers[gen() % u.pers.size()];
    const Per& b = u.pers[gen() % u.pers.size()];
    const Per& c = u.pers[gen() % u.pers.size()];
    if (thins_per(a, b) && thins_per(b, c)) CHECK(thins_per(a, c));
  }
}
