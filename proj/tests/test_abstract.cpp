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
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "thins/abstract.hpp"

using namespace thins;

namespace {

const char* kBuiltins[] = {"one", "two", "three", "four"};

}  // namespace

TEST_CASE("builtin models satisfy the core axioms") {
  for (const char* name : kBuiltins) {
    AbstractModel m = builtin_model(name);
    CHECK_NOTHROW(validate_tables(m));
    AxiomReport report = check_axioms(m);
    CHECK(report.monoid.holds);
    CHECK(report.lattice.holds);
    CHECK(report.converse_laws.holds);
    CHECK(report.factors.holds);
    CHECK(report.modularity.holds);
    CHECK(report.core_pass());
  }
  CHECK_THROWS_AS(builtin_model("five"), std::invalid_argument);
}

TEST_CASE("cone rule separates one from the rest") {
  const bool expected[] = {false, true, true, true};
  for (std::size_t k = 0; k < 4; ++k)
    CHECK(check_axioms(builtin_model(kBuiltins[k])).cone.holds == expected[k]);
}

TEST_CASE("choice of indexes fails beyond two elements") {
  const bool expected[] = {true, true, false, false};
  for (std::size_t k = 0; k < 4; ++k) {
    AbstractModel m = builtin_model(kBuiltins[k]);
    AxiomReport report = check_axioms(m);
    CHECK(report.choice.holds == expected[k]);
    std::optional<std::size_t> bad = choice_failure(m);
    CHECK(bad.has_value() == !expected[k]);
    if (bad) CHECK(m.names[*bad] == "top");
  }
}

TEST_CASE("thins is discrete in every builtin model") {
  for (const char* name : kBuiltins) {
    AbstractModel m = builtin_model(name);
    ModelThins mt = thins_in_model(m);
    CHECK(mt.discrete);
    for (std::size_t a = 0; a < mt.pers.size(); ++a)
      for (std::size_t b = 0; b < mt.pers.size(); ++b)
        CHECK(mt.thins[a][b] == (a == b));
  }
  AbstractModel four = builtin_model("four");
  ModelThins mt = thins_in_model(four);
  std::vector<std::string> per_names;
  for (std::size_t x : mt.pers) per_names.push_back(four.names[x]);
  std::sort(per_names.begin(), per_names.end());
  CHECK(per_names == std::vector<std::string>{"bot", "id", "top"});
}

TEST_CASE("minimality gap appears exactly in three and four") {
  const bool expected[] = {false, false, true, true};
  for (std::size_t k = 0; k < 4; ++k)
    CHECK(check_minimality_gap(builtin_model(kBuiltins[k])) == expected[k]);
}

TEST_CASE("a broken converse table is caught with a counterexample") {
  AbstractModel m = builtin_model("four");
  std::size_t nid = 0;
  while (m.names[nid] != "nid") ++nid;
  m.converse[nid] = m.id;
  AxiomReport report = check_axioms(m);
  CHECK_FALSE(report.converse_laws.holds);
  CHECK(report.converse_laws.counterexample == "gc: x=nid, y=id");
  CHECK_FALSE(report.core_pass());
}

TEST_CASE("malformed tables are rejected") {
  AbstractModel m = builtin_model("two");
  m.compose[0][0] = 99;
  CHECK_THROWS_AS(validate_tables(m), std::invalid_argument);
  CHECK_THROWS_AS(check_axioms(m), std::invalid_argument);

  AbstractModel ragged = builtin_model("two");
  ragged.join.pop_back();
  CHECK_THROWS_AS(validate_tables(ragged), std::invalid_argument);
}

TEST_CASE("concrete relation algebras package as models") {
  AbstractModel empty = abstract_from_concrete(0);
  CHECK(isomorphic(empty, builtin_model("one")));

  AbstractModel point = abstract_from_concrete(1);
  CHECK(point.size() == 2);
  CHECK(isomorphic(point, builtin_model("two")));

  AbstractModel pair = abstract_from_concrete(2);
  CHECK(pair.size() == 16);
  AxiomReport report = check_axioms(pair);
  CHECK(report.core_pass());
  CHECK(report.cone.holds);
  CHECK(report.choice.holds);
}

TEST_CASE("isomorphism is structural") {
  CHECK(isomorphic(builtin_model("four"), builtin_model("four")));
  CHECK_FALSE(isomorphic(builtin_model("two"), builtin_model("three")));
  CHECK_FALSE(isomorphic(builtin_model("two"), builtin_model("four")));
}
