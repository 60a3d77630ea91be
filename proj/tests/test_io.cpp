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

#include <stdexcept>
#include <string>

#include "doctest.h"
#include "helpers.hpp"
#include "json.hpp"
#include "thins/abstract.hpp"
#include "thins/io.hpp"
#include "thins/rel.hpp"

using namespace thins;
using thins_tests::rp;
using thins_tests::rp2;
using thins_tests::sq;

TEST_CASE("relation JSON round trips") {
  Rel square = rp(3, {{0, 2}, {1, 1}});
  CHECK(rel_from_json(rel_to_json(square)) == square);

  Rel wide = rp2(2, 3, {{0, 0}, {1, 2}});
  nlohmann::json j = rel_to_json(wide);
  CHECK(j["carriers"]["A"] == 2);
  CHECK(j["carriers"]["B"] == 3);
  CHECK(j["sig"] == nlohmann::json::array({"A", "B"}));
  CHECK(rel_from_json(j) == wide);

  Rel clash{TypeSig{Carrier{"A", 2}, Carrier{"A", 3}}};
  CHECK_THROWS_AS(rel_to_json(clash), std::invalid_argument);
}

TEST_CASE("relation JSON rejects malformed input") {
  CHECK_THROWS_AS(rel_from_json(nlohmann::json::array()), ParseError);
  CHECK_THROWS_AS(rel_from_json(nlohmann::json::object()), ParseError);
  nlohmann::json j = rel_to_json(rp(2, {{0, 0}}));
  j["pairs"] = nlohmann::json::array({nlohmann::json::array({0, 5})});
  CHECK_THROWS_AS(rel_from_json(j), ParseError);
  j["pairs"] = nlohmann::json::array({"x"});
  CHECK_THROWS_AS(rel_from_json(j), ParseError);
  j["sig"] = nlohmann::json::array({"A", "Z"});
  CHECK_THROWS_AS(rel_from_json(j), ParseError);
}

TEST_CASE("matrix text round trips") {
  Rel square = rp(2, {{0, 1}, {1, 0}});
  CHECK(rel_to_text(square) == "01\n10\n");
  Rel back = rel_from_text(rel_to_text(square));
  CHECK(back == square);
  CHECK(back.sig().homogeneous());

  Rel wide = rp2(2, 3, {{0, 0}, {1, 2}});
  Rel wide_back = rel_from_text(rel_to_text(wide));
  CHECK(wide_back == wide);
  CHECK(wide_back.sig().src.name() == "A");
  CHECK(wide_back.sig().tgt.name() == "B");

  Rel none = rel_from_text("");
  CHECK(none.sig() == TypeSig{Carrier{"A", 0}, Carrier{"A", 0}});
}

TEST_CASE("matrix text rejects malformed input") {
  CHECK_THROWS_AS(rel_from_text("01\n0\n"), ParseError);
  CHECK_THROWS_AS(rel_from_text("0x\n01\n"), ParseError);
}

TEST_CASE("model JSON round trips") {
  AbstractModel four = builtin_model("four");
  nlohmann::json j = model_to_json(four);
  AbstractModel back = model_from_json(j);
  CHECK(back.names == four.names);
  CHECK(back.compose == four.compose);
  CHECK(back.converse == four.converse);
  CHECK(back.join == four.join);
  CHECK(back.meet == four.meet);
  CHECK(back.bot == four.bot);
  CHECK(back.id == four.id);
  CHECK(back.top == four.top);
}

TEST_CASE("model JSON rejects malformed input") {
  CHECK_THROWS_AS(model_from_json(nlohmann::json::array()), ParseError);
  nlohmann::json j = model_to_json(builtin_model("two"));
  j["compose"][0][0] = 99;
  CHECK_THROWS_AS(model_from_json(j), ParseError);
  j = model_to_json(builtin_model("two"));
  j.erase("converse");
  CHECK_THROWS_AS(model_from_json(j), ParseError);
}
