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
 * @file io.hpp
 * @brief File formats: relations as JSON or as 0/1 matrix text, abstract
 *        models as JSON.
 *
 * Relation JSON: {"carriers": {"A": 3, "B": 2}, "sig": ["A","B"],
 * "pairs": [[0,0],[1,0]]}.  Pairs are emitted sorted.  Matrix text is one
 * line per row of '0'/'1' characters; a square matrix parses as a
 * homogeneous relation on carrier "A", a rectangular one as "A"~"B".
 * Model JSON carries the operation tables verbatim.
 */

#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"
#include "thins/abstract.hpp"
#include "thins/rel.hpp"

namespace thins {

/// Thrown when input text or JSON does not describe a valid value.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

nlohmann::json rel_to_json(const Rel& r);
Rel rel_from_json(const nlohmann::json& j);

std::string rel_to_text(const Rel& r);
Rel rel_from_text(const std::string& text);

nlohmann::json model_to_json(const AbstractModel& m);
AbstractModel model_from_json(const nlohmann::json& j);

}  // namespace thins
