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
 * @file abstract.hpp
 * @brief Finite untyped point-free relation algebras given by operation
 *        tables, with axiom checking and counterexample search.
 *
 * Four tiny builtin algebras are provided.  "one" collapses bottom,
 * identity and top into a single element, "two" has bottom below top with
 * top doubling as the identity, "three" is the chain bottom, identity,
 * top, and "four" adds the complement of the identity, making a diamond.
 * All four satisfy the core axioms; they differ on the cone rule, on the
 * axiom of choice, and on whether minimal pers must sit below the
 * identity, which is what makes them useful as separating examples.
 */

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace thins {

/// An untyped algebra as explicit operation tables over 0..n-1.
struct AbstractModel {
  std::vector<std::string> names;
  std::vector<std::vector<std::size_t>> compose;
  std::vector<std::size_t> converse;
  std::vector<std::vector<std::size_t>> join;
  std::vector<std::vector<std::size_t>> meet;
  std::size_t bot = 0;
  std::size_t id = 0;
  std::size_t top = 0;

  std::size_t size() const { return names.size(); }

  /// Derived inclusion order.
  bool le(std::size_t x, std::size_t y) const { return join[x][y] == y; }
};

/// Throws std::invalid_argument when table shapes or entries are off.
void validate_tables(const AbstractModel& m);

/// One of "one", "two", "three", "four".  Throws std::invalid_argument on
/// any other name.
AbstractModel builtin_model(const std::string& name);

/// One axiom's verdict; counterexample is empty exactly when it holds.
struct AxiomCheck {
  bool holds = true;
  std::string counterexample;
};

/// Axiom survey of a model.  The core axioms are the first five; cone and
/// choice are informational, some intended models fail them.
struct AxiomReport {
  AxiomCheck monoid;
  AxiomCheck lattice;
  AxiomCheck converse_laws;
  AxiomCheck factors;
  AxiomCheck modularity;
  AxiomCheck cone;
  AxiomCheck choice;

  bool core_pass() const {
    return monoid.holds && lattice.holds && converse_laws.holds &&
           factors.holds && modularity.holds;
  }
};

/// Checks every axiom by finite quantification over the tables.  Factors
/// are checked by computing the join of all candidates and verifying the
/// bound.  Throws std::invalid_argument on malformed tables.
AxiomReport check_axioms(const AbstractModel& m);

/// A per of the model with no index, or empty when every per has one.
std::optional<std::size_t> choice_failure(const AbstractModel& m);

/// The thins ordering evaluated inside the model, over its pers.
struct ModelThins {
  std::vector<std::size_t> pers;
  std::vector<std::vector<bool>> thins;
  bool discrete = true;
};

/// Pers of the model (x with converse x = x and x;x below x) and the thins
/// relation between them, with the domain taken as meet(id, x).
ModelThins thins_in_model(const AbstractModel& m);

/// True when some thins-minimal per of the model is not below the
/// identity, so minimality and coreflexivity come apart.
bool check_minimality_gap(const AbstractModel& m);

/// The homogeneous concrete relations on an n point carrier, packaged as
/// an AbstractModel.  Elements are ordered lexicographically and named by
/// their pair lists.
AbstractModel abstract_from_concrete(std::size_t n);

/// Structure-preserving bijection search.  Exhaustive over permutations,
/// intended for tiny models only.
bool isomorphic(const AbstractModel& a, const AbstractModel& b);

}  // namespace thins
