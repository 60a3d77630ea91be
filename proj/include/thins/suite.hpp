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

/// @file suite.hpp
/// @brief Exhaustive and sampled verification of the lemma catalogue.
///
/// Each lemma has a stable string id, a checker that quantifies over finite
/// universes of relations or pers, and a report carrying the instance count
/// and, on failure, the first counterexample found.  Quantification is
/// exhaustive whenever the tuple space is small enough; otherwise a seeded
/// sample is drawn so that runs with equal configuration are reproducible.

#ifndef THINS_SUITE_HPP
#define THINS_SUITE_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "thins/enumerate.hpp"
#include "thins/rel.hpp"

namespace thins {

/// Configuration for one suite run.
struct SuiteConfig {
  /// Carrier sizes over which the homogeneous (per) lemmas quantify.
  std::vector<std::size_t> sizes = {1, 2, 3};
  /// Type signatures over which the general-relation lemmas quantify.
  std::vector<TypeSig> sigs = {
      TypeSig{Carrier{"A", 2}, Carrier{"A", 2}},
      TypeSig{Carrier{"A", 3}, Carrier{"A", 3}},
  };
  /// Base seed; mixed with each lemma id so checkers draw independent samples.
  std::uint64_t seed = 1;
  /// Number of sampled tuples when a tuple space is too large to exhaust.
  std::size_t sample_budget = 100000;
  /// Largest tuple space that is still enumerated exhaustively.
  std::size_t triple_cap = 50000;
  /// Capacity guards handed to the enumerators.
  EnumerationLimits limits;
};

/// One named relation appearing in a counterexample.
struct WitnessPart {
  std::string role;
  Rel value;
};

/// Outcome of checking a single lemma.
struct LemmaReport {
  std::string id;
  std::string description;
  std::size_t instances = 0;
  bool pass = true;
  /// Human-readable location of the failure, empty on success.
  std::string note;
  /// The quantified values at the first failing instance, empty on success.
  std::vector<WitnessPart> counterexample;
};

/// Ids of every lemma in the catalogue, in report order.
std::vector<std::string> lemma_ids();

/// Runs every lemma checker and returns one report per lemma, sorted by id.
/// Sizes are visited in ascending order without repeats and signatures in
/// first-appearance order without repeats.
std::vector<LemmaReport> run_lemma_suite(const SuiteConfig& cfg);

/// True when every report passed.
bool all_pass(const std::vector<LemmaReport>& reports);

/// Plain-text rendering of a suite run, one line per lemma.
std::string suite_report_text(const SuiteConfig& cfg,
                              const std::vector<LemmaReport>& reports);

/// JSON rendering of a suite run; equal configurations give equal bytes.
std::string suite_report_json(const SuiteConfig& cfg,
                              const std::vector<LemmaReport>& reports);

}  // namespace thins

#endif  // THINS_SUITE_HPP
