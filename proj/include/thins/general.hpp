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
 * @file general.hpp
 * @brief The thins ordering on arbitrary typed relations, core relations,
 *        and general indexes.
 *
 * In comments, x;y abbreviates compose(x, y).
 *
 * R thins S when the per domains of R thin those of S on both sides and
 * restricting S to the domains of R gives back R.  A core relation is one
 * whose per domains collapse to its coreflexive domains: no two nonempty
 * rows coincide and no two nonempty columns coincide.  The minimal
 * relations under thins are exactly the cores.
 */

#pragma once

#include <vector>

#include "thins/rel.hpp"

namespace thins {

/// The thins ordering on arbitrary relations of one sig:
/// per_left_domain(r) thins per_left_domain(s), per_right_domain(r) thins
/// per_right_domain(s), and r = left_domain(r);s;right_domain(r).
/// Throws TypeError when the sigs differ.
bool thins_rel(const Rel& r, const Rel& s);

/// left_domain(r) = per_left_domain(r) and right_domain(r) =
/// per_right_domain(r), i.e. distinct nonempty rows and distinct nonempty
/// columns.
bool is_core(const Rel& r);

/// Index test for arbitrary relations, with jd abbreviating domains of j
/// and rpd per domains of r:  j below r;  rpd_left;j;rpd_right = r;
/// jd_left;rpd_left;jd_left = jd_left;  jd_right;rpd_right;jd_right =
/// jd_right.  Throws TypeError when the sigs differ.
bool is_rel_index(const Rel& j, const Rel& r);

/// Deterministic index of r: jl;r;jr where jl keeps the least row of each
/// group of equal nonempty rows and jr the least column of each group of
/// equal nonempty columns.  The result is a core relation.
Rel find_rel_index(const Rel& r);

/// Every index of r, in lexicographic order.  Built from all products of
/// one row representative per equal-row group with one column
/// representative per equal-column group, filtered through is_rel_index.
std::vector<Rel> enumerate_rel_indexes(const Rel& r);

/// No relation in the universe other than s itself thins s.  The caller
/// supplies the quantification universe, normally every relation of the
/// sig of s.
bool is_minimal_rel(const Rel& s, const std::vector<Rel>& universe);

}  // namespace thins
