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
 * @file per.hpp
 * @brief The thins ordering on pers, per indexes, minimality and
 *        maximality, and completion of a per to a maximal one.
 *
 * In comments, x;y abbreviates compose(x, y) and d abbreviates domain(P).
 *
 * A per P thins a per Q when P = d;Q;d and Q = Q;d;Q.  The first equation
 * says restricting Q on both sides to the domain of P recovers P exactly;
 * the second says Q survives being funnelled through that domain, so P
 * keeps enough of each equivalence class of Q to rebuild all of Q.
 *
 * An index of a per P is a relation J with J below d, J;P;J = J and
 * P;J;P = P.  Concretely, an index picks exactly one representative from
 * each equivalence class of P.  Every per has one, and the chosen
 * representatives form a coreflexive.
 */

#pragma once

#include <vector>

#include "thins/rel.hpp"

namespace thins {

/// All pers on one carrier, the quantification domain for minimality and
/// maximality checks.
struct PerUniverse {
  Carrier carrier;
  std::vector<Per> pers;
};

/// The four stages of completing a per P to a maximal per above it.
struct CompletionTrace {
  /// q: identity restricted to nothing when P is empty, full identity
  /// otherwise; the coreflexive the completed per must absorb.
  Coreflexive support;
  /// J: one chosen representative per class of join(P;top;P, q).
  Coreflexive choice;
  /// R: full relation on the chosen representatives, bridging the classes.
  Per link;
  /// Q: the completed per, join of P, R, P;R and R;P.
  Per completed;
};

/// The thins ordering.  With d = domain(p): p = d;q;d and q = q;d;q.
/// Throws TypeError when the carriers differ.
bool thins_per(const Per& p, const Per& q);

/// Index test: j below domain(p), j;p;j = j, p;j;p = p.
/// Throws TypeError when the carriers differ.
bool is_per_index(const Rel& j, const Per& p);

/// The least representative of each equivalence class of p.  Deterministic
/// witness that every per has an index.
Coreflexive find_per_index(const Per& p);

/// Every index of p, one per way of choosing a representative from each
/// class.  Classes are taken in order of their least element and the
/// choices step through members in ascending order, so the first entry is
/// find_per_index(p).  The count is the product of the class sizes; the
/// empty per yields exactly the empty index.
std::vector<Coreflexive> enumerate_per_indexes(const Per& p);

/// No per in the universe other than p itself thins p.
bool is_minimal_per(const Per& p, const PerUniverse& u);

/// p thins no per in the universe other than p itself.
bool is_maximal_per(const Per& p, const PerUniverse& u);

/// meet(identity, top;p;top) below p.  Equivalent to maximality of p among
/// all pers on the carrier, and holds exactly when p is empty or is an
/// equivalence relation on the whole carrier.
bool maximality_condition(const Per& p);

/// Runs the completion with a caller-supplied choice of index for
/// join(p;top;p, support).  Throws std::invalid_argument when the choice
/// is not an index of that per.
CompletionTrace completion_with_choice(const Per& p, const Coreflexive& choice);

/// Completes p to a maximal per that p thins, choosing representatives via
/// find_per_index.  The result is checked: completed is a per, p thins it,
/// it satisfies maximality_condition, and it equals the transitive closure
/// of join(p, link).
CompletionTrace maximal_completion(const Per& p);

}  // namespace thins
