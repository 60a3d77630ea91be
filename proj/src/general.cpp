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

#include "thins/general.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "thins/per.hpp"

namespace thins {

namespace {

void require_same_sig(const Rel& x, const Rel& y, const char* op) {
  if (x.sig() != y.sig())
    throw TypeError(std::string(op) + ": sig mismatch, " + to_string(x.sig()) +
                    " vs " + to_string(y.sig()));
}

Rel sandwich(const Rel& left, const Rel& mid, const Rel& right) {
  return compose(compose(left, mid), right);
}

/// Coreflexive keeping, from each group of equal nonempty rows, the row
/// with the least index.
Rel least_row_reps(const Rel& r) {
  Rel j{TypeSig{r.sig().src, r.sig().src}};
  for (std::size_t a = 0; a < r.rows(); ++a) {
    std::uint64_t row = r.row_bits(a);
    if (row == 0) continue;
    bool least = true;
    for (std::size_t a2 = 0; a2 < a; ++a2)
      if (r.row_bits(a2) == row) {
        least = false;
        break;
      }
    if (least) j.set(a, a);
  }
  return j;
}

/// Element masks of the equal-nonempty-row groups, ordered by least member.
std::vector<std::uint64_t> row_groups(const Rel& r) {
  std::vector<std::uint64_t> groups;
  for (std::size_t a = 0; a < r.rows(); ++a) {
    std::uint64_t row = r.row_bits(a);
    if (row == 0) continue;
    bool least = true;
    std::uint64_t members = 0;
    for (std::size_t a2 = 0; a2 < r.rows(); ++a2)
      if (r.row_bits(a2) == row) {
        if (a2 < a) least = false;
        members |= std::uint64_t{1} << a2;
      }
    if (least) groups.push_back(members);
  }
  return groups;
}

/// All coreflexives choosing one member from each group.
std::vector<Rel> rep_choices(const Carrier& c,
                             const std::vector<std::uint64_t>& groups) {
  std::vector<Rel> out{bottom(TypeSig{c, c})};
  for (std::uint64_t group : groups) {
    std::vector<Rel> next;
    for (const Rel& base : out) {
      for (std::uint64_t w = group; w != 0; w &= w - 1) {
        std::size_t b = static_cast<std::size_t>(std::countr_zero(w));
        Rel ext = base;
        ext.set(b, b);
        next.push_back(std::move(ext));
      }
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace

bool thins_rel(const Rel& r, const Rel& s) {
  require_same_sig(r, s, "thins_rel");
  return thins_per(per_left_domain(r), per_left_domain(s)) &&
         thins_per(per_right_domain(r), per_right_domain(s)) &&
         r == sandwich(left_domain(r), s, right_domain(r));
}

bool is_core(const Rel& r) {
  return left_domain(r).rel() == per_left_domain(r).rel() &&
         right_domain(r).rel() == per_right_domain(r).rel();
}

bool is_rel_index(const Rel& j, const Rel& r) {
  require_same_sig(j, r, "is_rel_index");
  Rel pl = per_left_domain(r).rel();
  Rel pr = per_right_domain(r).rel();
  Rel jl = left_domain(j).rel();
  Rel jr = right_domain(j).rel();
  return is_subset(j, r) && sandwich(pl, j, pr) == r &&
         sandwich(jl, pl, jl) == jl && sandwich(jr, pr, jr) == jr;
}

Rel find_rel_index(const Rel& r) {
  return sandwich(least_row_reps(r), r, least_row_reps(converse(r)));
}

std::vector<Rel> enumerate_rel_indexes(const Rel& r) {
  Rel rc = converse(r);
  std::vector<Rel> lefts = rep_choices(r.sig().src, row_groups(r));
  std::vector<Rel> rights = rep_choices(r.sig().tgt, row_groups(rc));
  std::vector<Rel> out;
  out.reserve(lefts.size() * rights.size());
  for (const Rel& jl : lefts)
    for (const Rel& jr : rights) {
      Rel candidate = sandwich(jl, r, jr);
      if (is_rel_index(candidate, r)) out.push_back(std::move(candidate));
    }
  std::sort(out.begin(), out.end(), lex_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_minimal_rel(const Rel& s, const std::vector<Rel>& universe) {
  for (const Rel& x : universe)
    if (thins_rel(x, s) && !(x == s)) return false;
  return true;
}

}  // namespace thins
