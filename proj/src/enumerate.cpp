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

#include "thins/enumerate.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

namespace thins {

namespace {

/// Extends blocks with every way of placing each remaining element, either
/// into an existing block or into a fresh one.
void partitions_rec(const std::vector<std::size_t>& elems, std::size_t next,
                    std::vector<std::vector<std::size_t>>& blocks,
                    const TypeSig& sig, std::vector<Per>& out) {
  if (next == elems.size()) {
    Rel r{sig};
    for (const auto& block : blocks)
      for (std::size_t a : block)
        for (std::size_t b : block) r.set(a, b);
    out.emplace_back(std::move(r));
    return;
  }
  std::size_t e = elems[next];
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    blocks[i].push_back(e);
    partitions_rec(elems, next + 1, blocks, sig, out);
    blocks[i].pop_back();
  }
  blocks.push_back({e});
  partitions_rec(elems, next + 1, blocks, sig, out);
  blocks.pop_back();
}

}  // namespace

std::vector<Rel> enumerate_relations(const TypeSig& sig,
                                     const EnumerationLimits& limits) {
  std::size_t cells = sig.src.size() * sig.tgt.size();
  if (cells > limits.max_rel_cells)
    throw CapacityError("enumerate_relations: " + to_string(sig) + " has " +
                        std::to_string(cells) + " cells, cap is " +
                        std::to_string(limits.max_rel_cells));
  std::vector<Rel> out;
  out.reserve(std::size_t{1} << cells);
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << cells); ++code) {
    Rel r{sig};
    // Cell (0,0) is the most significant bit, so numeric order of the code
    // coincides with lexicographic order of the relations.
    for (std::size_t c = 0; c < cells; ++c)
      if ((code >> (cells - 1 - c)) & 1)
        r.set(c / sig.tgt.size(), c % sig.tgt.size());
    out.push_back(std::move(r));
  }
  return out;
}

PerUniverse enumerate_pers(const Carrier& carrier,
                           const EnumerationLimits& limits) {
  std::size_t n = carrier.size();
  if (n > limits.max_per_carrier)
    throw CapacityError("enumerate_pers: carrier of " + std::to_string(n) +
                        " exceeds cap " + std::to_string(limits.max_per_carrier));
  TypeSig sig{carrier, carrier};
  std::vector<Per> pers;
  for (std::uint64_t dom = 0; dom < (std::uint64_t{1} << n); ++dom) {
    std::vector<std::size_t> elems;
    for (std::size_t a = 0; a < n; ++a)
      if ((dom >> a) & 1) elems.push_back(a);
    std::vector<std::vector<std::size_t>> blocks;
    partitions_rec(elems, 0, blocks, sig, pers);
  }
  std::sort(pers.begin(), pers.end(),
            [](const Per& x, const Per& y) { return lex_less(x.rel(), y.rel()); });
  return PerUniverse{carrier, std::move(pers)};
}

Counts counts(std::size_t n, std::size_t cap) {
  if (n > cap)
    throw CapacityError("counts: carrier of " + std::to_string(n) +
                        " exceeds cap " + std::to_string(cap));
  EnumerationLimits limits;
  limits.max_per_carrier = std::max(limits.max_per_carrier, cap);
  PerUniverse u = enumerate_pers(Carrier{"A", n}, limits);
  Counts c;
  c.pers = u.pers.size();
  for (const Per& p : u.pers) {
    if (is_coreflexive(p.rel())) ++c.coreflexives;
    if (is_minimal_per(p, u)) ++c.minimal;
    if (is_maximal_per(p, u)) ++c.maximal;
    if (is_equivalence(p.rel())) ++c.equivalences;
  }
  return c;
}

}  // namespace thins
