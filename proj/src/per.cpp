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

#include "thins/per.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <utility>

namespace thins {

namespace {

void require_same_carrier(const Per& p, const Per& q, const char* op) {
  if (p.carrier() != q.carrier())
    throw TypeError(std::string(op) + ": carrier mismatch, " +
                    to_string(p.rel().sig()) + " vs " + to_string(q.rel().sig()));
}

Rel sandwich(const Rel& left, const Rel& mid, const Rel& right) {
  return compose(compose(left, mid), right);
}

}  // namespace

bool thins_per(const Per& p, const Per& q) {
  require_same_carrier(p, q, "thins_per");
  Rel d = domain(p).rel();
  return p.rel() == sandwich(d, q, d) && q.rel() == sandwich(q, d, q);
}

bool is_per_index(const Rel& j, const Per& p) {
  if (j.sig() != p.rel().sig())
    throw TypeError("is_per_index: sig mismatch, " + to_string(j.sig()) +
                    " vs " + to_string(p.rel().sig()));
  Rel d = domain(p).rel();
  return is_subset(j, d) && sandwich(j, p, j) == j && sandwich(p, j, p) == p.rel();
}

Coreflexive find_per_index(const Per& p) {
  const Rel& r = p.rel();
  Rel j{r.sig()};
  for (std::size_t a = 0; a < r.rows(); ++a) {
    std::uint64_t row = r.row_bits(a);
    if (row != 0 && static_cast<std::size_t>(std::countr_zero(row)) == a)
      j.set(a, a);
  }
  return Coreflexive{std::move(j)};
}

std::vector<Coreflexive> enumerate_per_indexes(const Per& p) {
  const Rel& r = p.rel();
  // One mask per equivalence class, classes ordered by least element.
  std::vector<std::uint64_t> classes;
  for (std::size_t a = 0; a < r.rows(); ++a) {
    std::uint64_t row = r.row_bits(a);
    if (row != 0 && static_cast<std::size_t>(std::countr_zero(row)) == a)
      classes.push_back(row);
  }
  std::vector<Rel> partial{bottom(r.sig())};
  for (std::uint64_t cls : classes) {
    std::vector<Rel> next;
    next.reserve(partial.size() * static_cast<std::size_t>(std::popcount(cls)));
    for (const Rel& base : partial) {
      for (std::uint64_t w = cls; w != 0; w &= w - 1) {
        std::size_t b = static_cast<std::size_t>(std::countr_zero(w));
        Rel ext = base;
        ext.set(b, b);
        next.push_back(std::move(ext));
      }
    }
    partial = std::move(next);
  }
  std::vector<Coreflexive> out;
  out.reserve(partial.size());
  for (Rel& j : partial) out.emplace_back(std::move(j));
  return out;
}

bool is_minimal_per(const Per& p, const PerUniverse& u) {
  for (const Per& x : u.pers)
    if (thins_per(x, p) && !(x == p)) return false;
  return true;
}

bool is_maximal_per(const Per& p, const PerUniverse& u) {
  for (const Per& y : u.pers)
    if (thins_per(p, y) && !(p == y)) return false;
  return true;
}

bool maximality_condition(const Per& p) {
  const Rel& r = p.rel();
  Rel t = top(r.sig());
  return is_subset(meet(identity(p.carrier()), sandwich(t, r, t)), r);
}

CompletionTrace completion_with_choice(const Per& p, const Coreflexive& choice) {
  const Rel& r = p.rel();
  Rel t = top(r.sig());
  Coreflexive support{meet(identity(p.carrier()), sandwich(t, r, t))};
  Per target{join(sandwich(r, t, r), support.rel())};
  if (!is_per_index(choice.rel(), target))
    throw std::invalid_argument(
        "completion_with_choice: not an index of the completion target");
  Per link{sandwich(choice, t, choice)};
  Rel q = join(join(r, link.rel()),
               join(compose(r, link.rel()), compose(link.rel(), r)));
  return CompletionTrace{std::move(support), choice, std::move(link),
                         Per{std::move(q)}};
}

CompletionTrace maximal_completion(const Per& p) {
  const Rel& r = p.rel();
  Rel t = top(r.sig());
  Per target{join(sandwich(r, t, r),
                  meet(identity(p.carrier()), sandwich(t, r, t)))};
  CompletionTrace trace = completion_with_choice(p, find_per_index(target));
  if (!thins_per(p, trace.completed) || !maximality_condition(trace.completed) ||
      !(trace.completed.rel() == transitive_closure(join(r, trace.link.rel()))))
    throw std::logic_error("maximal_completion: guarantee violated");
  return trace;
}

}  // namespace thins
