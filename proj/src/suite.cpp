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

// In comments, x;y abbreviates compose(x, y) and x~ abbreviates converse(x).

#include "thins/suite.hpp"

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "json.hpp"
#include "thins/general.hpp"
#include "thins/io.hpp"
#include "thins/per.hpp"

namespace thins {
namespace {

// Thrown by Probe::require after recording a counterexample; unwinds the
// checker so every lemma stops at its first failing instance.
struct FirstFailure {};

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

std::uint64_t mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Collects the outcome of one lemma and aborts it on the first failure.
class Probe {
 public:
  Probe(LemmaReport& rep, std::uint64_t seed) : rep_(rep), seed_(seed) {}

  void tick() { ++rep_.instances; }

  void require(bool ok, const std::string& note,
               const std::vector<WitnessPart>& parts) {
    if (ok) return;
    rep_.pass = false;
    rep_.note = note;
    rep_.counterexample = parts;
    throw FirstFailure{};
  }

  // Fresh deterministic seed for each sampling loop within one lemma.
  std::uint64_t next_seed() {
    return mix(seed_ + 0x9e3779b97f4a7c15ull * ++draws_);
  }

 private:
  LemmaReport& rep_;
  std::uint64_t seed_;
  std::uint64_t draws_ = 0;
};

std::size_t draw(std::mt19937_64& g, std::size_t n) {
  return static_cast<std::size_t>(g() % n);
}

// Visits (a, b, c) index tuples: exhaustively when the tuple space fits the
// cap, otherwise a seeded sample of fixed size.  Pair and single loops in the
// checkers are always exhaustive; only three-way quantification is sampled.
template <class F>
void tuples3(std::size_t na, std::size_t nb, std::size_t nc,
             std::uint64_t seed, const SuiteConfig& cfg, F&& f) {
  if (na == 0 || nb == 0 || nc == 0) return;
  if (na * nb * nc <= cfg.triple_cap) {
    for (std::size_t a = 0; a < na; ++a)
      for (std::size_t b = 0; b < nb; ++b)
        for (std::size_t c = 0; c < nc; ++c) f(a, b, c);
    return;
  }
  std::mt19937_64 g(seed);
  for (std::size_t i = 0; i < cfg.sample_budget; ++i) {
    std::size_t a = draw(g, na);
    std::size_t b = draw(g, nb);
    std::size_t c = draw(g, nc);
    f(a, b, c);
  }
}

Rel seq(std::initializer_list<Rel> parts) {
  auto it = parts.begin();
  Rel acc = *it++;
  for (; it != parts.end(); ++it) acc = compose(acc, *it);
  return acc;
}

WitnessPart W(std::string role, const Rel& value) {
  return WitnessPart{std::move(role), value};
}

// Everything the per lemmas quantify over on one carrier.
struct PerScope {
  Carrier carrier;
  PerUniverse u;
  std::vector<Coreflexive> coreflexives;
  std::vector<std::vector<char>> thins;
  std::vector<std::vector<Coreflexive>> indexes;
  std::vector<char> minimal;
  std::vector<char> maximal;

  std::size_t index_of(const Rel& r) const {
    auto it = std::lower_bound(
        u.pers.begin(), u.pers.end(), r,
        [](const Per& p, const Rel& v) { return lex_less(p.rel(), v); });
    if (it == u.pers.end() || !(it->rel() == r))
      throw std::logic_error("suite: per missing from its universe");
    return static_cast<std::size_t>(it - u.pers.begin());
  }
};

// Everything the typed-relation lemmas quantify over on one signature.
// Expensive derived data is built on first use.
struct SigScope {
  TypeSig sig;
  std::vector<Rel> ab;
  std::vector<Rel> ba;
  std::vector<Rel> aa;
  std::vector<Rel> bb;
  std::vector<Per> pld;
  std::vector<Per> prd;
  std::vector<Rel> ld;
  std::vector<Rel> rd;
  bool minimal_built = false;
  std::vector<char> minimal_;
  bool indexes_built = false;
  std::vector<std::vector<Rel>> indexes_;

  // Same value as thins_rel(ab[i], ab[j]) using the cached domains.  The
  // inclusion test is a necessary condition checked first because it is cheap.
  bool ord(std::size_t i, std::size_t j) const {
    if (!is_subset(ab[i], ab[j])) return false;
    return thins_per(pld[i], pld[j]) && thins_per(prd[i], prd[j]) &&
           ab[i] == compose(compose(ld[i], ab[j]), rd[i]);
  }
};

struct Ctx {
  explicit Ctx(const SuiteConfig& c) : cfg(c) {}

  const SuiteConfig& cfg;
  std::map<std::pair<std::string, std::size_t>, PerScope> per_scopes;
  std::map<std::tuple<std::string, std::size_t, std::string, std::size_t>,
           SigScope>
      sig_scopes;

  PerScope& per_scope(const Carrier& c);
  SigScope& sig_scope(const TypeSig& sig);
};

PerScope& Ctx::per_scope(const Carrier& c) {
  auto key = std::make_pair(c.name(), c.size());
  auto found = per_scopes.find(key);
  if (found != per_scopes.end()) return found->second;

  PerScope s;
  s.carrier = c;
  s.u = enumerate_pers(c, cfg.limits);
  const std::size_t count = s.u.pers.size();
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << c.size()); ++m) {
    Rel r{TypeSig{c, c}};
    for (std::size_t a = 0; a < c.size(); ++a)
      if ((m >> a) & 1) r.set(a, a);
    s.coreflexives.push_back(Coreflexive{std::move(r)});
  }
  s.thins.assign(count, std::vector<char>(count, 0));
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < count; ++j)
      s.thins[i][j] = thins_per(s.u.pers[i], s.u.pers[j]) ? 1 : 0;
  s.indexes.reserve(count);
  for (const Per& p : s.u.pers) s.indexes.push_back(enumerate_per_indexes(p));
  s.minimal.assign(count, 1);
  s.maximal.assign(count, 1);
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < count; ++j) {
      if (i == j) continue;
      if (s.thins[j][i]) s.minimal[i] = 0;
      if (s.thins[i][j]) s.maximal[i] = 0;
    }
  return per_scopes.emplace(std::move(key), std::move(s)).first->second;
}

SigScope& Ctx::sig_scope(const TypeSig& sig) {
  auto key = std::make_tuple(sig.src.name(), sig.src.size(), sig.tgt.name(),
                             sig.tgt.size());
  auto found = sig_scopes.find(key);
  if (found != sig_scopes.end()) return found->second;

  SigScope s;
  s.sig = sig;
  s.ab = enumerate_relations(sig, cfg.limits);
  s.ba = enumerate_relations(TypeSig{sig.tgt, sig.src}, cfg.limits);
  s.aa = enumerate_relations(TypeSig{sig.src, sig.src}, cfg.limits);
  s.bb = enumerate_relations(TypeSig{sig.tgt, sig.tgt}, cfg.limits);
  s.pld.reserve(s.ab.size());
  s.prd.reserve(s.ab.size());
  for (const Rel& r : s.ab) {
    s.pld.push_back(per_left_domain(r));
    s.prd.push_back(per_right_domain(r));
    s.ld.push_back(left_domain(r).rel());
    s.rd.push_back(right_domain(r).rel());
  }
  return sig_scopes.emplace(std::move(key), std::move(s)).first->second;
}

const std::vector<char>& sig_minimal(SigScope& s) {
  if (!s.minimal_built) {
    const std::size_t n = s.ab.size();
    s.minimal_.assign(n, 1);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i)
        if (i != j && s.ord(i, j)) {
          s.minimal_[j] = 0;
          break;
        }
    s.minimal_built = true;
  }
  return s.minimal_;
}

const std::vector<std::vector<Rel>>& sig_indexes(SigScope& s) {
  if (!s.indexes_built) {
    s.indexes_.reserve(s.ab.size());
    for (const Rel& r : s.ab) s.indexes_.push_back(enumerate_rel_indexes(r));
    s.indexes_built = true;
  }
  return s.indexes_;
}

std::string size_at(std::size_t n) { return "size " + std::to_string(n); }
std::string sig_at(const TypeSig& sig) { return "sig " + to_string(sig); }

// Visits every per P on every configured carrier together with the trace of
// each completion of P, one trace per index of the completion target.
template <class F>
void for_completions(Ctx& ctx, const SuiteConfig& cfg, F&& f) {
  for (std::size_t n : cfg.sizes) {
    PerScope& s = ctx.per_scope(Carrier{"A", n});
    const std::string at = size_at(n);
    const Rel I = identity(s.carrier);
    const Rel T = top(TypeSig{s.carrier, s.carrier});
    for (const Per& p : s.u.pers) {
      Rel q = meet(I, seq({T, p, T}));
      Rel target = join(seq({p, T, p}), q);
      for (const Coreflexive& j : s.indexes[s.index_of(target)]) {
        CompletionTrace t = completion_with_choice(p, j);
        f(at, p, t);
      }
    }
  }
}

// Laws of the operator algebra.

void check_alg_monoid(Ctx& ctx, const SuiteConfig& cfg, Probe& pr) {
  for (const TypeSig& sig : cfg.sigs) {
    SigScope& s = ctx.sig_scope(sig);
    const std::string at = sig_at(sig);
    const Rel ia = identity(sig.src);
    const Rel ib = identity(sig.tgt);
    const Rel zba = bottom(TypeSig{sig.tgt, sig.src});
    const Rel zaa = bottom(TypeSig{sig.src, sig.src});
    const Rel zbb = bottom(TypeSig{sig.tgt, sig.tgt});
    for (const Rel& x : s.ab) {
      pr.tick();
      pr.require(compose(ia, x) == x && compose(x, ib) == x,
                 at + ": identities are not units", {W("X", x)});
      pr.require(compose(x, zba) == zaa && compose(zba, x) == zbb,
                 at + ": bottom does not annihilate", {W("X", x)});
    }
    tuples3(s.ab.size(), s.ba.size(), s.ab.size(), pr.next_seed(), cfg,
            [&](std::size_t a, std::size_t b, std::size_t c) {
              const Rel &x = s.ab[a], &y = s.ba[b], &z = s.ab[c];
              pr.tick();
              pr.require(compose(compose(x, y), z) == compose(x, compose(y, z)),
                         at + ": composition is not associative",
                         {W("X", x), W("Y", y), W("Z", z)});
            });
    tuples3(s.ab.size(), s.ab.size(), s.ba.size(), pr.next_seed(), cfg,
            [&](std::size_t a, std::size_t b, std::size_t c) {
              const Rel &x = s.ab[a], &x2 = s.ab[b], &y = s.ba[c];
              pr.tick();
              pr.require(compose(join(x, x2), y) ==
                             join(compose(x, y), compose(x2, y)),
                         at + ": composition does not distribute over join on "
                              "the left",
                         {W("X", x), W("X'", x2), W("Y", y)});
            });
    tuples3(s.ab.size(), s.ba.size(), s.ba.size(), pr.next_seed(), cfg,
            [&](std::size_t a, std::size_t b, std::size_t c) {
              const Rel &x = s.ab[a], &y = s.ba[b], &y2 = s.ba[c];
              pr.tick();
              pr.require(compose(x, join(y, y2)) ==
                             join(compose(x, y), compose(x, y2)),
                         at + ": composition does not distribute over join on "
                              "the right",
                         {W("X", x), W("Y", y), W("Y'", y2)});
            });
  }
}

void check_alg_factors(Ctx& ctx, const SuiteConfig& cfg, Probe& pr) {
  for (const TypeSig& sig : cfg.sigs) {
    SigScope& s = ctx.sig_scope(sig);
    const std::string at = sig_at(sig);
    tuples3(s.ab.size(), s.ab.size(), s.bb.size(), pr.next_seed(), cfg,
            [&](std::size_t a, std::size_t b, std::size_t c) {
              const Rel &x = s.ab[a], &z = s.ab[b], &y = s.bb[c];
              pr.tick();
              pr.require(is_subset(y, left_factor(x, z)) ==
                             is_subset(compose(x, y), z),
                         at + ": left factor is not the greatest solution",
                         {W("X", x), W("Y", y), W("Z", z)});
            });
    tuples3(s.ab.size(), s.ab.size(), s.aa.size(), pr.next_seed(), cfg,
            [&](std::size_t a, std::size_t b, std::size_t c) {
              const Rel &z = s.ab[a], &y = s.ab[b], &x = s.aa[c];
              pr.tick();
              pr.require(is_subset(x, right_factor(z, y)) ==
                             is_subset(compose(x, y), z),
                         at + ": right factor is not the greatest solution",
                         {W("X", x), W("Y", y), W("Z", z)});
            });
  }
}

void check_alg_converse(Ctx& ctx, const SuiteConfig& cfg, Probe& pr) {
  for (const TypeSig& sig : cfg.sigs) {
    SigScope& s = ctx.sig_scope(sig);
    const std::string at = sig_at(sig);
    pr.tick();
    pr.require(converse(identity(sig.src)) == identity(sig.src),
               at + ": converse moves the identity", {});
    for (const Rel& x : s.ab) {
      pr.tick();
      pr.require(converse(converse(x)) == x,
                 at + ": converse is not an involution", {W("X", x)});
    }
    for (const Rel& x : s.ab)
      for (const Rel& y : s.ba) {
        pr.tick();
        pr.require(converse(compose(x, y)) == compose(converse(y), converse(x)),
                   at + ": converse does not reverse composition",
                   {W("X", x), W("Y", y)});
        pr.require(is_subset(converse(x), y) == is_subset(x, converse(y)),
                   at + ": converse adjunction failed", {W("X", x), W("Y", y)});
      }
    for (const Rel& x : s.ab)
      for (const Rel& y : s.ab) {
        pr.tick();
        pr.require(converse(join(x, y)) == join(converse(x), converse(y)) &&
                       converse(meet(x, y)) == meet(converse(x), converse(y)),
                   at + ": converse does not distribute over join and meet",
                   {W("X", x), W("Y", y)});
      }
  }
}

void check_alg_modularity(Ctx& ctx, const SuiteConfig& cfg, Probe& pr) {
  for (const TypeSig& sig : cfg.sigs) {
    SigScope& s = ctx.sig_scope(sig);
    const std::string at = sig_at(sig);
    tuples3(s.ab.size(), s.ba.size(), s.aa.size(), pr.next_seed(), cfg,
            [&](std::size_t a, std::size_t b, std::size_t c) {
              const Rel &x = s.ab[a], &y = s.ba[b], &z = s.aa[c];
              pr.tick();
              pr.require(
                  is_subset(meet(compose(x, y), z),
                            compose(x, meet(y, compose(converse(x), z)))),
                  at + ": modular inequality failed",
                  {W("X", x), W("Y", y), W("Z", z)});
            });
  }
}

void check_alg_cone(Ctx& ctx, const SuiteConfig& cfg, Probe& pr) {
  for (const TypeSig& sig : cfg.sigs) {
    if (sig.src.size() == 0 || sig.tgt.size() == 0) continue;
    SigScope& s = ctx.sig_scope(sig);
    const std::string at = sig_at(sig);
    const Rel taa = top(TypeSig{sig.src, sig.src});
    const Rel tbb = top(TypeSig{sig.tgt, sig.tgt});
    const Rel tab = top(sig);
    for (const Rel& x : s.ab) {
      pr.tick();
      pr.require((seq({taa, x, tbb}) == tab) == !x.empty(),
                 at + ": top;X;top does not detect nonemptiness", {W("X", x)});
    }
  }
}

void check_alg_monotonicity(Ctx& ctx, const SuiteConfig& cfg, Probe& pr) {
  for (const TypeSig& sig : cfg.sigs) {
    SigScope& s = ctx.sig_scope(sig);
    const std::string at = sig_at(sig);
    // X' ranges over all supersets of X by joining a second relation to it.
    tuples3(s.ab.size(), s.ab.size(), s.ab.size(), pr.next_seed(), cfg,
            [&](std::size_t a, std::size_t b, std::size_t c) {
              const Rel &x = s.ab[a], &w = s.ab[b], &z = s.ab[c];
              Rel xp = join(x, w);
              pr.tick();
              std::vector<WitnessPart> wit = {W("X", x), W("X'", xp), W("Z", z)};
              pr.require(is_subset(meet(x, z), meet(xp, z)),
                         at + ": meet is not monotone", wit);
              pr.require(is_subset(converse(x), converse(xp)),
                         at + ": converse is not monotone", wit);
              pr.require(is_subset(left_domain(x).rel(), left_domain(xp).rel()) &&
                             is_subset(right_domain(x).rel(),
                                       right_domain(xp).rel()),
                         at + ": domains are not monotone", wit);
              if (sig.homogeneous())
                pr.require(is_subset(transitive_closure(x),
                                     transitive_closure(xp)),
                           at + ": transitive closure is not monotone", wit);
              pr.require(is_subset(left_factor(xp, z), left_factor(x, z)),
                         at + ": left factor is not antitone in the divisor",
                         wit);
              pr.require(is_subset(left_factor(z, x), left_factor(z, xp)),
                         at + ": left factor is not monotone in the dividend",
                         wit);
              pr.require(is_subset(right_factor(z, xp), right_factor(z, x)),
                         at + ": right factor is not antitone in the divisor",
                         wit);
              pr.require(is_subset(right_factor(x, z), right_factor(xp, z)),
                         at + ": right factor is not monotone in the dividend",
                         wit);
            });
    tuples3(s.ab.size(), s.ab.size(), s.ba.size(), pr.next_seed(), cfg,
            [&](std::size_t a, std::size_t b, std::size_t c) {
              const Rel &x = s.ab[a], &v = s.ab[b], &w = s.ba[c];
              Rel xp = join(x, v);
              pr.tick();
              pr.require(is_subset(compose(x, w), compose(xp, w)) &&
                             is_subset(compose(w, x), compose(w, xp)),
                         at + ": composition is not monotone",
                         {W("X", x), W("X'", xp), W("W", w)});
            });
  }
}

// Domains, coreflexives, and per-domains.

void check_dom_laws(Ctx& ctx, const SuiteConfig& cfg, Probe& pr) {
  for (std::size_t n : cfg.sizes) {
    PerScope& s = ctx.per_scope(Carrier{"A", n});
    const std::string at = size_at(n);
    const Rel T = top(TypeSig{s.carrier, s.carrier});
    for (const Per& p : s.u.pers) {
      pr.tick();
      Rel d = domain(p).rel();
      pr.require(compose(d, p) == p.rel() && compose(p, d) == p.rel(),
                 at + ": per domain is not a unit for its per", {W("P", p)});
      pr.require(left_domain(p).rel() == d && right_domain(p).rel() == d,
                 at + ": the two domains of a per differ", {W("P", p)});
      pr.require(compose(T, p) == compose(T, d) &&
                     compose(p, T) == compose(d, T),
                 at + ": per and its domain span different cones", {W("P", p)});
    }
    for (const Coreflexive& c1 : s.coreflexives)
      for (const Coreflexive& c2 : s.coreflexives) {
        pr.tick();
        Rel m = meet(c1, c2);
        pr.require(compose(c1, c2) == m && compose(c2, c1) == m,
                   at + ": coreflexives do not compose as their meet",
                   {W("C", c1), W("D", c2)});
      }
  }
  for (const TypeSig& sig : cfg.sigs) {
    SigScope& s = ctx.sig_scope(sig);
    const std::string at = sig_at(sig);
    for (std::size_t i = 0; i < s.ab.size(); ++i) {
      pr.tick();
      pr.require(compose(s.ld[i], s.ab[i]) == s.ab[i] &&
                     compose(s.ab[i], s.rd[i]) == s.ab[i],
                 at + ": domains are not one-sided units", {W("X", s.ab[i])});
    }
    for (const Rel& x : s.ab)
      for (const Rel& y : s.ba) {
        pr.tick();
        Rel xy = compose(x, y);
        pr.require(is_subset(left_domain(xy).rel(), left_domain(x).rel()) &&
                       is_subset(right_domain(xy).rel(), right_domain(y).rel()),
                   at + ": composite domains escape the factor domains",
                   {W("X", x), W("Y", y)});
      }
  }
}

void check_dom_corefl_formula(Ctx& ctx, const SuiteConfig& cfg, Probe& pr) {
  for (const TypeSig& sig : cfg.sigs) {
    SigScope& s = ctx.sig_scope(sig);
    const std::string at = sig_at(sig);
    const Rel ia = identity(sig.src);
    const Rel ib = identity(sig.tgt);
    for (std::size_t i = 0; i < s.ab.size(); ++i) {
      const Rel& x = s.ab[i];
      pr.tick();
      pr.require(s.ld[i] == meet(ia, compose(x, converse(x))) &&
                     s.rd[i] == meet(ib, compose(converse(x), x)),
                 at + ": domain formula via converse failed", {W("X", x)});
    }
  }
}

void check_perdom_two_routes(Ctx& ctx, const SuiteConfig& cfg, Probe& pr) {
  for (const TypeSig& sig : cfg.sigs) {
    SigScope& s = ctx.sig_scope(sig);
    const std::string at = sig_at(sig);
    for (std::size_t i = 0; i < s.ab.size(); ++i) {
      const Rel& x = s.ab[i];
      pr.tick();
      Rel rr = right_factor(x, x);
      Rel lroute = seq({s.ld[i], meet(rr, converse(rr)), s.ld[i]});
      pr.require(lroute == s.pld[i].rel(),
                 at + ": left per-domain differs from its factor route",
                 {W("X", x)});
      Rel lf = left_factor(x, x);
      Rel rroute = seq({s.rd[i], meet(lf, converse(lf)), s.rd[i]});
      pr.require(rroute == s.prd[i].rel(),
                 at + ": right per-domain differs from its factor route",
                 {W("X", x)});
    }
  }
}

void check_perdom_laws(Ctx& ctx, const SuiteConfig& cfg, Probe& pr) {
  for (std::size_t n : cfg.sizes) {
    PerScope& s = ctx.per_scope(Carrier{"A", n});
    const std::string at = size_at(n);
    for (const Per& p : s.u.pers) {
      pr.tick();
      pr.require(per_left_domain(p).rel() == p.rel() &&
                     per_right_domain(p).rel() == p.rel(),
                 at + ": a per is not its own per-domain", {W("P", p)});
    }
  }
  for (const TypeSig& sig : cfg.sigs) {
    SigScope& s = ctx.sig_scope(sig);
    const std::string at = sig_at(sig);
    const Rel taa = top(TypeSig{sig.src, sig.src});
    const Rel tbb = top(TypeSig{sig.tgt, sig.tgt});
    PerScope& pa = ctx.per_scope(sig.src);
    PerScope& pb = ctx.per_scope(sig.tgt);
    for (std::size_t i = 0; i < s.ab.size(); ++i) {
      const Rel& x = s.ab[i];
      const Rel& pl = s.pld[i].rel();
      const Rel& prr = s.prd[i].rel();
      Rel lbound = seq({s.ld[i], taa, s.ld[i]});
      Rel rbound = seq({s.rd[i], tbb, s.rd[i]});
      pr.tick();
      pr.require(domain(s.pld[i]).rel() == s.ld[i] &&
                     domain(s.prd[i]).rel() == s.rd[i],
                 at + ": per-domain support differs from the domain",
                 {W("X", x)});
      pr.require(compose(pl, x) == x && compose(x, prr) == x,
                 at + ": per-domains do not fix their relation", {W("X", x)});
      pr.require(is_subset(pl, lbound) && is_subset(prr, rbound),
                 at + ": per-domains escape the domain cone", {W("X", x)});
      for (const Per& q : pa.u.pers) {
        pr.tick();
        if (compose(q, x) == x && is_subset(q, lbound))
          pr.require(is_subset(q, pl),
                     at + ": left per-domain is not the greatest fixer",
                     {W("X", x), W("Q", q)});
      }
      for (const Per& q : pb.u.pers) {
        pr.tick();
        if (compose(x, q) == x && is_subset(q, rbound))
          pr.require(is_subset(q, prr),
                     at + ": right per-domain is not the greatest fixer",
                     {W("X", x), W("Q", q)});
      }
    }
  }
}

void check_not_maximal_lemma0(Ctx& ctx, const SuiteConfig& cfg, Probe& pr) {
  for (std::size_t n : cfg.sizes) {
    PerScope& s = ctx.per_scope(Carrier{"A", n});
    const std::string at = size_at(n);
    const Rel T = top(TypeSig{s.carrier, s.carrier});
    for (const Per& p : s.u.pers) {
      pr.tick();
      Rel ptp = seq({p, T, p});
      pr.require(is_per(ptp), at + ": P;top;P is not a per", {W("P", p)});
      pr.require(left_domain(ptp).rel() == domain(p).rel(),
                 at + ": P;top;P has the wrong support", {W("P", p)});
    }
  }
}

// The thins order on pers, indexes.

void check_itt_order(Ctx& ctx, const SuiteConfig& cfg, Probe& pr) {
  for (std::size_t n : cfg.sizes) {
    PerScope& s = ctx.per_scope(Carrier{"A", n});
    const std::string at = size_at(n);
    const std::size_t count = s.u.pers.size();
    for (std::size_t i = 0; i < count; ++i) {
      pr.tick();
      pr.require(s.thins[i][i] != 0, at + ": thins is not reflexive",
                 {W("P", s.u.pers[i])});
    }
    for (std::size_t i = 0; i < count; ++i)
      for (std::size_t j = 0; j < count; ++j) {
        pr.tick();
        if (s.thins[i][j] && s.thins[j][i])
          pr.require(i == j, at + ": thins is not antisymmetric",
                     {W("P", s.u.pers[i]), W("Q", s.u.pers[j])});
      }
    tuples3(count, count, count, pr.next_seed(), cfg,
            [&](std::size_t a, std::size_t b, std::size_t c) {
              pr.tick();
              if (s.thins[a][b] && s.thins[b][c])
                pr.require(s.thins[a][c] != 0, at + ": thins is not transitive",
                           {W("P", s.u.pers[a]), W("Q", s.u.pers[b]),
                            W("R", s.u.pers[c])});
            });
  }
}

void check_itt_imp_atmost(Ctx& ctx, const SuiteConfig& cfg, Probe& pr) {
  for (std::size_t n : cfg.sizes) {
    PerScope& s = ctx.per_scope(Carrier{"A", n});
    const std::string at = size_at(n);
    for (std::size_t i = 0; i < s.u.pers.size(); ++i)
      for (std::size_t j = 0; j < s.u.pers.size(); ++j) {
        pr.tick();
        if (s.thins[i][j])
          pr.require(is_subset(s.u.pers[i], s.u.pers[j]),
                     at + ": thins does not imply inclusion",
                     {W("P", s.u.pers[i]), W("Q", s.u.pers[j])});
      }
  }
}

void check_itt_aba(Ctx& ctx, const SuiteConfig& cfg, Probe& pr) {
  for (std::size_t n : cfg.sizes) {
    PerScope& s = ctx.per_scope(Carrier{"A", n});
    const std::string at = size_at(n);
    for (std::size_t i = 0; i < s.u.pers.size(); ++i)
      for (std::size_t j = 0; j < s.u.pers.size(); ++j) {
        pr.tick();
        if (!s.thins[i][j]) continue;
        const Rel& p = s.u.pers[i].rel();
        const Rel& q = s.u.pers[j].rel();
        pr.require(p == seq({p, q, p}) && q == seq({q, p, q}),
                   at + ": mutual sandwich equations failed",
                   {W("P", p), W("Q", q)});
      }
  }
}

void check_corefl_and_thins(Ctx& ctx, const SuiteConfig& cfg, Probe& pr) {
  for (std::size_t n : cfg.sizes) {
    PerScope& s = ctx.per_scope(Carrier{"A", n});
    const std::string at = size_at(n);
    for (std::size_t i = 0; i < s.u.pers.size(); ++i)
      for (std::size_t j = 0; j < s.u.pers.size(); ++j) {
        pr.tick();
        const Rel& p = s.u.pers[i].rel();
        bool lhs = is_coreflexive(p) && s.thins[i][j];
        pr.require(lhs == is_per_index(p, s.u.pers[j]),
                   at + ": coreflexive thinning disagrees with indexing",
                   {W("P", p), W("Q", s.u.pers[j])});
      }
  }
}

void check_index_itt(Ctx& ctx, const SuiteConfig& cfg, Probe& pr) {
  for (std::size_t n : cfg.sizes) {
    PerScope& s = ctx.per_scope(Carrier{"A", n});
    const std::string at = size_at(n);
    for (std::size_t i = 0; i < s.u.pers.size(); ++i)
      for (const Coreflexive& j : s.indexes[i]) {
        pr.tick();
        pr.require(thins_per(Per{j.rel()}, s.u.pers[i]),
                   at + ": an index does not thin its per",
                   {W("J", j), W("P", s.u.pers[i])});
      }
  }
}

void check_top_p_j_top(Ctx& ctx, const SuiteConfig& cfg, Probe& pr) {
  for (std::size_t n : cfg.sizes) {
    PerScope& s = ctx.per_scope(Carrier{"A", n});
    const std::string at = size_at(n);
    const Rel T = top(TypeSig{s.carrier, s.carrier});
    for (std::size_t i = 0; i < s.u.pers.size(); ++i)
      for (const Coreflexive& j : s.indexes[i]) {
        pr.tick();
        pr.require(seq({T, s.u.pers[i], T}) == seq({T, j, T}),
                   at + ": per and index span different cones",
                   {W("P", s.u.pers[i]), W("J", j)});
      }
  }
}

void check_pq_index(Ctx& ctx, const SuiteConfig& cfg, Probe& pr) {
  for (std::size_t n : cfg.sizes) {
    PerScope& s = ctx.per_scope(Carrier{"A", n});
    const std::string at = size_at(n);
    for (const Per& p : s.u.pers) {
      Rel pd = domain(p).rel();
      for (const Coreflexive& q : s.coreflexives) {
        pr.tick();
        Rel target = join(p, q);
        pr.require(is_per(target),
                   at + ": per join coreflexive is not a per",
                   {W("P", p), W("q", q)});
        for (const Coreflexive& j : s.indexes[s.index_of(target)]) {
          pr.tick();
          pr.require(is_per_index(compose(j, pd), p),
                     at + ": restricted index fails on the original per",
                     {W("P", p), W("q", q), W("J", j)});
          pr.require(is_subset(q, join(pd, j.rel())),
                     at + ": coreflexive escapes domain join index",
                     {W("P", p), W("q", q), W("J", j)});
        }
      }
    }
  }
}

void check_index_invariant(Ctx& ctx, const SuiteConfig& cfg, Probe& pr) {
  for (std::size_t n : cfg.sizes) {
    PerScope& s = ctx.per_scope(Carrier{"A", n});
    const std::string at = size_at(n);
    for (std::size_t i = 0; i < s.u.pers.size(); ++i)
      for (std::size_t j = 0; j < s.u.pers.size(); ++j) {
        if (!s.thins[i][j]) continue;
        for (const Coreflexive& c : s.indexes[i]) {
          pr.tick();
          pr.require(is_per_index(c, s.u.pers[j]),
                     at + ": index does not transfer along thins",
                     {W("P", s.u.pers[i]), W("Q", s.u.pers[j]), W("J", c)});
        }
      }
  }
}

void check_common_char(Ctx& ctx, const SuiteConfig& cfg, Probe& pr) {
  for (std::size_t n : cfg.sizes) {
    PerScope& s = ctx.per_scope(Carrier{"A", n});
    const std::string at = size_at(n);
    for (std::size_t i = 0; i < s.u.pers.size(); ++i)
      for (std::size_t j = 0; j < s.u.pers.size(); ++j) {
        if (!s.thins[i][j]) continue;
        const Rel& p = s.u.pers[i].rel();
        const Rel& q = s.u.pers[j].rel();
        Rel pd = domain(s.u.pers[i]).rel();
        for (const Coreflexive& c : s.indexes[i]) {
          pr.tick();
          pr.require(compose(c, p) == seq({c, q, pd}),
                     at + ": shared index equation failed",
                     {W("P", p), W("Q", q), W("J", c)});
        }
      }
  }
}

void check_common_index(Ctx& ctx, const SuiteConfig& cfg, Probe& pr) {
  for (std::size_t n : cfg.sizes) {
    PerScope& s = ctx.per_scope(Carrier{"A", n});
    const std::string at = size_at(n);
    for (std::size_t i = 0; i < s.u.pers.size(); ++i)
      for (std::size_t j = 0; j < s.u.pers.size(); ++j) {
        if (!is_subset(s.u.pers[i], s.u.pers[j])) continue;
        for (const Coreflexive& c : s.indexes[i]) {
          pr.tick();
          if (is_per_index(c, s.u.pers[j]))
            pr.require(s.thins[i][j] != 0,
                       at + ": shared index does not force thins",
                       {W("P", s.u.pers[i]), W("Q", s.u.pers[j]), W("J", c)});
        }
      }
  }
}

// Minimality among pers.

void check_corefl_is_minimal(Ctx& ctx, const SuiteConfig& cfg, Probe& pr) {
  for (std::size_t n : cfg.sizes) {
    PerScope& s = ctx.per_scope(Carrier{"A", n});
    const std::string at = size_at(n);
    for (const Coreflexive& c : s.coreflexives) {
      pr.tick();
      pr.require(s.minimal[s.index_of(c.rel())] != 0,
                 at + ": a coreflexive is not minimal", {W("C", c)});
    }
  }
}

void check_choice_defs_minimal(Ctx& ctx, const SuiteConfig& cfg, Probe& pr) {
  for (std::size_t n : cfg.sizes) {
    PerScope& s = ctx.per_scope(Carrier{"A", n});
    const std::string at = size_at(n);
    for (std::size_t i = 0; i < s.u.pers.size(); ++i) {
      pr.tick();
      const Per& p = s.u.pers[i];
      pr.require((s.minimal[i] != 0) == is_coreflexive(p.rel()),
                 at + ": minimal pers are not exactly the coreflexives",
                 {W("P", p)});
      Coreflexive j = find_per_index(p);
      pr.require(is_per_index(j, p) && thins_per(Per{j.rel()}, p) &&
                     s.minimal[s.index_of(j.rel())] != 0,
                 at + ": chosen index is not a minimal thinner",
                 {W("P", p), W("J", j)});
    }
  }
}

// The maximal completion and its construction.

void check_not_maximal(Ctx& ctx, const SuiteConfig& cfg, Probe& pr) {
  for (std::size_t n : cfg.sizes) {
    PerScope& s = ctx.per_scope(Carrier{"A", n});
    const std::string at = size_at(n);
    for (std::size_t i = 0; i < s.u.pers.size(); ++i) {
      const Per& p = s.u.pers[i];
      pr.tick();
      try {
        CompletionTrace t = maximal_completion(p);
        pr.require(thins_per(p, t.completed) &&
                       s.maximal[s.index_of(t.completed.rel())] != 0,
                   at + ": completion is not a maximal thickening",
                   {W("P", p), W("Q", t.completed)});
      } catch (const std::logic_error&) {
        pr.require(false, at + ": completion construction failed", {W("P", p)});
      }
    }
  }
}

void check_q_domain(Ctx& ctx, const SuiteConfig& cfg, Probe& pr) {
  for (std::size_t n : cfg.sizes) {
    PerScope& s = ctx.per_scope(Carrier{"A", n});
    const std::string at = size_at(n);
    const Rel I = identity(s.carrier);
    const Rel T = top(TypeSig{s.carrier, s.carrier});
    for (const Per& p : s.u.pers) {
      pr.tick();
      Rel q = meet(I, seq({T, p, T}));
      Rel target = join(seq({p, T, p}), q);
      pr.require(is_per(target), at + ": completion target is not a per",
                 {W("P", p)});
      pr.require(domain(Per{target}).rel() == q,
                 at + ": completion target has the wrong support",
                 {W("P", p), W("q", q)});
    }
  }
}

void check_j_atmost_q(Ctx& ctx, const SuiteConfig& cfg, Probe& pr) {
  for_completions(ctx, cfg,
                  [&](const std::string& at, const Per& p,
                      const CompletionTrace& t) {
                    pr.tick();
                    pr.require(is_subset(t.choice, t.support),
                               at + ": chosen index escapes the support",
                               {W("P", p), W("J", t.choice),
                                W("q", t.support)});
                  });
}

void check_jp_index(Ctx& ctx, const SuiteConfig& cfg, Probe& pr) {
  for_completions(ctx, cfg, [&](const std::string& at, const Per& p,
                                const CompletionTrace& t) {
    pr.tick();
    const Carrier& c = p.carrier();
    const Rel T = top(TypeSig{c, c});
    Rel pd = domain(p).rel();
    Rel jpd = compose(t.choice, pd);
    Rel ptp = seq({p, T, p});
    std::vector<WitnessPart> wit = {W("P", p), W("J", t.choice)};
    pr.require(is_per_index(jpd, Per{ptp}),
               at + ": restricted choice does not index P;top;P", wit);
    pr.require(jpd == seq({jpd, T, pd, t.choice}),
               at + ": choice self-linking equation failed", wit);
    pr.require(ptp == seq({p, T, jpd, T, p}),
               at + ": span through the choice failed", wit);
    pr.require(seq({T, pd, T}) == seq({T, jpd, T}),
               at + ": domain and restricted choice span different cones", wit);
    pr.require(is_subset(t.support, join(pd, t.choice.rel())),
               at + ": support escapes domain join choice", wit);
  });
}

void check_j_to_j(Ctx& ctx, const SuiteConfig& cfg, Probe& pr) {
  for_completions(ctx, cfg, [&](const std::string& at, const Per& p,
                                const CompletionTrace& t) {
    pr.tick();
    const Carrier& c = p.carrier();
    const Rel T = top(TypeSig{c, c});
    const Rel& j = t.choice.rel();
    pr.require(seq({j, T, j}) == seq({j, T, p, T, j}),
               at + ": link does not absorb top;P;top",
               {W("P", p), W("J", j)});
  });
}

void check_ed_rtr(Ctx& ctx, const SuiteConfig& cfg, Probe& pr) {
  for_completions(ctx, cfg, [&](const std::string& at, const Per& p,
                                const CompletionTrace& t) {
    pr.tick();
    const Rel& r = t.link.rel();
    Rel pd = domain(p).rel();
    pr.require(seq({r, p, r}) == r && seq({r, pd, r}) == r,
               at + ": link is not idempotent through the per",
               {W("P", p), W("R", r)});
  });
}

void check_top_r_top(Ctx& ctx, const SuiteConfig& cfg, Probe& pr) {
  for_completions(ctx, cfg, [&](const std::string& at, const Per& p,
                                const CompletionTrace& t) {
    pr.tick();
    const Carrier& c = p.carrier();
    const Rel T = top(TypeSig{c, c});
    Rel cone = seq({T, p, T});
    pr.require(seq({T, t.link, T}) == cone && seq({T, t.completed, T}) == cone,
               at + ": link and completion span a different cone",
               {W("P", p), W("R", t.link), W("Q", t.completed)});
  });
}

void check_prp(Ctx& ctx, const SuiteConfig& cfg, Probe& pr) {
  for_completions(ctx, cfg, [&](const std::string& at, const Per& p,
                                const CompletionTrace& t) {
    pr.tick();
    pr.require(is_subset(seq({p, t.link, p}), p),
               at + ": P does not absorb the link sandwich",
               {W("P", p), W("R", t.link)});
  });
}

void check_pcupa(Ctx& ctx, const SuiteConfig& cfg, Probe& pr) {
  for_completions(ctx, cfg, [&](const std::string& at, const Per& p,
                                const CompletionTrace& t) {
    pr.tick();
    Rel u = join(p, t.link);
    Rel pd = domain(p).rel();
    const Rel& q = t.completed.rel();
    pr.require(compose(u, u) == q && seq({u, pd, u}) == q &&
                   compose(q, u) == q,
               at + ": completion is not the square of P join R",
               {W("P", p), W("R", t.link), W("Q", q)});
  });
}

void check_q_transitive(Ctx& ctx, const SuiteConfig& cfg, Probe& pr) {
  for_completions(ctx, cfg, [&](const std::string& at, const Per& p,
                                const CompletionTrace& t) {
    pr.tick();
    Rel u = join(p, t.link);
    const Rel& q = t.completed.rel();
    pr.require(q == transitive_closure(u) && q == converse(q),
               at + ": completion is not the symmetric transitive closure",
               {W("P", p), W("R", t.link), W("Q", q)});
  });
}

void check_jules5(Ctx& ctx, const SuiteConfig& cfg, Probe& pr) {
  for_completions(ctx, cfg, [&](const std::string& at, const Per& p,
                                const CompletionTrace& t) {
    pr.tick();
    pr.require(thins_per(p, t.completed),
               at + ": per does not thin its completion",
               {W("P", p), W("Q", t.completed)});
  });
}

void check_jules6(Ctx& ctx, const SuiteConfig& cfg, Probe& pr) {
  for_completions(ctx, cfg, [&](const std::string& at, const Per& p,
                                const CompletionTrace& t) {
    pr.tick();
    const Carrier& c = p.carrier();
    const Rel I = identity(c);
    const Rel T = top(TypeSig{c, c});
    const Rel& q = t.completed.rel();
    pr.require(is_subset(meet(I, seq({T, q, T})), q),
               at + ": completion misses an identity point of its cone",
               {W("P", p), W("Q", q)});
  });
}

void check_maximal_char(Ctx& ctx, const SuiteConfig& cfg, Probe& pr) {
  for (std::size_t n : cfg.sizes) {
    PerScope& s = ctx.per_scope(Carrier{"A", n});
    const std::string at = size_at(n);
    const Rel B = bottom(TypeSig{s.carrier, s.carrier});
    for (std::size_t i = 0; i < s.u.pers.size(); ++i) {
      pr.tick();
      const Per& p = s.u.pers[i];
      bool via_order = s.maximal[i] != 0;
      bool via_cond = maximality_condition(p);
      bool via_shape = p.rel() == B || is_equivalence(p.rel());
      pr.require(via_order == via_cond && via_cond == via_shape,
                 at + ": maximality characterizations disagree", {W("P", p)});
    }
  }
}

// The thins order on typed relations, cores and general indexes.

void check_itt_gen_ord(Ctx& ctx, const SuiteConfig& cfg, Probe& pr) {
  for (const TypeSig& sig : cfg.sigs) {
    SigScope& s = ctx.sig_scope(sig);
    const std::string at = sig_at(sig);
    const std::size_t count = s.ab.size();
    for (std::size_t i = 0; i < count; ++i) {
      pr.tick();
      pr.require(s.ord(i, i), at + ": thins is not reflexive",
                 {W("R", s.ab[i])});
    }
    for (std::size_t i = 0; i < count; ++i)
      for (std::size_t j = 0; j < count; ++j) {
        pr.tick();
        if (s.ord(i, j) && s.ord(j, i))
          pr.require(i == j, at + ": thins is not antisymmetric",
                     {W("R", s.ab[i]), W("S", s.ab[j])});
      }
    tuples3(count, count, count, pr.next_seed(), cfg,
            [&](std::size_t a, std::size_t b, std::size_t c) {
              pr.tick();
              if (s.ord(a, b) && s.ord(b, c))
                pr.require(s.ord(a, c), at + ": thins is not transitive",
                           {W("R", s.ab[a]), W("S", s.ab[b]), W("U", s.ab[c])});
            });
  }
}

void check_core_minimal(Ctx& ctx, const SuiteConfig& cfg, Probe& pr) {
  for (const TypeSig& sig : cfg.sigs) {
    SigScope& s = ctx.sig_scope(sig);
    const std::string at = sig_at(sig);
    const std::vector<char>& mins = sig_minimal(s);
    for (std::size_t i = 0; i < s.ab.size(); ++i) {
      pr.tick();
      if (is_core(s.ab[i]))
        pr.require(mins[i] != 0, at + ": a core is not minimal",
                   {W("R", s.ab[i])});
    }
  }
}

void check_minimal_is_core(Ctx& ctx, const SuiteConfig& cfg, Probe& pr) {
  for (const TypeSig& sig : cfg.sigs) {
    SigScope& s = ctx.sig_scope(sig);
    const std::string at = sig_at(sig);
    const std::vector<char>& mins = sig_minimal(s);
    for (std::size_t i = 0; i < s.ab.size(); ++i) {
      pr.tick();
      if (mins[i])
        pr.require(is_core(s.ab[i]), at + ": a minimal relation is not a core",
                   {W("R", s.ab[i])});
    }
  }
}

void check_index_per_is_pid(Ctx& ctx, const SuiteConfig& cfg, Probe& pr) {
  for (const TypeSig& sig : cfg.sigs) {
    SigScope& s = ctx.sig_scope(sig);
    const std::string at = sig_at(sig);
    const std::vector<std::vector<Rel>>& idx = sig_indexes(s);
    for (std::size_t i = 0; i < s.ab.size(); ++i)
      for (const Rel& j : idx[i]) {
        pr.tick();
        Per jl = per_left_domain(j);
        Per jr = per_right_domain(j);
        pr.require(is_subset(jl, s.pld[i]) && is_subset(jr, s.prd[i]),
                   at + ": index per-domains escape the relation per-domains",
                   {W("R", s.ab[i]), W("J", j)});
        pr.require(left_domain(j).rel() == jl.rel() &&
                       right_domain(j).rel() == jr.rel(),
                   at + ": index per-domains are not coreflexive",
                   {W("R", s.ab[i]), W("J", j)});
      }
  }
}

void check_r_perleft(Ctx& ctx, const SuiteConfig& cfg, Probe& pr) {
  for (const TypeSig& sig : cfg.sigs) {
    SigScope& s = ctx.sig_scope(sig);
    const std::string at = sig_at(sig);
    const std::vector<std::vector<Rel>>& idx = sig_indexes(s);
    for (std::size_t i = 0; i < s.ab.size(); ++i)
      for (const Rel& j : idx[i]) {
        pr.tick();
        Rel jld = left_domain(j).rel();
        Rel jrd = right_domain(j).rel();
        const Rel& pl = s.pld[i].rel();
        const Rel& prr = s.prd[i].rel();
        pr.require(seq({pl, jld, pl}) == pl && seq({prr, jrd, prr}) == prr,
                   at + ": per-domains do not absorb the index domains",
                   {W("R", s.ab[i]), W("J", j)});
      }
  }
}

void check_index_perdoms(Ctx& ctx, const SuiteConfig& cfg, Probe& pr) {
  for (const TypeSig& sig : cfg.sigs) {
    SigScope& s = ctx.sig_scope(sig);
    const std::string at = sig_at(sig);
    const std::vector<std::vector<Rel>>& idx = sig_indexes(s);
    for (std::size_t i = 0; i < s.ab.size(); ++i)
      for (const Rel& j : idx[i]) {
        pr.tick();
        pr.require(is_per_index(left_domain(j).rel(), s.pld[i]) &&
                       is_per_index(right_domain(j).rel(), s.prd[i]),
                   at + ": index domains do not index the per-domains",
                   {W("R", s.ab[i]), W("J", j)});
      }
  }
}

void check_index_thins_gen(Ctx& ctx, const SuiteConfig& cfg, Probe& pr) {
  for (const TypeSig& sig : cfg.sigs) {
    SigScope& s = ctx.sig_scope(sig);
    const std::string at = sig_at(sig);
    const std::vector<std::vector<Rel>>& idx = sig_indexes(s);
    for (std::size_t i = 0; i < s.ab.size(); ++i)
      for (const Rel& j : idx[i]) {
        pr.tick();
        pr.require(thins_rel(j, s.ab[i]),
                   at + ": an index does not thin its relation",
                   {W("R", s.ab[i]), W("J", j)});
      }
  }
}

void check_thins_min_index(Ctx& ctx, const SuiteConfig& cfg, Probe& pr) {
  for (const TypeSig& sig : cfg.sigs) {
    SigScope& s = ctx.sig_scope(sig);
    const std::string at = sig_at(sig);
    const std::vector<char>& mins = sig_minimal(s);
    const std::vector<std::vector<Rel>>& idx = sig_indexes(s);
    for (std::size_t i = 0; i < s.ab.size(); ++i) {
      if (!mins[i]) continue;
      for (const Rel& j : idx[i]) {
        pr.tick();
        pr.require(j == s.ab[i],
                   at + ": a minimal relation has a proper index",
                   {W("S", s.ab[i]), W("J", j)});
      }
    }
  }
}

void check_thins_minmax_gen(Ctx& ctx, const SuiteConfig& cfg, Probe& pr) {
  for (const TypeSig& sig : cfg.sigs) {
    SigScope& s = ctx.sig_scope(sig);
    const std::string at = sig_at(sig);
    const std::vector<char>& mins = sig_minimal(s);
    PerScope& pa = ctx.per_scope(sig.src);
    PerScope& pb = ctx.per_scope(sig.tgt);
    for (std::size_t i = 0; i < s.ab.size(); ++i) {
      if (!mins[i]) continue;
      pr.tick();
      pr.require(pa.minimal[pa.index_of(s.pld[i].rel())] != 0 &&
                     pb.minimal[pb.index_of(s.prd[i].rel())] != 0,
                 at + ": a minimal relation has a non-minimal per-domain",
                 {W("S", s.ab[i])});
    }
  }
}

void check_gen_index_exists(Ctx& ctx, const SuiteConfig& cfg, Probe& pr) {
  for (const TypeSig& sig : cfg.sigs) {
    SigScope& s = ctx.sig_scope(sig);
    const std::string at = sig_at(sig);
    for (const Rel& r : s.ab) {
      pr.tick();
      Rel j = find_rel_index(r);
      pr.require(is_rel_index(j, r) && is_core(j),
                 at + ": chosen index is not a core index",
                 {W("R", r), W("J", j)});
    }
  }
}

void check_thins_agree_pers(Ctx& ctx, const SuiteConfig& cfg, Probe& pr) {
  for (std::size_t n : cfg.sizes) {
    PerScope& s = ctx.per_scope(Carrier{"A", n});
    const std::string at = size_at(n);
    for (std::size_t i = 0; i < s.u.pers.size(); ++i)
      for (std::size_t j = 0; j < s.u.pers.size(); ++j) {
        pr.tick();
        pr.require((s.thins[i][j] != 0) ==
                       thins_rel(s.u.pers[i], s.u.pers[j]),
                   at + ": per order and relation order disagree",
                   {W("P", s.u.pers[i]), W("Q", s.u.pers[j])});
      }
  }
}

struct Entry {
  const char* id;
  const char* description;
  void (*run)(Ctx&, const SuiteConfig&, Probe&);
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries = {
      {"alg.monoid",
       "composition is associative with identity units, bottom as zero, and "
       "distributes over join",
       check_alg_monoid},
      {"alg.factors", "left and right factors are the residuals of composition",
       check_alg_factors},
      {"alg.converse",
       "converse is an involution that reverses composition and respects the "
       "lattice",
       check_alg_converse},
      {"alg.modularity", "meets of compositions satisfy the modular inequality",
       check_alg_modularity},
      {"alg.cone",
       "a relation is nonempty exactly when its cone is top, on nonempty "
       "carriers",
       check_alg_cone},
      {"alg.monotonicity",
       "every operator is monotone and the factors have the expected "
       "polarities",
       check_alg_monotonicity},
      {"dom.laws",
       "domains are coreflexive one-sided units and coreflexives compose as "
       "meets",
       check_dom_laws},
      {"dom.corefl.formula",
       "domains equal the identity met with X;X~ and with X~;X",
       check_dom_corefl_formula},
      {"perdom.two.routes", "per-domains match their factor formulas",
       check_perdom_two_routes},
      {"perdom.laws",
       "per-domains are the greatest pers fixing their relation within the "
       "domain cone",
       check_perdom_laws},
      {"not.maximal.lemma0",
       "P;top;P is a per supported exactly where P is",
       check_not_maximal_lemma0},
      {"itt.order", "thins is a partial order on pers", check_itt_order},
      {"itt.imp.atmost", "thins implies inclusion", check_itt_imp_atmost},
      {"itt.ABA", "thins gives the mutual sandwich equations", check_itt_aba},
      {"corefl.and.thins",
       "a coreflexive thins a per exactly when it indexes it",
       check_corefl_and_thins},
      {"index.itt", "every index of a per thins it", check_index_itt},
      {"TopPJTop", "a per and each of its indexes span the same cone",
       check_top_p_j_top},
      {"PqIndex",
       "joining a coreflexive to a per keeps an index after restriction to "
       "the domain",
       check_pq_index},
      {"index.invariant", "indexes transfer along thins", check_index_invariant},
      {"common.char",
       "an index shared along thins satisfies J;P = J;Q;domain",
       check_common_char},
      {"common.index", "sharing an index with a superset forces thins",
       check_common_index},
      {"corefl.is.minimal", "every coreflexive is minimal in the thins order",
       check_corefl_is_minimal},
      {"choice.defs.minimal",
       "minimal pers are exactly the coreflexives and the chosen index "
       "witnesses it",
       check_choice_defs_minimal},
      {"not.maximal", "the completion thickens its input to a maximal per",
       check_not_maximal},
      {"q.domain",
       "the completion target is a per supported on its cone identities",
       check_q_domain},
      {"J.atmost.q", "indexes of the completion target sit inside its support",
       check_j_atmost_q},
      {"JP.index",
       "restricting a target index gives an index of P;top;P with the "
       "exchange equations",
       check_jp_index},
      {"JtoJ", "the link construction absorbs top;P;top", check_j_to_j},
      {"edRTR", "the link is idempotent through the per and its domain",
       check_ed_rtr},
      {"TopRTop.is.TopPTop", "link and completion span the cone of the per",
       check_top_r_top},
      {"PRP", "the per absorbs the link sandwich", check_prp},
      {"Pcupa", "the completion equals the square of the per joined with the "
                "link",
       check_pcupa},
      {"Qtransitive",
       "the completion is the symmetric transitive closure of per join link",
       check_q_transitive},
      {"Jules5", "every per thins its completion", check_jules5},
      {"Jules6", "the completion absorbs the identity points of its cone",
       check_jules6},
      {"maximal.char",
       "maximal pers are bottom or the equivalences, equivalently absorb "
       "their cone identities",
       check_maximal_char},
      {"itt.gen.ord", "thins is a partial order on typed relations",
       check_itt_gen_ord},
      {"core.minimal", "cores are minimal", check_core_minimal},
      {"minimal.is.core", "minimal relations are cores", check_minimal_is_core},
      {"index.per.is.pid",
       "indexes have coreflexive per-domains inside the relation per-domains",
       check_index_per_is_pid},
      {"R-perleft", "per-domains absorb the domains of every index",
       check_r_perleft},
      {"index-perdoms", "the domains of an index are indexes of the "
                        "per-domains",
       check_index_perdoms},
      {"index.thins.gen", "every index thins its relation",
       check_index_thins_gen},
      {"thins.min.index", "a minimal relation is its only index",
       check_thins_min_index},
      {"thins.minmax.gen", "minimal relations have minimal per-domains",
       check_thins_minmax_gen},
      {"gen.index.exists", "the chosen index of any relation is a core index",
       check_gen_index_exists},
      {"thins.agree.pers",
       "the per order and the typed relation order agree on pers",
       check_thins_agree_pers},
  };
  return entries;
}

SuiteConfig normalized(const SuiteConfig& cfg) {
  SuiteConfig norm = cfg;
  std::sort(norm.sizes.begin(), norm.sizes.end());
  norm.sizes.erase(std::unique(norm.sizes.begin(), norm.sizes.end()),
                   norm.sizes.end());
  std::vector<TypeSig> sigs;
  for (const TypeSig& sig : norm.sigs)
    if (std::find(sigs.begin(), sigs.end(), sig) == sigs.end())
      sigs.push_back(sig);
  norm.sigs = std::move(sigs);
  return norm;
}

}  // namespace

std::vector<std::string> lemma_ids() {
  std::vector<std::string> ids;
  ids.reserve(registry().size());
  for (const Entry& e : registry()) ids.push_back(e.id);
  std::sort(ids.begin(), ids.end());
  return ids;
}

std::vector<LemmaReport> run_lemma_suite(const SuiteConfig& cfg) {
  const SuiteConfig norm = normalized(cfg);
  Ctx ctx{norm};
  std::vector<LemmaReport> reports;
  reports.reserve(registry().size());
  for (const Entry& e : registry()) {
    LemmaReport rep;
    rep.id = e.id;
    rep.description = e.description;
    Probe probe{rep, fnv1a(rep.id) ^ norm.seed};
    try {
      e.run(ctx, norm, probe);
    } catch (const FirstFailure&) {
    } catch (const std::exception& ex) {
      rep.pass = false;
      if (rep.note.empty()) rep.note = std::string("exception: ") + ex.what();
    }
    reports.push_back(std::move(rep));
  }
  std::sort(reports.begin(), reports.end(),
            [](const LemmaReport& x, const LemmaReport& y) {
              return x.id < y.id;
            });
  return reports;
}

bool all_pass(const std::vector<LemmaReport>& reports) {
  for (const LemmaReport& r : reports)
    if (!r.pass) return false;
  return true;
}

std::string suite_report_text(const SuiteConfig& cfg,
                              const std::vector<LemmaReport>& reports) {
  const SuiteConfig norm = normalized(cfg);
  std::string out = "lemma suite: seed " + std::to_string(norm.seed);
  out += ", sizes";
  for (std::size_t n : norm.sizes) out += " " + std::to_string(n);
  out += ", sigs";
  for (const TypeSig& sig : norm.sigs) out += " " + to_string(sig);
  out += "\n";
  std::size_t failed = 0;
  for (const LemmaReport& r : reports) {
    out += r.pass ? "PASS " : "FAIL ";
    out += r.id + " (" + std::to_string(r.instances) + " instances)";
    if (!r.pass) {
      ++failed;
      out += ": " + r.note;
    }
    out += "\n";
    for (const WitnessPart& w : r.counterexample)
      out += "  " + w.role + " = " + pair_list(w.value) + "\n";
  }
  out += "total: " + std::to_string(reports.size()) + " lemmas, " +
         std::to_string(reports.size() - failed) + " passed, " +
         std::to_string(failed) + " failed\n";
  return out;
}

std::string suite_report_json(const SuiteConfig& cfg,
                              const std::vector<LemmaReport>& reports) {
  const SuiteConfig norm = normalized(cfg);
  nlohmann::json j;
  j["config"]["seed"] = norm.seed;
  j["config"]["sizes"] = norm.sizes;
  auto sigs = nlohmann::json::array();
  for (const TypeSig& sig : norm.sigs) sigs.push_back(to_string(sig));
  j["config"]["sigs"] = sigs;
  j["config"]["sample_budget"] = norm.sample_budget;
  j["config"]["triple_cap"] = norm.triple_cap;
  auto lemmas = nlohmann::json::array();
  for (const LemmaReport& r : reports) {
    nlohmann::json entry;
    entry["id"] = r.id;
    entry["description"] = r.description;
    entry["instances"] = r.instances;
    entry["pass"] = r.pass;
    entry["note"] = r.note;
    auto wits = nlohmann::json::array();
    for (const WitnessPart& w : r.counterexample) {
      nlohmann::json wj;
      wj["role"] = w.role;
      wj["value"] = rel_to_json(w.value);
      wits.push_back(wj);
    }
    entry["counterexample"] = wits;
    lemmas.push_back(entry);
  }
  j["lemmas"] = lemmas;
  j["pass"] = all_pass(reports);
  return j.dump(2) + "\n";
}

}  // namespace thins
