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

#include "thins/abstract.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "thins/enumerate.hpp"
#include "thins/rel.hpp"

namespace thins {

namespace {

bool is_model_per(const AbstractModel& m, std::size_t x) {
  return m.converse[x] == x && m.le(m.compose[x][x], x);
}

bool model_thins(const AbstractModel& m, std::size_t p, std::size_t q) {
  std::size_t d = m.meet[m.id][p];
  return m.compose[m.compose[d][q]][d] == p &&
         m.compose[m.compose[q][d]][q] == q;
}

bool has_model_index(const AbstractModel& m, std::size_t p) {
  std::size_t d = m.meet[m.id][p];
  for (std::size_t j = 0; j < m.size(); ++j) {
    if (!m.le(j, d)) continue;
    if (m.compose[m.compose[j][p]][j] == j &&
        m.compose[m.compose[p][j]][p] == p)
      return true;
  }
  return false;
}

std::string pair2(const AbstractModel& m, std::size_t x, std::size_t y) {
  return "x=" + m.names[x] + ", y=" + m.names[y];
}

}  // namespace

void validate_tables(const AbstractModel& m) {
  std::size_t n = m.size();
  auto bad = [](const std::string& what) {
    throw std::invalid_argument("model: " + what);
  };
  if (n == 0) bad("no elements");
  auto check_square = [&](const std::vector<std::vector<std::size_t>>& t,
                          const char* name) {
    if (t.size() != n) bad(std::string(name) + " table has wrong row count");
    for (const auto& row : t) {
      if (row.size() != n) bad(std::string(name) + " table has a ragged row");
      for (std::size_t v : row)
        if (v >= n) bad(std::string(name) + " table entry out of range");
    }
  };
  check_square(m.compose, "compose");
  check_square(m.join, "join");
  check_square(m.meet, "meet");
  if (m.converse.size() != n) bad("converse table has wrong length");
  for (std::size_t v : m.converse)
    if (v >= n) bad("converse table entry out of range");
  if (m.bot >= n || m.id >= n || m.top >= n)
    bad("constant index out of range");
}

AbstractModel builtin_model(const std::string& name) {
  AbstractModel m;
  if (name == "one") {
    m.names = {"only"};
    m.compose = {{0}};
    m.converse = {0};
    m.join = {{0}};
    m.meet = {{0}};
    m.bot = m.id = m.top = 0;
  } else if (name == "two") {
    m.names = {"bot", "top"};
    m.compose = {{0, 0}, {0, 1}};
    m.converse = {0, 1};
    m.join = {{0, 1}, {1, 1}};
    m.meet = {{0, 0}, {0, 1}};
    m.bot = 0;
    m.id = 1;
    m.top = 1;
  } else if (name == "three") {
    m.names = {"bot", "id", "top"};
    m.compose = {{0, 0, 0}, {0, 1, 2}, {0, 2, 2}};
    m.converse = {0, 1, 2};
    m.join = {{0, 1, 2}, {1, 1, 2}, {2, 2, 2}};
    m.meet = {{0, 0, 0}, {0, 1, 1}, {0, 1, 2}};
    m.bot = 0;
    m.id = 1;
    m.top = 2;
  } else if (name == "four") {
    m.names = {"bot", "id", "nid", "top"};
    m.compose = {{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 3, 3}};
    m.converse = {0, 1, 2, 3};
    m.join = {{0, 1, 2, 3}, {1, 1, 3, 3}, {2, 3, 2, 3}, {3, 3, 3, 3}};
    m.meet = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 0, 2, 2}, {0, 1, 2, 3}};
    m.bot = 0;
    m.id = 1;
    m.top = 3;
  } else {
    throw std::invalid_argument("unknown builtin model '" + name + "'");
  }
  return m;
}

AxiomReport check_axioms(const AbstractModel& m) {
  validate_tables(m);
  std::size_t n = m.size();
  AxiomReport rep;

  auto fail = [](AxiomCheck& c, const std::string& witness) {
    if (c.holds) {
      c.holds = false;
      c.counterexample = witness;
    }
  };

  // Monoid: associativity plus identity as two-sided unit.
  for (std::size_t x = 0; x < n && rep.monoid.holds; ++x)
    for (std::size_t y = 0; y < n && rep.monoid.holds; ++y)
      for (std::size_t z = 0; z < n && rep.monoid.holds; ++z)
        if (m.compose[m.compose[x][y]][z] != m.compose[x][m.compose[y][z]])
          fail(rep.monoid, "associativity: " + pair2(m, x, y) + ", z=" + m.names[z]);
  for (std::size_t x = 0; x < n && rep.monoid.holds; ++x)
    if (m.compose[m.id][x] != x || m.compose[x][m.id] != x)
      fail(rep.monoid, "unit: x=" + m.names[x]);

  // Distributive lattice with extremes.
  for (std::size_t x = 0; x < n && rep.lattice.holds; ++x) {
    if (m.join[x][x] != x || m.meet[x][x] != x)
      fail(rep.lattice, "idempotence: x=" + m.names[x]);
    if (!m.le(m.bot, x) || !m.le(x, m.top))
      fail(rep.lattice, "extremes: x=" + m.names[x]);
  }
  for (std::size_t x = 0; x < n && rep.lattice.holds; ++x)
    for (std::size_t y = 0; y < n && rep.lattice.holds; ++y) {
      if (m.join[x][y] != m.join[y][x] || m.meet[x][y] != m.meet[y][x])
        fail(rep.lattice, "commutativity: " + pair2(m, x, y));
      else if (m.join[x][m.meet[x][y]] != x || m.meet[x][m.join[x][y]] != x)
        fail(rep.lattice, "absorption: " + pair2(m, x, y));
      else if ((m.join[x][y] == y) != (m.meet[x][y] == x))
        fail(rep.lattice, "order agreement: " + pair2(m, x, y));
    }
  for (std::size_t x = 0; x < n && rep.lattice.holds; ++x)
    for (std::size_t y = 0; y < n && rep.lattice.holds; ++y)
      for (std::size_t z = 0; z < n && rep.lattice.holds; ++z) {
        if (m.join[m.join[x][y]][z] != m.join[x][m.join[y][z]] ||
            m.meet[m.meet[x][y]][z] != m.meet[x][m.meet[y][z]])
          fail(rep.lattice,
               "associativity: " + pair2(m, x, y) + ", z=" + m.names[z]);
        else if (m.meet[x][m.join[y][z]] !=
                     m.join[m.meet[x][y]][m.meet[x][z]] ||
                 m.join[x][m.meet[y][z]] != m.meet[m.join[x][y]][m.join[x][z]])
          fail(rep.lattice,
               "distributivity: " + pair2(m, x, y) + ", z=" + m.names[z]);
      }

  // Converse: Galois connection, contravariance, involution.
  for (std::size_t y = 0; y < n && rep.converse_laws.holds; ++y)
    for (std::size_t x = 0; x < n && rep.converse_laws.holds; ++x)
      if (m.le(m.converse[x], y) != m.le(x, m.converse[y]))
        fail(rep.converse_laws, "gc: " + pair2(m, x, y));
  for (std::size_t x = 0; x < n && rep.converse_laws.holds; ++x)
    for (std::size_t y = 0; y < n && rep.converse_laws.holds; ++y)
      if (m.converse[m.compose[x][y]] !=
          m.compose[m.converse[y]][m.converse[x]])
        fail(rep.converse_laws, "contravariance: " + pair2(m, x, y));
  for (std::size_t x = 0; x < n && rep.converse_laws.holds; ++x)
    if (m.converse[m.converse[x]] != x)
      fail(rep.converse_laws, "involution: x=" + m.names[x]);

  // Factors: the join of all candidates must itself satisfy the bound.
  for (std::size_t x = 0; x < n && rep.factors.holds; ++x)
    for (std::size_t z = 0; z < n && rep.factors.holds; ++z) {
      std::size_t under = m.bot;
      for (std::size_t y = 0; y < n; ++y)
        if (m.le(m.compose[x][y], z)) under = m.join[under][y];
      if (!m.le(m.compose[x][under], z))
        fail(rep.factors, "left: x=" + m.names[x] + ", z=" + m.names[z]);
    }
  for (std::size_t z = 0; z < n && rep.factors.holds; ++z)
    for (std::size_t y = 0; y < n && rep.factors.holds; ++y) {
      std::size_t over = m.bot;
      for (std::size_t x = 0; x < n; ++x)
        if (m.le(m.compose[x][y], z)) over = m.join[over][x];
      if (!m.le(m.compose[over][y], z))
        fail(rep.factors, "right: z=" + m.names[z] + ", y=" + m.names[y]);
    }

  // Modularity.
  for (std::size_t x = 0; x < n && rep.modularity.holds; ++x)
    for (std::size_t y = 0; y < n && rep.modularity.holds; ++y)
      for (std::size_t z = 0; z < n && rep.modularity.holds; ++z) {
        std::size_t lhs = m.meet[m.compose[x][y]][z];
        std::size_t rhs =
            m.compose[x][m.meet[y][m.compose[m.converse[x]][z]]];
        if (!m.le(lhs, rhs))
          fail(rep.modularity, pair2(m, x, y) + ", z=" + m.names[z]);
      }

  // Cone rule.
  for (std::size_t x = 0; x < n && rep.cone.holds; ++x)
    if ((m.compose[m.compose[m.top][x]][m.top] == m.top) != (x != m.bot))
      fail(rep.cone, "x=" + m.names[x]);

  // Axiom of choice over the model's pers.
  if (auto witness = choice_failure(m))
    fail(rep.choice, "per without index: " + m.names[*witness]);

  return rep;
}

std::optional<std::size_t> choice_failure(const AbstractModel& m) {
  for (std::size_t p = 0; p < m.size(); ++p)
    if (is_model_per(m, p) && !has_model_index(m, p)) return p;
  return std::nullopt;
}

ModelThins thins_in_model(const AbstractModel& m) {
  ModelThins out;
  for (std::size_t x = 0; x < m.size(); ++x)
    if (is_model_per(m, x)) out.pers.push_back(x);
  out.thins.assign(out.pers.size(), std::vector<bool>(out.pers.size(), false));
  for (std::size_t i = 0; i < out.pers.size(); ++i)
    for (std::size_t j = 0; j < out.pers.size(); ++j) {
      out.thins[i][j] = model_thins(m, out.pers[i], out.pers[j]);
      if (out.thins[i][j] && i != j) out.discrete = false;
    }
  return out;
}

bool check_minimality_gap(const AbstractModel& m) {
  ModelThins t = thins_in_model(m);
  for (std::size_t i = 0; i < t.pers.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < t.pers.size(); ++j)
      if (j != i && t.thins[j][i]) {
        minimal = false;
        break;
      }
    if (minimal && !m.le(t.pers[i], m.id)) return true;
  }
  return false;
}

AbstractModel abstract_from_concrete(std::size_t n) {
  Carrier c{"A", n};
  TypeSig sig{c, c};
  std::vector<Rel> rels = enumerate_relations(sig);
  auto index_of = [&rels](const Rel& r) -> std::size_t {
    auto it = std::lower_bound(rels.begin(), rels.end(), r, lex_less);
    return static_cast<std::size_t>(it - rels.begin());
  };
  AbstractModel m;
  std::size_t count = rels.size();
  m.names.reserve(count);
  for (const Rel& r : rels) m.names.push_back(pair_list(r));
  m.compose.assign(count, std::vector<std::size_t>(count));
  m.join.assign(count, std::vector<std::size_t>(count));
  m.meet.assign(count, std::vector<std::size_t>(count));
  m.converse.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    m.converse[i] = index_of(converse(rels[i]));
    for (std::size_t j = 0; j < count; ++j) {
      m.compose[i][j] = index_of(compose(rels[i], rels[j]));
      m.join[i][j] = index_of(join(rels[i], rels[j]));
      m.meet[i][j] = index_of(meet(rels[i], rels[j]));
    }
  }
  m.bot = index_of(bottom(sig));
  m.id = index_of(identity(c));
  m.top = index_of(top(sig));
  return m;
}

bool isomorphic(const AbstractModel& a, const AbstractModel& b) {
  if (a.size() != b.size()) return false;
  std::size_t n = a.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (perm[a.bot] != b.bot || perm[a.id] != b.id || perm[a.top] != b.top)
      continue;
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) {
      if (perm[a.converse[x]] != b.converse[perm[x]]) ok = false;
      for (std::size_t y = 0; y < n && ok; ++y)
        if (perm[a.compose[x][y]] != b.compose[perm[x]][perm[y]] ||
            perm[a.join[x][y]] != b.join[perm[x]][perm[y]] ||
            perm[a.meet[x][y]] != b.meet[perm[x]][perm[y]])
          ok = false;
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace thins
