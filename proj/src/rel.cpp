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

#include "thins/rel.hpp"

#include <bit>

namespace thins {

namespace {

constexpr std::size_t kMaxCarrier = 64;

void require_same_sig(const Rel& x, const Rel& y, const char* op) {
  if (x.sig() != y.sig())
    throw TypeError(std::string(op) + ": sig mismatch, " + to_string(x.sig()) +
                    " vs " + to_string(y.sig()));
}

void require_homogeneous(const Rel& r, const char* op) {
  if (!r.sig().homogeneous())
    throw TypeError(std::string(op) + ": needs a homogeneous sig, got " +
                    to_string(r.sig()));
}

}  // namespace

Carrier::Carrier(std::string name, std::size_t size)
    : name_(std::move(name)), size_(size) {
  if (size_ > kMaxCarrier)
    throw std::length_error("carrier '" + name_ + "' exceeds " +
                            std::to_string(kMaxCarrier) + " elements");
}

std::string to_string(const TypeSig& sig) {
  return sig.src.name() + "(" + std::to_string(sig.src.size()) + ")~" +
         sig.tgt.name() + "(" + std::to_string(sig.tgt.size()) + ")";
}

std::string pair_list(const Rel& r) {
  std::string out = "{";
  bool first = true;
  for (const auto& [a, b] : r.pairs()) {
    if (!first) out += ",";
    first = false;
    out += "(" + std::to_string(a) + "," + std::to_string(b) + ")";
  }
  return out + "}";
}

Rel::Rel(TypeSig sig) : sig_(std::move(sig)), bits_(sig_.src.size(), 0) {}

Rel Rel::from_pairs(TypeSig sig,
                    const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  Rel r{std::move(sig)};
  for (const auto& [a, b] : pairs) r.set(a, b);
  return r;
}

bool Rel::at(std::size_t a, std::size_t b) const {
  if (a >= rows() || b >= cols()) throw std::out_of_range("Rel::at");
  return (bits_[a] >> b) & 1;
}

void Rel::set(std::size_t a, std::size_t b, bool value) {
  if (a >= rows() || b >= cols()) throw std::out_of_range("Rel::set");
  if (value)
    bits_[a] |= std::uint64_t{1} << b;
  else
    bits_[a] &= ~(std::uint64_t{1} << b);
}

bool Rel::empty() const {
  for (auto w : bits_)
    if (w) return false;
  return true;
}

std::size_t Rel::count() const {
  std::size_t total = 0;
  for (auto w : bits_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::vector<std::pair<std::size_t, std::size_t>> Rel::pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < rows(); ++a) {
    std::uint64_t w = bits_[a];
    while (w) {
      std::size_t b = static_cast<std::size_t>(std::countr_zero(w));
      out.emplace_back(a, b);
      w &= w - 1;
    }
  }
  return out;
}

bool lex_less(const Rel& x, const Rel& y) {
  require_same_sig(x, y, "lex_less");
  for (std::size_t a = 0; a < x.rows(); ++a) {
    for (std::size_t b = 0; b < x.cols(); ++b) {
      bool xb = x.at(a, b), yb = y.at(a, b);
      if (xb != yb) return !xb;
    }
  }
  return false;
}

Rel bottom(TypeSig sig) { return Rel{std::move(sig)}; }

Rel top(TypeSig sig) {
  Rel r{std::move(sig)};
  for (std::size_t a = 0; a < r.rows(); ++a)
    for (std::size_t b = 0; b < r.cols(); ++b) r.set(a, b);
  return r;
}

Rel identity(const Carrier& c) {
  Rel r{TypeSig{c, c}};
  for (std::size_t a = 0; a < c.size(); ++a) r.set(a, a);
  return r;
}

Rel meet(const Rel& x, const Rel& y) {
  require_same_sig(x, y, "meet");
  Rel r{x.sig()};
  for (std::size_t a = 0; a < x.rows(); ++a)
    for (std::size_t b = 0; b < x.cols(); ++b)
      if (x.at(a, b) && y.at(a, b)) r.set(a, b);
  return r;
}

Rel join(const Rel& x, const Rel& y) {
  require_same_sig(x, y, "join");
  Rel r{x.sig()};
  for (std::size_t a = 0; a < x.rows(); ++a)
    for (std::size_t b = 0; b < x.cols(); ++b)
      if (x.at(a, b) || y.at(a, b)) r.set(a, b);
  return r;
}

bool is_subset(const Rel& x, const Rel& y) {
  require_same_sig(x, y, "is_subset");
  for (std::size_t a = 0; a < x.rows(); ++a)
    if (x.row_bits(a) & ~y.row_bits(a)) return false;
  return true;
}

Rel compose(const Rel& x, const Rel& y) {
  if (x.sig().tgt != y.sig().src)
    throw TypeError("compose: middle carriers differ, " + to_string(x.sig()) +
                    " then " + to_string(y.sig()));
  Rel r{TypeSig{x.sig().src, y.sig().tgt}};
  for (std::size_t a = 0; a < x.rows(); ++a) {
    std::uint64_t w = x.row_bits(a);
    std::uint64_t acc = 0;
    while (w) {
      std::size_t b = static_cast<std::size_t>(std::countr_zero(w));
      acc |= y.row_bits(b);
      w &= w - 1;
    }
    for (std::size_t c = 0; c < r.cols(); ++c)
      if ((acc >> c) & 1) r.set(a, c);
  }
  return r;
}

Rel converse(const Rel& x) {
  Rel r{TypeSig{x.sig().tgt, x.sig().src}};
  for (std::size_t a = 0; a < x.rows(); ++a)
    for (std::size_t b = 0; b < x.cols(); ++b)
      if (x.at(a, b)) r.set(b, a);
  return r;
}

Rel left_factor(const Rel& x, const Rel& z) {
  if (x.sig().src != z.sig().src)
    throw TypeError("left_factor: source carriers differ, " + to_string(x.sig()) +
                    " vs " + to_string(z.sig()));
  // (X\Z)(b,c) = forall a: X(a,b) => Z(a,c); start from top and carve away.
  Rel r = top(TypeSig{x.sig().tgt, z.sig().tgt});
  for (std::size_t a = 0; a < x.rows(); ++a)
    for (std::size_t b = 0; b < x.cols(); ++b)
      if (x.at(a, b))
        for (std::size_t c = 0; c < z.cols(); ++c)
          if (!z.at(a, c)) r.set(b, c, false);
  return r;
}

Rel right_factor(const Rel& z, const Rel& y) {
  if (y.sig().tgt != z.sig().tgt)
    throw TypeError("right_factor: target carriers differ, " + to_string(z.sig()) +
                    " vs " + to_string(y.sig()));
  // (Z/Y)(a,b) = forall c: Y(b,c) => Z(a,c), i.e. row b of Y inside row a of Z.
  Rel r{TypeSig{z.sig().src, y.sig().src}};
  for (std::size_t a = 0; a < z.rows(); ++a)
    for (std::size_t b = 0; b < y.rows(); ++b)
      if ((y.row_bits(b) & ~z.row_bits(a)) == 0) r.set(a, b);
  return r;
}

bool is_per(const Rel& r) {
  if (!r.sig().homogeneous()) return false;
  if (!(r == converse(r))) return false;
  return is_subset(compose(r, r), r);
}

bool is_coreflexive(const Rel& r) {
  if (!r.sig().homogeneous()) return false;
  for (std::size_t a = 0; a < r.rows(); ++a)
    if (r.row_bits(a) & ~(std::uint64_t{1} << a)) return false;
  return true;
}

bool is_equivalence(const Rel& r) {
  return is_per(r) && is_subset(identity(r.sig().src), r);
}

Coreflexive::Coreflexive(Rel r) : rel_(std::move(r)) {
  if (!is_coreflexive(rel_))
    throw std::invalid_argument("not coreflexive on " + to_string(rel_.sig()));
}

Per::Per(Rel r) : rel_(std::move(r)) {
  if (!is_per(rel_))
    throw std::invalid_argument("not a per on " + to_string(rel_.sig()));
}

Coreflexive left_domain(const Rel& r) {
  Rel d{TypeSig{r.sig().src, r.sig().src}};
  for (std::size_t a = 0; a < r.rows(); ++a)
    if (r.row_bits(a)) d.set(a, a);
  return Coreflexive{std::move(d)};
}

Coreflexive right_domain(const Rel& r) {
  Rel d{TypeSig{r.sig().tgt, r.sig().tgt}};
  std::uint64_t cols = 0;
  for (std::size_t a = 0; a < r.rows(); ++a) cols |= r.row_bits(a);
  for (std::size_t b = 0; b < r.cols(); ++b)
    if ((cols >> b) & 1) d.set(b, b);
  return Coreflexive{std::move(d)};
}

Coreflexive domain(const Per& p) { return left_domain(p.rel()); }

Per per_left_domain(const Rel& r) {
  Rel d{TypeSig{r.sig().src, r.sig().src}};
  for (std::size_t a = 0; a < r.rows(); ++a) {
    if (!r.row_bits(a)) continue;
    for (std::size_t a2 = 0; a2 < r.rows(); ++a2)
      if (r.row_bits(a) == r.row_bits(a2)) d.set(a, a2);
  }
  return Per{std::move(d)};
}

Per per_right_domain(const Rel& r) { return per_left_domain(converse(r)); }

Rel transitive_closure(const Rel& r) {
  require_homogeneous(r, "transitive_closure");
  Rel t = r;
  for (;;) {
    Rel next = join(t, compose(t, t));
    if (next == t) return t;
    t = std::move(next);
  }
}

}  // namespace thins
