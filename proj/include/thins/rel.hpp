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
 * @file rel.hpp
 * @brief Typed finite binary relations and the point-free operators over them.
 *
 * A relation of type A~B is a boolean matrix with one row per element of the
 * source carrier A and one column per element of the target carrier B.  Rows
 * are bit-packed, one machine word per row, which bounds carriers at 64
 * elements; the enumeration engines impose far smaller caps.
 *
 * Carriers are identified by name and size together.  Relations over
 * distinct carriers never meet, join or compose, even when the sizes agree.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace thins {

/// Thrown when operands disagree on carriers or when a heterogeneous
/// relation reaches an operation that needs a homogeneous one.
struct TypeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A finite set of points 0..size-1 with a name.
class Carrier {
 public:
  Carrier() : name_("A"), size_(0) {}
  Carrier(std::string name, std::size_t size);

  const std::string& name() const { return name_; }
  std::size_t size() const { return size_; }

  friend bool operator==(const Carrier&, const Carrier&) = default;

 private:
  std::string name_;
  std::size_t size_;
};

/// The type of a relation: an ordered pair of carriers.
struct TypeSig {
  Carrier src;
  Carrier tgt;

  bool homogeneous() const { return src == tgt; }
  friend bool operator==(const TypeSig&, const TypeSig&) = default;
};

/// Renders a sig as "A(3)~B(2)" for error messages.
std::string to_string(const TypeSig& sig);

class Rel;

/// Renders a relation as its pair list, "{(0,0),(1,2)}", empty braces for
/// bottom.
std::string pair_list(const Rel& r);

/// A typed boolean relation.  Immutable by convention: operations return
/// fresh values and never mutate their arguments.
class Rel {
 public:
  explicit Rel(TypeSig sig);
  static Rel from_pairs(TypeSig sig,
                        const std::vector<std::pair<std::size_t, std::size_t>>& pairs);

  const TypeSig& sig() const { return sig_; }
  std::size_t rows() const { return sig_.src.size(); }
  std::size_t cols() const { return sig_.tgt.size(); }

  bool at(std::size_t a, std::size_t b) const;
  void set(std::size_t a, std::size_t b, bool value = true);

  /// Row a as a bitmask, bit b set iff a relates to b.
  std::uint64_t row_bits(std::size_t a) const { return bits_[a]; }

  bool empty() const;
  std::size_t count() const;

  /// All pairs in lexicographic order.
  std::vector<std::pair<std::size_t, std::size_t>> pairs() const;

  friend bool operator==(const Rel&, const Rel&) = default;

 private:
  TypeSig sig_;
  std::vector<std::uint64_t> bits_;
};

/// Strict lexicographic order on the flattened bit matrix, row-major,
/// earlier cells more significant.  Requires equal sigs.  Fixes the
/// enumeration order everywhere.
bool lex_less(const Rel& x, const Rel& y);

// Constants.
Rel bottom(TypeSig sig);
Rel top(TypeSig sig);
Rel identity(const Carrier& c);

// Lattice structure.  Binary operations require equal sigs.
Rel meet(const Rel& x, const Rel& y);
Rel join(const Rel& x, const Rel& y);
bool is_subset(const Rel& x, const Rel& y);

/// Boolean matrix product.  Requires x.sig().tgt == y.sig().src.
Rel compose(const Rel& x, const Rel& y);

/// Transpose; the sig is flipped.
Rel converse(const Rel& x);

/// Greatest Y with compose(X, Y) below Z.  Requires X.src == Z.src.
/// Pointwise: (X\Z)(b,c) holds iff X(a,b) implies Z(a,c) for every a.
Rel left_factor(const Rel& x, const Rel& z);

/// Greatest X with compose(X, Y) below Z.  Requires Y.tgt == Z.tgt.
Rel right_factor(const Rel& z, const Rel& y);

bool is_per(const Rel& r);
bool is_coreflexive(const Rel& r);
bool is_equivalence(const Rel& r);

/// A relation validated at construction to lie inside the identity.
class Coreflexive {
 public:
  explicit Coreflexive(Rel r);

  const Rel& rel() const { return rel_; }
  operator const Rel&() const { return rel_; }
  const Carrier& carrier() const { return rel_.sig().src; }

  friend bool operator==(const Coreflexive& x, const Coreflexive& y) {
    return x.rel_ == y.rel_;
  }

 private:
  Rel rel_;
};

/// A relation validated at construction to be symmetric and transitive.
class Per {
 public:
  explicit Per(Rel r);

  const Rel& rel() const { return rel_; }
  operator const Rel&() const { return rel_; }
  const Carrier& carrier() const { return rel_.sig().src; }

  friend bool operator==(const Per& x, const Per& y) { return x.rel_ == y.rel_; }

 private:
  Rel rel_;
};

/// Partial identity on the elements with a nonempty row.
Coreflexive left_domain(const Rel& r);

/// Partial identity on the elements with a nonempty column.
Coreflexive right_domain(const Rel& r);

/// For pers the left and right domains coincide; this is that common value.
Coreflexive domain(const Per& p);

/// Per relating two source elements iff their rows are equal and nonempty.
Per per_left_domain(const Rel& r);

/// Per relating two target elements iff their columns are equal and nonempty.
Per per_right_domain(const Rel& r);

/// Least transitive relation containing r, by repeated squaring.
/// Requires a homogeneous sig.
Rel transitive_closure(const Rel& r);

}  // namespace thins
