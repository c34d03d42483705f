// Copyright 2026 The strand Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef STRAND_OBJECT_HPP_
#define STRAND_OBJECT_HPP_

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace strand {

enum class DualMark : unsigned char { kRight, kLeft };

// A generating object decorated with a stack of dual markers, innermost
// first: {V, [kRight, kRight]} is V**.
struct Atom {
  std::string name;
  std::vector<DualMark> marks;

  bool operator==(const Atom&) const = default;
  auto operator<=>(const Atom&) const = default;

  std::size_t right_depth() const;
  bool is_plain() const { return marks.empty(); }
  Atom base() const { return Atom{name, {}}; }
  Atom right_dual() const;
  Atom left_dual() const;
  // One marker removed; requires !is_plain().
  Atom undual() const;
};

// A flat tensor word; the empty word is the unit object.
class ObjectExpr {
 public:
  ObjectExpr() = default;
  explicit ObjectExpr(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {}
  static ObjectExpr Generator(std::string name);

  const std::vector<Atom>& atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }
  bool is_unit() const { return atoms_.empty(); }
  const Atom& operator[](std::size_t i) const { return atoms_[i]; }

  ObjectExpr slice(std::size_t begin, std::size_t end) const;

  bool operator==(const ObjectExpr&) const = default;
  auto operator<=>(const ObjectExpr&) const = default;

  std::size_t hash() const;

 private:
  std::vector<Atom> atoms_;
};

ObjectExpr Unit();
ObjectExpr Tensor(const ObjectExpr& a, const ObjectExpr& b);
ObjectExpr Tensor(std::initializer_list<ObjectExpr> parts);
// (X⊗Y)* = Y*⊗X*, 𝟙* = 𝟙.
ObjectExpr Dual(const ObjectExpr& x);
ObjectExpr LeftDual(const ObjectExpr& x);
// Replaces every left marker by a right one.
ObjectExpr IdentifyLeftDuals(const ObjectExpr& x);

// Unicode rendering, e.g. "V ⊗ W*" or "𝟙".
std::string ToString(const Atom& a);
std::string ToString(const ObjectExpr& x);

// Inverse of ToString. Also accepts "(x)" for ⊗, "^" for ∨ and "unit" for 𝟙.
// Throws Error(kSyntax).
ObjectExpr ParseObjectExpr(std::string_view text);

}  // namespace strand

#endif  // STRAND_OBJECT_HPP_
