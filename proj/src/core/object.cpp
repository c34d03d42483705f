// Copyright 2026 The strand Authors
// SPDX-License-Identifier: Apache-2.0

#include "strand/object.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "strand/error.hpp"

namespace strand {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUndeclaredGenerator: return "UndeclaredGenerator";
    case ErrorCode::kCompositionMismatch: return "CompositionMismatch";
    case ErrorCode::kFlavorViolation: return "FlavorViolation";
    case ErrorCode::kNotAScalar: return "NotAScalar";
    case ErrorCode::kNotEndomorphism: return "NotEndomorphism";
    case ErrorCode::kBoundaryMismatch: return "BoundaryMismatch";
    case ErrorCode::kNoMatch: return "NoMatch";
    case ErrorCode::kUnassignedGenerator: return "UnassignedGenerator";
    case ErrorCode::kShapeMismatch: return "ShapeMismatch";
    case ErrorCode::kNotScalarShaped: return "NotScalarShaped";
    case ErrorCode::kGuardUnsatisfied: return "GuardUnsatisfied";
    case ErrorCode::kBindingIllTyped: return "BindingIllTyped";
    case ErrorCode::kSyntax: return "SyntaxError";
    case ErrorCode::kInvalidModel: return "InvalidModel";
  }
  return "Error";
}

std::size_t Atom::right_depth() const {
  return static_cast<std::size_t>(
      std::count(marks.begin(), marks.end(), DualMark::kRight));
}

Atom Atom::right_dual() const {
  Atom out = *this;
  out.marks.push_back(DualMark::kRight);
  return out;
}

Atom Atom::left_dual() const {
  Atom out = *this;
  out.marks.push_back(DualMark::kLeft);
  return out;
}

Atom Atom::undual() const {
  Atom out = *this;
  out.marks.pop_back();
  return out;
}

ObjectExpr ObjectExpr::Generator(std::string name) {
  return ObjectExpr({Atom{std::move(name), {}}});
}

ObjectExpr ObjectExpr::slice(std::size_t begin, std::size_t end) const {
  return ObjectExpr(
      std::vector<Atom>(atoms_.begin() + begin, atoms_.begin() + end));
}

std::size_t ObjectExpr::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (const Atom& a : atoms_) {
    h ^= std::hash<std::string>{}(a.name) + 0x9e3779b9 + (h << 6) + (h >> 2);
    for (DualMark m : a.marks) {
      h = h * 31 + (m == DualMark::kRight ? 1 : 2);
    }
    h = h * 1000003 + 7;
  }
  return h;
}

ObjectExpr Unit() { return ObjectExpr(); }

ObjectExpr Tensor(const ObjectExpr& a, const ObjectExpr& b) {
  std::vector<Atom> atoms = a.atoms();
  atoms.insert(atoms.end(), b.atoms().begin(), b.atoms().end());
  return ObjectExpr(std::move(atoms));
}

ObjectExpr Tensor(std::initializer_list<ObjectExpr> parts) {
  std::vector<Atom> atoms;
  for (const ObjectExpr& p : parts) {
    atoms.insert(atoms.end(), p.atoms().begin(), p.atoms().end());
  }
  return ObjectExpr(std::move(atoms));
}

ObjectExpr Dual(const ObjectExpr& x) {
  std::vector<Atom> atoms;
  atoms.reserve(x.size());
  for (auto it = x.atoms().rbegin(); it != x.atoms().rend(); ++it) {
    atoms.push_back(it->right_dual());
  }
  return ObjectExpr(std::move(atoms));
}

ObjectExpr LeftDual(const ObjectExpr& x) {
  std::vector<Atom> atoms;
  atoms.reserve(x.size());
  for (auto it = x.atoms().rbegin(); it != x.atoms().rend(); ++it) {
    atoms.push_back(it->left_dual());
  }
  return ObjectExpr(std::move(atoms));
}

ObjectExpr IdentifyLeftDuals(const ObjectExpr& x) {
  std::vector<Atom> atoms = x.atoms();
  for (Atom& a : atoms) {
    std::fill(a.marks.begin(), a.marks.end(), DualMark::kRight);
  }
  return ObjectExpr(std::move(atoms));
}

std::string ToString(const Atom& a) {
  std::string out = a.name;
  for (DualMark m : a.marks) out += (m == DualMark::kRight ? "*" : "∨");
  return out;
}

std::string ToString(const ObjectExpr& x) {
  if (x.is_unit()) return "𝟙";
  std::string out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i > 0) out += " ⊗ ";
    out += ToString(x[i]);
  }
  return out;
}

ObjectExpr ParseObjectExpr(std::string_view text) {
  std::vector<Atom> atoms;
  std::size_t i = 0;
  auto fail = [&](const std::string& what) -> ObjectExpr {
    throw Error(ErrorCode::kSyntax, what + " at offset " + std::to_string(i) +
                                        " in object '" + std::string(text) +
                                        "'");
  };
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  auto take = [&](std::string_view tok) {
    if (text.substr(i, tok.size()) != tok) return false;
    i += tok.size();
    return true;
  };
  bool expect_atom = true;
  skip_space();
  if (take("𝟙") || take("unit")) {
    skip_space();
    if (i != text.size()) return fail("trailing input");
    return Unit();
  }
  while (true) {
    skip_space();
    if (!expect_atom) {
      if (i == text.size()) break;
      if (!take("⊗") && !take("(x)")) return fail("expected ⊗");
      expect_atom = true;
      continue;
    }
    std::size_t start = i;
    while (i < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[i])) ||
            text[i] == '_' || text[i] == '\'')) {
      ++i;
    }
    if (i == start) return fail("expected an object name");
    Atom a{std::string(text.substr(start, i - start)), {}};
    while (true) {
      if (take("*")) {
        a.marks.push_back(DualMark::kRight);
      } else if (take("∨") || take("^")) {
        a.marks.push_back(DualMark::kLeft);
      } else {
        break;
      }
    }
    atoms.push_back(std::move(a));
    expect_atom = false;
  }
  return ObjectExpr(std::move(atoms));
}

}  // namespace strand
