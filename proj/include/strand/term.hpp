// Copyright 2026 The strand Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef STRAND_TERM_HPP_
#define STRAND_TERM_HPP_

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "strand/flavor.hpp"
#include "strand/object.hpp"

namespace strand {

enum class Kind : unsigned char {
  kId,
  kGen,
  kCompose,
  kTensor,
  kBirth,
  kDeath,
  kLBirth,
  kLDeath,
  kBraid,
  kBraidInv,
  kTwist,
  kTwistInv,
  kDagger,
};

std::string_view KindName(Kind kind);

class Node;

// Handle to an interned, immutable term node. Structurally equal terms share
// one node, so equality and hashing are pointer operations. Nodes live for
// the whole process.
class Term {
 public:
  Term() = default;

  static Term Id(const ObjectExpr& x);
  static Term Gen(const std::string& name);
  // g ∘ f: f first.
  static Term Compose(Term g, Term f);
  static Term Tensor(Term f, Term g);
  static Term Birth(const ObjectExpr& x);
  static Term Death(const ObjectExpr& x);
  static Term LBirth(const ObjectExpr& x);
  static Term LDeath(const ObjectExpr& x);
  static Term Braid(const ObjectExpr& u, const ObjectExpr& v);
  static Term BraidInv(const ObjectExpr& u, const ObjectExpr& v);
  static Term Twist(const ObjectExpr& x);
  static Term TwistInv(const ObjectExpr& x);
  static Term Dagger(Term f);

  bool valid() const { return node_ != nullptr; }
  Kind kind() const;
  // Generator name for kGen.
  const std::string& name() const;
  // Object argument of Id/Birth/Death/LBirth/LDeath/Twist/TwistInv, and
  // first object of Braid/BraidInv.
  const ObjectExpr& object() const;
  // Second object of Braid/BraidInv.
  const ObjectExpr& object2() const;
  // Compose: lhs is the outer map g of g∘f; Tensor: left factor; Dagger: arg.
  Term lhs() const;
  Term rhs() const;

  std::size_t hash() const;
  // Number of nodes in the tree expansion (shared nodes counted repeatedly).
  std::size_t size() const;
  const Node* node() const { return node_; }

  bool operator==(const Term& o) const { return node_ == o.node_; }
  bool operator!=(const Term& o) const { return node_ != o.node_; }

 private:
  explicit Term(const Node* n) : node_(n) {}
  static Term Intern(Node&& n);
  const Node* node_ = nullptr;
};

// Left-to-right composite f1 ; f2 ; ... (f1 applied first).
Term Seq(std::initializer_list<Term> steps);

struct TermHash {
  std::size_t operator()(const Term& t) const { return t.hash(); }
};

// Debug rendering in mathematical notation, e.g. "(id_V ⊗ d_V) ∘ (b_V ⊗ id_V)".
std::string DebugString(const Term& t);

struct GeneratorDecl {
  std::string name;
  ObjectExpr dom;
  ObjectExpr cod;
  std::optional<std::string> adjoint;

  bool operator==(const GeneratorDecl&) const = default;
};

class Signature {
 public:
  Signature() = default;
  explicit Signature(Flavor flavor) : flavor_(flavor.Closed()) {}

  void AddObject(const std::string& name);
  // Throws on duplicate names, undeclared objects, or a broken adjoint
  // involution.
  void AddGenerator(GeneratorDecl decl);
  void set_flavor(Flavor f) { flavor_ = f.Closed(); }

  const Flavor& flavor() const { return flavor_; }
  const std::vector<std::string>& objects() const { return objects_; }
  const std::vector<GeneratorDecl>& generators() const { return generators_; }
  bool has_object(const std::string& name) const;
  const GeneratorDecl* find(const std::string& name) const;

  // Canonical form of an object under this flavor's dual identification.
  ObjectExpr Canon(const ObjectExpr& x) const;

 private:
  Flavor flavor_;
  std::vector<std::string> objects_;
  std::vector<GeneratorDecl> generators_;
  std::map<std::string, std::size_t> index_;
};

struct Boundary {
  ObjectExpr dom;
  ObjectExpr cod;
  bool operator==(const Boundary&) const = default;
};

// Type inference with a per-instance memo keyed by node. Not thread-safe;
// use one Typer per thread.
class Typer {
 public:
  explicit Typer(const Signature& sig) : sig_(&sig) {}
  Boundary Type(const Term& t);
  const Signature& signature() const { return *sig_; }

 private:
  const Signature* sig_;
  std::unordered_map<const Node*, Boundary> memo_;
};

// Errors: UndeclaredGenerator, CompositionMismatch, FlavorViolation.
Boundary Typecheck(const Term& t, const Signature& sig);

}  // namespace strand

template <>
struct std::hash<strand::Term> {
  std::size_t operator()(const strand::Term& t) const { return t.hash(); }
};

#endif  // STRAND_TERM_HPP_
