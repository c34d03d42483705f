// Copyright 2026 The strand Authors
// SPDX-License-Identifier: Apache-2.0

#include "strand/term.hpp"

#include <mutex>
#include <shared_mutex>
#include <unordered_set>

#include "strand/error.hpp"

namespace strand {

class Node {
 public:
  Kind kind;
  std::string name;
  ObjectExpr a;
  ObjectExpr b;
  const Node* lhs = nullptr;
  const Node* rhs = nullptr;
  std::size_t hash = 0;
  std::size_t size = 1;

  void Seal() {
    std::size_t h = static_cast<std::size_t>(kind) * 0x100000001b3ULL;
    auto mix = [&h](std::size_t v) {
      h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    };
    mix(std::hash<std::string>{}(name));
    mix(a.hash());
    mix(b.hash());
    mix(lhs ? lhs->hash : 0x51);
    mix(rhs ? rhs->hash : 0x73);
    hash = h;
    size = 1 + (lhs ? lhs->size : 0) + (rhs ? rhs->size : 0);
  }
};

namespace {

struct NodePtrHash {
  std::size_t operator()(const Node* n) const { return n->hash; }
};

struct NodePtrEq {
  bool operator()(const Node* x, const Node* y) const {
    return x->kind == y->kind && x->lhs == y->lhs && x->rhs == y->rhs &&
           x->name == y->name && x->a == y->a && x->b == y->b;
  }
};

class InternTable {
 public:
  const Node* Intern(Node&& n) {
    n.Seal();
    {
      std::shared_lock lock(mu_);
      auto it = nodes_.find(&n);
      if (it != nodes_.end()) return *it;
    }
    std::unique_lock lock(mu_);
    auto it = nodes_.find(&n);
    if (it != nodes_.end()) return *it;
    const Node* owned = new Node(std::move(n));
    nodes_.insert(owned);
    return owned;
  }

 private:
  std::shared_mutex mu_;
  std::unordered_set<const Node*, NodePtrHash, NodePtrEq> nodes_;
};

InternTable& Table() {
  static auto* table = new InternTable();
  return *table;
}

}  // namespace

std::string_view KindName(Kind kind) {
  switch (kind) {
    case Kind::kId: return "Id";
    case Kind::kGen: return "Gen";
    case Kind::kCompose: return "Compose";
    case Kind::kTensor: return "Tensor";
    case Kind::kBirth: return "Birth";
    case Kind::kDeath: return "Death";
    case Kind::kLBirth: return "LBirth";
    case Kind::kLDeath: return "LDeath";
    case Kind::kBraid: return "Braid";
    case Kind::kBraidInv: return "BraidInv";
    case Kind::kTwist: return "Twist";
    case Kind::kTwistInv: return "TwistInv";
    case Kind::kDagger: return "Dagger";
  }
  return "?";
}

Term Term::Intern(Node&& n) { return Term(Table().Intern(std::move(n))); }

namespace {

Node Leaf(Kind k, const ObjectExpr& a, const ObjectExpr& b = ObjectExpr()) {
  Node n;
  n.kind = k;
  n.a = a;
  n.b = b;
  return n;
}

}  // namespace

Term Term::Id(const ObjectExpr& x) { return Intern(Leaf(Kind::kId, x)); }

Term Term::Gen(const std::string& name) {
  Node n;
  n.kind = Kind::kGen;
  n.name = name;
  return Intern(std::move(n));
}

Term Term::Compose(Term g, Term f) {
  Node n;
  n.kind = Kind::kCompose;
  n.lhs = g.node_;
  n.rhs = f.node_;
  return Intern(std::move(n));
}

Term Term::Tensor(Term f, Term g) {
  Node n;
  n.kind = Kind::kTensor;
  n.lhs = f.node_;
  n.rhs = g.node_;
  return Intern(std::move(n));
}

Term Term::Birth(const ObjectExpr& x) { return Intern(Leaf(Kind::kBirth, x)); }
Term Term::Death(const ObjectExpr& x) { return Intern(Leaf(Kind::kDeath, x)); }
Term Term::LBirth(const ObjectExpr& x) { return Intern(Leaf(Kind::kLBirth, x)); }
Term Term::LDeath(const ObjectExpr& x) { return Intern(Leaf(Kind::kLDeath, x)); }
Term Term::Braid(const ObjectExpr& u, const ObjectExpr& v) {
  return Intern(Leaf(Kind::kBraid, u, v));
}
Term Term::BraidInv(const ObjectExpr& u, const ObjectExpr& v) {
  return Intern(Leaf(Kind::kBraidInv, u, v));
}
Term Term::Twist(const ObjectExpr& x) { return Intern(Leaf(Kind::kTwist, x)); }
Term Term::TwistInv(const ObjectExpr& x) {
  return Intern(Leaf(Kind::kTwistInv, x));
}

Term Term::Dagger(Term f) {
  Node n;
  n.kind = Kind::kDagger;
  n.lhs = f.node_;
  return Intern(std::move(n));
}

Kind Term::kind() const { return node_->kind; }
const std::string& Term::name() const { return node_->name; }
const ObjectExpr& Term::object() const { return node_->a; }
const ObjectExpr& Term::object2() const { return node_->b; }
Term Term::lhs() const { return Term(node_->lhs); }
Term Term::rhs() const { return Term(node_->rhs); }
std::size_t Term::hash() const { return node_ ? node_->hash : 0; }
std::size_t Term::size() const { return node_ ? node_->size : 0; }

Term Seq(std::initializer_list<Term> steps) {
  Term out;
  for (const Term& s : steps) {
    out = out.valid() ? Term::Compose(s, out) : s;
  }
  return out;
}

std::string DebugString(const Term& t) {
  auto obj = [](const ObjectExpr& x) {
    std::string s = ToString(x);
    return x.size() > 1 ? "(" + s + ")" : s;
  };
  switch (t.kind()) {
    case Kind::kId: return "id_" + obj(t.object());
    case Kind::kGen: return t.name();
    case Kind::kCompose:
      return "(" + DebugString(t.lhs()) + " ∘ " + DebugString(t.rhs()) + ")";
    case Kind::kTensor:
      return "(" + DebugString(t.lhs()) + " ⊗ " + DebugString(t.rhs()) + ")";
    case Kind::kBirth: return "b_" + obj(t.object());
    case Kind::kDeath: return "d_" + obj(t.object());
    case Kind::kLBirth: return "β_" + obj(t.object());
    case Kind::kLDeath: return "δ_" + obj(t.object());
    case Kind::kBraid:
      return "c_{" + ToString(t.object()) + "," + ToString(t.object2()) + "}";
    case Kind::kBraidInv:
      return "c⁻¹_{" + ToString(t.object()) + "," + ToString(t.object2()) + "}";
    case Kind::kTwist: return "θ_" + obj(t.object());
    case Kind::kTwistInv: return "θ⁻¹_" + obj(t.object());
    case Kind::kDagger: return DebugString(t.lhs()) + "†";
  }
  return "?";
}

// ---------------------------------------------------------------------------

void Signature::AddObject(const std::string& name) {
  if (has_object(name)) return;
  objects_.push_back(name);
}

bool Signature::has_object(const std::string& name) const {
  for (const std::string& o : objects_) {
    if (o == name) return true;
  }
  return false;
}

const GeneratorDecl* Signature::find(const std::string& name) const {
  auto it = index_.find(name);
  return it == index_.end() ? nullptr : &generators_[it->second];
}

void Signature::AddGenerator(GeneratorDecl decl) {
  if (index_.count(decl.name)) {
    throw Error(ErrorCode::kBindingIllTyped,
                "generator '" + decl.name + "' declared twice");
  }
  for (const ObjectExpr* x : {&decl.dom, &decl.cod}) {
    for (const Atom& a : x->atoms()) {
      if (!has_object(a.name)) {
        throw Error(ErrorCode::kBindingIllTyped,
                    "generator '" + decl.name + "' uses undeclared object '" +
                        a.name + "'");
      }
    }
  }
  if (decl.adjoint && *decl.adjoint != decl.name) {
    if (const GeneratorDecl* other = find(*decl.adjoint)) {
      bool paired = other->adjoint && *other->adjoint == decl.name &&
                    other->dom == decl.cod && other->cod == decl.dom;
      if (!paired) {
        throw Error(ErrorCode::kBindingIllTyped,
                    "adjoint pairing of '" + decl.name + "' and '" +
                        *decl.adjoint + "' is not an involution");
      }
    }
  }
  for (const GeneratorDecl& other : generators_) {
    if (other.adjoint && *other.adjoint == decl.name &&
        decl.adjoint != other.name) {
      throw Error(ErrorCode::kBindingIllTyped,
                  "'" + other.name + "' names '" + decl.name +
                      "' as its adjoint but not conversely");
    }
  }
  if (decl.adjoint && *decl.adjoint == decl.name && decl.dom != decl.cod) {
    throw Error(ErrorCode::kBindingIllTyped,
                "self-adjoint generator '" + decl.name +
                    "' must be an endomorphism");
  }
  index_[decl.name] = generators_.size();
  generators_.push_back(std::move(decl));
}

ObjectExpr Signature::Canon(const ObjectExpr& x) const {
  return flavor_.identifies_left_duals() ? IdentifyLeftDuals(x) : x;
}

namespace {

[[noreturn]] void Unlicensed(Kind k, const char* needs) {
  throw Error(ErrorCode::kFlavorViolation,
              std::string(KindName(k)) + " requires a " + needs + " flavor");
}

}  // namespace

Boundary Typer::Type(const Term& t) {
  auto it = memo_.find(t.node());
  if (it != memo_.end()) return it->second;
  const Flavor& fl = sig_->flavor();
  auto canon = [this](const ObjectExpr& x) { return sig_->Canon(x); };
  Boundary out;
  switch (t.kind()) {
    case Kind::kId:
      out = {canon(t.object()), canon(t.object())};
      break;
    case Kind::kGen: {
      const GeneratorDecl* d = sig_->find(t.name());
      if (!d) {
        throw Error(ErrorCode::kUndeclaredGenerator,
                    "generator '" + t.name() + "' is not declared");
      }
      out = {canon(d->dom), canon(d->cod)};
      break;
    }
    case Kind::kCompose: {
      Boundary f = Type(t.rhs());
      Boundary g = Type(t.lhs());
      if (f.cod != g.dom) {
        throw Error(ErrorCode::kCompositionMismatch,
                    "codomain " + ToString(f.cod) + " of " +
                        DebugString(t.rhs()) + " does not match domain " +
                        ToString(g.dom) + " of " + DebugString(t.lhs()));
      }
      out = {f.dom, g.cod};
      break;
    }
    case Kind::kTensor: {
      Boundary f = Type(t.lhs());
      Boundary g = Type(t.rhs());
      out = {strand::Tensor(f.dom, g.dom), strand::Tensor(f.cod, g.cod)};
      break;
    }
    case Kind::kBirth:
    case Kind::kDeath: {
      if (!fl.right_rigid) Unlicensed(t.kind(), "right-rigid");
      ObjectExpr x = canon(t.object());
      ObjectExpr pair = t.kind() == Kind::kBirth
                            ? strand::Tensor(x, canon(Dual(x)))
                            : strand::Tensor(canon(Dual(x)), x);
      out = t.kind() == Kind::kBirth ? Boundary{Unit(), pair}
                                     : Boundary{pair, Unit()};
      break;
    }
    case Kind::kLBirth:
    case Kind::kLDeath: {
      if (!fl.left_rigid) Unlicensed(t.kind(), "left-rigid");
      ObjectExpr x = canon(t.object());
      ObjectExpr pair = t.kind() == Kind::kLBirth
                            ? strand::Tensor(canon(LeftDual(x)), x)
                            : strand::Tensor(x, canon(LeftDual(x)));
      out = t.kind() == Kind::kLBirth ? Boundary{Unit(), pair}
                                      : Boundary{pair, Unit()};
      break;
    }
    case Kind::kBraid:
    case Kind::kBraidInv: {
      if (!fl.braided) Unlicensed(t.kind(), "braided");
      ObjectExpr u = canon(t.object());
      ObjectExpr v = canon(t.object2());
      ObjectExpr uv = strand::Tensor(u, v);
      ObjectExpr vu = strand::Tensor(v, u);
      out = t.kind() == Kind::kBraid ? Boundary{uv, vu} : Boundary{vu, uv};
      break;
    }
    case Kind::kTwist:
    case Kind::kTwistInv:
      if (!fl.balanced) Unlicensed(t.kind(), "balanced");
      out = {canon(t.object()), canon(t.object())};
      break;
    case Kind::kDagger: {
      if (!fl.dagger) Unlicensed(t.kind(), "dagger");
      Boundary f = Type(t.lhs());
      out = {f.cod, f.dom};
      break;
    }
  }
  memo_.emplace(t.node(), out);
  return out;
}

Boundary Typecheck(const Term& t, const Signature& sig) {
  Typer typer(sig);
  return typer.Type(t);
}

}  // namespace strand
