// Copyright 2026 The strand Authors
// SPDX-License-Identifier: Apache-2.0

#include "rewrite/rules.hpp"

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "rewrite/random.hpp"

namespace strand::rewrite {
namespace {

Flavor Need(std::initializer_list<bool Flavor::*> caps,
            DaggerType type = DaggerType::kNone) {
  Flavor f;
  for (bool Flavor::*c : caps) f.*c = true;
  f.dagger_type = type;
  return f;
}

const Flavor kMonoidal{};
const Flavor kRight = Need({&Flavor::right_rigid});
const Flavor kLeft = Need({&Flavor::left_rigid});
const Flavor kBraided = Need({&Flavor::braided});
const Flavor kBalanced = Need({&Flavor::balanced});
const Flavor kBraidedRigid = Need({&Flavor::braided, &Flavor::right_rigid});
const Flavor kRibbon = Need({&Flavor::ribbon});
const Flavor kDagger = Need({&Flavor::dagger});
const Flavor kDaggerRigid = Need({&Flavor::dagger, &Flavor::right_rigid});
const Flavor kTypeOneBraid =
    Need({&Flavor::dagger, &Flavor::braided}, DaggerType::kI);
const Flavor kTypeTwoBraid =
    Need({&Flavor::dagger, &Flavor::braided}, DaggerType::kII);
const Flavor kTypeOneTwist =
    Need({&Flavor::dagger, &Flavor::balanced}, DaggerType::kI);
const Flavor kTypeTwoTwist =
    Need({&Flavor::dagger, &Flavor::balanced}, DaggerType::kII);

// ---------------------------------------------------------------------------
// Term rules

std::optional<Term> DaggerArg(const Term& t, Kind inner) {
  if (t.kind() != Kind::kDagger || t.lhs().kind() != inner) return {};
  return t.lhs();
}

std::optional<Term> DaggerInvolution(const Term& t, Ctx&) {
  auto a = DaggerArg(t, Kind::kDagger);
  if (!a) return {};
  return a->lhs();
}

std::optional<Term> DaggerCompose(const Term& t, Ctx&) {
  auto a = DaggerArg(t, Kind::kCompose);
  if (!a) return {};
  return Term::Compose(Term::Dagger(a->rhs()), Term::Dagger(a->lhs()));
}

std::optional<Term> DaggerTensor(const Term& t, Ctx&) {
  auto a = DaggerArg(t, Kind::kTensor);
  if (!a) return {};
  return Term::Tensor(Term::Dagger(a->lhs()), Term::Dagger(a->rhs()));
}

std::optional<Term> DaggerIdentity(const Term& t, Ctx&) {
  auto a = DaggerArg(t, Kind::kId);
  if (!a) return {};
  return *a;
}

std::optional<Term> DaggerGenerator(const Term& t, Ctx& c) {
  auto a = DaggerArg(t, Kind::kGen);
  if (!a) return {};
  const GeneratorDecl* d = c.sig.find(a->name());
  if (!d || !d->adjoint) return {};
  return Term::Gen(*d->adjoint);
}

// Dagger of a duality map: Birth† = LDeath, Death† = LBirth and back.
std::optional<Term> DaggerDuality(const Term& t, Ctx&) {
  if (t.kind() != Kind::kDagger) return {};
  const Term a = t.lhs();
  switch (a.kind()) {
    case Kind::kBirth: return Term::LDeath(a.object());
    case Kind::kDeath: return Term::LBirth(a.object());
    case Kind::kLBirth: return Term::Death(a.object());
    case Kind::kLDeath: return Term::Birth(a.object());
    default: return {};
  }
}

std::optional<Term> DaggerBraidTypeOne(const Term& t, Ctx&) {
  if (t.kind() != Kind::kDagger) return {};
  const Term a = t.lhs();
  if (a.kind() == Kind::kBraid) return Term::BraidInv(a.object(), a.object2());
  if (a.kind() == Kind::kBraidInv) return Term::Braid(a.object(), a.object2());
  return {};
}

std::optional<Term> DaggerBraidTypeTwo(const Term& t, Ctx&) {
  if (t.kind() != Kind::kDagger) return {};
  const Term a = t.lhs();
  if (a.kind() == Kind::kBraid) return Term::Braid(a.object2(), a.object());
  if (a.kind() == Kind::kBraidInv) {
    return Term::BraidInv(a.object2(), a.object());
  }
  return {};
}

std::optional<Term> DaggerTwistTypeOne(const Term& t, Ctx&) {
  if (t.kind() != Kind::kDagger) return {};
  const Term a = t.lhs();
  if (a.kind() == Kind::kTwist) return Term::TwistInv(a.object());
  if (a.kind() == Kind::kTwistInv) return Term::Twist(a.object());
  return {};
}

std::optional<Term> DaggerTwistTypeTwo(const Term& t, Ctx&) {
  if (t.kind() != Kind::kDagger) return {};
  const Term a = t.lhs();
  if (a.kind() == Kind::kTwist || a.kind() == Kind::kTwistInv) return a;
  return {};
}

std::optional<Term> UnitRightDuality(const Term& t, Ctx&) {
  if ((t.kind() == Kind::kBirth || t.kind() == Kind::kDeath) &&
      t.object().is_unit()) {
    return Term::Id(Unit());
  }
  return {};
}

std::optional<Term> UnitLeftDuality(const Term& t, Ctx&) {
  if ((t.kind() == Kind::kLBirth || t.kind() == Kind::kLDeath) &&
      t.object().is_unit()) {
    return Term::Id(Unit());
  }
  return {};
}

std::optional<Term> UnitBraid(const Term& t, Ctx&) {
  if (t.kind() != Kind::kBraid && t.kind() != Kind::kBraidInv) return {};
  if (!t.object().is_unit() && !t.object2().is_unit()) return {};
  return Term::Id(Tensor(t.object(), t.object2()));
}

std::optional<Term> UnitTwist(const Term& t, Ctx&) {
  if ((t.kind() == Kind::kTwist || t.kind() == Kind::kTwistInv) &&
      t.object().is_unit()) {
    return Term::Id(Unit());
  }
  return {};
}

// b_{a⊗R} = (id_a ⊗ b_R ⊗ id_{a*}) ∘ b_a
std::optional<Term> ExpandBirth(const Term& t, Ctx& c) {
  if (t.kind() != Kind::kBirth || t.object().size() < 2) return {};
  const ObjectExpr& x = t.object();
  ObjectExpr a = x.slice(0, 1), r = x.slice(1, x.size());
  return Seq({Term::Birth(a),
              Place(a, Term::Birth(r), c.sig.Canon(Dual(a)))});
}

// d_{a⊗R} = d_R ∘ (id_{R*} ⊗ d_a ⊗ id_R)
std::optional<Term> ExpandDeath(const Term& t, Ctx& c) {
  if (t.kind() != Kind::kDeath || t.object().size() < 2) return {};
  const ObjectExpr& x = t.object();
  ObjectExpr a = x.slice(0, 1), r = x.slice(1, x.size());
  return Seq({Place(c.sig.Canon(Dual(r)), Term::Death(a), r),
              Term::Death(r)});
}

// β_{a⊗R} = (id_{R∨} ⊗ β_a ⊗ id_R) ∘ β_R
// The nested form holds for dagger-induced and tabulated left dualities;
// the braiding-induced one is handled by UnfoldBraidedLeft.
bool NestedLeftDuality(const Flavor& fl) {
  return fl.dagger || !(fl.braided && fl.right_rigid);
}

std::optional<Term> ExpandLBirth(const Term& t, Ctx& c) {
  if (t.kind() != Kind::kLBirth || t.object().size() < 2) return {};
  if (!NestedLeftDuality(c.sig.flavor())) return {};
  const ObjectExpr& x = t.object();
  ObjectExpr a = x.slice(0, 1), r = x.slice(1, x.size());
  return Seq({Term::LBirth(r),
              Place(c.sig.Canon(LeftDual(r)), Term::LBirth(a), r)});
}

// δ_{a⊗R} = δ_a ∘ (id_a ⊗ δ_R ⊗ id_{a∨})
std::optional<Term> ExpandLDeath(const Term& t, Ctx& c) {
  if (t.kind() != Kind::kLDeath || t.object().size() < 2) return {};
  if (!NestedLeftDuality(c.sig.flavor())) return {};
  const ObjectExpr& x = t.object();
  ObjectExpr a = x.slice(0, 1), r = x.slice(1, x.size());
  return Seq({Place(a, Term::LDeath(r), c.sig.Canon(LeftDual(a))),
              Term::LDeath(a)});
}

// Without a dagger, a braided right-rigid flavor's left duality is
// β_X = c⁻¹_{X*,X} ∘ b_X and δ_X = d_X ∘ c_{X,X*}.
std::optional<Term> UnfoldBraidedLeft(const Term& t, Ctx& c) {
  const Flavor& fl = c.sig.flavor();
  if (NestedLeftDuality(fl)) return {};
  if (t.kind() != Kind::kLBirth && t.kind() != Kind::kLDeath) return {};
  ObjectExpr x = c.sig.Canon(t.object());
  ObjectExpr xs = c.sig.Canon(Dual(x));
  if (t.kind() == Kind::kLBirth) {
    return Seq({Term::Birth(x), Term::BraidInv(xs, x)});
  }
  return Seq({Term::Braid(x, xs), Term::Death(x)});
}

// c_{a⊗U,V} = (c_{a,V} ⊗ id_U) ∘ (id_a ⊗ c_{U,V})
std::optional<Term> HexagonLeft(const Term& t, Ctx&) {
  if (t.kind() != Kind::kBraid || t.object().size() < 2 ||
      t.object2().is_unit()) {
    return {};
  }
  const ObjectExpr& u = t.object();
  const ObjectExpr& v = t.object2();
  ObjectExpr a = u.slice(0, 1), rest = u.slice(1, u.size());
  return Seq({Place(a, Term::Braid(rest, v), Unit()),
              Place(Unit(), Term::Braid(a, v), rest)});
}

// c_{a,b⊗V} = (id_b ⊗ c_{a,V}) ∘ (c_{a,b} ⊗ id_V)
std::optional<Term> HexagonRight(const Term& t, Ctx&) {
  if (t.kind() != Kind::kBraid || t.object().size() != 1 ||
      t.object2().size() < 2) {
    return {};
  }
  const ObjectExpr& u = t.object();
  const ObjectExpr& v = t.object2();
  ObjectExpr b = v.slice(0, 1), rest = v.slice(1, v.size());
  return Seq({Place(Unit(), Term::Braid(u, b), rest),
              Place(b, Term::Braid(u, rest), Unit())});
}

// c⁻¹_{a⊗U,V} = (id_a ⊗ c⁻¹_{U,V}) ∘ (c⁻¹_{a,V} ⊗ id_U)
std::optional<Term> HexagonInvLeft(const Term& t, Ctx&) {
  if (t.kind() != Kind::kBraidInv || t.object().size() < 2 ||
      t.object2().is_unit()) {
    return {};
  }
  const ObjectExpr& u = t.object();
  const ObjectExpr& v = t.object2();
  ObjectExpr a = u.slice(0, 1), rest = u.slice(1, u.size());
  return Seq({Place(Unit(), Term::BraidInv(a, v), rest),
              Place(a, Term::BraidInv(rest, v), Unit())});
}

// c⁻¹_{a,b⊗V} = (c⁻¹_{a,b} ⊗ id_V) ∘ (id_b ⊗ c⁻¹_{a,V})
std::optional<Term> HexagonInvRight(const Term& t, Ctx&) {
  if (t.kind() != Kind::kBraidInv || t.object().size() != 1 ||
      t.object2().size() < 2) {
    return {};
  }
  const ObjectExpr& u = t.object();
  const ObjectExpr& v = t.object2();
  ObjectExpr b = v.slice(0, 1), rest = v.slice(1, v.size());
  return Seq({Place(b, Term::BraidInv(u, rest), Unit()),
              Place(Unit(), Term::BraidInv(u, b), rest)});
}

// θ_{a⊗R} = c_{R,a} ∘ c_{a,R} ∘ (θ_a ⊗ θ_R)
std::optional<Term> BalancingTwist(const Term& t, Ctx&) {
  if (t.kind() != Kind::kTwist || t.object().size() < 2) return {};
  const ObjectExpr& x = t.object();
  ObjectExpr a = x.slice(0, 1), r = x.slice(1, x.size());
  return Seq({Term::Tensor(Term::Twist(a), Term::Twist(r)), Term::Braid(a, r),
              Term::Braid(r, a)});
}

// θ⁻¹_{a⊗R} = (θ⁻¹_a ⊗ θ⁻¹_R) ∘ c⁻¹_{a,R} ∘ c⁻¹_{R,a}
std::optional<Term> BalancingTwistInv(const Term& t, Ctx&) {
  if (t.kind() != Kind::kTwistInv || t.object().size() < 2) return {};
  const ObjectExpr& x = t.object();
  ObjectExpr a = x.slice(0, 1), r = x.slice(1, x.size());
  return Seq({Term::BraidInv(r, a), Term::BraidInv(a, r),
              Term::Tensor(Term::TwistInv(a), Term::TwistInv(r))});
}

// Rewrites left-dual markers to right ones inside a single constructor.
std::optional<Term> IdentifyDuals(const Term& t, Ctx& c) {
  if (!c.sig.flavor().identifies_left_duals()) return {};
  auto fix = [&](const ObjectExpr& x) { return c.sig.Canon(x); };
  switch (t.kind()) {
    case Kind::kId:
    case Kind::kBirth:
    case Kind::kDeath:
    case Kind::kLBirth:
    case Kind::kLDeath:
    case Kind::kTwist:
    case Kind::kTwistInv: {
      ObjectExpr x = fix(t.object());
      if (x == t.object()) return {};
      switch (t.kind()) {
        case Kind::kId: return Term::Id(x);
        case Kind::kBirth: return Term::Birth(x);
        case Kind::kDeath: return Term::Death(x);
        case Kind::kLBirth: return Term::LBirth(x);
        case Kind::kLDeath: return Term::LDeath(x);
        case Kind::kTwist: return Term::Twist(x);
        default: return Term::TwistInv(x);
      }
    }
    case Kind::kBraid:
    case Kind::kBraidInv: {
      ObjectExpr u = fix(t.object()), v = fix(t.object2());
      if (u == t.object() && v == t.object2()) return {};
      return t.kind() == Kind::kBraid ? Term::Braid(u, v)
                                      : Term::BraidInv(u, v);
    }
    default:
      return {};
  }
}

std::optional<Term> Layering(const Term& t, Ctx& c) {
  Term out = FromDiagram(ToDiagram(t, c.typer));
  if (out == t) return {};
  return out;
}

// ---------------------------------------------------------------------------
// Diagram rules

Layer MakeLayer(Ctx& c, const Term& box, std::size_t offset) {
  Boundary b = c.typer.Type(box);
  return Layer{offset, box, b.dom, b.cod};
}

Diagram Splice(const Diagram& d, std::size_t i, std::size_t count,
               std::vector<Layer> repl) {
  Diagram out;
  out.dom = d.dom;
  out.layers.assign(d.layers.begin(), d.layers.begin() + i);
  for (Layer& l : repl) out.layers.push_back(std::move(l));
  out.layers.insert(out.layers.end(), d.layers.begin() + i + count,
                    d.layers.end());
  return out;
}

bool Fits(const Diagram& d, std::size_t i, std::size_t count) {
  return i + count <= d.layers.size();
}

bool Is(const Layer& l, Kind k) { return l.box.kind() == k; }

bool Same(Ctx& c, const ObjectExpr& a, const ObjectExpr& b) {
  return c.sig.Canon(a) == c.sig.Canon(b);
}

std::optional<Diagram> InterchangeRule(const Diagram& d, std::size_t i,
                                       Ctx&) {
  if (!Fits(d, i, 2)) return {};
  Side side = Relation(d.layers[i], d.layers[i + 1]);
  if (side == Side::kDependent) return {};
  return Splice(d, i, 2, Interchange(d.layers[i], d.layers[i + 1], side));
}

// A pair of mutually inverse boxes at the same offset.
std::optional<Diagram> InversePair(const Diagram& d, std::size_t i, Ctx& c,
                                   Kind fwd, Kind inv) {
  if (!Fits(d, i, 2)) return {};
  const Layer& a = d.layers[i];
  const Layer& b = d.layers[i + 1];
  if (a.offset != b.offset) return {};
  bool kinds = (Is(a, fwd) && Is(b, inv)) || (Is(a, inv) && Is(b, fwd));
  if (!kinds || !Same(c, a.box.object(), b.box.object())) return {};
  if ((fwd == Kind::kBraid) &&
      !Same(c, a.box.object2(), b.box.object2())) {
    return {};
  }
  return Splice(d, i, 2, {});
}

// (id ⊗ cap)(cup ⊗ id) and (cap ⊗ id)(id ⊗ cup) with matching objects.
std::optional<Diagram> Snake(const Diagram& d, std::size_t i, Ctx& c,
                             Kind cup, Kind cap) {
  if (!Fits(d, i, 2)) return {};
  const Layer& a = d.layers[i];
  const Layer& b = d.layers[i + 1];
  if (!Is(a, cup) || !Is(b, cap) || !Same(c, a.box.object(), b.box.object())) {
    return {};
  }
  std::size_t n = c.sig.Canon(a.box.object()).size();
  if (b.offset == a.offset + n || a.offset == b.offset + n) {
    return Splice(d, i, 2, {});
  }
  return {};
}

// Snakes for the left duality β = c⁻¹_{X*,X} ∘ b_X, δ = d_X ∘ c_{X,X*}.
std::optional<Diagram> BraidedSnake(const Diagram& d, std::size_t i, Ctx& c) {
  if (!Fits(d, i, 4)) return {};
  const Layer& b = d.layers[i];
  const Layer& ci = d.layers[i + 1];
  const Layer& cf = d.layers[i + 2];
  const Layer& e = d.layers[i + 3];
  if (!Is(b, Kind::kBirth) || !Is(ci, Kind::kBraidInv) ||
      !Is(cf, Kind::kBraid) || !Is(e, Kind::kDeath)) {
    return {};
  }
  ObjectExpr x = c.sig.Canon(b.box.object());
  ObjectExpr xs = c.sig.Canon(Dual(x));
  if (!Same(c, e.box.object(), x) || !Same(c, ci.box.object(), xs) ||
      !Same(c, ci.box.object2(), x) || !Same(c, cf.box.object(), x) ||
      !Same(c, cf.box.object2(), xs)) {
    return {};
  }
  std::size_t n = x.size();
  bool forward = ci.offset == b.offset && cf.offset == b.offset + n &&
                 e.offset == cf.offset;
  bool mirror = b.offset == cf.offset + n && ci.offset == b.offset &&
                e.offset == cf.offset;
  if (!forward && !mirror) return {};
  return Splice(d, i, 4, {});
}

// (d_X ⊗ id)(id ⊗ θ_X ⊗ id)(id ⊗ b_X) = θ_{X*}
std::optional<Diagram> RibbonDualTwist(const Diagram& d, std::size_t i,
                                       Ctx& c) {
  if (!Fits(d, i, 3)) return {};
  const Layer& b = d.layers[i];
  const Layer& t = d.layers[i + 1];
  const Layer& e = d.layers[i + 2];
  if (!Is(b, Kind::kBirth) || !Is(e, Kind::kDeath)) return {};
  if (!Is(t, Kind::kTwist) && !Is(t, Kind::kTwistInv)) return {};
  ObjectExpr x = c.sig.Canon(b.box.object());
  if (!Same(c, t.box.object(), x) || !Same(c, e.box.object(), x)) return {};
  std::size_t n = x.size();
  if (t.offset != b.offset || b.offset != e.offset + n) return {};
  ObjectExpr xs = c.sig.Canon(Dual(x));
  Term box = Is(t, Kind::kTwist) ? Term::Twist(xs) : Term::TwistInv(xs);
  return Splice(d, i, 3, {MakeLayer(c, box, e.offset)});
}

bool UnaryGen(const Layer& l) {
  if (l.in() != 1 || l.out() != 1) return false;
  if (Is(l, Kind::kGen)) return true;
  return Is(l, Kind::kDagger) && l.box.lhs().kind() == Kind::kGen;
}

bool UnaryTwist(const Layer& l) {
  return (Is(l, Kind::kTwist) || Is(l, Kind::kTwistInv)) && l.in() == 1;
}

Term Rebraid(Kind k, const ObjectExpr& u, const ObjectExpr& v) {
  return k == Kind::kBraid ? Term::Braid(u, v) : Term::BraidInv(u, v);
}

// A unary box after a crossing moves before it.
std::optional<Diagram> SlideBelowCrossing(const Diagram& d, std::size_t i,
                                          Ctx& c, Kind k) {
  if (!Fits(d, i, 2)) return {};
  const Layer& x = d.layers[i];
  const Layer& s = d.layers[i + 1];
  if (!Is(x, k) || x.in() != 2) return {};
  if (!UnaryGen(s) && !UnaryTwist(s)) return {};
  const std::size_t p = x.offset;
  ObjectExpr u = c.sig.Canon(x.box.object());
  ObjectExpr v = c.sig.Canon(x.box.object2());
  // Braid(u,v): u⊗v → v⊗u; BraidInv(u,v): v⊗u → u⊗v.
  const bool braid = k == Kind::kBraid;
  if (s.offset == p) {
    // Acts on the first output wire: v for Braid, u for BraidInv.
    Term nb = braid ? Rebraid(k, u, s.cod) : Rebraid(k, s.cod, v);
    Layer moved = s;
    moved.offset = p + 1;
    return Splice(d, i, 2, {moved, MakeLayer(c, nb, p)});
  }
  if (s.offset == p + 1) {
    Term nb = braid ? Rebraid(k, s.cod, v) : Rebraid(k, u, s.cod);
    Layer moved = s;
    moved.offset = p;
    return Splice(d, i, 2, {moved, MakeLayer(c, nb, p)});
  }
  return {};
}

// A unary generator after a twist moves before it.
std::optional<Diagram> SlideBelowTwist(const Diagram& d, std::size_t i,
                                       Ctx& c) {
  if (!Fits(d, i, 2)) return {};
  const Layer& t = d.layers[i];
  const Layer& s = d.layers[i + 1];
  if (!UnaryTwist(t) || !UnaryGen(s) || s.offset != t.offset) return {};
  Term nt = Is(t, Kind::kTwist) ? Term::Twist(s.cod) : Term::TwistInv(s.cod);
  Layer moved = s;
  return Splice(d, i, 2, {moved, MakeLayer(c, nt, t.offset)});
}

// The converse slide: a unary generator before a crossing moves after it.
std::optional<Diagram> SlideAboveBraid(const Diagram& d, std::size_t i,
                                       Ctx& c) {
  if (!Fits(d, i, 2)) return {};
  const Layer& s = d.layers[i];
  const Layer& x = d.layers[i + 1];
  if (!UnaryGen(s) || !Is(x, Kind::kBraid) || x.in() != 2) return {};
  const std::size_t p = x.offset;
  ObjectExpr u = c.sig.Canon(x.box.object());
  ObjectExpr v = c.sig.Canon(x.box.object2());
  Layer moved = s;
  if (s.offset == p) {
    moved.offset = p + 1;
    return Splice(d, i, 2, {MakeLayer(c, Term::Braid(s.dom, v), p), moved});
  }
  if (s.offset == p + 1) {
    moved.offset = p;
    return Splice(d, i, 2, {MakeLayer(c, Term::Braid(u, s.dom), p), moved});
  }
  return {};
}

// ---------------------------------------------------------------------------
// Samplers

using Sampler = TermSampler;

std::optional<RuleInstance> AtRoot(Term t) {
  return RuleInstance{std::move(t), Position{RuleSpace::kTerm, {}}};
}

// Builds the layered term for boxes placed at offsets within `core`,
// padded with random context wires, and points at layer `index`.
std::optional<RuleInstance> Layered(
    Sampler& s, const ObjectExpr& core,
    const std::vector<std::pair<Term, std::size_t>>& boxes,
    std::size_t index) {
  ObjectExpr left = s.RandomWord(0, 1);
  ObjectExpr right = s.RandomWord(0, 1);
  Diagram d;
  d.dom = Tensor({left, core, right});
  for (const auto& [box, offset] : boxes) {
    Boundary b = s.Type(box);
    d.layers.push_back(Layer{offset + left.size(), box, b.dom, b.cod});
  }
  Term t = FromDiagram(d);
  s.Type(t);
  return RuleInstance{t, Position{RuleSpace::kLayer, {static_cast<int>(index)}}};
}

ObjectExpr Canon(Sampler& s, const ObjectExpr& x) {
  return s.signature().Canon(x);
}

Term PickTerm(Sampler& s, const std::vector<Term>& v) {
  return v[s.Uniform(0, static_cast<int>(v.size()) - 1)];
}

SampleFn Simple(std::function<std::optional<Term>(Sampler&)> make) {
  return [make](const Signature& sig,
                std::mt19937_64& rng) -> std::optional<RuleInstance> {
    Sampler s(sig, rng);
    if (s.alphabet().empty()) return {};
    auto t = make(s);
    if (!t) return {};
    return AtRoot(*t);
  };
}

SampleFn LayerSample(
    std::function<std::optional<RuleInstance>(Sampler&)> make) {
  return [make](const Signature& sig,
                std::mt19937_64& rng) -> std::optional<RuleInstance> {
    Sampler s(sig, rng);
    if (s.alphabet().empty()) return {};
    return make(s);
  };
}

std::optional<RuleInstance> SampleInterchange(Sampler& s) {
  for (int attempt = 0; attempt < 50; ++attempt) {
    Term a = s.AtomicBox();
    Term b = s.AtomicBox();
    if (!a.valid() || !b.valid()) return {};
    Boundary ba = s.Type(a), bb = s.Type(b);
    Layer la{0, a, ba.dom, ba.cod};
    Layer lb{ba.cod.size(), b, bb.dom, bb.cod};
    if (Relation(la, lb) == Side::kDependent) continue;
    return Layered(s, Tensor(ba.dom, bb.dom), {{a, 0}, {b, ba.cod.size()}}, 0);
  }
  return {};
}

std::optional<RuleInstance> SampleSnake(Sampler& s, Kind cup, Kind cap) {
  ObjectExpr x = s.RandomWord(1, 2);
  std::size_t n = x.size();
  Term bc = cup == Kind::kBirth ? Term::Birth(x) : Term::LBirth(x);
  Term dc = cap == Kind::kDeath ? Term::Death(x) : Term::LDeath(x);
  ObjectExpr dual = Canon(s, cup == Kind::kBirth ? Dual(x) : LeftDual(x));
  if (s.Coin()) {
    // Right duality: input X; left duality: input X∨.
    ObjectExpr in = cup == Kind::kBirth ? Canon(s, x) : dual;
    return Layered(s, in, {{bc, 0}, {dc, n}}, 0);
  }
  ObjectExpr in = cup == Kind::kBirth ? dual : Canon(s, x);
  return Layered(s, in, {{bc, n}, {dc, 0}}, 0);
}

std::optional<RuleInstance> SampleBraidedSnake(Sampler& s) {
  ObjectExpr x = Canon(s, s.RandomWord(1, 2));
  ObjectExpr xs = Canon(s, Dual(x));
  std::size_t n = x.size();
  Term b = Term::Birth(x), e = Term::Death(x);
  Term ci = Term::BraidInv(xs, x), cf = Term::Braid(x, xs);
  if (s.Coin()) return Layered(s, xs, {{b, 0}, {ci, 0}, {cf, n}, {e, n}}, 0);
  return Layered(s, x, {{b, n}, {ci, n}, {cf, 0}, {e, 0}}, 0);
}

std::optional<RuleInstance> SampleInverse(Sampler& s, Kind fwd) {
  bool first_fwd = s.Coin();
  if (fwd == Kind::kBraid) {
    ObjectExpr u = s.RandomAtomWord(), v = s.RandomAtomWord();
    Term f = Term::Braid(u, v), g = Term::BraidInv(u, v);
    Term first = first_fwd ? f : g;
    Term second = first_fwd ? g : f;
    return Layered(s, s.Type(first).dom, {{first, 0}, {second, 0}}, 0);
  }
  ObjectExpr a = s.RandomAtomWord();
  Term f = Term::Twist(a), g = Term::TwistInv(a);
  Term first = first_fwd ? f : g;
  Term second = first_fwd ? g : f;
  return Layered(s, Canon(s, a), {{first, 0}, {second, 0}}, 0);
}

std::optional<RuleInstance> SampleRibbon(Sampler& s) {
  ObjectExpr x = Canon(s, s.RandomAtomWord());
  Term t = s.Coin() ? Term::Twist(x) : Term::TwistInv(x);
  return Layered(s, Canon(s, Dual(x)),
                 {{Term::Birth(x), 1}, {t, 1}, {Term::Death(x), 0}}, 0);
}

// A unary box usable in a slide: a generator, or a twist when allowed.
Term UnaryBox(Sampler& s, bool allow_twist) {
  std::vector<Term> boxes = s.UnaryBoxes();
  if (allow_twist && s.signature().flavor().balanced &&
      (boxes.empty() || s.Coin())) {
    ObjectExpr a = s.RandomAtomWord();
    return s.Coin() ? Term::Twist(a) : Term::TwistInv(a);
  }
  if (boxes.empty()) return Term();
  return PickTerm(s, boxes);
}

std::optional<RuleInstance> SampleSlideCrossing(Sampler& s, Kind k) {
  Term box = UnaryBox(s, true);
  if (!box.valid()) return {};
  Boundary bb = s.Type(box);
  ObjectExpr other = Canon(s, s.RandomAtomWord());
  bool first = s.Coin();
  // Pick the crossing so that `box` acts on its output wire at p (first)
  // or p + 1.
  Term x;
  if (k == Kind::kBraid) {
    x = first ? Term::Braid(other, bb.dom) : Term::Braid(bb.dom, other);
  } else {
    x = first ? Term::BraidInv(bb.dom, other) : Term::BraidInv(other, bb.dom);
  }
  return Layered(s, s.Type(x).dom, {{x, 0}, {box, first ? 0u : 1u}}, 0);
}

std::optional<RuleInstance> SampleSlideTwist(Sampler& s) {
  Term box = UnaryBox(s, false);
  if (!box.valid()) return {};
  Boundary bb = s.Type(box);
  Term t = s.Coin() ? Term::Twist(bb.dom) : Term::TwistInv(bb.dom);
  return Layered(s, bb.dom, {{t, 0}, {box, 0}}, 0);
}

std::optional<RuleInstance> SampleSlideAbove(Sampler& s) {
  Term box = UnaryBox(s, false);
  if (!box.valid()) return {};
  Boundary bb = s.Type(box);
  ObjectExpr other = Canon(s, s.RandomAtomWord());
  if (s.Coin()) {
    return Layered(s, Tensor(bb.dom, other),
                   {{box, 0}, {Term::Braid(bb.cod, other), 0}}, 0);
  }
  return Layered(s, Tensor(other, bb.dom),
                 {{box, 1}, {Term::Braid(other, bb.cod), 0}}, 0);
}

Term RandomUnaryKind(Sampler& s, std::initializer_list<Kind> kinds,
                     const ObjectExpr& x) {
  std::vector<Kind> v(kinds);
  Kind k = v[s.Uniform(0, static_cast<int>(v.size()) - 1)];
  switch (k) {
    case Kind::kBirth: return Term::Birth(x);
    case Kind::kDeath: return Term::Death(x);
    case Kind::kLBirth: return Term::LBirth(x);
    case Kind::kLDeath: return Term::LDeath(x);
    case Kind::kTwist: return Term::Twist(x);
    default: return Term::TwistInv(x);
  }
}

// ---------------------------------------------------------------------------
// Catalog

RuleImpl TermRule(std::string name, Flavor guard, std::string citation,
                  std::string orientation, TermFn fn, SampleFn sample) {
  RuleImpl r;
  r.rule = RewriteRule{std::move(name), guard, RuleSpace::kTerm,
                       std::move(citation), std::move(orientation), true};
  r.phase = Phase::kTerm;
  r.term = std::move(fn);
  r.sample = std::move(sample);
  return r;
}

RuleImpl LayerRule(std::string name, Flavor guard, std::string citation,
                   std::string orientation, LayerFn fn, SampleFn sample,
                   bool normalizing = true) {
  RuleImpl r;
  r.rule = RewriteRule{std::move(name), guard, RuleSpace::kLayer,
                       std::move(citation), std::move(orientation),
                       normalizing};
  r.phase = Phase::kDiagram;
  r.layer = std::move(fn);
  r.sample = std::move(sample);
  return r;
}

std::vector<RuleImpl> BuildRules() {
  std::vector<RuleImpl> rules;
  auto add = [&](RuleImpl r) { rules.push_back(std::move(r)); };

  add(TermRule(
      "dagger.involution", kDagger,
      "A dagger is an involutive identity-on-objects contravariant functor.",
      "(f†)† → f", DaggerInvolution,
      Simple([](Sampler& s) -> std::optional<Term> {
        return Term::Dagger(Term::Dagger(s.Any(2)));
      })));
  add(TermRule(
      "dagger.compose", kDagger, "The dagger is contravariant on composites.",
      "(g∘f)† → f†∘g†", DaggerCompose,
      Simple([](Sampler& s) -> std::optional<Term> {
        Term f = s.Any(1);
        Term g = s.From(s.Type(f).cod, 1);
        return Term::Dagger(Term::Compose(g, f));
      })));
  add(TermRule(
      "dagger.tensor", kDagger,
      "In a dagger monoidal category the dagger is strict monoidal.",
      "(f⊗g)† → f†⊗g†", DaggerTensor,
      Simple([](Sampler& s) -> std::optional<Term> {
        return Term::Dagger(Term::Tensor(s.Any(1), s.Any(1)));
      })));
  add(TermRule(
      "dagger.identity", kDagger, "The dagger fixes identities.",
      "id† → id", DaggerIdentity,
      Simple([](Sampler& s) -> std::optional<Term> {
        return Term::Dagger(Term::Id(s.RandomWord(0, 2)));
      })));
  add(TermRule(
      "dagger.generator", kDagger,
      "A generator declared with an adjoint has that adjoint as its dagger.",
      "f† → g when g is the declared adjoint of f", DaggerGenerator,
      Simple([](Sampler& s) -> std::optional<Term> {
        std::vector<Term> v;
        for (const GeneratorDecl& g : s.signature().generators()) {
          if (g.adjoint) v.push_back(Term::Dagger(Term::Gen(g.name)));
        }
        if (v.empty()) return {};
        return PickTerm(s, v);
      })));
  add(TermRule(
      "dagger.duality", kDaggerRigid,
      "In a dagger rigid category the left duality is the dagger of the "
      "right one.",
      "b† → δ, d† → β, β† → d, δ† → b", DaggerDuality,
      Simple([](Sampler& s) -> std::optional<Term> {
        ObjectExpr x = s.RandomWord(1, 2);
        return Term::Dagger(RandomUnaryKind(
            s, {Kind::kBirth, Kind::kDeath, Kind::kLBirth, Kind::kLDeath}, x));
      })));
  add(TermRule(
      "dagger.braid.unitary", kTypeOneBraid,
      "A type I dagger braiding is unitary.", "c† → c⁻¹, (c⁻¹)† → c",
      DaggerBraidTypeOne,
      Simple([](Sampler& s) -> std::optional<Term> {
        ObjectExpr u = s.RandomWord(1, 2), v = s.RandomWord(1, 2);
        return Term::Dagger(s.Coin() ? Term::Braid(u, v)
                                     : Term::BraidInv(u, v));
      })));
  add(TermRule(
      "dagger.braid.reversal", kTypeTwoBraid,
      "A type II dagger braiding satisfies c_{U,V}† = c_{V,U}.",
      "c_{U,V}† → c_{V,U}, (c⁻¹_{U,V})† → c⁻¹_{V,U}", DaggerBraidTypeTwo,
      Simple([](Sampler& s) -> std::optional<Term> {
        ObjectExpr u = s.RandomWord(1, 2), v = s.RandomWord(1, 2);
        return Term::Dagger(s.Coin() ? Term::Braid(u, v)
                                     : Term::BraidInv(u, v));
      })));
  add(TermRule(
      "dagger.twist.unitary", kTypeOneTwist,
      "A type I dagger twist is unitary.", "θ† → θ⁻¹, (θ⁻¹)† → θ",
      DaggerTwistTypeOne,
      Simple([](Sampler& s) -> std::optional<Term> {
        return Term::Dagger(
            RandomUnaryKind(s, {Kind::kTwist, Kind::kTwistInv},
                            s.RandomWord(1, 2)));
      })));
  add(TermRule(
      "dagger.twist.selfadjoint", kTypeTwoTwist,
      "A type II dagger twist is self-adjoint.", "θ† → θ, (θ⁻¹)† → θ⁻¹",
      DaggerTwistTypeTwo,
      Simple([](Sampler& s) -> std::optional<Term> {
        return Term::Dagger(
            RandomUnaryKind(s, {Kind::kTwist, Kind::kTwistInv},
                            s.RandomWord(1, 2)));
      })));
  add(TermRule(
      "unit.right_duality", kRight,
      "The unit object is its own right dual with identity unit and counit.",
      "b_𝟙 → id_𝟙, d_𝟙 → id_𝟙", UnitRightDuality,
      Simple([](Sampler& s) -> std::optional<Term> {
        return RandomUnaryKind(s, {Kind::kBirth, Kind::kDeath}, Unit());
      })));
  add(TermRule(
      "unit.left_duality", kLeft,
      "The unit object is its own left dual with identity unit and counit.",
      "β_𝟙 → id_𝟙, δ_𝟙 → id_𝟙", UnitLeftDuality,
      Simple([](Sampler& s) -> std::optional<Term> {
        return RandomUnaryKind(s, {Kind::kLBirth, Kind::kLDeath}, Unit());
      })));
  add(TermRule(
      "unit.braid", kBraided,
      "Braiding with the unit object is the identity.",
      "c_{𝟙,V}, c_{V,𝟙} and their inverses → id_V", UnitBraid,
      Simple([](Sampler& s) -> std::optional<Term> {
        ObjectExpr v = s.RandomWord(0, 2);
        ObjectExpr u = Unit();
        if (s.Coin()) std::swap(u, v);
        return s.Coin() ? Term::Braid(u, v) : Term::BraidInv(u, v);
      })));
  add(TermRule(
      "unit.twist", kBalanced, "The twist on the unit object is the identity.",
      "θ_𝟙, θ⁻¹_𝟙 → id_𝟙", UnitTwist,
      Simple([](Sampler& s) -> std::optional<Term> {
        return RandomUnaryKind(s, {Kind::kTwist, Kind::kTwistInv}, Unit());
      })));
  add(TermRule(
      "dual.identify", Need({&Flavor::right_rigid, &Flavor::left_rigid}),
      "A braided, dagger or pivotal right-rigid category has canonical left "
      "duals, identified here with the right duals.",
      "X∨ → X* inside constructor arguments", IdentifyDuals,
      Simple([](Sampler& s) -> std::optional<Term> {
        if (!s.signature().flavor().identifies_left_duals()) return {};
        ObjectExpr x = LeftDual(s.RandomWord(1, 2));
        const Flavor& fl = s.signature().flavor();
        std::vector<Term> v{Term::Id(x), Term::Birth(x), Term::LDeath(x)};
        if (fl.balanced) v.push_back(Term::Twist(x));
        if (fl.braided) v.push_back(Term::Braid(x, s.RandomWord(1, 1)));
        return PickTerm(s, v);
      })));
  add(TermRule(
      "expand.birth", kRight,
      "The unit of a tensor product duality nests the units of the factors.",
      "b_{a⊗R} → (id_a ⊗ b_R ⊗ id_{a*}) ∘ b_a", ExpandBirth,
      Simple([](Sampler& s) -> std::optional<Term> {
        return Term::Birth(s.RandomWord(2, 3));
      })));
  add(TermRule(
      "expand.death", kRight,
      "The counit of a tensor product duality nests the counits of the "
      "factors.",
      "d_{a⊗R} → d_R ∘ (id_{R*} ⊗ d_a ⊗ id_R)", ExpandDeath,
      Simple([](Sampler& s) -> std::optional<Term> {
        return Term::Death(s.RandomWord(2, 3));
      })));
  add(TermRule(
      "expand.lbirth", kLeft,
      "The left unit of a tensor product nests the left units of the "
      "factors, for dagger-induced and tabulated left dualities.",
      "β_{a⊗R} → (id_{R∨} ⊗ β_a ⊗ id_R) ∘ β_R", ExpandLBirth,
      Simple([](Sampler& s) -> std::optional<Term> {
        if (!NestedLeftDuality(s.signature().flavor())) return {};
        return Term::LBirth(s.RandomWord(2, 3));
      })));
  add(TermRule(
      "expand.ldeath", kLeft,
      "The left counit of a tensor product nests the left counits of the "
      "factors, for dagger-induced and tabulated left dualities.",
      "δ_{a⊗R} → δ_a ∘ (id_a ⊗ δ_R ⊗ id_{a∨})", ExpandLDeath,
      Simple([](Sampler& s) -> std::optional<Term> {
        if (!NestedLeftDuality(s.signature().flavor())) return {};
        return Term::LDeath(s.RandomWord(2, 3));
      })));
  add(TermRule(
      "braided.left_duality", kBraidedRigid,
      "Without a dagger, the canonical left rigidity of a braided right-rigid "
      "category is β_X = c⁻¹_{X*,X} ∘ b_X, δ_X = d_X ∘ c_{X,X*}; "
      "matches only in flavors without a dagger.",
      "β_X → c⁻¹_{X*,X} ∘ b_X, δ_X → d_X ∘ c_{X,X*}", UnfoldBraidedLeft,
      Simple([](Sampler& s) -> std::optional<Term> {
        if (s.signature().flavor().dagger) return {};
        return RandomUnaryKind(s, {Kind::kLBirth, Kind::kLDeath},
                               s.RandomWord(1, 2));
      })));
  add(TermRule(
      "hexagon.left", kBraided,
      "Hexagon axiom: braiding a tensor product past an object braids each "
      "factor in turn.",
      "c_{a⊗U,V} → (c_{a,V} ⊗ id_U) ∘ (id_a ⊗ c_{U,V})", HexagonLeft,
      Simple([](Sampler& s) -> std::optional<Term> {
        return Term::Braid(s.RandomWord(2, 3), s.RandomWord(1, 2));
      })));
  add(TermRule(
      "hexagon.right", kBraided,
      "Hexagon axiom: braiding an object past a tensor product braids past "
      "each factor in turn.",
      "c_{a,b⊗V} → (id_b ⊗ c_{a,V}) ∘ (c_{a,b} ⊗ id_V)", HexagonRight,
      Simple([](Sampler& s) -> std::optional<Term> {
        return Term::Braid(s.RandomAtomWord(), s.RandomWord(2, 3));
      })));
  add(TermRule(
      "hexagon.inverse_left", kBraided,
      "Inverse of the left hexagon axiom.",
      "c⁻¹_{a⊗U,V} → (id_a ⊗ c⁻¹_{U,V}) ∘ (c⁻¹_{a,V} ⊗ id_U)", HexagonInvLeft,
      Simple([](Sampler& s) -> std::optional<Term> {
        return Term::BraidInv(s.RandomWord(2, 3), s.RandomWord(1, 2));
      })));
  add(TermRule(
      "hexagon.inverse_right", kBraided,
      "Inverse of the right hexagon axiom.",
      "c⁻¹_{a,b⊗V} → (c⁻¹_{a,b} ⊗ id_V) ∘ (id_b ⊗ c⁻¹_{a,V})",
      HexagonInvRight,
      Simple([](Sampler& s) -> std::optional<Term> {
        return Term::BraidInv(s.RandomAtomWord(), s.RandomWord(2, 3));
      })));
  add(TermRule(
      "balancing.twist", kBalanced,
      "Balancing axiom: the twist of a tensor product is the double "
      "braiding after the twists of the factors.",
      "θ_{a⊗R} → c_{R,a} ∘ c_{a,R} ∘ (θ_a ⊗ θ_R)", BalancingTwist,
      Simple([](Sampler& s) -> std::optional<Term> {
        return Term::Twist(s.RandomWord(2, 3));
      })));
  add(TermRule(
      "balancing.twist_inverse", kBalanced,
      "Inverse of the balancing axiom.",
      "θ⁻¹_{a⊗R} → (θ⁻¹_a ⊗ θ⁻¹_R) ∘ c⁻¹_{a,R} ∘ c⁻¹_{R,a}",
      BalancingTwistInv,
      Simple([](Sampler& s) -> std::optional<Term> {
        return Term::TwistInv(s.RandomWord(2, 3));
      })));

  {
    RuleImpl r = TermRule(
        "structure.layer", kMonoidal,
        "Associativity, unit laws and the interchange law of a strict "
        "monoidal category.",
        "any term → right-nested composite of id ⊗ box ⊗ id layers", Layering,
        Simple([](Sampler& s) -> std::optional<Term> {
          for (int attempt = 0; attempt < 20; ++attempt) {
            Term t = Term::Tensor(s.Any(1), s.Any(1));
            Ctx c(s.signature());
            if (FromDiagram(ToDiagram(t, c.typer)) != t) return t;
          }
          return {};
        }));
    r.phase = Phase::kLayering;
    add(std::move(r));
  }

  add(LayerRule(
      "structure.interchange", kMonoidal,
      "Interchange law: (f ⊗ id) ∘ (id ⊗ g) = (id ⊗ g) ∘ (f ⊗ id).",
      "swap adjacent independent layers; normalization moves cups later, "
      "caps earlier, and otherwise left boxes first",
      InterchangeRule, LayerSample(SampleInterchange)));
  add(LayerRule(
      "inverse.braid", kBraided, "The braiding is invertible.",
      "c⁻¹ ∘ c → id, c ∘ c⁻¹ → id",
      [](const Diagram& d, std::size_t i, Ctx& c) {
        return InversePair(d, i, c, Kind::kBraid, Kind::kBraidInv);
      },
      LayerSample([](Sampler& s) {
        return SampleInverse(s, Kind::kBraid);
      })));
  add(LayerRule(
      "inverse.twist", kBalanced, "The twist is invertible.",
      "θ⁻¹ ∘ θ → id, θ ∘ θ⁻¹ → id",
      [](const Diagram& d, std::size_t i, Ctx& c) {
        return InversePair(d, i, c, Kind::kTwist, Kind::kTwistInv);
      },
      LayerSample([](Sampler& s) {
        return SampleInverse(s, Kind::kTwist);
      })));
  add(LayerRule(
      "snake.right", kRight,
      "Snake equations of a right duality.",
      "(id_X ⊗ d_X)(b_X ⊗ id_X) → id_X, (d_X ⊗ id_{X*})(id_{X*} ⊗ b_X) → "
      "id_{X*}",
      [](const Diagram& d, std::size_t i, Ctx& c) {
        return Snake(d, i, c, Kind::kBirth, Kind::kDeath);
      },
      LayerSample([](Sampler& s) {
        return SampleSnake(s, Kind::kBirth, Kind::kDeath);
      })));
  add(LayerRule(
      "snake.left", kLeft, "Snake equations of a left duality.",
      "(id_{X∨} ⊗ δ_X)(β_X ⊗ id_{X∨}) → id_{X∨}, (δ_X ⊗ id_X)(id_X ⊗ β_X) → "
      "id_X",
      [](const Diagram& d, std::size_t i, Ctx& c) {
        return Snake(d, i, c, Kind::kLBirth, Kind::kLDeath);
      },
      LayerSample([](Sampler& s) {
        return SampleSnake(s, Kind::kLBirth, Kind::kLDeath);
      })));
  add(LayerRule(
      "snake.braided", kBraidedRigid,
      "In a braided right-rigid category c⁻¹_{X*,X} ∘ b_X and d_X ∘ c_{X,X*} "
      "form a left duality; these are its snake equations.",
      "b, c⁻¹, c, d snake with the crossings → id", BraidedSnake,
      LayerSample(SampleBraidedSnake)));
  add(LayerRule(
      "ribbon.dual_twist", kRibbon,
      "Ribbon axiom: the twist of a dual object is the transpose of the "
      "twist.",
      "(θ_X)* → θ_{X*}, (θ⁻¹_X)* → θ⁻¹_{X*}", RibbonDualTwist,
      LayerSample(SampleRibbon)));
  add(LayerRule(
      "naturality.braid", kBraided,
      "Naturality of the braiding.",
      "(id ⊗ f) ∘ c → c ∘ (f ⊗ id) for unary generators and twists",
      [](const Diagram& d, std::size_t i, Ctx& c) {
        return SlideBelowCrossing(d, i, c, Kind::kBraid);
      },
      LayerSample(
          [](Sampler& s) { return SampleSlideCrossing(s, Kind::kBraid); })));
  add(LayerRule(
      "naturality.braid_inverse", kBraided,
      "Naturality of the inverse braiding.",
      "(f ⊗ id) ∘ c⁻¹ → c⁻¹ ∘ (id ⊗ f) for unary generators and twists",
      [](const Diagram& d, std::size_t i, Ctx& c) {
        return SlideBelowCrossing(d, i, c, Kind::kBraidInv);
      },
      LayerSample([](Sampler& s) {
        return SampleSlideCrossing(s, Kind::kBraidInv);
      })));
  add(LayerRule(
      "naturality.twist", kBalanced, "Naturality of the twist.",
      "f ∘ θ → θ ∘ f for unary generators", SlideBelowTwist,
      LayerSample(SampleSlideTwist)));
  add(LayerRule(
      "naturality.braid.up", kBraided,
      "Naturality of the braiding, read in the other direction.",
      "c ∘ (f ⊗ id) → (id ⊗ f) ∘ c for unary generators", SlideAboveBraid,
      LayerSample(SampleSlideAbove), /*normalizing=*/false));
  return rules;
}

}  // namespace

const std::vector<RuleImpl>& Rules() {
  static const std::vector<RuleImpl> rules = BuildRules();
  return rules;
}

const RuleImpl* FindRuleImpl(const std::string& name) {
  for (const RuleImpl& r : Rules()) {
    if (r.rule.name == name) return &r;
  }
  return nullptr;
}

namespace {

int Rank(const Layer& l) {
  if (l.in() == 0 && l.out() > 0) return 2;
  if (l.out() == 0) return 0;
  return 1;
}

}  // namespace

bool ShouldSwap(const Diagram& d, std::size_t i) {
  if (i + 1 >= d.layers.size()) return false;
  const Layer& a = d.layers[i];
  const Layer& b = d.layers[i + 1];
  Side side = Relation(a, b);
  if (side == Side::kDependent) return false;
  int ra = Rank(a), rb = Rank(b);
  if (ra != rb) return ra > rb;
  return side == Side::kLeft;
}

}  // namespace strand::rewrite
