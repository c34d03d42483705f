// Copyright 2026 The strand Authors
// SPDX-License-Identifier: Apache-2.0

#include "strand/derived.hpp"

#include "strand/error.hpp"

namespace strand {
namespace {

void Require(bool ok, const char* what, const char* needs) {
  if (!ok) {
    throw Error(ErrorCode::kFlavorViolation,
                std::string(what) + " requires a " + needs + " flavor");
  }
}

Term T(const Term& a, const Term& b) { return Term::Tensor(a, b); }
Term T(const Term& a, const Term& b, const Term& c) {
  return Term::Tensor(Term::Tensor(a, b), c);
}
Term I(const ObjectExpr& x) { return Term::Id(x); }

}  // namespace

Term NameOf(const Term& f, const Signature& sig) {
  Require(sig.flavor().right_rigid, "name_of", "right-rigid");
  Boundary ty = Typecheck(f, sig);
  return Seq({Term::Birth(ty.dom), T(f, I(Dual(ty.dom)))});
}

Term ConameOf(const Term& f, const Signature& sig) {
  Require(sig.flavor().right_rigid, "coname_of", "right-rigid");
  Boundary ty = Typecheck(f, sig);
  return Seq({T(I(Dual(ty.cod)), f), Term::Death(ty.cod)});
}

Term Transpose(const Term& f, const Signature& sig) {
  Require(sig.flavor().right_rigid, "transpose", "right-rigid");
  Boundary ty = Typecheck(f, sig);
  const ObjectExpr& v = ty.dom;
  const ObjectExpr& w = ty.cod;
  return Seq({T(I(Dual(w)), Term::Birth(v)),
              T(I(Dual(w)), f, I(Dual(v))),
              T(Term::Death(w), I(Dual(v)))});
}

std::string_view LeftFamilyName(LeftFamily f) {
  switch (f) {
    case LeftFamily::kPrimitive: return "primitive";
    case LeftFamily::kBraided: return "braided";
    case LeftFamily::kDagger: return "dagger";
    case LeftFamily::kPseudoPivotal: return "pseudo-pivotal";
  }
  return "?";
}

bool LeftFamilyAvailable(LeftFamily family, const Flavor& fl) {
  switch (family) {
    case LeftFamily::kPrimitive: return fl.left_rigid;
    case LeftFamily::kBraided: return fl.braided && fl.right_rigid;
    case LeftFamily::kDagger: return fl.dagger && fl.right_rigid;
    case LeftFamily::kPseudoPivotal: return fl.balanced && fl.right_rigid;
  }
  return false;
}

LeftRigidity LeftRigidityFromBraiding(const ObjectExpr& x,
                                      const Signature& sig) {
  Require(LeftFamilyAvailable(LeftFamily::kBraided, sig.flavor()),
          "left_rigidity_from_braiding", "braided right-rigid");
  ObjectExpr xs = Dual(x);
  return {Seq({Term::Birth(x), Term::BraidInv(xs, x)}),
          Seq({Term::Braid(x, xs), Term::Death(x)})};
}

LeftRigidity LeftRigidityFromDagger(const ObjectExpr& x, const Signature& sig) {
  Require(LeftFamilyAvailable(LeftFamily::kDagger, sig.flavor()),
          "left_rigidity_from_dagger", "dagger right-rigid");
  return {Term::Dagger(Term::Death(x)), Term::Dagger(Term::Birth(x))};
}

LeftRigidity LeftRigidityPseudoPivotal(const ObjectExpr& x,
                                       const Signature& sig) {
  Require(LeftFamilyAvailable(LeftFamily::kPseudoPivotal, sig.flavor()),
          "pseudo-pivotal left rigidity", "balanced right-rigid");
  ObjectExpr xs = Dual(x);
  return {Seq({Term::Birth(xs), T(I(xs), PivInvFromTwist(x, sig))}),
          Seq({T(PivFromTwist(x, sig), I(xs)), Term::Death(xs)})};
}

LeftRigidity LeftRigidityOf(LeftFamily family, const ObjectExpr& x,
                            const Signature& sig) {
  switch (family) {
    case LeftFamily::kPrimitive:
      Require(sig.flavor().left_rigid, "primitive left rigidity",
              "left-rigid");
      return {Term::LBirth(x), Term::LDeath(x)};
    case LeftFamily::kBraided: return LeftRigidityFromBraiding(x, sig);
    case LeftFamily::kDagger: return LeftRigidityFromDagger(x, sig);
    case LeftFamily::kPseudoPivotal: return LeftRigidityPseudoPivotal(x, sig);
  }
  throw Error(ErrorCode::kFlavorViolation, "unknown left rigidity family");
}

Term LeftTranspose(const Term& f, const Signature& sig, LeftFamily family) {
  Boundary ty = Typecheck(f, sig);
  LeftRigidity lv = LeftRigidityOf(family, ty.dom, sig);
  LeftRigidity lw = LeftRigidityOf(family, ty.cod, sig);
  ObjectExpr vl = sig.Canon(LeftDual(ty.dom));
  ObjectExpr wl = sig.Canon(LeftDual(ty.cod));
  return Seq({T(lv.beta, I(wl)), T(I(vl), f, I(wl)), T(I(vl), lw.delta)});
}

Term Psi(const ObjectExpr& x, const Signature& sig) {
  Require(sig.flavor().braided && sig.flavor().right_rigid, "psi",
          "braided right-rigid");
  ObjectExpr xs = Dual(x);
  ObjectExpr xss = Dual(xs);
  return Seq({T(I(xss), Term::Birth(x)), T(Term::Braid(xss, x), I(xs)),
              T(I(x), Term::Death(xs))});
}

Term PsiInv(const ObjectExpr& x, const Signature& sig) {
  Require(sig.flavor().braided && sig.flavor().right_rigid, "psi_inv",
          "braided right-rigid");
  ObjectExpr xs = Dual(x);
  ObjectExpr xss = Dual(xs);
  return Seq({T(I(x), Term::Birth(xs)), T(Term::Braid(x, xs), I(xss)),
              T(Term::Death(x), I(xss))});
}

Term PivFromTwist(const ObjectExpr& x, const Signature& sig) {
  Require(sig.flavor().balanced && sig.flavor().right_rigid, "piv_from_twist",
          "balanced right-rigid");
  return Seq({Term::Twist(x), PsiInv(x, sig)});
}

Term PivInvFromTwist(const ObjectExpr& x, const Signature& sig) {
  Require(sig.flavor().balanced && sig.flavor().right_rigid, "piv inverse",
          "balanced right-rigid");
  return Seq({Psi(x, sig), Term::TwistInv(x)});
}

Term UniquePhi(const ObjectExpr& x, const Signature& sig, LeftFamily from,
               LeftFamily to) {
  const Flavor& fl = sig.flavor();
  if (!LeftFamilyAvailable(from, fl) || !LeftFamilyAvailable(to, fl)) {
    throw Error(ErrorCode::kFlavorViolation,
                "unique_phi needs both the " +
                    std::string(LeftFamilyName(from)) + " and the " +
                    std::string(LeftFamilyName(to)) +
                    " left rigidities to be available");
  }
  LeftRigidity target = LeftRigidityOf(to, x, sig);
  LeftRigidity source = LeftRigidityOf(from, x, sig);
  ObjectExpr xl = sig.Canon(LeftDual(x));
  return Seq({T(target.beta, I(xl)), T(I(xl), source.delta)});
}

Term PMap(const ObjectExpr& x, const Signature& sig) {
  Require(sig.flavor().left_rigid && sig.flavor().right_rigid, "p_V",
          "rigid");
  ObjectExpr xsl = sig.Canon(LeftDual(Dual(x)));
  return Seq({T(Term::LBirth(Dual(x)), I(x)), T(I(xsl), Term::Death(x))});
}

Term PMapInv(const ObjectExpr& x, const Signature& sig) {
  Require(sig.flavor().left_rigid && sig.flavor().right_rigid, "p_V inverse",
          "rigid");
  ObjectExpr xsl = sig.Canon(LeftDual(Dual(x)));
  return Seq({T(Term::Birth(x), I(xsl)), T(I(x), Term::LDeath(Dual(x)))});
}

Term QMap(const ObjectExpr& x, const Signature& sig) {
  Require(sig.flavor().left_rigid && sig.flavor().right_rigid, "q_V",
          "rigid");
  ObjectExpr xl = sig.Canon(LeftDual(x));
  ObjectExpr xls = sig.Canon(Dual(xl));
  return Seq({T(I(x), Term::Birth(xl)), T(Term::LDeath(x), I(xls))});
}

Term QMapInv(const ObjectExpr& x, const Signature& sig) {
  Require(sig.flavor().left_rigid && sig.flavor().right_rigid, "q_V inverse",
          "rigid");
  ObjectExpr xl = sig.Canon(LeftDual(x));
  ObjectExpr xls = sig.Canon(Dual(xl));
  return Seq({T(I(xls), Term::LBirth(x)), T(Term::Death(xl), I(x))});
}

Term ScalarMul(const Term& s, const Term& f, const Signature& sig) {
  Boundary ty = Typecheck(s, sig);
  if (!ty.dom.is_unit() || !ty.cod.is_unit()) {
    throw Error(ErrorCode::kNotAScalar,
                DebugString(s) + " has type " + ToString(ty.dom) + " → " +
                    ToString(ty.cod));
  }
  Typecheck(f, sig);
  return Term::Tensor(s, f);
}

std::string_view TraceStyleName(TraceStyle s) {
  switch (s) {
    case TraceStyle::kOver: return "over";
    case TraceStyle::kUnder: return "under";
    case TraceStyle::kBraided: return "braided";
    case TraceStyle::kPivotal: return "pivotal";
  }
  return "?";
}

Term QuantumTrace(const Term& f, const Signature& sig, TraceStyle style) {
  const Flavor& fl = sig.flavor();
  if (style == TraceStyle::kBraided) {
    Require(fl.braided && fl.right_rigid, "braided quantum trace",
            "braided right-rigid");
  } else {
    Require(fl.balanced && fl.right_rigid, "quantum trace",
            "balanced right-rigid");
  }
  Boundary ty = Typecheck(f, sig);
  if (ty.dom != ty.cod) {
    throw Error(ErrorCode::kNotEndomorphism,
                DebugString(f) + " has type " + ToString(ty.dom) + " → " +
                    ToString(ty.cod));
  }
  const ObjectExpr& v = ty.dom;
  ObjectExpr vs = Dual(v);
  switch (style) {
    case TraceStyle::kOver:
      return Seq({Term::Birth(v), T(Seq({f, Term::Twist(v)}), I(vs)),
                  Term::Braid(v, vs), Term::Death(v)});
    case TraceStyle::kUnder:
      return Seq({Term::Birth(v), T(Seq({f, Term::TwistInv(v)}), I(vs)),
                  Term::BraidInv(vs, v), Term::Death(v)});
    case TraceStyle::kBraided:
      return Seq({Term::Birth(v), T(f, I(vs)), Term::Braid(v, vs),
                  Term::Death(v)});
    case TraceStyle::kPivotal:
      return Seq({Term::Birth(v), T(f, I(vs)), T(PivFromTwist(v, sig), I(vs)),
                  Term::Death(vs)});
  }
  return f;
}

Term QuantumDim(const ObjectExpr& x, const Signature& sig, TraceStyle style) {
  return QuantumTrace(Term::Id(x), sig, style);
}

std::string_view PartialTraceStyleName(PartialTraceStyle s) {
  switch (s) {
    case PartialTraceStyle::kVanilla: return "vanilla";
    case PartialTraceStyle::kGoofyUp: return "goofup";
    case PartialTraceStyle::kGoofyDown: return "goofdn";
  }
  return "?";
}

Term PartialTrace(const Term& f, PartialTraceStyle style, const ObjectExpr& a,
                  const ObjectExpr& b, const ObjectExpr& v,
                  const Signature& sig) {
  Require(sig.flavor().balanced && sig.flavor().right_rigid, "partial_trace",
          "balanced right-rigid");
  Boundary ty = Typecheck(f, sig);
  ObjectExpr av = sig.Canon(Tensor(a, v));
  ObjectExpr bv = sig.Canon(Tensor(b, v));
  if (ty.dom != av || ty.cod != bv) {
    throw Error(ErrorCode::kBoundaryMismatch,
                DebugString(f) + " has type " + ToString(ty.dom) + " → " +
                    ToString(ty.cod) + ", expected " + ToString(av) + " → " +
                    ToString(bv));
  }
  ObjectExpr vs = Dual(v);
  Term open = T(I(a), Term::Birth(v));
  Term body = T(f, I(vs));
  Term close_crossing = T(I(b), Term::Braid(v, vs));
  Term close = T(I(b), Term::Death(v));
  switch (style) {
    case PartialTraceStyle::kVanilla:
      return Seq({open, body, close_crossing,
                  T(I(b), Term::Twist(vs), I(v)), close});
    case PartialTraceStyle::kGoofyUp:
      return Seq({open, body, T(I(b), Term::Twist(v), I(vs)), close_crossing,
                  close});
    case PartialTraceStyle::kGoofyDown:
      return Seq({open, T(I(a), Term::Twist(v), I(vs)), body, close_crossing,
                  close});
  }
  return f;
}

namespace {

Term Push(const Term& t, bool daggered, const Signature& sig) {
  const Flavor& fl = sig.flavor();
  auto needs_type = [&fl](const Term& x) {
    if (fl.dagger_type == DaggerType::kNone) {
      throw Error(ErrorCode::kFlavorViolation,
                  "daggered " + std::string(KindName(x.kind())) +
                      " needs a dagger type");
    }
  };
  if (t.kind() == Kind::kDagger) return Push(t.lhs(), !daggered, sig);
  if (!daggered) {
    switch (t.kind()) {
      case Kind::kCompose:
        return Term::Compose(Push(t.lhs(), false, sig),
                             Push(t.rhs(), false, sig));
      case Kind::kTensor:
        return Term::Tensor(Push(t.lhs(), false, sig),
                            Push(t.rhs(), false, sig));
      default:
        return t;
    }
  }
  bool one = fl.dagger_type == DaggerType::kI;
  switch (t.kind()) {
    case Kind::kId: return t;
    case Kind::kGen: {
      const GeneratorDecl* d = sig.find(t.name());
      if (d && d->adjoint) return Term::Gen(*d->adjoint);
      return Term::Dagger(t);
    }
    case Kind::kCompose:
      return Term::Compose(Push(t.rhs(), true, sig), Push(t.lhs(), true, sig));
    case Kind::kTensor:
      return Term::Tensor(Push(t.lhs(), true, sig), Push(t.rhs(), true, sig));
    case Kind::kBirth: return Term::LDeath(t.object());
    case Kind::kDeath: return Term::LBirth(t.object());
    case Kind::kLBirth: return Term::Death(t.object());
    case Kind::kLDeath: return Term::Birth(t.object());
    case Kind::kBraid:
      needs_type(t);
      return one ? Term::BraidInv(t.object(), t.object2())
                 : Term::Braid(t.object2(), t.object());
    case Kind::kBraidInv:
      needs_type(t);
      return one ? Term::Braid(t.object(), t.object2())
                 : Term::BraidInv(t.object2(), t.object());
    case Kind::kTwist:
      needs_type(t);
      return one ? Term::TwistInv(t.object()) : t;
    case Kind::kTwistInv:
      needs_type(t);
      return one ? Term::Twist(t.object()) : t;
    case Kind::kDagger: break;
  }
  return t;
}

}  // namespace

Term DaggerPushdown(const Term& t, const Signature& sig) {
  Require(sig.flavor().dagger, "dagger_pushdown", "dagger");
  Typecheck(t, sig);
  return Push(t, false, sig);
}

Term HomBar(const Term& f, const ObjectExpr& u, const Signature& sig) {
  Require(sig.flavor().right_rigid, "Hom isomorphism", "right-rigid");
  Boundary ty = Typecheck(f, sig);
  ObjectExpr v = ty.dom.slice(0, ty.dom.size() - u.size());
  return Seq({T(I(v), Term::Birth(u)), T(f, I(Dual(u)))});
}

Term HomTilde(const Term& g, const ObjectExpr& u, const Signature& sig) {
  Require(sig.flavor().right_rigid, "Hom isomorphism", "right-rigid");
  Boundary ty = Typecheck(g, sig);
  ObjectExpr w = ty.cod.slice(0, ty.cod.size() - u.size());
  return Seq({T(g, I(u)), T(I(w), Term::Death(u))});
}

Term HomBend(const Term& f, const ObjectExpr& u, const Signature& sig) {
  Require(sig.flavor().right_rigid, "Hom isomorphism", "right-rigid");
  Boundary ty = Typecheck(f, sig);
  ObjectExpr w = ty.cod.slice(u.size(), ty.cod.size());
  return Seq({T(I(Dual(u)), f), T(Term::Death(u), I(w))});
}

Term HomUnbend(const Term& g, const ObjectExpr& u, const Signature& sig) {
  Require(sig.flavor().right_rigid, "Hom isomorphism", "right-rigid");
  Boundary ty = Typecheck(g, sig);
  ObjectExpr v = ty.dom.slice(u.size(), ty.dom.size());
  return Seq({T(Term::Birth(u), I(v)), T(I(u), g)});
}

Term HomLeftBar(const Term& f, const ObjectExpr& u, const Signature& sig) {
  Require(sig.flavor().left_rigid, "left Hom isomorphism", "left-rigid");
  Boundary ty = Typecheck(f, sig);
  ObjectExpr w = ty.cod.slice(0, ty.cod.size() - u.size());
  return Seq({T(f, I(sig.Canon(LeftDual(u)))), T(I(w), Term::LDeath(u))});
}

Term HomLeftTilde(const Term& g, const ObjectExpr& u, const Signature& sig) {
  Require(sig.flavor().left_rigid, "left Hom isomorphism", "left-rigid");
  Boundary ty = Typecheck(g, sig);
  ObjectExpr v = ty.dom.slice(0, ty.dom.size() - u.size());
  return Seq({T(I(v), Term::LBirth(u)), T(g, I(u))});
}

Term HomLeftBend(const Term& f, const ObjectExpr& u, const Signature& sig) {
  Require(sig.flavor().left_rigid, "left Hom isomorphism", "left-rigid");
  Boundary ty = Typecheck(f, sig);
  ObjectExpr v = ty.dom.slice(u.size(), ty.dom.size());
  return Seq({T(Term::LBirth(u), I(v)), T(I(sig.Canon(LeftDual(u))), f)});
}

Term HomLeftUnbend(const Term& g, const ObjectExpr& u, const Signature& sig) {
  Require(sig.flavor().left_rigid, "left Hom isomorphism", "left-rigid");
  Boundary ty = Typecheck(g, sig);
  ObjectExpr w = ty.cod.slice(u.size(), ty.cod.size());
  return Seq({T(I(u), g), T(Term::LDeath(u), I(w))});
}

}  // namespace strand
