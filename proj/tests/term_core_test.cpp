// Copyright 2026 The strand Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "strand/derived.hpp"
#include "strand/error.hpp"
#include "strand/term.hpp"

namespace strand {
namespace {

const ObjectExpr kV = ObjectExpr::Generator("V");
const ObjectExpr kW = ObjectExpr::Generator("W");

Signature MakeSig(std::string_view flavor) {
  Signature sig(ParseFlavor(flavor));
  sig.AddObject("V");
  sig.AddObject("W");
  sig.AddGenerator({"f", kV, kW, "fa"});
  sig.AddGenerator({"fa", kW, kV, "f"});
  sig.AddGenerator({"h", kV, kV, "h"});
  return sig;
}

ErrorCode CodeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kInvalidModel;
}

TEST(ObjectExpr, DualReversesAndUnitIsSelfDual) {
  ObjectExpr vw = Tensor(kV, kW);
  ObjectExpr d = Dual(vw);
  ASSERT_EQ(d.size(), 2u);
  EXPECT_EQ(d[0], kW[0].right_dual());
  EXPECT_EQ(d[1], kV[0].right_dual());
  EXPECT_TRUE(Dual(Unit()).is_unit());
  EXPECT_EQ(Tensor({Unit(), kV, Unit()}), kV);
  EXPECT_EQ(ToString(Dual(vw)), "W* ⊗ V*");
}

TEST(ObjectExpr, LeftMarkersIdentifiedOnlyWhenCanonical) {
  ObjectExpr vl = LeftDual(kV);
  EXPECT_NE(vl, Dual(kV));
  EXPECT_EQ(IdentifyLeftDuals(vl), Dual(kV));
  Signature rigid = MakeSig("rigid");
  EXPECT_EQ(rigid.Canon(vl), vl);
  Signature braided = MakeSig("braided-rigid");
  EXPECT_EQ(braided.Canon(vl), Dual(kV));
}

TEST(Flavor, ClosureRules) {
  Flavor ribbon = ParseFlavor("ribbon");
  EXPECT_TRUE(ribbon.balanced);
  EXPECT_TRUE(ribbon.braided);
  EXPECT_TRUE(ribbon.right_rigid);
  EXPECT_TRUE(ribbon.left_rigid);
  Flavor t2 = ParseFlavor("typeII");
  EXPECT_TRUE(t2.dagger);
  EXPECT_TRUE(t2.braided);
  EXPECT_TRUE(t2.Satisfies(ParseFlavor("dagger-rigid")));
  EXPECT_FALSE(t2.Satisfies(ParseFlavor("typeI")));
  EXPECT_TRUE(ParseFlavor("dagger-compact-closed").type_two());
  EXPECT_EQ(CodeOf([] { ParseFlavor("weird"); }), ErrorCode::kSyntax);
}

TEST(Term, HashConsingSharesNodes) {
  Term a = Term::Compose(Term::Gen("f"), Term::Id(kV));
  Term b = Term::Compose(Term::Gen("f"), Term::Id(kV));
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.node(), b.node());
  EXPECT_NE(a, Term::Compose(Term::Gen("f"), Term::Id(kW)));
}

TEST(Typecheck, Identity) {
  Signature sig = MakeSig("monoidal");
  EXPECT_EQ(Typecheck(Term::Id(kV), sig), (Boundary{kV, kV}));
}

TEST(Typecheck, SnakeComposite) {
  Signature sig = MakeSig("right-rigid");
  Term snake = Seq({Term::Tensor(Term::Birth(kV), Term::Id(kV)),
                    Term::Tensor(Term::Id(kV), Term::Death(kV))});
  EXPECT_EQ(Typecheck(snake, sig), (Boundary{kV, kV}));
}

TEST(Typecheck, DeathAfterBirthMismatch) {
  Signature sig = MakeSig("right-rigid");
  try {
    Typecheck(Term::Compose(Term::Death(kV), Term::Birth(kV)), sig);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kCompositionMismatch);
    std::string msg = e.what();
    EXPECT_NE(msg.find("V ⊗ V*"), std::string::npos);
    EXPECT_NE(msg.find("V* ⊗ V"), std::string::npos);
  }
}

TEST(Typecheck, UndeclaredAndUnlicensed) {
  Signature sig = MakeSig("monoidal");
  EXPECT_EQ(CodeOf([&] { Typecheck(Term::Gen("zz"), sig); }),
            ErrorCode::kUndeclaredGenerator);
  EXPECT_EQ(CodeOf([&] { Typecheck(Term::Birth(kV), sig); }),
            ErrorCode::kFlavorViolation);
  EXPECT_EQ(CodeOf([&] { Typecheck(Term::Braid(kV, kW), sig); }),
            ErrorCode::kFlavorViolation);
  EXPECT_EQ(CodeOf([&] { Typecheck(Term::Dagger(Term::Gen("f")), sig); }),
            ErrorCode::kFlavorViolation);
}

TEST(Typecheck, InvariantUnderRebracketing) {
  Signature sig = MakeSig("braided");
  Term f = Term::Gen("f");
  Term h = Term::Gen("h");
  Term left = Term::Tensor(Term::Tensor(f, h), Term::Id(kW));
  Term right = Term::Tensor(f, Term::Tensor(h, Term::Id(kW)));
  EXPECT_EQ(Typecheck(left, sig), Typecheck(right, sig));
  Term c1 = Term::Compose(Term::Compose(h, h), h);
  Term c2 = Term::Compose(h, Term::Compose(h, h));
  EXPECT_EQ(Typecheck(c1, sig), Typecheck(c2, sig));
}

TEST(Signature, AdjointPairingMustBeInvolution) {
  Signature sig(ParseFlavor("dagger"));
  sig.AddObject("V");
  sig.AddGenerator({"a", kV, kV, "b"});
  EXPECT_EQ(CodeOf([&] { sig.AddGenerator({"b", kV, kV, "c"}); }),
            ErrorCode::kBindingIllTyped);
  EXPECT_EQ(CodeOf([&] { sig.AddGenerator({"a", kV, kV, std::nullopt}); }),
            ErrorCode::kBindingIllTyped);
}

TEST(Derived, NameConameTransposeTypes) {
  Signature sig = MakeSig("right-rigid");
  Term f = Term::Gen("f");
  EXPECT_EQ(Typecheck(NameOf(f, sig), sig),
            (Boundary{Unit(), Tensor(kW, Dual(kV))}));
  EXPECT_EQ(Typecheck(ConameOf(f, sig), sig),
            (Boundary{Tensor(Dual(kW), kV), Unit()}));
  EXPECT_EQ(Typecheck(Transpose(f, sig), sig), (Boundary{Dual(kW), Dual(kV)}));
  Signature plain = MakeSig("monoidal");
  EXPECT_EQ(CodeOf([&] { NameOf(f, plain); }), ErrorCode::kFlavorViolation);
}

TEST(Derived, LeftRigidityTypes) {
  Signature sig = MakeSig("braided-rigid");
  LeftRigidity lr = LeftRigidityFromBraiding(kV, sig);
  EXPECT_EQ(Typecheck(lr.beta, sig), (Boundary{Unit(), Tensor(Dual(kV), kV)}));
  EXPECT_EQ(Typecheck(lr.delta, sig), (Boundary{Tensor(kV, Dual(kV)), Unit()}));
  EXPECT_EQ(CodeOf([&] { LeftRigidityFromDagger(kV, sig); }),
            ErrorCode::kFlavorViolation);
  Signature dsig = MakeSig("dagger-rigid");
  LeftRigidity ld = LeftRigidityFromDagger(kV, dsig);
  EXPECT_EQ(ld.beta, Term::Dagger(Term::Death(kV)));
  EXPECT_EQ(ld.delta, Term::Dagger(Term::Birth(kV)));
}

TEST(Derived, PsiPivPhiTypes) {
  Signature sig = MakeSig("ribbon dagger");
  ObjectExpr vss = Dual(Dual(kV));
  EXPECT_EQ(Typecheck(Psi(kV, sig), sig), (Boundary{vss, kV}));
  EXPECT_EQ(Typecheck(PsiInv(kV, sig), sig), (Boundary{kV, vss}));
  EXPECT_EQ(Typecheck(PivFromTwist(kV, sig), sig), (Boundary{kV, vss}));
  EXPECT_EQ(Typecheck(UniquePhi(kV, sig), sig),
            (Boundary{Dual(kV), Dual(kV)}));
  Signature braided = MakeSig("braided-rigid");
  EXPECT_EQ(CodeOf([&] { UniquePhi(kV, braided); }),
            ErrorCode::kFlavorViolation);
}

TEST(Derived, PAndQMaps) {
  Signature sig = MakeSig("rigid");
  ObjectExpr vsl = LeftDual(Dual(kV));
  ObjectExpr vls = Dual(LeftDual(kV));
  EXPECT_EQ(Typecheck(PMap(kV, sig), sig), (Boundary{kV, vsl}));
  EXPECT_EQ(Typecheck(PMapInv(kV, sig), sig), (Boundary{vsl, kV}));
  EXPECT_EQ(Typecheck(QMap(kV, sig), sig), (Boundary{kV, vls}));
  EXPECT_EQ(Typecheck(QMapInv(kV, sig), sig), (Boundary{vls, kV}));
}

TEST(Derived, ScalarMulRejectsNonScalar) {
  Signature sig = MakeSig("right-rigid");
  EXPECT_EQ(CodeOf([&] { ScalarMul(Term::Gen("f"), Term::Gen("h"), sig); }),
            ErrorCode::kNotAScalar);
  Term unit_id = Term::Id(Unit());
  EXPECT_EQ(Typecheck(ScalarMul(unit_id, Term::Gen("f"), sig), sig),
            (Boundary{kV, kW}));
}

TEST(Derived, TracesCheckBoundaries) {
  Signature sig = MakeSig("ribbon");
  EXPECT_EQ(Typecheck(QuantumDim(kV, sig), sig), (Boundary{Unit(), Unit()}));
  EXPECT_EQ(CodeOf([&] { QuantumTrace(Term::Gen("f"), sig); }),
            ErrorCode::kNotEndomorphism);
  Term ft = Term::Tensor(Term::Gen("f"), Term::Id(kV));
  for (PartialTraceStyle st :
       {PartialTraceStyle::kVanilla, PartialTraceStyle::kGoofyUp,
        PartialTraceStyle::kGoofyDown}) {
    EXPECT_EQ(Typecheck(PartialTrace(ft, st, kV, kW, kV, sig), sig),
              (Boundary{kV, kW}));
  }
  EXPECT_EQ(CodeOf([&] {
              PartialTrace(ft, PartialTraceStyle::kVanilla, kV, kV, kV, sig);
            }),
            ErrorCode::kBoundaryMismatch);
  Signature braided = MakeSig("braided-rigid");
  EXPECT_EQ(CodeOf([&] { QuantumDim(kV, braided); }),
            ErrorCode::kFlavorViolation);
}

TEST(DaggerPushdown, Examples) {
  Signature t1 = MakeSig("typeI");
  EXPECT_EQ(DaggerPushdown(Term::Dagger(Term::Birth(kV)), t1),
            Term::LDeath(kV));
  EXPECT_EQ(DaggerPushdown(Term::Dagger(Term::Braid(kV, kW)), t1),
            Term::BraidInv(kV, kW));
  Term f = Term::Gen("f");
  EXPECT_EQ(DaggerPushdown(Term::Dagger(Term::Dagger(f)), t1), f);
  EXPECT_EQ(DaggerPushdown(Term::Dagger(f), t1), Term::Gen("fa"));
  Signature t2 = MakeSig("typeII");
  EXPECT_EQ(DaggerPushdown(Term::Dagger(Term::Braid(kV, kW)), t2),
            Term::Braid(kW, kV));
  EXPECT_EQ(DaggerPushdown(Term::Dagger(Term::Twist(kV)), t2), Term::Twist(kV));
}

TEST(DaggerPushdown, ReversesCompositionAndKeepsBoundary) {
  Signature sig = MakeSig("typeI");
  Term t = Seq({Term::Tensor(Term::Gen("f"), Term::Birth(kV)),
                Term::Tensor(Term::Id(kW), Term::Braid(kV, Dual(kV)))});
  Term pushed = DaggerPushdown(Term::Dagger(t), sig);
  EXPECT_EQ(Typecheck(pushed, sig), Typecheck(Term::Dagger(t), sig));
  std::function<bool(const Term&)> clean = [&](const Term& x) {
    if (x.kind() == Kind::kDagger) return x.lhs().kind() == Kind::kGen;
    if (x.kind() == Kind::kCompose || x.kind() == Kind::kTensor) {
      return clean(x.lhs()) && clean(x.rhs());
    }
    return true;
  };
  EXPECT_TRUE(clean(pushed));
}

TEST(DaggerPushdown, Errors) {
  Signature plain = MakeSig("braided");
  EXPECT_EQ(CodeOf([&] { DaggerPushdown(Term::Id(kV), plain); }),
            ErrorCode::kFlavorViolation);
  Signature untyped = MakeSig("braided dagger");
  EXPECT_EQ(CodeOf([&] {
              DaggerPushdown(Term::Dagger(Term::Braid(kV, kW)), untyped);
            }),
            ErrorCode::kFlavorViolation);
}

}  // namespace
}  // namespace strand
