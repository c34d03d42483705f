// Copyright 2026 The strand Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "strand/builtins.hpp"
#include "strand/derived.hpp"
#include "strand/error.hpp"
#include "strand/model.hpp"
#include "strand/validate.hpp"

namespace strand {
namespace {

const ObjectExpr kV = ObjectExpr::Generator("V");
const ObjectExpr kS = ObjectExpr::Generator("s");

ComplexMatrix RandomMatrix(long rows, long cols, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  ComplexMatrix m(rows, cols);
  for (long i = 0; i < rows; ++i) {
    for (long j = 0; j < cols; ++j) m(i, j) = Complex(unit(rng), unit(rng));
  }
  return m;
}

// Kronecker product by explicit index arithmetic.
ComplexMatrix KronOracle(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (long i = 0; i < a.rows(); ++i)
    for (long j = 0; j < a.cols(); ++j)
      for (long k = 0; k < b.rows(); ++k)
        for (long l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

// A model over V with generators f, g: V → V and m: V ⊗ V → V.
ModelSpec WithRandomGenerators(const ModelSpec& base, const ObjectExpr& x,
                               std::mt19937_64& rng) {
  long n = base.Dim(x);
  GeneratorMap gens;
  gens["f"] = {x, x, RandomMatrix(n, n, rng), std::nullopt, std::nullopt};
  gens["g"] = {x, x, RandomMatrix(n, n, rng), std::nullopt, std::nullopt};
  gens["m"] = {Tensor(x, x), x, RandomMatrix(n, n * n, rng), std::nullopt,
               std::nullopt};
  return base.WithGenerators(gens);
}

std::vector<std::pair<ModelSpec, ObjectExpr>> Presets() {
  return {{SymVect(2), kV},
          {SymVect(3), kV},
          {Semion(), kS},
          {RMatrix(0.7), kV},
          {RMatrix(1.3), kV},
          {RMatrix(std::polar(1.0, std::numbers::pi / 5)), kV}};
}

Term Snake(const ObjectExpr& x) {
  return Seq({Term::Tensor(Term::Birth(x), Term::Id(x)),
              Term::Tensor(Term::Id(x), Term::Death(x))});
}

TEST(Eval, IdentityIsIdentity) {
  ModelSpec m = SymVect(3);
  EXPECT_EQ(Eval(Term::Id(kV), m), ComplexMatrix::Identity(3, 3));
  EXPECT_EQ(Eval(Term::Id(Unit()), m), ComplexMatrix::Identity(1, 1));
}

TEST(Eval, RightSnakesAreIdentities) {
  for (const auto& [model, x] : Presets()) {
    long n = model.Dim(x);
    ComplexMatrix id = ComplexMatrix::Identity(n, n);
    EXPECT_LT(MaxDeviation(Eval(Snake(x), model), id), 1e-10) << model.name();
    ObjectExpr xs = Dual(x);
    Term other = Seq({Term::Tensor(Term::Id(xs), Term::Birth(x)),
                      Term::Tensor(Term::Death(x), Term::Id(xs))});
    EXPECT_LT(MaxDeviation(Eval(other, model), id), 1e-10) << model.name();
  }
}

TEST(Eval, SemionBraidPhaseEqualsTwist) {
  ModelSpec m = Semion();
  Complex c = ModelScalar(Eval(Term::Braid(kS, kS), m));
  Complex theta = ModelScalar(Eval(Term::Twist(kS), m));
  EXPECT_NEAR(std::abs(c - Complex(0, 1)), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(c - theta), 0.0, 1e-12);
}

TEST(Eval, FunctorialAndMonoidal) {
  std::mt19937_64 rng(11);
  for (const auto& [base, x] : Presets()) {
    ModelSpec model = WithRandomGenerators(base, x, rng);
    ComplexMatrix f = model.generators().at("f").matrix;
    ComplexMatrix g = model.generators().at("g").matrix;
    ComplexMatrix mm = model.generators().at("m").matrix;
    Term tf = Term::Gen("f");
    Term tg = Term::Gen("g");
    Term tm = Term::Gen("m");
    EXPECT_LT(MaxDeviation(Eval(Term::Compose(tg, tf), model), g * f), 1e-12);
    EXPECT_LT(MaxDeviation(Eval(Term::Tensor(tf, tg), model), KronOracle(f, g)),
              1e-12);
    ComplexMatrix expect = mm * KronOracle(f, g * mm);
    Term wide2 = Term::Compose(
        tm, Term::Tensor(tf, Term::Compose(tg, tm)));
    EXPECT_LT(MaxDeviation(Eval(wide2, model), expect), 1e-12);
  }
}

TEST(Eval, ApplyTermMatchesEval) {
  std::mt19937_64 rng(5);
  ModelSpec model = WithRandomGenerators(RMatrix(1.3), kV, rng);
  Term t = Seq({Term::Tensor(Term::Gen("f"), Term::Id(kV)),
                Term::Braid(kV, kV), Term::Gen("m"), Term::Twist(kV)});
  ComplexMatrix x = RandomMatrix(4, 3, rng);
  EXPECT_LT(MaxDeviation(ApplyTerm(t, x, model), Eval(t, model) * x), 1e-12);
}

// c_{u,v} as a product of adjacent atom crossings: the last atom of u moves
// across v first.
ComplexMatrix WordBraidOracle(const ModelSpec& m, const ObjectExpr& u,
                              const ObjectExpr& v) {
  std::vector<ObjectExpr> word;
  for (const Atom& a : u.atoms()) word.push_back(ObjectExpr({a}));
  for (const Atom& a : v.atoms()) word.push_back(ObjectExpr({a}));
  long total = m.Dim(Tensor(u, v));
  ComplexMatrix out = ComplexMatrix::Identity(total, total);
  for (std::size_t i = u.size(); i-- > 0;) {
    for (std::size_t k = i; k < i + v.size(); ++k) {
      long left = 1, right = 1;
      for (std::size_t j = 0; j < k; ++j) left *= m.Dim(word[j]);
      for (std::size_t j = k + 2; j < word.size(); ++j) right *= m.Dim(word[j]);
      ComplexMatrix step = KronOracle(
          KronOracle(ComplexMatrix::Identity(left, left),
                     m.Braid(word[k], word[k + 1])),
          ComplexMatrix::Identity(right, right));
      out = step * out;
      std::swap(word[k], word[k + 1]);
    }
  }
  return out;
}

TEST(Eval, WideBraidsAndTwistsMatchDenseMatrices) {
  ModelSpec model = RMatrix(1.3);
  ObjectExpr vs = Dual(kV);
  ObjectExpr u = Tensor({kV, vs, kV});
  ObjectExpr v = Tensor({kV, vs, kV, kV});
  long n = model.Dim(Tensor(u, v));
  ComplexMatrix id = ComplexMatrix::Identity(n, n);
  ComplexMatrix oracle = WordBraidOracle(model, u, v);
  EXPECT_LT(MaxDeviation(model.Braid(u, v), oracle), 1e-10);
  EXPECT_LT(MaxDeviation(ApplyTerm(Term::Braid(u, v), id, model), oracle),
            1e-10);
  EXPECT_LT(MaxDeviation(model.BraidInv(u, v) * oracle, id), 1e-10);
  EXPECT_LT(
      MaxDeviation(ApplyTerm(Term::BraidInv(u, v), oracle, model), id), 1e-10);

  ObjectExpr w = Tensor({kV, vs, kV, kV, vs, kV, kV});
  long k = model.Dim(w);
  ComplexMatrix idw = ComplexMatrix::Identity(k, k);
  const ComplexMatrix& theta = model.Twist(w);
  EXPECT_LT(MaxDeviation(ApplyTerm(Term::Twist(w), idw, model), theta), 1e-9);
  EXPECT_LT(MaxDeviation(ApplyTerm(Term::TwistInv(w), theta, model), idw),
            1e-9);
}

TEST(Eval, UnassignedGeneratorAndFlavorErrors) {
  ModelSpec m = SymVect(2);
  try {
    Eval(Term::Gen("nope"), m);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnassignedGenerator);
  }
  ModelSpec complex_q = RMatrix(std::polar(1.0, 0.3));
  try {
    Eval(Term::Dagger(Term::Id(kV)), complex_q);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kFlavorViolation);
  }
}

TEST(ModelScalar, ExtractsOrRejects) {
  EXPECT_EQ(ModelScalar(Eval(Term::Id(Unit()), SymVect(2))), Complex(1.0));
  try {
    ModelScalar(ComplexMatrix::Identity(2, 2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotScalarShaped);
  }
}

TEST(Derived, SymVectNameConameTransposeAreReshapes) {
  std::mt19937_64 rng(3);
  ModelSpec model = WithRandomGenerators(SymVect(3), kV, rng);
  Signature sig = model.MakeSignature();
  ComplexMatrix f = model.generators().at("f").matrix;
  Term tf = Term::Gen("f");
  // Contract f against the identity pairing by hand.
  ComplexMatrix name(9, 1);
  ComplexMatrix coname(1, 9);
  for (int w = 0; w < 3; ++w) {
    for (int v = 0; v < 3; ++v) {
      name(w * 3 + v, 0) = f(w, v);
      coname(0, w * 3 + v) = f(w, v);
    }
  }
  EXPECT_LT(MaxDeviation(Eval(NameOf(tf, sig), model), name), 1e-12);
  EXPECT_LT(MaxDeviation(Eval(ConameOf(tf, sig), model), coname), 1e-12);
  EXPECT_LT(MaxDeviation(Eval(Transpose(tf, sig), model), f.transpose()),
            1e-12);
}

TEST(Derived, TransposeIsContravariant) {
  std::mt19937_64 rng(4);
  for (const auto& [base, x] : Presets()) {
    ModelSpec model = WithRandomGenerators(base, x, rng);
    Signature sig = model.MakeSignature();
    Term tf = Term::Gen("f");
    Term tg = Term::Gen("g");
    ComplexMatrix lhs = Eval(Transpose(Term::Compose(tg, tf), sig), model);
    ComplexMatrix rhs =
        Eval(Term::Compose(Transpose(tf, sig), Transpose(tg, sig)), model);
    EXPECT_LT(MaxDeviation(lhs, rhs), 1e-10) << model.name();
    long n = model.Dim(x);
    EXPECT_LT(MaxDeviation(Eval(Transpose(Term::Id(x), sig), model),
                           ComplexMatrix::Identity(n, n)),
              1e-10);
  }
}

TEST(Derived, LeftSnakesForEveryFamily) {
  for (const auto& [model, x] : Presets()) {
    Signature sig = model.MakeSignature();
    long n = model.Dim(x);
    for (LeftFamily fam : {LeftFamily::kPrimitive, LeftFamily::kBraided,
                           LeftFamily::kDagger, LeftFamily::kPseudoPivotal}) {
      if (!LeftFamilyAvailable(fam, sig.flavor())) continue;
      LeftRigidity lr = LeftRigidityOf(fam, x, sig);
      ObjectExpr xl = sig.Canon(LeftDual(x));
      Term s1 = Seq({Term::Tensor(lr.beta, Term::Id(xl)),
                     Term::Tensor(Term::Id(xl), lr.delta)});
      Term s2 = Seq({Term::Tensor(Term::Id(x), lr.beta),
                     Term::Tensor(lr.delta, Term::Id(x))});
      ComplexMatrix id = ComplexMatrix::Identity(n, n);
      EXPECT_LT(MaxDeviation(Eval(s1, model), id), 1e-10)
          << model.name() << " " << LeftFamilyName(fam);
      EXPECT_LT(MaxDeviation(Eval(s2, model), id), 1e-10)
          << model.name() << " " << LeftFamilyName(fam);
    }
  }
}

TEST(Derived, SymVectBraidedBetaIsSwappedBirth) {
  ModelSpec model = SymVect(2);
  Signature sig = model.MakeSignature();
  LeftRigidity lr = LeftRigidityFromBraiding(kV, sig);
  ComplexMatrix birth = Eval(Term::Birth(kV), model);
  ComplexMatrix swapped(4, 1);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) swapped(j * 2 + i, 0) = birth(i * 2 + j, 0);
  EXPECT_LT(MaxDeviation(Eval(lr.beta, model), swapped), 1e-12);
}

TEST(Derived, DaggerBetaIsAdjointDeath) {
  ModelSpec model = SymVect(3);
  Signature sig = model.MakeSignature();
  LeftRigidity lr = LeftRigidityFromDagger(kV, sig);
  EXPECT_EQ(lr.beta, Term::Dagger(Term::Death(kV)));
  EXPECT_LT(MaxDeviation(Eval(lr.beta, model),
                         Eval(Term::Death(kV), model).adjoint()),
            1e-12);
}

TEST(Derived, PsiIsInvertible) {
  for (const auto& [model, x] : Presets()) {
    Signature sig = model.MakeSignature();
    long n = model.Dim(x);
    ComplexMatrix id = ComplexMatrix::Identity(n, n);
    EXPECT_LT(MaxDeviation(Eval(Term::Compose(Psi(x, sig), PsiInv(x, sig)),
                                model),
                           id),
              1e-10);
    EXPECT_LT(MaxDeviation(Eval(Term::Compose(PsiInv(x, sig), Psi(x, sig)),
                                model),
                           id),
              1e-10);
    EXPECT_LT(MaxDeviation(Eval(Term::Compose(Psi(x, sig),
                                              PivFromTwist(x, sig)),
                                model),
                           Eval(Term::Twist(x), model)),
              1e-10);
  }
  ModelSpec sym = SymVect(3);
  EXPECT_EQ(Eval(Psi(kV, sym.MakeSignature()), sym),
            ComplexMatrix::Identity(3, 3));
  EXPECT_EQ(Eval(PivFromTwist(kV, sym.MakeSignature()), sym),
            ComplexMatrix::Identity(3, 3));
}

TEST(Derived, SemionPivIsPsiInverseTimesTwistPhase) {
  ModelSpec m = Semion();
  Signature sig = m.MakeSignature();
  Complex piv = ModelScalar(Eval(PivFromTwist(kS, sig), m));
  Complex psi_inv = ModelScalar(Eval(PsiInv(kS, sig), m));
  EXPECT_NEAR(std::abs(piv - psi_inv * Complex(0, 1)), 0.0, 1e-12);
  // ψ⁻¹ bends the crossing c_{s,s*}, the inverse phase of c_{s,s}.
  EXPECT_NEAR(std::abs(psi_inv - Complex(0, -1)), 0.0, 1e-12);
}

TEST(Derived, UniquePhiTriangleInSemion) {
  ModelSpec m = Semion();
  Signature sig = m.MakeSignature();
  Term phi = UniquePhi(kS, sig, LeftFamily::kDagger, LeftFamily::kBraided);
  LeftRigidity dag = LeftRigidityFromDagger(kS, sig);
  LeftRigidity br = LeftRigidityFromBraiding(kS, sig);
  ObjectExpr sl = sig.Canon(LeftDual(kS));
  Term lhs = Seq({dag.beta, Term::Tensor(phi, Term::Id(kS))});
  EXPECT_LT(MaxDeviation(Eval(lhs, m), Eval(br.beta, m)), 1e-10);
  // Hermitian ribbon: φ equals θ on the dual.
  EXPECT_LT(MaxDeviation(Eval(phi, m), Eval(Term::Twist(sl), m)), 1e-10);
}

TEST(Derived, QuantumDimensions) {
  ModelSpec sym = SymVect(3);
  Signature ssig = sym.MakeSignature();
  EXPECT_NEAR(std::abs(ModelScalar(Eval(QuantumDim(kV, ssig), sym)) - 3.0),
              0.0, 1e-12);
  for (Complex q : {Complex(0.7), Complex(1.3),
                    std::polar(1.0, std::numbers::pi / 5)}) {
    ModelSpec m = RMatrix(q);
    Signature sig = m.MakeSignature();
    Complex expect = q + 1.0 / q;
    for (TraceStyle st : {TraceStyle::kOver, TraceStyle::kUnder}) {
      Complex got = ModelScalar(Eval(QuantumDim(kV, sig, st), m));
      EXPECT_NEAR(std::abs(got - expect), 0.0, 1e-10)
          << m.name() << " " << TraceStyleName(st);
    }
  }
}

TEST(Derived, SymVectPartialTraceContractsIndices) {
  std::mt19937_64 rng(8);
  ModelSpec model = WithRandomGenerators(SymVect(2), kV, rng);
  ComplexMatrix h = RandomMatrix(4, 4, rng);
  model = model.WithGenerators(
      {{"h", {Tensor(kV, kV), Tensor(kV, kV), h, std::nullopt, std::nullopt}}});
  Signature sig = model.MakeSignature();
  ComplexMatrix expect = ComplexMatrix::Zero(2, 2);
  for (int b = 0; b < 2; ++b)
    for (int a = 0; a < 2; ++a)
      for (int v = 0; v < 2; ++v) expect(b, a) += h(b * 2 + v, a * 2 + v);
  for (PartialTraceStyle st : {PartialTraceStyle::kVanilla,
                               PartialTraceStyle::kGoofyUp,
                               PartialTraceStyle::kGoofyDown}) {
    Term tr = PartialTrace(Term::Gen("h"), st, kV, kV, kV, sig);
    EXPECT_LT(MaxDeviation(Eval(tr, model), expect), 1e-12)
        << PartialTraceStyleName(st);
  }
}

TEST(Derived, ScalarMultiplicationScales) {
  std::mt19937_64 rng(9);
  ModelSpec model = WithRandomGenerators(SymVect(2), kV, rng);
  Signature sig = model.MakeSignature();
  Term s = QuantumDim(kV, sig);
  ComplexMatrix f = model.generators().at("f").matrix;
  EXPECT_LT(MaxDeviation(Eval(ScalarMul(s, Term::Gen("f"), sig), model),
                         2.0 * f),
            1e-12);
}

TEST(Dagger, EvalMatchesConjugateTransposeAndPushdown) {
  std::mt19937_64 rng(21);
  for (const auto& [base, x] : Presets()) {
    if (!base.flavor().dagger) continue;
    ModelSpec model = WithRandomGenerators(base, x, rng);
    Signature sig = model.MakeSignature();
    std::vector<Term> samples = {
        Term::Gen("f"),
        Seq({Term::Tensor(Term::Gen("f"), Term::Id(x)), Term::Braid(x, x),
             Term::Gen("m"), Term::Twist(x)}),
        Seq({Term::Birth(x), Term::Tensor(Term::Gen("g"), Term::Id(Dual(x))),
             Term::BraidInv(Dual(x), x)}),
        NameOf(Term::Gen("f"), sig),
        Term::Dagger(Seq({Term::Gen("f"), Term::TwistInv(x)})),
    };
    for (const Term& t : samples) {
      ComplexMatrix plain = Eval(t, model);
      ComplexMatrix dag = Eval(Term::Dagger(t), model);
      EXPECT_LT(MaxDeviation(dag, plain.adjoint()), 1e-10) << model.name();
      EXPECT_LT(MaxDeviation(Eval(DaggerPushdown(Term::Dagger(t), sig), model),
                             dag),
                1e-10)
          << model.name() << " " << DebugString(t);
    }
  }
}

TEST(Validate, SymVectIsExact) {
  ValidationReport r = ValidateModel(SymVect(2));
  EXPECT_TRUE(r.ok()) << r.ToText();
  for (const CheckResult& c : r.checks) {
    if (!c.required) continue;
    EXPECT_EQ(c.deviation, 0.0) << c.name;
  }
  EXPECT_TRUE(r.ValidatedFor(ParseFlavor("dagger-compact-closed")));
  EXPECT_TRUE(r.Find("symmetric")->passed);
}

TEST(Validate, PresetsPassDeclaredFlavors) {
  for (const auto& [model, x] : Presets()) {
    ValidationReport r = ValidateModel(model);
    EXPECT_TRUE(r.ok()) << r.ToText();
    EXPECT_TRUE(r.ValidatedFor(model.flavor())) << r.ToText();
  }
  EXPECT_TRUE(ValidateModel(SymVect(4)).ok());
  EXPECT_TRUE(ValidateModel(AbelianAnyon(3, 1)).ok());
}

TEST(Validate, RMatrixIsTypeTwoNotTypeOne) {
  ValidationReport r = ValidateModel(RMatrix(1.3));
  EXPECT_TRUE(r.ValidatedFor(ParseFlavor("typeII-ribbon")));
  EXPECT_FALSE(r.ValidatedFor(ParseFlavor("typeI")));
  EXPECT_FALSE(r.Find("typeI.unitary_braid")->passed);
  for (const char* name : {"hexagon.braid_relation", "snake.right",
                           "balancing", "typeII.braid_adjoint"}) {
    EXPECT_TRUE(r.Find(name)->passed) << name;
  }
}

TEST(Validate, SemionIsTypeOneNotTypeTwo) {
  ValidationReport r = ValidateModel(Semion());
  EXPECT_TRUE(r.ValidatedFor(ParseFlavor("typeI-ribbon")));
  EXPECT_FALSE(r.ValidatedFor(ParseFlavor("typeII")));
}

TEST(Validate, PerturbedBraidingIsCaught) {
  ModelSpec bad = PerturbBraid(RMatrix(1.3), "V", "V", 1, 2, 1e-3);
  ValidationReport r = ValidateModel(bad);
  EXPECT_FALSE(r.ok());
  const CheckResult* hex = r.Find("hexagon.braid_relation");
  ASSERT_NE(hex, nullptr);
  EXPECT_FALSE(hex->passed);
  EXPECT_GE(hex->deviation, 1e-4);
}

TEST(Validate, UnitaryTypeTwoModelsAreSymmetric) {
  for (const auto& [model, x] : Presets()) {
    ValidationReport r = ValidateModel(model);
    bool type_two = r.ValidatedFor(ParseFlavor("typeII"));
    const CheckResult* unitary = r.Find("typeI.unitary_braid");
    if (type_two && unitary && unitary->passed) {
      EXPECT_TRUE(r.Find("symmetric")->passed) << model.name();
    }
  }
}

TEST(NaturalBasis, SemionAndSymVectSpaces) {
  EXPECT_EQ(NaturalBasis(Semion(), kS, kS).size(), 1u);
  EXPECT_TRUE(NaturalBasis(Semion(), kS, Unit()).empty());
  // Endomorphisms of V commuting with the swap and the identity twist.
  EXPECT_EQ(NaturalBasis(SymVect(2), kV, kV).size(), 4u);
  std::mt19937_64 rng(1);
  try {
    RandomMorphism(Semion(), kS, Unit(), rng);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBindingIllTyped);
  }
}

}  // namespace
}  // namespace strand
