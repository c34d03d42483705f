// Copyright 2026 The strand Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>
#include <json.hpp>

#include <random>
#include <set>
#include <string>
#include <vector>

#include "strand/builtins.hpp"
#include "strand/derived.hpp"
#include "strand/error.hpp"
#include "strand/laws.hpp"
#include "strand/model.hpp"

namespace strand {
namespace {

const ObjectExpr kV = ObjectExpr::Generator("V");
const ObjectExpr kS = ObjectExpr::Generator("s");

ComplexMatrix RandomMatrix(long rows, long cols, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  ComplexMatrix m(rows, cols);
  for (long i = 0; i < rows; ++i) {
    for (long j = 0; j < cols; ++j) m(i, j) = Complex(u(rng), u(rng));
  }
  return m;
}

GeneratorData Gen(const ObjectExpr& dom, const ObjectExpr& cod,
                  ComplexMatrix m) {
  return {dom, cod, std::move(m), std::nullopt, std::nullopt};
}

std::vector<const LawReport*> ReportsFor(const std::vector<LawReport>& rs,
                                         const std::string& law) {
  std::vector<const LawReport*> out;
  for (const LawReport& r : rs) {
    if (r.law == law) out.push_back(&r);
  }
  return out;
}

TEST(LawCatalog, NamesAreUniqueAndCited) {
  std::set<std::string> names;
  for (const Law& law : LawCatalog()) {
    EXPECT_TRUE(names.insert(law.name).second) << law.name;
    EXPECT_FALSE(law.citation.location.empty()) << law.name;
    EXPECT_FALSE(law.citation.quote.empty()) << law.name;
    EXPECT_EQ(FindLaw(law.name), &law);
  }
  EXPECT_EQ(FindLaw("no such law"), nullptr);
  for (const char* name :
       {"absorption", "compositionality", "compositional_cut",
        "backward_absorption", "hom_iso.bar_tilde", "braid_twist_trick",
        "partial_trace.goofy_relation", "partial_trace.type_one",
        "partial_trace.type_two", "no_go.unitary_type_two"}) {
    EXPECT_NE(FindLaw(name), nullptr) << name;
  }
}

// Every equation of every law typechecks to one boundary in a model that
// carries all capabilities.
TEST(LawCatalog, EquationsHaveEqualBoundaries) {
  ModelSpec model = SymVect(2);
  std::mt19937_64 rng(3);
  for (const Law& law : LawCatalog()) {
    std::optional<Binding> b = SampleBinding(law, model, rng);
    ASSERT_TRUE(b) << law.name;
    Flavor fl = model.flavor().Union(law.guard);
    ModelSpec bound = model.WithFlavor(fl).WithGenerators(b->generators);
    Signature sig = bound.MakeSignature();
    for (const LawEquation& eq : law.equations(LawContext(sig, *b))) {
      EXPECT_EQ(Typecheck(eq.lhs, sig), Typecheck(eq.rhs, sig))
          << law.name << ": " << eq.label;
    }
  }
}

TEST(RunSuite, SymVectPassesEverything) {
  std::vector<LawReport> rs = RunSuite(
      ParseFlavor("symmetric dagger compact-closed"), SymVect(2), 25, 7);
  SuiteSummary s = Summarize(rs);
  EXPECT_EQ(s.fail, 0) << LawReportsText(rs);
  EXPECT_EQ(s.unknown, 0) << LawReportsText(rs);
  EXPECT_EQ(ReportsFor(rs, "absorption").size(), 25u);
  EXPECT_EQ(ReportsFor(rs, "hom_iso.bar_tilde").size(), 25u);
  // Balanced laws are outside the requested flavor.
  EXPECT_TRUE(ReportsFor(rs, "braid_twist_trick").empty());
}

TEST(RunSuite, EveryPresetPassesItsDeclaredFlavor) {
  for (const ModelSpec& m :
       {SymVect(2), SymVect(3), SymVect(4), Semion(), AbelianAnyon(3, 1),
        RMatrix(0.7), RMatrix(1.3), RMatrix(std::polar(1.0, M_PI / 5))}) {
    std::vector<LawReport> rs = RunSuite(m.flavor(), m, 10, 11);
    SuiteSummary s = Summarize(rs);
    EXPECT_EQ(s.fail, 0) << m.name() << "\n" << LawReportsText(rs);
    EXPECT_EQ(s.unknown, 0) << m.name() << "\n" << LawReportsText(rs);
  }
}

TEST(RunSuite, SemionPassesTypeOneLaws) {
  std::vector<LawReport> rs = RunSuite(ParseFlavor("typeI"), Semion(), 25, 7);
  EXPECT_EQ(Summarize(rs).fail, 0) << LawReportsText(rs);
  for (const char* name :
       {"partial_trace.type_one", "partial_trace.type_one_cyclic",
        "partial_trace.goofy_relation"}) {
    auto got = ReportsFor(rs, name);
    ASSERT_EQ(got.size(), 25u) << name;
    for (const LawReport* r : got) {
      EXPECT_EQ(r->result, LawResult::kPass) << name;
      EXPECT_LT(r->deviation, 1e-10) << name;
    }
  }
}

TEST(RunSuite, RMatrixFailsTypeOneGuard) {
  std::vector<LawReport> rs =
      RunSuite(ParseFlavor("typeI"), RMatrix(1.3), 5, 7);
  auto got = ReportsFor(rs, "partial_trace.type_one");
  ASSERT_EQ(got.size(), 1u);
  EXPECT_EQ(got[0]->result, LawResult::kGuardUnsatisfied);
  EXPECT_NE(got[0]->detail.find("typeI.unitary_braid"), std::string::npos)
      << got[0]->detail;
  EXPECT_GT(Summarize(rs).fail, 0);
  // Laws whose guard the model does validate still run.
  auto absorption = ReportsFor(rs, "absorption");
  ASSERT_EQ(absorption.size(), 5u);
  EXPECT_EQ(absorption[0]->result, LawResult::kPass);
}

TEST(RunSuite, PerturbedBraidingBlocksBraidedLaws) {
  ModelSpec bad = PerturbBraid(RMatrix(1.3), "V", "V", 0, 0, 1e-3);
  std::vector<LawReport> rs = RunSuite(bad.flavor(), bad, 3, 7);
  auto got = ReportsFor(rs, "braid_twist_trick");
  ASSERT_EQ(got.size(), 1u);
  EXPECT_EQ(got[0]->result, LawResult::kGuardUnsatisfied);
  // Laws of the unbraided fragment are unaffected.
  EXPECT_EQ(ReportsFor(rs, "absorption").front()->result, LawResult::kPass);
}

TEST(RunSuite, Deterministic) {
  ModelSpec m = RMatrix(0.7);
  std::string a = LawReportsJson(RunSuite(m.flavor(), m, 4, 5));
  std::string b = LawReportsJson(RunSuite(m.flavor(), m, 4, 5));
  std::string c = LawReportsJson(RunSuite(m.flavor(), m, 4, 6));
  EXPECT_EQ(a, b);
  EXPECT_NE(a, c);
  nlohmann::json j = nlohmann::json::parse(a);
  ASSERT_TRUE(j.is_array());
  ASSERT_FALSE(j.empty());
  for (const char* key : {"law", "binding", "method", "result", "deviation"}) {
    EXPECT_TRUE(j[0].contains(key)) << key;
  }
}

TEST(RunSuite, TextReportEndsWithSummary) {
  ModelSpec m = Semion();
  std::string text = LawReportsText(RunSuite(m.flavor(), m, 2, 1));
  EXPECT_NE(text.find("absorption"), std::string::npos);
  EXPECT_NE(text.find("summary: "), std::string::npos);
}

// Oracle: with B = D = I in SymVect(n), name(h) is the column vector with
// entry h(w, i) at index w·n + i.
TEST(CheckLaw, AbsorptionInSymVectMatchesDirectVectorization) {
  const int n = 2;
  ModelSpec model = SymVect(n);
  std::mt19937_64 rng(21);
  ComplexMatrix f = RandomMatrix(n, n, rng);
  ComplexMatrix g = RandomMatrix(n, n, rng);
  Binding b;
  b.objects = {{"V", kV}, {"W", kV}, {"X", kV}};
  b.generators = {{"f", Gen(kV, kV, f)}, {"g", Gen(kV, kV, g)}};
  LawReport r = CheckLaw(*FindLaw("absorption"), model, b);
  EXPECT_EQ(r.result, LawResult::kPass);
  EXPECT_LT(r.deviation, 1e-12);

  ModelSpec bound = model.WithGenerators(b.generators);
  Signature sig = bound.MakeSignature();
  ComplexMatrix got =
      Eval(NameOf(Term::Compose(Term::Gen("g"), Term::Gen("f")), sig), bound);
  ComplexMatrix gf = g * f;
  ASSERT_EQ(got.rows(), n * n);
  for (int w = 0; w < n; ++w) {
    for (int i = 0; i < n; ++i) {
      EXPECT_LT(std::abs(got(w * n + i, 0) - gf(w, i)), 1e-12);
    }
  }
}

TEST(CheckLaw, BarTildeRoundTripInSemion) {
  ModelSpec model = Semion();
  std::mt19937_64 rng(5);
  ObjectExpr ss = Dual(kS);
  Binding b;
  b.objects = {{"V", kS}, {"U", ss}, {"W", Unit()}};
  b.generators = {
      {"f", Gen(Tensor(kS, ss), Unit(), RandomMatrix(1, 1, rng))},
      {"g", Gen(kS, model.Canon(Dual(ss)), RandomMatrix(1, 1, rng))}};
  LawReport r = CheckLaw(*FindLaw("hom_iso.bar_tilde"), model, b);
  EXPECT_EQ(r.result, LawResult::kPass) << r.detail;
  EXPECT_LT(r.deviation, 1e-10);
  EXPECT_EQ(r.equations, 2);
}

TEST(CheckLaw, TypeTwoVanillaLineInRMatrix) {
  ModelSpec model = RMatrix(1.3);
  std::mt19937_64 rng(9);
  for (int i = 0; i < 20; ++i) {
    std::optional<Binding> b =
        SampleBinding(*FindLaw("partial_trace.type_two"), model, rng);
    ASSERT_TRUE(b);
    LawReport r = CheckLaw(*FindLaw("partial_trace.type_two"), model, *b);
    EXPECT_EQ(r.result, LawResult::kPass) << r.binding << ": " << r.detail;
    EXPECT_LT(r.deviation, 1e-10);
  }
}

TEST(CheckLaw, GoofyRelationIsProvedByRewriting) {
  ModelSpec model = Semion();
  std::mt19937_64 rng(2);
  const Law& law = *FindLaw("partial_trace.goofy_relation");
  std::optional<Binding> b = SampleBinding(law, model, rng);
  ASSERT_TRUE(b);
  LawReport r = CheckLaw(law, model, *b);
  EXPECT_EQ(r.result, LawResult::kPass);
  EXPECT_EQ(r.method, LawMethod::kBoth);
  EXPECT_EQ(r.rewrite_equal, r.equations);
}

TEST(CheckLaw, NoGoIsCheckedOnlyWhenItsHypothesisHolds) {
  const Law& law = *FindLaw("no_go.unitary_type_two");
  std::mt19937_64 rng(4);

  ModelSpec sym = SymVect(2);
  LawReport r = CheckLaw(law, sym, *SampleBinding(law, sym, rng));
  EXPECT_EQ(r.result, LawResult::kPass);
  EXPECT_EQ(r.equations, 1);

  ModelSpec semion = Semion();
  r = CheckLaw(law, semion, *SampleBinding(law, semion, rng));
  EXPECT_EQ(r.result, LawResult::kVacuous);
  EXPECT_NE(r.detail.find("Type II"), std::string::npos);
  // The conclusion is false there: c_{s,s}² = -1.
  ComplexMatrix cc = Eval(
      Seq({Term::Braid(kS, kS), Term::Braid(kS, kS)}), semion);
  EXPECT_NEAR(std::abs(cc(0, 0) + 1.0), 0.0, 1e-12);

  ModelSpec rm = RMatrix(1.3);
  r = CheckLaw(law, rm, *SampleBinding(law, rm, rng));
  EXPECT_EQ(r.result, LawResult::kVacuous);
  EXPECT_NE(r.detail.find("unitary"), std::string::npos);
}

TEST(CheckLaw, GuardUnsatisfied) {
  ModelSpec model = RMatrix(1.3);
  std::mt19937_64 rng(1);
  const Law& law = *FindLaw("partial_trace.type_one");
  std::optional<Binding> b = SampleBinding(law, model, rng);
  ASSERT_TRUE(b);
  try {
    CheckLaw(law, model, *b);
    FAIL() << "expected GuardUnsatisfied";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kGuardUnsatisfied);
  }
}

TEST(CheckLaw, BindingIllTyped) {
  ModelSpec model = SymVect(2);
  const Law& law = *FindLaw("absorption");
  std::mt19937_64 rng(1);
  auto expect_ill_typed = [&](const Binding& b) {
    try {
      CheckLaw(law, model, b);
      ADD_FAILURE() << "expected BindingIllTyped";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kBindingIllTyped);
    }
  };
  Binding missing;
  missing.objects = {{"V", kV}, {"W", kV}, {"X", kV}};
  missing.generators = {{"f", Gen(kV, kV, RandomMatrix(2, 2, rng))}};
  expect_ill_typed(missing);

  Binding wrong_type = missing;
  wrong_type.generators["g"] =
      Gen(Tensor(kV, kV), kV, RandomMatrix(2, 4, rng));
  expect_ill_typed(wrong_type);

  Binding wrong_shape = missing;
  wrong_shape.generators["g"] = Gen(kV, kV, RandomMatrix(3, 3, rng));
  expect_ill_typed(wrong_shape);
}

}  // namespace
}  // namespace strand
