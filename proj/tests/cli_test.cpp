// Copyright 2026 The strand Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>
#include <unistd.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <locale>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "strand/builtins.hpp"
#include "strand/cli.hpp"
#include "strand/derived.hpp"
#include "strand/error.hpp"
#include "strand/model_io.hpp"
#include "strand/rewrite.hpp"
#include "strand/text.hpp"

namespace strand {
namespace {

const ObjectExpr kU = ObjectExpr::Generator("U");
const ObjectExpr kV = ObjectExpr::Generator("V");
const ObjectExpr kW = ObjectExpr::Generator("W");

Signature MakeSig(const char* flavor) {
  Signature sig(ParseFlavor(flavor));
  sig.AddObject("U");
  sig.AddObject("V");
  sig.AddObject("W");
  sig.AddGenerator({"f", kV, kV, std::nullopt});
  sig.AddGenerator({"m", Tensor(kV, kW), kV, std::nullopt});
  sig.AddGenerator({"k", kV, Tensor(kU, kV), std::nullopt});
  sig.AddGenerator({"s", Unit(), kW, std::nullopt});
  if (sig.flavor().dagger) {
    sig.AddGenerator({"p", kV, kW, std::string("pa")});
    sig.AddGenerator({"pa", kW, kV, std::string("p")});
  }
  return sig;
}

SourceSpan SpanOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e.span();
  }
  ADD_FAILURE() << "expected a ParseError";
  return {};
}

TEST(Parse, Identity) {
  Signature sig = MakeSig("monoidal");
  EXPECT_EQ(ParseTerm("id(V)", sig), Term::Id(kV));
  EXPECT_EQ(ParseTerm("id(unit)", sig), Term::Id(Unit()));
  EXPECT_EQ(ParseTerm("id(𝟙)", sig), Term::Id(Unit()));
}

TEST(Parse, BirthThenTensorIsTheName) {
  Signature sig = MakeSig("right-rigid");
  Term t = ParseTerm("b(V) ; (f (x) id(dual V))", sig);
  EXPECT_EQ(t, Term::Compose(Term::Tensor(Term::Gen("f"), Term::Id(Dual(kV))),
                             Term::Birth(kV)));
  EXPECT_EQ(t, NameOf(Term::Gen("f"), sig));
  EXPECT_EQ(ParseTerm("name(f)", sig), t);
}

TEST(Parse, UnclosedParenthesisIsReportedWhereItOpens) {
  Signature sig = MakeSig("braided");
  SourceSpan at = SpanOf([&] { ParseTerm("c(U,V", sig); });
  EXPECT_EQ(at.line, 1);
  EXPECT_EQ(at.column, 2);
  try {
    ParseTerm("c(U,V", sig);
  } catch (const ParseError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSyntax);
    EXPECT_NE(std::string(e.what()).find("unclosed"), std::string::npos);
  }
}

TEST(Parse, OperatorsAssociateLeftAndCompositionIsDiagrammatic) {
  Signature sig = MakeSig("monoidal");
  Term f = Term::Gen("f");
  Term a = ParseTerm("f ; id(V) ; f", sig);
  EXPECT_EQ(a, Term::Compose(f, Term::Compose(Term::Id(kV), f)));
  Term b = ParseTerm("f * f ⊗ f", sig);
  EXPECT_EQ(b, Term::Tensor(Term::Tensor(f, f), f));
  Term c = ParseTerm("f * f ; f * f", sig);
  EXPECT_EQ(c, Term::Compose(Term::Tensor(f, f), Term::Tensor(f, f)));
}

TEST(Parse, ObjectsAndDuals) {
  EXPECT_EQ(ParseObject("V ⊗ dual W"), Tensor(kV, Dual(kW)));
  EXPECT_EQ(ParseObject("dual (V (x) W)"), Dual(Tensor(kV, kW)));
  EXPECT_EQ(ParseObject("ldual dual V * unit"), LeftDual(Dual(kV)));
  for (const ObjectExpr& x :
       {Unit(), kV, Tensor(kV, Dual(kW)), LeftDual(Dual(Dual(kV))),
        Tensor({LeftDual(kU), kV, Dual(LeftDual(kW))})}) {
    EXPECT_EQ(ParseObject(PrintObject(x)), x) << PrintObject(x);
  }
}

TEST(Parse, TraceSugar) {
  Signature sig = MakeSig("ribbon");
  Term f = Term::Gen("f");
  EXPECT_EQ(ParseTerm("tr(V; over, f)", sig), QuantumTrace(f, sig));
  EXPECT_EQ(ParseTerm("tr(V; pivotal, f)", sig),
            QuantumTrace(f, sig, TraceStyle::kPivotal));
  Term ff = Term::Tensor(f, f);
  for (auto [word, style] :
       {std::pair{"vanilla", PartialTraceStyle::kVanilla},
        std::pair{"goofyUp", PartialTraceStyle::kGoofyUp},
        std::pair{"goofyDown", PartialTraceStyle::kGoofyDown}}) {
    EXPECT_EQ(ParseTerm(std::string("tr(V; ") + word + ", f * f)", sig),
              PartialTrace(ff, style, kV, kV, kV, sig))
        << word;
  }
}

TEST(Parse, ProgramStatements) {
  Program p = ParseProgram(R"(
    # comment
    flavor ribbon dagger typeI;
    object V, W;   // two objects
    gen f : V -> V;
    gen p : V ⊗ W → W [adjoint q];
    gen q : W -> V (x) W adjoint p;
    term a = f ; f;
    term b = b(V) * id(V) ; id(V) * d(V);
  )");
  EXPECT_TRUE(p.signature.flavor().ribbon);
  EXPECT_EQ(p.signature.objects().size(), 2u);
  ASSERT_EQ(p.terms.size(), 2u);
  EXPECT_EQ(p.terms[0].term, Term::Compose(Term::Gen("f"), Term::Gen("f")));
  EXPECT_EQ(p.terms[1].span.line, 9);
  EXPECT_EQ(Typecheck(p.terms[1].term, p.signature), (Boundary{kV, kV}));
  EXPECT_EQ(*p.signature.find("p")->adjoint, "q");

  Program again = ParseProgram(PrintProgram(p));
  ASSERT_EQ(again.terms.size(), p.terms.size());
  for (std::size_t i = 0; i < p.terms.size(); ++i) {
    EXPECT_EQ(again.terms[i].term, p.terms[i].term);
  }
  EXPECT_EQ(again.signature.flavor(), p.signature.flavor());
  EXPECT_EQ(again.signature.generators(), p.signature.generators());
}

TEST(Parse, DiagnosticsCarrySpans) {
  SourceSpan s = SpanOf([] { ParseProgram("object V;\n  gen f V -> V;"); });
  EXPECT_EQ(s.line, 2);
  EXPECT_EQ(s.column, 9);
  s = SpanOf([] { ParseProgram("object V;\nterm t = id(V) $ id(V);"); });
  EXPECT_EQ(s.line, 2);
  EXPECT_EQ(s.column, 16);
  // Columns count characters, not bytes.
  s = SpanOf([] { ParseProgram("object V;\nterm t = id(𝟙) ⊗ ;"); });
  EXPECT_EQ(s.line, 2);
  EXPECT_EQ(s.column, 18);
  s = SpanOf([] { ParseProgram("flavor ribbon sparkly;"); });
  EXPECT_EQ(s.line, 1);
  s = SpanOf([] { ParseProgram("object V;\nterm t = frob(V);"); });
  EXPECT_EQ(s.column, 10);
  s = SpanOf([] { ParseProgram("object V; term t = id(V)"); });
  EXPECT_EQ(s.column, 25);
  // Semantic errors inside sugar keep their code and gain a span.
  try {
    ParseProgram("object V;\ngen f : V -> V;\nterm t = name(f);");
    FAIL() << "expected an error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kFlavorViolation);
    EXPECT_EQ(e.span().line, 3);
  }
}

// Terms built by the random generator survive print and parse unchanged.
TEST(RoundTrip, ThousandRandomTerms) {
  std::vector<Signature> sigs{MakeSig("typeI-ribbon"), MakeSig("rigid"),
                              MakeSig("typeII-ribbon"),
                              MakeSig("braided dagger")};
  std::mt19937_64 rng(2026);
  int checked = 0;
  for (int i = 0; i < 1000; ++i) {
    const Signature& sig = sigs[i % sigs.size()];
    RandomTermOptions opt;
    opt.depth = 1 + i % 5;
    Term t = RandomTerm(sig, rng, opt);
    std::string text = PrintTerm(t);
    Term back;
    ASSERT_NO_THROW(back = ParseTerm(text, sig)) << text;
    ASSERT_EQ(back, t) << text << "\nreprinted: " << PrintTerm(back);
    ++checked;
  }
  EXPECT_EQ(checked, 1000);
}

struct CommaDecimal : std::numpunct<char> {
  char do_decimal_point() const override { return ','; }
  std::string do_grouping() const override { return "\3"; }
};

TEST(Format, ComplexEntries) {
  EXPECT_EQ(FormatComplex({1.0, 0.0}), "1+0i");
  EXPECT_EQ(FormatComplex({0.5, -0.25}), "0.5-0.25i");
  EXPECT_EQ(FormatComplex({-0.0, -0.0}), "0+0i");
  EXPECT_EQ(FormatComplex({1.0 / 3.0, 2.0}), "0.333333333333+2i");
  EXPECT_EQ(FormatComplex({12345678.5, 0.0}), "12345678.5+0i");
  std::locale old = std::locale::global(
      std::locale(std::locale::classic(), new CommaDecimal));
  EXPECT_EQ(FormatComplex({1234.5, 0.5}), "1234.5+0.5i");
  std::locale::global(old);
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("strand_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string Path(const std::string& name) const {
    return (dir_ / name).string();
  }
  std::string Write(const std::string& name, const std::string& text) const {
    std::ofstream(Path(name)) << text;
    return Path(name);
  }
  int Run(std::vector<std::string> args) {
    out_.str("");
    err_.str("");
    return RunCli(args, out_, err_);
  }

  std::filesystem::path dir_;
  std::ostringstream out_, err_;
};

TEST_F(CliTest, EvalSnakeIsIdentity) {
  ASSERT_EQ(Run({"builtin", "symvect", "--param", "2", "--emit",
                 Path("symvect2.json")}),
            kExitOk)
      << err_.str();
  std::string terms = Write("snake.terms",
                            "flavor right-rigid;\nobject V;\n"
                            "term snake = b(V) * id(V) ; id(V) * d(V);\n");
  ASSERT_EQ(Run({"eval", terms, "--term", "snake", "--model",
                 Path("symvect2.json")}),
            kExitOk)
      << err_.str();
  EXPECT_NE(out_.str().find("1+0i  0+0i\n0+0i  1+0i\n"), std::string::npos)
      << out_.str();
}

TEST_F(CliTest, ValidateSemion) {
  ASSERT_EQ(Run({"builtin", "semion", "--emit", Path("semion.json")}),
            kExitOk);
  EXPECT_EQ(Run({"validate", "--model", Path("semion.json")}), kExitOk);
  EXPECT_NE(out_.str().find("valid for declared flavor"), std::string::npos);
  // Only checks beyond the declared flavor may fail.
  std::istringstream lines(out_.str());
  for (std::string line; std::getline(lines, line);) {
    if (line.find("FAIL") != std::string::npos) {
      EXPECT_NE(line.find("(informational)"), std::string::npos) << line;
    }
  }
}

TEST_F(CliTest, ValidatePerturbedModelFails) {
  SaveModel(PerturbBraid(RMatrix(1.3), "V", "V", 0, 0, 1e-3), Path("bad.json"));
  EXPECT_EQ(Run({"validate", "--model", Path("bad.json")}), kExitFailed);
  EXPECT_NE(out_.str().find("INVALID"), std::string::npos);
}

TEST_F(CliTest, LawsTypeOneOnRMatrixFails) {
  ASSERT_EQ(Run({"builtin", "rmatrix", "--param", "1.3", "--emit",
                 Path("rm13.json")}),
            kExitOk);
  EXPECT_EQ(Run({"laws", "--flavor", "typeI", "--model", Path("rm13.json"),
                 "--samples", "3", "--seed", "7"}),
            kExitFailed);
  EXPECT_NE(out_.str().find("guard-unsatisfied"), std::string::npos);
  EXPECT_NE(out_.str().find("typeI.unitary_braid"), std::string::npos);
}

TEST_F(CliTest, LawsOnSemionPassAndWriteJson) {
  ASSERT_EQ(Run({"builtin", "semion", "--emit", Path("semion.json")}),
            kExitOk);
  EXPECT_EQ(Run({"laws", "--model", Path("semion.json"), "--samples", "5",
                 "--json", Path("laws.json")}),
            kExitOk)
      << out_.str();
  std::ifstream in(Path("laws.json"));
  nlohmann::json j = nlohmann::json::parse(in);
  ASSERT_TRUE(j.is_array());
  EXPECT_GT(j.size(), 20u);
}

TEST_F(CliTest, CheckAndNormalize) {
  std::string terms = Write("t.terms",
                            "flavor right-rigid;\nobject V;\ngen f : V -> V;\n"
                            "term snake = b(V) * id(V) ; id(V) * d(V);\n"
                            "term ok = f ; f;\n");
  EXPECT_EQ(Run({"check", terms}), kExitOk) << err_.str();
  EXPECT_NE(out_.str().find("snake : V → V"), std::string::npos);
  EXPECT_EQ(Run({"normalize", terms, "--term", "snake", "--trace"}), kExitOk);
  EXPECT_EQ(out_.str().rfind("id(V)\n", 0), 0u) << out_.str();
  EXPECT_NE(out_.str().find("snake.right"), std::string::npos);

  std::string bad = Write("bad.terms",
                          "flavor right-rigid;\nobject V;\ngen f : V -> V;\n"
                          "term t = f ; d(V);\n");
  EXPECT_EQ(Run({"check", bad}), kExitFailed);
  EXPECT_NE(err_.str().find(":4:"), std::string::npos) << err_.str();
}

TEST_F(CliTest, UsageAndParseErrorsExitTwo) {
  std::string broken = Write("broken.terms", "object U, V;\nterm x = c(U,V");
  EXPECT_EQ(Run({"check", broken}), kExitUsage);
  EXPECT_NE(err_.str().find("line 2, column 11"), std::string::npos)
      << err_.str();
  EXPECT_EQ(Run({}), kExitUsage);
  EXPECT_EQ(Run({"frobnicate"}), kExitUsage);
  EXPECT_EQ(Run({"check", Path("missing.terms")}), kExitUsage);
  EXPECT_EQ(Run({"builtin", "octonion", "--emit", Path("x.json")}),
            kExitUsage);
  EXPECT_EQ(Run({"laws", "--model", Path("missing.json")}), kExitUsage);
  EXPECT_EQ(Run({"normalize", broken}), kExitUsage);
  EXPECT_EQ(Run({"--help"}), kExitOk);
}

}  // namespace
}  // namespace strand
