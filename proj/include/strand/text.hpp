// Copyright 2026 The strand Authors
// SPDX-License-Identifier: Apache-2.0

// Textual term language.
//
//   program   := { statement }
//   statement := "object" IDENT { "," IDENT } ";"
//              | "gen" IDENT ":" object "->" object [ "[" ] "adjoint" IDENT [ "]" ] ";"
//              | "gen" IDENT ":" object "->" object ";"
//              | "flavor" WORD { WORD } ";"
//              | "term" IDENT "=" expr ";"
//   object    := factor { ("⊗" | "(x)" | "*") factor }
//   factor    := "unit" | "𝟙" | IDENT | "dual" factor | "ldual" factor
//              | "(" object ")"
//   expr      := tensor { ";" tensor }          composition, left to right
//   tensor    := atom { ("*" | "⊗" | "(x)") atom }
//   atom      := IDENT                            generator
//              | "id(" object ")" | "b(" object ")" | "d(" object ")"
//              | "lb(" object ")" | "ld(" object ")"
//              | "c(" object "," object ")" | "c~(" object "," object ")"
//              | "th(" object ")" | "th~(" object ")"
//              | "dag(" expr ")" | "name(" expr ")" | "coname(" expr ")"
//              | "tr(" object ";" STYLE "," expr ")"
//              | "(" expr ")"
//
// `f ; g` denotes g ∘ f: terms read in the order the morphisms are applied.
// Both operators associate to the left. "→" may replace "->". Builtin names
// are keywords only when followed by "(", so generators may be called b, d,
// c and so on. `#` and `//` start comments.
//
// name, coname and tr are expanded on parsing into core constructors, which
// needs the declarations above them. tr takes a quantum-trace style (over,
// under, braided, pivotal) for an endomorphism of the given object, or a
// partial-trace style (vanilla, goofyUp, goofyDown) for f: A ⊗ V → B ⊗ V,
// tracing out the given V.

#ifndef STRAND_TEXT_HPP_
#define STRAND_TEXT_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "strand/error.hpp"
#include "strand/term.hpp"

namespace strand {

// 1-based position in the source.
struct SourceSpan {
  int line = 1;
  int column = 1;
};

// Error(kSyntax) or a semantic error raised while expanding sugar, with the
// position prefixed to the message as "line L, column C: ".
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, SourceSpan span, const std::string& message);
  SourceSpan span() const { return span_; }

 private:
  SourceSpan span_;
};

struct NamedTerm {
  std::string name;
  Term term;
  SourceSpan span;
};

struct Program {
  Signature signature;
  std::vector<NamedTerm> terms;

  const NamedTerm* Find(const std::string& name) const;
};

Program ParseProgram(std::string_view source);
// A single expression over `sig`.
Term ParseTerm(std::string_view source, const Signature& sig);
ObjectExpr ParseObject(std::string_view source);

std::string PrintObject(const ObjectExpr& x);
// Inverse of ParseTerm on core terms: ParseTerm(PrintTerm(t), sig) == t.
std::string PrintTerm(const Term& t);
std::string PrintProgram(const Program& program);

}  // namespace strand

#endif  // STRAND_TEXT_HPP_
