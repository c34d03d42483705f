// Copyright 2026 The strand Authors
// SPDX-License-Identifier: Apache-2.0

#include "strand/text.hpp"

#include <cctype>
#include <optional>
#include <set>
#include <utility>

#include "strand/derived.hpp"

namespace strand {

namespace {

enum class Tok {
  kIdent,
  kSemi,
  kColon,
  kComma,
  kLParen,
  kRParen,
  kLBracket,
  kRBracket,
  kArrow,
  kTensor,  // ⊗ or (x)
  kStar,
  kEq,
  kUnit,  // 𝟙
  kEnd,
};

struct Token {
  Tok kind;
  std::string text;
  SourceSpan span;
};

std::string Describe(const Token& t) {
  switch (t.kind) {
    case Tok::kIdent: return "'" + t.text + "'";
    case Tok::kEnd: return "end of input";
    default: return "'" + t.text + "'";
  }
}

bool IdentChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
         c == '\'' || c == '~' || c == '.';
}

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> Run() {
    std::vector<Token> out;
    while (true) {
      SkipSpaceAndComments();
      SourceSpan at{line_, col_};
      if (i_ >= src_.size()) {
        out.push_back({Tok::kEnd, "", at});
        return out;
      }
      char c = src_[i_];
      auto single = [&](Tok kind) {
        out.push_back({kind, std::string(1, c), at});
        Advance(1);
      };
      if (Starts("⊗")) {
        out.push_back({Tok::kTensor, "⊗", at});
        Advance(3);
      } else if (Starts("(x)")) {
        out.push_back({Tok::kTensor, "(x)", at});
        Advance(3);
      } else if (Starts("→")) {
        out.push_back({Tok::kArrow, "→", at});
        Advance(3);
      } else if (Starts("->")) {
        out.push_back({Tok::kArrow, "->", at});
        Advance(2);
      } else if (Starts("𝟙")) {
        out.push_back({Tok::kUnit, "𝟙", at});
        Advance(4);
      } else if (c == ';') {
        single(Tok::kSemi);
      } else if (c == ':') {
        single(Tok::kColon);
      } else if (c == ',') {
        single(Tok::kComma);
      } else if (c == '(') {
        single(Tok::kLParen);
      } else if (c == ')') {
        single(Tok::kRParen);
      } else if (c == '[') {
        single(Tok::kLBracket);
      } else if (c == ']') {
        single(Tok::kRBracket);
      } else if (c == '*') {
        single(Tok::kStar);
      } else if (c == '=') {
        single(Tok::kEq);
      } else if (IdentChar(c)) {
        std::size_t start = i_;
        while (i_ < src_.size() &&
               (IdentChar(src_[i_]) ||
                (src_[i_] == '-' && i_ + 1 < src_.size() &&
                 src_[i_ + 1] != '>' && i_ > start))) {
          Advance(1);
        }
        out.push_back(
            {Tok::kIdent, std::string(src_.substr(start, i_ - start)), at});
      } else {
        std::size_t len = 1;
        unsigned char u = static_cast<unsigned char>(c);
        if (u >= 0xF0) len = 4;
        else if (u >= 0xE0) len = 3;
        else if (u >= 0xC0) len = 2;
        throw ParseError(ErrorCode::kSyntax, at,
                         "unexpected character '" +
                             std::string(src_.substr(i_, len)) + "'");
      }
    }
  }

 private:
  bool Starts(std::string_view s) const { return src_.substr(i_, s.size()) == s; }

  // Advances by `bytes` bytes; columns count code points.
  void Advance(std::size_t bytes) {
    for (std::size_t k = 0; k < bytes && i_ < src_.size(); ++k, ++i_) {
      char c = src_[i_];
      if (c == '\n') {
        ++line_;
        col_ = 1;
      } else if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) {
        ++col_;
      }
    }
  }

  void SkipSpaceAndComments() {
    while (i_ < src_.size()) {
      if (std::isspace(static_cast<unsigned char>(src_[i_]))) {
        Advance(1);
      } else if (src_[i_] == '#' || Starts("//")) {
        while (i_ < src_.size() && src_[i_] != '\n') Advance(1);
      } else {
        return;
      }
    }
  }

  std::string_view src_;
  std::size_t i_ = 0;
  int line_ = 1;
  int col_ = 1;
};

const std::set<std::string>& StatementKeywords() {
  static const std::set<std::string> k{"object", "gen", "flavor", "term"};
  return k;
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, Signature* sig)
      : toks_(std::move(tokens)), sig_(sig) {}

  Program ParseProgram() {
    Program p;
    while (Peek().kind != Tok::kEnd) {
      const Token& kw = Expect(Tok::kIdent, "a statement keyword");
      if (kw.text == "object") {
        do {
          const Token& name = ExpectObjectName();
          sig_->AddObject(name.text);
        } while (Accept(Tok::kComma));
        Expect(Tok::kSemi, "';'");
      } else if (kw.text == "gen") {
        ParseGen();
      } else if (kw.text == "flavor") {
        std::string words;
        while (Peek().kind == Tok::kIdent) words += Next().text + " ";
        if (words.empty()) Fail(Peek(), "expected a flavor word");
        const Token& end = Expect(Tok::kSemi, "';'");
        Flavor f;
        try {
          f = ParseFlavor(words);
        } catch (const Error& e) {
          throw ParseError(ErrorCode::kSyntax, kw.span, e.what());
        }
        sig_->set_flavor(sig_->flavor().Union(f));
        (void)end;
      } else if (kw.text == "term") {
        const Token& name = Expect(Tok::kIdent, "a term name");
        Expect(Tok::kEq, "'='");
        Term t = ParseExpr(true);
        Expect(Tok::kSemi, "';'");
        if (p.Find(name.text)) {
          throw ParseError(ErrorCode::kSyntax, name.span,
                           "term '" + name.text + "' defined twice");
        }
        p.terms.push_back({name.text, t, name.span});
      } else {
        Fail(kw, "expected object, gen, flavor or term");
      }
    }
    p.signature = *sig_;
    return p;
  }

  Term ParseSingleExpr() {
    Term t = ParseExpr(false);
    if (Peek().kind != Tok::kEnd) Fail(Peek(), "unexpected trailing input");
    return t;
  }

  ObjectExpr ParseSingleObject() {
    ObjectExpr x = ParseObject();
    if (Peek().kind != Tok::kEnd) Fail(Peek(), "unexpected trailing input");
    return x;
  }

 private:
  const Token& Peek(std::size_t ahead = 0) const {
    std::size_t k = std::min(pos_ + ahead, toks_.size() - 1);
    return toks_[k];
  }
  const Token& Next() {
    const Token& t = toks_[pos_];
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }
  bool Accept(Tok kind) {
    if (Peek().kind != kind) return false;
    Next();
    return true;
  }
  [[noreturn]] void Fail(const Token& at, const std::string& what) const {
    throw ParseError(ErrorCode::kSyntax, at.span,
                     what + ", found " + Describe(at));
  }
  const Token& Expect(Tok kind, const std::string& what) {
    if (Peek().kind != kind) Fail(Peek(), "expected " + what);
    return Next();
  }
  // Reports a missing ')' at the parenthesis it should close.
  void Close(const Token& open) {
    if (Peek().kind == Tok::kRParen) {
      Next();
      return;
    }
    const Token& at = Peek();
    throw ParseError(ErrorCode::kSyntax, open.span,
                     "unclosed '(': expected ')', found " + Describe(at) +
                         " at line " + std::to_string(at.span.line) +
                         ", column " + std::to_string(at.span.column));
  }
  const Token& ExpectObjectName() {
    const Token& t = Expect(Tok::kIdent, "an object name");
    if (t.text == "unit" || t.text == "dual" || t.text == "ldual") {
      Fail(t, "expected an object name");
    }
    return t;
  }

  void ParseGen() {
    const Token& name = Expect(Tok::kIdent, "a generator name");
    Expect(Tok::kColon, "':'");
    ObjectExpr dom = ParseObject();
    Expect(Tok::kArrow, "'->'");
    ObjectExpr cod = ParseObject();
    std::optional<std::string> adjoint;
    bool bracket = Accept(Tok::kLBracket);
    if (bracket || (Peek().kind == Tok::kIdent && Peek().text == "adjoint")) {
      const Token& kw = Expect(Tok::kIdent, "'adjoint'");
      if (kw.text != "adjoint") Fail(kw, "expected 'adjoint'");
      adjoint = Expect(Tok::kIdent, "an adjoint name").text;
      if (bracket) Expect(Tok::kRBracket, "']'");
    }
    Expect(Tok::kSemi, "';'");
    try {
      sig_->AddGenerator({name.text, dom, cod, adjoint});
    } catch (const Error& e) {
      throw ParseError(e.code(), name.span, e.what());
    }
  }

  bool IsTensorOp(Tok k) const {
    return k == Tok::kTensor || k == Tok::kStar;
  }

  ObjectExpr ParseObject() {
    ObjectExpr x = ParseObjectFactor();
    while (IsTensorOp(Peek().kind)) {
      Next();
      x = Tensor(x, ParseObjectFactor());
    }
    return x;
  }

  ObjectExpr ParseObjectFactor() {
    if (Accept(Tok::kUnit)) return Unit();
    if (Peek().kind == Tok::kLParen) {
      const Token& open = Next();
      ObjectExpr x = ParseObject();
      Close(open);
      return x;
    }
    const Token& t = Expect(Tok::kIdent, "an object");
    if (t.text == "unit") return Unit();
    if (t.text == "dual") return Dual(ParseObjectFactor());
    if (t.text == "ldual") return LeftDual(ParseObjectFactor());
    for (char ch : t.text) {
      if (ch == '~' || ch == '.' || ch == '-') Fail(t, "invalid object name");
    }
    return ObjectExpr::Generator(t.text);
  }

  bool StartsAtom(std::size_t ahead) const {
    const Token& t = Peek(ahead);
    if (t.kind == Tok::kLParen) return true;
    if (t.kind != Tok::kIdent) return false;
    return !StatementKeywords().count(t.text);
  }

  // In a program, a ';' ends the statement unless an atom follows it.
  Term ParseExpr(bool in_program) {
    Term t = ParseTensor();
    while (Peek().kind == Tok::kSemi) {
      if (in_program && !StartsAtom(1)) break;
      Next();
      Term rhs = ParseTensor();
      t = Term::Compose(rhs, t);
    }
    return t;
  }

  Term ParseTensor() {
    Term t = ParseAtom();
    while (IsTensorOp(Peek().kind)) {
      Next();
      t = Term::Tensor(t, ParseAtom());
    }
    return t;
  }

  template <typename F>
  auto Semantic(const Token& at, F&& f) -> decltype(f()) {
    try {
      return f();
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(e.code(), at.span, e.what());
    }
  }

  Term ParseAtom() {
    if (Peek().kind == Tok::kLParen) {
      const Token& open = Next();
      Term t = ParseExpr(false);
      Close(open);
      return t;
    }
    const Token& head = Expect(Tok::kIdent, "a term");
    if (StatementKeywords().count(head.text)) Fail(head, "expected a term");
    if (Peek().kind != Tok::kLParen) return Term::Gen(head.text);
    const std::string& f = head.text;
    const Token& open = Next();
    Term out;
    if (f == "id" || f == "b" || f == "d" || f == "lb" || f == "ld" ||
        f == "th" || f == "th~") {
      ObjectExpr x = ParseObject();
      if (f == "id") out = Term::Id(x);
      if (f == "b") out = Term::Birth(x);
      if (f == "d") out = Term::Death(x);
      if (f == "lb") out = Term::LBirth(x);
      if (f == "ld") out = Term::LDeath(x);
      if (f == "th") out = Term::Twist(x);
      if (f == "th~") out = Term::TwistInv(x);
    } else if (f == "c" || f == "c~") {
      ObjectExpr u = ParseObject();
      Expect(Tok::kComma, "','");
      ObjectExpr v = ParseObject();
      out = f == "c" ? Term::Braid(u, v) : Term::BraidInv(u, v);
    } else if (f == "dag") {
      out = Term::Dagger(ParseExpr(false));
    } else if (f == "name" || f == "coname") {
      Term arg = ParseExpr(false);
      out = Semantic(head, [&] {
        return f == "name" ? NameOf(arg, *sig_) : ConameOf(arg, *sig_);
      });
    } else if (f == "tr") {
      ObjectExpr v = ParseObject();
      Expect(Tok::kSemi, "';'");
      const Token& style = Expect(Tok::kIdent, "a trace style");
      Expect(Tok::kComma, "','");
      Term arg = ParseExpr(false);
      out = Semantic(head, [&] { return Trace(style, v, arg); });
    } else {
      Fail(head, "unknown constructor");
    }
    Close(open);
    return out;
  }

  Term Trace(const Token& style, const ObjectExpr& v, const Term& t) {
    const std::string& s = style.text;
    for (auto [word, st] :
         {std::pair{"over", TraceStyle::kOver},
          std::pair{"under", TraceStyle::kUnder},
          std::pair{"braided", TraceStyle::kBraided},
          std::pair{"pivotal", TraceStyle::kPivotal}}) {
      if (s != word) continue;
      Boundary ty = Typecheck(t, *sig_);
      if (ty.dom != sig_->Canon(v) || ty.cod != sig_->Canon(v)) {
        throw Error(ErrorCode::kNotEndomorphism,
                    "tr(" + ToString(v) + "; " + s + ", ...) needs a map " +
                        ToString(v) + " → " + ToString(v));
      }
      return QuantumTrace(t, *sig_, st);
    }
    for (auto [word, st] :
         {std::pair{"vanilla", PartialTraceStyle::kVanilla},
          std::pair{"goofyUp", PartialTraceStyle::kGoofyUp},
          std::pair{"goofyDown", PartialTraceStyle::kGoofyDown}}) {
      if (s != word) continue;
      Boundary ty = Typecheck(t, *sig_);
      ObjectExpr cv = sig_->Canon(v);
      auto strip = [&](const ObjectExpr& x) {
        if (x.size() < cv.size() ||
            x.slice(x.size() - cv.size(), x.size()) != cv) {
          throw Error(ErrorCode::kBoundaryMismatch,
                      ToString(x) + " does not end in " + ToString(cv));
        }
        return x.slice(0, x.size() - cv.size());
      };
      return PartialTrace(t, st, strip(ty.dom), strip(ty.cod), cv, *sig_);
    }
    Fail(style, "expected a trace style (over, under, braided, pivotal, "
                "vanilla, goofyUp, goofyDown)");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  Signature* sig_;
};

std::string AtomText(const Atom& a) {
  std::string out = a.name;
  for (DualMark m : a.marks) {
    out = (m == DualMark::kRight ? "dual " : "ldual ") + out;
  }
  return out;
}

// Tensor operands are parenthesized when they are composites; the right
// operand also when it is a tensor, since both operators associate left.
std::string Print(const Term& t) {
  auto list = [](std::initializer_list<ObjectExpr> xs) {
    std::string out;
    for (const ObjectExpr& x : xs) {
      if (!out.empty()) out += ", ";
      out += PrintObject(x);
    }
    return out;
  };
  auto paren = [](const std::string& s) { return "(" + s + ")"; };
  switch (t.kind()) {
    case Kind::kId: return "id(" + list({t.object()}) + ")";
    case Kind::kGen: return t.name();
    case Kind::kBirth: return "b(" + list({t.object()}) + ")";
    case Kind::kDeath: return "d(" + list({t.object()}) + ")";
    case Kind::kLBirth: return "lb(" + list({t.object()}) + ")";
    case Kind::kLDeath: return "ld(" + list({t.object()}) + ")";
    case Kind::kTwist: return "th(" + list({t.object()}) + ")";
    case Kind::kTwistInv: return "th~(" + list({t.object()}) + ")";
    case Kind::kBraid: return "c(" + list({t.object(), t.object2()}) + ")";
    case Kind::kBraidInv:
      return "c~(" + list({t.object(), t.object2()}) + ")";
    case Kind::kDagger: return "dag(" + Print(t.lhs()) + ")";
    case Kind::kCompose: {
      Term first = t.rhs(), second = t.lhs();
      std::string b = Print(second);
      if (second.kind() == Kind::kCompose) b = paren(b);
      return Print(first) + " ; " + b;
    }
    case Kind::kTensor: {
      std::string a = Print(t.lhs());
      std::string b = Print(t.rhs());
      if (t.lhs().kind() == Kind::kCompose) a = paren(a);
      if (t.rhs().kind() == Kind::kCompose || t.rhs().kind() == Kind::kTensor) {
        b = paren(b);
      }
      return a + " * " + b;
    }
  }
  return "?";
}

}  // namespace

ParseError::ParseError(ErrorCode code, SourceSpan span,
                       const std::string& message)
    : Error(code, "line " + std::to_string(span.line) + ", column " +
                      std::to_string(span.column) + ": " + message),
      span_(span) {}

const NamedTerm* Program::Find(const std::string& name) const {
  for (const NamedTerm& t : terms) {
    if (t.name == name) return &t;
  }
  return nullptr;
}

Program ParseProgram(std::string_view source) {
  Signature sig;
  Parser p(Lexer(source).Run(), &sig);
  return p.ParseProgram();
}

Term ParseTerm(std::string_view source, const Signature& sig) {
  Signature copy = sig;
  Parser p(Lexer(source).Run(), &copy);
  return p.ParseSingleExpr();
}

ObjectExpr ParseObject(std::string_view source) {
  Signature sig;
  Parser p(Lexer(source).Run(), &sig);
  return p.ParseSingleObject();
}

std::string PrintObject(const ObjectExpr& x) {
  if (x.is_unit()) return "unit";
  std::string out;
  for (const Atom& a : x.atoms()) {
    if (!out.empty()) out += " ⊗ ";
    out += AtomText(a);
  }
  return out;
}

std::string PrintTerm(const Term& t) { return Print(t); }

std::string PrintProgram(const Program& program) {
  const Signature& sig = program.signature;
  std::string out;
  if (sig.flavor() != Flavor::Monoidal()) {
    out += "flavor " + sig.flavor().ToString() + ";\n";
  }
  for (const std::string& o : sig.objects()) out += "object " + o + ";\n";
  for (const GeneratorDecl& g : sig.generators()) {
    out += "gen " + g.name + " : " + PrintObject(g.dom) + " -> " +
           PrintObject(g.cod);
    if (g.adjoint) out += " adjoint " + *g.adjoint;
    out += ";\n";
  }
  for (const NamedTerm& t : program.terms) {
    out += "term " + t.name + " = " + PrintTerm(t.term) + ";\n";
  }
  return out;
}

}  // namespace strand
