// Copyright 2026 The strand Authors
// SPDX-License-Identifier: Apache-2.0

#include "strand/rewrite.hpp"

#include <json.hpp>

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rewrite/diagram.hpp"
#include "rewrite/rules.hpp"
#include "strand/error.hpp"

namespace strand {

using rewrite::Ctx;
using rewrite::Diagram;
using rewrite::Phase;
using rewrite::RuleImpl;

std::string ToString(const Position& p) {
  std::string out = p.space == RuleSpace::kTerm ? "term[" : "layer[";
  for (std::size_t i = 0; i < p.path.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(p.path[i]);
  }
  return out + "]";
}

const std::vector<RewriteRule>& RuleCatalog() {
  static const std::vector<RewriteRule> catalog = [] {
    std::vector<RewriteRule> out;
    for (const RuleImpl& r : rewrite::Rules()) out.push_back(r.rule);
    return out;
  }();
  return catalog;
}

const RewriteRule* FindRule(const std::string& name) {
  for (const RewriteRule& r : RuleCatalog()) {
    if (r.name == name) return &r;
  }
  return nullptr;
}

std::string RuleCatalogJson() {
  nlohmann::json arr = nlohmann::json::array();
  for (const RewriteRule& r : RuleCatalog()) {
    arr.push_back({{"name", r.name},
                   {"guard", r.guard.ToString()},
                   {"space", r.space == RuleSpace::kTerm ? "term" : "layer"},
                   {"citation", r.citation},
                   {"orientation", r.orientation},
                   {"normalizing", r.normalizing}});
  }
  return arr.dump(2) + "\n";
}

namespace {

Term Child(const Term& t, int index) {
  switch (t.kind()) {
    case Kind::kCompose:
    case Kind::kTensor:
      if (index == 0) return t.lhs();
      if (index == 1) return t.rhs();
      break;
    case Kind::kDagger:
      if (index == 0) return t.lhs();
      break;
    default:
      break;
  }
  throw Error(ErrorCode::kNoMatch, "position leaves the term at child " +
                                       std::to_string(index) + " of " +
                                       DebugString(t));
}

Term Rebuild(const Term& t, int index, const Term& child) {
  switch (t.kind()) {
    case Kind::kCompose:
      return index == 0 ? Term::Compose(child, t.rhs())
                        : Term::Compose(t.lhs(), child);
    case Kind::kTensor:
      return index == 0 ? Term::Tensor(child, t.rhs())
                        : Term::Tensor(t.lhs(), child);
    default:
      return Term::Dagger(child);
  }
}

Term ReplaceAt(const Term& t, const std::vector<int>& path, std::size_t depth,
               const std::function<Term(const Term&)>& f) {
  if (depth == path.size()) return f(t);
  Term c = Child(t, path[depth]);
  return Rebuild(t, path[depth], ReplaceAt(c, path, depth + 1, f));
}

const RuleImpl& Lookup(const std::string& name) {
  const RuleImpl* r = rewrite::FindRuleImpl(name);
  if (!r) throw Error(ErrorCode::kNoMatch, "unknown rule '" + name + "'");
  return *r;
}

void CheckGuard(const RuleImpl& r, const Signature& sig) {
  if (!sig.flavor().Satisfies(r.rule.guard)) {
    throw Error(ErrorCode::kFlavorViolation,
                "rule " + r.rule.name + " needs " + r.rule.guard.ToString() +
                    " but the flavor is " + sig.flavor().ToString());
  }
}

Term ApplyTermRule(const RuleImpl& r, const Term& t, const Position& pos,
                   Ctx& ctx) {
  return ReplaceAt(t, pos.path, 0, [&](const Term& sub) {
    std::optional<Term> out = r.term(sub, ctx);
    if (!out) {
      throw Error(ErrorCode::kNoMatch, "rule " + r.rule.name +
                                           " does not match " +
                                           DebugString(sub));
    }
    return *out;
  });
}

std::optional<Diagram> ApplyLayerRuleAt(const RuleImpl& r, const Diagram& d,
                                        Position& pos, Ctx& ctx) {
  if (pos.path.empty()) {
    for (std::size_t i = 0; i < d.layers.size(); ++i) {
      if (auto out = r.layer(d, i, ctx)) {
        pos.path = {static_cast<int>(i)};
        return out;
      }
    }
    return {};
  }
  if (pos.path.size() != 1 || pos.path[0] < 0) return {};
  return r.layer(d, static_cast<std::size_t>(pos.path[0]), ctx);
}

Term ApplyImpl(const RuleImpl& r, const Term& t, Position pos, Ctx& ctx) {
  CheckGuard(r, ctx.sig);
  if (r.rule.space == RuleSpace::kTerm) {
    if (pos.space != RuleSpace::kTerm) {
      throw Error(ErrorCode::kNoMatch,
                  "rule " + r.rule.name + " takes a term position");
    }
    return ApplyTermRule(r, t, pos, ctx);
  }
  if (pos.space != RuleSpace::kLayer) {
    throw Error(ErrorCode::kNoMatch,
                "rule " + r.rule.name + " takes a layer position");
  }
  Diagram d = rewrite::ToDiagram(t, ctx.typer);
  std::optional<Diagram> out = ApplyLayerRuleAt(r, d, pos, ctx);
  if (!out) {
    throw Error(ErrorCode::kNoMatch, "rule " + r.rule.name +
                                         " does not match at " +
                                         ToString(pos));
  }
  return rewrite::FromDiagram(*out);
}

// First redex of a term-phase rule in pre-order.
bool StepTerm(const Term& t, std::vector<int>& path, Ctx& ctx,
              const std::vector<const RuleImpl*>& rules, Term& out,
              const RuleImpl*& used) {
  for (const RuleImpl* r : rules) {
    if (auto res = r->term(t, ctx)) {
      out = *res;
      used = r;
      return true;
    }
  }
  int arity = 0;
  if (t.kind() == Kind::kCompose || t.kind() == Kind::kTensor) arity = 2;
  if (t.kind() == Kind::kDagger) arity = 1;
  for (int i = 0; i < arity; ++i) {
    path.push_back(i);
    Term sub;
    if (StepTerm(Child(t, i), path, ctx, rules, sub, used)) {
      out = Rebuild(t, i, sub);
      return true;
    }
    path.pop_back();
  }
  return false;
}

constexpr std::size_t kStepLimit = 200000;

}  // namespace

Term ApplyRule(const Term& t, const std::string& rule, const Position& pos,
               const Signature& sig) {
  Ctx ctx(sig);
  ctx.typer.Type(t);
  return ApplyImpl(Lookup(rule), t, pos, ctx);
}

bool IsLayered(const Term& t, const Signature& sig) {
  Ctx ctx(sig);
  return rewrite::FromDiagram(rewrite::ToDiagram(t, ctx.typer)) == t;
}

Normalized Normalize(const Term& t, const Signature& sig) {
  Ctx ctx(sig);
  ctx.typer.Type(t);
  const Flavor& fl = sig.flavor();
  std::vector<const RuleImpl*> term_rules;
  std::vector<const RuleImpl*> layer_rules;
  const RuleImpl* layering = nullptr;
  const RuleImpl* interchange = nullptr;
  for (const RuleImpl& r : rewrite::Rules()) {
    if (!r.rule.normalizing || !fl.Satisfies(r.rule.guard)) continue;
    if (r.phase == Phase::kTerm) term_rules.push_back(&r);
    if (r.phase == Phase::kLayering) layering = &r;
    if (r.phase == Phase::kDiagram) {
      if (r.rule.name == "structure.interchange") {
        interchange = &r;
      } else {
        layer_rules.push_back(&r);
      }
    }
  }

  Normalized result{t, {}};
  auto record = [&](const RuleImpl& r, Position pos, const Term& next) {
    if (result.trace.steps.size() >= kStepLimit) {
      throw std::logic_error("rewriting did not terminate on " +
                             DebugString(t));
    }
    result.trace.steps.push_back(
        TraceStep{r.rule.name, std::move(pos), result.term.hash(),
                  next.hash()});
    result.term = next;
  };

  // Term phase.
  while (true) {
    std::vector<int> path;
    Term next;
    const RuleImpl* used = nullptr;
    if (!StepTerm(result.term, path, ctx, term_rules, next, used)) break;
    record(*used, Position{RuleSpace::kTerm, path}, next);
  }

  // Layering.
  if (auto layered = layering->term(result.term, ctx)) {
    record(*layering, Position{RuleSpace::kTerm, {}}, *layered);
  }

  // Diagram phase.
  Diagram d = rewrite::ToDiagram(result.term, ctx.typer);
  while (true) {
    bool changed = false;
    for (std::size_t i = 0; i + 1 < d.layers.size() && !changed; ++i) {
      if (!rewrite::ShouldSwap(d, i)) continue;
      d = *interchange->layer(d, i, ctx);
      record(*interchange,
             Position{RuleSpace::kLayer, {static_cast<int>(i)}},
             rewrite::FromDiagram(d));
      changed = true;
    }
    if (changed) continue;
    for (const RuleImpl* r : layer_rules) {
      for (std::size_t i = 0; i < d.layers.size() && !changed; ++i) {
        if (auto out = r->layer(d, i, ctx)) {
          d = *out;
          record(*r, Position{RuleSpace::kLayer, {static_cast<int>(i)}},
                 rewrite::FromDiagram(d));
          changed = true;
        }
      }
      if (changed) break;
    }
    if (!changed) break;
  }
  return result;
}

Term Replay(const Term& t, const RewriteTrace& trace, const Signature& sig) {
  Ctx ctx(sig);
  ctx.typer.Type(t);
  Term cur = t;
  for (const TraceStep& step : trace.steps) {
    if (cur.hash() != step.before) {
      throw Error(ErrorCode::kNoMatch,
                  "trace step " + step.rule + " expects a different term");
    }
    cur = ApplyImpl(Lookup(step.rule), cur, step.position, ctx);
    if (cur.hash() != step.after) {
      throw Error(ErrorCode::kNoMatch,
                  "trace step " + step.rule + " produced a different term");
    }
  }
  return cur;
}

RewriteVerdict EqualByRewrite(const Term& a, const Term& b,
                              const Signature& sig) {
  Boundary ba = Typecheck(a, sig);
  Boundary bb = Typecheck(b, sig);
  if (!(ba == bb)) {
    throw Error(ErrorCode::kBoundaryMismatch,
                ToString(ba.dom) + " → " + ToString(ba.cod) + " vs " +
                    ToString(bb.dom) + " → " + ToString(bb.cod));
  }
  return Normalize(a, sig).term == Normalize(b, sig).term
             ? RewriteVerdict::kEqual
             : RewriteVerdict::kUnknown;
}

std::optional<RuleInstance> SampleRuleInstance(const RewriteRule& rule,
                                               const Signature& sig,
                                               std::mt19937_64& rng) {
  const RuleImpl& r = Lookup(rule.name);
  if (!sig.flavor().Satisfies(r.rule.guard)) return {};
  return r.sample(sig, rng);
}

}  // namespace strand
