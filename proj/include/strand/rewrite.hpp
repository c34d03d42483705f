// Copyright 2026 The strand Authors
// SPDX-License-Identifier: Apache-2.0

// Axiom-driven rewriting of morphism terms.
//
// Normalization runs in three phases:
//   1. term rules (dagger pushdown, unit and expansion rules) applied at the
//      first redex in pre-order until none is left;
//   2. conversion to the layered form: a right-nested composite whose
//      factors are id_L ⊗ box ⊗ id_R with one atomic box each;
//   3. diagram rules on the layers: interchange sorting (births as late and
//      deaths as early as possible, otherwise left boxes first), inverse
//      pairs, snakes, the ribbon twist fold and naturality slides that move
//      1→1 boxes below crossings and twists.
// Term rules address subterms by child paths (0 = lhs, 1 = rhs); diagram
// rules address layers by index into the layered form.

#ifndef STRAND_REWRITE_HPP_
#define STRAND_REWRITE_HPP_

#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "strand/term.hpp"

namespace strand {

enum class RuleSpace { kTerm, kLayer };

struct Position {
  RuleSpace space = RuleSpace::kTerm;
  // Child path for term rules; {layer index} for diagram rules. An empty
  // path for a diagram rule selects the first matching layer.
  std::vector<int> path;

  bool operator==(const Position&) const = default;
};

std::string ToString(const Position& p);

struct RewriteRule {
  std::string name;
  Flavor guard;
  RuleSpace space = RuleSpace::kTerm;
  // The axiom the rule instantiates.
  std::string citation;
  std::string orientation;
  // Whether Normalize uses the rule; the others are for ApplyRule only.
  bool normalizing = true;
};

const std::vector<RewriteRule>& RuleCatalog();
const RewriteRule* FindRule(const std::string& name);
// Machine-readable catalog: a JSON array of {name, guard, space, citation,
// orientation, normalizing}.
std::string RuleCatalogJson();

struct TraceStep {
  std::string rule;
  Position position;
  std::size_t before = 0;  // Term::hash() of the whole term
  std::size_t after = 0;
};

struct RewriteTrace {
  std::vector<TraceStep> steps;
};

// One rewrite step. Errors: NoMatch, FlavorViolation (guard not satisfied),
// and typing errors for ill-typed input.
Term ApplyRule(const Term& t, const std::string& rule, const Position& pos,
               const Signature& sig);

struct Normalized {
  Term term;
  RewriteTrace trace;
};

// Requires a well-typed term; the result has the same boundary.
Normalized Normalize(const Term& t, const Signature& sig);

// Re-applies the steps of `trace` to `t`. Throws Error(kNoMatch) when a
// step does not apply or the hashes disagree.
Term Replay(const Term& t, const RewriteTrace& trace, const Signature& sig);

enum class RewriteVerdict { kEqual, kUnknown };

// kEqual when the normal forms coincide. Throws Error(kBoundaryMismatch)
// when the boundaries differ.
RewriteVerdict EqualByRewrite(const Term& a, const Term& b,
                              const Signature& sig);

// True when `t` is already in layered form.
bool IsLayered(const Term& t, const Signature& sig);

// Random well-typed terms over the signature's objects, generators and
// licensed constructors.
struct RandomTermOptions {
  int depth = 3;
  int max_word = 2;
};
Term RandomTerm(const Signature& sig, std::mt19937_64& rng,
                const RandomTermOptions& options = {});

// A random term on which `rule` applies at the returned position, or
// nothing when the signature cannot host an instance (for example, no
// generator of the needed shape).
struct RuleInstance {
  Term term;
  Position position;
};
std::optional<RuleInstance> SampleRuleInstance(const RewriteRule& rule,
                                               const Signature& sig,
                                               std::mt19937_64& rng);

}  // namespace strand

#endif  // STRAND_REWRITE_HPP_
